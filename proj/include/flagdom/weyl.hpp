#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagdom {

// FullSign: S_n x| Z_2^n (types B_n, C_n).  EvenSign: S_n x| Z_2^{n-1} (D_n).
enum class Family { FullSign, EvenSign };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SignedPerm {
    std::vector<int> e;
    Family fam = Family::FullSign;

    int n() const { return static_cast<int>(e.size()); }
    int operator[](int i) const { return e[i]; }
    bool operator==(const SignedPerm &o) const { return e == o.e && fam == o.fam; }
    bool operator<(const SignedPerm &o) const;

    int negatives() const;
    std::string str() const;
};

// Throws ParseError on bad moduli, wrong length or odd parity under EvenSign.
SignedPerm parse_perm(const std::string &text, int n, Family fam);
// Same, but n is taken from the number of entries.
SignedPerm parse_perm(const std::string &text, Family fam);
void validate(const SignedPerm &w);

SignedPerm identity(int n, Family fam);
SignedPerm compose(const SignedPerm &u, const SignedPerm &w);
SignedPerm inverse(const SignedPerm &w);
std::vector<SignedPerm> simple_generators(int n, Family fam);

constexpr int kEnumerateCap = 7;
// Canonical order: |entries| lexicographically, then sign pattern with '+' < '-'
// read left to right.
std::vector<SignedPerm> enumerate_group(int n, Family fam, int cap = kEnumerateCap);
std::uint64_t group_order(int n, Family fam);

// BFS distances for a whole group, built once per (n, family) and then shared.
class LengthTable {
public:
    static const LengthTable &get(int n, Family fam);
    int length(const SignedPerm &w) const;
    std::size_t size() const { return dist_.size(); }

private:
    LengthTable(int n, Family fam);
    std::map<std::vector<int>, int> dist_;
    int n_;
    Family fam_;
};

constexpr int kBfsCap = 6;
int length_bfs(const SignedPerm &w);

// w-tilde: positives left to right, then |negatives| from the last one back.
std::vector<int> w_tilde(const SignedPerm &w);
int length_paper_C(const SignedPerm &w);
int length_paper_D(const SignedPerm &w);
// Dispatches on the family.
int length_paper(const SignedPerm &w);

} // namespace flagdom
