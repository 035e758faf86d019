#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace flagdom {

using Rational = boost::multiprecision::cpp_rational;

// Element of Q(i).
struct ExactScalar {
    Rational re{0}, im{0};

    ExactScalar() = default;
    ExactScalar(long long r) : re(r) {}
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    ExactScalar conj() const { return {re, -im}; }
    ExactScalar inv() const;

    friend ExactScalar operator+(const ExactScalar &a, const ExactScalar &b) { return {a.re + b.re, a.im + b.im}; }
    friend ExactScalar operator-(const ExactScalar &a, const ExactScalar &b) { return {a.re - b.re, a.im - b.im}; }
    friend ExactScalar operator-(const ExactScalar &a) { return {-a.re, -a.im}; }
    friend ExactScalar operator*(const ExactScalar &a, const ExactScalar &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ExactScalar operator/(const ExactScalar &a, const ExactScalar &b) { return a * b.inv(); }
    ExactScalar &operator+=(const ExactScalar &b) { re += b.re; im += b.im; return *this; }
    ExactScalar &operator-=(const ExactScalar &b) { re -= b.re; im -= b.im; return *this; }
    bool operator==(const ExactScalar &b) const { return re == b.re && im == b.im; }
    bool operator!=(const ExactScalar &b) const { return !(*this == b); }

    std::string str() const;
};

inline const ExactScalar kI{Rational(0), Rational(1)};

using ExactVector = std::vector<ExactScalar>;

// Coordinates are 1-based in the helper: unit(m, k) is e_k.
ExactVector unit(int m, int k);
ExactVector axpy(const ExactVector &x, const ExactScalar &a, const ExactVector &y); // x + a*y
std::string vector_str(const ExactVector &v);

using ExactMatrix = std::vector<ExactVector>; // row major

// Gaussian elimination, first nonzero pivot in each column.
int rank(ExactMatrix rows);
// Rank of the rows restricted to columns [c0, c1).
int rank_columns(const ExactMatrix &rows, int c0, int c1);
// Solve sum_k c_k basis[k] = v.  Throws if basis is singular.
ExactVector coordinates(const ExactMatrix &basis, const ExactVector &v);

} // namespace flagdom
