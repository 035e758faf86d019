#include "flagdom/exact.hpp"

#include <stdexcept>

namespace flagdom {

ExactScalar ExactScalar::inv() const {
    Rational d = re * re + im * im;
    if (d == 0) throw std::domain_error("division by zero in Q(i)");
    return {re / d, -im / d};
}

std::string ExactScalar::str() const {
    if (im == 0) return re.str();
    std::string s;
    if (re != 0) s = re.str();
    if (im > 0 && re != 0) s += '+';
    if (im == 1) s += "i";
    else if (im == -1) s += "-i";
    else s += im.str() + "i";
    return s;
}

ExactVector unit(int m, int k) {
    ExactVector v(m);
    v.at(k - 1) = ExactScalar(1);
    return v;
}

ExactVector axpy(const ExactVector &x, const ExactScalar &a, const ExactVector &y) {
    ExactVector r = x;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!y[i].is_zero()) r[i] += a * y[i];
    return r;
}

std::string vector_str(const ExactVector &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].str();
        std::string term;
        if (c == "1") term = "e" + std::to_string(i + 1);
        else if (c == "-1") term = "-e" + std::to_string(i + 1);
        else if (v[i].is_real() || v[i].re == 0) term = c + "e" + std::to_string(i + 1);
        else term = "(" + c + ")e" + std::to_string(i + 1);
        if (!s.empty() && term[0] != '-') s += '+';
        s += term;
    }
    return s.empty() ? "0" : s;
}

namespace {

int eliminate(ExactMatrix &a, int c0, int c1) {
    int r = 0;
    const int rows = static_cast<int>(a.size());
    for (int c = c0; c < c1 && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        ExactScalar piv_inv = a[r][c].inv();
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            ExactScalar f = a[i][c] * piv_inv;
            for (int k = c; k < c1; ++k)
                if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

} // namespace

int rank(ExactMatrix rows) {
    if (rows.empty()) return 0;
    return eliminate(rows, 0, static_cast<int>(rows[0].size()));
}

int rank_columns(const ExactMatrix &rows, int c0, int c1) {
    if (rows.empty() || c0 >= c1) return 0;
    ExactMatrix a = rows;
    return eliminate(a, c0, c1);
}

ExactVector coordinates(const ExactMatrix &basis, const ExactVector &v) {
    const int m = static_cast<int>(basis.size());
    // augmented system: column k holds basis[k]
    ExactMatrix a(m, ExactVector(m + 1));
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) a[i][k] = basis[k][i];
        a[i][m] = v[i];
    }
    for (int c = 0; c < m; ++c) {
        int p = c;
        while (p < m && a[p][c].is_zero()) ++p;
        if (p == m) throw std::domain_error("coordinates: singular basis");
        std::swap(a[c], a[p]);
        ExactScalar inv = a[c][c].inv();
        for (int k = c; k <= m; ++k) a[c][k] = a[c][k] * inv;
        for (int i = 0; i < m; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            ExactScalar f = a[i][c];
            for (int k = c; k <= m; ++k)
                if (!a[c][k].is_zero()) a[i][k] -= f * a[c][k];
        }
    }
    ExactVector x(m);
    for (int i = 0; i < m; ++i) x[i] = a[i][m];
    return x;
}

} // namespace flagdom
