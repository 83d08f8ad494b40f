#include "cp2/seifert.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cp2/errors.hpp"

namespace cp2 {

namespace {

using i64 = long long;
using i128 = __int128;

i64 to_i64(i128 v, const char* op) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw ResourceError(std::string("integer overflow in ") + op);
    return static_cast<i64>(v);
}

} // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<long long>> entries)
    : rows_(std::move(entries)) {
    for (const auto& r : rows_)
        if (r.size() != rows_.size())
            throw ContractError("matrix is not square");
}

bool SeifertMatrix::is_symmetric() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            if (rows_[i][j] != rows_[j][i])
                return false;
    return true;
}

SeifertMatrix SeifertMatrix::transpose() const {
    int n = dim();
    std::vector<std::vector<i64>> t(n, std::vector<i64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[j][i] = rows_[i][j];
    return SeifertMatrix(std::move(t));
}

SeifertMatrix SeifertMatrix::parse(const std::string& text) {
    std::istringstream is(text);
    long long n;
    if (!(is >> n) || n < 0)
        throw ParseError("matrix file: expected nonnegative dimension on first line");
    std::vector<std::vector<i64>> rows(n, std::vector<i64>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (!(is >> rows[i][j]))
                throw ParseError("matrix file: missing integer at row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(j + 1));
    i64 extra;
    if (is >> extra)
        throw ParseError("matrix file: trailing data after " + std::to_string(n) + " rows");
    return SeifertMatrix(std::move(rows));
}

std::string SeifertMatrix::str() const {
    std::ostringstream os;
    os << dim() << "\n";
    for (const auto& r : rows_) {
        for (std::size_t j = 0; j < r.size(); ++j)
            os << (j ? " " : "") << r[j];
        os << "\n";
    }
    return os.str();
}

SeifertMatrix symmetrize(const SeifertMatrix& a) {
    int n = a.dim();
    std::vector<std::vector<i64>> s(n, std::vector<i64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s[i][j] = a.at(i, j) + a.at(j, i);
    return SeifertMatrix(std::move(s));
}

namespace {

// Exact rational with overflow-checked, gcd-normalized arithmetic.
struct Rat {
    i64 num = 0, den = 1;
    int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
};

Rat make_rat(i128 n, i128 d) {
    if (d == 0)
        throw ContractError("rational division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0)
        a = 1;
    Rat r;
    r.num = to_i64(n / a, "rational");
    r.den = to_i64(d / a, "rational");
    return r;
}

Rat add_rat(const Rat& a, const Rat& b) {
    return make_rat(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
}

Rat neg_rat(const Rat& a) {
    return Rat{-a.num, a.den};
}

// a - b*c/p
Rat sub_mul_div(const Rat& a, const Rat& b, const Rat& c, const Rat& p) {
    i128 num = i128(a.num) * b.den * c.den * p.num -
               i128(b.num) * c.num * p.den * a.den;
    i128 den = i128(a.den) * b.den * c.den * p.num;
    return make_rat(num, den);
}

} // namespace

int signature(const SeifertMatrix& s) {
    if (!s.is_symmetric())
        throw ContractError("signature requires a symmetric matrix");
    int n = s.dim();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = Rat{s.at(i, j), 1};
    int sig = 0;
    for (int k = 0; k < n; ++k) {
        if (m[k][k].sign() == 0) {
            int j = -1;
            for (int l = k + 1; l < n; ++l)
                if (m[k][l].sign() != 0) {
                    j = l;
                    break;
                }
            if (j < 0)
                continue; // zero row: contributes 0
            // Hyperbolic-pair pivot: adding (or subtracting) row and column j
            // makes the diagonal entry 2 m[k][j] + m[j][j], or its
            // subtraction twin, one of which is nonzero.
            Rat twice = add_rat(add_rat(m[k][j], m[k][j]), m[j][j]);
            bool plus = twice.sign() != 0;
            auto axpy = [&](Rat& dst, const Rat& src) {
                dst = add_rat(dst, plus ? src : neg_rat(src));
            };
            for (int c = k; c < n; ++c)
                axpy(m[k][c], m[j][c]);
            for (int r = k; r < n; ++r)
                axpy(m[r][k], m[r][j]);
        }
        Rat p = m[k][k];
        sig += p.sign();
        // Schur complement: symmetric congruence splitting off the pivot.
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                m[r][c] = sub_mul_div(m[r][c], m[r][k], m[k][c], p);
        for (int r = k + 1; r < n; ++r)
            m[r][k] = m[k][r] = Rat(0);
    }
    return sig;
}

bool is_negative_definite(const SeifertMatrix& s) {
    if (!s.is_symmetric())
        throw ContractError("definiteness check requires a symmetric matrix");
    int n = s.dim();
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<i64>> minor(k, std::vector<i64>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                minor[i][j] = s.at(i, j);
        i64 d = det(SeifertMatrix(std::move(minor)));
        if ((k % 2 == 0 && d <= 0) || (k % 2 == 1 && d >= 0))
            return false;
    }
    return true;
}

long long det(const SeifertMatrix& a) {
    int n = a.dim();
    if (n == 0)
        return 1;
    auto m = a.rows();
    i64 sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                i128 v = i128(m[k][k]) * m[r][c] - i128(m[r][k]) * m[k][c];
                m[r][c] = to_i64(v / prev, "det");
            }
            m[r][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

long long determinant(const SeifertMatrix& a) {
    return std::llabs(det(symmetrize(a)));
}

namespace {

// Dense integer polynomial helpers for the Bareiss pencil determinant.
using Poly = std::vector<i64>; // coefficient of t^i at index i

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = to_i64(i128(r[i + j]) + i128(a[i]) * b[j], "alexander");
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

Poly psub(Poly a, const Poly& b) {
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

// Exact division; quotient is known to lie in Z[t] by Sylvester's identity.
Poly pdiv(Poly num, const Poly& den) {
    if (den.empty())
        throw ContractError("polynomial division by zero");
    if (num.empty())
        return {};
    Poly q(num.size() - den.size() + 1, 0);
    for (int i = static_cast<int>(num.size()) - 1;
         i >= static_cast<int>(den.size()) - 1; --i) {
        i64 lead = num[i];
        if (lead == 0)
            continue;
        if (lead % den.back() != 0)
            throw ResourceError("inexact polynomial division in alexander");
        i64 f = lead / den.back();
        int off = i - static_cast<int>(den.size()) + 1;
        q[off] = f;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[off + j] -= f * den[j];
    }
    for (i64 c : num)
        if (c != 0)
            throw ResourceError("inexact polynomial division in alexander");
    return q;
}

} // namespace

Laurent alexander(const SeifertMatrix& a) {
    int n = a.dim();
    if (n == 0)
        return Laurent(1);
    // Bareiss over Z[t] on the pencil A - t A^T.
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly p = {a.at(i, j), -a.at(j, i)};
            while (!p.empty() && p.back() == 0)
                p.pop_back();
            m[i][j] = std::move(p);
        }
    int sign = 1;
    Poly prev = {1};
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].empty()) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].empty()) {
                    p = r;
                    break;
                }
            if (p < 0)
                return Laurent(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                m[r][c] = pdiv(psub(pmul(m[k][k], m[r][c]), pmul(m[r][k], m[k][c])), prev);
            m[r][k].clear();
        }
        prev = m[k][k];
    }
    Poly p = m[n - 1][n - 1];
    if (sign < 0)
        for (i64& c : p)
            c = -c;
    Laurent raw(0);
    for (std::size_t i = 0; i < p.size(); ++i)
        raw += Laurent::monomial(p[i], static_cast<int>(i));
    if (raw.is_zero())
        return raw;
    // Center: strip t^m, then shift so the exponent range is symmetric.
    int lo = raw.min_exp(), hi = raw.max_exp();
    if ((hi - lo) % 2 != 0)
        throw ResourceError("alexander: odd exponent span cannot be centered");
    Laurent centered = raw.shifted(-(lo + hi) / 2);
    i64 at1 = centered.eval_pm1(1);
    if (at1 < 0 || (at1 == 0 && centered.coef(centered.max_exp()) < 0))
        centered = -centered;
    return centered;
}

int arf_from_determinant(long long d) {
    if (d <= 0 || d % 2 == 0)
        throw ContractError("arf_from_determinant requires an odd positive integer");
    long long r = d % 8;
    if (r == 1 || r == 7)
        return 0;
    return 1;
}

SeifertMatrix kn_seifert_matrix(long long n) {
    if (n < 1)
        throw ContractError("kn_seifert_matrix requires n >= 1");
    return SeifertMatrix({{-1 - n, -1 - n, 0, 0},
                          {-n, -1 - n, 0, 0},
                          {0, 0, -1, 0},
                          {0, 0, -1, -1}});
}

} // namespace cp2
