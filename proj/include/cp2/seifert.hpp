#pragma once

// Exact integer linear algebra on Seifert matrices: signature, Alexander
// polynomial, determinant, Arf invariant, and the twist-family matrices.

#include <string>
#include <vector>

#include "cp2/laurent.hpp"

namespace cp2 {

class SeifertMatrix {
  public:
    SeifertMatrix() = default;
    explicit SeifertMatrix(std::vector<std::vector<long long>> entries);

    int dim() const { return static_cast<int>(rows_.size()); }
    long long at(int i, int j) const { return rows_[i][j]; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

    bool is_symmetric() const;
    SeifertMatrix transpose() const;
    bool operator==(const SeifertMatrix&) const = default;

    // Text format: first line n, then n lines of n space-separated integers.
    static SeifertMatrix parse(const std::string& text);
    std::string str() const;

  private:
    std::vector<std::vector<long long>> rows_;
};

// A + A^T.
SeifertMatrix symmetrize(const SeifertMatrix& a);

// Signature of a symmetric integer matrix via exact congruence
// diagonalization (fraction-free, gcd-reduced). Zero rows contribute 0.
int signature(const SeifertMatrix& s);

// Sylvester criterion: all leading principal minors d_k satisfy
// (-1)^k d_k > 0. Only certifies definiteness; the general signature
// goes through `signature`.
bool is_negative_definite(const SeifertMatrix& s);

// Exact determinant (Bareiss).
long long det(const SeifertMatrix& a);

// |det(A + A^T)|.
long long determinant(const SeifertMatrix& a);

// Symmetric normalized Alexander polynomial det(A - t A^T), centered so
// that p(t) = p(1/t) and sign-normalized so p(1) > 0 when p(1) != 0.
Laurent alexander(const SeifertMatrix& a);

// Murasugi congruence: 0 if det = +-1 (mod 8), 1 if det = +-3 (mod 8).
// Contract: det odd and positive.
int arf_from_determinant(long long d);

// The 4x4 twist-family matrix A_n, n >= 1; A_1 belongs to the n = 1 knot.
SeifertMatrix kn_seifert_matrix(long long n);

} // namespace cp2
