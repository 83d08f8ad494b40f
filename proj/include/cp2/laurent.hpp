#pragma once

// Exact integer Laurent polynomials in one formal variable.

#include <map>
#include <string>

namespace cp2 {

class Laurent {
  public:
    using Coef = long long;

    Laurent() = default;
    explicit Laurent(Coef c, std::string var = "t");
    static Laurent monomial(Coef c, int exp, std::string var = "t");

    bool is_zero() const { return terms_.empty(); }
    const std::string& var() const { return var_; }

    // Extreme exponents; contract: polynomial is nonzero.
    int min_exp() const;
    int max_exp() const;

    Coef coef(int exp) const;
    const std::map<int, Coef>& terms() const { return terms_; }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& q);
    Laurent& operator-=(const Laurent& q);
    Laurent operator+(const Laurent& q) const;
    Laurent operator-(const Laurent& q) const;
    Laurent operator*(const Laurent& q) const;
    bool operator==(const Laurent& q) const;

    // Multiply by t^k.
    Laurent shifted(int k) const;
    // Substitute t -> 1/t.
    Laurent inverted() const;
    // Exact evaluation at t = 1 or t = -1.
    Coef eval_pm1(int sign) const;

    // Re-tag the variable (exponents and coefficients unchanged).
    Laurent with_var(std::string var) const;

    // Canonical rendering, ascending exponent order: "t^-1 - 1 + 2t".
    std::string str() const;

  private:
    void add_term(int exp, Coef c);
    void check_var(const Laurent& q) const;

    std::map<int, Coef> terms_; // exponent -> nonzero coefficient
    std::string var_ = "t";
};

} // namespace cp2
