#include "cp2/laurent.hpp"

#include <sstream>

#include "cp2/errors.hpp"

namespace cp2 {

Laurent::Laurent(Coef c, std::string var) : var_(std::move(var)) {
    if (c != 0)
        terms_[0] = c;
}

Laurent Laurent::monomial(Coef c, int exp, std::string var) {
    Laurent p(0, std::move(var));
    if (c != 0)
        p.terms_[exp] = c;
    return p;
}

int Laurent::min_exp() const {
    if (terms_.empty())
        throw ContractError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int Laurent::max_exp() const {
    if (terms_.empty())
        throw ContractError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Laurent::Coef Laurent::coef(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void Laurent::add_term(int exp, Coef c) {
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Laurent::check_var(const Laurent& q) const {
    // Constants carry no variable information.
    if (terms_.empty() || q.terms_.empty())
        return;
    bool self_const = terms_.size() == 1 && terms_.begin()->first == 0;
    bool q_const = q.terms_.size() == 1 && q.terms_.begin()->first == 0;
    if (!self_const && !q_const && var_ != q.var_)
        throw ContractError("mixed polynomial variables: " + var_ + " vs " + q.var_);
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& q) {
    check_var(q);
    bool self_const = terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    bool q_const = q.terms_.empty() || (q.terms_.size() == 1 && q.terms_.begin()->first == 0);
    if (self_const && !q_const)
        var_ = q.var_;
    for (const auto& [e, c] : q.terms_)
        add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& q) {
    check_var(q);
    bool self_const = terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    bool q_const = q.terms_.empty() || (q.terms_.size() == 1 && q.terms_.begin()->first == 0);
    if (self_const && !q_const)
        var_ = q.var_;
    for (const auto& [e, c] : q.terms_)
        add_term(e, -c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& q) const {
    Laurent r = *this;
    r += q;
    return r;
}

Laurent Laurent::operator-(const Laurent& q) const {
    Laurent r = *this;
    r -= q;
    return r;
}

Laurent Laurent::operator*(const Laurent& q) const {
    check_var(q);
    bool self_const = terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    Laurent r(0, self_const ? q.var_ : var_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : q.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

bool Laurent::operator==(const Laurent& q) const {
    if (terms_ != q.terms_)
        return false;
    bool self_const = terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    return self_const || var_ == q.var_;
}

Laurent Laurent::shifted(int k) const {
    Laurent r(0, var_);
    for (const auto& [e, c] : terms_)
        r.terms_[e + k] = c;
    return r;
}

Laurent Laurent::inverted() const {
    Laurent r(0, var_);
    for (const auto& [e, c] : terms_)
        r.terms_[-e] = c;
    return r;
}

Laurent::Coef Laurent::eval_pm1(int sign) const {
    if (sign != 1 && sign != -1)
        throw ContractError("eval_pm1 expects +1 or -1");
    Coef s = 0;
    for (const auto& [e, c] : terms_)
        s += (sign == 1 || e % 2 == 0) ? c : -c;
    return s;
}

Laurent Laurent::with_var(std::string var) const {
    Laurent r = *this;
    r.var_ = std::move(var);
    return r;
}

std::string Laurent::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coef a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1)
                os << a;
            os << var_;
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

} // namespace cp2
