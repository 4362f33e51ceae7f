// Sparse Laurent polynomials over exact rationals: the numerators of all
// Hilbert series in the library, including intermediate sums with negative
// exponents. Exponent -> coefficient map, no stored zeros.
#pragma once

#include "wp3/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace wp3 {

class LaurentPoly {
  public:
    using Exp = std::int64_t;
    using Terms = std::map<Exp, Rat>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) terms_[0] = c;
    }

    static LaurentPoly monomial(const Rat& c, Exp e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }
    // 1 - t^d
    static LaurentPoly one_minus_t(Exp d);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Exp min_exp() const;  // throws on zero polynomial
    Exp max_exp() const;
    Rat coeff(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(Exp e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    LaurentPoly shifted(Exp d) const;  // multiply by t^d
    LaurentPoly scaled(const Rat& c) const;

    // Exact division; throws error("inexact division") on nonzero remainder.
    LaurentPoly divided_by(const LaurentPoly& divisor) const;

    // Quotient and (1-t)-multiplicity: p = (1-t)^m * q with q(1) != 0.
    // Second member of the pair is m; on the zero polynomial returns {0, 0}.
    std::pair<LaurentPoly, int> strip_one_minus_t() const;

    Rat eval_one() const;  // value at t = 1

    // t^d * p(1/t); with d = max+min exponent this reverses the polynomial.
    LaurentPoly reversed(Exp d) const;

    bool integral() const;  // all coefficients integers

    // "1 - 9t^2 + 16t^3 - 9t^4 + t^6"
    std::string str(const std::string& var = "t") const;

  private:
    Terms terms_;
};

}  // namespace wp3
