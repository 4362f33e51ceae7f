#include "wp3/laurent.hpp"

#include <sstream>

namespace wp3 {

LaurentPoly LaurentPoly::one_minus_t(Exp d) {
    LaurentPoly p;
    p.add_term(0, 1);
    p.add_term(d, -1);
    return p;
}

LaurentPoly::Exp LaurentPoly::min_exp() const {
    if (terms_.empty()) throw error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exp LaurentPoly::max_exp() const {
    if (terms_.empty()) throw error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(Exp d) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw error("division by zero polynomial");
    if (is_zero()) return {};
    // Long division from the top exponent down.
    LaurentPoly rem = *this, quot;
    const Exp dtop = divisor.max_exp();
    const Rat dlead = divisor.terms_.rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= dtop - divisor.min_exp()) {
        const Exp e = rem.max_exp() - dtop;
        const Rat c = rem.terms_.rbegin()->second / dlead;
        quot.add_term(e, c);
        for (const auto& [de, dc] : divisor.terms_) rem.add_term(de + e, -dc * c);
    }
    if (!rem.is_zero()) throw error("inexact division");
    return quot;
}

std::pair<LaurentPoly, int> LaurentPoly::strip_one_minus_t() const {
    LaurentPoly cur = *this;
    int mult = 0;
    const LaurentPoly f = one_minus_t(1);
    while (!cur.is_zero() && cur.eval_one() == 0) {
        cur = cur.divided_by(f);
        ++mult;
    }
    return {cur, mult};
}

Rat LaurentPoly::eval_one() const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::reversed(Exp d) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[d - e] = c;
    return r;
}

bool LaurentPoly::integral() const {
    for (const auto& [e, c] : terms_)
        if (denominator(c) != 1) return false;
    return true;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit = (a == 1);
        if (!unit || e == 0) os << rat_str(a);
        if (e != 0) {
            if (!unit) os << " ";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace wp3
