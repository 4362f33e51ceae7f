#include "wp3/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace wp3 {

CyclotomicProduct::CyclotomicProduct(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
    for (auto w : factors_)
        if (w < 1) throw error("cyclotomic factor must be >= 1");
    std::sort(factors_.begin(), factors_.end());
}

void CyclotomicProduct::push(std::int64_t w) {
    if (w < 1) throw error("cyclotomic factor must be >= 1");
    factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), w), w);
}

void CyclotomicProduct::remove_one(std::int64_t w) {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), w);
    if (it == factors_.end() || *it != w) throw error("no denominator factor to cancel");
    factors_.erase(it);
}

bool CyclotomicProduct::contains(std::int64_t w) const {
    return std::binary_search(factors_.begin(), factors_.end(), w);
}

LaurentPoly CyclotomicProduct::to_poly() const {
    LaurentPoly p(Rat(1));
    for (auto w : factors_) p = p * LaurentPoly::one_minus_t(w);
    return p;
}

std::string CyclotomicProduct::str(const std::string& var) const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        os << "(1 - " << var;
        if (factors_[i] != 1) os << "^" << factors_[i];
        os << ")";
    }
    return os.str();
}

std::string HilbertSeries::str(const std::string& var) const {
    return "(" + numerator.str(var) + ") / " + denominator.str(var);
}

namespace {

// Shared driver: dense numerator, then each 1/(1 - t^w) factor becomes a
// running prefix sum with stride w. Cost O(order * #factors).
template <class T, class AddCheck>
bool expand_impl(const HilbertSeries& s, std::int64_t order, std::vector<T>& c,
                 AddCheck add) {
    if (order < 0) throw error("negative expansion order");
    if (!s.numerator.is_zero() && s.numerator.min_exp() < 0)
        throw error("not a power series");
    c.assign(static_cast<std::size_t>(order) + 1, T(0));
    for (const auto& [e, k] : s.numerator.terms()) {
        if (e > order) break;
        c[static_cast<std::size_t>(e)] = T(k);
    }
    for (auto w : s.denominator.factors())
        for (std::int64_t n = w; n <= order; ++n)
            if (!add(c[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(n - w)]))
                return false;
    return true;
}

}  // namespace

std::vector<Rat> expand(const HilbertSeries& s, std::int64_t order) {
    std::vector<Rat> c;
    expand_impl(s, order, c, [](Rat& a, const Rat& b) {
        a += b;
        return true;
    });
    return c;
}

std::vector<Int> expand_int(const HilbertSeries& s, std::int64_t order) {
    if (!s.numerator.integral()) throw error("expand_int needs an integral numerator");
    std::vector<long long> fast;
    if (expand_i64(s, order, fast)) {
        std::vector<Int> c(fast.size());
        for (std::size_t i = 0; i < fast.size(); ++i) c[i] = fast[i];
        return c;
    }
    std::vector<Int> c;
    expand_impl(s, order, c, [](Int& a, const Int& b) {
        a += b;
        return true;
    });
    return c;
}

bool expand_i64(const HilbertSeries& s, std::int64_t order, std::vector<long long>& out) {
    if (!s.numerator.integral()) return false;
    for (const auto& [e, k] : s.numerator.terms()) {
        (void)e;
        if (numerator(k) > std::numeric_limits<long long>::max() ||
            numerator(k) < std::numeric_limits<long long>::min())
            return false;
    }
    std::vector<long long> c;
    const bool ok = [&] {
        if (order < 0) throw error("negative expansion order");
        if (!s.numerator.is_zero() && s.numerator.min_exp() < 0)
            throw error("not a power series");
        c.assign(static_cast<std::size_t>(order) + 1, 0);
        for (const auto& [e, k] : s.numerator.terms()) {
            if (e > order) break;
            c[static_cast<std::size_t>(e)] = to_ll(numerator(k));
        }
        for (auto w : s.denominator.factors())
            for (std::int64_t n = w; n <= order; ++n)
                if (__builtin_add_overflow(c[static_cast<std::size_t>(n)],
                                           c[static_cast<std::size_t>(n - w)],
                                           &c[static_cast<std::size_t>(n)]))
                    return false;
        return true;
    }();
    if (ok) out = std::move(c);
    return ok;
}

int pole_order_at_one(const HilbertSeries& s) {
    if (s.numerator.is_zero()) return 0;
    auto [core, mult] = s.numerator.strip_one_minus_t();
    (void)core;
    return static_cast<int>(s.denominator.size()) - mult;
}

Rat residue_at_one(const HilbertSeries& s, int k) {
    if (k < 1) throw error("pole order must be positive");
    if (s.numerator.is_zero()) throw error("pole order mismatch");
    auto [core, mult] = s.numerator.strip_one_minus_t();
    const int pole = static_cast<int>(s.denominator.size()) - mult;
    if (pole != k) throw error("pole order mismatch");
    // (1-t^w) = (1-t)(1+t+...+t^{w-1}); the residual factor is w at t = 1.
    Rat den = 1;
    for (auto w : s.denominator.factors()) den *= w;
    return core.eval_one() / den;
}

HilbertSeries times_one_minus_t(const HilbertSeries& s, std::int64_t d) {
    HilbertSeries r = s;
    if (r.denominator.contains(d))
        r.denominator.remove_one(d);
    else
        r.numerator = r.numerator * LaurentPoly::one_minus_t(d);
    return r;
}

HilbertSeries over_one_minus_t(const HilbertSeries& s, std::int64_t d) {
    HilbertSeries r = s;
    r.denominator.push(d);
    return r;
}

}  // namespace wp3
