// Hilbert series as exact rational functions: Laurent numerator over a
// product of (1 - t^w) factors. Power-series expansion and pole extraction
// at t = 1 are exact; the expansion never leaves integer/rational arithmetic.
#pragma once

#include "wp3/laurent.hpp"
#include "wp3/rational.hpp"

#include <cstdint>
#include <vector>

namespace wp3 {

// Multiset of positive integers w representing prod (1 - t^w).
class CyclotomicProduct {
  public:
    CyclotomicProduct() = default;
    explicit CyclotomicProduct(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    void push(std::int64_t w);
    // Removes one factor equal to w; throws if absent.
    void remove_one(std::int64_t w);
    bool contains(std::int64_t w) const;

    LaurentPoly to_poly() const;
    std::string str(const std::string& var = "t") const;

    bool operator==(const CyclotomicProduct&) const = default;

  private:
    std::vector<std::int64_t> factors_;  // kept sorted ascending
};

struct HilbertSeries {
    LaurentPoly numerator;
    CyclotomicProduct denominator;

    HilbertSeries() = default;
    HilbertSeries(LaurentPoly num, CyclotomicProduct den)
        : numerator(std::move(num)), denominator(std::move(den)) {}

    bool operator==(const HilbertSeries&) const = default;

    std::string str(const std::string& var = "t") const;
};

// Exact power-series coefficients c_0..c_order.
// Throws error("not a power series") if the numerator keeps negative exponents.
std::vector<Rat> expand(const HilbertSeries& s, std::int64_t order);

// Same, for series with integral numerators (all our geometric series).
// Uses a checked int64 fast path and falls back to big integers.
std::vector<Int> expand_int(const HilbertSeries& s, std::int64_t order);

// int64 expansion; returns false (and leaves `out` unspecified) on overflow.
bool expand_i64(const HilbertSeries& s, std::int64_t order, std::vector<long long>& out);

// Exact value of (1-t)^k * s at t = 1; requires the pole order at t = 1 to be
// exactly k, else throws error("pole order mismatch").
Rat residue_at_one(const HilbertSeries& s, int k);

// Pole order of s at t = 1 (denominator factors minus numerator multiplicity).
int pole_order_at_one(const HilbertSeries& s);

// Series times (1 - t^d): cancels a matching denominator factor when present,
// otherwise multiplies the numerator.
HilbertSeries times_one_minus_t(const HilbertSeries& s, std::int64_t d);

// Series divided by (1 - t^d): extends the denominator.
HilbertSeries over_one_minus_t(const HilbertSeries& s, std::int64_t d);

}  // namespace wp3
