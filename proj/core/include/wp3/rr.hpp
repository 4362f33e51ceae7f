// Orbifold Riemann-Roch decomposition of Hilbert series:
//   P_X(t) = P_smooth(t) + sum over basket points of k_i P_{Q_i}(t),
// with each P_{Q_i} purely periodic. The per-type periodic contributions are
// not transcribed from the literature: they are solved for, exactly, from
// weighted projective spaces P(w1,w2,w3) whose series and baskets are known,
// and every entry is re-checked on independent spaces.
#pragma once

#include "wp3/build.hpp"
#include "wp3/orbifold.hpp"
#include "wp3/series.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wp3 {

struct SmoothPart {
    std::int64_t fano_index = 1;
    Rat Dsq;
    // coefficient function n -> 1 + n(n+I) Dsq / 2
    Rat coeff(std::int64_t n) const;
};

// Closed rational form of the smooth part; expansion equals SmoothPart::coeff.
HilbertSeries smooth_series(std::int64_t fano_index, const Rat& Dsq);

struct PeriodicContribution {
    std::int64_t r = 1;
    std::vector<Rat> c;  // one period c_0..c_{r-1}; c_0 == 0
    std::string provenance;

    HilbertSeries series() const;  // numerator over (1 - t^r)
    bool is_zero() const;
};

class CalibrationTable {
  public:
    // Solve all base types (1, x) for orders 2..bound from the spaces
    // P(1,1,r) and P(1,x,r), inductively by increasing order. Throws
    // error("calibration incomplete") / error("convention mismatch").
    void ensure_orders(std::int64_t bound);

    // Base entry for the polarized pair (1, x) at order r (solves lazily).
    const PeriodicContribution& base(std::int64_t r, std::int64_t x);

    // Contribution of an arbitrary isolated polarized pair (a, b) at order r
    // via the local eigenweight reindexing c_n(a,b) = c_{a^{-1}n}(1, a^{-1}b).
    PeriodicContribution contribution(std::int64_t r, std::int64_t a, std::int64_t b);
    PeriodicContribution contribution(const PolarizedPair& p) {
        return contribution(p.r, p.a, p.b);
    }

    // Identity check on one calibration space: the series of P(w1,w2,w3)
    // minus its smooth part equals the sum of its three calibrated point
    // contributions, to 3*w1*w2*w3 coefficients. Throws on failure.
    void verify_triple(std::int64_t w1, std::int64_t w2, std::int64_t w3);

    // Sweep all pairwise-coprime triples with product <= max_product.
    void verify_sweep(std::int64_t max_product);

    std::int64_t solved_bound() const { return solved_bound_; }
    std::size_t size() const { return base_.size(); }

    void save(std::ostream& os) const;
    // Returns false on a missing/badly versioned cache (caller regenerates).
    bool load(std::istream& is);

  private:
    void solve_order(std::int64_t r);

    std::map<std::pair<std::int64_t, std::int64_t>, PeriodicContribution> base_;
    std::int64_t solved_bound_ = 1;
};

// Candidate rigid orbifold point types from ambient weights: canonical
// isolated rigid types of every order > 1 dividing a weight.
std::vector<OrbifoldPoint> candidate_points_from_weights(
    const std::vector<std::int64_t>& weights, bool ksb_convention = false);

struct MatchOptions {
    // Match against every polarized variant of each candidate type; when
    // false only the canonical representative's contribution is used.
    bool polarized = true;
    // When nonempty, restrict variants to pairs realizable as residues of
    // two ambient weights (the points geometry can actually produce).
    std::vector<std::int64_t> realizable_from_weights;
    std::size_t max_solutions = 4096;
    std::int64_t max_window = 60'000'000;
};

using TypeMultiset = std::vector<std::pair<OrbifoldPoint, int>>;

// All nonnegative-integer multiplicity assignments over the candidate types
// solving P_X - P_smooth = sum k_i P_{Q_i} exactly; empty list = rejected.
// Throws error("inconsistent invariants") when the correction is not
// purely periodic.
std::vector<TypeMultiset> match_basket(const HilbertSeries& PX, std::int64_t fano_index,
                                       const Rat& Dsq,
                                       const std::vector<OrbifoldPoint>& candidates,
                                       CalibrationTable& table,
                                       const MatchOptions& opt = {});

// Exact end-to-end identity with a concrete polarized basket.
bool rr_identity_holds(const HilbertSeries& PX, std::int64_t fano_index, const Rat& Dsq,
                       const std::vector<std::pair<PolarizedPair, int>>& basket,
                       CalibrationTable& table);

}  // namespace wp3
