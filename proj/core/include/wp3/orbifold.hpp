// Cyclic quotient singularity types 1/r(a,b): canonical forms, isolation,
// and the rigidity test of the R-singularity definition.
#pragma once

#include "wp3/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wp3 {

// Local weights of an orbifold chart together with the order, O(1)-polarized:
// (a, b) reduced mod r and sorted. This is finer data than the abstract
// singularity type; Riemann-Roch contributions are functions of it.
struct PolarizedPair {
    std::int64_t r = 1;
    std::int64_t a = 0;
    std::int64_t b = 0;

    void reduce();  // a,b into [0,r), sorted ascending
    auto operator<=>(const PolarizedPair&) const = default;
    std::string str() const;
};

// Abstract singularity type: canonical representative of the orbit of (a,b)
// under unit rescalings lambda*(a,b) mod r and the swap; lexicographically
// smallest pair, which has first entry 1 for isolated points.
struct OrbifoldPoint {
    std::int64_t r = 1;
    std::int64_t a = 0;
    std::int64_t b = 0;

    auto operator<=>(const OrbifoldPoint&) const = default;
    std::string str() const;  // "1/r(a,b)"
};

struct Classification {
    bool isolated = false;
    bool rigid = false;      // d < m with d = gcd(a+b,r), m = r/d
    bool rigid_ksb = false;  // complement of the T-family: m does not divide d
    std::int64_t d = 0, k = 0, m = 0;
    OrbifoldPoint canonical;
};

Classification classify(std::int64_t r, std::int64_t a, std::int64_t b);

inline Classification classify(const PolarizedPair& p) { return classify(p.r, p.a, p.b); }

// All canonical isolated types 1/r(1,e) of the given order, optionally
// filtered to rigid ones. Sorted.
std::vector<OrbifoldPoint> isolated_types(std::int64_t r, bool rigid_only,
                                          bool ksb_convention = false);

// One basket item: canonical type plus the literal polarized pair it was
// observed with (kept for the Riemann-Roch cross-check).
struct BasketEntry {
    OrbifoldPoint type;
    PolarizedPair polarized;
    int mult = 1;
};

struct Basket {
    std::vector<BasketEntry> entries;  // sorted by (type, polarized)

    void add(const PolarizedPair& pair, int mult = 1);
    void normalize();  // merge equal (type, polarized) entries, sort
    bool empty() const { return entries.empty(); }

    // Multiset of (canonical type, multiplicity); the comparison used for
    // "basket equals the table" checks.
    std::vector<std::pair<OrbifoldPoint, int>> type_multiset() const;
    bool same_types(const Basket& o) const;

    std::string str() const;  // "4 x 1/3(1,1), 1 x 1/7(1,2)"
};

}  // namespace wp3
