// The weighted P1 x P1 x P1 format: parameter vector mu, the 2x2x2 weight
// cube it induces, the Hilbert series of the ambient variety, and the nine
// binomial equations cutting it out of its weighted P7.
#pragma once

#include "wp3/series.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace wp3 {

// Vertex ids 0..7 encode (i,j,k) in {1,2}^3 as bits (i-1)(j-1)(k-1).
using VertexId = int;

inline VertexId vertex_id(int i, int j, int k) {
    return ((i - 1) << 2) | ((j - 1) << 1) | (k - 1);
}
std::string vertex_label(VertexId v);          // "X111".."X222"
VertexId parse_vertex(const std::string& s);   // accepts "111", "X111"

struct MuVector {
    // (a1, a2, b1, b2, c1, c2)
    std::array<std::int64_t, 6> v{};

    std::int64_t a(int i) const { return v[i - 1]; }
    std::int64_t b(int j) const { return v[1 + j]; }
    std::int64_t c(int k) const { return v[3 + k]; }
    std::int64_t vertex_weight(VertexId id) const {
        return a(1 + ((id >> 2) & 1)) + b(1 + ((id >> 1) & 1)) + c(1 + (id & 1));
    }
    std::int64_t socle() const {
        return v[0] + v[1] + v[2] + v[3] + v[4] + v[5];
    }
    // Throws error("nonpositive vertex weight") unless all eight sums > 0.
    void validate() const;

    bool operator==(const MuVector&) const = default;
    std::string str() const;
};

struct WeightCube {
    std::array<std::int64_t, 8> w{};  // indexed by VertexId
    std::int64_t socle = 0;           // l = sum of mu entries
    MuVector mu;                      // representative with a1 = b1 = 0

    std::int64_t axis_diff(int axis) const;  // 0:a, 1:b, 2:c (w2.. - w1..)
    std::vector<std::int64_t> weight_multiset() const;
    bool operator==(const WeightCube&) const = default;
};

// One binomial relation: lhs and rhs are unordered pairs of vertices with
// equal weighted degree.
struct CubeEquation {
    std::array<VertexId, 2> lhs{};
    std::array<VertexId, 2> rhs{};
    std::int64_t degree = 0;

    std::string str() const;
};

WeightCube cube_weights(const MuVector& mu);

// Rebuilds a cube from eight labeled weights; accepts iff the edge
// differences are consistent per axis and all weights are positive.
// Throws error("not an additive cube (axis ...)") otherwise.
WeightCube cube_from_weights(const std::array<std::int64_t, 8>& w);

// Canonical representative for search dedup: a1 = b1 = 0, c1 = min vertex,
// axis differences sorted ascending.
MuVector canonical_mu(const WeightCube& cube);

// Hilbert series of the ambient weighted P1xP1xP1 in its P7 embedding.
// Numerator is a genuine polynomial, palindromic of degree 3l; the
// denominator factors are the eight vertex weights.
HilbertSeries hilbert_series_wp(const MuVector& mu);

// The 6 face minors followed by the 3 differences of space-diagonal
// products (P1-P2, P1-P3, P1-P4).
std::vector<CubeEquation> cube_equations(const WeightCube& cube);

// The full twelve-relation set (6 minors + all 6 diagonal differences);
// the extra generators sharpen the combinatorial stratum analysis.
std::vector<CubeEquation> cube_relations_full(const WeightCube& cube);

}  // namespace wp3
