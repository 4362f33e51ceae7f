// Polarized varieties built from a format cube by projective cones and
// quasilinear sections. Cones extend the series denominator and lower the
// canonical degree; sections multiply it back and raise the degree.
#pragma once

#include "wp3/cube.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wp3 {

struct SectionSpec {
    // target >= 0: quasilinear section eliminating that cube vertex, degree
    // equals the vertex weight. target < 0: generic section of the given
    // degree (accepted by build, rejected by the basket path).
    int target = -1;
    std::int64_t degree = 0;

    static SectionSpec at_vertex(VertexId v) { return SectionSpec{v, 0}; }
    static SectionSpec generic(std::int64_t d) { return SectionSpec{-1, d}; }
    bool is_vertex() const { return target >= 0; }
};

struct BuildRecipe {
    WeightCube cube;
    std::vector<std::int64_t> cones;
    std::vector<SectionSpec> sections;
};

struct AmbientVar {
    std::string name;        // 'a', 'b', ... in ascending weight order
    std::int64_t weight = 0;
    int vertex = -1;         // VertexId, or -1 for a cone variable
    bool is_cone() const { return vertex < 0; }
};

struct PolarizedVariety {
    BuildRecipe recipe;
    std::vector<AmbientVar> ambient;
    HilbertSeries series;
    int dim = 0;
    std::int64_t kappa = 0;  // K = O(-kappa); Fano index I = kappa when > 0

    std::vector<std::int64_t> ambient_weights() const;  // sorted multiset
    std::int64_t adjunction_number() const;             // sum(w) - kappa = 3l
};

struct InvariantReport {
    Rat Dsq;        // D^2
    Rat minusKsq;   // -K^2 = I^2 D^2
    Int h0;         // h^0(-K) = coefficient of t^I
    std::vector<Int> head;  // P_X coefficients c_0..c_I
};

// Builds the polarized variety. When require_surface is set (search and
// verification paths) a non-surface dimension or kappa <= 0 is an error;
// raw mode admits 3-folds for inspection.
PolarizedVariety build(const BuildRecipe& recipe, bool require_surface = true);

InvariantReport invariants(const PolarizedVariety& v);

// Q-Gorenstein degeneration to a toric variety is obstructed iff h0 = 0.
bool toric_obstruction(const InvariantReport& rep);

}  // namespace wp3
