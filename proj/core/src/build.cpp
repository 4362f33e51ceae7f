#include "wp3/build.hpp"

#include <algorithm>

namespace wp3 {

std::vector<std::int64_t> PolarizedVariety::ambient_weights() const {
    std::vector<std::int64_t> w;
    w.reserve(ambient.size());
    for (const auto& v : ambient) w.push_back(v.weight);
    std::sort(w.begin(), w.end());
    return w;
}

std::int64_t PolarizedVariety::adjunction_number() const {
    std::int64_t s = 0;
    for (const auto& v : ambient) s += v.weight;
    return s - kappa;
}

PolarizedVariety build(const BuildRecipe& recipe, bool require_surface) {
    const WeightCube& cube = recipe.cube;
    PolarizedVariety out;
    out.recipe = recipe;
    out.series = hilbert_series_wp(cube.mu);

    std::array<bool, 8> eliminated{};
    std::int64_t sum_sections = 0;
    for (auto& s : recipe.sections) {
        if (s.is_vertex()) {
            if (s.target > 7) throw error("bad section target");
            if (eliminated[std::size_t(s.target)])
                throw error("vertex is the target of two sections");
            const std::int64_t w = cube.w[std::size_t(s.target)];
            if (s.degree != 0 && s.degree != w)
                throw error("section degree does not match vertex weight");
            eliminated[std::size_t(s.target)] = true;
            out.series.denominator.remove_one(w);
            sum_sections += w;
        } else {
            if (s.degree < 1) throw error("section degree must be positive");
            out.series = times_one_minus_t(out.series, s.degree);
            sum_sections += s.degree;
        }
    }
    std::int64_t sum_cones = 0;
    for (auto c : recipe.cones) {
        if (c < 1) throw error("cone weight must be positive");
        out.series.denominator.push(c);
        sum_cones += c;
    }

    out.dim = 3 + int(recipe.cones.size()) - int(recipe.sections.size());
    out.kappa = cube.socle + sum_cones - sum_sections;
    if (require_surface) {
        if (out.dim != 2) throw error("not a surface");
        if (out.kappa <= 0) throw error("not Fano");
    }

    // Ambient variables: surviving vertices plus cone variables, renamed
    // a, b, c, ... in ascending weight (ties by vertex id, cones last).
    struct Raw {
        std::int64_t weight;
        int vertex;
    };
    std::vector<Raw> raw;
    for (VertexId id = 0; id < 8; ++id)
        if (!eliminated[std::size_t(id)]) raw.push_back({cube.w[std::size_t(id)], id});
    for (auto c : recipe.cones) raw.push_back({c, -1});
    std::stable_sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
        if (x.weight != y.weight) return x.weight < y.weight;
        if ((x.vertex < 0) != (y.vertex < 0)) return y.vertex < 0;
        return x.vertex < y.vertex;
    });
    for (std::size_t i = 0; i < raw.size(); ++i) {
        AmbientVar v;
        v.name = i < 26 ? std::string(1, char('a' + i)) : "v" + std::to_string(i);
        v.weight = raw[i].weight;
        v.vertex = raw[i].vertex;
        out.ambient.push_back(v);
    }
    return out;
}

InvariantReport invariants(const PolarizedVariety& v) {
    if (v.dim != 2) throw error("not a surface");
    if (v.kappa < 1) throw error("not Fano");
    InvariantReport rep;
    rep.Dsq = residue_at_one(v.series, 3);
    rep.minusKsq = Rat(v.kappa) * Rat(v.kappa) * rep.Dsq;
    rep.head = expand_int(v.series, v.kappa);
    rep.h0 = rep.head.back();
    return rep;
}

bool toric_obstruction(const InvariantReport& rep) { return rep.h0 == 0; }

}  // namespace wp3
