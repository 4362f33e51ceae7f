#include "wp3/cube.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wp3 {

std::string vertex_label(VertexId v) {
    std::string s = "X";
    s += char('1' + ((v >> 2) & 1));
    s += char('1' + ((v >> 1) & 1));
    s += char('1' + (v & 1));
    return s;
}

VertexId parse_vertex(const std::string& s) {
    std::string d = s;
    if (!d.empty() && (d[0] == 'X' || d[0] == 'x')) d = d.substr(1);
    if (d.size() != 3) throw error("bad vertex label: " + s);
    int idx[3];
    for (int p = 0; p < 3; ++p) {
        if (d[p] != '1' && d[p] != '2') throw error("bad vertex label: " + s);
        idx[p] = d[p] - '1';
    }
    return (idx[0] << 2) | (idx[1] << 1) | idx[2];
}

void MuVector::validate() const {
    for (VertexId id = 0; id < 8; ++id)
        if (vertex_weight(id) <= 0) throw error("nonpositive vertex weight");
}

std::string MuVector::str() const {
    std::ostringstream os;
    os << "(" << v[0] << "," << v[1] << ":" << v[2] << "," << v[3] << ":" << v[4] << ","
       << v[5] << ")";
    return os.str();
}

std::int64_t WeightCube::axis_diff(int axis) const {
    const int bit = 2 - axis;
    return w[std::size_t(1 << bit)] - w[0];
}

std::vector<std::int64_t> WeightCube::weight_multiset() const {
    std::vector<std::int64_t> m(w.begin(), w.end());
    std::sort(m.begin(), m.end());
    return m;
}

std::string CubeEquation::str() const {
    return vertex_label(lhs[0]) + "*" + vertex_label(lhs[1]) + " - " + vertex_label(rhs[0]) +
           "*" + vertex_label(rhs[1]);
}

WeightCube cube_weights(const MuVector& mu) {
    mu.validate();
    WeightCube cube;
    cube.mu = mu;
    cube.socle = mu.socle();
    for (VertexId id = 0; id < 8; ++id) cube.w[std::size_t(id)] = mu.vertex_weight(id);
    return cube;
}

WeightCube cube_from_weights(const std::array<std::int64_t, 8>& w) {
    static const char* axis_name[3] = {"a", "b", "c"};
    std::int64_t diff[3];
    for (int axis = 0; axis < 3; ++axis) {
        const int bit = 2 - axis;
        bool first = true;
        for (VertexId id = 0; id < 8; ++id) {
            if ((id >> bit) & 1) continue;
            const std::int64_t d = w[std::size_t(id | (1 << bit))] - w[std::size_t(id)];
            if (first) {
                diff[axis] = d;
                first = false;
            } else if (d != diff[axis]) {
                throw error(std::string("not an additive cube (axis ") + axis_name[axis] +
                            ")");
            }
        }
    }
    for (auto x : w)
        if (x <= 0) throw error("nonpositive vertex weight");
    MuVector mu;
    mu.v = {0, diff[0], 0, diff[1], w[0], w[0] + diff[2]};
    WeightCube cube = cube_weights(mu);
    if (cube.w != w) throw error("not an additive cube (inconsistent)");
    return cube;
}

MuVector canonical_mu(const WeightCube& cube) {
    std::array<std::int64_t, 3> d = {cube.axis_diff(0), cube.axis_diff(1),
                                     cube.axis_diff(2)};
    std::int64_t base = *std::min_element(cube.w.begin(), cube.w.end());
    for (auto& x : d) x = std::llabs(x);
    std::sort(d.begin(), d.end());
    MuVector mu;
    mu.v = {0, d[0], 0, d[1], base, base + d[2]};
    return mu;
}

HilbertSeries hilbert_series_wp(const MuVector& mu) {
    mu.validate();
    const std::int64_t l = mu.socle();

    // Q1 = 3 + sum over axes of t^(+diff) + t^(-diff); Laurent in general.
    LaurentPoly q1(Rat(3));
    const std::int64_t diffs[3] = {mu.a(1) - mu.a(2), mu.b(1) - mu.b(2), mu.c(1) - mu.c(2)};
    for (auto d : diffs) {
        q1.add_term(d, 1);
        q1.add_term(-d, 1);
    }
    // Q2 = sum over the eight vertices of 2 t^w.
    LaurentPoly q2;
    for (VertexId id = 0; id < 8; ++id) q2.add_term(mu.vertex_weight(id), 2);

    LaurentPoly num(Rat(1));
    num -= q1.shifted(l);
    num += q2.shifted(l);
    num -= q1.shifted(2 * l);
    num.add_term(3 * l, 1);

    if (num.is_zero() || num.min_exp() < 0 || num.max_exp() != 3 * l)
        throw error("formula inconsistency");
    if (!(num == num.reversed(3 * l))) throw error("formula inconsistency");

    std::vector<std::int64_t> den;
    den.reserve(8);
    for (VertexId id = 0; id < 8; ++id) den.push_back(mu.vertex_weight(id));
    return HilbertSeries(std::move(num), CyclotomicProduct(std::move(den)));
}

namespace {

CubeEquation make_eq(const WeightCube& cube, VertexId l1, VertexId l2, VertexId r1,
                     VertexId r2) {
    CubeEquation e;
    e.lhs = {l1, l2};
    e.rhs = {r1, r2};
    e.degree = cube.w[std::size_t(l1)] + cube.w[std::size_t(l2)];
    if (e.degree != cube.w[std::size_t(r1)] + cube.w[std::size_t(r2)])
        throw error("equation degree mismatch");
    return e;
}

}  // namespace

std::vector<CubeEquation> cube_equations(const WeightCube& cube) {
    const VertexId X111 = vertex_id(1, 1, 1), X112 = vertex_id(1, 1, 2),
                   X121 = vertex_id(1, 2, 1), X122 = vertex_id(1, 2, 2),
                   X211 = vertex_id(2, 1, 1), X212 = vertex_id(2, 1, 2),
                   X221 = vertex_id(2, 2, 1), X222 = vertex_id(2, 2, 2);
    std::vector<CubeEquation> eqs;
    eqs.reserve(9);
    // Face minors (i=1, i=2, j=1, j=2, k=1, k=2).
    eqs.push_back(make_eq(cube, X111, X122, X112, X121));
    eqs.push_back(make_eq(cube, X211, X222, X212, X221));
    eqs.push_back(make_eq(cube, X111, X212, X112, X211));
    eqs.push_back(make_eq(cube, X121, X222, X122, X221));
    eqs.push_back(make_eq(cube, X111, X221, X121, X211));
    eqs.push_back(make_eq(cube, X112, X222, X122, X212));
    // Differences of the space-diagonal products, P1 - P2, P1 - P3, P1 - P4.
    eqs.push_back(make_eq(cube, X111, X222, X112, X221));
    eqs.push_back(make_eq(cube, X111, X222, X121, X212));
    eqs.push_back(make_eq(cube, X111, X222, X211, X122));
    return eqs;
}

std::vector<CubeEquation> cube_relations_full(const WeightCube& cube) {
    const VertexId X112 = vertex_id(1, 1, 2), X121 = vertex_id(1, 2, 1),
                   X122 = vertex_id(1, 2, 2), X211 = vertex_id(2, 1, 1),
                   X212 = vertex_id(2, 1, 2), X221 = vertex_id(2, 2, 1);
    auto eqs = cube_equations(cube);
    eqs.push_back(make_eq(cube, X112, X221, X121, X212));
    eqs.push_back(make_eq(cube, X112, X221, X211, X122));
    eqs.push_back(make_eq(cube, X121, X212, X211, X122));
    return eqs;
}

}  // namespace wp3
