#include "wp3/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace wp3 {

namespace {

std::int64_t mod_ll(std::int64_t x, std::int64_t r) {
    std::int64_t m = x % r;
    return m < 0 ? m + r : m;
}

}  // namespace

SurfaceModel::SurfaceModel(const PolarizedVariety& v) : v_(v) {
    for (const auto& s : v.recipe.sections)
        if (!s.is_vertex()) throw error("unsupported: non-quasilinear section");

    // Vertex id -> symbol (surviving variable or generic form of its weight).
    std::array<EqSymbol, 8> sym;
    std::array<bool, 8> eliminated{};
    for (const auto& s : v.recipe.sections) eliminated[std::size_t(s.target)] = true;
    for (VertexId id = 0; id < 8; ++id) {
        if (eliminated[std::size_t(id)]) {
            sym[std::size_t(id)] =
                EqSymbol{-1, v.recipe.cube.w[std::size_t(id)]};
        } else {
            int idx = -1;
            for (int i = 0; i < var_count(); ++i)
                if (v_.ambient[std::size_t(i)].vertex == id) idx = i;
            if (idx < 0) throw error("internal: vertex variable missing");
            sym[std::size_t(id)] = EqSymbol{idx, 0};
        }
    }
    for (const auto& rel : cube_relations_full(v.recipe.cube)) {
        SubEquation eq;
        eq.lhs.f = {sym[std::size_t(rel.lhs[0])], sym[std::size_t(rel.lhs[1])]};
        eq.rhs.f = {sym[std::size_t(rel.rhs[0])], sym[std::size_t(rel.rhs[1])]};
        eq.degree = rel.degree;
        eq.origin = rel.str();
        eqs_.push_back(std::move(eq));
    }
}

int SurfaceModel::count_monomials_capped(std::int64_t d, std::uint32_t mask) const {
    if (d == 0) return 1;
    if (d < 0) return 0;
    auto it = count_cache_.find({mask, d});
    if (it != count_cache_.end()) return it->second;
    // Coin-style DP counting multisets, capped at 2.
    std::vector<int> cnt(std::size_t(d) + 1, 0);
    cnt[0] = 1;
    for (int i = 0; i < var_count(); ++i) {
        if (!(mask >> i & 1)) continue;
        const std::int64_t w = weight(i);
        for (std::int64_t x = w; x <= d; ++x) {
            cnt[std::size_t(x)] += cnt[std::size_t(x - w)];
            if (cnt[std::size_t(x)] > 2) cnt[std::size_t(x)] = 2;
        }
    }
    const int res = cnt[std::size_t(d)];
    count_cache_[{mask, d}] = res;
    return res;
}

bool SurfaceModel::can_represent(std::int64_t d, std::uint32_t mask) const {
    return count_monomials_capped(d, mask) >= 1;
}

std::optional<std::vector<std::int64_t>> SurfaceModel::unique_monomial(
    std::int64_t d, std::uint32_t mask) const {
    if (count_monomials_capped(d, mask) != 1) return std::nullopt;
    std::vector<int> vs;
    for (int i = 0; i < var_count(); ++i)
        if (mask >> i & 1) vs.push_back(i);
    std::vector<std::uint32_t> suffix(vs.size() + 1, 0);
    for (std::size_t i = vs.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] | (1u << vs[i]);
    std::vector<std::int64_t> expo(std::size_t(var_count()), 0);
    std::function<bool(std::size_t, std::int64_t)> dfs = [&](std::size_t idx,
                                                             std::int64_t left) -> bool {
        if (left == 0) return true;
        if (idx == vs.size() || !can_represent(left, suffix[idx])) return false;
        const std::int64_t w = weight(vs[idx]);
        for (std::int64_t k = left / w; k >= 0; --k) {
            expo[std::size_t(vs[idx])] = k;
            if (dfs(idx + 1, left - k * w)) return true;
        }
        expo[std::size_t(vs[idx])] = 0;
        return false;
    };
    if (!dfs(0, d)) return std::nullopt;
    return expo;
}

namespace {

// Does this term yield a monomial that is a pure power of `v`?
bool term_pure_power(const SurfaceModel& m, const EqTerm& t, int v) {
    for (const auto& s : t.f) {
        if (s.is_generic()) {
            if (s.degree % m.weight(v) != 0) return false;
        } else if (s.var != v) {
            return false;
        }
    }
    return true;
}

// Variables x_j detected as tangent at the v-point by this term, i.e. the
// term contains a monomial v^k x_j with k >= 1.
void term_tangents(const SurfaceModel& m, const EqTerm& t, int v, std::set<int>& out) {
    const std::int64_t wv = m.weight(v);
    const auto& s0 = t.f[0];
    const auto& s1 = t.f[1];
    auto gen_has_pure = [&](const EqSymbol& s) {
        return s.is_generic() && s.degree % wv == 0;
    };
    auto gen_linear_in = [&](const EqSymbol& s, int j) {
        // generic form contains v^m x_j, m >= 0
        if (!s.is_generic()) return false;
        const std::int64_t rem = s.degree - m.weight(j);
        return rem >= 0 && rem % wv == 0;
    };
    for (int order = 0; order < 2; ++order) {
        const EqSymbol& a = order ? s1 : s0;
        const EqSymbol& b = order ? s0 : s1;
        if (!a.is_generic() && a.var == v) {
            // v * (real x_j) or v * (generic containing v^m x_j)
            if (!b.is_generic()) {
                if (b.var != v) out.insert(b.var);
            } else {
                for (int j = 0; j < m.var_count(); ++j)
                    if (j != v && gen_linear_in(b, j)) out.insert(j);
            }
        } else if (!a.is_generic() && a.var != v) {
            // (real x_j) * (generic with pure v-power)
            if (gen_has_pure(b)) out.insert(a.var);
        } else if (a.is_generic() && gen_has_pure(a) && b.is_generic()) {
            for (int j = 0; j < m.var_count(); ++j)
                if (j != v && gen_linear_in(b, j)) out.insert(j);
        }
    }
}

struct TermOnSupport {
    bool alive = false;
    bool single = false;                 // restricts to a single monomial
    std::vector<std::int64_t> expo;      // exponents when single
};

TermOnSupport term_on_support(const SurfaceModel& m, const EqTerm& t,
                              std::uint32_t mask) {
    TermOnSupport res;
    std::vector<std::int64_t> expo(std::size_t(m.var_count()), 0);
    bool single = true;
    for (const auto& s : t.f) {
        if (s.is_generic()) {
            const int cnt = m.count_monomials_capped(s.degree, mask);
            if (cnt == 0) return res;
            if (cnt > 1) {
                single = false;
            } else {
                auto mono = m.unique_monomial(s.degree, mask);
                if (!mono) return res;
                for (int i = 0; i < m.var_count(); ++i)
                    expo[std::size_t(i)] += (*mono)[std::size_t(i)];
            }
        } else {
            if (!(mask >> s.var & 1)) return res;
            expo[std::size_t(s.var)] += 1;
        }
    }
    res.alive = true;
    res.single = single;
    if (single) res.expo = std::move(expo);
    return res;
}

int rational_rank(std::vector<std::vector<Rat>> rows) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < int(rows.size()); ++c) {
        std::size_t pivot = std::size_t(rank);
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[std::size_t(rank)], rows[pivot]);
        const Rat lead = rows[std::size_t(rank)][c];
        for (std::size_t rr = std::size_t(rank) + 1; rr < rows.size(); ++rr) {
            if (rows[rr][c] == 0) continue;
            const Rat f = rows[rr][c] / lead;
            for (std::size_t cc = c; cc < cols; ++cc)
                rows[rr][cc] -= f * rows[std::size_t(rank)][cc];
        }
        ++rank;
    }
    return rank;
}

// Orbit of points with support exactly `mask`, intersected with X.
// Returns {killed, report}.
std::pair<bool, OrbitReport> analyze_orbit(const SurfaceModel& m, std::uint32_t mask) {
    OrbitReport rep;
    rep.support = mask;
    std::vector<std::vector<Rat>> diffs;
    int generic_cuts = 0;
    for (const auto& eq : m.equations()) {
        const TermOnSupport L = term_on_support(m, eq.lhs, mask);
        const TermOnSupport R = term_on_support(m, eq.rhs, mask);
        if (!L.alive && !R.alive) continue;
        if (L.alive != R.alive) {
            const TermOnSupport& t = L.alive ? L : R;
            if (t.single) return {true, rep};  // lone monomial kills the orbit
            ++generic_cuts;
            continue;
        }
        if (L.single && R.single) {
            if (L.expo == R.expo) return {true, rep};  // generic scalar * monomial
            std::vector<Rat> d(L.expo.size());
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] = Rat(L.expo[i]) - Rat(R.expo[i]);
            diffs.push_back(std::move(d));
        } else {
            ++generic_cuts;
        }
    }
    rep.binom_rank = rational_rank(diffs);
    rep.generic_cuts = generic_cuts;
    const int npts = __builtin_popcount(mask);
    rep.dim = npts - 1 - rep.binom_rank - generic_cuts;
    return {false, rep};
}

}  // namespace

std::vector<PointAnalysis> coordinate_points(const SurfaceModel& m) {
    std::vector<PointAnalysis> out;
    const int expected_locals = m.variety().dim;
    for (int v = 0; v < m.var_count(); ++v) {
        PointAnalysis pa;
        pa.var = v;
        bool off = false;
        for (const auto& eq : m.equations()) {
            if (term_pure_power(m, eq.lhs, v) || term_pure_power(m, eq.rhs, v)) {
                off = true;
                break;
            }
        }
        if (off) {
            pa.on_X = false;
            pa.kind = PointAnalysis::Kind::off;
            out.push_back(std::move(pa));
            continue;
        }
        pa.on_X = true;
        std::set<int> tangents;
        for (const auto& eq : m.equations()) {
            term_tangents(m, eq.lhs, v, tangents);
            term_tangents(m, eq.rhs, v, tangents);
        }
        for (int j = 0; j < m.var_count(); ++j) {
            if (j == v) continue;
            if (tangents.count(j))
                pa.tangents.push_back(j);
            else
                pa.locals.push_back(j);
        }
        if (int(pa.locals.size()) != expected_locals) {
            pa.kind = PointAnalysis::Kind::unresolved;
            pa.note = "unresolved: possibly not quasismooth here";
        } else if (m.weight(v) == 1) {
            pa.kind = PointAnalysis::Kind::smooth;
        } else if (expected_locals == 2) {
            pa.kind = PointAnalysis::Kind::orbifold;
            pa.pair.r = m.weight(v);
            pa.pair.a = mod_ll(m.weight(pa.locals[0]), pa.pair.r);
            pa.pair.b = mod_ll(m.weight(pa.locals[1]), pa.pair.r);
            pa.pair.reduce();
            pa.cls = classify(pa.pair.r, pa.pair.a, pa.pair.b);
        } else {
            pa.kind = PointAnalysis::Kind::smooth;  // 3-fold inspection mode
        }
        out.push_back(std::move(pa));
    }
    return out;
}

std::vector<StratumReport> strata(const SurfaceModel& m) {
    std::int64_t maxw = 1;
    for (int v = 0; v < m.var_count(); ++v) maxw = std::max(maxw, m.weight(v));
    std::set<std::uint32_t> seen;
    std::vector<StratumReport> out;
    for (std::int64_t q = 2; q <= maxw; ++q) {
        std::uint32_t mask = 0;
        for (int v = 0; v < m.var_count(); ++v)
            if (m.weight(v) % q == 0) mask |= 1u << v;
        if (__builtin_popcount(mask) < 2) continue;
        if (!seen.insert(mask).second) continue;
        StratumReport rep;
        rep.vars = mask;
        std::int64_t g = 0;
        for (int v = 0; v < m.var_count(); ++v)
            if (mask >> v & 1) g = std::gcd(g, m.weight(v));
        rep.factor = g;
        rep.max_dim = -1;
        for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            auto [killed, orb] = analyze_orbit(m, sub);
            if (killed || orb.dim < 0) continue;
            rep.orbits.push_back(orb);
            rep.max_dim = std::max(rep.max_dim, orb.dim);
        }
        std::sort(rep.orbits.begin(), rep.orbits.end(),
                  [](const OrbitReport& a, const OrbitReport& b) {
                      return a.support < b.support;
                  });
        out.push_back(std::move(rep));
    }
    std::sort(out.begin(), out.end(), [](const StratumReport& a, const StratumReport& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        return a.vars < b.vars;
    });
    return out;
}

bool wellformed(const SurfaceModel& m, std::string* offending) {
    for (const auto& rep : strata(m)) {
        if (rep.max_dim >= 1) {
            if (offending) {
                std::ostringstream os;
                os << "stratum of factor " << rep.factor << " on "
                   << support_str(m, rep.vars) << " meets X in dimension " << rep.max_dim;
                *offending = os.str();
            }
            return false;
        }
    }
    return true;
}

std::vector<BaseLocusComponent> base_locus(const SurfaceModel& m, std::int64_t degree) {
    if (degree < 1) throw error("base locus degree must be positive");
    const std::uint32_t full = (1u << m.var_count()) - 1;
    std::vector<std::uint32_t> surviving;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (m.can_represent(degree, mask)) continue;  // not in the ambient base locus
        auto [killed, orb] = analyze_orbit(m, mask);
        if (killed || orb.dim < 0) continue;
        surviving.push_back(mask);
    }
    std::vector<BaseLocusComponent> out;
    for (auto mask : surviving) {
        bool maximal = true;
        for (auto other : surviving)
            if (other != mask && (other & mask) == mask) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        auto [killed, orb] = analyze_orbit(m, mask);
        (void)killed;
        BaseLocusComponent comp;
        comp.support = mask;
        comp.dim = orb.dim;
        for (int v = 0; v < m.var_count(); ++v)
            if (mask >> v & 1) comp.names.push_back(m.name(v));
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const BaseLocusComponent& a, const BaseLocusComponent& b) {
                  return a.support < b.support;
              });
    return out;
}

BasketResult surface_basket(const SurfaceModel& m) {
    if (m.variety().dim != 2) throw error("not a surface");
    BasketResult res;
    res.points = coordinate_points(m);
    for (const auto& pa : res.points) {
        if (pa.kind == PointAnalysis::Kind::unresolved) {
            res.flags.push_back("unresolved: possibly not quasismooth at " +
                                m.name(pa.var));
        } else if (pa.kind == PointAnalysis::Kind::orbifold) {
            res.basket.add(pa.pair);
            if (!pa.cls.isolated)
                res.flags.push_back("non-isolated point at " + m.name(pa.var) + ": " +
                                    pa.pair.str());
            else if (!pa.cls.rigid)
                res.flags.push_back("non-rigid point at " + m.name(pa.var) + ": " +
                                    pa.pair.str());
        }
    }
    res.stratum_reports = strata(m);
    for (const auto& rep : res.stratum_reports) {
        for (const auto& orb : rep.orbits) {
            if (__builtin_popcount(orb.support) < 2) continue;  // coordinate points
            if (orb.dim >= 1) {
                res.flags.push_back("not wellformed: stratum of factor " +
                                    std::to_string(rep.factor) + " on " +
                                    support_str(m, orb.support) + " has dimension " +
                                    std::to_string(orb.dim));
            } else {
                res.flags.push_back(
                    "unresolved: 0-dimensional non-coordinate locus on " +
                    support_str(m, orb.support) + " (order " +
                    std::to_string(rep.factor) + "), type not pinned");
            }
        }
    }
    return res;
}

std::string support_str(const SurfaceModel& m, std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int v = 0; v < m.var_count(); ++v)
        if (mask >> v & 1) {
            if (!first) s += ",";
            s += m.name(v);
            first = false;
        }
    return s + "}";
}

}  // namespace wp3
