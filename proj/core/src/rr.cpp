#include "wp3/rr.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace wp3 {

namespace {

std::int64_t mod_ll(std::int64_t x, std::int64_t r) {
    std::int64_t m = x % r;
    return m < 0 ? m + r : m;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t r) {
    std::int64_t t = 0, nt = 1, rem = r, nrem = mod_ll(a, r);
    while (nrem != 0) {
        const std::int64_t q = rem / nrem;
        const std::int64_t t2 = t - q * nt;
        t = nt;
        nt = t2;
        const std::int64_t r2 = rem - q * nrem;
        rem = nrem;
        nrem = r2;
    }
    if (rem != 1) throw error("not invertible mod r");
    return mod_ll(t, r);
}

// Cyclotomic polynomials, memoized: Phi_d = (t^d - 1) / prod_{e|d, e<d} Phi_e.
LaurentPoly cyclotomic(std::int64_t d) {
    static std::map<std::int64_t, LaurentPoly> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::function<const LaurentPoly&(std::int64_t)> get =
        [&](std::int64_t n) -> const LaurentPoly& {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        LaurentPoly p;
        p.add_term(n, 1);
        p.add_term(0, -1);  // t^n - 1
        for (std::int64_t e = 1; e < n; ++e)
            if (n % e == 0) p = p.divided_by(get(e));
        return memo.emplace(n, std::move(p)).first->second;
    };
    return get(d);
}

// Multiplicity of Phi_d in p (capped), stripping in place.
int strip_cyclotomic(LaurentPoly& p, std::int64_t d, int cap) {
    const LaurentPoly phi = cyclotomic(d);
    int m = 0;
    while (m < cap && !p.is_zero()) {
        try {
            LaurentPoly q = p.divided_by(phi);
            p = std::move(q);
            ++m;
        } catch (const error&) {
            break;
        }
    }
    return m;
}

LaurentPoly poly_mod(const LaurentPoly& p, const LaurentPoly& d) {
    LaurentPoly rem = p;
    const auto dtop = d.max_exp();
    const Rat dlead = d.terms().rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() >= dtop) {
        const auto e = rem.max_exp() - dtop;
        const Rat c = rem.terms().rbegin()->second / dlead;
        for (const auto& [de, dc] : d.terms()) rem.add_term(de + e, -dc * c);
    }
    return rem;
}

std::vector<std::int64_t> divisors_above_one(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

Rat SmoothPart::coeff(std::int64_t n) const {
    return Rat(1) + Rat(n) * Rat(n + fano_index) * Dsq / 2;
}

HilbertSeries smooth_series(std::int64_t fano_index, const Rat& Dsq) {
    // (1-t)^2 + q t(1+t) + q I t(1-t) over (1-t)^3, q = Dsq/2.
    const Rat q = Dsq / 2;
    LaurentPoly num;
    num.add_term(0, 1);
    num.add_term(1, -2);
    num.add_term(2, 1);
    num.add_term(1, q);
    num.add_term(2, q);
    num.add_term(1, q * fano_index);
    num.add_term(2, -q * fano_index);
    return HilbertSeries(num, CyclotomicProduct({1, 1, 1}));
}

HilbertSeries PeriodicContribution::series() const {
    LaurentPoly num;
    for (std::size_t n = 0; n < c.size(); ++n) num.add_term(std::int64_t(n), c[n]);
    return HilbertSeries(num, CyclotomicProduct({r}));
}

bool PeriodicContribution::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

void CalibrationTable::ensure_orders(std::int64_t bound) {
    for (std::int64_t r = 2; r <= bound; ++r) solve_order(r);
    solved_bound_ = std::max(solved_bound_, bound);
}

void CalibrationTable::solve_order(std::int64_t r) {
    for (std::int64_t x = 1; x < r; ++x) {
        if (std::gcd(x, r) != 1) continue;
        base(r, x);
    }
}

const PeriodicContribution& CalibrationTable::base(std::int64_t r, std::int64_t x) {
    x = mod_ll(x, r);
    auto it = base_.find({r, x});
    if (it != base_.end()) return it->second;
    if (r < 2 || x < 1 || std::gcd(x, r) != 1)
        throw error("calibration incomplete: bad base type");

    // Calibration space P(1, x, r): series 1/((1-t)(1-t^x)(1-t^r)),
    // I = 1 + x + r, D^2 = 1/(x r), basket { 1/x(1,r), 1/r(1,x) }.
    const std::int64_t I = 1 + x + r;
    const std::int64_t window = 3 * r + 2 * x;
    HilbertSeries space(LaurentPoly(Rat(1)), CyclotomicProduct({1, x, r}));
    const std::vector<Int> coeffs = expand_int(space, window);

    // Scaled corrections: s = 2 x r makes the smooth part integral.
    const Int s = Int(2) * x * r;
    std::vector<Rat> corr(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const Int nn = Int(std::int64_t(n));
        corr[n] = Rat(s * coeffs[n] - s - nn * (nn + I), s);
    }
    if (x >= 2) {
        const PeriodicContribution other = contribution(x, 1, mod_ll(r, x));
        for (std::size_t n = 0; n < corr.size(); ++n)
            corr[n] -= other.c[n % std::size_t(x)];
    }
    // Remainder must be purely r-periodic with zero constant term.
    for (std::size_t n = 0; n < corr.size(); ++n)
        if (corr[n] != corr[n % std::size_t(r)])
            throw error("convention mismatch at P(1," + std::to_string(x) + "," +
                        std::to_string(r) + ")");
    if (corr[0] != 0)
        throw error("convention mismatch at P(1," + std::to_string(x) + "," +
                    std::to_string(r) + "): nonzero n=0 correction");

    PeriodicContribution pc;
    pc.r = r;
    pc.c.assign(corr.begin(), corr.begin() + std::size_t(r));
    pc.provenance = "P(1," + std::to_string(x) + "," + std::to_string(r) + ")";
    return base_.emplace(std::make_pair(r, x), std::move(pc)).first->second;
}

PeriodicContribution CalibrationTable::contribution(std::int64_t r, std::int64_t a,
                                                    std::int64_t b) {
    if (r < 1) throw error("orbifold order must be >= 1");
    a = mod_ll(a, r);
    b = mod_ll(b, r);
    if (r == 1) {
        PeriodicContribution zero;
        zero.r = 1;
        zero.c = {Rat(0)};
        zero.provenance = "smooth";
        return zero;
    }
    if (std::gcd(a, r) != 1 || std::gcd(b, r) != 1)
        throw error("calibration incomplete: non-isolated type 1/" + std::to_string(r) +
                    "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    const std::int64_t ai = inv_mod(a, r);
    const std::int64_t x = mod_ll(ai * b, r);
    const PeriodicContribution& b01 = base(r, x);
    if (a == 1) return b01;
    // Local eigenweight reindexing: c_n(a, b) = c_{a^{-1} n mod r}(1, a^{-1} b).
    PeriodicContribution pc;
    pc.r = r;
    pc.c.resize(std::size_t(r));
    for (std::int64_t n = 0; n < r; ++n)
        pc.c[std::size_t(n)] = b01.c[std::size_t(mod_ll(ai * n, r))];
    pc.provenance = b01.provenance + " reindexed";
    return pc;
}

void CalibrationTable::verify_triple(std::int64_t w1, std::int64_t w2, std::int64_t w3) {
    const std::array<std::int64_t, 3> w = {w1, w2, w3};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(w[std::size_t(i)], w[std::size_t(j)]) != 1)
                throw error("verify_triple needs pairwise coprime weights");
    const std::int64_t I = w1 + w2 + w3;
    const std::int64_t prod = w1 * w2 * w3;
    const std::int64_t window = 3 * prod;
    HilbertSeries space(LaurentPoly(Rat(1)), CyclotomicProduct({w1, w2, w3}));
    const std::vector<Int> coeffs = expand_int(space, window);

    std::array<PeriodicContribution, 3> pts;
    for (int i = 0; i < 3; ++i)
        pts[std::size_t(i)] = contribution(w[std::size_t(i)], w[std::size_t((i + 1) % 3)],
                                           w[std::size_t((i + 2) % 3)]);

    const Int s = Int(2) * prod;
    for (std::size_t n = 0; n <= std::size_t(window); ++n) {
        const Int nn = Int(std::int64_t(n));
        const Rat lhs(s * coeffs[n] - s - nn * (nn + I), s);
        Rat rhs = 0;
        for (int i = 0; i < 3; ++i)
            rhs += pts[std::size_t(i)].c[n % std::size_t(w[std::size_t(i)])];
        if (lhs != rhs)
            throw error("convention mismatch at P(" + std::to_string(w1) + "," +
                        std::to_string(w2) + "," + std::to_string(w3) +
                        ") n=" + std::to_string(n));
    }
}

void CalibrationTable::verify_sweep(std::int64_t max_product) {
    for (std::int64_t w1 = 1; w1 * w1 * w1 <= max_product; ++w1)
        for (std::int64_t w2 = w1; w1 * w2 * w2 <= max_product; ++w2)
            for (std::int64_t w3 = w2; w1 * w2 * w3 <= max_product; ++w3) {
                if (std::gcd(w1, w2) != 1 || std::gcd(w1, w3) != 1 ||
                    std::gcd(w2, w3) != 1)
                    continue;
                verify_triple(w1, w2, w3);
            }
}

void CalibrationTable::save(std::ostream& os) const {
    os << "# wp3 calibration cache v1\n";
    for (const auto& [key, pc] : base_) {
        os << "1/" << key.first << "(1," << key.second << "): ";
        bool first = true;
        std::ostringstream num;
        for (std::size_t n = 0; n < pc.c.size(); ++n) {
            if (pc.c[n] == 0) continue;
            if (!first) num << " + ";
            num << rat_str(pc.c[n]) << " t^" << n;
            first = false;
        }
        os << (first ? "0" : num.str()) << " / (1 - t^" << pc.r << ")";
        os << "  via " << pc.provenance << "\n";
    }
}

bool CalibrationTable::load(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) return false;
    if (header != "# wp3 calibration cache v1") return false;
    // Entries are cheap to re-derive; the cache records what was solved and
    // we re-solve on load rather than trusting stored values.
    std::string line;
    std::int64_t max_order = 1;
    while (std::getline(is, line)) {
        if (line.rfind("1/", 0) != 0) continue;
        const auto paren = line.find('(');
        if (paren == std::string::npos) continue;
        max_order =
            std::max(max_order, std::int64_t(std::stoll(line.substr(2, paren - 2))));
    }
    if (max_order >= 2) ensure_orders(max_order);
    return true;
}

std::vector<OrbifoldPoint> candidate_points_from_weights(
    const std::vector<std::int64_t>& weights, bool ksb_convention) {
    std::set<std::int64_t> orders;
    for (auto w : weights)
        for (auto d : divisors_above_one(w)) orders.insert(d);
    std::vector<OrbifoldPoint> out;
    for (auto r : orders)
        for (const auto& t : isolated_types(r, /*rigid_only=*/true, ksb_convention))
            out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Column {
    OrbifoldPoint type;
    PolarizedPair pair;
    std::int64_t order = 1;
    LaurentPoly numer;  // periodic numerator, degree < order
    LaurentPoly poly;   // numer * DEN / (1 - t^order)
    Rat mass;           // numer(1); negative for every calibrated type seen
};

struct Correction {
    LaurentPoly num;                    // numerator with pole factors stripped
    std::map<std::int64_t, int> poles;  // d -> 1 for simple pole at Phi_d
    int sign = 1;                       // C = sign * num / prod Phi_d
    Rat rho;                            // value of (1-t) C at t = 1
};

// C = P_X - P_smooth over the common polynomial denominator
// (1-t)^3 prod(1-t^w); throws "inconsistent invariants" when some pole
// exceeds order one (correction not purely periodic).
Correction reduce_correction(const HilbertSeries& PX, std::int64_t I, const Rat& Dsq) {
    const HilbertSeries smooth = smooth_series(I, Dsq);
    LaurentPoly W(Rat(1));
    for (auto w : PX.denominator.factors()) W = W * LaurentPoly::one_minus_t(w);
    LaurentPoly cube3(Rat(1));
    for (int i = 0; i < 3; ++i) cube3 = cube3 * LaurentPoly::one_minus_t(1);
    LaurentPoly num = PX.numerator * cube3 - smooth.numerator * W;

    const int nfactors = 3 + int(PX.denominator.size());
    Correction out;
    out.sign = (nfactors % 2 == 0) ? 1 : -1;  // prod(1-t^f) = (-1)^F prod Phi_d^e
    if (num.is_zero()) {
        out.num = num;
        out.rho = 0;
        return out;
    }
    std::map<std::int64_t, int> mult;
    mult[1] = nfactors;
    for (auto w : PX.denominator.factors())
        for (auto d : divisors_above_one(w)) mult[d] += 1;
    for (const auto& [d, e] : mult) {
        const int stripped = strip_cyclotomic(num, d, e);
        const int pole = e - stripped;
        if (pole >= 2) throw error("inconsistent invariants");
        if (pole == 1) out.poles[d] = 1;
    }
    out.num = num;
    if (out.poles.count(1)) {
        Rat den = 1;
        for (const auto& [d, p] : out.poles) {
            (void)p;
            if (d != 1) den *= cyclotomic(d).eval_one();
        }
        // (1-t)/Phi_1 = -1, so rho = -sign * num(1) / prod_{d != 1} Phi_d(1).
        out.rho = Rat(-out.sign) * out.num.eval_one() / den;
    } else {
        out.rho = 0;
    }
    return out;
}

struct MatchSystem {
    std::vector<Column> cols;
    LaurentPoly rhs;  // sign * num * prod_{d in dset minus poles} Phi_d
    Rat rho;
    bool mass_sound = true;
};

MatchSystem build_system(const Correction& corr, const std::set<std::int64_t>& orders,
                         std::vector<Column> cols) {
    MatchSystem sys;
    std::set<std::int64_t> dset{1};
    for (auto r : orders)
        for (std::int64_t d = 1; d <= r; ++d)
            if (r % d == 0) dset.insert(d);
    for (const auto& [d, p] : corr.poles) {
        (void)p;
        dset.insert(d);
    }
    LaurentPoly DEN(Rat(1));
    for (auto d : dset) DEN = DEN * cyclotomic(d);

    if (!corr.num.is_zero()) {
        LaurentPoly rhs = corr.num.scaled(Rat(corr.sign));
        for (auto d : dset)
            if (!corr.poles.count(d)) rhs = rhs * cyclotomic(d);
        sys.rhs = rhs;
    }
    for (auto& c : cols) {
        LaurentPoly q = DEN;
        for (std::int64_t d = 1; d <= c.order; ++d)
            if (c.order % d == 0) q = q.divided_by(cyclotomic(d));
        // (1 - t^r) = -(t^r - 1) = -prod_{d|r} Phi_d.
        c.poly = c.numer * q.scaled(Rat(-1));
        if (c.mass >= 0) sys.mass_sound = false;
    }
    sys.cols = std::move(cols);
    sys.rho = corr.rho;
    return sys;
}

}  // namespace

std::vector<TypeMultiset> match_basket(const HilbertSeries& PX, std::int64_t I,
                                       const Rat& Dsq,
                                       const std::vector<OrbifoldPoint>& candidates,
                                       CalibrationTable& table, const MatchOptions& opt) {
    const Correction corr = reduce_correction(PX, I, Dsq);

    std::map<std::int64_t, std::set<std::pair<std::int64_t, std::int64_t>>> realizable;
    if (!opt.realizable_from_weights.empty()) {
        const auto& w = opt.realizable_from_weights;
        std::set<std::int64_t> orders;
        for (const auto& t : candidates) orders.insert(t.r);
        for (auto r : orders)
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j) {
                    std::int64_t a = mod_ll(w[i], r), b = mod_ll(w[j], r);
                    if (a > b) std::swap(a, b);
                    realizable[r].insert({a, b});
                }
    }

    std::vector<Column> cols;
    std::set<std::int64_t> order_set;
    for (const auto& type : candidates) {
        const std::int64_t r = type.r;
        if (r < 2) continue;
        std::vector<PolarizedPair> variants;
        if (!opt.polarized) {
            PolarizedPair p{r, type.a, type.b};
            p.reduce();
            variants.push_back(p);
        } else {
            for (std::int64_t a = 1; a < r; ++a) {
                if (std::gcd(a, r) != 1) continue;
                for (std::int64_t b = a; b < r; ++b) {
                    if (std::gcd(b, r) != 1) continue;
                    if (classify(r, a, b).canonical != type) continue;
                    if (!opt.realizable_from_weights.empty() && !realizable[r].count({a, b}))
                        continue;
                    variants.push_back({r, a, b});
                }
            }
        }
        for (const auto& p : variants) {
            Column col;
            col.type = type;
            col.pair = p;
            col.order = r;
            col.numer = table.contribution(p).series().numerator;
            if (col.numer.is_zero()) continue;
            col.mass = col.numer.eval_one();
            bool dup = false;
            for (const auto& u : cols)
                if (u.type == col.type && u.numer == col.numer) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            cols.push_back(std::move(col));
            order_set.insert(r);
        }
    }

    std::vector<TypeMultiset> results;
    if (cols.empty()) {
        if (corr.num.is_zero()) results.push_back({});
        return results;
    }
    MatchSystem sys = build_system(corr, order_set, std::move(cols));

    std::vector<std::int64_t> orders(order_set.begin(), order_set.end());
    std::sort(orders.rbegin(), orders.rend());
    std::vector<std::vector<std::size_t>> blocks;
    for (auto r : orders) {
        std::vector<std::size_t> b;
        for (std::size_t i = 0; i < sys.cols.size(); ++i)
            if (sys.cols[i].order == r) b.push_back(i);
        blocks.push_back(std::move(b));
    }

    std::vector<int> mult(sys.cols.size(), 0);
    LaurentPoly residual = sys.rhs;
    Rat budget = -sys.rho;
    if (sys.mass_sound && budget < 0) return results;

    std::function<void(std::size_t)> dfs_block = [&](std::size_t bi) {
        if (results.size() >= opt.max_solutions)
            throw error("match_basket: too many feasible baskets");
        if (bi == blocks.size()) {
            if (residual.is_zero()) {
                std::map<OrbifoldPoint, int> agg;
                for (std::size_t i = 0; i < sys.cols.size(); ++i)
                    if (mult[i] > 0) agg[sys.cols[i].type] += mult[i];
                TypeMultiset ms(agg.begin(), agg.end());
                results.push_back(std::move(ms));
            }
            return;
        }
        const auto& block = blocks[bi];
        const LaurentPoly phi = cyclotomic(sys.cols[block.front()].order);

        std::function<void(std::size_t, LaurentPoly)> dfs_col = [&](std::size_t ci,
                                                                    LaurentPoly comp) {
            if (ci == block.size()) {
                if (comp.is_zero()) dfs_block(bi + 1);
                return;
            }
            const Column& col = sys.cols[block[ci]];
            const LaurentPoly col_comp = poly_mod(col.poly, phi);
            dfs_col(ci + 1, comp);  // k = 0
            const Rat unit_cost = col.mass < 0 ? -col.mass / col.order : Rat(0);
            const int cap = 256;
            LaurentPoly comp2 = comp;
            int taken = 0;
            for (int k = 1; k <= cap; ++k) {
                if (sys.mass_sound && budget < unit_cost) break;
                if (k == cap) throw error("match_basket: multiplicity cap exceeded");
                comp2 -= col_comp;
                residual -= col.poly;
                budget -= unit_cost;
                mult[block[ci]] = k;
                taken = k;
                dfs_col(ci + 1, comp2);
            }
            for (int k = 0; k < taken; ++k) {
                residual += col.poly;
                budget += unit_cost;
            }
            mult[block[ci]] = 0;
        };
        dfs_col(0, poly_mod(residual, phi));
    };

    dfs_block(0);

    std::sort(results.begin(), results.end());
    results.erase(std::unique(results.begin(), results.end()), results.end());
    return results;
}

bool rr_identity_holds(const HilbertSeries& PX, std::int64_t I, const Rat& Dsq,
                       const std::vector<std::pair<PolarizedPair, int>>& basket,
                       CalibrationTable& table) {
    Correction corr;
    try {
        corr = reduce_correction(PX, I, Dsq);
    } catch (const error&) {
        return false;
    }
    std::set<std::int64_t> dset{1};
    for (const auto& [p, k] : basket) {
        (void)k;
        if (p.r >= 2)
            for (std::int64_t d = 1; d <= p.r; ++d)
                if (p.r % d == 0) dset.insert(d);
    }
    for (const auto& [d, p] : corr.poles) {
        (void)p;
        dset.insert(d);
    }
    LaurentPoly DEN(Rat(1));
    for (auto d : dset) DEN = DEN * cyclotomic(d);
    LaurentPoly rhs;
    if (!corr.num.is_zero()) {
        rhs = corr.num.scaled(Rat(corr.sign));
        for (auto d : dset)
            if (!corr.poles.count(d)) rhs = rhs * cyclotomic(d);
    }

    LaurentPoly lhs;
    for (const auto& [p, k] : basket) {
        if (p.r < 2) continue;
        PeriodicContribution pc;
        try {
            pc = table.contribution(p);
        } catch (const error&) {
            return false;
        }
        LaurentPoly q = DEN;
        for (std::int64_t d = 1; d <= p.r; ++d)
            if (p.r % d == 0) q = q.divided_by(cyclotomic(d));
        lhs += (pc.series().numerator * q.scaled(Rat(-1))).scaled(Rat(k));
    }
    return lhs == rhs;
}

}  // namespace wp3
