#include "wp3/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wp3 {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t r) {
    std::int64_t m = x % r;
    return m < 0 ? m + r : m;
}

std::int64_t gcd_ll(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

void PolarizedPair::reduce() {
    if (r < 1) throw error("orbifold order must be >= 1");
    a = mod(a, r);
    b = mod(b, r);
    if (a > b) std::swap(a, b);
}

std::string PolarizedPair::str() const {
    std::ostringstream os;
    os << "1/" << r << "(" << a << "," << b << ")";
    return os.str();
}

std::string OrbifoldPoint::str() const {
    std::ostringstream os;
    os << "1/" << r << "(" << a << "," << b << ")";
    return os.str();
}

Classification classify(std::int64_t r, std::int64_t a, std::int64_t b) {
    if (r < 1) throw error("orbifold order must be >= 1");
    Classification cls;
    a = mod(a, r);
    b = mod(b, r);
    if (r == 1) {
        cls.isolated = true;
        cls.rigid = false;
        cls.rigid_ksb = false;
        cls.d = 1;
        cls.k = 0;
        cls.m = 1;
        cls.canonical = {1, 0, 0};
        return cls;
    }
    cls.isolated = gcd_ll(r, a) == 1 && gcd_ll(r, b) == 1;
    cls.d = gcd_ll(a + b, r);  // gcd(0, r) = r covers a + b == 0 mod r
    cls.m = r / cls.d;
    cls.k = (a + b) / cls.d;
    cls.rigid = cls.d < cls.m;
    cls.rigid_ksb = (cls.d % cls.m) != 0;

    // Lex-min over unit rescalings and the swap.
    std::int64_t ca = r, cb = r;
    for (std::int64_t lam = 1; lam < r; ++lam) {
        if (gcd_ll(lam, r) != 1) continue;
        std::int64_t x = mod(lam * a, r), y = mod(lam * b, r);
        if (x > y) std::swap(x, y);
        if (x < ca || (x == ca && y < cb)) {
            ca = x;
            cb = y;
        }
    }
    cls.canonical = {r, ca, cb};
    return cls;
}

std::vector<OrbifoldPoint> isolated_types(std::int64_t r, bool rigid_only,
                                          bool ksb_convention) {
    std::vector<OrbifoldPoint> out;
    if (r < 2) return out;
    for (std::int64_t e = 1; e < r; ++e) {
        if (gcd_ll(e, r) != 1) continue;
        const Classification cls = classify(r, 1, e);
        if (cls.canonical.b != e || cls.canonical.a != 1) continue;  // keep one rep
        if (rigid_only && !(ksb_convention ? cls.rigid_ksb : cls.rigid)) continue;
        out.push_back(cls.canonical);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Basket::add(const PolarizedPair& pair, int mult) {
    PolarizedPair p = pair;
    p.reduce();
    BasketEntry e;
    e.polarized = p;
    e.type = classify(p.r, p.a, p.b).canonical;
    e.mult = mult;
    entries.push_back(e);
    normalize();
}

void Basket::normalize() {
    std::sort(entries.begin(), entries.end(), [](const BasketEntry& x, const BasketEntry& y) {
        if (x.type != y.type) return x.type < y.type;
        return x.polarized < y.polarized;
    });
    std::vector<BasketEntry> merged;
    for (auto& e : entries) {
        if (!merged.empty() && merged.back().type == e.type &&
            merged.back().polarized == e.polarized)
            merged.back().mult += e.mult;
        else
            merged.push_back(e);
    }
    entries = std::move(merged);
}

std::vector<std::pair<OrbifoldPoint, int>> Basket::type_multiset() const {
    std::vector<std::pair<OrbifoldPoint, int>> out;
    for (const auto& e : entries) {
        if (!out.empty() && out.back().first == e.type)
            out.back().second += e.mult;
        else
            out.emplace_back(e.type, e.mult);
    }
    return out;
}

bool Basket::same_types(const Basket& o) const {
    return type_multiset() == o.type_multiset();
}

std::string Basket::str() const {
    if (entries.empty()) return "(empty)";
    std::ostringstream os;
    auto types = type_multiset();
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i) os << ", ";
        os << types[i].second << " x " << types[i].first.str();
    }
    return os.str();
}

}  // namespace wp3
