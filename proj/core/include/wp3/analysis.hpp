// Mechanized case analysis on a built surface: coordinate-point membership
// and tangent/local splits, orbifold strata dimensions, wellformedness,
// linear-system base loci, and basket assembly. Everything is deterministic
// weight arithmetic: a generic form of degree d "contains" a monomial iff
// the degrees match; no random coefficients anywhere.
#pragma once

#include "wp3/build.hpp"
#include "wp3/orbifold.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wp3 {

// One factor of a substituted equation term: a surviving ambient variable or
// a generic form (an eliminated vertex) of known degree.
struct EqSymbol {
    int var = -1;             // ambient index; -1 for a generic form
    std::int64_t degree = 0;  // generic form degree when var < 0
    bool is_generic() const { return var < 0; }
};

struct EqTerm {
    std::array<EqSymbol, 2> f{};
};

struct SubEquation {
    EqTerm lhs, rhs;
    std::int64_t degree = 0;
    std::string origin;  // the cube relation it came from
};

class SurfaceModel {
  public:
    // Requires a quasilinear recipe; generic sections are rejected with
    // error("unsupported: non-quasilinear section").
    explicit SurfaceModel(const PolarizedVariety& v);

    const PolarizedVariety& variety() const { return v_; }
    const std::vector<AmbientVar>& vars() const { return v_.ambient; }
    int var_count() const { return int(v_.ambient.size()); }
    std::int64_t weight(int var) const { return v_.ambient[std::size_t(var)].weight; }
    const std::string& name(int var) const { return v_.ambient[std::size_t(var)].name; }
    const std::vector<SubEquation>& equations() const { return eqs_; }

    // Is there a monomial of degree d in the variables of `mask`?
    bool can_represent(std::int64_t d, std::uint32_t mask) const;
    // Number of such monomials, capped at 2.
    int count_monomials_capped(std::int64_t d, std::uint32_t mask) const;
    std::optional<std::vector<std::int64_t>> unique_monomial(std::int64_t d,
                                                             std::uint32_t mask) const;

  private:
    PolarizedVariety v_;
    std::vector<SubEquation> eqs_;
    mutable std::map<std::pair<std::uint32_t, std::int64_t>, int> count_cache_;
};

struct PointAnalysis {
    enum class Kind { off, smooth, orbifold, unresolved };
    int var = -1;
    bool on_X = false;
    std::vector<int> tangents, locals;
    Kind kind = Kind::off;
    PolarizedPair pair;  // orbifold local type (literal weights mod order)
    Classification cls;
    std::string note;
};

std::vector<PointAnalysis> coordinate_points(const SurfaceModel& m);

struct OrbitReport {
    std::uint32_t support = 0;
    int dim = -1;  // dim of orbit closure cap X; -1 = generically empty
    int binom_rank = 0;
    int generic_cuts = 0;
};

struct StratumReport {
    std::int64_t factor = 1;    // gcd of the stratum variable weights
    std::uint32_t vars = 0;     // variables whose weight the factor divides
    std::vector<OrbitReport> orbits;  // surviving orbits only
    int max_dim = -1;
};

std::vector<StratumReport> strata(const SurfaceModel& m);

// No orbifold stratum meets the surface in dimension >= 1.
bool wellformed(const SurfaceModel& m, std::string* offending = nullptr);

struct BaseLocusComponent {
    std::uint32_t support = 0;
    std::vector<std::string> names;
    int dim = -1;
};

// Base locus of |O(d)| intersected with the surface: maximal surviving
// coordinate-orbit supports with their dimensions.
std::vector<BaseLocusComponent> base_locus(const SurfaceModel& m, std::int64_t degree);

struct BasketResult {
    Basket basket;
    std::vector<std::string> flags;
    std::vector<PointAnalysis> points;
    std::vector<StratumReport> stratum_reports;
};

BasketResult surface_basket(const SurfaceModel& m);

std::string support_str(const SurfaceModel& m, std::uint32_t mask);

}  // namespace wp3
