#pragma once

#include <cstdint>
#include <vector>

#include "toricfrob/classgroup.hpp"
#include "toricfrob/errors.hpp"
#include "toricfrob/fan.hpp"

namespace toricfrob {

/// One halfspace <m, normal> + offset >= 0 per ray, in ray order. The
/// lattice points m of the polytope correspond to the global sections of
/// the divisor's sheaf (one effective divisor in the class per point).
struct PolytopeInequality {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    bool operator==(const PolytopeInequality&) const = default;
};

struct DivisorPolytope {
    int dim = 0;
    std::vector<PolytopeInequality> inequalities;
};

DivisorPolytope polytope_of(const Fan& fan, const TDivisor& d);

/// Integer coordinate bounds certified to contain every lattice point.
struct CoordinateBounds {
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> upper;
};

enum class BoundsStatus {
    bounded,   // box is valid
    unbounded, // an unbounded rational direction was certified
    empty,     // no lattice point can exist
};

struct BoundsResult {
    BoundsStatus status = BoundsStatus::empty;
    CoordinateBounds box; // meaningful only when bounded
};

/// Per-coordinate bounds via exact Fourier-Motzkin elimination over the
/// rationals (integer pivoting, no floating point anywhere).
BoundsResult certified_bounds(const DivisorPolytope& p);

struct LatticePointCount {
    bool unbounded = false;
    std::uint64_t count = 0; // valid when !unbounded

    bool operator==(const LatticePointCount&) const = default;
};

/// Exact count, or unbounded when elimination certifies an unbounded
/// direction. Enumeration walks the certified box and filters against the
/// original inequalities.
LatticePointCount count_lattice_points(const DivisorPolytope& p,
                                       std::uint64_t budget = default_enumeration_budget);

/// Dimension of the space of global sections of the class c, counted as
/// lattice points of the polytope of a representative. Independent of the
/// representative chosen.
LatticePointCount h0(const Fan& fan, const ClassGroup& cg, const DivisorClass& c,
                     std::uint64_t budget = default_enumeration_budget);

/// Independent oracle for h0: counts effective divisors of class c by
/// enumerating lattice points and mapping each through the divisor of its
/// character. Throws BudgetExceeded when the fan is not complete enough to
/// keep that enumeration finite, or the box exceeds the budget.
std::uint64_t count_effective_divisors(const Fan& fan, const ClassGroup& cg,
                                       const DivisorClass& c,
                                       std::uint64_t budget = default_enumeration_budget);

} // namespace toricfrob
