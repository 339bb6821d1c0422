#include "toricfrob/sections.hpp"

#include <algorithm>
#include <map>

#include "toricfrob/checked.hpp"

namespace toricfrob {

DivisorPolytope polytope_of(const Fan& fan, const TDivisor& d) {
    require_valid(fan);
    if (d.coeffs.size() != static_cast<std::size_t>(fan.ray_count()))
        throw Error("polytope_of: divisor length != ray count");

    DivisorPolytope p;
    p.dim = fan.dim;
    for (int i = 0; i < fan.ray_count(); ++i)
        p.inequalities.push_back({fan.rays[i], d.coeffs[static_cast<std::size_t>(i)]});
    return p;
}

namespace {

// Internal halfspace coef*m + off >= 0, exact integer data.
struct Row {
    std::vector<Int> coef;
    Int off;
};

Int row_gcd(const Row& row) {
    Int g = abs(row.off);
    for (const Int& c : row.coef) g = gcd(g, c);
    return g;
}

bool is_constant(const Row& row) {
    return std::all_of(row.coef.begin(), row.coef.end(), [](const Int& c) { return c == 0; });
}

// Scale-normalize, drop trivially true constants, fold duplicates and
// dominated rows (same normal: the smallest offset is the tightest).
// Returns false on a constant contradiction (rationally empty system).
bool simplify(std::vector<Row>& rows) {
    std::map<std::vector<Int>, Int> tightest;
    for (Row& row : rows) {
        if (is_constant(row)) {
            if (row.off < 0) return false;
            continue;
        }
        Int g = row_gcd(row);
        if (g > 1) {
            for (Int& c : row.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(row.off.get_mpz_t(), row.off.get_mpz_t(), g.get_mpz_t());
        }
        auto [it, fresh] = tightest.emplace(row.coef, row.off);
        if (!fresh && row.off < it->second) it->second = row.off;
    }
    rows.clear();
    for (auto& [coef, off] : tightest) rows.push_back({coef, off});
    return true;
}

// One Fourier-Motzkin step: project out variable j. Positive/negative
// coefficient pairs combine with positive integer multipliers, so the
// result describes exactly the projection of the solution set.
bool eliminate(std::vector<Row>& rows, std::size_t j) {
    std::vector<Row> out;
    std::vector<const Row*> pos, neg;
    for (const Row& row : rows) {
        if (row.coef[j] == 0)
            out.push_back(row);
        else if (row.coef[j] > 0)
            pos.push_back(&row);
        else
            neg.push_back(&row);
    }
    for (const Row* p : pos)
        for (const Row* q : neg) {
            Row combined;
            combined.coef.resize(p->coef.size());
            const Int a = -q->coef[j]; // > 0
            const Int b = p->coef[j];  // > 0
            for (std::size_t k = 0; k < combined.coef.size(); ++k)
                combined.coef[k] = a * p->coef[k] + b * q->coef[k];
            combined.off = a * p->off + b * q->off;
            out.push_back(std::move(combined));
        }
    rows = std::move(out);
    return simplify(rows);
}

std::int64_t narrow(const Int& v) {
    if (!v.fits_slong_p()) throw ArithmeticOverflow("polytope bound exceeds int64");
    return static_cast<std::int64_t>(v.get_si());
}

} // namespace

BoundsResult certified_bounds(const DivisorPolytope& p) {
    const std::size_t n = static_cast<std::size_t>(p.dim);

    std::vector<Row> base;
    for (const auto& ineq : p.inequalities) {
        Row row;
        row.coef.assign(ineq.normal.begin(), ineq.normal.end());
        row.off = static_cast<long>(ineq.offset);
        base.push_back(std::move(row));
    }
    if (!simplify(base)) return {BoundsStatus::empty, {}};

    BoundsResult result;
    result.box.lower.assign(n, 0);
    result.box.upper.assign(n, 0);
    bool any_unbounded = false;

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Row> proj = base;
        bool feasible = true;
        for (std::size_t k = 0; k < n && feasible; ++k)
            if (k != j) feasible = eliminate(proj, k);
        if (!feasible) return {BoundsStatus::empty, {}};

        bool have_lo = false, have_hi = false;
        Int lo, hi;
        for (const Row& row : proj) {
            const Int& c = row.coef[j];
            Int bound;
            Int num = -row.off;
            if (c > 0) { // x >= ceil(-off/c)
                mpz_cdiv_q(bound.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
                if (!have_lo || bound > lo) lo = bound;
                have_lo = true;
            } else { // x <= floor(-off/c)
                mpz_fdiv_q(bound.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
                if (!have_hi || bound < hi) hi = bound;
                have_hi = true;
            }
        }

        if (!have_lo || !have_hi) {
            // The projection is feasible and one-sided, certifying an
            // unbounded rational direction. Keep scanning: an integer-empty
            // coordinate elsewhere still proves the count is zero.
            any_unbounded = true;
            continue;
        }
        if (lo > hi) return {BoundsStatus::empty, {}};
        result.box.lower[j] = narrow(lo);
        result.box.upper[j] = narrow(hi);
    }

    result.status = any_unbounded ? BoundsStatus::unbounded : BoundsStatus::bounded;
    return result;
}

namespace {

bool satisfies_all(const DivisorPolytope& p, const std::vector<std::int64_t>& m) {
    for (const auto& ineq : p.inequalities) {
        std::int64_t v = ineq.offset;
        for (std::size_t k = 0; k < m.size(); ++k)
            v = checked_add(v, checked_mul(ineq.normal[k], m[k]));
        if (v < 0) return false;
    }
    return true;
}

std::uint64_t box_volume(const CoordinateBounds& box, std::uint64_t budget) {
    std::uint64_t volume = 1;
    for (std::size_t j = 0; j < box.lower.size(); ++j) {
        const std::uint64_t width =
            static_cast<std::uint64_t>(box.upper[j] - box.lower[j]) + 1;
        volume = checked_umul(volume, width);
    }
    if (volume > budget)
        throw BudgetExceeded("polytope box holds " + std::to_string(volume) +
                             " candidate points, budget is " + std::to_string(budget));
    return volume;
}

template <typename Visit>
void walk_box(const CoordinateBounds& box, std::vector<std::int64_t>& m, std::size_t j,
              Visit&& visit) {
    if (j == m.size()) {
        visit(m);
        return;
    }
    for (std::int64_t v = box.lower[j]; v <= box.upper[j]; ++v) {
        m[j] = v;
        walk_box(box, m, j + 1, visit);
    }
}

} // namespace

LatticePointCount count_lattice_points(const DivisorPolytope& p, std::uint64_t budget) {
    BoundsResult bounds = certified_bounds(p);
    if (bounds.status == BoundsStatus::empty) return {false, 0};
    if (bounds.status == BoundsStatus::unbounded) return {true, 0};

    box_volume(bounds.box, budget);
    std::uint64_t count = 0;
    std::vector<std::int64_t> m(static_cast<std::size_t>(p.dim));
    walk_box(bounds.box, m, 0, [&](const std::vector<std::int64_t>& point) {
        if (satisfies_all(p, point)) ++count;
    });
    return {false, count};
}

LatticePointCount h0(const Fan& fan, const ClassGroup& cg, const DivisorClass& c,
                     std::uint64_t budget) {
    return count_lattice_points(polytope_of(fan, cg.representative(c)), budget);
}

std::uint64_t count_effective_divisors(const Fan& fan, const ClassGroup& cg,
                                       const DivisorClass& c, std::uint64_t budget) {
    const TDivisor rep = cg.representative(c);
    const DivisorPolytope poly = polytope_of(fan, rep);

    BoundsResult bounds = certified_bounds(poly);
    if (bounds.status == BoundsStatus::empty) return 0;
    if (bounds.status == BoundsStatus::unbounded)
        throw BudgetExceeded(
            "effective-divisor enumeration does not terminate: polytope unbounded "
            "(fan not complete?)");

    box_volume(bounds.box, budget);
    const int r = fan.ray_count();
    std::uint64_t count = 0;
    std::vector<std::int64_t> m(static_cast<std::size_t>(fan.dim));
    walk_box(bounds.box, m, 0, [&](const std::vector<std::int64_t>& point) {
        // Map the character point to its effective divisor and count it if
        // all coefficients are nonnegative.
        TDivisor b;
        b.coeffs.reserve(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            std::int64_t v = rep.coeffs[static_cast<std::size_t>(i)];
            for (int k = 0; k < fan.dim; ++k)
                v = checked_add(v, checked_mul(fan.rays[static_cast<std::size_t>(i)]
                                                        [static_cast<std::size_t>(k)],
                                               point[static_cast<std::size_t>(k)]));
            if (v < 0) return;
            b.coeffs.push_back(v);
        }
        if (cg.class_of(b) != c)
            throw Error("count_effective_divisors: enumerated divisor left its class");
        ++count;
    });
    return count;
}

} // namespace toricfrob
