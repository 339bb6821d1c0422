#include "toricfrob/classgroup.hpp"

#include <numeric>

#include "toricfrob/checked.hpp"
#include "toricfrob/errors.hpp"

namespace toricfrob {

namespace {

std::int64_t narrow(const Int& v) {
    if (!v.fits_slong_p()) throw ArithmeticOverflow("coordinate exceeds int64");
    return static_cast<std::int64_t>(v.get_si());
}

std::int64_t positive_mod(std::int64_t v, std::int64_t d) {
    std::int64_t m = v % d;
    return m < 0 ? m + d : m;
}

// x with a*x == 1 (mod m), m >= 1, gcd(a, m) == 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, next_t = 1;
    std::int64_t r = m, next_r = positive_mod(a, m);
    while (next_r != 0) {
        const std::int64_t q = r / next_r;
        std::int64_t tmp = t - q * next_t;
        t = next_t;
        next_t = tmp;
        tmp = r - q * next_r;
        r = next_r;
        next_r = tmp;
    }
    return positive_mod(t, m);
}

} // namespace

ClassGroup compute_class_group(const Fan& fan) {
    require_valid(fan);

    const int r = fan.ray_count();
    const int n = fan.dim;

    // Pairing matrix of the class map: row i is ray v_i, acting on
    // characters by m |-> (<m, v_i>)_i. Classes live in the cokernel.
    IntMatrix pairing(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) pairing(i, j) = static_cast<long>(fan.rays[i][j]);

    SmithDecomposition snf = smith_normal_form(pairing);
    if (snf.rank() != static_cast<std::size_t>(n))
        throw ValidationError("invalid fan: RaysDoNotSpan: pairing matrix rank < dim");

    ClassGroup cg;
    cg.r_ = r;
    cg.n_ = n;
    cg.u_ = std::move(snf.U);

    for (int j = 0; j < n; ++j) {
        const Int& d = snf.S(j, j);
        if (d >= 2) {
            cg.torsion_orders_.push_back(narrow(d));
            cg.torsion_rows_.push_back(static_cast<std::size_t>(j));
        }
    }

    // Free coordinate rows of U multiply zero rows of S, so their sign is a
    // free choice; pick the one making each row's first nonzero entry
    // positive. Ray classes of the standard fans then come out nonnegative.
    for (int j = n; j < r; ++j) {
        for (std::size_t col = 0; col < static_cast<std::size_t>(r); ++col) {
            const Int& entry = cg.u_(static_cast<std::size_t>(j), col);
            if (entry == 0) continue;
            if (entry < 0) cg.u_.negate_row(static_cast<std::size_t>(j));
            break;
        }
    }

    cg.u_inverse_ = unimodular_inverse(cg.u_);

    for (int i = 0; i < r; ++i) {
        TDivisor e;
        e.coeffs.assign(static_cast<std::size_t>(r), 0);
        e.coeffs[static_cast<std::size_t>(i)] = 1;
        cg.ray_classes_.push_back(cg.class_of(e));
    }
    return cg;
}

std::uint64_t ClassGroup::order() const {
    if (rank() > 0) return 0;
    std::uint64_t o = 1;
    for (std::int64_t d : torsion_orders_) o = checked_umul(o, static_cast<std::uint64_t>(d));
    return o;
}

DivisorClass ClassGroup::zero() const {
    DivisorClass c;
    c.free.assign(rank(), 0);
    c.torsion.assign(torsion_orders_.size(), 0);
    return c;
}

DivisorClass ClassGroup::class_of(const TDivisor& d) const {
    if (d.coeffs.size() != static_cast<std::size_t>(r_))
        throw Error("class_of: divisor length != ray count");
    std::vector<Int> x(d.coeffs.begin(), d.coeffs.end());
    std::vector<Int> y = u_ * x;

    DivisorClass c;
    c.free.reserve(rank());
    for (int j = n_; j < r_; ++j) c.free.push_back(narrow(y[static_cast<std::size_t>(j)]));
    c.torsion.reserve(torsion_orders_.size());
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i) {
        Int m = y[torsion_rows_[i]] % torsion_orders_[i];
        if (m < 0) m += torsion_orders_[i];
        c.torsion.push_back(narrow(m));
    }
    return c;
}

TDivisor ClassGroup::representative(const DivisorClass& c) const {
    check_member(c);
    std::vector<Int> y(static_cast<std::size_t>(r_));
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i) y[torsion_rows_[i]] = c.torsion[i];
    for (std::size_t j = 0; j < rank(); ++j) y[static_cast<std::size_t>(n_) + j] = c.free[j];
    std::vector<Int> x = u_inverse_ * y;

    TDivisor d;
    d.coeffs.reserve(x.size());
    for (const Int& v : x) d.coeffs.push_back(narrow(v));
    return d;
}

void ClassGroup::check_member(const DivisorClass& c) const {
    if (c.free.size() != rank() || c.torsion.size() != torsion_orders_.size())
        throw Error("divisor class has wrong shape for this group");
    for (std::size_t i = 0; i < c.torsion.size(); ++i)
        if (c.torsion[i] < 0 || c.torsion[i] >= torsion_orders_[i])
            throw Error("torsion coordinate out of canonical range");
}

DivisorClass ClassGroup::add(const DivisorClass& a, const DivisorClass& b) const {
    check_member(a);
    check_member(b);
    DivisorClass c = a;
    accumulate(c, b);
    return c;
}

void ClassGroup::accumulate(DivisorClass& a, const DivisorClass& b) const {
    for (std::size_t j = 0; j < a.free.size(); ++j) a.free[j] = checked_add(a.free[j], b.free[j]);
    for (std::size_t i = 0; i < a.torsion.size(); ++i) {
        a.torsion[i] += b.torsion[i];
        if (a.torsion[i] >= torsion_orders_[i]) a.torsion[i] -= torsion_orders_[i];
    }
}

DivisorClass ClassGroup::negate(const DivisorClass& a) const {
    check_member(a);
    DivisorClass c = a;
    for (auto& v : c.free) v = checked_sub(0, v);
    for (std::size_t i = 0; i < c.torsion.size(); ++i)
        c.torsion[i] = c.torsion[i] == 0 ? 0 : torsion_orders_[i] - c.torsion[i];
    return c;
}

DivisorClass ClassGroup::subtract(const DivisorClass& a, const DivisorClass& b) const {
    return add(a, negate(b));
}

DivisorClass ClassGroup::scale(const DivisorClass& a, std::int64_t k) const {
    check_member(a);
    DivisorClass c = a;
    for (auto& v : c.free) v = checked_mul(v, k);
    for (std::size_t i = 0; i < c.torsion.size(); ++i)
        c.torsion[i] = positive_mod(checked_mul(c.torsion[i], positive_mod(k, torsion_orders_[i])),
                                    torsion_orders_[i]);
    return c;
}

std::vector<DivisorClass> ClassGroup::ell_division_solutions(const DivisorClass& c,
                                                             std::int64_t ell) const {
    check_member(c);
    if (ell < 1) throw Error("ell_division_solutions: ell must be >= 1");

    DivisorClass base = zero();
    for (std::size_t j = 0; j < rank(); ++j) {
        if (c.free[j] % ell != 0) return {};
        base.free[j] = c.free[j] / ell;
    }

    // Per torsion coordinate: ell*e == t (mod d) has gcd(ell, d) solutions
    // when gcd(ell, d) divides t, none otherwise.
    std::vector<std::vector<std::int64_t>> torsion_choices;
    for (std::size_t i = 0; i < torsion_orders_.size(); ++i) {
        const std::int64_t d = torsion_orders_[i];
        const std::int64_t t = c.torsion[i];
        const std::int64_t g = std::gcd(ell, d);
        if (t % g != 0) return {};
        const std::int64_t step = d / g;
        const std::int64_t e0 =
            positive_mod(mod_inverse(ell / g, step) * ((t / g) % step), step);
        std::vector<std::int64_t> choices;
        for (std::int64_t s = 0; s < g; ++s) choices.push_back(e0 + s * step);
        torsion_choices.push_back(std::move(choices));
    }

    std::vector<DivisorClass> out;
    std::vector<std::size_t> idx(torsion_choices.size(), 0);
    for (;;) {
        DivisorClass e = base;
        for (std::size_t i = 0; i < idx.size(); ++i) e.torsion[i] = torsion_choices[i][idx[i]];
        out.push_back(std::move(e));
        std::size_t i = idx.size();
        while (i > 0) {
            --i;
            if (++idx[i] < torsion_choices[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (idx.empty()) return out;
    }
}

} // namespace toricfrob
