#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "toricfrob/fan.hpp"
#include "toricfrob/lattice.hpp"

namespace toricfrob {

/// Torus-invariant divisor: one integer coefficient per ray, in ray order.
struct TDivisor {
    std::vector<std::int64_t> coeffs;

    auto operator<=>(const TDivisor&) const = default;
};

/// Element of the divisor class group in canonical coordinates:
/// free part in Z^rank, torsion part reduced into [0, d_i).
struct DivisorClass {
    std::vector<std::int64_t> free;
    std::vector<std::int64_t> torsion;

    auto operator<=>(const DivisorClass&) const = default;
};

/// The divisor class group of a fan, presented as
/// Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, all d_i >= 2,
/// together with the projection Z^rays -> classes and a section of it.
class ClassGroup {
public:
    int ray_count() const { return r_; }
    int ambient_dim() const { return n_; }
    std::size_t rank() const { return static_cast<std::size_t>(r_ - n_); }
    const std::vector<std::int64_t>& torsion_orders() const { return torsion_orders_; }
    bool torsion_free() const { return torsion_orders_.empty(); }

    /// Total number of classes; 0 means infinite (rank > 0).
    std::uint64_t order() const;

    DivisorClass zero() const;
    /// The class map L applied to a divisor.
    DivisorClass class_of(const TDivisor& d) const;
    /// Class of the i-th ray divisor, precomputed.
    const DivisorClass& ray_class(int i) const { return ray_classes_[i]; }

    /// Deterministic section of the class map: class_of(representative(c)) == c.
    TDivisor representative(const DivisorClass& c) const;

    DivisorClass add(const DivisorClass& a, const DivisorClass& b) const;
    DivisorClass negate(const DivisorClass& a) const;
    DivisorClass subtract(const DivisorClass& a, const DivisorClass& b) const;
    DivisorClass scale(const DivisorClass& a, std::int64_t k) const;

    /// In-place a += b, for enumeration hot paths.
    void accumulate(DivisorClass& a, const DivisorClass& b) const;

    /// All E with scale(E, ell) == c, sorted. Size is 0 or the product of
    /// gcd(ell, d_i) over the torsion orders.
    std::vector<DivisorClass> ell_division_solutions(const DivisorClass& c,
                                                     std::int64_t ell) const;

    friend ClassGroup compute_class_group(const Fan& fan);

private:
    void check_member(const DivisorClass& c) const;

    int r_ = 0;
    int n_ = 0;
    std::vector<std::int64_t> torsion_orders_;
    std::vector<std::size_t> torsion_rows_; // rows of U giving torsion coordinates
    IntMatrix u_;                           // canonical coordinates: y = U x
    IntMatrix u_inverse_;
    std::vector<DivisorClass> ray_classes_;
};

/// Presentation of Cl = Z^rays / (row span of the ray pairing matrix),
/// canonical coordinates derived from the Smith normal form.
ClassGroup compute_class_group(const Fan& fan);

} // namespace toricfrob
