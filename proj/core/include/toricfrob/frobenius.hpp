#pragma once

#include <cstdint>
#include <map>

#include "toricfrob/classgroup.hpp"
#include "toricfrob/errors.hpp"

namespace toricfrob {

/// How the points of the cube {0,...,ell-1}^rays distribute over the class
/// group: counts[c] = number of cube points whose class is c. The total is
/// always ell^rays.
struct ClassDistribution {
    std::map<DivisorClass, std::uint64_t> counts;
    std::uint64_t total = 0;

    std::uint64_t count(const DivisorClass& c) const {
        auto it = counts.find(c);
        return it == counts.end() ? 0 : it->second;
    }

    bool operator==(const ClassDistribution&) const = default;
};

/// Trusted oracle: enumerate every cube point and take its class. Cost is
/// ell^rays points, gated by the budget. May run split across threads; the
/// merged result is identical to the sequential one.
ClassDistribution class_distribution_cube(const ClassGroup& cg, std::int64_t ell,
                                          std::uint64_t budget = default_enumeration_budget);

/// Production path: the same distribution as the sparse product, over the
/// class group, of one ell-term factor {0, L(e_i), ..., (ell-1)L(e_i)} per
/// ray. Exact, no truncation; cost scales with intermediate support sizes.
ClassDistribution class_distribution_convolution(const ClassGroup& cg, std::int64_t ell);

/// The multiplicity of the twist E inside the pushforward of D: the number
/// of cube points representing D - ell*E.
std::uint64_t multiplicity(const ClassGroup& cg, const ClassDistribution& dist,
                           const DivisorClass& D, const DivisorClass& E, std::int64_t ell);

/// Pushforward decomposition of the sheaf of class `source` under the
/// degree-ell toric Frobenius: a finite sum of class-E summands, each with
/// positive multiplicity. rank is the multiplicity total (= ell^dim on fans
/// whose rays span).
struct Decomposition {
    DivisorClass source;
    std::int64_t ell = 1;
    std::map<DivisorClass, std::uint64_t> multiplicities;
    std::uint64_t rank = 0;
    /// Set when gcd(ell, d_i) > 1 for some torsion order d_i; the
    /// composition identity is only asserted without shared torsion.
    bool ell_shares_torsion = false;

    bool operator==(const Decomposition&) const = default;
};

enum class DistributionAlgorithm { convolution, cube };

struct DecomposeOptions {
    DistributionAlgorithm algorithm = DistributionAlgorithm::convolution;
    std::uint64_t cube_budget = default_enumeration_budget;
};

Decomposition decompose(const ClassGroup& cg, const DivisorClass& D, std::int64_t ell,
                        const DecomposeOptions& options = {});

/// Same, reusing an already-computed distribution for this (cg, ell).
Decomposition decompose_from_distribution(const ClassGroup& cg, const ClassDistribution& dist,
                                          const DivisorClass& D, std::int64_t ell);

} // namespace toricfrob
