#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricfrob {

/// A fan given combinatorially: primitive ray generators in Z^dim plus the
/// maximal cones as sets of ray indices. Cone-geometry consistency (cones
/// meeting in faces) is deliberately not modelled; every computation here
/// uses only the rays and the cone index sets.
struct Fan {
    int dim = 0;
    std::vector<std::vector<std::int64_t>> rays;
    std::vector<std::vector<int>> max_cones; // each sorted ascending, no repeats
    std::string name;
    std::optional<bool> assert_complete; // user override for the completeness gate

    int ray_count() const { return static_cast<int>(rays.size()); }

    bool operator==(const Fan&) const = default;
};

enum class FanIssue {
    NonPrimitiveRay,
    DuplicateRay,
    RaysDoNotSpan,
    EmptyConeCover,
    InvalidRayIndex,
    RedundantCone,
};

const char* to_string(FanIssue issue);

struct FanViolation {
    FanIssue issue;
    std::string detail;
};

struct ValidationReport {
    std::vector<FanViolation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Pure and idempotent; reports every violated invariant, not just the first.
ValidationReport validate(const Fan& fan);

/// Throws ValidationError naming the violations if the fan is invalid.
void require_valid(const Fan& fan);

/// Every maximal cone's rays linearly independent.
bool is_simplicial(const Fan& fan);

/// Every maximal cone's rays extend to a Z-basis (all invariant factors 1).
bool is_smooth(const Fan& fan);

enum class Completeness { complete, incomplete, unknown };

/// Decided by facet pairing for pure full-dimensional simplicial fans:
/// complete iff every (dim-1)-face occurs in exactly two maximal cones and
/// the cones are connected through shared facets. Anything else is unknown.
Completeness completeness(const Fan& fan);

const char* to_string(Completeness c);

// Standard example fans.
Fan projective_space(int n);
Fan product_p1_p1();
Fan hirzebruch(int a);
Fan weighted_p112();
Fan quadric_cone();

/// Resolves "projective_space(2)", "hirzebruch(3)", "product_p1_p1",
/// "weighted_p112", "quadric_cone". Throws UnknownBuiltin.
Fan builtin_fan(const std::string& name);

/// Names accepted by builtin_fan, for help text.
std::vector<std::string> builtin_fan_names();

} // namespace toricfrob
