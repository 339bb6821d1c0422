#include "toricfrob/fan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "toricfrob/errors.hpp"
#include "toricfrob/lattice.hpp"

namespace toricfrob {

const char* to_string(FanIssue issue) {
    switch (issue) {
        case FanIssue::NonPrimitiveRay: return "NonPrimitiveRay";
        case FanIssue::DuplicateRay: return "DuplicateRay";
        case FanIssue::RaysDoNotSpan: return "RaysDoNotSpan";
        case FanIssue::EmptyConeCover: return "EmptyConeCover";
        case FanIssue::InvalidRayIndex: return "InvalidRayIndex";
        case FanIssue::RedundantCone: return "RedundantCone";
    }
    return "?";
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << to_string(violations[i].issue) << ": " << violations[i].detail;
    }
    return os.str();
}

namespace {

std::int64_t vector_gcd(const std::vector<std::int64_t>& v) {
    std::int64_t g = 0;
    for (std::int64_t x : v) g = std::gcd(g, x);
    return g;
}

IntMatrix rows_matrix(const std::vector<std::vector<std::int64_t>>& rows, int dim) {
    IntMatrix m(rows.size(), static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    return m;
}

std::size_t matrix_rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

ValidationReport validate(const Fan& fan) {
    ValidationReport report;
    auto flag = [&](FanIssue issue, std::string detail) {
        report.violations.push_back({issue, std::move(detail)});
    };

    const int r = fan.ray_count();

    bool rays_well_formed = true;
    for (int i = 0; i < r; ++i) {
        const auto& ray = fan.rays[i];
        if (static_cast<int>(ray.size()) != fan.dim) {
            flag(FanIssue::NonPrimitiveRay, "ray " + std::to_string(i) + " has wrong dimension");
            rays_well_formed = false;
            continue;
        }
        if (vector_gcd(ray) != 1)
            flag(FanIssue::NonPrimitiveRay,
                 "ray " + std::to_string(i) + " is zero or not primitive");
    }

    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (fan.rays[i] == fan.rays[j])
                flag(FanIssue::DuplicateRay,
                     "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    if (rays_well_formed) {
        if (matrix_rank(rows_matrix(fan.rays, fan.dim)) != static_cast<std::size_t>(fan.dim))
            flag(FanIssue::RaysDoNotSpan, "ray matrix rank < ambient dimension " +
                                              std::to_string(fan.dim));
    }

    bool indices_ok = true;
    for (std::size_t k = 0; k < fan.max_cones.size(); ++k)
        for (int idx : fan.max_cones[k])
            if (idx < 0 || idx >= r) {
                flag(FanIssue::InvalidRayIndex,
                     "cone " + std::to_string(k) + " references ray " + std::to_string(idx));
                indices_ok = false;
            }

    if (indices_ok) {
        std::vector<bool> covered(r, false);
        for (const auto& cone : fan.max_cones)
            for (int idx : cone) covered[idx] = true;
        for (int i = 0; i < r; ++i)
            if (!covered[i])
                flag(FanIssue::EmptyConeCover,
                     "ray " + std::to_string(i) + " appears in no maximal cone");

        for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
            for (std::size_t b = 0; b < fan.max_cones.size(); ++b)
                if (a != b && is_subset(fan.max_cones[a], fan.max_cones[b])) {
                    flag(FanIssue::RedundantCone, "cone " + std::to_string(a) +
                                                      " is contained in cone " + std::to_string(b));
                    b = fan.max_cones.size(); // one report per offender
                }
    }

    return report;
}

void require_valid(const Fan& fan) {
    ValidationReport report = validate(fan);
    if (!report.ok()) throw ValidationError("invalid fan: " + report.summary());
}

namespace {

IntMatrix cone_matrix(const Fan& fan, const std::vector<int>& cone) {
    IntMatrix m(cone.size(), static_cast<std::size_t>(fan.dim));
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (int j = 0; j < fan.dim; ++j) m(i, j) = static_cast<long>(fan.rays[cone[i]][j]);
    return m;
}

} // namespace

bool is_simplicial(const Fan& fan) {
    require_valid(fan);
    for (const auto& cone : fan.max_cones)
        if (matrix_rank(cone_matrix(fan, cone)) != cone.size()) return false;
    return true;
}

bool is_smooth(const Fan& fan) {
    require_valid(fan);
    for (const auto& cone : fan.max_cones) {
        SmithDecomposition d = smith_normal_form(cone_matrix(fan, cone));
        if (d.rank() != cone.size()) return false;
        for (const Int& f : d.invariant_factors)
            if (f != 1) return false;
    }
    return true;
}

Completeness completeness(const Fan& fan) {
    require_valid(fan);

    // Only decidable here for pure full-dimensional simplicial fans.
    for (const auto& cone : fan.max_cones) {
        if (static_cast<int>(cone.size()) != fan.dim) return Completeness::unknown;
        if (matrix_rank(cone_matrix(fan, cone)) != cone.size()) return Completeness::unknown;
    }

    // Facets are the (dim-1)-subsets of each cone's rays.
    std::map<std::vector<int>, std::vector<std::size_t>> facet_cones;
    for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
        const auto& cone = fan.max_cones[k];
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> facet;
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != drop) facet.push_back(cone[i]);
            facet_cones[facet].push_back(k);
        }
    }

    for (const auto& [facet, cones] : facet_cones)
        if (cones.size() != 2) return Completeness::incomplete;

    // Connectivity through shared facets.
    const std::size_t nc = fan.max_cones.size();
    if (nc == 0) return Completeness::incomplete;
    std::vector<std::size_t> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [facet, cones] : facet_cones) parent[find(cones[0])] = find(cones[1]);
    for (std::size_t k = 0; k < nc; ++k)
        if (find(k) != find(0)) return Completeness::incomplete;

    return Completeness::complete;
}

const char* to_string(Completeness c) {
    switch (c) {
        case Completeness::complete: return "complete";
        case Completeness::incomplete: return "incomplete";
        case Completeness::unknown: return "unknown";
    }
    return "?";
}

Fan projective_space(int n) {
    if (n < 1) throw UnknownBuiltin("projective_space(n) needs n >= 1");
    Fan fan;
    fan.dim = n;
    fan.name = "projective_space(" + std::to_string(n) + ")";
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        fan.rays.push_back(std::move(e));
    }
    fan.rays.push_back(std::vector<std::int64_t>(n, -1));
    // Maximal cones: all n-subsets of the n+1 rays.
    for (int omit = n; omit >= 0; --omit) {
        std::vector<int> cone;
        for (int i = 0; i <= n; ++i)
            if (i != omit) cone.push_back(i);
        fan.max_cones.push_back(std::move(cone));
    }
    return fan;
}

Fan product_p1_p1() {
    Fan fan;
    fan.dim = 2;
    fan.name = "product_p1_p1";
    fan.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    fan.max_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return fan;
}

Fan hirzebruch(int a) {
    if (a < 0) throw UnknownBuiltin("hirzebruch(a) needs a >= 0");
    Fan fan;
    fan.dim = 2;
    fan.name = "hirzebruch(" + std::to_string(a) + ")";
    fan.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return fan;
}

Fan weighted_p112() {
    Fan fan;
    fan.dim = 2;
    fan.name = "weighted_p112";
    fan.rays = {{1, 0}, {0, 1}, {-1, -2}};
    fan.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    return fan;
}

Fan quadric_cone() {
    Fan fan;
    fan.dim = 2;
    fan.name = "quadric_cone";
    fan.rays = {{1, 1}, {1, -1}};
    fan.max_cones = {{0, 1}};
    return fan;
}

namespace {

std::optional<int> parse_int_argument(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() + 2) return std::nullopt;
    if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
    const std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    if (inner.empty()) return std::nullopt;
    for (char ch : inner)
        if (!isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    try {
        return std::stoi(inner);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace

Fan builtin_fan(const std::string& name) {
    if (auto n = parse_int_argument(name, "projective_space")) return projective_space(*n);
    if (auto a = parse_int_argument(name, "hirzebruch")) return hirzebruch(*a);
    if (name == "product_p1_p1") return product_p1_p1();
    if (name == "weighted_p112") return weighted_p112();
    if (name == "quadric_cone") return quadric_cone();
    throw UnknownBuiltin("unknown builtin fan: " + name);
}

std::vector<std::string> builtin_fan_names() {
    return {"projective_space(n)", "product_p1_p1", "hirzebruch(a)", "weighted_p112",
            "quadric_cone"};
}

} // namespace toricfrob
