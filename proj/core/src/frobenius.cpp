#include "toricfrob/frobenius.hpp"

#include <numeric>
#include <thread>

#include "toricfrob/checked.hpp"

namespace toricfrob {

namespace {

void require_ell(std::int64_t ell) {
    if (ell < 1) throw Error("Frobenius degree ell must be >= 1");
}

// Depth-first walk of the cube, keeping the running class of the partial
// point; one group addition per visited node.
void enumerate_cube(const ClassGroup& cg, std::int64_t ell, int depth,
                    DivisorClass& partial, std::map<DivisorClass, std::uint64_t>& counts) {
    const int r = cg.ray_count();
    if (depth == r) {
        auto it = counts.find(partial);
        if (it == counts.end())
            counts.emplace(partial, 1);
        else
            ++it->second;
        return;
    }
    const DivisorClass saved = partial;
    const DivisorClass& step = cg.ray_class(depth);
    for (std::int64_t a = 0;;) {
        enumerate_cube(cg, ell, depth + 1, partial, counts);
        if (++a == ell) break;
        cg.accumulate(partial, step);
    }
    partial = saved;
}

} // namespace

ClassDistribution class_distribution_cube(const ClassGroup& cg, std::int64_t ell,
                                          std::uint64_t budget) {
    require_ell(ell);
    const int r = cg.ray_count();
    const std::uint64_t points =
        checked_upow(static_cast<std::uint64_t>(ell), static_cast<unsigned>(r));
    if (points > budget)
        throw BudgetExceeded("cube enumeration needs " + std::to_string(points) +
                             " points, budget is " + std::to_string(budget) +
                             " (the convolution algorithm has no such limit)");

    ClassDistribution dist;
    dist.total = points;

    unsigned workers = std::thread::hardware_concurrency();
    if (workers > static_cast<std::uint64_t>(ell)) workers = static_cast<unsigned>(ell);
    if (points < 100'000 || workers < 2) {
        DivisorClass partial = cg.zero();
        enumerate_cube(cg, ell, 0, partial, dist.counts);
        return dist;
    }

    // Split the first digit's range across threads; counts add up to the
    // same totals in any order, so the merge reproduces the sequential map.
    std::vector<std::map<DivisorClass, std::uint64_t>> parts(workers);
    std::vector<std::thread> threads;
    const DivisorClass& step = cg.ray_class(0);
    for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t lo = ell * w / workers;
        const std::int64_t hi = ell * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] {
            DivisorClass partial = cg.scale(step, lo);
            for (std::int64_t a = lo; a < hi; ++a) {
                enumerate_cube(cg, ell, 1, partial, parts[w]);
                cg.accumulate(partial, step);
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& part : parts)
        for (const auto& [c, k] : part) dist.counts[c] += k;
    return dist;
}

ClassDistribution class_distribution_convolution(const ClassGroup& cg, std::int64_t ell) {
    require_ell(ell);

    ClassDistribution dist;
    dist.counts.emplace(cg.zero(), 1);
    dist.total = 1;

    for (int i = 0; i < cg.ray_count(); ++i) {
        // Factor for ray i: the classes of 0, L(e_i), ..., (ell-1) L(e_i).
        // Collisions (torsion) accumulate into coefficients.
        std::map<DivisorClass, std::uint64_t> factor;
        DivisorClass term = cg.zero();
        for (std::int64_t a = 0;;) {
            ++factor[term];
            if (++a == ell) break;
            cg.accumulate(term, cg.ray_class(i));
        }

        std::map<DivisorClass, std::uint64_t> next;
        for (const auto& [c, m] : dist.counts)
            for (const auto& [k, f] : factor) {
                auto& slot = next[cg.add(c, k)];
                slot = checked_uadd(slot, checked_umul(m, f));
            }
        dist.counts = std::move(next);
        dist.total = checked_umul(dist.total, static_cast<std::uint64_t>(ell));
    }
    return dist;
}

std::uint64_t multiplicity(const ClassGroup& cg, const ClassDistribution& dist,
                           const DivisorClass& D, const DivisorClass& E, std::int64_t ell) {
    require_ell(ell);
    return dist.count(cg.subtract(D, cg.scale(E, ell)));
}

Decomposition decompose_from_distribution(const ClassGroup& cg, const ClassDistribution& dist,
                                          const DivisorClass& D, std::int64_t ell) {
    require_ell(ell);

    Decomposition dec;
    dec.source = D;
    dec.ell = ell;
    for (std::int64_t d : cg.torsion_orders())
        if (std::gcd(ell, d) > 1) dec.ell_shares_torsion = true;

    // Each class c in the cube distribution feeds every E with ell*E = D - c;
    // distinct c give distinct E, so assignment and accumulation agree.
    for (const auto& [c, count] : dist.counts) {
        for (const DivisorClass& e : cg.ell_division_solutions(cg.subtract(D, c), ell)) {
            auto& slot = dec.multiplicities[e];
            slot = checked_uadd(slot, count);
            dec.rank = checked_uadd(dec.rank, count);
        }
    }
    return dec;
}

Decomposition decompose(const ClassGroup& cg, const DivisorClass& D, std::int64_t ell,
                        const DecomposeOptions& options) {
    ClassDistribution dist = options.algorithm == DistributionAlgorithm::cube
                                 ? class_distribution_cube(cg, ell, options.cube_budget)
                                 : class_distribution_convolution(cg, ell);
    return decompose_from_distribution(cg, dist, D, ell);
}

} // namespace toricfrob
