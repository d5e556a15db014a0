#include "nkwalk/genetics.hpp"

#include <algorithm>

#include "nkwalk/errors.hpp"

namespace nkwalk {

Genome flip_loci(const Genome& genome, const MutationPlan& plan) {
    if (plan.empty()) throw ParameterError("mutation plan must name at least one locus");
    Genome out = genome;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (plan[i] == plan[j]) throw ParameterError("mutation plan loci must be distinct");
        out.flip(plan[i]);
    }
    return out;
}

MutationPlan draw_distinct_loci(std::uint32_t n, std::uint32_t count,
                                std::span<const std::uint32_t> exclude, Xoshiro256& rng) {
    if (count == 0) throw ParameterError("locus count must be at least 1");
    if (static_cast<std::uint64_t>(count) + exclude.size() > n)
        throw ParameterError("not enough free loci: count + |exclude| exceeds n");
    for (const auto locus : exclude)
        if (locus >= n) throw ParameterError("exclude locus out of range");

    MutationPlan plan;
    plan.reserve(count);
    while (plan.size() < count) {
        const auto candidate = static_cast<std::uint32_t>(rng.next_below(n));
        if (std::find(exclude.begin(), exclude.end(), candidate) != exclude.end()) continue;
        if (std::find(plan.begin(), plan.end(), candidate) != plan.end()) continue;
        plan.push_back(candidate);
    }
    return plan;
}

std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, std::uint32_t cut) {
    if (a.size() != b.size()) throw ParameterError("crossover needs equal genome lengths");
    if (cut < 1 || cut >= a.size()) throw ParameterError("cut must lie in [1, n-1]");
    Genome child1 = a;
    Genome child2 = b;
    for (std::size_t i = cut; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            child1.flip(i);
            child2.flip(i);
        }
    }
    return {std::move(child1), std::move(child2)};
}

std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, Xoshiro256& rng) {
    if (a.size() != b.size()) throw ParameterError("crossover needs equal genome lengths");
    if (a.size() < 2) throw ParameterError("single point crossover needs n >= 2");
    const auto cut = static_cast<std::uint32_t>(1 + rng.next_below(a.size() - 1));
    return single_point_crossover(a, b, cut);
}

std::pair<Genome, Genome> uniform_crossover(const Genome& a, const Genome& b, Xoshiro256& rng) {
    if (a.size() != b.size()) throw ParameterError("crossover needs equal genome lengths");
    Genome child1 = a;
    Genome child2 = b;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (rng.next_bit() && a[i] != b[i]) {
            child1.flip(i);
            child2.flip(i);
        }
    }
    return {std::move(child1), std::move(child2)};
}

std::pair<Genome, Genome> recombine(const Genome& a, const Genome& b, CrossoverKind kind, Xoshiro256& rng) {
    switch (kind) {
        case CrossoverKind::None: return {a, b};
        case CrossoverKind::SinglePoint: return single_point_crossover(a, b, rng);
        case CrossoverKind::Uniform: return uniform_crossover(a, b, rng);
    }
    throw ParameterError("unknown crossover kind");
}

}  // namespace nkwalk
