#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nkwalk/genome.hpp"
#include "nkwalk/rng.hpp"

namespace nkwalk {

// Distinct loci to complement in one mutation event.
using MutationPlan = std::vector<std::uint32_t>;

enum class CrossoverKind { None, SinglePoint, Uniform };

// Copy of `genome` with exactly the planned loci complemented.
Genome flip_loci(const Genome& genome, const MutationPlan& plan);

// `count` distinct loci drawn uniformly without replacement from
// {0..n-1} \ exclude. `exclude` must itself be duplicate-free.
MutationPlan draw_distinct_loci(std::uint32_t n, std::uint32_t count,
                                std::span<const std::uint32_t> exclude, Xoshiro256& rng);

// child1 = a[0..cut) ++ b[cut..n), child2 the complement. Valid cuts are
// 1..n-1 so every crossover event can actually recombine.
std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, std::uint32_t cut);
// Cut drawn uniformly from [1, n-1].
std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, Xoshiro256& rng);

// Each locus swapped between the children with probability 1/2; the two
// children are complementary draws, so per-locus allele multisets are
// conserved. One rng bit per locus, in locus order.
std::pair<Genome, Genome> uniform_crossover(const Genome& a, const Genome& b, Xoshiro256& rng);

// Dispatch on `kind`; None returns the inputs unchanged and draws nothing.
std::pair<Genome, Genome> recombine(const Genome& a, const Genome& b, CrossoverKind kind, Xoshiro256& rng);

}  // namespace nkwalk
