#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nkwalk/genetics.hpp"
#include "nkwalk/genome.hpp"
#include "nkwalk/landscape.hpp"
#include "nkwalk/rng.hpp"

namespace nkwalk {

enum class Dominance { Average, RandomDominant, HaploidWeighted };

// Rule blending the member genomes' fitnesses into one cell fitness.
// HaploidWeighted gives a freshly drawn member a `haploid_weight` share and
// the plain average the rest.
struct DominanceMode {
    Dominance kind = Dominance::Average;
    double haploid_weight = 0.5;
};

enum class Mode { Baseline, BaldwinLearning, Endomitosis, Syngamy, TwoStepMeiosis, AsexualDiploid };

// Discriminated reproduction regime. Only the fields of the active mode are
// read; the rest keep their defaults.
struct StrategyConfig {
    Mode mode = Mode::Baseline;
    // BaldwinLearning
    std::uint32_t learn_flips = 1;      // extra mutations in the learned configuration
    double learned_weight = 0.5;        // its share in the blended candidate fitness
    std::uint32_t learning_period = 1;  // learn on generations with index % period == 0
    // Endomitosis
    std::uint32_t ploidy = 2;           // 2, 4 or 8
    // TwoStepMeiosis
    CrossoverKind crossover = CrossoverKind::SinglePoint;
    DominanceMode dominance;
    std::uint32_t asexual_ratio = 0;    // asexual generations per sexual one
    // AsexualDiploid
    bool best_of_three = false;

    std::uint32_t initial_ploidy() const noexcept;
    void validate(std::uint32_t n) const;  // throws ConfigError
};

// Canonical short id, e.g. "baldwin_L3_w0.5_p1" or "meiosis_sp_avg_r0".
std::string strategy_label(const StrategyConfig& config);

// The converged species: 1-8 genomes plus the scalar fitness selection
// compares against. `parent_index` names the member an accepted endomitosis
// step selected as the next generation's base; other modes ignore it.
struct SpeciesState {
    std::vector<Genome> genomes;
    double stored_fitness = 0.0;
    std::size_t parent_index = 0;
};

// Cell fitness of 1-8 member genomes under the dominance rule. A single
// member yields its plain fitness under every rule.
double evaluate_cell(std::span<const Genome> genomes, const NkLandscape& landscape,
                     const DominanceMode& dominance, Xoshiro256& rng);

// --- candidate builders ---------------------------------------------------
// Exposed so their shape invariants (flip-loci distinctness, Hamming
// multisets, gamete pool composition) can be checked directly. All loci
// flipped within one proposal are distinct. Draw order is part of the replay
// contract: mutation loci first, then crossover draws, then member choices.

struct BaldwinProposal {
    Genome mutant;   // one flip from the parent
    Genome learned;  // learn_flips further distinct flips on top of the mutant
};
BaldwinProposal propose_baldwin(const Genome& genome, std::uint32_t learn_flips, Xoshiro256& rng);

// Copy-and-mutate doubling rounds from one flipped base; result[0] is the
// first mutant. Hamming distances from it: {0,1}, {0,1,1,2} or
// {0,1,1,1,2,2,2,3} for ploidy 2, 4, 8.
std::vector<Genome> propose_endomitosis(const Genome& base, std::uint32_t ploidy, Xoshiro256& rng);

// Each offspring copies a uniformly chosen parent (with replacement) and is
// mutated at one locus; per offspring the parent is drawn before the locus.
std::array<Genome, 2> propose_syngamy(const Genome& a, const Genome& b, Xoshiro256& rng);

struct MeiosisProposal {
    std::array<Genome, 4> gametes;      // parent a, parent b, recombinant 1, recombinant 2
    std::array<std::uint8_t, 2> chosen; // indices of the gamete pair drawn (2 of 4, no replacement)
};
MeiosisProposal propose_meiosis(const Genome& a, const Genome& b, CrossoverKind kind, Xoshiro256& rng);

// One fresh mutation in each haploid of the diploid.
std::array<Genome, 2> propose_asexual_offspring(const Genome& a, const Genome& b, Xoshiro256& rng);

// --- generation steps -----------------------------------------------------
// Each step builds one candidate, evaluates it, and replaces the state only
// on strict improvement of stored_fitness. Returns whether the state moved.

bool baseline_step(SpeciesState& state, const NkLandscape& landscape, Xoshiro256& rng);
bool baldwin_step(SpeciesState& state, const NkLandscape& landscape, std::uint32_t learn_flips,
                  double learned_weight, Xoshiro256& rng);
bool endomitosis_step(SpeciesState& state, const NkLandscape& landscape, std::uint32_t ploidy,
                      Xoshiro256& rng);
bool syngamy_step(SpeciesState& state, const NkLandscape& landscape, Xoshiro256& rng);
bool meiosis_two_step(SpeciesState& state, const NkLandscape& landscape, CrossoverKind kind,
                      const DominanceMode& dominance, Xoshiro256& rng);
bool asexual_diploid_step(SpeciesState& state, const NkLandscape& landscape, bool best_of_three,
                          Xoshiro256& rng);

// Dispatches one generation of `config`. BaldwinLearning learns only on
// generations with index % learning_period == 0 and hill-climbs otherwise;
// TwoStepMeiosis with ratio R runs R asexual generations then one sexual
// (cycle length R+1, sexual last).
bool apply_generation(SpeciesState& state, const StrategyConfig& config, const NkLandscape& landscape,
                      std::uint64_t generation_index, Xoshiro256& rng);

// Species at generation 0: `start` duplicated to the mode's initial ploidy,
// stored fitness = the genome's plain fitness.
SpeciesState initial_state(const Genome& start, const StrategyConfig& config,
                           const NkLandscape& landscape);

}  // namespace nkwalk
