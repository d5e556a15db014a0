#include "nkwalk/strategies.hpp"

#include <algorithm>
#include <utility>

#include "nkwalk/errors.hpp"
#include "nkwalk/textio.hpp"

namespace nkwalk {

namespace {

void require_members(const SpeciesState& state, std::size_t count, const char* op) {
    if (state.genomes.size() != count)
        throw ParameterError(std::string(op) + ": species must hold exactly " +
                             std::to_string(count) + " genome(s)");
}

double mean_fitness(std::span<const Genome> genomes, const NkLandscape& landscape) {
    double sum = 0.0;
    for (const auto& g : genomes) sum += landscape.fitness(g);
    return sum / static_cast<double>(genomes.size());
}

}  // namespace

std::uint32_t StrategyConfig::initial_ploidy() const noexcept {
    switch (mode) {
        case Mode::Baseline:
        case Mode::BaldwinLearning:
        case Mode::Endomitosis:
            return 1;
        case Mode::Syngamy:
        case Mode::TwoStepMeiosis:
        case Mode::AsexualDiploid:
            return 2;
    }
    return 1;
}

void StrategyConfig::validate(std::uint32_t n) const {
    switch (mode) {
        case Mode::Baseline:
            break;
        case Mode::BaldwinLearning:
            if (learn_flips < 1 || learn_flips > n - 1)
                throw ConfigError("learning flips must lie in [1, n-1]");
            if (!(learned_weight > 0.0) || !(learned_weight <= 1.0))
                throw ConfigError("learned weight must lie in (0,1]");
            if (learning_period == 0) throw ConfigError("learning period must be positive");
            break;
        case Mode::Endomitosis:
            if (ploidy != 2 && ploidy != 4 && ploidy != 8)
                throw ConfigError("endomitosis ploidy must be 2, 4 or 8");
            if (ploidy > n) throw ConfigError("ploidy exceeds n: not enough distinct loci");
            break;
        case Mode::Syngamy:
        case Mode::AsexualDiploid:
            if (n < 2) throw ConfigError("two-genome modes need n >= 2");
            break;
        case Mode::TwoStepMeiosis:
            if (n < 2) throw ConfigError("two-genome modes need n >= 2");
            if (dominance.kind == Dominance::HaploidWeighted &&
                (!(dominance.haploid_weight >= 0.0) || !(dominance.haploid_weight <= 1.0)))
                throw ConfigError("haploid weight must lie in [0,1]");
            break;
        default:
            throw ConfigError("unknown strategy mode");
    }
}

std::string strategy_label(const StrategyConfig& config) {
    switch (config.mode) {
        case Mode::Baseline:
            return "baseline";
        case Mode::BaldwinLearning:
            return "baldwin_L" + std::to_string(config.learn_flips) + "_w" +
                   format_double(config.learned_weight) + "_p" + std::to_string(config.learning_period);
        case Mode::Endomitosis:
            return "endomitosis_p" + std::to_string(config.ploidy);
        case Mode::Syngamy:
            return "syngamy";
        case Mode::TwoStepMeiosis: {
            std::string label = "meiosis_";
            switch (config.crossover) {
                case CrossoverKind::None: label += "none"; break;
                case CrossoverKind::SinglePoint: label += "sp"; break;
                case CrossoverKind::Uniform: label += "uni"; break;
            }
            switch (config.dominance.kind) {
                case Dominance::Average: label += "_avg"; break;
                case Dominance::RandomDominant: label += "_rand"; break;
                case Dominance::HaploidWeighted:
                    label += "_hw" + format_double(config.dominance.haploid_weight);
                    break;
            }
            return label + "_r" + std::to_string(config.asexual_ratio);
        }
        case Mode::AsexualDiploid:
            return config.best_of_three ? "asexual_diploid_best3" : "asexual_diploid";
    }
    return "unknown";
}

double evaluate_cell(std::span<const Genome> genomes, const NkLandscape& landscape,
                     const DominanceMode& dominance, Xoshiro256& rng) {
    if (genomes.empty()) throw ParameterError("evaluate_cell: empty genome list");
    if (genomes.size() > 8) throw ParameterError("evaluate_cell: more than 8 genomes");
    switch (dominance.kind) {
        case Dominance::Average:
            return mean_fitness(genomes, landscape);
        case Dominance::RandomDominant:
            return landscape.fitness(genomes[rng.next_below(genomes.size())]);
        case Dominance::HaploidWeighted: {
            const double lambda = dominance.haploid_weight;
            if (!(lambda >= 0.0) || !(lambda <= 1.0))
                throw ParameterError("haploid weight must lie in [0,1]");
            double sum = 0.0;
            double member[8];
            for (std::size_t i = 0; i < genomes.size(); ++i) {
                member[i] = landscape.fitness(genomes[i]);
                sum += member[i];
            }
            const double mean = sum / static_cast<double>(genomes.size());
            const double picked = member[rng.next_below(genomes.size())];
            return (1.0 - lambda) * mean + lambda * picked;
        }
    }
    throw ParameterError("unknown dominance kind");
}

BaldwinProposal propose_baldwin(const Genome& genome, std::uint32_t learn_flips, Xoshiro256& rng) {
    const auto n = static_cast<std::uint32_t>(genome.size());
    const auto first = static_cast<std::uint32_t>(rng.next_below(n));
    BaldwinProposal proposal;
    proposal.mutant = genome;
    proposal.mutant.flip(first);
    const MutationPlan exclude{first};
    const MutationPlan extra = draw_distinct_loci(n, learn_flips, exclude, rng);
    proposal.learned = flip_loci(proposal.mutant, extra);
    return proposal;
}

std::vector<Genome> propose_endomitosis(const Genome& base, std::uint32_t ploidy, Xoshiro256& rng) {
    if (ploidy != 2 && ploidy != 4 && ploidy != 8)
        throw ParameterError("endomitosis ploidy must be 2, 4 or 8");
    const auto n = static_cast<std::uint32_t>(base.size());
    MutationPlan used;
    used.reserve(ploidy);

    std::vector<Genome> cell;
    cell.reserve(ploidy);
    cell.push_back(base);
    used.push_back(static_cast<std::uint32_t>(rng.next_below(n)));
    cell[0].flip(used[0]);

    while (cell.size() < ploidy) {
        const std::size_t existing = cell.size();
        for (std::size_t i = 0; i < existing; ++i) {
            Genome copy = cell[i];
            const MutationPlan plan = draw_distinct_loci(n, 1, used, rng);
            copy.flip(plan[0]);
            used.push_back(plan[0]);
            cell.push_back(std::move(copy));
        }
    }
    return cell;
}

std::array<Genome, 2> propose_syngamy(const Genome& a, const Genome& b, Xoshiro256& rng) {
    const auto n = static_cast<std::uint32_t>(a.size());
    Genome first = rng.next_below(2) == 0 ? a : b;
    const auto locus1 = static_cast<std::uint32_t>(rng.next_below(n));
    first.flip(locus1);

    Genome second = rng.next_below(2) == 0 ? a : b;
    const MutationPlan exclude{locus1};
    const MutationPlan plan = draw_distinct_loci(n, 1, exclude, rng);
    second.flip(plan[0]);
    return {std::move(first), std::move(second)};
}

MeiosisProposal propose_meiosis(const Genome& a, const Genome& b, CrossoverKind kind, Xoshiro256& rng) {
    const auto n = static_cast<std::uint32_t>(a.size());
    Genome m1 = a;
    const auto locus1 = static_cast<std::uint32_t>(rng.next_below(n));
    m1.flip(locus1);

    Genome m2 = b;
    const MutationPlan exclude{locus1};
    const MutationPlan plan = draw_distinct_loci(n, 1, exclude, rng);
    m2.flip(plan[0]);

    auto [r1, r2] = recombine(m1, m2, kind, rng);

    MeiosisProposal proposal{{a, b, std::move(r1), std::move(r2)}, {0, 0}};
    const auto first = static_cast<std::uint8_t>(rng.next_below(4));
    auto second = static_cast<std::uint8_t>(rng.next_below(3));
    if (second >= first) ++second;
    proposal.chosen = {first, second};
    return proposal;
}

std::array<Genome, 2> propose_asexual_offspring(const Genome& a, const Genome& b, Xoshiro256& rng) {
    const auto n = static_cast<std::uint32_t>(a.size());
    Genome o1 = a;
    const auto locus1 = static_cast<std::uint32_t>(rng.next_below(n));
    o1.flip(locus1);

    Genome o2 = b;
    const MutationPlan exclude{locus1};
    const MutationPlan plan = draw_distinct_loci(n, 1, exclude, rng);
    o2.flip(plan[0]);
    return {std::move(o1), std::move(o2)};
}

bool baseline_step(SpeciesState& state, const NkLandscape& landscape, Xoshiro256& rng) {
    require_members(state, 1, "baseline_step");
    Genome mutant = state.genomes[0];
    mutant.flip(rng.next_below(mutant.size()));
    const double candidate = landscape.fitness(mutant);
    if (candidate > state.stored_fitness) {
        state.genomes[0] = std::move(mutant);
        state.stored_fitness = candidate;
        return true;
    }
    return false;
}

bool baldwin_step(SpeciesState& state, const NkLandscape& landscape, std::uint32_t learn_flips,
                  double learned_weight, Xoshiro256& rng) {
    require_members(state, 1, "baldwin_step");
    if (learn_flips < 1 || learn_flips >= state.genomes[0].size())
        throw ParameterError("baldwin_step: learning flips must lie in [1, n-1]");
    BaldwinProposal proposal = propose_baldwin(state.genomes[0], learn_flips, rng);
    const double candidate = (1.0 - learned_weight) * landscape.fitness(proposal.mutant) +
                             learned_weight * landscape.fitness(proposal.learned);
    if (candidate > state.stored_fitness) {
        // The species moves to the mutant; the learned configuration only
        // contributes its share of the fitness.
        state.genomes[0] = std::move(proposal.mutant);
        state.stored_fitness = candidate;
        return true;
    }
    return false;
}

bool endomitosis_step(SpeciesState& state, const NkLandscape& landscape, std::uint32_t ploidy,
                      Xoshiro256& rng) {
    if (ploidy != 2 && ploidy != 4 && ploidy != 8)
        throw ParameterError("endomitosis_step: ploidy must be 2, 4 or 8");
    if (state.genomes.size() != 1 && state.genomes.size() != ploidy)
        throw ParameterError("endomitosis_step: species must hold 1 or ploidy genomes");
    if (state.parent_index >= state.genomes.size())
        throw ParameterError("endomitosis_step: parent index out of range");

    std::vector<Genome> cell = propose_endomitosis(state.genomes[state.parent_index], ploidy, rng);
    const double candidate = mean_fitness(cell, landscape);
    if (candidate > state.stored_fitness) {
        state.genomes = std::move(cell);
        state.stored_fitness = candidate;
        state.parent_index = rng.next_below(ploidy);
        return true;
    }
    return false;
}

bool syngamy_step(SpeciesState& state, const NkLandscape& landscape, Xoshiro256& rng) {
    require_members(state, 2, "syngamy_step");
    std::array<Genome, 2> pair = propose_syngamy(state.genomes[0], state.genomes[1], rng);
    const double candidate = mean_fitness(pair, landscape);
    if (candidate > state.stored_fitness) {
        state.genomes[0] = std::move(pair[0]);
        state.genomes[1] = std::move(pair[1]);
        state.stored_fitness = candidate;
        return true;
    }
    return false;
}

bool meiosis_two_step(SpeciesState& state, const NkLandscape& landscape, CrossoverKind kind,
                      const DominanceMode& dominance, Xoshiro256& rng) {
    require_members(state, 2, "meiosis_two_step");
    MeiosisProposal proposal = propose_meiosis(state.genomes[0], state.genomes[1], kind, rng);
    const std::array<Genome, 2> pair{proposal.gametes[proposal.chosen[0]],
                                     proposal.gametes[proposal.chosen[1]]};
    const double candidate = evaluate_cell(pair, landscape, dominance, rng);
    if (candidate > state.stored_fitness) {
        state.genomes[0] = pair[0];
        state.genomes[1] = pair[1];
        state.stored_fitness = candidate;
        return true;
    }
    return false;
}

bool asexual_diploid_step(SpeciesState& state, const NkLandscape& landscape, bool best_of_three,
                          Xoshiro256& rng) {
    require_members(state, 2, "asexual_diploid_step");
    std::array<Genome, 2> offspring = propose_asexual_offspring(state.genomes[0], state.genomes[1], rng);
    const double f1 = landscape.fitness(offspring[0]);
    const double f2 = landscape.fitness(offspring[1]);

    double candidate = (f1 + f2) / 2.0;
    std::array<const Genome*, 2> pair{&offspring[0], &offspring[1]};
    if (best_of_three) {
        // All three diploid combinations of the two offspring haploids,
        // scored by their average; first listed wins ties.
        const double scores[3] = {f1, (f1 + f2) / 2.0, f2};
        const std::array<std::array<const Genome*, 2>, 3> pairs{{{&offspring[0], &offspring[0]},
                                                                 {&offspring[0], &offspring[1]},
                                                                 {&offspring[1], &offspring[1]}}};
        std::size_t best = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (scores[i] > scores[best]) best = i;
        candidate = scores[best];
        pair = pairs[best];
    }
    if (candidate > state.stored_fitness) {
        const Genome first = *pair[0];
        const Genome second = *pair[1];
        state.genomes[0] = first;
        state.genomes[1] = second;
        state.stored_fitness = candidate;
        return true;
    }
    return false;
}

bool apply_generation(SpeciesState& state, const StrategyConfig& config, const NkLandscape& landscape,
                      std::uint64_t generation_index, Xoshiro256& rng) {
    const std::size_t members = state.genomes.size();
    const bool shape_ok = config.mode == Mode::Endomitosis
                              ? (members == 1 || members == config.ploidy)
                              : members == config.initial_ploidy();
    if (!shape_ok) throw ConfigError("species ploidy does not match strategy mode");

    switch (config.mode) {
        case Mode::Baseline:
            return baseline_step(state, landscape, rng);
        case Mode::BaldwinLearning:
            if (generation_index % config.learning_period == 0)
                return baldwin_step(state, landscape, config.learn_flips, config.learned_weight, rng);
            return baseline_step(state, landscape, rng);
        case Mode::Endomitosis:
            return endomitosis_step(state, landscape, config.ploidy, rng);
        case Mode::Syngamy:
            return syngamy_step(state, landscape, rng);
        case Mode::TwoStepMeiosis: {
            const std::uint64_t cycle = std::uint64_t{config.asexual_ratio} + 1;
            if (generation_index % cycle == config.asexual_ratio)
                return meiosis_two_step(state, landscape, config.crossover, config.dominance, rng);
            return asexual_diploid_step(state, landscape, false, rng);
        }
        case Mode::AsexualDiploid:
            return asexual_diploid_step(state, landscape, config.best_of_three, rng);
    }
    throw ConfigError("unknown strategy mode");
}

SpeciesState initial_state(const Genome& start, const StrategyConfig& config,
                           const NkLandscape& landscape) {
    config.validate(static_cast<std::uint32_t>(start.size()));
    SpeciesState state;
    state.genomes.assign(config.initial_ploidy(), start);
    state.stored_fitness = landscape.fitness(start);
    state.parent_index = 0;
    return state;
}

}  // namespace nkwalk
