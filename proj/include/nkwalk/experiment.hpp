#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nkwalk/landscape.hpp"
#include "nkwalk/strategies.hpp"

namespace nkwalk {

// Default master seed for bundled presets; any value works, this one is just
// fixed so rerunning a preset without --seed reproduces the same bytes.
inline constexpr std::uint64_t kDefaultMasterSeed = 0x243f6a8885a308d3ULL;

struct SeedPair {
    std::uint64_t landscape_seed;
    std::uint64_t run_seed;
};

// Two-level SplitMix-style derivation. landscape_seed depends only on
// (master, landscape_index), so every strategy in a comparison sees
// bit-identical landscapes; run_seed additionally folds in run_index.
SeedPair derive_seeds(std::uint64_t master_seed, std::uint64_t landscape_index,
                      std::uint64_t run_index);

struct RunConfig {
    std::uint32_t n = 20;
    std::uint32_t k = 0;
    StrategyConfig strategy;
    std::uint64_t generations = 50000;
    std::uint64_t landscape_seed = 0;
    std::uint64_t run_seed = 0;
    std::uint64_t trajectory_stride = 0;  // 0 = record no trajectory
    // identifiers copied through into the record
    std::string strategy_id;
    std::uint64_t landscape_index = 0;
    std::uint64_t run_index = 0;
};

struct TrajectoryPoint {
    std::uint64_t generation;
    double fitness;
};

struct RunRecord {
    std::string strategy_id;
    StrategyConfig strategy;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t landscape_index = 0;
    std::uint64_t run_index = 0;
    std::uint64_t landscape_seed = 0;
    std::uint64_t run_seed = 0;
    double final_fitness = 0.0;
    std::vector<TrajectoryPoint> trajectory;  // empty unless a stride was set
};

// One adaptive walk: builds the landscape from (n, k, landscape_seed), draws
// the start genome from run_seed, folds apply_generation over `generations`.
RunRecord run_walk(const RunConfig& config);
// Same, reusing an already-built landscape (must match n/k/landscape_seed).
RunRecord run_walk(const RunConfig& config, const NkLandscape& landscape);

struct SuiteStrategy {
    std::string id;  // unique within the suite
    StrategyConfig config;
};

struct SuiteConfig {
    std::uint32_t n = 20;
    std::vector<std::uint32_t> k_values{0, 2, 4, 6, 10, 15};
    std::vector<SuiteStrategy> strategies;
    std::uint32_t landscapes = 10;
    std::uint32_t runs = 10;
    std::uint64_t generations = 50000;
    std::uint64_t master_seed = kDefaultMasterSeed;
    std::uint64_t trajectory_stride = 500;
    unsigned parallelism = 0;  // 0 = hardware concurrency

    std::size_t total_runs() const noexcept {
        return strategies.size() * k_values.size() * std::size_t{landscapes} * runs;
    }
    void validate() const;  // throws ConfigError
};

// Executes every (strategy, k, landscape, run) cell. Output order is fixed:
// strategies in config order, then k in config order, then landscape_index,
// then run_index — regardless of how the cells were scheduled.
std::vector<RunRecord> run_suite(const SuiteConfig& suite);

// Bundled suite parameterizations for the standard comparisons; see README.
// Known names: fig2 fig3a fig3b fig5 fig6 fig8 fig9 fig10a fig10b.
SuiteConfig figure_preset(const std::string& name,
                          std::optional<std::uint32_t> n_override = std::nullopt);
const std::vector<std::string>& figure_preset_names();

}  // namespace nkwalk
