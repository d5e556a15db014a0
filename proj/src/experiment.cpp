#include "nkwalk/experiment.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "nkwalk/errors.hpp"

namespace nkwalk {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t chain(std::uint64_t h, std::uint64_t word) {
    return mix64(h + kGolden * (word + 1));
}

}  // namespace

SeedPair derive_seeds(std::uint64_t master_seed, std::uint64_t landscape_index,
                      std::uint64_t run_index) {
    SeedPair seeds;
    seeds.landscape_seed = chain(chain(master_seed, 1), landscape_index);
    seeds.run_seed = chain(chain(seeds.landscape_seed, 2), run_index);
    return seeds;
}

RunRecord run_walk(const RunConfig& config) {
    const NkLandscape landscape = NkLandscape::generate(config.n, config.k, config.landscape_seed);
    return run_walk(config, landscape);
}

RunRecord run_walk(const RunConfig& config, const NkLandscape& landscape) {
    if (config.generations == 0) throw ConfigError("generations must be positive");
    if (landscape.n() != config.n || landscape.k() != config.k ||
        landscape.seed() != config.landscape_seed)
        throw ConfigError("run_walk: landscape does not match the run config");
    config.strategy.validate(config.n);

    Xoshiro256 rng(config.run_seed);
    const Genome start = Genome::random(config.n, rng);
    SpeciesState state = initial_state(start, config.strategy, landscape);

    RunRecord record;
    record.strategy_id = config.strategy_id;
    record.strategy = config.strategy;
    record.n = config.n;
    record.k = config.k;
    record.landscape_index = config.landscape_index;
    record.run_index = config.run_index;
    record.landscape_seed = config.landscape_seed;
    record.run_seed = config.run_seed;

    const std::uint64_t stride = config.trajectory_stride;
    if (stride > 0) {
        record.trajectory.reserve(config.generations / stride + 2);
        record.trajectory.push_back({0, state.stored_fitness});
    }
    for (std::uint64_t g = 0; g < config.generations; ++g) {
        apply_generation(state, config.strategy, landscape, g, rng);
        if (stride > 0 && (g + 1) % stride == 0)
            record.trajectory.push_back({g + 1, state.stored_fitness});
    }
    if (stride > 0 && record.trajectory.back().generation != config.generations)
        record.trajectory.push_back({config.generations, state.stored_fitness});

    record.final_fitness = state.stored_fitness;
    return record;
}

void SuiteConfig::validate() const {
    if (strategies.empty()) throw ConfigError("suite needs at least one strategy");
    if (k_values.empty()) throw ConfigError("suite needs at least one k value");
    if (landscapes == 0 || runs == 0) throw ConfigError("landscape and run counts must be positive");
    if (generations == 0) throw ConfigError("generations must be positive");
    std::unordered_set<std::string> ids;
    for (const auto& strategy : strategies) {
        if (strategy.id.empty()) throw ConfigError("strategy id must not be empty");
        if (!ids.insert(strategy.id).second)
            throw ConfigError("duplicate strategy id '" + strategy.id + "'");
        strategy.config.validate(n);
    }
    for (const auto k : k_values)
        if (k >= n) throw ConfigError("k must satisfy k <= n-1");
}

std::vector<RunRecord> run_suite(const SuiteConfig& suite) {
    suite.validate();
    std::vector<RunRecord> records(suite.total_runs());

    // One task per (k, landscape): the landscape is generated once and every
    // strategy/run pair walks it. Record slots are preassigned, so the
    // output is identical for any schedule or thread count.
    struct Task {
        std::size_t k_index;
        std::uint32_t landscape_index;
    };
    std::vector<Task> tasks;
    tasks.reserve(suite.k_values.size() * suite.landscapes);
    for (std::size_t ki = 0; ki < suite.k_values.size(); ++ki)
        for (std::uint32_t li = 0; li < suite.landscapes; ++li) tasks.push_back({ki, li});

    const std::size_t per_strategy = suite.k_values.size() * std::size_t{suite.landscapes} * suite.runs;

    std::atomic<std::size_t> next_task{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        while (true) {
            const std::size_t index = next_task.fetch_add(1);
            if (index >= tasks.size()) return;
            const Task task = tasks[index];
            const std::uint32_t k = suite.k_values[task.k_index];
            try {
                const std::uint64_t landscape_seed =
                    derive_seeds(suite.master_seed, task.landscape_index, 0).landscape_seed;
                const NkLandscape landscape = NkLandscape::generate(suite.n, k, landscape_seed);
                for (std::size_t si = 0; si < suite.strategies.size(); ++si) {
                    for (std::uint32_t ri = 0; ri < suite.runs; ++ri) {
                        const SeedPair seeds = derive_seeds(suite.master_seed, task.landscape_index, ri);
                        RunConfig config;
                        config.n = suite.n;
                        config.k = k;
                        config.strategy = suite.strategies[si].config;
                        config.generations = suite.generations;
                        config.landscape_seed = seeds.landscape_seed;
                        config.run_seed = seeds.run_seed;
                        config.trajectory_stride = suite.trajectory_stride;
                        config.strategy_id = suite.strategies[si].id;
                        config.landscape_index = task.landscape_index;
                        config.run_index = ri;
                        const std::size_t slot =
                            si * per_strategy +
                            (task.k_index * std::size_t{suite.landscapes} + task.landscape_index) *
                                suite.runs +
                            ri;
                        records[slot] = run_walk(config, landscape);
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    try {
                        std::throw_with_nested(
                            ConfigError("suite cell failed at k=" + std::to_string(k) +
                                        " landscape=" + std::to_string(task.landscape_index)));
                    } catch (...) {
                        failure = std::current_exception();
                    }
                }
                next_task.store(tasks.size());
                return;
            }
        }
    };

    unsigned threads = suite.parallelism == 0 ? std::thread::hardware_concurrency() : suite.parallelism;
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

namespace {

SuiteStrategy named(StrategyConfig config) { return {strategy_label(config), config}; }

StrategyConfig baldwin(std::uint32_t learn_flips, double weight, std::uint32_t period) {
    StrategyConfig config;
    config.mode = Mode::BaldwinLearning;
    config.learn_flips = learn_flips;
    config.learned_weight = weight;
    config.learning_period = period;
    return config;
}

StrategyConfig endomitosis(std::uint32_t ploidy) {
    StrategyConfig config;
    config.mode = Mode::Endomitosis;
    config.ploidy = ploidy;
    return config;
}

StrategyConfig meiosis(CrossoverKind kind, DominanceMode dominance, std::uint32_t ratio) {
    StrategyConfig config;
    config.mode = Mode::TwoStepMeiosis;
    config.crossover = kind;
    config.dominance = dominance;
    config.asexual_ratio = ratio;
    return config;
}

}  // namespace

const std::vector<std::string>& figure_preset_names() {
    static const std::vector<std::string> names{"fig2",  "fig3a", "fig3b", "fig5",  "fig6",
                                                "fig8",  "fig9",  "fig10a", "fig10b"};
    return names;
}

SuiteConfig figure_preset(const std::string& name, std::optional<std::uint32_t> n_override) {
    SuiteConfig suite;  // defaults: n=20, K grid {0,2,4,6,10,15}, 10x10 runs, 50k generations

    if (name == "fig2" || name == "fig3a" || name == "fig3b") {
        // hill-climb baseline vs. blended learning at L = 1..7
        const double weight = name == "fig3a" ? 0.25 : 0.5;
        const std::uint32_t period = name == "fig3b" ? 2 : 1;
        suite.strategies.push_back(named(StrategyConfig{}));
        for (std::uint32_t flips = 1; flips <= 7; ++flips)
            suite.strategies.push_back(named(baldwin(flips, weight, period)));
    } else if (name == "fig5") {
        suite.strategies.push_back(named(StrategyConfig{}));
        for (const std::uint32_t ploidy : {2u, 4u, 8u})
            suite.strategies.push_back(named(endomitosis(ploidy)));
    } else if (name == "fig6") {
        suite.strategies.push_back(named(endomitosis(2)));
        suite.strategies.push_back(named(StrategyConfig{.mode = Mode::Syngamy}));
    } else if (name == "fig8") {
        suite.strategies.push_back(named(meiosis(CrossoverKind::SinglePoint, {}, 0)));
        suite.strategies.push_back(named(endomitosis(2)));
        suite.strategies.push_back(named(StrategyConfig{.mode = Mode::Syngamy}));
    } else if (name == "fig9") {
        suite.n = 100;
        suite.strategies.push_back(named(meiosis(CrossoverKind::SinglePoint, {}, 0)));
        suite.strategies.push_back(named(meiosis(CrossoverKind::Uniform, {}, 0)));
    } else if (name == "fig10a") {
        suite.strategies.push_back(named(meiosis(CrossoverKind::SinglePoint, {}, 0)));
        suite.strategies.push_back(named(
            meiosis(CrossoverKind::SinglePoint, {Dominance::HaploidWeighted, 0.5}, 0)));
    } else if (name == "fig10b") {
        for (const std::uint32_t ratio : {0u, 1u, 3u, 7u, 15u})
            suite.strategies.push_back(named(meiosis(CrossoverKind::SinglePoint, {}, ratio)));
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }

    if (n_override) suite.n = *n_override;
    return suite;
}

}  // namespace nkwalk
