#include "harmonia/generator.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace harmonia {

void GeneratorConfig::validate() const {
    if (kinds.empty())
        throw std::invalid_argument("generator needs at least one mean kind");
    if (max_generations < 1)
        throw std::invalid_argument("max_generations must be at least 1");
}

std::vector<Witness> mean_witnesses(const Scale& tones, const GeneratorConfig& config) {
    config.validate();
    if (tones.size() < 2)
        throw ScaleError("the mean generator needs at least two tones");

    std::vector<Witness> out;
    for (std::size_t i = 0; i < tones.size(); ++i) {
        for (std::size_t j = i + 1; j < tones.size(); ++j) {
            for (MeanKind kind : config.kinds) {
                auto mean = exact_mean(kind, tones[i], tones[j]);
                if (!mean) continue;
                if (!in_diapason(*mean)) {
                    if (!config.keep_within_diapason) continue;
                    mean = reduce_to_diapason(*mean).ratio();
                }
                if (is_smooth(*mean, config.restriction))
                    out.push_back({*mean, tones[i], tones[j], kind});
            }
        }
    }
    return out;
}

std::vector<Ratio> generate_means(const Scale& tones, const GeneratorConfig& config) {
    std::vector<Ratio> means;
    for (const auto& w : mean_witnesses(tones, config))
        means.push_back(w.tone);
    std::sort(means.begin(), means.end());
    means.erase(std::unique(means.begin(), means.end()), means.end());
    return means;
}

namespace {

/// New tones of one pass, each with the first witness that produced it.
std::map<Ratio, Witness> new_means(const Scale& current, const GeneratorConfig& config) {
    std::map<Ratio, Witness> found;
    for (const auto& w : mean_witnesses(current, config))
        if (!current.contains(w.tone))
            found.emplace(w.tone, w);
    return found;
}

} // namespace

ClosureTrace mean_closure(const Scale& seed, const GeneratorConfig& config) {
    config.validate();
    ClosureTrace trace;
    trace.seed = seed;
    Scale current = seed;

    for (int gen = 0; gen < config.max_generations; ++gen) {
        auto found = new_means(current, config);
        if (found.empty()) {
            trace.fixpoint_reached = true;
            break;
        }
        Generation g;
        for (auto& [tone, witness] : found) {
            g.added.push_back(tone);
            g.witnesses.push_back(witness);
        }
        current = current.with(g.added);
        trace.generations.push_back(std::move(g));
    }
    // The cap may coincide with the last productive generation.
    if (!trace.fixpoint_reached && new_means(current, config).empty())
        trace.fixpoint_reached = true;

    trace.final_scale = std::move(current);
    return trace;
}

bool closure_order_independence(const Scale& seed, const GeneratorConfig& config, int trials,
                                std::uint64_t rng_seed) {
    auto batch = mean_closure(seed, config);
    if (!batch.fixpoint_reached)
        return false;

    std::mt19937_64 rng(rng_seed);
    for (int t = 0; t < trials; ++t) {
        Scale current = seed;
        // Every single-step run adds tones of the batch closure only, so it
        // cannot take more steps than that closure has tones.
        std::size_t budget = batch.final_scale.size();
        for (;;) {
            auto found = new_means(current, config);
            if (found.empty()) break;
            if (budget-- == 0) return false;
            std::uniform_int_distribution<std::size_t> pick(0, found.size() - 1);
            auto it = std::next(found.begin(), static_cast<std::ptrdiff_t>(pick(rng)));
            current = current.with(it->first);
        }
        if (!(current == batch.final_scale))
            return false;
    }
    return true;
}

} // namespace harmonia
