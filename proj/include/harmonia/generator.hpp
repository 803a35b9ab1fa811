#pragma once

/**
 * @file generator.hpp
 * @brief The mean generator and its iteration to a fixpoint.
 *
 * One generator pass takes a set of tones and returns every pairwise mean
 * (of the configured kinds) that passes the prime-limit restriction. The
 * closure feeds the result back in, one generation at a time, until a pass
 * contributes nothing new. Seeded with {1, 4/3, 3/2, 2} under the 5-limit
 * this yields the ten-tone natural set; seeded with the natural scale it
 * yields the twelve-tone one.
 */

#include "harmonia/factor.hpp"
#include "harmonia/means.hpp"
#include "harmonia/scales.hpp"

#include <cstdint>
#include <vector>

namespace harmonia {

struct GeneratorConfig {
    /// Evaluated in this order; witnesses prefer earlier kinds.
    std::vector<MeanKind> kinds{MeanKind::Arithmetic};
    Restriction restriction = Restriction::natural();
    int max_generations = 64;
    /// Fold out-of-range means into [1, 2] instead of dropping them. Arithmetic,
    /// geometric and harmonic means of diapason tones never leave it.
    bool keep_within_diapason = true;

    /// Throws std::invalid_argument for empty kinds or max_generations < 1.
    void validate() const;
};

/// tone = mean_kind(a, b), a < b.
struct Witness {
    Ratio tone;
    Ratio a;
    Ratio b;
    MeanKind kind;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Every admitted (pair, kind) in row-major pair order, then kind order.
std::vector<Witness> mean_witnesses(const Scale& tones, const GeneratorConfig& config);

/// Sorted, duplicate-free set of admitted means. Tones already present in
/// the input are reported too. Throws ScaleError for fewer than two tones.
std::vector<Ratio> generate_means(const Scale& tones, const GeneratorConfig& config);

struct Generation {
    std::vector<Ratio> added;       ///< sorted
    std::vector<Witness> witnesses; ///< one per added tone, same order
};

struct ClosureTrace {
    Scale seed;
    std::vector<Generation> generations;
    bool fixpoint_reached = false;
    Scale final_scale;
};

ClosureTrace mean_closure(const Scale& seed, const GeneratorConfig& config = {});

/// Runs `trials` closures that add a single randomly chosen admissible mean
/// per step and checks each lands on the batch fixpoint.
bool closure_order_independence(const Scale& seed, const GeneratorConfig& config, int trials,
                                std::uint64_t rng_seed = 0x5eed);

} // namespace harmonia
