#pragma once

#include "harmonia/ratio.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace harmonia {

class ScaleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const Ratio kUnison{1};
inline const Ratio kDiapason{2};
inline const Ratio kDiapente{3, 2};
inline const Ratio kDiatessaron{4, 3};

/// A pitch inside the closed diapason [1, 2].
class PitchClass {
public:
    /// Throws ScaleError if value lies outside [1, 2].
    explicit PitchClass(Ratio value);

    const Ratio& ratio() const { return value_; }

    friend bool operator==(const PitchClass&, const PitchClass&) = default;
    friend auto operator<=>(const PitchClass&, const PitchClass&) = default;

private:
    Ratio value_;
};

bool in_diapason(const Ratio& r);

/// r * 2^k with 1 <= result < 2; exactly 2 stays 2.
PitchClass reduce_to_diapason(const Ratio& r);

/// Sorted, duplicate-free set of tones within [1, 2].
class Scale {
public:
    Scale() = default;
    /// Sorts and deduplicates. Throws ScaleError for tones outside [1, 2].
    explicit Scale(std::vector<Ratio> tones);
    Scale(std::initializer_list<Ratio> tones) : Scale(std::vector<Ratio>(tones)) {}

    const std::vector<Ratio>& tones() const { return tones_; }
    std::size_t size() const { return tones_.size(); }
    bool empty() const { return tones_.empty(); }
    const Ratio& operator[](std::size_t i) const { return tones_[i]; }
    auto begin() const { return tones_.begin(); }
    auto end() const { return tones_.end(); }

    bool contains(const Ratio& r) const;
    /// First tone is 1 and last is 2.
    bool closed() const;

    Scale with(std::span<const Ratio> extra) const;
    Scale with(const Ratio& extra) const { return with(std::span<const Ratio>(&extra, 1)); }

    friend bool operator==(const Scale&, const Scale&) = default;

private:
    std::vector<Ratio> tones_;
};

enum class ScaleName { T, T5, Pythagorean, Natural, SN1, SN2, Finales, HexachordNatural };

/// Stable identifier: "T", "T5", "PYTHAGOREAN", "NATURAL", "SN1", "SN2",
/// "FINALES", "HEXACHORD_NATURAL".
std::string_view scale_id(ScaleName name);
std::optional<ScaleName> parse_scale_name(std::string_view id);
std::span<const ScaleName> all_scale_names();

Scale canonical(ScaleName name);
/// Throws ScaleError for an unknown identifier.
Scale canonical(std::string_view id);

/// Starting from {1, 4/3, 3/2, 2}, raise the newest tone (initially 3/2) by a
/// diapente `steps` times, folding each result into the diapason.
/// Four steps give the Pythagorean scale.
Scale pythagorean_by_diapente(unsigned steps);

struct SpiralTone {
    PitchClass tone;
    int step; ///< +k: k fifths up, -k: k fifths down, 0: the unison
};

/// Step 0 followed by +1..+up and -1..-down, each folded into the diapason.
std::vector<SpiralTone> fifths_spiral(unsigned up, unsigned down);

class EqualTemperament {
public:
    /// Throws std::invalid_argument for divisions < 1.
    explicit EqualTemperament(int divisions);

    int divisions() const { return divisions_; }
    /// N + 1 values, alpha_1 = 1 through alpha_{N+1} = 2.
    const std::vector<double>& degrees() const { return degrees_; }
    /// One-based, as alpha_k.
    double degree(int k) const;

private:
    int divisions_;
    std::vector<double> degrees_;
};

EqualTemperament equal_temperament(int divisions);

/// 1200 * log2(interval). Throws std::domain_error for nonpositive input.
double cents(double interval);
double cents(const Ratio& interval);

/// tone[i+1] / tone[i]. Throws ScaleError for fewer than two tones.
std::vector<Ratio> step_intervals(const Scale& scale);

/// Relative tolerance for floating comparisons.
inline constexpr double kDefaultRelTol = 1e-9;
bool approx_equal(double a, double b, double rel_tol = kDefaultRelTol);

/// DO-RE-MI display label for the tones that carry one; never used as a key.
std::optional<std::string_view> solfege_label(const Ratio& tone);

} // namespace harmonia
