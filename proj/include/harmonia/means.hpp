#pragma once

#include "harmonia/ratio.hpp"

#include <optional>
#include <string_view>

namespace harmonia {

enum class MeanKind { Arithmetic, Geometric, Harmonic };

/// 'A', 'G' or 'H'.
char kind_code(MeanKind kind);
std::optional<MeanKind> kind_from_code(char code);
std::string_view kind_name(MeanKind kind);

/// (a + b) / 2
Ratio mean_arithmetic(const Ratio& a, const Ratio& b);

/// 2ab / (a + b)
Ratio mean_harmonic(const Ratio& a, const Ratio& b);

struct GeometricMean {
    std::optional<Ratio> exact; ///< set iff a*b is a square of a rational
    double approx = 0.0;
};

GeometricMean mean_geometric(const Ratio& a, const Ratio& b);

/// The mean of the given kind when it is rational; the geometric mean may not be.
std::optional<Ratio> exact_mean(MeanKind kind, const Ratio& a, const Ratio& b);

/// Whether a, m, b stand in the proportion of the given kind, i.e. m is
/// exactly that mean of a and b. The geometric case tests m*m == a*b.
bool is_proportion(const Ratio& a, const Ratio& m, const Ratio& b, MeanKind kind);

/// Vibrating string with frequency inversely proportional to length: nu = kappa / length.
class StringModel {
public:
    explicit StringModel(Ratio kappa = Ratio(1)) : kappa_(kappa) {}

    const Ratio& kappa() const { return kappa_; }

private:
    Ratio kappa_;
};

Ratio frequency_of_length(const StringModel& model, const Ratio& length);

/// Checks that the string of harmonic-mean length sounds at the arithmetic
/// mean of the two frequencies. Always true; kept as an executable witness.
bool duality_check(const StringModel& model, const Ratio& a, const Ratio& b);

} // namespace harmonia
