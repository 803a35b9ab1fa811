#include "harmonia/means.hpp"

#include "harmonia/factor.hpp"

#include <cmath>

namespace harmonia {

char kind_code(MeanKind kind) {
    switch (kind) {
    case MeanKind::Arithmetic: return 'A';
    case MeanKind::Geometric: return 'G';
    case MeanKind::Harmonic: return 'H';
    }
    return '?';
}

std::optional<MeanKind> kind_from_code(char code) {
    switch (code) {
    case 'A': case 'a': return MeanKind::Arithmetic;
    case 'G': case 'g': return MeanKind::Geometric;
    case 'H': case 'h': return MeanKind::Harmonic;
    default: return std::nullopt;
    }
}

std::string_view kind_name(MeanKind kind) {
    switch (kind) {
    case MeanKind::Arithmetic: return "arithmetic";
    case MeanKind::Geometric: return "geometric";
    case MeanKind::Harmonic: return "harmonic";
    }
    return "unknown";
}

Ratio mean_arithmetic(const Ratio& a, const Ratio& b) {
    return (a + b) / Ratio(2);
}

Ratio mean_harmonic(const Ratio& a, const Ratio& b) {
    return Ratio(2) * a * b / (a + b);
}

GeometricMean mean_geometric(const Ratio& a, const Ratio& b) {
    GeometricMean g;
    g.exact = exact_sqrt(a * b);
    // Separate roots keep the approximation finite even if a*b would not fit a double.
    g.approx = std::sqrt(a.to_double()) * std::sqrt(b.to_double());
    return g;
}

std::optional<Ratio> exact_mean(MeanKind kind, const Ratio& a, const Ratio& b) {
    switch (kind) {
    case MeanKind::Arithmetic: return mean_arithmetic(a, b);
    case MeanKind::Harmonic: return mean_harmonic(a, b);
    case MeanKind::Geometric: return exact_sqrt(a * b);
    }
    return std::nullopt;
}

bool is_proportion(const Ratio& a, const Ratio& m, const Ratio& b, MeanKind kind) {
    if (kind == MeanKind::Geometric)
        return m * m == a * b;
    return exact_mean(kind, a, b) == m;
}

Ratio frequency_of_length(const StringModel& model, const Ratio& length) {
    return model.kappa() / length;
}

bool duality_check(const StringModel& model, const Ratio& a, const Ratio& b) {
    return frequency_of_length(model, mean_harmonic(a, b))
        == mean_arithmetic(frequency_of_length(model, a), frequency_of_length(model, b));
}

} // namespace harmonia
