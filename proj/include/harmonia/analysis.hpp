#pragma once

#include "harmonia/factor.hpp"
#include "harmonia/means.hpp"
#include "harmonia/scales.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace harmonia {

enum class CellClass {
    InScale, ///< the mean is already a tone of the scale
    InLimit, ///< not in the scale, but smooth under the restriction
    Outside, ///< not smooth
};

std::string_view class_name(CellClass c);

struct TableCell {
    Ratio row;
    Ratio col;
    Ratio mean;
    CellClass cls;
};

/// Pairwise means of a scale, upper triangle, row-major.
class MeanTable {
public:
    MeanTable(Scale scale, Restriction restriction, MeanKind kind, std::vector<TableCell> cells);

    const Scale& scale() const { return scale_; }
    const Restriction& restriction() const { return restriction_; }
    MeanKind kind() const { return kind_; }
    const std::vector<TableCell>& cells() const { return cells_; }

    /// Either order; throws std::out_of_range for a diagonal or unknown pair.
    const TableCell& at(const Ratio& a, const Ratio& b) const;

private:
    Scale scale_;
    Restriction restriction_;
    MeanKind kind_;
    std::vector<TableCell> cells_;
};

/// Geometric means are skipped when irrational. Throws ScaleError below two tones.
MeanTable mean_table(const Scale& scale, const Restriction& restriction,
                     MeanKind kind = MeanKind::Arithmetic);

/// max(a, b) / min(a, b)
Ratio comma_between(const Ratio& a, const Ratio& b);

/// r = 5^thirds * (3/2)^fifths * 2^octaves
struct DiapenteRecipe {
    int thirds = 0;
    int fifths = 0;
    int octaves = 0;

    /// Octave count once (5/4)^thirds is taken as the starting sound.
    int octaves_from_third() const { return octaves + 2 * thirds; }
    Ratio value() const;
    /// e.g. "135/128 = 5/4 x (3/2)^3 x 2^-2: 3 diapente up, 2 diapason down from 5/4"
    std::string describe() const;

    friend bool operator==(const DiapenteRecipe&, const DiapenteRecipe&) = default;
};

/// Throws std::invalid_argument unless r is 5-limit.
DiapenteRecipe factor_identity(const Ratio& r);

struct TranspositionCheck {
    Ratio tone;
    Ratio transposed;
    bool in_scale;
};

/// Each tone raised by a diapente and folded into the diapason.
std::vector<TranspositionCheck> hexachord_diapente_check(const Scale& scale);

struct EqualComparison {
    Ratio tone;
    int degree;       ///< one-based index of the nearest tempered degree
    double deviation; ///< cents(tone) - cents(degree), signed
};

std::vector<EqualComparison> compare_to_equal(const Scale& scale, int divisions);

/// Name of a known interval; nullopt for unnamed ratios.
std::optional<std::string_view> interval_label(const Ratio& r);

struct CensusEntry {
    Ratio interval;
    std::optional<std::string_view> label;
    int count;
};

/// Step intervals of the scale grouped by value, in order of first appearance.
std::vector<CensusEntry> interval_census(const Scale& scale);

} // namespace harmonia
