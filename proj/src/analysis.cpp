#include "harmonia/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace harmonia {

std::string_view class_name(CellClass c) {
    switch (c) {
    case CellClass::InScale: return "InScale";
    case CellClass::InLimit: return "InLimit";
    case CellClass::Outside: return "Outside";
    }
    return "?";
}

MeanTable::MeanTable(Scale scale, Restriction restriction, MeanKind kind, std::vector<TableCell> cells)
    : scale_(std::move(scale)), restriction_(std::move(restriction)), kind_(kind), cells_(std::move(cells)) {}

const TableCell& MeanTable::at(const Ratio& a, const Ratio& b) const {
    const Ratio& lo = a < b ? a : b;
    const Ratio& hi = a < b ? b : a;
    for (const auto& c : cells_)
        if (c.row == lo && c.col == hi) return c;
    throw std::out_of_range("no table cell for (" + a.str() + ", " + b.str() + ")");
}

MeanTable mean_table(const Scale& scale, const Restriction& restriction, MeanKind kind) {
    if (scale.size() < 2)
        throw ScaleError("a mean table needs at least two tones");
    std::vector<TableCell> cells;
    for (std::size_t i = 0; i < scale.size(); ++i) {
        for (std::size_t j = i + 1; j < scale.size(); ++j) {
            auto mean = exact_mean(kind, scale[i], scale[j]);
            if (!mean) continue;
            CellClass cls = scale.contains(*mean)           ? CellClass::InScale
                          : is_smooth(*mean, restriction) ? CellClass::InLimit
                                                           : CellClass::Outside;
            cells.push_back({scale[i], scale[j], *mean, cls});
        }
    }
    return MeanTable(scale, restriction, kind, std::move(cells));
}

Ratio comma_between(const Ratio& a, const Ratio& b) {
    return a < b ? b / a : a / b;
}

Ratio DiapenteRecipe::value() const {
    return Ratio(5).pow(thirds) * kDiapente.pow(fifths) * Ratio(2).pow(octaves);
}

namespace {

std::string power_term(std::string_view base, int exp) {
    if (exp == 1) return std::string(base);
    return std::string(base) + "^" + std::to_string(exp);
}

std::string moves(int count, std::string_view what) {
    if (count == 0) return "0 " + std::string(what);
    return std::to_string(std::abs(count)) + " " + std::string(what) + (count > 0 ? " up" : " down");
}

} // namespace

std::string DiapenteRecipe::describe() const {
    std::string out = value().str() + " = ";
    Ratio start = Ratio(5, 4).pow(thirds);
    out += start.str();
    if (fifths != 0) out += " x " + power_term("(3/2)", fifths);
    if (octaves_from_third() != 0) out += " x " + power_term("2", octaves_from_third());
    out += ": " + moves(fifths, "diapente") + ", " + moves(octaves_from_third(), "diapason");
    out += " from " + start.str();
    return out;
}

DiapenteRecipe factor_identity(const Ratio& r) {
    auto f = factorize(r);
    if (f.residual != Ratio(1))
        throw std::invalid_argument(r.str() + " is not a 5-limit ratio");
    // 3^q = (3/2)^q * 2^q, so the octave count absorbs q.
    return DiapenteRecipe{f.exp5, f.exp3, f.exp2 + f.exp3};
}

std::vector<TranspositionCheck> hexachord_diapente_check(const Scale& scale) {
    std::vector<TranspositionCheck> out;
    for (const auto& t : scale) {
        Ratio up = reduce_to_diapason(t * kDiapente).ratio();
        // 2 and 1 are the same sound an octave apart
        bool in = scale.contains(up) || (up == kDiapason && scale.contains(kUnison));
        out.push_back({t, up, in});
    }
    return out;
}

std::vector<EqualComparison> compare_to_equal(const Scale& scale, int divisions) {
    EqualTemperament et(divisions);
    std::vector<EqualComparison> out;
    for (const auto& t : scale) {
        double c = cents(t);
        int best = 1;
        double best_dev = c;
        for (int k = 1; k <= divisions + 1; ++k) {
            double dev = c - cents(et.degree(k));
            if (std::fabs(dev) < std::fabs(best_dev)) {
                best = k;
                best_dev = dev;
            }
        }
        out.push_back({t, best, best_dev});
    }
    return out;
}

std::optional<std::string_view> interval_label(const Ratio& r) {
    static const std::array<std::pair<Ratio, std::string_view>, 13> dictionary{{
        {Ratio(9, 8), "tono maggiore (epogdoon)"},
        {Ratio(10, 9), "tono minore"},
        {Ratio(16, 15), "semitono maggiore"},
        {Ratio(25, 24), "semitono minore"},
        {Ratio(256, 243), "limma"},
        {Ratio(81, 80), "comma"},
        {Ratio(135, 128), "(unnamed gap)"},
        {Ratio(2), "diapason"},
        {Ratio(3, 2), "diapente"},
        {Ratio(4, 3), "diatessaron"},
        {Ratio(6, 5), "terza minore (Senario)"},
        {Ratio(5, 3), "sesta maggiore (Senario)"},
        {Ratio(8, 5), "sesta minore (Senario)"},
    }};
    for (const auto& [ratio, label] : dictionary)
        if (ratio == r) return label;
    return std::nullopt;
}

std::vector<CensusEntry> interval_census(const Scale& scale) {
    std::vector<CensusEntry> out;
    for (const auto& step : step_intervals(scale)) {
        auto it = std::find_if(out.begin(), out.end(), [&](const CensusEntry& e) { return e.interval == step; });
        if (it != out.end())
            ++it->count;
        else
            out.push_back({step, interval_label(step), 1});
    }
    return out;
}

} // namespace harmonia
