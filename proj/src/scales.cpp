#include "harmonia/scales.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace harmonia {

bool in_diapason(const Ratio& r) {
    return r >= kUnison && r <= kDiapason;
}

PitchClass::PitchClass(Ratio value) : value_(value) {
    if (!in_diapason(value_))
        throw ScaleError("tone " + value_.str() + " lies outside the diapason [1, 2]");
}

PitchClass reduce_to_diapason(const Ratio& r) {
    if (r == kDiapason) return PitchClass(r);
    Ratio x = r;
    while (x >= kDiapason) x /= kDiapason;
    while (x < kUnison) x *= kDiapason;
    return PitchClass(x);
}

Scale::Scale(std::vector<Ratio> tones) : tones_(std::move(tones)) {
    for (const auto& t : tones_)
        if (!in_diapason(t))
            throw ScaleError("tone " + t.str() + " lies outside the diapason [1, 2]");
    std::sort(tones_.begin(), tones_.end());
    tones_.erase(std::unique(tones_.begin(), tones_.end()), tones_.end());
}

bool Scale::contains(const Ratio& r) const {
    return std::binary_search(tones_.begin(), tones_.end(), r);
}

bool Scale::closed() const {
    return !tones_.empty() && tones_.front() == kUnison && tones_.back() == kDiapason;
}

Scale Scale::with(std::span<const Ratio> extra) const {
    std::vector<Ratio> all = tones_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Scale(std::move(all));
}

namespace {

constexpr std::array kNames{
    std::pair{ScaleName::T, std::string_view{"T"}},
    std::pair{ScaleName::T5, std::string_view{"T5"}},
    std::pair{ScaleName::Pythagorean, std::string_view{"PYTHAGOREAN"}},
    std::pair{ScaleName::Natural, std::string_view{"NATURAL"}},
    std::pair{ScaleName::SN1, std::string_view{"SN1"}},
    std::pair{ScaleName::SN2, std::string_view{"SN2"}},
    std::pair{ScaleName::Finales, std::string_view{"FINALES"}},
    std::pair{ScaleName::HexachordNatural, std::string_view{"HEXACHORD_NATURAL"}},
};

constexpr std::array kAllNames{
    ScaleName::T, ScaleName::T5, ScaleName::Pythagorean, ScaleName::Natural,
    ScaleName::SN1, ScaleName::SN2, ScaleName::Finales, ScaleName::HexachordNatural,
};

Scale from_text(std::initializer_list<std::string_view> tones) {
    std::vector<Ratio> out;
    for (auto t : tones) out.push_back(Ratio::parse(t));
    return Scale(std::move(out));
}

} // namespace

std::string_view scale_id(ScaleName name) {
    for (auto [n, id] : kNames)
        if (n == name) return id;
    return "?";
}

std::optional<ScaleName> parse_scale_name(std::string_view id) {
    for (auto [n, s] : kNames)
        if (s == id) return n;
    return std::nullopt;
}

std::span<const ScaleName> all_scale_names() { return kAllNames; }

Scale canonical(ScaleName name) {
    switch (name) {
    case ScaleName::T:
        return from_text({"1", "4/3", "3/2", "2"});
    case ScaleName::T5:
        return from_text({"1", "5/4", "4/3", "3/2", "5/3", "2"});
    case ScaleName::Pythagorean:
        return from_text({"1", "9/8", "81/64", "4/3", "3/2", "27/16", "243/128", "2"});
    case ScaleName::Natural:
        return from_text({"1", "9/8", "5/4", "4/3", "3/2", "5/3", "15/8", "2"});
    case ScaleName::SN1:
        return from_text({"1", "9/8", "5/4", "81/64", "4/3", "45/32", "3/2", "25/16", "5/3", "2"});
    case ScaleName::SN2:
        return from_text({"1", "9/8", "5/4", "81/64", "4/3", "45/32", "3/2", "25/16", "5/3",
                          "27/16", "15/8", "2"});
    case ScaleName::Finales:
        return from_text({"9/8", "81/64", "4/3", "3/2"});
    case ScaleName::HexachordNatural:
        return from_text({"1", "9/8", "5/4", "4/3", "3/2", "5/3"});
    }
    throw ScaleError("unknown scale");
}

Scale canonical(std::string_view id) {
    auto name = parse_scale_name(id);
    if (!name)
        throw ScaleError("unknown scale '" + std::string(id) + "'");
    return canonical(*name);
}

Scale pythagorean_by_diapente(unsigned steps) {
    std::vector<Ratio> tones = canonical(ScaleName::T).tones();
    Ratio newest = kDiapente;
    for (unsigned i = 0; i < steps; ++i) {
        newest = reduce_to_diapason(newest * kDiapente).ratio();
        tones.push_back(newest);
    }
    return Scale(std::move(tones));
}

std::vector<SpiralTone> fifths_spiral(unsigned up, unsigned down) {
    std::vector<SpiralTone> out;
    out.reserve(1 + up + down);
    out.push_back({PitchClass(kUnison), 0});
    Ratio r = kUnison;
    for (unsigned k = 1; k <= up; ++k) {
        r = reduce_to_diapason(r * kDiapente).ratio();
        out.push_back({PitchClass(r), static_cast<int>(k)});
    }
    r = kUnison;
    for (unsigned k = 1; k <= down; ++k) {
        r = reduce_to_diapason(r / kDiapente).ratio();
        out.push_back({PitchClass(r), -static_cast<int>(k)});
    }
    return out;
}

EqualTemperament::EqualTemperament(int divisions) : divisions_(divisions) {
    if (divisions < 1)
        throw std::invalid_argument("equal temperament needs at least one division");
    degrees_.reserve(static_cast<std::size_t>(divisions) + 1);
    for (int k = 0; k <= divisions; ++k)
        degrees_.push_back(std::exp2(static_cast<double>(k) / divisions));
}

double EqualTemperament::degree(int k) const {
    return degrees_.at(static_cast<std::size_t>(k - 1));
}

EqualTemperament equal_temperament(int divisions) {
    return EqualTemperament(divisions);
}

double cents(double interval) {
    if (!(interval > 0.0))
        throw std::domain_error("cents of a nonpositive interval");
    return 1200.0 * std::log2(interval);
}

double cents(const Ratio& interval) {
    // log1p of the exact gap keeps intervals near unison accurate for huge parts.
    const Int n = interval.num(), d = interval.den();
    const long double ln2 = std::log(2.0L);
    if (n >= d)
        return static_cast<double>(1200.0L * std::log1p(static_cast<long double>(n - d) / d) / ln2);
    return static_cast<double>(-1200.0L * std::log1p(static_cast<long double>(d - n) / n) / ln2);
}

std::vector<Ratio> step_intervals(const Scale& scale) {
    if (scale.size() < 2)
        throw ScaleError("step intervals need at least two tones");
    std::vector<Ratio> steps;
    steps.reserve(scale.size() - 1);
    for (std::size_t i = 0; i + 1 < scale.size(); ++i)
        steps.push_back(interval(scale[i], scale[i + 1]));
    return steps;
}

bool approx_equal(double a, double b, double rel_tol) {
    return std::fabs(a - b) <= rel_tol * std::max(std::fabs(a), std::fabs(b));
}

std::optional<std::string_view> solfege_label(const Ratio& tone) {
    static const std::array<std::pair<Ratio, std::string_view>, 13> labels{{
        {Ratio(1), "DO"},
        {Ratio(9, 8), "RE"},
        {Ratio(5, 4), "MI"},
        {Ratio(81, 64), "MI"},
        {Ratio(4, 3), "FA"},
        {Ratio(45, 32), "FA#"},
        {Ratio(3, 2), "SOL"},
        {Ratio(25, 16), "SOL#"},
        {Ratio(5, 3), "LA"},
        {Ratio(27, 16), "LA"},
        {Ratio(15, 8), "SI"},
        {Ratio(243, 128), "SI"},
        {Ratio(2), "DO"},
    }};
    for (const auto& [r, label] : labels)
        if (r == tone) return label;
    return std::nullopt;
}

} // namespace harmonia
