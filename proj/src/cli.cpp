#include "harmonia/cli.hpp"

#include "harmonia/analysis.hpp"
#include "harmonia/generator.hpp"
#include "harmonia/io.hpp"
#include "harmonia/scales.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace harmonia::cli {

namespace {

using io::Json;
using io::OutputFormat;

struct NamedScale {
    std::string name;
    Scale scale;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int parse_int_suffix(std::string_view spec, std::string_view prefix) {
    auto digits = spec.substr(prefix.size());
    int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
        throw UsageError("bad number in '" + std::string(spec) + "'");
    return value;
}

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Canonical id, "pythagorean:steps=K", "@file.json" ("@-" for stdin), or a
/// comma-separated tone list such as "1,5/4,3/2,2".
NamedScale resolve_scale(const std::string& spec) {
    if (auto name = parse_scale_name(spec))
        return {spec, canonical(*name)};
    constexpr std::string_view pyth = "pythagorean:steps=";
    if (spec.starts_with(pyth)) {
        int steps = parse_int_suffix(spec, pyth);
        if (steps < 0) throw UsageError("steps must be nonnegative");
        return {spec, pythagorean_by_diapente(static_cast<unsigned>(steps))};
    }
    if (spec.starts_with('@')) {
        std::string path = spec.substr(1);
        std::string text;
        if (path == "-") {
            text = read_all(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw UsageError("cannot open '" + path + "'");
            text = read_all(in);
        }
        auto doc = nlohmann::json::parse(text);
        std::string name = doc.contains("name") ? doc["name"].get<std::string>() : path;
        return {name, io::scale_from_json(doc)};
    }
    if (spec.find(',') != std::string::npos) {
        std::vector<Ratio> tones;
        std::stringstream ss(spec);
        for (std::string item; std::getline(ss, item, ',');)
            tones.push_back(Ratio::parse(item));
        return {"custom", Scale(std::move(tones))};
    }
    throw UsageError("unknown scale '" + spec + "'");
}

std::vector<MeanKind> parse_kinds(const std::string& text) {
    std::vector<MeanKind> kinds;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        auto kind = item.size() == 1 ? kind_from_code(item[0]) : std::nullopt;
        if (!kind) throw UsageError("bad mean kind '" + item + "' (expected A, G or H)");
        if (std::find(kinds.begin(), kinds.end(), *kind) == kinds.end())
            kinds.push_back(*kind);
    }
    if (kinds.empty()) throw UsageError("no mean kinds given");
    return kinds;
}

std::string kinds_str(const std::vector<MeanKind>& kinds) {
    std::string s;
    for (auto k : kinds) {
        if (!s.empty()) s += ',';
        s += kind_code(k);
    }
    return s;
}

Restriction parse_primes(const std::string& text) {
    try {
        return Restriction::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string join(const std::vector<Ratio>& tones, std::string_view sep = " ") {
    std::string s;
    for (const auto& t : tones) {
        if (!s.empty()) s += sep;
        s += t.str();
    }
    return s;
}

std::string label_or(std::optional<std::string_view> label, std::string_view fallback = "") {
    return std::string(label ? *label : fallback);
}

Json nullable(std::optional<std::string_view> label) {
    return label ? Json(std::string(*label)) : Json(nullptr);
}

// ---- scale -------------------------------------------------------------

void render_scale(std::ostream& out, const NamedScale& ns, OutputFormat format) {
    const Scale& s = ns.scale;
    std::vector<Ratio> steps = s.size() >= 2 ? step_intervals(s) : std::vector<Ratio>{};
    switch (format) {
    case OutputFormat::Json: {
        Json doc = io::scale_to_json(ns.name, s);
        Json js = Json::array();
        for (std::size_t i = 0; i < steps.size(); ++i) {
            Json j;
            j["from"] = s[i].str();
            j["to"] = s[i + 1].str();
            j["interval"] = steps[i].str();
            j["label"] = nullable(interval_label(steps[i]));
            js.push_back(std::move(j));
        }
        doc["steps"] = std::move(js);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << io::scale_to_csv(s);
        break;
    case OutputFormat::Markdown:
        out << "### " << ns.name << "\n\n| tone | cents | label |\n|---|---|---|\n";
        for (const auto& t : s)
            out << "| " << t.str() << " | " << io::fixed(cents(t), 3) << " | " << label_or(solfege_label(t)) << " |\n";
        if (!steps.empty()) {
            out << "\n| step | interval | cents | name |\n|---|---|---|---|\n";
            for (std::size_t i = 0; i < steps.size(); ++i)
                out << "| " << s[i].str() << " -> " << s[i + 1].str() << " | " << steps[i].str() << " | "
                    << io::fixed(cents(steps[i]), 3) << " | " << label_or(interval_label(steps[i])) << " |\n";
        }
        break;
    case OutputFormat::Plain:
        out << ns.name << ": " << s.size() << " tones" << (s.closed() ? ", closed" : "") << '\n';
        out << fmt::format("{:<12} {:>10}  {}\n", "tone", "cents", "label");
        for (const auto& t : s)
            out << fmt::format("{:<12} {:>10}  {}\n", t.str(), io::fixed(cents(t), 3), label_or(solfege_label(t)));
        if (!steps.empty()) {
            out << "steps\n";
            for (std::size_t i = 0; i < steps.size(); ++i)
                out << fmt::format("{:<22} {:<10} {:>10}  {}\n", s[i].str() + " -> " + s[i + 1].str(),
                                   steps[i].str(), io::fixed(cents(steps[i]), 3), label_or(interval_label(steps[i])));
        }
        break;
    }
}

void render_equal(std::ostream& out, const std::string& name, const EqualTemperament& et, OutputFormat format) {
    const auto& d = et.degrees();
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["name"] = name;
        doc["divisions"] = et.divisions();
        Json arr = Json::array();
        for (std::size_t k = 0; k < d.size(); ++k) {
            Json j;
            j["index"] = k + 1;
            j["value"] = d[k];
            j["cents"] = cents(d[k]);
            arr.push_back(std::move(j));
        }
        doc["degrees"] = std::move(arr);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "degree,value,cents\n";
        for (std::size_t k = 0; k < d.size(); ++k)
            out << (k + 1) << ',' << io::fixed(d[k], 10) << ',' << io::fixed(cents(d[k]), 3) << '\n';
        break;
    case OutputFormat::Markdown:
        out << "### " << name << "\n\n| degree | value | cents |\n|---|---|---|\n";
        for (std::size_t k = 0; k < d.size(); ++k)
            out << "| " << (k + 1) << " | " << io::fixed(d[k], 10) << " | " << io::fixed(cents(d[k]), 3) << " |\n";
        break;
    case OutputFormat::Plain:
        out << name << ": " << d.size() << " degrees\n";
        out << fmt::format("{:<8} {:>14} {:>10}\n", "degree", "value", "cents");
        for (std::size_t k = 0; k < d.size(); ++k)
            out << fmt::format("{:<8} {:>14} {:>10}\n", k + 1, io::fixed(d[k], 10), io::fixed(cents(d[k]), 3));
        break;
    }
}

// ---- closure -----------------------------------------------------------

std::string witness_str(const Witness& w) {
    return fmt::format("{}({}, {})", kind_code(w.kind), w.a.str(), w.b.str());
}

void render_trace(std::ostream& out, const std::string& seed_name, const ClosureTrace& trace,
                  const GeneratorConfig& config, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        out << io::trace_to_json(trace).dump(2) << '\n';
        break;
    case OutputFormat::Csv:
        out << "generation,tone,a,b,kind\n";
        for (std::size_t g = 0; g < trace.generations.size(); ++g)
            for (const auto& w : trace.generations[g].witnesses)
                out << (g + 1) << ',' << w.tone.str() << ',' << w.a.str() << ',' << w.b.str() << ','
                    << kind_code(w.kind) << '\n';
        break;
    case OutputFormat::Markdown:
        out << "### closure of " << seed_name << " (primes " << config.restriction.str() << ", kinds "
            << kinds_str(config.kinds) << ")\n\n";
        out << "| generation | tone | witness |\n|---|---|---|\n";
        for (std::size_t g = 0; g < trace.generations.size(); ++g)
            for (const auto& w : trace.generations[g].witnesses)
                out << "| " << (g + 1) << " | " << w.tone.str() << " | " << witness_str(w) << " |\n";
        out << "\nfixpoint: " << (trace.fixpoint_reached ? "yes" : "no") << "\n\nfinal: "
            << join(trace.final_scale.tones(), ", ") << '\n';
        break;
    case OutputFormat::Plain:
        out << "closure of " << seed_name << " under primes " << config.restriction.str() << ", kinds "
            << kinds_str(config.kinds) << '\n';
        out << "seed: " << join(trace.seed.tones()) << '\n';
        for (std::size_t g = 0; g < trace.generations.size(); ++g) {
            out << "generation " << (g + 1) << ":";
            for (const auto& w : trace.generations[g].witnesses)
                out << ' ' << w.tone.str() << " = " << witness_str(w) << ';';
            out << '\n';
        }
        if (trace.fixpoint_reached)
            out << "fixpoint reached after " << trace.generations.size() << " generation(s)\n";
        else
            out << "generation cap of " << config.max_generations << " reached without a fixpoint\n";
        out << "final (" << trace.final_scale.size() << " tones): " << join(trace.final_scale.tones()) << '\n';
        break;
    }
}

// ---- table -------------------------------------------------------------

void render_table_plain(std::ostream& out, const std::string& name, const MeanTable& table) {
    const auto& tones = table.scale().tones();
    std::size_t width = name.size();
    for (const auto& t : tones) width = std::max(width, t.str().size());
    for (const auto& c : table.cells()) width = std::max(width, c.mean.str().size() + 2);
    auto cell = [&](const std::string& s) { return fmt::format("{:<{}} ", s, width); };

    out << "mean table (" << kind_name(table.kind()) << ") of " << name << ", primes " << table.restriction().str()
        << "; [x] in scale, (x) in limit\n";
    auto flush = [&](std::string& line) {
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
        line.clear();
    };
    std::string line = cell(name) + "|";
    for (const auto& t : tones) line += ' ' + cell(t.str());
    flush(line);
    for (std::size_t i = 0; i + 1 < tones.size(); ++i) {
        line = cell(tones[i].str()) + "|";
        for (std::size_t j = 0; j < tones.size(); ++j) {
            std::string text;
            if (j > i) {
                text = "-";
                for (const auto& c : table.cells()) {
                    if (c.row != tones[i] || c.col != tones[j]) continue;
                    switch (c.cls) {
                    case CellClass::InScale: text = "[" + c.mean.str() + "]"; break;
                    case CellClass::InLimit: text = "(" + c.mean.str() + ")"; break;
                    case CellClass::Outside: text = c.mean.str(); break;
                    }
                }
            }
            line += ' ' + cell(text);
        }
        flush(line);
    }
}

void render_table(std::ostream& out, const std::string& name, const MeanTable& table, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["name"] = name;
        Json body = io::table_to_json(table);
        for (auto& [k, v] : body.items()) doc[k] = v;
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv: out << io::table_to_csv(table); break;
    case OutputFormat::Markdown: out << io::table_to_markdown(name, table); break;
    case OutputFormat::Plain: render_table_plain(out, name, table); break;
    }
}

// ---- compare / intervals -----------------------------------------------

void render_comparison(std::ostream& out, const std::string& name, int divisions,
                       const std::vector<EqualComparison>& rows, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["name"] = name;
        doc["divisions"] = divisions;
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["tone"] = r.tone.str();
            j["degree"] = r.degree;
            j["deviation_cents"] = r.deviation;
            arr.push_back(std::move(j));
        }
        doc["rows"] = std::move(arr);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "tone,degree,deviation_cents\n";
        for (const auto& r : rows) out << r.tone.str() << ',' << r.degree << ',' << io::fixed(r.deviation, 3) << '\n';
        break;
    case OutputFormat::Markdown:
        out << "### " << name << " vs " << divisions << "-tone equal temperament\n\n"
            << "| tone | degree | deviation (cents) |\n|---|---|---|\n";
        for (const auto& r : rows)
            out << "| " << r.tone.str() << " | " << r.degree << " | " << io::fixed(r.deviation, 3) << " |\n";
        break;
    case OutputFormat::Plain:
        out << name << " vs " << divisions << "-tone equal temperament\n";
        out << fmt::format("{:<12} {:>6} {:>12}\n", "tone", "degree", "cents");
        for (const auto& r : rows)
            out << fmt::format("{:<12} {:>6} {:>12}\n", r.tone.str(), r.degree,
                               (r.deviation > 0 ? "+" : "") + io::fixed(r.deviation, 3));
        break;
    }
}

void render_census(std::ostream& out, const std::string& name, const std::vector<CensusEntry>& census,
                   OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        Json doc;
        doc["name"] = name;
        Json arr = Json::array();
        for (const auto& e : census) {
            Json j;
            j["interval"] = e.interval.str();
            j["label"] = nullable(e.label);
            j["count"] = e.count;
            j["cents"] = cents(e.interval);
            arr.push_back(std::move(j));
        }
        doc["intervals"] = std::move(arr);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "interval,label,count,cents\n";
        for (const auto& e : census)
            out << e.interval.str() << ',' << label_or(e.label) << ',' << e.count << ',' << io::fixed(cents(e.interval), 3)
                << '\n';
        break;
    case OutputFormat::Markdown:
        out << "### step intervals of " << name << "\n\n| interval | name | count | cents |\n|---|---|---|---|\n";
        for (const auto& e : census)
            out << "| " << e.interval.str() << " | " << label_or(e.label) << " | " << e.count << " | "
                << io::fixed(cents(e.interval), 3) << " |\n";
        break;
    case OutputFormat::Plain:
        out << "step intervals of " << name << '\n';
        for (const auto& e : census)
            out << fmt::format("{:<10} x{:<3} {:>10}  {}\n", e.interval.str(), e.count, io::fixed(cents(e.interval), 3),
                               label_or(e.label));
        break;
    }
}

OutputFormat to_format(const std::string& text) {
    auto f = io::parse_format(text);
    if (!f) throw UsageError("unknown format '" + text + "' (json, csv, markdown, plain)");
    return *f;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and analysis of Pythagorean, natural and equal-tempered pitch systems",
                 "harmonia"};
    app.require_subcommand(1);

    std::string format_text = "plain";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format,-f", format_text, "json, csv, markdown or plain")->capture_default_str();
    };

    std::string scale_spec;
    std::string primes_text = "2,3,5";
    std::string kinds_text = "A";
    int max_generations = 64;
    int divisions = 12;

    auto* scale_cmd = app.add_subcommand("scale", "Print a scale with cents and named steps");
    scale_cmd->add_option("scale", scale_spec, "name, pythagorean:steps=K, equal:N=K, @file.json or tone list")
        ->required();
    add_format(scale_cmd);

    auto* closure_cmd = app.add_subcommand("closure", "Iterate the mean generator to a fixpoint");
    closure_cmd->add_option("seed", scale_spec, "seed scale")->required();
    closure_cmd->add_option("--primes", primes_text, "allowed primes")->capture_default_str();
    closure_cmd->add_option("--kinds", kinds_text, "mean kinds, any of A,G,H")->capture_default_str();
    closure_cmd->add_option("--max-generations", max_generations, "generation cap")->capture_default_str();
    add_format(closure_cmd);

    auto* table_cmd = app.add_subcommand("table", "Pairwise mean table with classification");
    table_cmd->add_option("scale", scale_spec, "scale")->required();
    table_cmd->add_option("--primes", primes_text, "allowed primes")->capture_default_str();
    table_cmd->add_option("--kind", kinds_text, "mean kind: A, G or H")->capture_default_str();
    add_format(table_cmd);

    auto* compare_cmd = app.add_subcommand("compare", "Deviation of each tone from equal temperament");
    compare_cmd->add_option("scale", scale_spec, "scale")->required();
    compare_cmd->add_option("-N,--N", divisions, "divisions of the diapason")->capture_default_str();
    add_format(compare_cmd);

    auto* intervals_cmd = app.add_subcommand("intervals", "Census of step intervals");
    intervals_cmd->add_option("scale", scale_spec, "scale")->required();
    add_format(intervals_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        OutputFormat format = to_format(format_text);

        if (scale_cmd->parsed()) {
            constexpr std::string_view eq = "equal:N=";
            if (scale_spec.starts_with(eq)) {
                render_equal(out, scale_spec, equal_temperament(parse_int_suffix(scale_spec, eq)), format);
            } else {
                render_scale(out, resolve_scale(scale_spec), format);
            }
            return kOk;
        }
        if (closure_cmd->parsed()) {
            auto seed = resolve_scale(scale_spec);
            GeneratorConfig config;
            config.kinds = parse_kinds(kinds_text);
            config.restriction = parse_primes(primes_text);
            config.max_generations = max_generations;
            auto trace = mean_closure(seed.scale, config);
            render_trace(out, seed.name, trace, config, format);
            if (!trace.fixpoint_reached) {
                err << "closure hit the generation cap of " << max_generations << '\n';
                return kCapHit;
            }
            return kOk;
        }
        if (table_cmd->parsed()) {
            auto s = resolve_scale(scale_spec);
            auto kinds = parse_kinds(kinds_text);
            if (kinds.size() != 1) throw UsageError("table takes a single mean kind");
            render_table(out, s.name, mean_table(s.scale, parse_primes(primes_text), kinds.front()), format);
            return kOk;
        }
        if (compare_cmd->parsed()) {
            auto s = resolve_scale(scale_spec);
            render_comparison(out, s.name, divisions, compare_to_equal(s.scale, divisions), format);
            return kOk;
        }
        if (intervals_cmd->parsed()) {
            auto s = resolve_scale(scale_spec);
            render_census(out, s.name, interval_census(s.scale), format);
            return kOk;
        }
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kOverflow;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace harmonia::cli
