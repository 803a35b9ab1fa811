#include "harmonia/io.hpp"

#include <fmt/format.h>

#include <sstream>

namespace harmonia::io {

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "markdown" || text == "md") return OutputFormat::Markdown;
    if (text == "plain") return OutputFormat::Plain;
    return std::nullopt;
}

std::string_view format_name(OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Markdown: return "markdown";
    case OutputFormat::Plain: return "plain";
    }
    return "?";
}

std::string fixed(double value, int decimals) {
    std::string s = fmt::format("{:.{}f}", value, decimals);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

namespace {

Json ratio_list(const std::vector<Ratio>& tones) {
    Json arr = Json::array();
    for (const auto& t : tones) arr.push_back(t.str());
    return arr;
}

} // namespace

Json scale_to_json(std::string_view name, const Scale& scale) {
    Json doc;
    doc["name"] = std::string(name);
    doc["tones"] = ratio_list(scale.tones());
    return doc;
}

Scale scale_from_json(const nlohmann::json& doc) {
    std::vector<Ratio> tones;
    for (const auto& t : doc.at("tones"))
        tones.push_back(Ratio::parse(t.get<std::string>()));
    return Scale(std::move(tones));
}

Scale parse_scale_json(std::string_view text) {
    return scale_from_json(nlohmann::json::parse(text));
}

std::string scale_to_csv(const Scale& scale) {
    std::string out = "tone,num,den,cents\n";
    for (const auto& t : scale)
        out += fmt::format("{},{},{},{}\n", t.str(), to_string(t.num()), to_string(t.den()), fixed(cents(t), 3));
    return out;
}

Json trace_to_json(const ClosureTrace& trace) {
    Json doc;
    doc["seed"] = ratio_list(trace.seed.tones());
    Json gens = Json::array();
    for (const auto& g : trace.generations) {
        Json gen;
        gen["added"] = ratio_list(g.added);
        Json ws = Json::array();
        for (const auto& w : g.witnesses) {
            Json wj;
            wj["tone"] = w.tone.str();
            wj["a"] = w.a.str();
            wj["b"] = w.b.str();
            wj["kind"] = std::string(1, kind_code(w.kind));
            ws.push_back(std::move(wj));
        }
        gen["witnesses"] = std::move(ws);
        gens.push_back(std::move(gen));
    }
    doc["generations"] = std::move(gens);
    doc["fixpoint"] = trace.fixpoint_reached;
    doc["final"] = ratio_list(trace.final_scale.tones());
    return doc;
}

std::string table_to_csv(const MeanTable& table) {
    std::string out = "row,col,mean,class\n";
    for (const auto& c : table.cells())
        out += fmt::format("{},{},{},{}\n", c.row.str(), c.col.str(), c.mean.str(), class_name(c.cls));
    return out;
}

Json table_to_json(const MeanTable& table) {
    Json doc;
    doc["scale"] = ratio_list(table.scale().tones());
    doc["primes"] = table.restriction().str();
    doc["kind"] = std::string(1, kind_code(table.kind()));
    Json cells = Json::array();
    for (const auto& c : table.cells()) {
        Json cj;
        cj["row"] = c.row.str();
        cj["col"] = c.col.str();
        cj["mean"] = c.mean.str();
        cj["class"] = std::string(class_name(c.cls));
        cells.push_back(std::move(cj));
    }
    doc["cells"] = std::move(cells);
    return doc;
}

std::string table_to_markdown(std::string_view name, const MeanTable& table) {
    const auto& tones = table.scale().tones();
    std::ostringstream os;
    os << "| " << name << " |";
    for (const auto& t : tones) os << ' ' << t.str() << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < tones.size(); ++i) os << "---|";
    os << '\n';
    for (std::size_t i = 0; i + 1 < tones.size(); ++i) {
        os << "| " << tones[i].str() << " |";
        for (std::size_t j = 0; j < tones.size(); ++j) {
            if (j <= i) {
                os << "  |";
                continue;
            }
            const TableCell* cell = nullptr;
            for (const auto& c : table.cells())
                if (c.row == tones[i] && c.col == tones[j]) cell = &c;
            if (!cell) {
                os << " - |";
                continue;
            }
            switch (cell->cls) {
            case CellClass::InScale: os << " **" << cell->mean.str() << "** |"; break;
            case CellClass::InLimit: os << " *" << cell->mean.str() << "* |"; break;
            case CellClass::Outside: os << ' ' << cell->mean.str() << " |"; break;
            }
        }
        os << '\n';
    }
    os << "\n**bold**: mean already in the scale; *italic*: outside the scale but within primes "
       << table.restriction().str() << "\n";
    return os.str();
}

} // namespace harmonia::io
