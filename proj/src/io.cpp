#include "mdt/io.hpp"

#include "mdt/errors.hpp"

#include <fstream>
#include <sstream>

namespace mdt::io {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

int positive_int(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1 << 20) {
        throw ParseError(std::string("field \"") + name + "\" must be a positive integer");
    }
    return v.get<int>();
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    return Rat::parse(j.get<std::string>());
}

Json matrix_to_json(const MultiMatrix& a) {
    Json j;
    j["d"] = a.dim();
    j["n"] = a.order();
    j["bits"] = a.bit_string();
    return j;
}

MultiMatrix matrix_from_json(const Json& j) {
    const int d = positive_int(j, "d");
    const int n = positive_int(j, "n");
    const Json& bits = field(j, "bits");
    if (!bits.is_string()) throw ParseError("field \"bits\" must be a string");
    const auto& s = bits.get_ref<const std::string&>();
    std::size_t expected = 1;
    for (int i = 0; i < d; ++i) {
        if (expected > kDefaultEntryCap / static_cast<std::size_t>(n)) {
            throw ParseError("n^d exceeds the entry cap");
        }
        expected *= static_cast<std::size_t>(n);
    }
    if (s.size() != expected) {
        throw ParseError("bits has length " + std::to_string(s.size()) + " but n^d = " +
                         std::to_string(expected));
    }
    return MultiMatrix::from_string(d, n, s);
}

Json table_to_json(const WeightTable& t, const std::optional<Rat>& margin) {
    Json j;
    j["d"] = t.dim();
    j["n"] = t.order();
    Json rows = Json::array();
    for (int i = 0; i < t.dim(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < t.order(); ++c) row.push_back(rat_to_json(t.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["weights"] = std::move(rows);
    if (margin) j["margin"] = rat_to_json(*margin);
    return j;
}

WeightTable table_from_json(const Json& j, std::optional<Rat>* margin) {
    const int d = positive_int(j, "d");
    const int n = positive_int(j, "n");
    const Json& rows = field(j, "weights");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d)) {
        throw ParseError("weights must be an array of d rows");
    }
    std::vector<Rat> values;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw ParseError("each weights row must hold n rationals");
        }
        for (const auto& v : row) values.push_back(rat_from_json(v));
    }
    if (margin) {
        auto it = j.find("margin");
        *margin = it == j.end() ? std::nullopt : std::optional<Rat>(rat_from_json(*it));
    }
    return WeightTable(d, n, std::move(values));
}

Json polyplex_to_json(const Polyplex& k) {
    Json entries = Json::array();
    for (const auto& [alpha, w] : k.entries) entries.push_back(Json::array({alpha, rat_to_json(w)}));
    Json j;
    j["entries"] = std::move(entries);
    j["total"] = rat_to_json(k.weight);
    return j;
}

Polyplex polyplex_from_json(const Json& j) {
    Polyplex k;
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("entries must be an array");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array()) {
            throw ParseError("each polyplex entry must be [index, weight]");
        }
        Index alpha;
        for (const auto& c : e[0]) {
            if (!c.is_number_integer()) throw ParseError("index coordinates must be integers");
            alpha.push_back(c.get<int>());
        }
        k.entries[alpha] = rat_from_json(e[1]);
    }
    k.weight = rat_from_json(field(j, "total"));
    return k;
}

std::string render_text(const Json& report) {
    if (!report.is_object()) throw ParseError("reports are JSON objects");
    std::ostringstream os;
    for (const auto& [key, value] : report.items()) {
        if (value.is_array() && !value.empty()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                os << key << '[' << i << "]: " << value[i].dump() << '\n';
            }
        } else {
            os << key << ": " << value.dump() << '\n';
        }
    }
    return os.str();
}

Json parse_text(const std::string& text) {
    Json out = Json::object();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(": ");
        if (colon == std::string::npos) throw ParseError("report line without \": \": " + line);
        std::string key = line.substr(0, colon);
        Json value;
        try {
            value = Json::parse(line.substr(colon + 2));
        } catch (const nlohmann::json::parse_error&) {
            throw ParseError("report line with malformed value: " + line);
        }
        const auto bracket = key.find('[');
        if (bracket != std::string::npos && key.back() == ']') {
            const std::string name = key.substr(0, bracket);
            if (!out.contains(name)) out[name] = Json::array();
            out[name].push_back(std::move(value));
        } else {
            out[key] = std::move(value);
        }
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": malformed JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write file " + path);
    out << j.dump(2) << '\n';
}

}  // namespace mdt::io
