#pragma once

// Text formats shared by the command-line tool: permutation and pattern
// syntax, and the csv / json / b-file table layouts.
//
//   csv:   header "n,k0,k1,...", one row per n, empty cells where a row is
//          shorter than the widest row.
//   json:  {"pattern":[a,b,c,d],"rows":{"1":[...],...},"version":1}
//          (triangles carry "triangle":"<name>" instead of "pattern").
//   bfile: "n value" lines for one fixed column k.

#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "distribution.hpp"
#include "integer.hpp"
#include "permutation.hpp"
#include "triangles.hpp"

namespace meshpat {

inline constexpr int format_version = 1;

inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                  : comma - start);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw invalid_input("malformed integer '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// "7,6,8,9,4,5,2,1,3" or, for n <= 9, "768945213".
inline Permutation parse_permutation(std::string_view text) {
    if (text.find(',') == std::string_view::npos && text.size() > 1) {
        if (text.size() > 9) throw invalid_input("permutations longer than 9 need comma separators");
        std::vector<int> v;
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw invalid_input("malformed permutation '" + std::string(text) + "'");
            v.push_back(ch - '0');
        }
        return Permutation(std::move(v));
    }
    return Permutation(parse_int_list(text));
}

inline MeshPattern parse_pattern(std::string_view text) {
    auto v = parse_int_list(text);
    if (v.size() != 4) throw invalid_input("pattern needs four comma-separated thresholds a,b,c,d");
    return MeshPattern(v[0], v[1], v[2], v[3]);
}

inline std::string join(const std::vector<Integer>& values, std::string_view sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += values[i].to_string();
    }
    return out;
}

// Rows of a number array; row n holds the entries for k = first_k, first_k+1, ...
struct NumberTable {
    std::optional<MeshPattern> pattern;
    std::string triangle;
    std::size_t first_k = 0;
    std::map<std::size_t, std::vector<Integer>> rows;

    std::size_t width() const {
        std::size_t w = 0;
        for (const auto& [n, row] : rows) w = std::max(w, row.size());
        return w;
    }

    friend bool operator==(const NumberTable&, const NumberTable&) = default;
};

inline NumberTable to_number_table(const DistributionTable& t) {
    return NumberTable{t.pattern(), {}, 0, t.rows};
}

inline std::string triangle_name(TriangleKind k) {
    switch (k) {
        case TriangleKind::catalan: return "catalan";
        case TriangleKind::narayana: return "narayana";
        case TriangleKind::q_zero: return "qzero";
    }
    return "unknown";
}

inline NumberTable to_number_table(const TriangleTable& t) {
    NumberTable out{std::nullopt, triangle_name(t.kind), 1, {}};
    for (const auto& [nk, v] : t.entries) {
        auto& row = out.rows[nk.first];
        if (row.size() < nk.second) row.resize(nk.second);
        row[nk.second - 1] = v;
    }
    return out;
}

inline std::string render_csv(const NumberTable& t) {
    std::ostringstream os;
    const std::size_t w = t.width();
    os << 'n';
    for (std::size_t c = 0; c < w; ++c) os << ",k" << t.first_k + c;
    os << '\n';
    for (const auto& [n, row] : t.rows) {
        os << n;
        for (std::size_t c = 0; c < w; ++c) {
            os << ',';
            if (c < row.size()) os << row[c];
        }
        os << '\n';
    }
    return os.str();
}

inline NumberTable parse_csv(std::string_view text) {
    NumberTable t;
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line) || line.rfind("n", 0) != 0) throw invalid_input("csv: missing header");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    if (header.size() >= 2) {
        if (header[1].size() < 2 || header[1][0] != 'k') throw invalid_input("csv: malformed header");
        t.first_k = static_cast<std::size_t>(std::stoul(header[1].substr(1)));
    }
    const std::size_t w = header.size() - 1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (cells.size() != w + 1) throw invalid_input("csv: row width does not match header");
        auto& row = t.rows[static_cast<std::size_t>(Integer::parse(cells[0]).to_u64())];
        for (std::size_t c = 1; c < cells.size() && !cells[c].empty(); ++c) row.push_back(Integer::parse(cells[c]));
    }
    return t;
}

inline std::string render_json(const NumberTable& t) {
    nlohmann::ordered_json j;
    if (t.pattern) j["pattern"] = {t.pattern->a, t.pattern->b, t.pattern->c, t.pattern->d};
    else j["triangle"] = t.triangle;
    if (t.first_k != 0) j["first_k"] = t.first_k;
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (const auto& [n, row] : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(v.to_u64());
        rows[std::to_string(n)] = std::move(r);
    }
    j["rows"] = std::move(rows);
    j["version"] = format_version;
    return j.dump() + "\n";
}

inline NumberTable parse_json(std::string_view text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("json: ") + e.what());
    }
    if (!j.contains("version") || j["version"] != format_version) throw invalid_input("json: unsupported version");
    NumberTable t;
    if (j.contains("pattern")) {
        auto p = j["pattern"].get<std::vector<int>>();
        if (p.size() != 4) throw invalid_input("json: pattern needs four entries");
        t.pattern = MeshPattern(p[0], p[1], p[2], p[3]);
    } else {
        t.triangle = j.at("triangle").get<std::string>();
    }
    t.first_k = j.value("first_k", std::size_t{0});
    for (const auto& [key, row] : j.at("rows").items()) {
        auto& out = t.rows[static_cast<std::size_t>(std::stoul(key))];
        for (const auto& v : row) out.push_back(Integer(v.get<std::uint64_t>()));
    }
    return t;
}

// One "n value" line per row that has an entry in column k.
inline std::string render_bfile(const NumberTable& t, std::size_t k) {
    if (k < t.first_k) throw invalid_input("bfile: column index below the first column");
    std::ostringstream os;
    for (const auto& [n, row] : t.rows)
        if (k - t.first_k < row.size()) os << n << ' ' << row[k - t.first_k] << '\n';
    return os.str();
}

}  // namespace meshpat
