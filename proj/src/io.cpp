#include "heffter/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace heffter {

using nlohmann::json;

std::string to_json(const PartialArray& array) {
    const Dims& d = array.dims();
    json cells = json::array();
    for (const auto& [cell, v] : array.entries())
        cells.push_back({{"row", cell.row}, {"col", cell.col}, {"value", v}});
    json doc{{"m", d.m},           {"n", d.n},
             {"h", d.h},           {"k", d.k},
             {"modulus", d.modulus()}, {"cells", std::move(cells)}};
    return doc.dump(1) + "\n";
}

PartialArray from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        Dims d(doc.at("m").get<int>(), doc.at("n").get<int>(),
               doc.at("h").get<int>(), doc.at("k").get<int>());
        if (doc.contains("modulus") &&
            doc.at("modulus").get<std::int64_t>() != d.modulus())
            throw ParseError("modulus field disagrees with 2nk+1");
        PartialArray a(d);
        for (const auto& c : doc.at("cells"))
            a.place({c.at("row").get<int>(), c.at("col").get<int>()},
                    c.at("value").get<std::int64_t>());
        return a;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad array file: ") + e.what());
    } catch (const HeffterError& e) {
        throw ParseError(std::string("bad array file: ") + e.what());
    }
}

std::string to_csv(const PartialArray& array) {
    const Dims& d = array.dims();
    std::string out;
    for (int r = 1; r <= d.m; ++r) {
        for (int c = 1; c <= d.n; ++c) {
            if (c > 1) out += ',';
            Cell cell{r, c};
            if (array.filled(cell)) out += std::to_string(array.at(cell));
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

PartialArray from_csv(const std::string& text) {
    std::vector<std::vector<std::optional<std::int64_t>>> grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty() && in.eof()) break;
        std::vector<std::optional<std::int64_t>> row;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            field = trim(field);
            if (field.empty()) {
                row.emplace_back();
            } else {
                try {
                    std::size_t pos = 0;
                    std::int64_t v = std::stoll(field, &pos);
                    if (pos != field.size()) throw ParseError("trailing junk in field");
                    row.emplace_back(v);
                } catch (const ParseError&) {
                    throw;
                } catch (const std::exception&) {
                    throw ParseError("bad CSV field '" + field + "'");
                }
            }
        }
        // a line ending in ',' has one more (empty) field than commas split out
        if (!line.empty() && line.back() == ',') row.emplace_back();
        grid.push_back(std::move(row));
    }
    if (grid.empty()) throw ParseError("empty CSV grid");
    const int m = static_cast<int>(grid.size());
    const int n = static_cast<int>(grid[0].size());
    std::int64_t total = 0;
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != n)
            throw ParseError("ragged CSV grid");
        for (const auto& f : row)
            if (f) ++total;
    }
    if (total == 0 || total % m != 0 || total % n != 0)
        throw ParseError("cannot infer uniform fill counts from CSV grid");
    Dims d(m, n, static_cast<int>(total / m), static_cast<int>(total / n));
    PartialArray a(d);
    try {
        for (int r = 1; r <= m; ++r)
            for (int c = 1; c <= n; ++c)
                if (grid[r - 1][c - 1]) a.place({r, c}, *grid[r - 1][c - 1]);
    } catch (const HeffterError& e) {
        throw ParseError(std::string("bad CSV grid: ") + e.what());
    }
    return a;
}

std::string to_grid(const PartialArray& array) {
    const Dims& d = array.dims();
    std::size_t width = 1;
    for (const auto& [cell, v] : array.entries())
        width = std::max(width, std::to_string(v).size());
    std::string out;
    for (int r = 1; r <= d.m; ++r) {
        for (int c = 1; c <= d.n; ++c) {
            Cell cell{r, c};
            std::string field = array.filled(cell) ? std::to_string(array.at(cell)) : ".";
            out += std::string(width - field.size() + (c > 1 ? 1 : 0), ' ');
            out += field;
        }
        out += '\n';
    }
    return out;
}

std::string serialize(const PartialArray& array, const std::string& format) {
    if (format == "json") return to_json(array);
    if (format == "csv") return to_csv(array);
    if (format == "grid") return to_grid(array);
    throw HeffterError("unknown format '" + format + "'");
}

std::string sum_table_csv(const std::vector<SumTrace>& traces) {
    std::string text;
    for (const auto& tr : traces) {
        text += (tr.axis == Axis::Row ? "Row " : "Col ") + std::to_string(tr.index);
        for (auto s : tr.sums) text += "," + std::to_string(s);
        text += "\n";
    }
    return text;
}

PartialArray parse_array(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] == '{') return from_json(text);
    return from_csv(text);
}

PartialArray load_array(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_array(buf.str());
}

}  // namespace heffter
