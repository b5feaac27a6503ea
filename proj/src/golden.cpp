#include "cacforge/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "golden_embedded.hpp"

namespace cacforge {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

// "a:b" -> (a + b sqrt r) / r, times pi already factored out
Surd parse_coeff(const std::string& field, int radicand) {
    auto parts = split(field, ':');
    if (parts.size() != 2) throw std::runtime_error("bad coefficient field: " + field);
    std::int64_t a = std::stoll(parts[0]);
    std::int64_t b = std::stoll(parts[1]);
    return Surd(Rational(a, radicand), Rational(b, radicand), radicand);
}

}  // namespace

std::string taxonomy_name(Taxonomy t) {
    switch (t) {
    case Taxonomy::MiddleC: return "middle";
    case Taxonomy::SideWire2: return "wire2";
    case Taxonomy::SideWire1: return "wire1";
    case Taxonomy::LegacyD: return "legacy";
    }
    return "?";
}

std::map<std::string, int> GoldenTable::membership() const {
    std::map<std::string, int> m;
    for (const auto& r : rows)
        for (const auto& p : r.patterns) m[p] = r.cls;
    return m;
}

std::string golden_filename(Taxonomy t) {
    switch (t) {
    case Taxonomy::MiddleC: return "table1_middle.csv";
    case Taxonomy::SideWire2: return "table2_wire2.csv";
    case Taxonomy::SideWire1: return "table3_wire1.csv";
    default: throw std::invalid_argument("no golden table for legacy taxonomy");
    }
}

std::vector<int> table_mode_order(Taxonomy t) {
    // The middle table lists the three live modes by ascending time constant: p1, p3, p2.
    if (t == Taxonomy::MiddleC) return {0, 2, 1};
    return {0, 1, 2, 3};
}

GoldenTable parse_golden(std::istream& in, Taxonomy t) {
    GoldenTable table;
    table.taxonomy = t;
    table.radicand = t == Taxonomy::MiddleC ? 5 : 2;
    const size_t ncoef = t == Taxonomy::MiddleC ? 3 : 4;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, ',');
        if (f.size() != ncoef + 4) throw std::runtime_error("bad golden row: " + line);
        GoldenRow row;
        row.cls = std::stoi(f[0]);
        std::istringstream ps(f[1]);
        for (std::string p; ps >> p;) row.patterns.push_back(p);
        for (size_t i = 0; i < ncoef; ++i) row.coeff_pi.push_back(parse_coeff(f[2 + i], table.radicand));
        row.evaluated_ps = std::stod(f[2 + ncoef]);
        if (!f[3 + ncoef].empty())
            for (const auto& c : split(f[3 + ncoef], ';')) row.printed_coeff_pi.push_back(parse_coeff(c, table.radicand));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<GoldenSizeRow> parse_golden_sizes(std::istream& in) {
    std::vector<GoldenSizeRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, ',');
        if (f.size() != 9) throw std::runtime_error("bad size row: " + line);
        rows.push_back({std::stoi(f[0]), std::stol(f[1]), std::stol(f[2]), std::stod(f[3]), std::stol(f[4]),
                        std::stol(f[5]), std::stod(f[6]), std::stol(f[7]), std::stol(f[8])});
    }
    return rows;
}

const GoldenTable& embedded_golden(Taxonomy t) {
    static const GoldenTable tables[3] = {
        [] { std::istringstream s{std::string(golden_text::table1_middle)}; return parse_golden(s, Taxonomy::MiddleC); }(),
        [] { std::istringstream s{std::string(golden_text::table2_wire2)}; return parse_golden(s, Taxonomy::SideWire2); }(),
        [] { std::istringstream s{std::string(golden_text::table3_wire1)}; return parse_golden(s, Taxonomy::SideWire1); }(),
    };
    switch (t) {
    case Taxonomy::MiddleC: return tables[0];
    case Taxonomy::SideWire2: return tables[1];
    case Taxonomy::SideWire1: return tables[2];
    default: throw std::invalid_argument("no golden table for legacy taxonomy");
    }
}

const std::vector<GoldenSizeRow>& embedded_golden_sizes() {
    static const auto rows = [] {
        std::istringstream s{std::string(golden_text::table8_sizes)};
        return parse_golden_sizes(s);
    }();
    return rows;
}

std::filesystem::path golden_dir() {
    if (const char* env = std::getenv("CACFORGE_GOLDEN_DIR"); env && *env) return env;
    return CACFORGE_DEFAULT_GOLDEN_DIR;
}

GoldenTable load_golden(const std::filesystem::path& dir, Taxonomy t) {
    std::ifstream in(dir / golden_filename(t));
    if (!in) throw std::runtime_error("cannot open golden table " + (dir / golden_filename(t)).string());
    return parse_golden(in, t);
}

std::vector<GoldenSizeRow> load_golden_sizes(const std::filesystem::path& dir) {
    std::ifstream in(dir / "table8_sizes.csv");
    if (!in) throw std::runtime_error("cannot open " + (dir / "table8_sizes.csv").string());
    return parse_golden_sizes(in);
}

}  // namespace cacforge
