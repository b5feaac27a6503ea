#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cacforge/surd.hpp"

namespace cacforge {

enum class Taxonomy { MiddleC, SideWire2, SideWire1, LegacyD };

std::string taxonomy_name(Taxonomy t);

// One printed table row: a subclass of patterns sharing one closed form.
struct GoldenRow {
    int cls = 0;
    std::vector<std::string> patterns;
    std::vector<Surd> coeff_pi;          // coefficients times pi, in column order
    std::vector<Surd> printed_coeff_pi;  // published tuple where it differs (erratum), else empty
    double evaluated_ps = 0;
};

struct GoldenTable {
    Taxonomy taxonomy = Taxonomy::MiddleC;
    int radicand = 5;
    std::vector<GoldenRow> rows;

    std::map<std::string, int> membership() const;
};

struct GoldenSizeRow {
    int n = 0;
    long iolc_words = 0, iolc_bits = 0;
    double iolc_gain = 0;
    long c21_words = 0, c21_bits = 0;
    double c21_gain = 0;
    long olc_words = 0, olc_bits = 0;
};

std::string golden_filename(Taxonomy t);

GoldenTable parse_golden(std::istream& in, Taxonomy t);
std::vector<GoldenSizeRow> parse_golden_sizes(std::istream& in);

// Tables compiled into the library from data/golden.
const GoldenTable& embedded_golden(Taxonomy t);
const std::vector<GoldenSizeRow>& embedded_golden_sizes();

// $CACFORGE_GOLDEN_DIR, else the source-tree data/golden.
std::filesystem::path golden_dir();
GoldenTable load_golden(const std::filesystem::path& dir, Taxonomy t);
std::vector<GoldenSizeRow> load_golden_sizes(const std::filesystem::path& dir);

// Column order of a table relative to eigensystem mode order.
std::vector<int> table_mode_order(Taxonomy t);

}  // namespace cacforge
