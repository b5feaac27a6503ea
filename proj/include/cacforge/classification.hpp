#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cacforge/bus_model.hpp"
#include "cacforge/golden.hpp"

namespace cacforge {

class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DelayClass {
    Taxonomy taxonomy = Taxonomy::MiddleC;
    int index = 0;
    bool unconstrained = false;

    static DelayClass none(Taxonomy t) { return {t, -1, true}; }
    // "C3", "2C", "D1" or "-"
    std::string str() const;

    friend bool operator==(const DelayClass&, const DelayClass&) = default;
};

struct Subclass {
    int id = 0;
    std::vector<Surd> coeff_pi;  // table column order
    std::vector<std::string> members;
    double delay_ps = 0;
    int cls = -1;
};

struct Entry {
    Pattern pattern;
    int subclass = 0;
    DelayClass cls;
    double delay_ps = 0;
    ClosedFormResponse response;
};

struct ClassificationTable {
    Taxonomy taxonomy = Taxonomy::MiddleC;
    BusParams params;
    std::vector<Subclass> subclasses;  // ascending delay
    std::map<std::string, Entry> entries;

    const Entry& at(const std::string& pattern) const;
    int class_count() const;
    std::vector<std::string> members_of(int cls) const;
    // (min, max) evaluated delay per class index
    std::vector<std::pair<double, double>> class_ranges() const;
    // pairs (i, j), i < j, whose delay intervals intersect
    std::vector<std::pair<int, int>> overlapping_classes() const;
    bool non_overlapping() const { return overlapping_classes().empty(); }
};

// examined is 1-based: wire 3 of 5, or wire 1/2 of 4. Free wires run Up < Hold < Down.
std::vector<Pattern> enumerate_patterns(int width, int examined, Symbol examined_symbol);

// Groups patterns by exact coefficient tuple; classes left unassigned (-1).
ClassificationTable build_subclasses(const std::vector<Pattern>& patterns, const BusParams& params,
                                     Taxonomy taxonomy);

// Splits ascending delays where (d[i+1] - d[i]) / d[i+1] >= threshold; returns a cluster id per delay.
std::vector<int> gap_clusters(const std::vector<double>& ascending, double threshold = 0.25);

ClassificationTable classify_middle(const BusParams& params);
// {wire 2, wire 1}
std::pair<ClassificationTable, ClassificationTable> classify_side(const BusParams& params);

// Same as classify_* but without the admissible-lambda guard; used by sweeps.
ClassificationTable classify_frozen(Taxonomy taxonomy, const BusParams& params);

struct LegacyResult {
    DelayClass cls;
    double bound_ps = 0;
};

LegacyResult classify_legacy(const Pattern& pattern, const BusParams& params);

struct Tables {
    ClassificationTable middle;
    ClassificationTable wire2;
    ClassificationTable wire1;
};

Tables build_tables(const BusParams& params = {});

DelayClass window_class(const Pattern& window, const Tables& tables);

// Class governing the edge pair of a 4-wire window (index 0 = bus edge):
// wire 2 if it switches, else wire 1 if it switches, else unconstrained.
DelayClass side_window_class(const std::array<Symbol, 4>& window, const Tables& tables);

// Array-backed lookups over transition deltas for hot loops. -1 means unconstrained.
class WindowClassifier {
public:
    explicit WindowClassifier(const Tables& tables);

    // delta[0..4], middle wire examined
    int middle(const int* delta) const;
    // delta[0..3] with delta[0] on the bus edge; wire-2/wire-1 dispatch
    int side(const int* delta) const;

private:
    std::array<int, 243> middle_{};
    std::array<int, 81> side_{};
};

struct SweepPoint {
    double lambda = 0;
    std::vector<std::pair<double, double>> ranges;
    std::vector<std::pair<int, int>> overlaps;
    bool non_overlap() const { return overlaps.empty(); }
};

// Frozen class memberships; LegacyD regroups the middle-wire delays by three-wire legacy class.
std::vector<SweepPoint> sweep_lambda(const std::vector<double>& lambdas, Taxonomy taxonomy, double tau0_ps = 1.42);

}  // namespace cacforge
