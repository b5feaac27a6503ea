#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cacforge/codebook.hpp"

namespace cacforge {

class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Delays of every 5-wire middle window and every 4-wire edge window, precomputed.
class DelayModel {
public:
    explicit DelayModel(const BusParams& params = {});

    const BusParams& params() const { return params_; }
    // delta[0..4], wire delta[2] examined
    double middle(const int* delta) const;
    // delta[0..3], delta[0] on the bus edge; examined is 0 (edge wire) or 1
    double edge(const int* delta, int examined) const;

private:
    BusParams params_;
    std::array<double, 243> middle_{};
    std::array<std::array<double, 81>, 2> edge_{};
};

// Per-wire 50% delays (ps) of the transition u -> v on an n-wire bus; holding wires give 0.
std::vector<double> pair_wire_delays(Word u, Word v, int n, const DelayModel& model);

enum class EvalMethod { Auto, Exhaustive, WindowComposition };

struct DelayReport {
    int width = 0;
    size_t codewords = 0;
    std::vector<double> wire_worst_ps;
    std::vector<std::pair<Word, Word>> wire_argmax;
    double worst_ps = 0;
    int worst_wire = 0;  // 1-based
    BusParams params;
    std::string method;
};

// Worst delay per wire over all ordered codeword pairs; ties go to the smallest (u, v).
// Auto enumerates pairs up to 2000 codewords and composes per-position windows beyond that.
DelayReport codebook_worst_delay(const Codebook& cb, const DelayModel& model, EvalMethod method = EvalMethod::Auto);

struct Metrics {
    size_t size = 0;
    int width = 0;
    int bits = 0;
    double rate = 0;
    double worst_ps = 0;
    double throughput = 0;  // rate / ps
    std::optional<double> gain;
};

Metrics metrics_of(const Codebook& cb, const DelayReport& report);
Metrics metrics(const Codebook& cb, const Codebook& baseline, const DelayModel& model);

struct NamedCodebook {
    std::string name;
    Codebook codebook;
};

struct ComparisonRow {
    std::string name;
    DelayReport report;
    Metrics metrics;
};

// gains relative to the row named by baseline, when present
std::vector<ComparisonRow> compare(const std::vector<NamedCodebook>& codebooks, const DelayModel& model,
                                   const std::string& baseline = "");

struct SizeRow {
    int n = 0;
    Metrics iolc, c21, olc;
};

std::vector<SizeRow> size_table(int n_from, int n_to, const Tables& tables, const DelayModel& model);

// name -> codebook for names such as iolc10, c21_16, olc8, fpc8, foc12, c31_10
Codebook named_codebook(const std::string& name, const Tables& tables);

void write_wire_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);
void write_summary_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);
void write_size_csv(std::ostream& out, const std::vector<SizeRow>& rows);
nlohmann::json comparison_json(const std::vector<ComparisonRow>& rows);
nlohmann::json size_json(const std::vector<SizeRow>& rows);

}  // namespace cacforge
