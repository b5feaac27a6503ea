#include "cacforge/evaluation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

namespace cacforge {

namespace {

int base3(const int* delta, int width) {
    int code = 0;
    for (int i = 0; i < width; ++i) code = code * 3 + (delta[i] + 1);
    return code;
}

std::vector<int> decode3(int code, int width) {
    std::vector<int> d(width);
    for (int i = width - 1; i >= 0; --i) {
        d[i] = code % 3 - 1;
        code /= 3;
    }
    return d;
}

// wire is 1-based; delta covers the whole bus
double wire_delay(const int* delta, int n, int wire, const DelayModel& m) {
    if (delta[wire - 1] == 0) return 0.0;
    if (wire >= 3 && wire <= n - 2) return m.middle(delta + wire - 3);
    if (wire <= 2) return m.edge(delta, wire - 1);
    int rev[4] = {delta[n - 1], delta[n - 2], delta[n - 3], delta[n - 4]};
    return m.edge(rev, n - wire);
}

// window of wires [lo, hi] (1-based) that decides the delay of wire
std::pair<int, int> wire_window(int n, int wire) {
    if (wire <= 2) return {1, 4};
    if (wire >= n - 1) return {n - 3, n};
    return {wire - 2, wire + 2};
}

void check_width(int n) {
    if (n < 5) throw EvaluationError("bus evaluation needs n >= 5");
    if (n > 63) throw EvaluationError("bus wider than 63 wires");
}

}  // namespace

DelayModel::DelayModel(const BusParams& params) : params_(params) {
    params_.validate();
    for (int code = 0; code < 243; ++code)
        middle_[code] = pattern_delay(Pattern::from_deltas(decode3(code, 5), 2), params_);
    for (int examined = 0; examined < 2; ++examined)
        for (int code = 0; code < 81; ++code)
            edge_[examined][code] = pattern_delay(Pattern::from_deltas(decode3(code, 4), examined), params_);
}

double DelayModel::middle(const int* delta) const { return middle_[base3(delta, 5)]; }

double DelayModel::edge(const int* delta, int examined) const {
    if (examined != 0 && examined != 1) throw EvaluationError("edge windows examine wire 1 or 2");
    return edge_[examined][base3(delta, 4)];
}

std::vector<double> pair_wire_delays(Word u, Word v, int n, const DelayModel& model) {
    check_width(n);
    if ((u >> n) || (v >> n)) throw EvaluationError("codeword wider than the bus");
    std::vector<int> d(n);
    for (int i = 1; i <= n; ++i) d[i - 1] = bit_at(v, n, i) - bit_at(u, n, i);
    std::vector<double> out(n);
    for (int k = 1; k <= n; ++k) out[k - 1] = wire_delay(d.data(), n, k, model);
    return out;
}

namespace {

void exhaustive(const Codebook& cb, const DelayModel& model, DelayReport& rep) {
    const int n = cb.width;
    std::vector<int> d(n);
    for (Word u : cb.words)
        for (Word v : cb.words) {
            if (u == v) continue;
            for (int i = 1; i <= n; ++i) d[i - 1] = bit_at(v, n, i) - bit_at(u, n, i);
            for (int k = 1; k <= n; ++k) {
                double t = wire_delay(d.data(), n, k, model);
                if (t > rep.wire_worst_ps[k - 1]) {
                    rep.wire_worst_ps[k - 1] = t;
                    rep.wire_argmax[k - 1] = {u, v};
                }
            }
        }
}

// Any two windows seen at one position come from some codeword pair, so the per-wire maximum over
// window pairs equals the maximum over codeword pairs.
void window_composition(const Codebook& cb, const DelayModel& model, DelayReport& rep) {
    const int n = cb.width;
    for (int k = 1; k <= n; ++k) {
        auto [lo, hi] = wire_window(n, k);
        const int w = hi - lo + 1;
        std::map<Word, Word> first;  // window bits -> smallest codeword carrying them
        for (Word word : cb.words) first.emplace((word >> (n - hi)) & ((Word{1} << w) - 1), word);
        std::vector<int> d(n, 0);
        double best = 0;
        std::optional<std::pair<Word, Word>> arg;
        for (auto [a, ua] : first)
            for (auto [b, vb] : first) {
                if (a == b) continue;
                for (int i = 0; i < w; ++i)
                    d[lo - 1 + i] = static_cast<int>((b >> (w - 1 - i)) & 1U) - static_cast<int>((a >> (w - 1 - i)) & 1U);
                double t = wire_delay(d.data(), n, k, model);
                std::pair<Word, Word> cand{ua, vb};
                if (t > best || (t == best && t > 0 && arg && cand < *arg)) {
                    best = t;
                    arg = cand;
                }
            }
        rep.wire_worst_ps[k - 1] = best;
        if (arg) rep.wire_argmax[k - 1] = *arg;
    }
}

}  // namespace

DelayReport codebook_worst_delay(const Codebook& cb, const DelayModel& model, EvalMethod method) {
    check_width(cb.width);
    if (cb.size() < 2) throw EvaluationError("need at least two codewords");
    DelayReport rep;
    rep.width = cb.width;
    rep.codewords = cb.size();
    rep.params = model.params();
    rep.wire_worst_ps.assign(cb.width, 0.0);
    rep.wire_argmax.assign(cb.width, {cb.words[0], cb.words[0]});
    if (method == EvalMethod::Auto) method = cb.size() <= 2000 ? EvalMethod::Exhaustive : EvalMethod::WindowComposition;
    if (method == EvalMethod::Exhaustive) {
        rep.method = "exhaustive";
        exhaustive(cb, model, rep);
    } else {
        rep.method = "window-composition";
        window_composition(cb, model, rep);
    }
    for (int k = 0; k < cb.width; ++k)
        if (rep.wire_worst_ps[k] > rep.worst_ps) {
            rep.worst_ps = rep.wire_worst_ps[k];
            rep.worst_wire = k + 1;
        }
    return rep;
}

Metrics metrics_of(const Codebook& cb, const DelayReport& report) {
    if (cb.size() < 2) throw EvaluationError("rate needs at least two codewords");
    Metrics m;
    m.size = cb.size();
    m.width = cb.width;
    m.bits = 63 - std::countl_zero(static_cast<std::uint64_t>(cb.size()));
    m.rate = static_cast<double>(m.bits) / cb.width;
    m.worst_ps = report.worst_ps;
    m.throughput = m.rate / m.worst_ps;
    return m;
}

Metrics metrics(const Codebook& cb, const Codebook& baseline, const DelayModel& model) {
    if (cb.width != baseline.width) throw EvaluationError("codebooks differ in width");
    Metrics m = metrics_of(cb, codebook_worst_delay(cb, model));
    Metrics b = metrics_of(baseline, codebook_worst_delay(baseline, model));
    m.gain = m.throughput / b.throughput;
    return m;
}

std::vector<ComparisonRow> compare(const std::vector<NamedCodebook>& codebooks, const DelayModel& model,
                                   const std::string& baseline) {
    std::vector<ComparisonRow> rows;
    for (const auto& nc : codebooks) {
        ComparisonRow r{nc.name, codebook_worst_delay(nc.codebook, model), {}};
        r.metrics = metrics_of(nc.codebook, r.report);
        rows.push_back(std::move(r));
    }
    auto base = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.name == baseline; });
    if (base != rows.end()) {
        double t = base->metrics.throughput;
        for (auto& r : rows)
            if (r.metrics.width == base->metrics.width) r.metrics.gain = r.metrics.throughput / t;
    }
    return rows;
}

std::vector<SizeRow> size_table(int n_from, int n_to, const Tables& tables, const DelayModel& model) {
    std::vector<SizeRow> rows;
    const SeedPair seeds = seed_codebooks(kC21, tables);
    for (int n = n_from; n <= n_to; ++n) {
        Codebook c21 = expand_codebook(seeds, n, kC21.str(), 0);
        Codebook iolc = prune_iolc(c21);
        Codebook olc = classic_codebook(Family::OLC, n, 0);
        SizeRow r;
        r.n = n;
        r.iolc = metrics_of(iolc, codebook_worst_delay(iolc, model));
        r.c21 = metrics_of(c21, codebook_worst_delay(c21, model));
        r.olc = metrics_of(olc, codebook_worst_delay(olc, model));
        r.iolc.gain = r.iolc.throughput / r.olc.throughput;
        r.c21.gain = r.c21.throughput / r.olc.throughput;
        rows.push_back(r);
    }
    return rows;
}

Codebook named_codebook(const std::string& name, const Tables& tables) {
    static const std::regex re(R"(^(iolc|olc|ftc|fpc|foc|c21_|c31_|c42_|c53_|c64_)(\d+)$)");
    std::smatch m;
    if (!std::regex_match(name, m, re)) throw EvaluationError("unknown codebook name " + name);
    const std::string kind = m[1];
    const int n = std::stoi(m[2]);
    if (kind == "iolc") return prune_iolc(expand_codebook(seed_codebooks(kC21, tables), n, kC21.str(), 0));
    if (kind[0] == 'c') {
        Constraint c{kind[1] - '0', kind[2] - '0'};
        return build_constrained(c, n, tables, 0);
    }
    return classic_codebook(parse_family(kind), n, 0);
}

namespace {

std::string fmt(double x, int digits = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

std::string gain_str(const Metrics& m) { return m.gain ? fmt(*m.gain) : ""; }

nlohmann::json metrics_json(const Metrics& m) {
    nlohmann::json j{{"words", m.size},      {"bits", m.bits},
                     {"rate", m.rate},       {"worst_delay_ps", m.worst_ps},
                     {"throughput", m.throughput}};
    j["gain"] = m.gain ? nlohmann::json(*m.gain) : nlohmann::json(nullptr);
    return j;
}

}  // namespace

void write_wire_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "code,wire_index,worst_delay_ps,from_word,to_word\n";
    for (const auto& r : rows)
        for (int k = 0; k < r.report.width; ++k)
            out << r.name << ',' << k + 1 << ',' << fmt(r.report.wire_worst_ps[k]) << ','
                << word_bits(r.report.wire_argmax[k].first, r.report.width) << ','
                << word_bits(r.report.wire_argmax[k].second, r.report.width) << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "code,width,words,bits,rate,worst_delay_ps,worst_wire,throughput,gain,method\n";
    for (const auto& r : rows)
        out << r.name << ',' << r.metrics.width << ',' << r.metrics.size << ',' << r.metrics.bits << ','
            << fmt(r.metrics.rate) << ',' << fmt(r.metrics.worst_ps) << ',' << r.report.worst_wire << ','
            << fmt(r.metrics.throughput, 6) << ',' << gain_str(r.metrics) << ',' << r.report.method << '\n';
}

void write_size_csv(std::ostream& out, const std::vector<SizeRow>& rows) {
    out << "n,iolc_words,iolc_bits,iolc_worst_ps,iolc_gain,c21_words,c21_bits,c21_worst_ps,c21_gain,olc_words,"
           "olc_bits,olc_worst_ps\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.iolc.size << ',' << r.iolc.bits << ',' << fmt(r.iolc.worst_ps) << ','
            << gain_str(r.iolc) << ',' << r.c21.size << ',' << r.c21.bits << ',' << fmt(r.c21.worst_ps) << ','
            << gain_str(r.c21) << ',' << r.olc.size << ',' << r.olc.bits << ',' << fmt(r.olc.worst_ps) << '\n';
}

nlohmann::json comparison_json(const std::vector<ComparisonRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json wires = nlohmann::json::array();
        for (int k = 0; k < r.report.width; ++k)
            wires.push_back({{"wire_index", k + 1},
                             {"worst_delay_ps", r.report.wire_worst_ps[k]},
                             {"from_word", word_bits(r.report.wire_argmax[k].first, r.report.width)},
                             {"to_word", word_bits(r.report.wire_argmax[k].second, r.report.width)}});
        nlohmann::json j = metrics_json(r.metrics);
        j["code"] = r.name;
        j["width"] = r.metrics.width;
        j["worst_wire"] = r.report.worst_wire;
        j["method"] = r.report.method;
        j["params"] = {{"tau0_ps", r.report.params.tau0_ps}, {"lambda", r.report.params.lambda}};
        j["wires"] = std::move(wires);
        out.push_back(std::move(j));
    }
    return out;
}

nlohmann::json size_json(const std::vector<SizeRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back({{"n", r.n}, {"iolc", metrics_json(r.iolc)}, {"c21", metrics_json(r.c21)}, {"olc", metrics_json(r.olc)}});
    return out;
}

}  // namespace cacforge
