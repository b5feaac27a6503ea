// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cacforge/codec.hpp"
#include "cacforge/evaluation.hpp"

using namespace cacforge;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail.str("");
            else detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const BusParams kParams{1.42, 12.24};

double surd_distance(const std::vector<Surd>& a, const std::vector<Surd>& b) {
    if (a.size() != b.size()) return INFINITY;
    double d = 0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i].value() - b[i].value()));
    return d;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

// Row-by-row comparison of one evaluated table against its golden copy.
struct TableDiff {
    int rows = 0;
    int coeff_mismatches = 0;
    int delay_mismatches = 0;
    double worst_abs_ps = 0;
};

TableDiff diff_table(const ClassificationTable& t, const GoldenTable& g, bool per_pattern) {
    TableDiff d;
    for (const auto& row : g.rows) {
        const auto& printed = row.printed_coeff_pi.empty() ? row.coeff_pi : row.printed_coeff_pi;
        const auto& first = t.at(row.patterns.front());
        if (surd_distance(t.subclasses[first.subclass].coeff_pi, printed) >= 1e-12) ++d.coeff_mismatches;
        for (const auto& p : row.patterns) {
            double ours = per_pattern ? t.at(p).delay_ps : t.subclasses[t.at(p).subclass].delay_ps;
            double err = std::abs(ours - row.evaluated_ps);
            d.worst_abs_ps = std::max(d.worst_abs_ps, err);
            ++d.rows;
            if (err > 0.02 + 1e-9) ++d.delay_mismatches;
            if (!per_pattern) break;
        }
    }
    return d;
}

Outcome criterion1() {
    Outcome o;
    auto t0 = Clock::now();
    auto t = classify_middle(kParams);
    auto d = diff_table(t, embedded_golden(Taxonomy::MiddleC), false);
    double secs = seconds_since(t0);
    o.require(t.subclasses.size() == 25, "subclass count " + std::to_string(t.subclasses.size()));
    o.require(d.coeff_mismatches == 0, std::to_string(d.coeff_mismatches) + " coefficient tuples differ from the printed forms");
    o.require(d.delay_mismatches == 0, std::to_string(d.delay_mismatches) + "/" + std::to_string(d.rows) +
                                           " delays off by > 0.02 ps (worst " + fmt(d.worst_abs_ps) + ")");
    std::vector<std::pair<const char*, double>> spots = {{"UUUUU", 1.08}, {"UDUDU", 58.52}};
    for (auto [p, want] : spots) {
        double got = t.subclasses[t.at(p).subclass].delay_ps;
        o.require(std::abs(got - want) <= 0.02, std::string(p) + " = " + fmt(got) + " vs " + fmt(want));
    }
    o.require(secs < 1, "runtime " + fmt(secs) + " s");
    if (o.pass) o.detail << "25 subclasses, coefficients and delays match";
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto t0 = Clock::now();
    auto [w2, w1] = classify_side(kParams);
    auto d2 = diff_table(w2, embedded_golden(Taxonomy::SideWire2), true);
    auto d1 = diff_table(w1, embedded_golden(Taxonomy::SideWire1), true);
    double secs = seconds_since(t0);
    o.require(d2.rows == 27 && d1.rows == 27, "row counts " + std::to_string(d2.rows) + "+" + std::to_string(d1.rows));
    o.require(d2.delay_mismatches == 0, "wire 2: " + std::to_string(d2.delay_mismatches) +
                                            " rows off by > 0.02 ps (worst " + fmt(d2.worst_abs_ps) + ")");
    o.require(d1.delay_mismatches == 0, "wire 1: " + std::to_string(d1.delay_mismatches) +
                                            " rows off by > 0.02 ps (worst " + fmt(d1.worst_abs_ps) + ")");
    std::vector<std::tuple<const ClassificationTable*, const char*, double>> spots = {
        {&w2, "DUDU", 55.28}, {&w1, "UDDU", 27.45}, {&w1, "UUUU", 1.08}};
    for (auto [t, p, want] : spots) {
        double got = t->at(p).delay_ps;
        o.require(std::abs(got - want) <= 0.02, std::string(p) + " = " + fmt(got) + " vs " + fmt(want));
    }
    o.require(secs < 1, "runtime " + fmt(secs) + " s");
    if (o.pass) o.detail << "54 side rows match";
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::vector<double> mid_l, side_l;
    for (int l = 3; l <= 13; ++l) mid_l.push_back(l);
    for (int l = 1; l <= 13; ++l) side_l.push_back(l);
    auto report = [&](Taxonomy tx, const std::vector<double>& ls) {
        std::vector<std::string> bad;
        for (const auto& p : sweep_lambda(ls, tx, kParams.tau0_ps))
            if (!p.non_overlap()) {
                std::ostringstream s;
                s << fmt(p.lambda) << " (" << p.overlaps.size() << " pairs)";
                bad.push_back(s.str());
            }
        std::string out;
        for (const auto& b : bad) out += (out.empty() ? "" : " ") + b;
        o.require(bad.empty(), taxonomy_name(tx) + " overlaps at lambda " + out);
    };
    report(Taxonomy::MiddleC, mid_l);
    report(Taxonomy::SideWire2, side_l);
    report(Taxonomy::SideWire1, side_l);
    auto legacy = sweep_lambda({12.24}, Taxonomy::LegacyD, kParams.tau0_ps);
    bool d012 = false;
    for (auto [i, j] : legacy.at(0).overlaps) d012 = d012 || (i <= 2 && j <= 2);
    o.require(d012, "legacy D0-D2 intervals do not overlap");
    if (o.pass) o.detail << "new classes disjoint, legacy D0-D2 overlap";
    return o;
}

Outcome criterion4(const Tables& tables) {
    Outcome o;
    auto t0 = Clock::now();
    struct Want {
        Constraint c;
        size_t cliques, size;
    };
    for (Want w : {Want{kC53, 2, 24}, Want{kC42, 1, 16}, Want{kC31, 2, 7}, Want{kC21, 2, 6}}) {
        auto cl = max_cliques(build_transition_graph_5(w.c, tables));
        o.require(cl.size() == w.cliques && cl.front().size() == w.size,
                  w.c.str() + ": " + std::to_string(cl.size()) + " cliques of size " + std::to_string(cl.front().size()));
    }
    auto s21 = seed_codebooks(kC21, tables);
    o.require(s21.c0 == std::vector<Word>{0, 3, 15, 24, 30, 31} && s21.c1 == std::vector<Word>{0, 1, 7, 16, 28, 31},
              "(C2,1C) seeds differ");
    auto s31 = seed_codebooks(kC31, tables);
    o.require(s31.c0 == std::vector<Word>{0, 3, 14, 15, 24, 30, 31} &&
                  s31.c1 == std::vector<Word>{0, 1, 7, 16, 17, 28, 31},
              "(C3,1C) seeds differ");
    auto s42 = seed_codebooks(kC42, tables);
    o.require(s42.c0 == std::vector<Word>{0, 1, 3, 6, 7, 12, 14, 15, 16, 17, 19, 24, 25, 28, 30, 31},
              "(C4,2C) seed differs");
    auto s53 = seed_codebooks(kC53, tables);
    o.require(s53.c0 == std::vector<Word>{0, 1, 2, 3, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19, 24, 25, 26, 27, 28,
                                          30, 31},
              "(C5,3C) seed differs");
    double secs = seconds_since(t0);
    o.require(secs < 5, "runtime " + fmt(secs) + " s");
    if (o.pass) o.detail << "all seed codebooks reproduced in " << fmt(secs) << " s";
    return o;
}

Outcome criterion5(const Tables& tables) {
    Outcome o;
    auto seq = [&](Constraint c, int n_to) {
        auto em = expansion_matrix(seed_codebooks(c, tables));
        std::vector<BigInt> v;
        for (int n = 5; n <= n_to; ++n) v.push_back(codebook_size(em, n));
        return v;
    };
    auto as_big = [](std::vector<int> v) { return std::vector<BigInt>(v.begin(), v.end()); };
    o.require(seq(kC31, 16) == as_big({7, 9, 12, 16, 21, 28, 37, 49, 65, 86, 114, 151}), "(C3,1C) sizes");
    o.require(seq(kC21, 16) == as_big({6, 7, 9, 11, 14, 17, 21, 26, 32, 40, 49, 61}), "(C2,1C) sizes");
    std::vector<BigInt> olc, iolc;
    auto s21 = seed_codebooks(kC21, tables);
    for (int n = 5; n <= 16; ++n) {
        olc.push_back(classic_codebook(Family::OLC, n).size());
        iolc.push_back(iolc_size(s21, n));
    }
    o.require(olc == as_big({7, 9, 12, 16, 21, 28, 37, 49, 65, 86, 114, 151}), "OLC sizes");
    o.require(iolc == as_big({4, 5, 7, 8, 11, 12, 16, 18, 23, 27, 34, 41}), "IOLC sizes");
    auto c42 = seq(kC42, 20), c53 = seq(kC53, 20);
    for (int n = 5; n <= 20; ++n) {
        o.require(c42[n - 5] == 2 * fibonacci(n + 1), "(C4,2C) at n=" + std::to_string(n));
        o.require(c53[n - 5] == tribonacci(n + 2), "(C5,3C) at n=" + std::to_string(n));
    }
    for (Constraint c : {kC21, kC31, kC42, kC53}) {
        auto s = seed_codebooks(c, tables);
        auto em = expansion_matrix(s);
        for (int parity = 0; parity < 2; ++parity)
            for (int n = 5; n <= 20; ++n)
                o.require(codebook_size(em, n) == BigInt(expand_codebook(s, n, "", parity).size()),
                          c.str() + " matrix count at n=" + std::to_string(n));
    }
    for (int n = 5; n <= 20; ++n)
        o.require(iolc_size(s21, n) == BigInt(prune_iolc(expand_codebook(s21, n, kC21.str())).size()),
                  "IOLC matrix count at n=" + std::to_string(n));
    if (o.pass) o.detail << "all size columns and closed forms match, matrix counts equal built sizes to n=20";
    return o;
}

Outcome criterion6(const Tables& tables) {
    Outcome o;
    for (Constraint c : {kC31, kC42, kC53, kC21}) {
        auto r = verify_recursion(c, 20, tables);
        o.require(r.identity_ok, r.name + " identity " + r.identity);
        o.require(r.initial_ok && r.recursion_ok,
                  r.name + " recursion fails at n=" + std::to_string(r.first_violation));
    }
    if (o.pass) o.detail << "four identities and four size recursions hold to n=20";
    return o;
}

Outcome criterion7(const Tables& tables) {
    Outcome o;
    int checks = 0;
    for (const auto& t : verify_theorems(12, tables, 16)) {
        ++checks;
        o.require(t.holds, t.name + " n=" + std::to_string(t.n) + " parity=" + std::to_string(t.parity));
    }
    if (o.pass) o.detail << checks << " equivalence and subset checks hold";
    return o;
}

Outcome criterion8(const Tables& tables) {
    Outcome o;
    WindowClassifier wc(tables);
    size_t pairs = 0;
    auto check = [&](const Codebook& cb, Constraint c, const std::string& name) {
        auto r = check_pairwise_legality(cb, c, wc);
        pairs += r.pairs;
        o.require(r.violations == 0, name + " n=" + std::to_string(cb.width) + ": " + std::to_string(r.violations));
    };
    auto s21 = seed_codebooks(kC21, tables);
    for (int n = 5; n <= 10; ++n) {
        for (Constraint c : {kC21, kC31, kC42, kC53})
            for (int parity = 0; parity < 2; ++parity) check(build_constrained(c, n, tables, parity), c, c.str());
        check(prune_iolc(expand_codebook(s21, n, kC21.str())), kC21, "IOLC");
        for (int parity = 0; parity < 2; ++parity) {
            check(classic_codebook(Family::OLC, n, parity), kC31, "OLC");
            check(classic_codebook(Family::FOC, n, parity), kC53, "FOC");
        }
        check(classic_codebook(Family::FPC, n), kC42, "FPC");
    }
    if (o.pass) o.detail << pairs << " ordered pairs, zero violations";
    return o;
}

Outcome criterion9(const Tables& tables) {
    Outcome o;
    DelayModel model(kParams);
    for (int n : {10, 16}) {
        auto t0 = Clock::now();
        auto iolc = codebook_worst_delay(named_codebook("iolc" + std::to_string(n), tables), model, EvalMethod::Exhaustive);
        auto c21 = codebook_worst_delay(named_codebook("c21_" + std::to_string(n), tables), model, EvalMethod::Exhaustive);
        auto olc = codebook_worst_delay(named_codebook("olc" + std::to_string(n), tables), model, EvalMethod::Exhaustive);
        double secs = seconds_since(t0);
        o.require(iolc.worst_ps < c21.worst_ps && c21.worst_ps < olc.worst_ps,
                  "n=" + std::to_string(n) + " order " + fmt(iolc.worst_ps) + "/" + fmt(c21.worst_ps) + "/" +
                      fmt(olc.worst_ps));
        // pruning can only help the edge windows it restricts
        for (int i : {0, 1, n - 2, n - 1})
            o.require(iolc.wire_worst_ps[i] <= c21.wire_worst_ps[i] + 1e-9,
                      "n=" + std::to_string(n) + " wire " + std::to_string(i + 1) + " slower after pruning");
        o.require(secs < 60, "n=" + std::to_string(n) + " runtime " + fmt(secs) + " s");
        if (o.pass)
            o.detail << (n == 10 ? "" : ", ") << "n=" << n << ": " << fmt(iolc.worst_ps) << " < " << fmt(c21.worst_ps)
                     << " < " << fmt(olc.worst_ps) << " ps (" << fmt(secs) << " s)";
    }
    return o;
}

Outcome criterion10(const Tables& tables) {
    Outcome o;
    std::uint64_t words = 0;
    auto s21 = seed_codebooks(kC21, tables);
    for (int n : {5, 10, 16}) {
        std::vector<std::pair<std::string, RankTable>> codes;
        for (Constraint c : {kC21, kC31, kC42, kC53}) codes.push_back({c.str(), build_rank_table(c, n, tables)});
        codes.push_back({"IOLC", build_rank_table(prune_iolc(expand_codebook(s21, n, kC21.str())))});
        for (Family f : {Family::OLC, Family::FTC, Family::FPC, Family::FOC})
            codes.push_back({family_name(f), build_rank_table(f, n)});
        for (const auto& [name, t] : codes) {
            std::uint64_t bad = 0;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << t.data_bits()); ++x, ++words)
                if (decode(encode(x, t), t) != x) ++bad;
            o.require(bad == 0, name + " n=" + std::to_string(n) + ": " + std::to_string(bad) + " failures");
        }
    }
    if (o.pass) o.detail << words << " round trips";
    return o;
}

}  // namespace

int main() {
    const Tables tables = build_tables(kParams);
    std::vector<std::function<Outcome()>> criteria = {
        criterion1,
        criterion2,
        criterion3,
        [&] { return criterion4(tables); },
        [&] { return criterion5(tables); },
        [&] { return criterion6(tables); },
        [&] { return criterion7(tables); },
        [&] { return criterion8(tables); },
        [&] { return criterion9(tables); },
        [&] { return criterion10(tables); },
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        if (!o.pass) ++failed;
        std::printf("criterion %2zu: %s (%.2f s) %s\n", i + 1, o.pass ? "PASS" : "FAIL", seconds_since(t0),
                    o.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
