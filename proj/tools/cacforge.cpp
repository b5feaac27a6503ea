// cacforge: classify transition patterns, build and verify codebooks, evaluate delays, encode/decode.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cacforge/classification.hpp"
#include "cacforge/codebook.hpp"
#include "cacforge/codec.hpp"
#include "cacforge/evaluation.hpp"
#include "cacforge/golden.hpp"

using namespace cacforge;
using nlohmann::json;

namespace {

constexpr double kDelayTolerancePs = 0.02;

struct ParamArgs {
    std::string config;
    std::optional<double> tau0;
    std::optional<double> lambda;

    void add_to(CLI::App* app) {
        app->add_option("--config", config, "INI file with tau0_ps, lambda or wire parasitics");
        app->add_option("--tau0", tau0, "crosstalk-free delay tau0 in ps");
        app->add_option("--lambda", lambda, "coupling factor Cc/Cg");
    }

    BusParams resolve() const {
        BusParams p;
        if (!config.empty()) {
            std::map<std::string, std::string> kv;
            for (const auto& item : CLI::ConfigINI().from_file(config))
                if (!item.inputs.empty()) kv[item.name] = item.inputs.front();
            p = BusParams::from_config(kv);
        }
        if (tau0) p.tau0_ps = *tau0;
        if (lambda) p.lambda = *lambda;
        p.validate();
        return p;
    }
};

struct Output {
    std::string path;
    bool json = false;

    void add_to(CLI::App* app) {
        app->add_option("--out,-o", path, "output file (default stdout)");
        app->add_flag("--json", json, "emit JSON instead of CSV");
    }

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        file_.open(path);
        if (!file_) throw std::runtime_error("cannot write " + path);
        return file_;
    }

private:
    std::ofstream file_;
};

std::string fmt(double x, int digits = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
    std::string taxonomy = "middle";
    std::string sweep;
    bool check = false;
    ParamArgs params;
    Output out;
};

std::vector<Taxonomy> taxonomies_for(const std::string& name) {
    if (name == "middle") return {Taxonomy::MiddleC};
    if (name == "side") return {Taxonomy::SideWire2, Taxonomy::SideWire1};
    if (name == "wire2") return {Taxonomy::SideWire2};
    if (name == "wire1") return {Taxonomy::SideWire1};
    if (name == "legacy") return {Taxonomy::LegacyD};
    throw CLI::ValidationError("--taxonomy", "expected middle, side, wire2, wire1 or legacy");
}

ClassificationTable classify_one(Taxonomy t, const BusParams& p) {
    if (t == Taxonomy::MiddleC) return classify_middle(p);
    auto side = classify_side(p);
    return t == Taxonomy::SideWire2 ? side.first : side.second;
}

std::vector<double> parse_sweep(const std::string& spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(std::stod(tok));
    if (parts.size() < 2 || parts.size() > 3) throw CLI::ValidationError("--sweep", "expected from:to[:step]");
    double step = parts.size() == 3 ? parts[2] : 1.0;
    if (!(step > 0) || parts[1] < parts[0]) throw CLI::ValidationError("--sweep", "empty range");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        double x = parts[0] + i * step;
        if (x > parts[1] + 1e-9) break;
        out.push_back(x);
    }
    return out;
}

// mismatch lines against the golden table of the same taxonomy
std::vector<std::string> check_against_golden(const ClassificationTable& t, const GoldenTable& g) {
    std::vector<std::string> issues;
    std::set<int> seen;
    for (const auto& row : g.rows) {
        const std::string label = taxonomy_name(t.taxonomy) + " " + join(row.patterns, " ");
        int sub = -1;
        for (const auto& p : row.patterns) {
            auto it = t.entries.find(p);
            if (it == t.entries.end()) {
                issues.push_back(label + ": pattern " + p + " missing");
                continue;
            }
            if (sub < 0) sub = it->second.subclass;
            else if (sub != it->second.subclass) issues.push_back(label + ": patterns split across subclasses");
        }
        if (sub < 0) continue;
        const Subclass& s = t.subclasses[sub];
        seen.insert(sub);
        if (s.members.size() != row.patterns.size()) issues.push_back(label + ": subclass has extra members");
        if (s.cls != row.cls)
            issues.push_back(label + ": class " + std::to_string(s.cls) + " vs " + std::to_string(row.cls));
        if (s.coeff_pi != row.coeff_pi) issues.push_back(label + ": coefficient tuple differs");
        if (std::abs(s.delay_ps - row.evaluated_ps) > kDelayTolerancePs)
            issues.push_back(label + ": delay " + fmt(s.delay_ps) + " vs " + fmt(row.evaluated_ps, 2));
    }
    if (seen.size() != t.subclasses.size()) issues.push_back(taxonomy_name(t.taxonomy) + ": subclasses without a golden row");
    return issues;
}

int run_classify(ClassifyArgs& a) {
    const BusParams params = a.params.resolve();
    const auto taxes = taxonomies_for(a.taxonomy);
    std::ostream& os = a.out.stream();

    if (!a.sweep.empty()) {
        json j = json::array();
        if (!a.out.json) os << "taxonomy,lambda,class,min_ps,max_ps,non_overlap\n";
        for (Taxonomy t : taxes)
            for (const auto& pt : sweep_lambda(parse_sweep(a.sweep), t, params.tau0_ps)) {
                for (size_t c = 0; c < pt.ranges.size(); ++c) {
                    if (a.out.json)
                        j.push_back({{"taxonomy", taxonomy_name(t)}, {"lambda", pt.lambda}, {"class", c},
                                     {"min_ps", pt.ranges[c].first}, {"max_ps", pt.ranges[c].second},
                                     {"non_overlap", pt.non_overlap()}});
                    else
                        os << taxonomy_name(t) << ',' << fmt(pt.lambda, 2) << ',' << c << ','
                           << fmt(pt.ranges[c].first) << ',' << fmt(pt.ranges[c].second) << ','
                           << (pt.non_overlap() ? "true" : "false") << '\n';
                }
            }
        if (a.out.json) os << j.dump(2) << '\n';
        return 0;
    }

    if (taxes.front() == Taxonomy::LegacyD) {
        json j = json::array();
        if (!a.out.json) os << "pattern,class,bound_ps\n";
        for (const char* s : {"U", "D"})
            for (const char* l : {"U", "-", "D"})
                for (const char* r : {"U", "-", "D"}) {
                    Pattern p = Pattern::parse(std::string(l) + s + r, 1);
                    auto res = classify_legacy(p, params);
                    if (a.out.json) j.push_back({{"pattern", p.str()}, {"class", res.cls.str()}, {"bound_ps", res.bound_ps}});
                    else os << p.str() << ',' << res.cls.str() << ',' << fmt(res.bound_ps) << '\n';
                }
        if (a.out.json) os << j.dump(2) << '\n';
        return 0;
    }

    int failures = 0;
    json j = json::array();
    for (Taxonomy t : taxes) {
        ClassificationTable table = classify_one(t, params);
        if (a.out.json) {
            for (const auto& s : table.subclasses) {
                std::vector<std::string> c;
                for (const auto& x : s.coeff_pi) c.push_back(x.str());
                j.push_back({{"taxonomy", taxonomy_name(t)}, {"class", DelayClass{t, s.cls, s.cls < 0}.str()},
                             {"subclass", s.id}, {"patterns", s.members}, {"coeff_pi", c}, {"delay_ps", s.delay_ps}});
            }
        } else {
            os << "taxonomy,class,subclass,patterns";
            for (size_t m = 0; m < table.subclasses.front().coeff_pi.size(); ++m) os << ",coeff_pi_" << m;
            os << ",delay_ps\n";
            for (const auto& s : table.subclasses) {
                os << taxonomy_name(t) << ',' << DelayClass{t, s.cls, s.cls < 0}.str() << ',' << s.id << ','
                   << join(s.members, " ");
                for (const auto& x : s.coeff_pi) os << ',' << x.str();
                os << ',' << fmt(s.delay_ps) << '\n';
            }
        }
        if (a.check) {
            auto issues = check_against_golden(table, load_golden(golden_dir(), t));
            for (const auto& m : issues) std::cerr << "mismatch: " << m << '\n';
            std::cerr << "check " << taxonomy_name(t) << ": " << (issues.empty() ? "PASS" : "FAIL") << " ("
                      << issues.size() << " mismatches)\n";
            failures += static_cast<int>(issues.size());
        }
    }
    if (a.out.json) os << j.dump(2) << '\n';
    return failures ? 1 : 0;
}

// ---- build -----------------------------------------------------------------

struct SourceArgs {
    std::string constraint;
    std::string family;
    std::string file;
    int n = 0;
    int parity = 0;
    bool prune = false;

    void add_to(CLI::App* app, bool with_file) {
        auto* c = app->add_option("--constraint", constraint, "delay constraint such as C3,1C");
        auto* f = app->add_option("--family", family, "classic family: OLC, FTC, FPC or FOC");
        if (with_file) {
            auto* p = app->add_option("--file", file, "codebook file written by build")->check(CLI::ExistingFile);
            p->excludes(c)->excludes(f);
        }
        c->excludes(f);
        app->add_option("--n", n, "bus width")->check(CLI::Range(1, 63));
        app->add_option("--parity", parity, "boundary parity of the first window")->check(CLI::Range(0, 1));
        app->add_flag("--prune", prune, "prune (C2,1C) side windows (IOLC)");
    }

    Codebook resolve(const Tables& tables) const {
        if (!file.empty()) {
            std::ifstream in(file);
            return read_codebook(in);
        }
        if (n <= 0) throw CLI::ValidationError("--n", "bus width required");
        if (!family.empty()) {
            if (prune) throw CLI::ValidationError("--prune", "applies to --constraint C2,1C only");
            return classic_codebook(parse_family(family), n, parity);
        }
        if (constraint.empty()) throw CLI::ValidationError("--constraint", "need --constraint or --family");
        Constraint c = Constraint::parse(constraint);
        if (c.ci == 0 && c.jc == 0) throw CodebookError("(C0,0C) is too restrictive and not supported");
        if (n < 5) throw CLI::ValidationError("--n", "constrained construction needs n >= 5");
        Codebook cb = build_constrained(c, n, tables, parity);
        if (prune) {
            if (parity != 0) throw CLI::ValidationError("--prune", "pruning uses parity 0");
            cb = prune_iolc(cb);
        }
        return cb;
    }
};

struct BuildArgs {
    SourceArgs src;
    bool verify = false;
    std::string matrix;
    ParamArgs params;
    Output out;
};

int run_build(BuildArgs& a) {
    const Tables tables = build_tables(a.params.resolve());
    Codebook cb = a.src.resolve(tables);
    std::ostream& os = a.out.stream();
    if (a.out.json) {
        json words = json::array();
        for (Word w : cb.words) words.push_back(word_bits(w, cb.width));
        os << json{{"width", cb.width}, {"size", cb.size()}, {"provenance", cb.provenance},
                   {"seed_parity", cb.seed_parity}, {"words", words}}
                  .dump(2)
           << '\n';
    } else {
        write_codebook(os, cb);
    }

    if (!a.matrix.empty()) {
        if (a.src.constraint.empty()) throw CLI::ValidationError("--matrix", "needs --constraint");
        auto em = expansion_matrix(seed_codebooks(Constraint::parse(a.src.constraint), tables));
        std::ofstream m(a.matrix);
        write_matrix_csv(m, em.D);
    }

    if (!a.verify) return 0;
    bool ok = true;
    auto say = [&](const std::string& what, bool pass, const std::string& detail = "") {
        std::cerr << (pass ? "ok   " : "FAIL ") << what << (detail.empty() ? "" : "  " + detail) << '\n';
        ok = ok && pass;
    };
    if (!a.src.constraint.empty()) {
        Constraint c = Constraint::parse(a.src.constraint);
        if (!c.trivial()) {
            auto rep = verify_recursion(c, std::max(20, a.src.n), tables, a.src.prune);
            std::ostringstream d;
            d << rep.identity << (rep.identity_ok ? " holds" : " fails");
            if (rep.first_violation >= 0) d << "; first size mismatch at n=" << rep.first_violation;
            say(rep.name + " size recursion", rep.initial_ok && rep.recursion_ok, d.str());
            say(rep.name + " matrix identity", rep.identity_ok, rep.identity);
            if (!rep.note.empty()) std::cerr << "note " << rep.note << '\n';
            if (!rep.alternate.empty()) say(rep.name + " alternate recursion", rep.alternate_ok);
        }
        if (cb.width >= 5) {
            auto leg = check_pairwise_legality(cb, c, WindowClassifier(tables));
            say("pairwise legality", leg.violations == 0,
                std::to_string(leg.violations) + " of " + std::to_string(leg.pairs) + " ordered pairs violate " + c.str());
        }
        auto em = expansion_matrix(seed_codebooks(c, tables));
        BigInt counted = a.src.prune ? iolc_size(seed_codebooks(c, tables), cb.width) : codebook_size(em, cb.width);
        say("matrix count", counted == BigInt(cb.size()), "counted " + counted.str());
    }
    int nt = std::min(12, std::max(5, a.src.n));
    size_t failed = 0, total = 0;
    for (const auto& th : verify_theorems(nt, tables, std::max(nt, 5))) {
        ++total;
        if (!th.holds) {
            ++failed;
            std::cerr << "FAIL " << th.name << " n=" << th.n << " parity=" << th.parity << '\n';
        }
    }
    say("codebook equivalences up to n=" + std::to_string(nt), failed == 0,
        std::to_string(total - failed) + "/" + std::to_string(total));
    return ok ? 0 : 1;
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
    std::vector<std::string> names;
    std::vector<std::string> files;
    std::string sizes;
    std::string baseline;
    std::string summary;
    bool check = false;
    ParamArgs params;
    Output out;
};

int run_eval(EvalArgs& a) {
    const BusParams params = a.params.resolve();
    const Tables tables = build_tables(params);
    const DelayModel model(params);
    std::ostream& os = a.out.stream();

    if (!a.sizes.empty()) {
        auto range = parse_sweep(a.sizes);
        auto rows = size_table(static_cast<int>(range.front()), static_cast<int>(range.back()), tables, model);
        if (a.out.json) os << size_json(rows).dump(2) << '\n';
        else write_size_csv(os, rows);
        if (!a.check) return 0;
        int bad = 0;
        for (const auto& g : load_golden_sizes(golden_dir()))
            for (const auto& r : rows) {
                if (r.n != g.n) continue;
                auto cmp = [&](const char* what, long ours, long theirs) {
                    if (ours == theirs) return;
                    ++bad;
                    std::cerr << "mismatch: n=" << r.n << ' ' << what << ' ' << ours << " vs " << theirs << '\n';
                };
                cmp("iolc_words", static_cast<long>(r.iolc.size), g.iolc_words);
                cmp("iolc_bits", r.iolc.bits, g.iolc_bits);
                cmp("c21_words", static_cast<long>(r.c21.size), g.c21_words);
                cmp("c21_bits", r.c21.bits, g.c21_bits);
                cmp("olc_words", static_cast<long>(r.olc.size), g.olc_words);
                cmp("olc_bits", r.olc.bits, g.olc_bits);
            }
        std::cerr << "check sizes: " << (bad ? "FAIL" : "PASS") << " (" << bad << " mismatches)\n";
        return bad ? 1 : 0;
    }

    std::vector<NamedCodebook> cbs;
    for (const auto& list : a.names) {
        std::stringstream ss(list);
        for (std::string name; std::getline(ss, name, ',');)
            if (!name.empty()) cbs.push_back({name, named_codebook(name, tables)});
    }
    for (const auto& f : a.files) {
        std::ifstream in(f);
        if (!in) throw std::runtime_error("cannot read " + f);
        cbs.push_back({f, read_codebook(in)});
    }
    std::string base = a.baseline;
    if (base.empty())
        for (const auto& c : cbs)
            if (c.name.rfind("olc", 0) == 0) base = c.name;
    auto rows = compare(cbs, model, base);
    if (a.out.json) {
        os << comparison_json(rows).dump(2) << '\n';
    } else {
        write_wire_csv(os, rows);
        if (!a.summary.empty()) {
            std::ofstream s(a.summary);
            write_summary_csv(s, rows);
        } else {
            std::cerr << "summary\n";
            write_summary_csv(std::cerr, rows);
        }
    }
    return 0;
}

// ---- codec -----------------------------------------------------------------

struct CodecArgs {
    SourceArgs src;
    bool encode = false;
    bool decode = false;
    ParamArgs params;
};

int run_codec(CodecArgs& a) {
    const Tables tables = build_tables(a.params.resolve());
    const RankTable table = build_rank_table(a.src.resolve(tables));
    int status = 0;
    for (std::string line; std::getline(std::cin, line);) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
        try {
            if (a.encode) {
                std::size_t used = 0;
                std::uint64_t x = std::stoull(line, &used, 16);
                if (used != line.size()) throw CodecError("not a hex data word: " + line);
                std::cout << word_bits(encode(x, table), table.width()) << '\n';
            } else {
                if (static_cast<int>(line.size()) != table.width()) throw CodecError("codeword width mismatch: " + line);
                std::ostringstream hex;
                hex << "0x" << std::hex << decode(parse_bits(line), table);
                std::cout << hex.str() << '\n';
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            status = 1;
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crosstalk-avoidance code workbench"};
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "classify transition patterns by 50% delay");
    classify->add_option("--taxonomy", ca.taxonomy, "middle, side, wire2, wire1 or legacy");
    classify->add_option("--sweep", ca.sweep, "lambda range from:to[:step]; emits class delay ranges");
    classify->add_flag("--check", ca.check, "compare against the golden tables; nonzero exit on mismatch");
    ca.params.add_to(classify);
    ca.out.add_to(classify);

    BuildArgs ba;
    auto* build = app.add_subcommand("build", "construct a codebook");
    ba.src.add_to(build, false);
    build->add_flag("--verify", ba.verify, "check recursion, pairwise legality and family equivalences");
    build->add_option("--matrix", ba.matrix, "write the expansion matrix D as CSV");
    ba.params.add_to(build);
    ba.out.add_to(build);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "worst-case delay and throughput of codebooks");
    eval->add_option("--codebook,--codebooks", ea.names, "names such as iolc10, c21_10, olc10 (comma separated)");
    eval->add_option("--file", ea.files, "codebook files")->check(CLI::ExistingFile);
    eval->add_option("--sizes", ea.sizes, "size/throughput table over n range from:to");
    eval->add_option("--baseline", ea.baseline, "codebook name used as throughput reference");
    eval->add_option("--summary", ea.summary, "write the summary CSV to this file");
    eval->add_flag("--check", ea.check, "with --sizes, compare sizes and bits with the golden table");
    ea.params.add_to(eval);
    ea.out.add_to(eval);

    CodecArgs cda;
    auto* codec = app.add_subcommand("codec", "encode hex data words or decode binary codewords from stdin");
    cda.src.add_to(codec, true);
    auto* enc = codec->add_flag("--encode", cda.encode, "hex data word -> codeword");
    auto* dec = codec->add_flag("--decode", cda.decode, "codeword -> hex data word");
    enc->excludes(dec);
    cda.params.add_to(codec);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify) return run_classify(ca);
        if (*build) return run_build(ba);
        if (*eval) {
            if (ea.names.empty() && ea.files.empty() && ea.sizes.empty())
                throw CLI::ValidationError("eval", "need --codebook, --file or --sizes");
            return run_eval(ea);
        }
        if (*codec) {
            if (!cda.encode && !cda.decode) throw CLI::ValidationError("codec", "need --encode or --decode");
            return run_codec(cda);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
