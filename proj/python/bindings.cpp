#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cacforge/codec.hpp"
#include "cacforge/evaluation.hpp"

namespace py = pybind11;
using namespace cacforge;

namespace {

BusParams params(double tau0_ps, double lambda) {
    BusParams p;
    p.tau0_ps = tau0_ps;
    p.lambda = lambda;
    return p;
}

const Tables& default_tables() {
    static const Tables t = build_tables();
    return t;
}

Taxonomy parse_taxonomy(const std::string& name) {
    if (name == "middle") return Taxonomy::MiddleC;
    if (name == "wire2") return Taxonomy::SideWire2;
    if (name == "wire1") return Taxonomy::SideWire1;
    throw py::value_error("taxonomy must be middle, wire2 or wire1");
}

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.str())); }

Codebook from_words(const std::vector<Word>& words, int n) {
    Codebook cb;
    cb.width = n;
    cb.words = words;
    std::sort(cb.words.begin(), cb.words.end());
    cb.words.erase(std::unique(cb.words.begin(), cb.words.end()), cb.words.end());
    return cb;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
    py::register_exception<ClassificationError>(m, "ClassificationError", PyExc_ValueError);
    py::register_exception<CodebookError>(m, "CodebookError", PyExc_ValueError);
    py::register_exception<CodecError>(m, "CodecError", PyExc_ValueError);
    py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ValueError);

    m.def(
        "pattern_delay",
        [](const std::string& pattern, int examined, double tau0_ps, double lambda) {
            return cacforge::pattern_delay(Pattern::parse(pattern, examined), params(tau0_ps, lambda));
        },
        py::arg("pattern"), py::arg("examined"), py::arg("tau0_ps") = 1.42, py::arg("lambda_") = 12.24,
        "50% delay (ps) of the examined wire for a pattern of U, -, D symbols.");

    m.def(
        "classify",
        [](const std::string& taxonomy, double tau0_ps, double lambda) {
            Taxonomy tx = parse_taxonomy(taxonomy);
            BusParams p = params(tau0_ps, lambda);
            ClassificationTable t;
            if (tx == Taxonomy::MiddleC) t = classify_middle(p);
            else {
                auto side = classify_side(p);
                t = tx == Taxonomy::SideWire2 ? side.first : side.second;
            }
            py::list rows;
            for (const auto& s : t.subclasses) {
                py::list coeffs;
                for (const auto& c : s.coeff_pi) coeffs.append(c.str());
                rows.append(py::dict(py::arg("cls") = s.cls, py::arg("patterns") = s.members,
                                     py::arg("coeff_pi") = coeffs, py::arg("delay_ps") = s.delay_ps));
            }
            return rows;
        },
        py::arg("taxonomy") = "middle", py::arg("tau0_ps") = 1.42, py::arg("lambda_") = 12.24,
        "Subclass rows in ascending delay order.");

    m.def(
        "seed_codebooks",
        [](const std::string& constraint) {
            auto s = cacforge::seed_codebooks(Constraint::parse(constraint), default_tables());
            return std::make_pair(s.c0, s.c1);
        },
        py::arg("constraint"));

    m.def(
        "build",
        [](const std::string& constraint, int n, int parity) {
            return build_constrained(Constraint::parse(constraint), n, default_tables(), parity).words;
        },
        py::arg("constraint"), py::arg("n"), py::arg("parity") = 0);

    m.def(
        "classic",
        [](const std::string& family, int n, int parity) {
            return classic_codebook(parse_family(family), n, parity).words;
        },
        py::arg("family"), py::arg("n"), py::arg("parity") = 0);

    m.def(
        "iolc", [](int n) { return prune_iolc(build_constrained(kC21, n, default_tables())).words; }, py::arg("n"));

    m.def(
        "codebook_size",
        [](const std::string& constraint, int n) {
            auto s = cacforge::seed_codebooks(Constraint::parse(constraint), default_tables());
            return to_py(cacforge::codebook_size(expansion_matrix(s), n));
        },
        py::arg("constraint"), py::arg("n"), "Matrix-power count of n-bit codewords.");

    m.def(
        "recursion",
        [](const std::string& constraint, int n_max, bool pruned) {
            auto r = verify_recursion(Constraint::parse(constraint), n_max, default_tables(), pruned);
            py::list sizes;
            for (const auto& x : r.sizes) sizes.append(to_py(x));
            return py::dict(py::arg("name") = r.name, py::arg("sizes") = sizes, py::arg("identity") = r.identity,
                            py::arg("identity_ok") = r.identity_ok, py::arg("recursion_ok") = r.recursion_ok,
                            py::arg("initial_ok") = r.initial_ok, py::arg("first_violation") = r.first_violation,
                            py::arg("alternate_ok") = r.alternate_ok, py::arg("note") = r.note);
        },
        py::arg("constraint"), py::arg("n_max") = 20, py::arg("pruned") = false);

    m.def(
        "worst_delay",
        [](const std::vector<Word>& words, int n, double tau0_ps, double lambda) {
            DelayModel model(params(tau0_ps, lambda));
            auto r = codebook_worst_delay(from_words(words, n), model);
            return py::dict(py::arg("worst_ps") = r.worst_ps, py::arg("worst_wire") = r.worst_wire,
                            py::arg("wire_worst_ps") = r.wire_worst_ps, py::arg("wire_argmax") = r.wire_argmax,
                            py::arg("method") = r.method);
        },
        py::arg("words"), py::arg("n"), py::arg("tau0_ps") = 1.42, py::arg("lambda_") = 12.24);

    py::class_<RankTable>(m, "RankTable")
        .def(py::init([](const std::string& code, int n, int parity) {
                 if (code == "iolc") return build_rank_table(prune_iolc(build_constrained(kC21, n, default_tables())));
                 if (code.find(',') != std::string::npos)
                     return build_rank_table(Constraint::parse(code), n, default_tables(), parity);
                 return build_rank_table(parse_family(code), n, parity);
             }),
             py::arg("code"), py::arg("n"), py::arg("parity") = 0,
             "code is a constraint such as 'C3,1C', a family name or 'iolc'.")
        .def_property_readonly("width", &RankTable::width)
        .def_property_readonly("total", &RankTable::total)
        .def_property_readonly("data_bits", &RankTable::data_bits)
        .def("encode", [](const RankTable& t, std::uint64_t x) { return encode(x, t); }, py::arg("data"))
        .def("decode", [](const RankTable& t, Word w) { return decode(w, t); }, py::arg("word"));
}
