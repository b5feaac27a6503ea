#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cacforge/bus_model.hpp"
#include "cacforge/classification.hpp"

using namespace cacforge;

namespace {

// Cyclic Jacobi eigensolver for small symmetric matrices.
void jacobi(std::vector<std::vector<double>> a, std::vector<double>& vals, std::vector<std::vector<double>>& vecs) {
    const size_t n = a.size();
    vecs.assign(n, std::vector<double>(n, 0));
    for (size_t i = 0; i < n; ++i) vecs[i][i] = 1;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-26) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (size_t k = 0; k < n; ++k) {
                    double vkp = vecs[k][p], vkq = vecs[k][q];
                    vecs[k][p] = c * vkp - s * vkq;
                    vecs[k][q] = s * vkp + c * vkq;
                }
            }
    }
    vals.resize(n);
    for (size_t i = 0; i < n; ++i) vals[i] = a[i][i];
}

// Independent delay: numeric modes of I + lambda L, fine scan for the last upward 50% crossing.
double oracle_delay(const Pattern& p, const BusParams& bp) {
    const int w = p.width();
    auto L = coupling_laplacian(w);
    std::vector<std::vector<double>> A(w, std::vector<double>(w));
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) A[i][j] = (i == j) + bp.lambda * L[i][j];
    std::vector<double> vals;
    std::vector<std::vector<double>> vecs;
    jacobi(A, vals, vecs);
    const double tau = 8 / (std::numbers::pi * std::numbers::pi) * bp.tau0_ps;
    const int ex = p.examined();
    const double fin = p.delta(ex);
    auto v = [&](double t) {
        double s = fin;
        for (int m = 0; m < w; ++m) {
            double proj = 0;
            for (int k = 0; k < w; ++k) proj += vecs[k][m] * p.delta(k);
            s -= 4 / std::numbers::pi * proj * vecs[ex][m] * std::exp(-t / (vals[m] * tau));
        }
        return fin * s - 0.5;
    };
    double last_lo = -1, last_hi = -1, prev = 0, gprev = v(0);
    const double slowest = *std::max_element(vals.begin(), vals.end());
    const double tmax = 60 * slowest * tau;
    for (double t = 1e-3 * tau; t < tmax; t += std::max(1e-3 * tau, 1e-4 * t)) {
        double g = v(t);
        if (gprev <= 0 && g > 0) last_lo = prev, last_hi = t;
        prev = t;
        gprev = g;
    }
    double lo = last_lo, hi = last_hi;
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        (v(mid) > 0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

Surd dot(const std::vector<Surd>& a, const std::vector<Surd>& b) {
    Surd s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void check_eigensystem(const EigenSystem& sys) {
    auto L = coupling_laplacian(sys.width);
    for (const auto& m : sys.modes) {
        for (int i = 0; i < sys.width; ++i) {
            Surd le;
            for (int j = 0; j < sys.width; ++j) le += Surd(L[i][j]) * m.e[j];
            CHECK(le == m.slope * m.e[i]);
        }
    }
    for (size_t a = 0; a < sys.modes.size(); ++a)
        for (size_t b = a + 1; b < sys.modes.size(); ++b) CHECK(dot(sys.modes[a].e, sys.modes[b].e).is_zero());
}

}  // namespace

TEST_CASE("eigenvectors satisfy the coupling eigen equation exactly") {
    check_eigensystem(five_wire_eigensystem());
    check_eigensystem(four_wire_eigensystem(1));
    check_eigensystem(four_wire_eigensystem(2));
}

TEST_CASE("five-wire slopes") {
    auto sys = five_wire_eigensystem();
    const double r5 = std::sqrt(5.0);
    std::vector<double> expect = {0, (5 + r5) / 2, (5 - r5) / 2, (3 + r5) / 2, (3 - r5) / 2};
    for (size_t i = 0; i < expect.size(); ++i) CHECK(sys.modes[i].slope.value() == doctest::Approx(expect[i]));
}

TEST_CASE("modal coefficients sum to 4/pi times the final level") {
    for (int width : {5, 4})
        for (int ex : (width == 5 ? std::vector<int>{3} : std::vector<int>{1, 2}))
            for (const auto& p : enumerate_patterns(width, ex, Symbol::Up)) {
                auto r = synth_response(p, BusParams{});
                Surd s;
                for (const auto& c : r.modal_coeff_pi) s += c;
                CHECK(s == Surd(4));
                CHECK(r.initial_residual() == doctest::Approx(1 - 4 / std::numbers::pi));
            }
}

TEST_CASE("common-mode step has a closed-form delay") {
    BusParams bp;
    const double tau = 8 / (std::numbers::pi * std::numbers::pi) * bp.tau0_ps;
    CHECK(pattern_delay(Pattern::parse("UUUUU", 2), bp) == doctest::Approx(tau * std::log(8 / std::numbers::pi)).epsilon(1e-6));
    CHECK(pattern_delay(Pattern::parse("UUUU", 0), bp) == doctest::Approx(tau * std::log(8 / std::numbers::pi)).epsilon(1e-6));
}

TEST_CASE("delays agree with a numeric modal oracle") {
    BusParams bp;
    for (const auto& p : enumerate_patterns(5, 3, Symbol::Up))
        CHECK(pattern_delay(p, bp) == doctest::Approx(oracle_delay(p, bp)).epsilon(1e-5));
    for (int ex : {1, 2})
        for (const auto& p : enumerate_patterns(4, ex, Symbol::Up))
            CHECK(pattern_delay(p, bp) == doctest::Approx(oracle_delay(p, bp)).epsilon(1e-5));
}

TEST_CASE("complement and mirror symmetry") {
    BusParams bp;
    for (const auto& p : enumerate_patterns(5, 3, Symbol::Up)) {
        double d = pattern_delay(p, bp);
        CHECK(pattern_delay(p.complement(), bp) == doctest::Approx(d).epsilon(1e-9));
        CHECK(pattern_delay(p.mirrored(), bp) == doctest::Approx(d).epsilon(1e-9));
    }
}

TEST_CASE("delay scales linearly with tau0") {
    BusParams a, b;
    b.tau0_ps = 2 * a.tau0_ps;
    for (const char* s : {"UDUDU", "-UUU-", "DUUUD", "--U--"}) {
        Pattern p = Pattern::parse(s, 2);
        CHECK(pattern_delay(p, b) == doctest::Approx(2 * pattern_delay(p, a)).epsilon(1e-6));
    }
}

TEST_CASE("coupled patterns slow down monotonically with lambda") {
    const auto membership = embedded_golden(Taxonomy::MiddleC).membership();
    for (const auto& p : enumerate_patterns(5, 3, Symbol::Up)) {
        if (membership.at(p.str()) == 0) continue;
        double prev = 0;
        for (double lambda = 1; lambda <= 13; lambda += 0.5) {
            BusParams bp;
            bp.lambda = lambda;
            double d = pattern_delay(p, bp);
            CHECK(d > prev);
            prev = d;
        }
    }
}

TEST_CASE("solver returns the last upward crossing") {
    ClosedFormResponse r;
    r.final_level = 1;
    r.tau_ps = 1;
    r.terms.push_back({0, Surd(0), -1.5, Surd(0), 1});
    r.terms.push_back({1, Surd(0), 1.2, Surd(0), 50});
    // starts at 1.3, dips below 0.5 through the fast term, recovers on the slow one
    double expect = 50 * std::log(1.2 / 0.5);
    CHECK(solve_half_delay(r) == doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("solver reports divergence past the horizon") {
    ClosedFormResponse r;
    r.final_level = 1;
    r.tau_ps = 1;
    r.terms.push_back({0, Surd(0), 0.9, Surd(0), 1e6});
    CHECK_THROWS_AS(solve_half_delay(r), ModelError);
}

TEST_CASE("holding examined wire has zero delay; three-wire windows are not synthesized") {
    CHECK(pattern_delay(Pattern::parse("UU-UU", 2), BusParams{}) == 0.0);
    CHECK_THROWS_AS(synth_response(Pattern::parse("UUU", 1), BusParams{}), ModelError);
}

TEST_CASE("pattern validation") {
    CHECK_THROWS_AS(Pattern::parse("UUUUU", 1), ModelError);
    CHECK_THROWS_AS(Pattern::parse("UUUU", 2), ModelError);
    CHECK_THROWS_AS(Pattern::parse("UU", 0), ModelError);
    CHECK_THROWS(Pattern::parse("UXUUU", 2));
    CHECK(Pattern::parse("u-d0+", 2).str() == "U-D-U");
    CHECK_THROWS_AS(Pattern::parse("UUUU", 0).mirrored(), ModelError);
}

TEST_CASE("bus parameters from parasitics and config") {
    Parasitics raw{0.5, 2.0e-17, 2.448e-16, 284.0};
    BusParams p = BusParams::from_parasitics(raw);
    CHECK(p.lambda == doctest::Approx(12.24));
    CHECK(p.tau0_ps == doctest::Approx(0.5 * (0.5 * 284.0) * (2.0e-17 * 284.0) * 1e12));

    auto c = BusParams::from_config({{"tau0_ps", "2.0"}, {"lambda", "3"}});
    CHECK(c.tau0_ps == 2.0);
    CHECK(c.lambda == 3.0);
    CHECK_THROWS_AS(BusParams::from_config({{"lambda", "-1"}}), ModelError);
    CHECK_THROWS_AS(BusParams::from_config({{"r_ohm_per_um", "0.5"}, {"cg_f_per_um", "2e-17"},
                                            {"cc_f_per_um", "2.448e-16"}, {"length_um", "284"}, {"lambda", "5"}}),
                    ModelError);
}
