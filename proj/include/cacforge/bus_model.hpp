#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cacforge/surd.hpp"

namespace cacforge {

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Symbol : int { Down = -1, Hold = 0, Up = 1 };

char symbol_char(Symbol s);
Symbol symbol_from_char(char c);

// Per-length wire parasitics. Lengths in um, resistance in ohm/um, capacitances in F/um.
struct Parasitics {
    double r_ohm_per_um = 0;
    double cg_f_per_um = 0;
    double cc_f_per_um = 0;
    double length_um = 0;
};

struct BusParams {
    double tau0_ps = 1.42;
    double lambda = 12.24;
    std::optional<Parasitics> raw;

    static BusParams from_parasitics(const Parasitics& p);
    // Keys: tau0_ps, lambda, r_ohm_per_um, cg_f_per_um (alias c_f_per_um), cc_f_per_um, length_um.
    static BusParams from_config(const std::map<std::string, std::string>& kv);

    void validate() const;
};

// Transition symbols over a window of wires; examined is 0-based.
class Pattern {
public:
    Pattern() = default;
    Pattern(std::vector<Symbol> symbols, int examined);

    // Characters U, -, D (also u/d, 0 for hold). Examined wire is 0-based.
    static Pattern parse(std::string_view text, int examined);
    static Pattern from_deltas(const std::vector<int>& deltas, int examined);

    int width() const { return static_cast<int>(symbols_.size()); }
    int examined() const { return examined_; }
    Symbol examined_symbol() const { return symbols_[examined_]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    int delta(int i) const { return static_cast<int>(symbols_[i]); }

    Pattern complement() const;
    Pattern mirrored() const;
    std::string str() const;

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.examined_ == b.examined_ && a.symbols_ == b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
    int examined_ = 0;
};

struct Mode {
    Surd slope;              // p = 1 + slope * lambda
    std::vector<Surd> e;     // eigenvector of C/c
    Surd weight;             // e[examined] / |e|^2

    double multiplier(double lambda) const { return 1.0 + slope.value() * lambda; }
};

struct EigenSystem {
    int width = 0;
    int examined = 0;  // 0-based
    std::vector<Mode> modes;
};

EigenSystem five_wire_eigensystem();
// wire is 1-based: 1 = bus edge, 2 = its neighbour
EigenSystem four_wire_eigensystem(int wire);

// Exact coupling matrix C/c = I + slope-free Laplacian part: returns L so that C/c = I + lambda*L.
std::vector<std::vector<int>> coupling_laplacian(int width);

struct Term {
    int mode = 0;
    Surd coeff_pi;    // coefficient times pi, exact
    double coeff = 0;
    Surd slope;
    double a = 1;     // time-constant multiplier
};

// V(t) = final_level - sum coeff_i * exp(-t / (a_i * tau))
struct ClosedFormResponse {
    int final_level = 0;
    std::vector<Term> terms;
    std::vector<Surd> modal_coeff_pi;  // per mode in eigensystem order, zeros kept
    double tau_ps = 0;

    double at(double t_ps) const;
    double initial_residual() const;
};

ClosedFormResponse synth_response(const Pattern& pattern, const BusParams& params);

struct SolverConfig {
    double start_fraction = 0.01;
    double growth = 1.2;
    double tolerance_ps = 1e-5;
    double horizon = 1e4;
};

double solve_half_delay(const ClosedFormResponse& resp, const SolverConfig& cfg = {});

// synth_response + solve_half_delay; a Hold on the examined wire gives 0.
double pattern_delay(const Pattern& pattern, const BusParams& params, const SolverConfig& cfg = {});

}  // namespace cacforge
