#include "cacforge/bus_model.hpp"

#include <cmath>
#include <numbers>

namespace cacforge {

char symbol_char(Symbol s) {
    switch (s) {
    case Symbol::Up: return 'U';
    case Symbol::Down: return 'D';
    default: return '-';
    }
}

Symbol symbol_from_char(char c) {
    switch (c) {
    case 'U': case 'u': case '+': return Symbol::Up;
    case 'D': case 'd': return Symbol::Down;
    case '-': case '0': case '.': return Symbol::Hold;
    default: throw ModelError(std::string("bad transition symbol '") + c + "'");
    }
}

BusParams BusParams::from_parasitics(const Parasitics& p) {
    if (p.r_ohm_per_um <= 0 || p.cg_f_per_um <= 0 || p.cc_f_per_um <= 0 || p.length_um <= 0)
        throw ModelError("parasitics must be positive");
    BusParams out;
    double R = p.r_ohm_per_um * p.length_um;
    double Cg = p.cg_f_per_um * p.length_um;
    out.tau0_ps = 0.5 * R * Cg * 1e12;
    out.lambda = p.cc_f_per_um / p.cg_f_per_um;
    out.raw = p;
    return out;
}

BusParams BusParams::from_config(const std::map<std::string, std::string>& kv) {
    auto num = [&](const char* key) -> std::optional<double> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        try {
            size_t used = 0;
            double v = std::stod(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument(key);
            return v;
        } catch (const std::exception&) {
            throw ModelError(std::string("config key ") + key + " is not a number: " + it->second);
        }
    };
    auto r = num("r_ohm_per_um");
    auto cg = num("cg_f_per_um");
    if (!cg) cg = num("c_f_per_um");
    auto cc = num("cc_f_per_um");
    auto len = num("length_um");
    BusParams out;
    if (r || cg || cc || len) {
        if (!(r && cg && cc && len))
            throw ModelError("raw parasitics need r_ohm_per_um, cg_f_per_um, cc_f_per_um and length_um");
        out = from_parasitics({*r, *cg, *cc, *len});
        if (auto t = num("tau0_ps"); t && std::abs(*t - out.tau0_ps) > 1e-9 * out.tau0_ps)
            throw ModelError("tau0_ps disagrees with raw parasitics");
        if (auto l = num("lambda"); l && std::abs(*l - out.lambda) > 1e-9 * out.lambda)
            throw ModelError("lambda disagrees with raw parasitics");
    } else {
        if (auto t = num("tau0_ps")) out.tau0_ps = *t;
        if (auto l = num("lambda")) out.lambda = *l;
    }
    out.validate();
    return out;
}

void BusParams::validate() const {
    if (!(tau0_ps > 0)) throw ModelError("tau0 must be positive");
    if (!(lambda > 0)) throw ModelError("lambda must be positive");
    if (raw) {
        BusParams d = from_parasitics(*raw);
        if (std::abs(d.tau0_ps - tau0_ps) > 1e-9 * tau0_ps || std::abs(d.lambda - lambda) > 1e-9 * lambda)
            throw ModelError("stored tau0/lambda do not match raw parasitics");
    }
}

Pattern::Pattern(std::vector<Symbol> symbols, int examined)
    : symbols_(std::move(symbols)), examined_(examined) {
    int w = width();
    if (w < 3 || w > 5) throw ModelError("pattern width must be 3, 4 or 5");
    if (examined_ < 0 || examined_ >= w) throw ModelError("examined wire outside window");
    if (w == 5 && examined_ != 2) throw ModelError("five-wire windows examine the middle wire");
    if (w == 4 && examined_ > 1) throw ModelError("four-wire windows examine wire 1 or 2");
    if (w == 3 && examined_ != 1) throw ModelError("three-wire windows examine the middle wire");
}

Pattern Pattern::parse(std::string_view text, int examined) {
    std::vector<Symbol> s;
    for (char c : text) s.push_back(symbol_from_char(c));
    return Pattern(std::move(s), examined);
}

Pattern Pattern::from_deltas(const std::vector<int>& deltas, int examined) {
    std::vector<Symbol> s;
    for (int d : deltas) {
        if (d < -1 || d > 1) throw ModelError("delta must be -1, 0 or 1");
        s.push_back(static_cast<Symbol>(d));
    }
    return Pattern(std::move(s), examined);
}

Pattern Pattern::complement() const {
    Pattern out = *this;
    for (auto& s : out.symbols_) s = static_cast<Symbol>(-static_cast<int>(s));
    return out;
}

Pattern Pattern::mirrored() const {
    if (width() == 4) throw ModelError("four-wire windows are mirrored onto the other bus edge, not in place");
    Pattern out = *this;
    std::reverse(out.symbols_.begin(), out.symbols_.end());
    out.examined_ = width() - 1 - examined_;
    return out;
}

std::string Pattern::str() const {
    std::string s;
    for (auto x : symbols_) s += symbol_char(x);
    return s;
}

std::vector<std::vector<int>> coupling_laplacian(int width) {
    std::vector<std::vector<int>> L(width, std::vector<int>(width, 0));
    for (int i = 0; i < width; ++i) {
        if (i > 0) { L[i][i] += 1; L[i][i - 1] = -1; }
        if (i + 1 < width) { L[i][i] += 1; L[i][i + 1] = -1; }
    }
    return L;
}

namespace {

Surd q(std::int64_t num, std::int64_t den = 1) { return Surd(Rational(num, den), 0, 0); }
Surd s5(std::int64_t num, std::int64_t den = 1) { return Surd(0, Rational(num, den), 5); }
Surd s2(std::int64_t num, std::int64_t den = 1) { return Surd(0, Rational(num, den), 2); }

void fill_weights(EigenSystem& sys) {
    for (auto& m : sys.modes) {
        Surd norm;
        for (const auto& x : m.e) norm += x * x;
        m.weight = m.e[sys.examined] / norm;
    }
}

}  // namespace

EigenSystem five_wire_eigensystem() {
    EigenSystem sys;
    sys.width = 5;
    sys.examined = 2;
    Surd one = q(1), zero = q(0);
    Surd a = s5(1, 4) - q(1, 4);   // (sqrt5 - 1)/4
    Surd b = s5(1, 4) + q(1, 4);   // (sqrt5 + 1)/4
    Surd g = s5(1, 2) + q(1, 2);   // (sqrt5 + 1)/2
    Surd h = s5(1, 2) - q(1, 2);   // (sqrt5 - 1)/2
    sys.modes = {
        {zero, {one, one, one, one, one}, {}},
        {q(5, 2) + s5(1, 2), {a, -b, one, -b, a}, {}},
        {q(5, 2) - s5(1, 2), {-b, a, one, a, -b}, {}},
        {q(3, 2) + s5(1, 2), {-one, g, zero, -g, one}, {}},
        {q(3, 2) - s5(1, 2), {-one, -h, zero, h, one}, {}},
    };
    fill_weights(sys);
    return sys;
}

EigenSystem four_wire_eigensystem(int wire) {
    if (wire != 1 && wire != 2) throw ModelError("four-wire eigensystem examines wire 1 or 2");
    EigenSystem sys;
    sys.width = 4;
    sys.examined = wire - 1;
    Surd one = q(1);
    Surd r = s2(1);
    sys.modes = {
        {q(0), {one, one, one, one}, {}},
        {q(2) - r, {-one, one - r, r - one, one}, {}},
        {q(2), {one, -one, -one, one}, {}},
        {q(2) + r, {-one, one + r, -(one + r), one}, {}},
    };
    fill_weights(sys);
    return sys;
}

double ClosedFormResponse::at(double t) const {
    double v = final_level;
    for (const auto& term : terms) v -= term.coeff * std::exp(-t / (term.a * tau_ps));
    return v;
}

double ClosedFormResponse::initial_residual() const {
    double v = final_level;
    for (const auto& term : terms) v -= term.coeff;
    return v;
}

ClosedFormResponse synth_response(const Pattern& pattern, const BusParams& params) {
    params.validate();
    int w = pattern.width();
    if (w == 3) throw ModelError("three-wire patterns belong to the legacy classifier");
    EigenSystem sys = w == 5 ? five_wire_eigensystem() : four_wire_eigensystem(pattern.examined() + 1);

    ClosedFormResponse out;
    out.final_level = pattern.delta(pattern.examined());
    out.tau_ps = 8.0 / (std::numbers::pi * std::numbers::pi) * params.tau0_ps;
    for (size_t i = 0; i < sys.modes.size(); ++i) {
        const Mode& m = sys.modes[i];
        Surd proj;
        for (int k = 0; k < w; ++k) proj += m.e[k] * Surd(pattern.delta(k));
        Surd c = Surd(4) * m.weight * proj;
        out.modal_coeff_pi.push_back(c);
        double cv = c.value() / std::numbers::pi;
        if (c.is_zero() || std::abs(cv) < 1e-12) continue;
        out.terms.push_back({static_cast<int>(i), c, cv, m.slope, m.multiplier(params.lambda)});
    }
    return out;
}

double solve_half_delay(const ClosedFormResponse& resp, const SolverConfig& cfg) {
    if (resp.final_level == 0) throw ModelError("no transition on examined wire");
    const double tau = resp.tau_ps;
    const double sgn = resp.final_level;
    // normalized distance above the 50% level
    auto g = [&](double t) { return sgn * resp.at(t) - 0.5; };
    auto tail = [&](double t) {
        double s = 0;
        for (const auto& term : resp.terms) s += std::abs(term.coeff) * std::exp(-t / (term.a * tau));
        return s;
    };

    double prev_t = 0, prev_g = g(0);
    double lo = -1, hi = -1;
    double t = cfg.start_fraction * tau;
    const double limit = cfg.horizon * tau;
    bool settled = false;
    while (t <= limit) {
        double gt = g(t);
        if (prev_g <= 0 && gt > 0) { lo = prev_t; hi = t; }
        else if (gt <= 0) { lo = hi = -1; }
        if (gt > 0 && tail(t) < 0.5) { settled = true; break; }
        prev_t = t;
        prev_g = gt;
        t *= cfg.growth;
    }
    if (!settled || hi < 0) throw ModelError("50% crossing not bracketed within horizon");
    while (hi - lo > cfg.tolerance_ps) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) > 0) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

double pattern_delay(const Pattern& pattern, const BusParams& params, const SolverConfig& cfg) {
    if (pattern.examined_symbol() == Symbol::Hold) return 0.0;
    return solve_half_delay(synth_response(pattern, params), cfg);
}

}  // namespace cacforge
