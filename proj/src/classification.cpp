#include "cacforge/classification.hpp"

#include <algorithm>
#include <set>

namespace cacforge {

std::string DelayClass::str() const {
    if (unconstrained) return "-";
    switch (taxonomy) {
    case Taxonomy::MiddleC: return "C" + std::to_string(index);
    case Taxonomy::SideWire2:
    case Taxonomy::SideWire1: return std::to_string(index) + "C";
    case Taxonomy::LegacyD: return "D" + std::to_string(index);
    }
    return "?";
}

const Entry& ClassificationTable::at(const std::string& pattern) const {
    auto it = entries.find(pattern);
    if (it == entries.end()) throw ClassificationError("pattern not in table: " + pattern);
    return it->second;
}

int ClassificationTable::class_count() const {
    std::set<int> seen;
    for (const auto& s : subclasses)
        if (s.cls >= 0) seen.insert(s.cls);
    return static_cast<int>(seen.size());
}

std::vector<std::string> ClassificationTable::members_of(int cls) const {
    std::vector<std::string> out;
    for (const auto& [key, e] : entries)
        if (e.cls.index == cls && !e.cls.unconstrained) out.push_back(key);
    return out;
}

std::vector<std::pair<double, double>> ClassificationTable::class_ranges() const {
    std::vector<std::pair<double, double>> r;
    for (const auto& s : subclasses) {
        if (s.cls < 0) continue;
        if (static_cast<int>(r.size()) <= s.cls) r.resize(s.cls + 1, {1e300, -1e300});
        r[s.cls].first = std::min(r[s.cls].first, s.delay_ps);
        r[s.cls].second = std::max(r[s.cls].second, s.delay_ps);
    }
    return r;
}

namespace {

std::vector<std::pair<int, int>> intersecting(const std::vector<std::pair<double, double>>& r) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = i + 1; j < r.size(); ++j)
            if (r[i].first <= r[j].second && r[j].first <= r[i].second)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::string coeff_key(const std::vector<Surd>& c) {
    std::string k;
    for (const auto& x : c) k += x.str() + "|";
    return k;
}

}  // namespace

std::vector<std::pair<int, int>> ClassificationTable::overlapping_classes() const {
    return intersecting(class_ranges());
}

std::vector<Pattern> enumerate_patterns(int width, int examined, Symbol examined_symbol) {
    if (!((width == 5 && examined == 3) || (width == 4 && (examined == 1 || examined == 2))))
        throw ClassificationError("unsupported window: width " + std::to_string(width) + ", wire " +
                                  std::to_string(examined));
    const Symbol order[3] = {Symbol::Up, Symbol::Hold, Symbol::Down};
    std::vector<Pattern> out;
    int free = width - 1;
    int total = 1;
    for (int i = 0; i < free; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        std::vector<Symbol> s(width);
        int c = code;
        for (int pos = width - 1; pos >= 0; --pos) {
            if (pos == examined - 1) { s[pos] = examined_symbol; continue; }
            s[pos] = order[c % 3];
            c /= 3;
        }
        out.emplace_back(std::move(s), examined - 1);
    }
    return out;
}

ClassificationTable build_subclasses(const std::vector<Pattern>& patterns, const BusParams& params,
                                     Taxonomy taxonomy) {
    ClassificationTable table;
    table.taxonomy = taxonomy;
    table.params = params;
    if (patterns.empty()) return table;
    const auto order = table_mode_order(taxonomy);
    std::map<std::string, size_t> by_key;
    for (const auto& p : patterns) {
        if (p.width() != patterns.front().width() || p.examined() != patterns.front().examined() ||
            p.examined_symbol() != patterns.front().examined_symbol())
            throw ClassificationError("patterns must share width, examined wire and symbol");
        Entry e;
        e.pattern = p;
        e.response = synth_response(p, params);
        e.delay_ps = solve_half_delay(e.response);
        e.cls = DelayClass::none(taxonomy);
        std::vector<Surd> coeffs;
        for (int m : order) coeffs.push_back(e.response.modal_coeff_pi[m]);
        auto key = coeff_key(coeffs);
        auto it = by_key.find(key);
        if (it == by_key.end()) {
            it = by_key.emplace(key, table.subclasses.size()).first;
            table.subclasses.push_back({0, coeffs, {}, e.delay_ps, -1});
        }
        table.subclasses[it->second].members.push_back(p.str());
        table.entries.emplace(p.str(), std::move(e));
    }
    std::vector<size_t> idx(table.subclasses.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return table.subclasses[a].delay_ps < table.subclasses[b].delay_ps;
    });
    std::vector<Subclass> sorted;
    for (size_t i = 0; i < idx.size(); ++i) {
        sorted.push_back(table.subclasses[idx[i]]);
        sorted.back().id = static_cast<int>(i);
        for (const auto& m : sorted.back().members) table.entries.at(m).subclass = static_cast<int>(i);
    }
    table.subclasses = std::move(sorted);
    return table;
}

std::vector<int> gap_clusters(const std::vector<double>& ascending, double threshold) {
    std::vector<int> ids;
    int id = 0;
    for (size_t i = 0; i < ascending.size(); ++i) {
        if (i > 0 && (ascending[i] - ascending[i - 1]) / ascending[i] >= threshold) ++id;
        ids.push_back(id);
    }
    return ids;
}

namespace {

std::vector<Pattern> patterns_for(Taxonomy t) {
    switch (t) {
    case Taxonomy::MiddleC: return enumerate_patterns(5, 3, Symbol::Up);
    case Taxonomy::SideWire2: return enumerate_patterns(4, 2, Symbol::Up);
    case Taxonomy::SideWire1: return enumerate_patterns(4, 1, Symbol::Up);
    default: throw ClassificationError("legacy taxonomy has no window table");
    }
}

}  // namespace

ClassificationTable classify_frozen(Taxonomy taxonomy, const BusParams& params) {
    ClassificationTable table = build_subclasses(patterns_for(taxonomy), params, taxonomy);
    const auto membership = embedded_golden(taxonomy).membership();
    for (auto& s : table.subclasses) {
        for (const auto& m : s.members) {
            auto it = membership.find(m);
            if (it == membership.end()) throw ClassificationError("golden table misses pattern " + m);
            if (s.cls >= 0 && s.cls != it->second)
                throw ClassificationError("golden table splits subclass containing " + m);
            s.cls = it->second;
        }
        for (const auto& m : s.members) table.entries.at(m).cls = {taxonomy, s.cls, false};
    }
    return table;
}

ClassificationTable classify_middle(const BusParams& params) {
    if (params.lambda < 3)
        throw ClassificationError("middle-wire classes overlap for lambda < 3; classification needs lambda >= 3");
    return classify_frozen(Taxonomy::MiddleC, params);
}

std::pair<ClassificationTable, ClassificationTable> classify_side(const BusParams& params) {
    if (params.lambda < 1)
        throw ClassificationError("side-wire classes overlap for lambda < 1; classification needs lambda >= 1");
    return {classify_frozen(Taxonomy::SideWire2, params), classify_frozen(Taxonomy::SideWire1, params)};
}

LegacyResult classify_legacy(const Pattern& pattern, const BusParams& params) {
    if (pattern.width() != 3 || pattern.examined() != 1)
        throw ClassificationError("legacy classes apply to three-wire windows examined in the middle");
    int d = pattern.delta(1);
    if (d == 0) return {{Taxonomy::LegacyD, 0, false}, params.tau0_ps};
    // T = tau0 [(1+2 lambda) d^2 - lambda d (dl + dr)] = (1 + i lambda) tau0
    int i = 2 - d * (pattern.delta(0) + pattern.delta(2));
    return {{Taxonomy::LegacyD, i, false}, (1 + i * params.lambda) * params.tau0_ps};
}

Tables build_tables(const BusParams& params) {
    auto side = classify_side(params);
    return {classify_middle(params), std::move(side.first), std::move(side.second)};
}

DelayClass window_class(const Pattern& window, const Tables& tables) {
    const ClassificationTable* t = nullptr;
    switch (window.width()) {
    case 5: t = &tables.middle; break;
    case 4: t = window.examined() == 1 ? &tables.wire2 : &tables.wire1; break;
    default: throw ClassificationError("window width must be 4 or 5");
    }
    if (window.examined_symbol() == Symbol::Hold) return DelayClass::none(t->taxonomy);
    Pattern p = window.examined_symbol() == Symbol::Down ? window.complement() : window;
    return t->at(p.str()).cls;
}

DelayClass side_window_class(const std::array<Symbol, 4>& w, const Tables& tables) {
    std::vector<Symbol> s(w.begin(), w.end());
    if (w[1] != Symbol::Hold) return window_class(Pattern(s, 1), tables);
    if (w[0] != Symbol::Hold) return window_class(Pattern(s, 0), tables);
    return DelayClass::none(Taxonomy::SideWire2);
}

namespace {

int base3(const int* delta, int width) {
    int code = 0;
    for (int i = 0; i < width; ++i) code = code * 3 + (delta[i] + 1);
    return code;
}

}  // namespace

WindowClassifier::WindowClassifier(const Tables& tables) {
    int d[5];
    for (int code = 0; code < 243; ++code) {
        int c = code;
        for (int i = 4; i >= 0; --i) { d[i] = c % 3 - 1; c /= 3; }
        std::vector<int> v(d, d + 5);
        DelayClass k = window_class(Pattern::from_deltas(v, 2), tables);
        middle_[code] = k.unconstrained ? -1 : k.index;
    }
    for (int code = 0; code < 81; ++code) {
        int c = code;
        std::array<Symbol, 4> s;
        for (int i = 3; i >= 0; --i) { s[i] = static_cast<Symbol>(c % 3 - 1); c /= 3; }
        DelayClass k = side_window_class(s, tables);
        side_[code] = k.unconstrained ? -1 : k.index;
    }
}

int WindowClassifier::middle(const int* delta) const { return middle_[base3(delta, 5)]; }
int WindowClassifier::side(const int* delta) const { return side_[base3(delta, 4)]; }

std::vector<SweepPoint> sweep_lambda(const std::vector<double>& lambdas, Taxonomy taxonomy, double tau0_ps) {
    std::vector<SweepPoint> out;
    for (double lambda : lambdas) {
        if (!(lambda > 0)) throw ClassificationError("lambda must be positive");
        BusParams p;
        p.lambda = lambda;
        p.tau0_ps = tau0_ps;
        SweepPoint pt;
        pt.lambda = lambda;
        if (taxonomy == Taxonomy::LegacyD) {
            auto mid = classify_frozen(Taxonomy::MiddleC, p);
            for (const auto& [key, e] : mid.entries) {
                Pattern three = Pattern::parse(key.substr(1, 3), 1);
                int i = classify_legacy(three, p).cls.index;
                if (static_cast<int>(pt.ranges.size()) <= i) pt.ranges.resize(i + 1, {1e300, -1e300});
                pt.ranges[i].first = std::min(pt.ranges[i].first, e.delay_ps);
                pt.ranges[i].second = std::max(pt.ranges[i].second, e.delay_ps);
            }
            pt.overlaps = intersecting(pt.ranges);
        } else {
            auto t = classify_frozen(taxonomy, p);
            pt.ranges = t.class_ranges();
            pt.overlaps = t.overlapping_classes();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace cacforge
