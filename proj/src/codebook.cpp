#include "cacforge/codebook.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace cacforge {

Constraint Constraint::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ' && ch != 'C' && ch != 'c') s += ch;
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CodebookError("constraint must look like C3,1C: " + text);
    try {
        Constraint c{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
        if (c.ci < 0 || c.ci > 6 || c.jc < 0 || c.jc > 4) throw CodebookError("constraint out of range: " + text);
        return c;
    } catch (const std::logic_error&) {
        throw CodebookError("constraint must look like C3,1C: " + text);
    }
}

std::string Constraint::str() const { return "(C" + std::to_string(ci) + "," + std::to_string(jc) + "C)"; }

bool Constraint::constructible() const {
    return *this == kC21 || *this == kC31 || *this == kC42 || *this == kC53;
}

std::string word_bits(Word w, int n) {
    std::string s(n, '0');
    for (int i = 1; i <= n; ++i)
        if (bit_at(w, n, i)) s[i - 1] = '1';
    return s;
}

Word parse_bits(const std::string& bits) {
    if (bits.empty() || bits.size() > 63) throw CodebookError("codeword must have 1..63 bits");
    Word w = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw CodebookError("codeword must be binary: " + bits);
        w = (w << 1) | static_cast<Word>(ch - '0');
    }
    return w;
}

namespace {

void fill_delta(Word u, Word v, int n, int* delta) {
    for (int i = 1; i <= n; ++i) delta[i - 1] = bit_at(v, n, i) - bit_at(u, n, i);
}

// true when no wire exceeds the constraint
bool transition_legal(const int* delta, int n, Constraint c, const WindowClassifier& wc) {
    for (int k = 3; k <= n - 2; ++k)
        if (wc.middle(delta + k - 3) > c.ci) return false;
    if (wc.side(delta) > c.jc) return false;
    int rev[4] = {delta[n - 1], delta[n - 2], delta[n - 3], delta[n - 4]};
    return wc.side(rev) <= c.jc;
}

std::uint32_t mask_of(const std::vector<Word>& words) {
    std::uint32_t m = 0;
    for (Word w : words) {
        if (w >= 32) throw CodebookError("seed words must be 5-bit");
        m |= 1U << w;
    }
    return m;
}

bool contains_sorted(const std::vector<Word>& v, Word w) { return std::binary_search(v.begin(), v.end(), w); }

}  // namespace

Graph build_transition_graph_5(Constraint c, const Tables& tables) {
    WindowClassifier wc(tables);
    Graph g{};
    int delta[5];
    for (Word u = 0; u < 32; ++u)
        for (Word v = 0; v < 32; ++v) {
            if (u == v) continue;
            fill_delta(u, v, 5, delta);
            if (transition_legal(delta, 5, c, wc)) g[u] |= 1U << v;
        }
    return g;
}

Graph complete_graph(int nodes) {
    Graph g{};
    std::uint32_t all = nodes >= 32 ? 0xFFFFFFFFU : ((1U << nodes) - 1);
    for (int u = 0; u < nodes; ++u) g[u] = all & ~(1U << u);
    return g;
}

std::vector<std::vector<Word>> max_cliques(const Graph& g, int nodes) {
    std::uint32_t all = nodes >= 32 ? 0xFFFFFFFFU : ((1U << nodes) - 1);
    std::vector<std::uint32_t> found;
    int best = 0;
    std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> bk = [&](std::uint32_t R, std::uint32_t P,
                                                                              std::uint32_t X) {
        int rs = std::popcount(R);
        if (!P && !X) {
            if (rs > best) { best = rs; found.clear(); }
            if (rs == best) found.push_back(R);
            return;
        }
        if (rs + std::popcount(P) < best) return;
        int pivot = -1, pivot_deg = -1;
        for (std::uint32_t px = P | X; px; px &= px - 1) {
            int u = std::countr_zero(px);
            int d = std::popcount(P & g[u]);
            if (d > pivot_deg) { pivot_deg = d; pivot = u; }
        }
        for (std::uint32_t cand = P & ~g[pivot]; cand; cand &= cand - 1) {
            int v = std::countr_zero(cand);
            std::uint32_t bit = 1U << v;
            bk(R | bit, P & g[v], X & g[v]);
            P &= ~bit;
            X |= bit;
        }
    };
    bk(0, all, 0);
    std::vector<std::vector<Word>> out;
    for (auto R : found) {
        std::vector<Word> q;
        for (; R; R &= R - 1) q.push_back(static_cast<Word>(std::countr_zero(R)));
        out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SeedPair order_seed_pair(std::vector<Word> a, std::vector<Word> b) {
    auto starts10 = [](const std::vector<Word>& c) {
        return std::count_if(c.begin(), c.end(), [](Word w) { return (w >> 3) == 2; });
    };
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto ka = starts10(a), kb = starts10(b);
    if (ka < kb || (ka == kb && a <= b)) return {a, b};
    return {b, a};
}

SeedPair seed_codebooks(Constraint c, const Tables& tables) {
    if (c.ci == 0 && c.jc == 0) throw CodebookError("(C0,0C) is too restrictive and not supported");
    if (c.trivial()) {
        std::vector<Word> all(32);
        for (Word w = 0; w < 32; ++w) all[w] = w;
        return {all, all};
    }
    if (!c.constructible()) throw CodebookError("unsupported constraint " + c.str());
    auto cliques = max_cliques(build_transition_graph_5(c, tables));
    if (cliques.size() == 1) return {cliques[0], cliques[0]};
    if (cliques.size() == 2) return order_seed_pair(cliques[0], cliques[1]);
    throw CodebookError("expected one or two maximum cliques for " + c.str());
}

bool WindowLanguage::accepts(Word word) const {
    if (n <= 0 || (n < 64 && (word >> n) != 0)) return false;
    const Word mask = (Word{1} << w) - 1;
    for (int k = w; k <= n; ++k)
        if (!((allowed[k - w] >> ((word >> (n - k)) & mask)) & 1U)) return false;
    return true;
}

std::vector<Word> WindowLanguage::enumerate() const {
    std::vector<Word> out;
    const Word mask = (Word{1} << w) - 1;
    std::function<void(int, Word)> grow = [&](int placed, Word prefix) {
        if (placed == n) { out.push_back(prefix); return; }
        for (Word x = 0; x < 2; ++x) {
            Word next = (prefix << 1) | x;
            int k = placed + 1;
            if (k >= w && !((allowed[k - w] >> (next & mask)) & 1U)) continue;
            grow(k, next);
        }
    };
    grow(0, 0);
    return out;
}

bool Codebook::contains(Word w) const { return contains_sorted(words, w); }

Codebook expand_codebook(const SeedPair& seeds, int n, const std::string& provenance, int parity) {
    if (n < 5) throw CodebookError("expansion needs n >= 5; narrower buses use the side-wire rule alone");
    if (n > 63) throw CodebookError("codewords wider than 63 bits are not supported");
    const auto& first = parity ? seeds.c1 : seeds.c0;
    const auto& second = parity ? seeds.c0 : seeds.c1;
    const std::uint32_t masks[2] = {mask_of(first), mask_of(second)};

    std::vector<Word> cur(first.begin(), first.end());
    std::sort(cur.begin(), cur.end());
    int s = 1;
    for (int k = 5; k <= n - 1; ++k) {
        std::vector<Word> next;
        for (Word c : cur) {
            Word last4 = c & 15U;
            if ((masks[s] >> (last4 << 1)) & 1U) next.push_back(c << 1);
            if ((masks[s] >> ((last4 << 1) | 1U)) & 1U) next.push_back((c << 1) | 1U);
        }
        cur = std::move(next);
        s = 1 - s;
    }
    Codebook cb;
    cb.width = n;
    cb.words = std::move(cur);
    cb.provenance = provenance;
    cb.seed_parity = parity;
    cb.language = {n, 5, {}};
    for (int k = 5; k <= n; ++k) cb.language.allowed.push_back(masks[(k - 5) % 2]);
    return cb;
}

Codebook build_constrained(Constraint c, int n, const Tables& tables, int parity) {
    return expand_codebook(seed_codebooks(c, tables), n, c.str(), parity);
}

IntMatrix identity(size_t m) {
    IntMatrix I(m, IntVector(m, 0));
    for (size_t i = 0; i < m; ++i) I[i][i] = 1;
    return I;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, IntVector(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

IntMatrix mat_pow(const IntMatrix& a, int e) {
    IntMatrix result = identity(a.size()), base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = mat_mul(result, base);
        base = mat_mul(base, base);
    }
    return result;
}

ExpansionMatrix expansion_matrix(const SeedPair& seeds) {
    if (seeds.c0.size() != seeds.c1.size()) throw CodebookError("seed codebooks differ in size");
    ExpansionMatrix em;
    em.m = seeds.c0.size();
    auto link = [&](const std::vector<Word>& from, const std::vector<Word>& to) {
        IntMatrix d(em.m, IntVector(em.m, 0));
        for (size_t i = 0; i < em.m; ++i)
            for (size_t j = 0; j < em.m; ++j) d[i][j] = (from[i] & 15U) == (to[j] >> 1) ? 1 : 0;
        return d;
    };
    em.D0 = link(seeds.c0, seeds.c1);
    em.D1 = link(seeds.c1, seeds.c0);
    if (seeds.c0 == seeds.c1) {
        // one self-paired clique: no alternation, so no reversal either
        em.Y = identity(em.m);
    } else {
        em.Y = IntMatrix(em.m, IntVector(em.m, 0));
        for (size_t i = 0; i < em.m; ++i) em.Y[i][em.m - 1 - i] = 1;
    }
    em.D = mat_mul(em.D0, em.Y);
    em.V = IntVector(em.m, 1);
    return em;
}

BigInt weighted_size(const ExpansionMatrix& em, int n, const IntVector& left, const IntVector& right) {
    if (n < 5) throw CodebookError("counting formula needs n >= 5");
    IntMatrix M = mat_mul(mat_pow(em.D, n - 5), em.Y);
    BigInt total = 0;
    for (size_t i = 0; i < em.m; ++i)
        for (size_t j = 0; j < em.m; ++j) total += left[i] * M[i][j] * right[j];
    return total;
}

BigInt codebook_size(const ExpansionMatrix& em, int n) { return weighted_size(em, n, em.V, em.V); }

IolcSets iolc_sets() { return {{0, 3, 15, 30, 31}, {0, 15, 24, 30, 31}, {0, 7, 16, 28, 31}}; }

Codebook prune_iolc(const Codebook& cb) {
    if (cb.provenance != kC21.str() || cb.seed_parity != 0)
        throw CodebookError("IOLC pruning applies to parity-0 (C2,1C) codebooks only");
    const int n = cb.width;
    const auto sets = iolc_sets();
    const auto& right = n % 2 ? sets.right_odd : sets.right_even;
    Codebook out;
    out.width = n;
    out.provenance = "IOLC";
    out.seed_parity = 0;
    for (Word w : cb.words)
        if (contains_sorted(sets.left, w >> (n - 5)) && contains_sorted(right, w & 31U)) out.words.push_back(w);
    out.language = cb.language;
    out.language.allowed.front() &= mask_of(sets.left);
    out.language.allowed.back() &= mask_of(right);
    return out;
}

std::pair<IntVector, IntVector> iolc_vectors(const SeedPair& seeds, int n) {
    const auto sets = iolc_sets();
    const size_t m = seeds.c0.size();
    IntVector w1(m), w2(m);
    for (size_t i = 0; i < m; ++i) w1[i] = contains_sorted(sets.left, seeds.c0[i]) ? 1 : 0;
    // D^(n-5) Y ends in C5^1 order for odd n-5 and in reversed C5^0 order for even n-5
    for (size_t j = 0; j < m; ++j) {
        if ((n - 5) % 2) w2[j] = contains_sorted(sets.right_even, seeds.c1[j]) ? 1 : 0;
        else w2[j] = contains_sorted(sets.right_odd, seeds.c0[m - 1 - j]) ? 1 : 0;
    }
    return {w1, w2};
}

BigInt iolc_size(const SeedPair& seeds, int n) {
    auto [w1, w2] = iolc_vectors(seeds, n);
    return weighted_size(expansion_matrix(seeds), n, w1, w2);
}

namespace {

struct RecursionSpec {
    std::vector<std::pair<int, int>> recursion;
    std::vector<long> initial;
    int lhs_power;
    std::vector<std::pair<int, int>> rhs;  // (power, coefficient)
    std::string note;
    std::vector<std::pair<int, int>> alternate;
};

std::string identity_text(const RecursionSpec& s) {
    std::ostringstream os;
    os << "D^" << s.lhs_power << " =";
    bool first = true;
    for (auto [p, k] : s.rhs) {
        os << (first ? (k < 0 ? " -" : " ") : (k < 0 ? " - " : " + "));
        if (std::abs(k) != 1) os << std::abs(k);
        os << (p == 1 ? std::string("D") : "D^" + std::to_string(p));
        first = false;
    }
    return os.str();
}

}  // namespace

RecursionReport verify_recursion(Constraint c, int n_max, const Tables& tables, bool pruned) {
    RecursionSpec rs;
    if (c == kC31) rs = {{{2, 1}, {3, 1}}, {7, 9, 12}, 7, {{5, 1}, {4, 1}}, ""};
    else if (c == kC42) rs = {{{1, 2}, {2, -1}, {4, 1}}, {16, 26, 42, 68}, 16, {{15, 2}, {14, -1}, {12, 1}}, ""};
    else if (c == kC53)
        rs = {{{1, 1}, {2, 1}, {3, 1}}, {24, 44, 81}, 24, {{23, 1}, {22, 1}, {21, 1}},
                "the form |C(n-1)| - |C(n-2)| + |C(n-3)| does not fit the counts; the all-plus (tribonacci) form "
                "is checked here"};
    else if (c == kC21 && !pruned) rs = {{{2, 1}, {5, 1}}, {6, 7, 9, 11, 14}, 6, {{4, 1}, {1, 1}}, ""};
    else if (c == kC21 && pruned)
        rs = {{{2, 1}, {5, 1}},
                {4, 5, 7, 8, 11},
                6,
                {{4, 1}, {1, 1}},
                "the end vectors alternate with the parity of n, so the lag-(2,5) recursion is not implied; "
                "the sizes follow |C(n)| = 2|C(n-2)| - |C(n-4)| + |C(n-10)|, from p(x)p(-x) with p(x) = x^6 - x^4 - x",
                {{2, 2}, {4, -1}, {10, 1}}};
    else throw CodebookError("no size recursion for " + c.str());
    if (pruned && !(c == kC21)) throw CodebookError("pruned sequence exists only for (C2,1C)");

    const int horizon = 4 + static_cast<int>(rs.initial.size());
    if (n_max < horizon) throw CodebookError("n_max must reach the initial-condition horizon");

    RecursionReport rep;
    rep.name = pruned ? "IOLC" : c.str();
    rep.recursion = rs.recursion;
    rep.note = rs.note;
    auto seeds = seed_codebooks(c, tables);
    auto em = expansion_matrix(seeds);
    for (int n = 5; n <= n_max; ++n) rep.sizes.push_back(pruned ? iolc_size(seeds, n) : codebook_size(em, n));
    for (long v : rs.initial) rep.initial.push_back(v);

    rep.initial_ok = true;
    for (size_t i = 0; i < rep.initial.size(); ++i)
        if (rep.sizes[i] != rep.initial[i]) {
            rep.initial_ok = false;
            if (rep.first_violation < 0) rep.first_violation = 5 + static_cast<int>(i);
        }
    rep.recursion_ok = true;
    for (int n = horizon + 1; n <= n_max; ++n) {
        BigInt expect = 0;
        for (auto [lag, k] : rs.recursion) expect += BigInt(k) * rep.sizes[n - lag - 5];
        if (expect != rep.sizes[n - 5]) {
            rep.recursion_ok = false;
            if (rep.first_violation < 0) rep.first_violation = n;
            break;
        }
    }

    rep.alternate = rs.alternate;
    if (!rs.alternate.empty()) {
        int reach = 0;
        for (auto [lag, k] : rs.alternate) reach = std::max(reach, lag);
        rep.alternate_ok = n_max >= 5 + reach;
        for (int n = 5 + reach; n <= n_max; ++n) {
            BigInt expect = 0;
            for (auto [lag, k] : rs.alternate) expect += BigInt(k) * rep.sizes[n - lag - 5];
            if (expect != rep.sizes[n - 5]) rep.alternate_ok = false;
        }
    }

    rep.identity = identity_text(rs);
    IntMatrix lhs = mat_pow(em.D, rs.lhs_power);
    IntMatrix rhs(em.m, IntVector(em.m, 0));
    for (auto [p, k] : rs.rhs) {
        IntMatrix t = mat_pow(em.D, p);
        for (size_t i = 0; i < em.m; ++i)
            for (size_t j = 0; j < em.m; ++j) rhs[i][j] += BigInt(k) * t[i][j];
    }
    rep.identity_ok = lhs == rhs;
    return rep;
}

Family parse_family(const std::string& name) {
    std::string u;
    for (char ch : name) u += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (u == "OLC") return Family::OLC;
    if (u == "FTC") return Family::FTC;
    if (u == "FPC") return Family::FPC;
    if (u == "FOC") return Family::FOC;
    throw CodebookError("unknown code family " + name);
}

std::string family_name(Family f) {
    switch (f) {
    case Family::OLC: return "OLC";
    case Family::FTC: return "FTC";
    case Family::FPC: return "FPC";
    case Family::FOC: return "FOC";
    }
    return "?";
}

namespace {

// window bits b[0..w-1] cover wires start..start+w-1
bool classic_window_ok(Family f, int parity, Word window, int w, int start) {
    int b[5];
    for (int t = 0; t < w; ++t) b[t] = static_cast<int>((window >> (w - 1 - t)) & 1U);
    bool ft = f == Family::OLC || f == Family::FTC;
    bool fp = f == Family::OLC || f == Family::FPC;
    if (fp)
        for (int t = 0; t + 2 < w; ++t)
            if (b[t] != b[t + 1] && b[t + 1] != b[t + 2]) return false;
    if (ft)
        for (int t = 0; t + 1 < w; ++t) {
            int boundary = start + t;
            bool forbid10 = (boundary - 1 + parity) % 2 == 0;
            if (forbid10 && b[t] == 1 && b[t + 1] == 0) return false;
            if (!forbid10 && b[t] == 0 && b[t + 1] == 1) return false;
        }
    if (f == Family::FOC)
        for (int t = 1; t + 1 < w; ++t) {
            int center = start + t;
            bool forbid101 = (center + parity) % 2 == 0;
            if (b[t - 1] != b[t] && b[t] != b[t + 1] && b[t] == (forbid101 ? 0 : 1)) return false;
        }
    return true;
}

}  // namespace

Codebook classic_codebook(Family f, int n, int parity) {
    if (n < 1 || n > 63) throw CodebookError("classic codebooks need 1 <= n <= 63");
    if (parity != 0 && parity != 1) throw CodebookError("boundary parity must be 0 or 1");
    if (f == Family::FPC) parity = 0;
    Codebook cb;
    cb.width = n;
    cb.provenance = family_name(f);
    cb.seed_parity = parity;
    cb.language.n = n;
    cb.language.w = std::min(5, n);
    const int w = cb.language.w;
    for (int k = w; k <= n; ++k) {
        std::uint32_t m = 0;
        for (Word x = 0; x < (Word{1} << w); ++x)
            if (classic_window_ok(f, parity, x, w, k - w + 1)) m |= 1U << x;
        cb.language.allowed.push_back(m);
    }
    cb.words = cb.language.enumerate();
    return cb;
}

namespace {

std::optional<Word> first_difference(const std::vector<Word>& a, const std::vector<Word>& b) {
    std::vector<Word> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
}

std::optional<Word> first_outside(const std::vector<Word>& sub, const std::vector<Word>& sup) {
    for (Word w : sub)
        if (!contains_sorted(sup, w)) return w;
    return std::nullopt;
}

}  // namespace

std::vector<TheoremCheck> verify_theorems(int n_max, const Tables& tables, int n_subset_max) {
    std::vector<TheoremCheck> out;
    const SeedPair s31 = seed_codebooks(kC31, tables);
    const SeedPair s42 = seed_codebooks(kC42, tables);
    const SeedPair s53 = seed_codebooks(kC53, tables);
    const SeedPair s21 = seed_codebooks(kC21, tables);
    auto push_eq = [&](const std::string& name, int n, int parity, const Codebook& a, const Codebook& b) {
        auto d = first_difference(a.words, b.words);
        out.push_back({name, n, parity, !d, d});
    };
    for (int n = 5; n <= n_max; ++n)
        for (int parity = 0; parity < 2; ++parity) {
            push_eq("(C3,1C) = OLC", n, parity, expand_codebook(s31, n, kC31.str(), parity),
                    classic_codebook(Family::OLC, n, parity));
            push_eq("(C5,3C) = FOC", n, parity, expand_codebook(s53, n, kC53.str(), parity),
                    classic_codebook(Family::FOC, n, parity));
            if (parity == 0)
                push_eq("(C4,2C) = FPC", n, 0, expand_codebook(s42, n, kC42.str(), 0),
                        classic_codebook(Family::FPC, n, 0));
        }
    for (int n = 5; n <= n_subset_max; ++n) {
        Codebook olc = classic_codebook(Family::OLC, n, 0);
        Codebook c21 = expand_codebook(s21, n, kC21.str(), 0);
        auto d = first_outside(c21.words, olc.words);
        out.push_back({"(C2,1C) subset of OLC", n, 0, !d, d});
        auto e = first_outside(prune_iolc(c21).words, olc.words);
        out.push_back({"IOLC subset of OLC", n, 0, !e, e});
    }
    return out;
}

LegalityReport check_pairwise_legality(const Codebook& cb, Constraint c, const WindowClassifier& wc) {
    const int n = cb.width;
    if (n < 5) throw CodebookError("pairwise legality needs n >= 5");
    LegalityReport rep;
    std::vector<int> delta(n);
    for (Word u : cb.words)
        for (Word v : cb.words) {
            if (u == v) continue;
            ++rep.pairs;
            fill_delta(u, v, n, delta.data());
            if (!transition_legal(delta.data(), n, c, wc)) {
                ++rep.violations;
                if (!rep.first) rep.first = {u, v};
            }
        }
    return rep;
}

void write_codebook(std::ostream& out, const Codebook& cb) {
    out << "# width=" << cb.width << " size=" << cb.words.size() << " provenance=" << cb.provenance
        << " seed_parity=" << cb.seed_parity << '\n';
    for (Word w : cb.words) out << word_bits(w, cb.width) << ' ' << w << '\n';
}

namespace {

WindowLanguage infer_language(const std::vector<Word>& words, int n) {
    WindowLanguage lang{n, std::min(5, n), {}};
    const Word mask = (Word{1} << lang.w) - 1;
    lang.allowed.assign(n - lang.w + 1, 0);
    for (Word word : words)
        for (int k = lang.w; k <= n; ++k) lang.allowed[k - lang.w] |= 1U << ((word >> (n - k)) & mask);
    return lang;
}

}  // namespace

Codebook read_codebook(std::istream& in) {
    Codebook cb;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            for (std::string kv; hs >> kv;) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
                if (k == "width") cb.width = std::stoi(v);
                else if (k == "provenance") cb.provenance = v;
                else if (k == "seed_parity") cb.seed_parity = std::stoi(v);
            }
            header = true;
            continue;
        }
        std::istringstream ls(line);
        std::string bits;
        ls >> bits;
        Word w = parse_bits(bits);
        if (cb.width == 0) cb.width = static_cast<int>(bits.size());
        if (static_cast<int>(bits.size()) != cb.width) throw CodebookError("codeword width mismatch: " + bits);
        cb.words.push_back(w);
    }
    if (!header && cb.words.empty()) throw CodebookError("empty codebook file");
    std::sort(cb.words.begin(), cb.words.end());
    if (std::adjacent_find(cb.words.begin(), cb.words.end()) != cb.words.end())
        throw CodebookError("duplicate codeword in file");
    cb.language = infer_language(cb.words, cb.width);
    if (cb.language.enumerate() != cb.words) cb.language = {};
    return cb;
}

void write_matrix_csv(std::ostream& out, const IntMatrix& m) {
    for (const auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
        out << '\n';
    }
}

BigInt fibonacci(int n) {
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return a;
}

BigInt tribonacci(int n) {
    if (n <= 2) return 1;
    BigInt a = 1, b = 1, c = 2;
    for (int i = 3; i < n; ++i) {
        BigInt t = a + b + c;
        a = b;
        b = c;
        c = t;
    }
    return c;
}

BigInt olc_g(int n) {
    std::vector<BigInt> g = {0, 2, 3, 4, 5, 7};
    for (int i = 6; i <= n; ++i) g.push_back(g[i - 1] + g[i - 5]);
    return g.at(n);
}

}  // namespace cacforge
