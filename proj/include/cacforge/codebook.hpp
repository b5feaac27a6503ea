#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cacforge/classification.hpp"

namespace cacforge {

using BigInt = boost::multiprecision::cpp_int;
using Word = std::uint64_t;

class CodebookError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Constraint {
    int ci = 3;
    int jc = 1;

    // "C3,1C", "(C3,1C)" or "3,1"
    static Constraint parse(const std::string& text);
    std::string str() const;
    bool constructible() const;
    bool trivial() const { return ci >= 6 && jc >= 4; }

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

inline constexpr Constraint kC21{2, 1};
inline constexpr Constraint kC31{3, 1};
inline constexpr Constraint kC42{4, 2};
inline constexpr Constraint kC53{5, 3};

// Bit i of word counts from the most significant end: c1 is wire 1.
inline int bit_at(Word w, int n, int wire) { return static_cast<int>((w >> (n - wire)) & 1U); }
std::string word_bits(Word w, int n);
Word parse_bits(const std::string& bits);

// Adjacency over 32 five-bit words.
using Graph = std::array<std::uint32_t, 32>;

Graph build_transition_graph_5(Constraint c, const Tables& tables);
Graph complete_graph(int nodes);

// All maximum cliques as sorted member lists, ordered by decimal value.
std::vector<std::vector<Word>> max_cliques(const Graph& g, int nodes = 32);

struct SeedPair {
    std::vector<Word> c0;
    std::vector<Word> c1;
};

// Orders two cliques so that c0 carries the parity-0 boundary types (fewer words starting "10").
SeedPair order_seed_pair(std::vector<Word> a, std::vector<Word> b);
SeedPair seed_codebooks(Constraint c, const Tables& tables);

// Allowed windows per position; the window ending at wire k (k = w..n) is allowed[k - w].
struct WindowLanguage {
    int n = 0;
    int w = 0;
    std::vector<std::uint32_t> allowed;

    bool accepts(Word word) const;
    std::vector<Word> enumerate() const;
};

struct Codebook {
    int width = 0;
    std::vector<Word> words;  // ascending
    std::string provenance;
    int seed_parity = 0;
    WindowLanguage language;

    size_t size() const { return words.size(); }
    bool contains(Word w) const;
};

// Grow from the parity seed, alternating the seed used for each new window.
Codebook expand_codebook(const SeedPair& seeds, int n, const std::string& provenance = "", int parity = 0);
Codebook build_constrained(Constraint c, int n, const Tables& tables, int parity = 0);

using IntMatrix = std::vector<std::vector<BigInt>>;
using IntVector = std::vector<BigInt>;

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_pow(const IntMatrix& a, int e);
IntMatrix identity(size_t m);

struct ExpansionMatrix {
    size_t m = 0;
    IntMatrix D0, D1, D, Y;
    IntVector V;
};

ExpansionMatrix expansion_matrix(const SeedPair& seeds);

// V D^(n-5) Y V^T. Y reverses index order for a complementary seed pair and is the identity for a
// single self-paired clique.
BigInt codebook_size(const ExpansionMatrix& em, int n);
BigInt weighted_size(const ExpansionMatrix& em, int n, const IntVector& left, const IntVector& right);

// Pruning subsets applied to the (C2,1C) codebook.
struct IolcSets {
    std::vector<Word> left;        // leftmost window
    std::vector<Word> right_odd;   // rightmost window, odd n
    std::vector<Word> right_even;  // rightmost window, even n
};
IolcSets iolc_sets();

Codebook prune_iolc(const Codebook& cb);
// Counting vectors for the pruned code at width n, in the index space of V D^(n-5) Y.
std::pair<IntVector, IntVector> iolc_vectors(const SeedPair& seeds, int n);
BigInt iolc_size(const SeedPair& seeds, int n);

struct RecursionReport {
    std::string name;
    std::vector<BigInt> sizes;  // n = 5 .. n_max
    std::vector<std::pair<int, int>> recursion;  // (lag, coefficient)
    std::vector<BigInt> initial;
    bool initial_ok = false;
    bool recursion_ok = false;
    int first_violation = -1;  // n of first mismatch, -1 if none
    std::string identity;
    bool identity_ok = false;
    std::string note;
    // recursion the sizes do satisfy when the stated one does not hold
    std::vector<std::pair<int, int>> alternate;
    bool alternate_ok = false;

    bool ok() const { return initial_ok && recursion_ok && identity_ok; }
};

// pruned selects the IOLC sequence under (C2,1C).
RecursionReport verify_recursion(Constraint c, int n_max, const Tables& tables, bool pruned = false);

enum class Family { OLC, FTC, FPC, FOC };
Family parse_family(const std::string& name);
std::string family_name(Family f);

Codebook classic_codebook(Family f, int n, int parity = 0);

struct TheoremCheck {
    std::string name;
    int n = 0;
    int parity = 0;
    bool holds = false;
    std::optional<Word> witness;  // first differing word
};

std::vector<TheoremCheck> verify_theorems(int n_max, const Tables& tables, int n_subset_max = 16);

struct LegalityReport {
    size_t pairs = 0;
    size_t violations = 0;
    std::optional<std::pair<Word, Word>> first;
};

// Every ordered pair checked on every switching wire (n >= 5).
LegalityReport check_pairwise_legality(const Codebook& cb, Constraint c, const WindowClassifier& wc);

void write_codebook(std::ostream& out, const Codebook& cb);
Codebook read_codebook(std::istream& in);
void write_matrix_csv(std::ostream& out, const IntMatrix& m);

// Sequence helpers
BigInt fibonacci(int n);   // F1 = F2 = 1
BigInt tribonacci(int n);  // T1 = T2 = 1, T3 = 2
BigInt olc_g(int n);       // G1..G5 = 2,3,4,5,7; G_n = G_(n-1) + G_(n-5)

}  // namespace cacforge
