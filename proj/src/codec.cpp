#include "cacforge/codec.hpp"

#include <bit>
#include <limits>

namespace cacforge {

namespace {

// Window check for the bit that completes position k (1-based), given the last w bits.
bool step_ok(const WindowLanguage& lang, int k, Word window) {
    if (k < lang.w) return true;
    return (lang.allowed[k - lang.w] >> window) & 1U;
}

}  // namespace

int RankTable::data_bits() const {
    std::uint64_t t = total();
    return t == 0 ? -1 : 63 - std::countl_zero(t);
}

RankTable build_rank_table(const WindowLanguage& language) {
    if (language.n < 1 || language.n > 63 || language.w < 1 || language.w > 5)
        throw CodecError("codebook has no usable window language");
    if (static_cast<int>(language.allowed.size()) != language.n - language.w + 1)
        throw CodecError("window language does not cover the codeword");
    RankTable t;
    t.language = language;
    const int n = language.n, w = language.w;
    const Word state_mask = (Word{1} << (w - 1)) - 1;
    const Word window_mask = (Word{1} << w) - 1;
    const size_t states = size_t{1} << (w - 1);
    t.completions.assign(n + 1, std::vector<std::uint64_t>(states, 0));
    for (size_t s = 0; s < states; ++s) t.completions[n][s] = 1;
    for (int p = n - 1; p >= 0; --p)
        for (size_t s = 0; s < states; ++s) {
            std::uint64_t sum = 0;
            for (Word x = 0; x < 2; ++x) {
                Word next = (static_cast<Word>(s) << 1) | x;
                if (!step_ok(language, p + 1, next & window_mask)) continue;
                std::uint64_t c = t.completions[p + 1][next & state_mask];
                if (sum > std::numeric_limits<std::uint64_t>::max() - c) throw CodecError("codebook too large to rank");
                sum += c;
            }
            t.completions[p][s] = sum;
        }
    return t;
}

RankTable build_rank_table(const Codebook& cb) {
    if (cb.language.n != cb.width) throw CodecError("codebook has no usable window language");
    return build_rank_table(cb.language);
}

RankTable build_rank_table(Constraint c, int n, const Tables& tables, int parity) {
    return build_rank_table(build_constrained(c, n, tables, parity));
}

RankTable build_rank_table(Family f, int n, int parity) { return build_rank_table(classic_codebook(f, n, parity)); }

Word encode(std::uint64_t data, const RankTable& table) {
    const int k = table.data_bits();
    if (k < 0 || data >= (std::uint64_t{1} << k))
        throw CodecError("data word " + std::to_string(data) + " outside [0, 2^" + std::to_string(k) + ")");
    const auto& lang = table.language;
    const Word state_mask = (Word{1} << (lang.w - 1)) - 1;
    const Word window_mask = (Word{1} << lang.w) - 1;
    Word word = 0;
    std::uint64_t rest = data;
    for (int p = 0; p < lang.n; ++p) {
        Word zero = word << 1;
        std::uint64_t c0 = step_ok(lang, p + 1, zero & window_mask) ? table.completions[p + 1][zero & state_mask] : 0;
        if (rest < c0) {
            word = zero;
        } else {
            rest -= c0;
            word = zero | 1U;
        }
    }
    return word;
}

std::uint64_t decode(Word word, const RankTable& table) {
    const auto& lang = table.language;
    if (!lang.accepts(word)) throw CodecError("word " + word_bits(word, lang.n) + " is not a codeword");
    const Word state_mask = (Word{1} << (lang.w - 1)) - 1;
    const Word window_mask = (Word{1} << lang.w) - 1;
    std::uint64_t rank = 0;
    for (int p = 0; p < lang.n; ++p) {
        Word prefix = word >> (lang.n - p - 1);
        if (prefix & 1U) {
            Word zero = prefix & ~Word{1};
            if (step_ok(lang, p + 1, zero & window_mask)) rank += table.completions[p + 1][zero & state_mask];
        }
    }
    return rank;
}

}  // namespace cacforge
