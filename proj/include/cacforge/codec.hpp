#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cacforge/codebook.hpp"

namespace cacforge {

class CodecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// completions[p][s]: number of valid suffixes after p bits have been placed and the
// last w-1 of them equal s.
struct RankTable {
    WindowLanguage language;
    std::vector<std::vector<std::uint64_t>> completions;

    int width() const { return language.n; }
    std::uint64_t total() const { return completions.empty() ? 0 : completions[0][0]; }
    // floor(log2 total)
    int data_bits() const;
};

RankTable build_rank_table(const WindowLanguage& language);
RankTable build_rank_table(const Codebook& cb);
RankTable build_rank_table(Constraint c, int n, const Tables& tables, int parity = 0);
RankTable build_rank_table(Family f, int n, int parity = 0);

// data-th codeword in ascending order; data < 2^data_bits()
Word encode(std::uint64_t data, const RankTable& table);
// rank of a codeword; may exceed 2^data_bits() for surplus words
std::uint64_t decode(Word word, const RankTable& table);

}  // namespace cacforge
