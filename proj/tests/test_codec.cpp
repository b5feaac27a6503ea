#include <doctest.h>

#include "cacforge/codec.hpp"

using namespace cacforge;

namespace {

const Tables& tables() {
    static const Tables t = build_tables();
    return t;
}

std::vector<Codebook> sample_codebooks() {
    std::vector<Codebook> out;
    for (Constraint c : {kC21, kC31, kC42, kC53})
        for (int n : {5, 8, 11}) out.push_back(build_constrained(c, n, tables(), n % 2));
    auto s = seed_codebooks(kC21, tables());
    for (int n : {5, 9, 12}) out.push_back(prune_iolc(expand_codebook(s, n, kC21.str())));
    for (Family f : {Family::OLC, Family::FTC, Family::FPC, Family::FOC}) out.push_back(classic_codebook(f, 9));
    return out;
}

}  // namespace

TEST_CASE("ranks follow ascending codeword order") {
    for (const auto& cb : sample_codebooks()) {
        auto t = build_rank_table(cb);
        REQUIRE(t.total() == cb.size());
        for (size_t i = 0; i < cb.size(); ++i) {
            CHECK(decode(cb.words[i], t) == i);
            if (i < (size_t{1} << t.data_bits())) CHECK(encode(i, t) == cb.words[i]);
        }
    }
}

TEST_CASE("data bits are floor log2 of the size") {
    for (const auto& cb : sample_codebooks()) {
        auto t = build_rank_table(cb);
        int k = t.data_bits();
        CHECK((std::uint64_t{1} << k) <= cb.size());
        CHECK((std::uint64_t{2} << k) > cb.size());
    }
}

TEST_CASE("round trip over the full data range at large widths") {
    for (Constraint c : {kC21, kC31, kC42, kC53}) {
        auto t = build_rank_table(c, 16, tables());
        CHECK(t.total() == build_constrained(c, 16, tables()).size());
        Word prev = 0;
        for (std::uint64_t d = 0; d < (std::uint64_t{1} << t.data_bits()); ++d) {
            Word w = encode(d, t);
            CHECK(t.language.accepts(w));
            if (d) CHECK(w > prev);
            CHECK(decode(w, t) == d);
            prev = w;
        }
    }
}

TEST_CASE("families and wide buses") {
    auto t = build_rank_table(Family::FPC, 8);
    CHECK(t.total() == 68);
    CHECK(t.data_bits() == 6);
    auto wide = build_rank_table(kC31, 40, tables());
    CHECK(BigInt(wide.total()) == olc_g(40));
    std::uint64_t d = (std::uint64_t{1} << wide.data_bits()) - 1;
    CHECK(decode(encode(d, wide), wide) == d);
}

TEST_CASE("codec errors") {
    auto t = build_rank_table(kC31, 10, tables());
    CHECK_THROWS_AS(encode(std::uint64_t{1} << t.data_bits(), t), CodecError);
    Word bad = parse_bits("0101010101");
    REQUIRE_FALSE(t.language.accepts(bad));
    CHECK_THROWS_AS(decode(bad, t), CodecError);
    CHECK_THROWS_AS(decode(Word{1} << 10, t), CodecError);

    Codebook loose;
    loose.width = 5;
    loose.words = {0, 3};
    CHECK_THROWS_AS(build_rank_table(loose), CodecError);
}

TEST_CASE("pruned five-wire code") {
    auto s = seed_codebooks(kC21, tables());
    auto t = build_rank_table(prune_iolc(expand_codebook(s, 5, kC21.str())));
    CHECK(t.total() == 4);
    CHECK(encode(0, t) == 0);
    CHECK(encode(1, t) == 15);
    CHECK(encode(2, t) == 30);
    CHECK(encode(3, t) == 31);
}
