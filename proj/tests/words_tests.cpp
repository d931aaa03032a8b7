#include <random>

#include "core/words.hpp"
#include "doctest.h"

using namespace wkpc;

namespace {

Alphabet abc() {
    Alphabet a;
    a.intern("a");
    a.intern("b");
    a.intern("c");
    return a;
}

}  // namespace

TEST_CASE("complements_of returns exactly the paired symbols") {
    const Alphabet alpha = abc();
    ComplementarityRelation rel;
    rel.add(*alpha.find("a"), *alpha.find("b"));
    rel.add(*alpha.find("a"), *alpha.find("c"));

    const auto of_a = rel.complements_of(*alpha.find("a"));
    REQUIRE(of_a.size() == 2);
    CHECK(of_a[0] == *alpha.find("b"));
    CHECK(of_a[1] == *alpha.find("c"));
    CHECK(rel.complements_of(*alpha.find("b")).empty());

    ComplementarityRelation identity;
    identity.add(0, 0);
    REQUIRE(identity.complements_of(0).size() == 1);
    CHECK(identity.complements_of(0)[0] == 0);
}

TEST_CASE("adding the same pair twice keeps the relation a set") {
    ComplementarityRelation rel;
    rel.add(0, 1);
    rel.add(0, 1);
    CHECK(rel.pair_count() == 1);
}

TEST_CASE("double strand validity") {
    const Alphabet alpha = abc();
    ComplementarityRelation rel;
    rel.add(*alpha.find("a"), *alpha.find("b"));
    rel.add(*alpha.find("a"), *alpha.find("c"));

    const Word aaaa = *alpha.parse_word("aaaa");
    const Word bbcc = *alpha.parse_word("bbcc");
    CHECK(is_valid_double_strand(rel, aaaa, bbcc));
    CHECK(is_valid_double_strand(rel, Word{}, Word{}));
    CHECK_FALSE(is_valid_double_strand(rel, *alpha.parse_word("aa"), *alpha.parse_word("b")));
    CHECK_FALSE(is_valid_double_strand(rel, *alpha.parse_word("ab"), *alpha.parse_word("bb")));
}

TEST_CASE("double strand validity agrees with the per-position formulation") {
    std::mt19937 rng(7);
    const Alphabet alpha = abc();
    for (int round = 0; round < 500; ++round) {
        ComplementarityRelation rel;
        for (SymbolId u = 0; u < 3; ++u)
            for (SymbolId l = 0; l < 3; ++l)
                if (rng() % 2) rel.add(u, l);
        const auto len = rng() % 5;
        Word upper, lower;
        for (std::size_t j = 0; j < len; ++j) {
            upper.push_back(rng() % 3);
            lower.push_back(rng() % 3);
        }
        if (rng() % 4 == 0) lower.push_back(rng() % 3);  // occasional length skew

        bool expected = upper.size() == lower.size();
        for (std::size_t j = 0; expected && j < upper.size(); ++j) {
            const auto lows = rel.complements_of(upper[j]);
            expected = std::find(lows.begin(), lows.end(), lower[j]) != lows.end();
        }
        CHECK(is_valid_double_strand(rel, upper, lower) == expected);
    }
}

TEST_CASE("prefix relations") {
    const Alphabet alpha = abc();
    const Word ab = *alpha.parse_word("ab");
    const Word abc_w = *alpha.parse_word("abc");
    const Word ac = *alpha.parse_word("ac");

    CHECK(is_prefix(ab, abc_w));
    CHECK(is_prefix(Word{}, abc_w));
    CHECK_FALSE(is_prefix(abc_w, ab));
    CHECK(prefix_comparable(ab, abc_w));
    CHECK(prefix_comparable(abc_w, ab));
    CHECK_FALSE(prefix_comparable(ab, ac));
    CHECK(prefix_comparable(ab, ab));
}

TEST_CASE("prefix order properties on random words") {
    std::mt19937 rng(11);
    auto random_word = [&]() {
        Word w;
        const auto len = rng() % 5;
        for (std::size_t j = 0; j < len; ++j) w.push_back(rng() % 2);
        return w;
    };
    for (int round = 0; round < 300; ++round) {
        const Word u = random_word(), v = random_word();
        CHECK(is_prefix(u, u));
        CHECK(prefix_comparable(u, u));
        CHECK(prefix_comparable(u, v) == prefix_comparable(v, u));
        if (is_prefix(u, v) && is_prefix(v, u)) CHECK(u == v);
        // transitivity via an extension of v
        Word w = v;
        w.push_back(rng() % 2);
        if (is_prefix(u, v)) CHECK(is_prefix(u, w));
    }
}

TEST_CASE("word parsing uses longest symbol match") {
    Alphabet alpha;
    alpha.intern("a");
    alpha.intern("aa");
    const auto w = alpha.parse_word("aaa");
    REQUIRE(w.has_value());
    REQUIRE(w->size() == 2);  // "aa" then "a"
    CHECK((*w)[0] == *alpha.find("aa"));
    CHECK((*w)[1] == *alpha.find("a"));

    std::size_t offset = 0;
    CHECK_FALSE(alpha.parse_word("ab", &offset).has_value());
    CHECK(offset == 1);
    CHECK(alpha.format_word(*w) == "aaa");
    CHECK(alpha.parse_word("")->empty());
}
