#include <catch2/catch_amalgamated.hpp>

#include "qcryst/alphabet.hpp"

using namespace qcryst;

TEST_CASE("letter order and prime maps") {
    // ... < 0' < 0 < 1' < 1 < 2' < 2 < ...
    CHECK(make_letter(0, true) < make_letter(0));
    CHECK(make_letter(0) < make_letter(1, true));
    CHECK(make_letter(1, true) < make_letter(1));
    CHECK(make_letter(-1) < make_letter(0, true));

    CHECK(make_letter(3).with_prime() == make_letter(3, true));
    CHECK(make_letter(3, true).with_prime() == make_letter(3, true));
    CHECK(make_letter(0).with_prime() == make_letter(0, true));
    CHECK(make_letter(3, true).without_prime() == make_letter(3));
    CHECK(make_letter(3).without_prime() == make_letter(3));
    CHECK(make_letter(10, true).without_prime() == make_letter(10));

    // idempotent pairs
    for (int v = -3; v <= 3; ++v)
        for (bool p : {false, true}) {
            Letter l = make_letter(v, p);
            CHECK(l.with_prime().without_prime() == l.without_prime());
            CHECK(l.without_prime().with_prime() == l.with_prime());
            CHECK(l.value() == v);
        }
}

TEST_CASE("word parsing, printing, unprime") {
    Word w = parse_word("41'354'2");
    REQUIRE(w.size() == 6);
    CHECK(w[1] == make_letter(1, true));
    CHECK(to_string(w) == "4 1' 3 5 4' 2");
    CHECK(parse_word("4 1' 3 5 4' 2") == w);
    CHECK(unprime_word(w) == parse_word("413542"));
    CHECK(unprime_word(Word{}) == Word{});
    CHECK(unprime_word(parse_word("1'1'1'")) == parse_word("111"));
    CHECK(parse_word("10' -2 3").size() == 3);
    CHECK(parse_word("10' -2 3")[1] == make_letter(-2));
}

TEST_CASE("word descents") {
    Word w = parse_word("41'354'2");
    CHECK(word_descents(w) == std::set<int>{1, 4, 5});
}

TEST_CASE("strict partitions and shifted diagrams") {
    StrictPartition lam({2, 1});
    CHECK(shifted_diagram(lam) ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}});
    StrictPartition big({4, 2});
    CHECK(shifted_diagram(big) ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}});
    CHECK(shifted_diagram(StrictPartition()).empty());
    CHECK_THROWS(StrictPartition({2, 2}));
    CHECK_THROWS(StrictPartition({1, 2}));

    // |SD_lambda| = |lambda|
    for (auto& mu : strict_partitions_in(StrictPartition({4, 3, 2, 1})))
        CHECK(static_cast<int>(shifted_diagram(mu).size()) == mu.size());

    CHECK(parse_strict_partition("4,2") == big);
    CHECK(to_string(big) == "4,2");
    // empty, (1), (2), (3), (2,1), (3,1), (3,2), (3,2,1)
    CHECK(strict_partitions_in(StrictPartition({3, 2, 1})).size() == 8);
}
