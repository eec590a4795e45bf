#include <doctest.h>

#include <random>
#include <sstream>

#include "dupcodec/textio.hpp"

using namespace dupcodec;

TEST_CASE("sequence files round-trip in both renderings") {
    std::vector<Word> words = {Word::parse("0123", 4), Word::parse("302", 4),
                               Word::parse("0", 4)};
    for (bool dna : {false, true}) {
        std::ostringstream out;
        writeSequences(out, words, dna);
        std::istringstream in(out.str());
        CHECK(readSequences(in, 4, dna) == words);
    }
    std::ostringstream out;
    writeSequences(out, {Word::parse("0a2f", 16)}, false);
    CHECK(out.str() == "0a2f\n");
}

TEST_CASE("sequence parser reports line and column") {
    std::istringstream in("012\n01x\n");
    CHECK_THROWS_WITH_AS(readSequences(in, 4, false),
                         doctest::Contains("line 2"), std::invalid_argument);
    std::istringstream in2("019\n");
    CHECK_THROWS_WITH_AS(readSequences(in2, 4, false),
                         doctest::Contains("column 3"), std::invalid_argument);
    std::istringstream in3("ACGU\n");
    CHECK_THROWS_AS(readSequences(in3, 4, true), std::invalid_argument);
    std::istringstream ok("# comment\n\n012\n");
    CHECK(readSequences(ok, 4, false).size() == 1);
}

TEST_CASE("message files use fixed-width hex symbols") {
    std::vector<std::vector<GaloisField::Elem>> msgs = {{1, 10, 15},
                                                        {0, 7, 3}};
    std::ostringstream out;
    writeMessages(out, msgs, 4);
    CHECK(out.str() == "1af\n073\n");
    std::istringstream in(out.str());
    CHECK(readMessages(in, 4, 3) == msgs);

    // degree 5 -> two hex digits per symbol
    std::ostringstream out5;
    writeMessages(out5, {{31, 0, 16}}, 5);
    CHECK(out5.str() == "1f0010\n");
    std::istringstream in5(out5.str());
    CHECK(readMessages(in5, 5, 3) ==
          std::vector<std::vector<GaloisField::Elem>>{{31, 0, 16}});
}

TEST_CASE("message parser rejects malformed lines") {
    std::istringstream wrongLen("1a\n");
    CHECK_THROWS_WITH_AS(readMessages(wrongLen, 4, 3),
                         doctest::Contains("expected 3 hex digits"),
                         std::invalid_argument);
    std::istringstream badDigit("1ag\n");
    CHECK_THROWS_AS(readMessages(badDigit, 4, 3), std::invalid_argument);
    std::istringstream outOfField("9\n");  // degree 3: symbols < 8
    CHECK_THROWS_WITH_AS(readMessages(outOfField, 3, 1),
                         doctest::Contains("out of field"),
                         std::invalid_argument);
}

TEST_CASE("random messages round-trip across degrees") {
    std::mt19937_64 rng(8);
    for (int degree : {3, 4, 8, 11, 16}) {
        std::vector<std::vector<GaloisField::Elem>> msgs(4);
        for (auto& m : msgs) {
            m.resize(6);
            for (auto& s : m)
                s = GaloisField::Elem(rng() % (1u << degree));
        }
        std::ostringstream out;
        writeMessages(out, msgs, degree);
        std::istringstream in(out.str());
        CHECK(readMessages(in, degree, 6) == msgs);
    }
}
