#include <doctest.h>

#include <algorithm>
#include <random>

#include "dupcodec/channel.hpp"
#include "dupcodec/codec.hpp"
#include "dupcodec/dup.hpp"

using namespace dupcodec;
using Elem = GaloisField::Elem;

namespace {

Word W(const char* digits, int q = 4) { return Word::parse(digits, q); }

const char* kGoldenZeroCodeword =
    "02010201020102010301201020102010201020103012010201020102010201030120"
    "10201020102010201030120102010201020102010301201020102010201020103012"
    "01020102010201020103012010201020102010201030120102010201020102010301"
    "20102010201020102010301201020102010201020103012010201020102010201030"
    "12010201020102010201030120102010201020102010301201020102010201020103";

std::vector<Elem> randomMessage(const Codec& codec, std::mt19937_64& rng) {
    std::vector<Elem> msg(codec.messageLength());
    for (auto& s : msg)
        s = Elem(rng() % codec.outerCode().field().size());
    return msg;
}

}  // namespace

TEST_CASE("parameter validation pins every constraint") {
    Codec codec(4, W("01201"), 18, 4);
    const auto& p = codec.params();
    CHECK(p.blockCount == 15);
    CHECK(p.codewordLen == 340);
    CHECK(codec.messageLength() == 11);
    CHECK(p.blockUniverse == 11900743);

    // m must exceed the window bound 17
    CHECK_THROWS_WITH_AS(Codec(4, W("01201"), 17, 4),
                         doctest::Contains("window bound"),
                         std::invalid_argument);
    // marker must be irreducible
    CHECK_THROWS_AS(Codec(4, W("00123"), 18, 4), std::invalid_argument);
    CHECK_THROWS_AS(Codec(4, W("0123"), 18, 4), std::invalid_argument);
    // field must fit into the block universe: q=3, sigma=01201, m=18
    // has exactly 80 blocks, so degree 6 fits and degree 7 does not
    IrrGraph g3(3);
    REQUIRE(countBlocks(g3, W("01201", 3), 18) == 80);
    CHECK_NOTHROW(Codec(3, W("01201", 3), 18, 6));
    CHECK_THROWS_WITH_AS(Codec(3, W("01201", 3), 18, 7),
                         doctest::Contains("field too large"),
                         std::invalid_argument);
    // field degree outside [3, 16]
    CHECK_THROWS_AS(Codec(4, W("01201"), 18, 2), std::invalid_argument);
}

TEST_CASE("encoding produces irreducible marker-separated codewords") {
    Codec codec(4, W("01201"), 18, 4);
    std::vector<Elem> zero(codec.messageLength(), 0);
    Word x = codec.encode(zero);
    CHECK(x.str() == kGoldenZeroCodeword);
    CHECK(x.size() == 340);
    CHECK(isIrreducible(x));
    CHECK(root(x) == x);
    CHECK(x.countOccurrences(W("01201")) == 14);  // N - 1

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        Word cw = codec.encode(randomMessage(codec, rng));
        CHECK(isIrreducible(cw));
        CHECK(cw.size() == 340);
        CHECK(cw.countOccurrences(W("01201")) == 14);
    }
    CHECK_THROWS_AS(codec.encode(std::vector<Elem>(10, 0)),
                    std::invalid_argument);
}

TEST_CASE("identity and pure-duplication channels decode exactly") {
    Codec codec(4, W("01201"), 18, 4);
    std::mt19937_64 rng(5);
    ChannelConfig cfg;
    cfg.maxDuplications = 25;
    cfg.substitutionEnabled = false;
    cfg.seed = 17;
    ChannelSampler sampler(cfg);
    for (int trial = 0; trial < 60; ++trial) {
        auto msg = randomMessage(codec, rng);
        Word cw = codec.encode(msg);

        auto direct = codec.decode(cw);
        REQUIRE(direct.ok);
        CHECK(direct.report.caseTag == DecodeReport::Case::MarkersAligned);
        CHECK(direct.report.erasedBlocks.empty());
        CHECK(direct.report.message == msg);

        auto [y, trace] = sampler.sample(cw);
        auto viaChannel = codec.decode(y);
        REQUIRE(viaChannel.ok);
        CHECK(viaChannel.report.message == msg);
        CHECK(viaChannel.report.caseTag ==
              DecodeReport::Case::MarkersAligned);
    }
}

TEST_CASE("localize keeps aligned markers and flags bad blocks") {
    Codec codec(4, W("01201"), 18, 4);
    std::mt19937_64 rng(31);
    auto msg = randomMessage(codec, rng);
    Word cw = codec.encode(msg);

    auto clean = codec.localize(cw);
    REQUIRE(clean.ok);
    CHECK(clean.caseTag == DecodeReport::Case::MarkersAligned);
    REQUIRE(clean.blocks.size() == 15);
    for (unsigned i = 0; i < 15; ++i) {
        REQUIRE(clean.blocks[i]);
        CHECK(codec.blockTable().tryRank(*clean.blocks[i]).has_value());
    }

    // substitute one symbol in a block interior such that the word stays
    // irreducible and the block drops out of the block set
    bool found = false;
    for (std::size_t pos = 25; pos < 40 && !found; ++pos) {
        for (Sym s = 0; s < 4 && !found; ++s) {
            if (s == cw[pos]) continue;
            Word damaged = applySubstitution(cw, pos, s);
            if (!isIrreducible(damaged)) continue;
            auto loc = codec.localize(damaged);
            REQUIRE(loc.ok);
            CHECK(loc.caseTag == DecodeReport::Case::MarkersAligned);
            auto res = codec.decode(damaged);
            REQUIRE(res.ok);
            CHECK(res.report.message == msg);
            if (!res.report.substitutedCandidates.empty()) {
                CHECK(res.report.substitutedCandidates ==
                      std::vector<unsigned>{1});
                found = true;
            }
        }
    }
    CHECK(found);
}

TEST_CASE("marker damage shifts to the erasure path and stays bounded") {
    Codec codec(4, W("01201"), 18, 4);
    const auto& p = codec.params();
    std::mt19937_64 rng(41);
    auto msg = randomMessage(codec, rng);
    Word cw = codec.encode(msg);

    // duplicate across a marker a few times, then substitute inside one
    // of the copies so the root changes around that marker
    ChannelTrace trace;
    std::size_t marker = 3 * 23 + 18;  // start of the 4th marker
    trace.events.push_back({ChannelEvent::Dup, marker - 1, 3});
    trace.events.push_back({ChannelEvent::Dup, marker + 1, 3});
    trace.events.push_back({ChannelEvent::Dup, marker + 2, 2});
    Word damaged = replayTrace(cw, trace);
    bool exercised = false;
    for (std::size_t pos = marker; pos < marker + 10 && !exercised; ++pos) {
        for (Sym s = 0; s < 4; ++s) {
            if (s == damaged[pos]) continue;
            Word out = applySubstitution(damaged, pos, s);
            Word y = root(out);
            if (y.size() == p.codewordLen) continue;
            auto loc = codec.localize(y);
            REQUIRE(loc.ok);
            CHECK(loc.caseTag == DecodeReport::Case::MarkersShifted);
            CHECK(loc.erasedBlocks.size() <= 4);
            CHECK(!loc.erasedBlocks.empty());
            for (std::size_t k = 1; k < loc.erasedBlocks.size(); ++k)
                CHECK(loc.erasedBlocks[k] == loc.erasedBlocks[k - 1] + 1);
            CHECK(loc.windowEnd - loc.windowBegin <
                  3 * (long long)p.blockLen + 2 * (long long)p.markerLen);
            auto res = codec.decode(out);
            REQUIRE(res.ok);
            CHECK(res.report.message == msg);
            exercised = true;
            break;
        }
    }
    CHECK(exercised);
}

TEST_CASE("random duplication-plus-substitution traces decode exactly") {
    Codec codec(4, W("01201"), 18, 4);
    std::mt19937_64 rng(77);
    ChannelConfig cfg;
    cfg.maxDuplications = 12;
    cfg.substitutionEnabled = true;
    cfg.seed = 1009;
    ChannelSampler sampler(cfg);
    int shifted = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto msg = randomMessage(codec, rng);
        Word cw = codec.encode(msg);
        auto [y, trace] = sampler.sample(cw);
        auto res = codec.decode(y);
        REQUIRE_MESSAGE(res.ok, "trace:\n" << serializeTrace(trace));
        CHECK(res.report.message == msg);
        shifted += res.report.caseTag == DecodeReport::Case::MarkersShifted;
        CHECK(res.report.erasedBlocks.size() <= 4);
        // the aligned case only ever fires at the exact codeword length
        if (res.report.caseTag == DecodeReport::Case::MarkersAligned) {
            CHECK(res.report.delta == 0);
            CHECK(res.report.erasedBlocks.empty());
        }
    }
    CHECK(shifted > 0);  // both decoder cases are exercised
}

TEST_CASE("garbage input fails loudly instead of decoding silently") {
    Codec codec(4, W("01201"), 18, 4);
    auto res = codec.decode(W("0123012301230"));
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.failureReason.empty());
}

TEST_CASE("a small-alphabet instance round-trips as well") {
    Codec codec(3, W("01201", 3), 18, 3);  // N=7, n=156
    CHECK(codec.params().codewordLen == 156);
    std::mt19937_64 rng(3);
    ChannelConfig cfg;
    cfg.maxDuplications = 8;
    cfg.substitutionEnabled = true;
    cfg.seed = 5;
    ChannelSampler sampler(cfg);
    for (int trial = 0; trial < 200; ++trial) {
        auto msg = randomMessage(codec, rng);
        Word cw = codec.encode(msg);
        auto [y, trace] = sampler.sample(cw);
        auto res = codec.decode(y);
        REQUIRE_MESSAGE(res.ok, "trace:\n" << serializeTrace(trace));
        CHECK(res.report.message == msg);
    }
}
