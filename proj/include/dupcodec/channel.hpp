#ifndef DUPCODEC_CHANNEL_HPP
#define DUPCODEC_CHANNEL_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "dupcodec/word.hpp"

namespace dupcodec {

/// One channel event: a tandem duplication or a substitution.
struct ChannelEvent {
    enum Kind : std::uint8_t { Dup, Sub };
    Kind kind;
    std::size_t pos;
    std::size_t lenOrSym;  // duplication length, or the new symbol

    bool operator==(const ChannelEvent&) const = default;
};

/// Ordered event log; replaying it on the channel input reproduces the
/// channel output exactly. At most one substitution per trace.
struct ChannelTrace {
    std::vector<ChannelEvent> events;

    bool operator==(const ChannelTrace&) const = default;
};

Word replayTrace(const Word& input, const ChannelTrace& trace);

/// One event per line: "D <pos> <len>" or "S <pos> <sym>".
std::string serializeTrace(const ChannelTrace& trace);
/// Inverse of serializeTrace; '#'-prefixed and blank lines are skipped.
ChannelTrace parseTrace(std::istream& in);
ChannelTrace parseTrace(const std::string& text);

struct ChannelConfig {
    std::size_t maxDuplications = 0;
    std::array<double, 3> duplicationLengthWeights{1.0, 1.0, 1.0};
    bool substitutionEnabled = false;
    std::uint64_t seed = 0;
};

/// Duplication/substitution channel sampler. The number of duplications
/// is uniform on [0, maxDuplications]; positions are uniform; lengths
/// follow the configured weights (restricted to lengths that fit); when
/// enabled, exactly one substitution lands at a uniform event slot with
/// a uniform position and a uniform new symbol. Identical seeds give
/// identical traces.
class ChannelSampler {
  public:
    explicit ChannelSampler(const ChannelConfig& config);

    std::pair<Word, ChannelTrace> sample(const Word& input);

  private:
    ChannelConfig config_;
    std::mt19937_64 rng_;

    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
    std::size_t drawLength(std::size_t wordLen);
};

/// The exact set of outputs reachable from `input` with at most maxDups
/// duplications and, when withSub is set, at most one substitution
/// anywhere in the event order. Sorted by (length, lex).
std::vector<Word> exhaustiveOutputs(const Word& input, std::size_t maxDups,
                                    bool withSub);

}  // namespace dupcodec

#endif
