#include "dupcodec/channel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dupcodec/dup.hpp"

namespace dupcodec {

Word replayTrace(const Word& input, const ChannelTrace& trace) {
    Word cur = input;
    std::size_t subs = 0;
    for (const ChannelEvent& e : trace.events) {
        if (e.kind == ChannelEvent::Dup) {
            cur = applyDuplication(cur, e.pos, e.lenOrSym);
        } else {
            cur = applySubstitution(cur, e.pos, Sym(e.lenOrSym));
            if (++subs > 1)
                throw std::invalid_argument(
                    "trace contains more than one substitution");
        }
    }
    return cur;
}

std::string serializeTrace(const ChannelTrace& trace) {
    std::ostringstream out;
    for (const ChannelEvent& e : trace.events)
        out << (e.kind == ChannelEvent::Dup ? 'D' : 'S') << ' ' << e.pos << ' '
            << e.lenOrSym << '\n';
    return out.str();
}

ChannelTrace parseTrace(std::istream& in) {
    ChannelTrace trace;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        char kind = 0;
        std::size_t pos = 0, arg = 0;
        if (!(ls >> kind >> pos >> arg) || (kind != 'D' && kind != 'S'))
            throw std::invalid_argument("trace line " + std::to_string(lineNo) +
                                        ": expected 'D <pos> <len>' or "
                                        "'S <pos> <sym>'");
        trace.events.push_back(
            {kind == 'D' ? ChannelEvent::Dup : ChannelEvent::Sub, pos, arg});
    }
    return trace;
}

ChannelTrace parseTrace(const std::string& text) {
    std::istringstream in(text);
    return parseTrace(in);
}

ChannelSampler::ChannelSampler(const ChannelConfig& config)
    : config_(config), rng_(config.seed) {
    double total = 0.0;
    for (double w : config_.duplicationLengthWeights) {
        if (w < 0.0)
            throw std::invalid_argument("duplication weights must be >= 0");
        total += w;
    }
    if (total <= 0.0)
        throw std::invalid_argument("duplication weights must not all be zero");
}

std::uint64_t ChannelSampler::below(std::uint64_t bound) {
    // plain modulo keeps traces reproducible across standard libraries;
    // the bias is irrelevant for a test-harness channel
    return rng_() % bound;
}

std::size_t ChannelSampler::drawLength(std::size_t wordLen) {
    const std::size_t maxLen = std::min<std::size_t>(3, wordLen);
    double total = 0.0;
    for (std::size_t l = 0; l < maxLen; ++l)
        total += config_.duplicationLengthWeights[l];
    if (total <= 0.0) return 1;  // only oversize lengths have weight
    double u = double(rng_() >> 11) * 0x1.0p-53 * total;
    for (std::size_t l = 0; l < maxLen; ++l) {
        u -= config_.duplicationLengthWeights[l];
        if (u < 0.0) return l + 1;
    }
    return maxLen;
}

std::pair<Word, ChannelTrace> ChannelSampler::sample(const Word& input) {
    if (input.empty())
        throw std::invalid_argument("channel input must be nonempty");
    const std::size_t dups = below(config_.maxDuplications + 1);
    const std::size_t subSlot =
        config_.substitutionEnabled ? below(dups + 1) : dups + 1;

    Word cur = input;
    ChannelTrace trace;
    for (std::size_t i = 0; i <= dups; ++i) {
        if (config_.substitutionEnabled && i == subSlot) {
            std::size_t pos = below(cur.size());
            Sym old = cur[pos];
            Sym sym = Sym(below(std::uint64_t(cur.alphabet()) - 1));
            if (sym >= old) ++sym;
            cur = applySubstitution(cur, pos, sym);
            trace.events.push_back({ChannelEvent::Sub, pos, sym});
        }
        if (i == dups) break;
        std::size_t len = drawLength(cur.size());
        std::size_t pos = below(cur.size() - len + 1);
        cur = applyDuplication(cur, pos, len);
        trace.events.push_back({ChannelEvent::Dup, pos, len});
    }
    return {cur, trace};
}

std::vector<Word> exhaustiveOutputs(const Word& input, std::size_t maxDups,
                                    bool withSub) {
    struct State {
        Word word;
        std::size_t dups;
        bool subUsed;
    };
    // The same word can be reached with different duplication budgets, so
    // the visited key carries the full (word, dups, subUsed) state.
    struct Key {
        Word word;
        std::size_t dups;
        bool subUsed;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return (WordHash{}(k.word) * 31 + k.dups) * 2 + (k.subUsed ? 1 : 0);
        }
    };

    std::unordered_set<Key, KeyHash> seen;
    std::vector<State> queue{{input, 0, false}};
    seen.insert({input, 0, false});
    std::unordered_set<Word, WordHash> outputs{input};

    for (std::size_t head = 0; head < queue.size(); ++head) {
        State cur = queue[head];
        auto push = [&](Word next, std::size_t dups, bool subUsed) {
            outputs.insert(next);
            Key key{next, dups, subUsed};
            if (seen.insert(key).second)
                queue.push_back({std::move(next), dups, subUsed});
        };
        if (cur.dups < maxDups) {
            for (std::size_t len = 1;
                 len <= std::min<std::size_t>(3, cur.word.size()); ++len)
                for (std::size_t pos = 0; pos + len <= cur.word.size(); ++pos)
                    push(applyDuplication(cur.word, pos, len), cur.dups + 1,
                         cur.subUsed);
        }
        if (withSub && !cur.subUsed) {
            for (std::size_t pos = 0; pos < cur.word.size(); ++pos)
                for (Sym s = 0; s < cur.word.alphabet(); ++s)
                    if (s != cur.word[pos])
                        push(applySubstitution(cur.word, pos, s), cur.dups,
                             true);
        }
    }

    std::vector<Word> out(outputs.begin(), outputs.end());
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace dupcodec
