#ifndef DUPCODEC_CODEC_HPP
#define DUPCODEC_CODEC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dupcodec/graph.hpp"
#include "dupcodec/rs.hpp"
#include "dupcodec/word.hpp"

namespace dupcodec {

/// Validated parameters of one code instance.
struct CodeParams {
    int alphabet;              // q
    Word sigma;                // marker, irreducible 5-tuple
    std::size_t markerLen;     // l = 5
    std::size_t blockLen;      // m, must exceed windowBound
    unsigned blockCount;       // N = 2^fieldDegree - 1
    int fieldDegree;           // t, with 2^t <= blockUniverse
    std::size_t windowBound;   // 17
    std::size_t codewordLen;   // n = N (m + l) - l
    BigInt blockUniverse;      // M = number of valid message blocks
};

struct DecodeReport {
    enum class Case { MarkersAligned, MarkersShifted };
    Case caseTag = Case::MarkersAligned;
    /// Blocks erased by the marker-shift window; consecutive, at most 4.
    std::vector<unsigned> erasedBlocks;
    /// Blocks whose content failed the block-to-symbol inverse map.
    std::vector<unsigned> substitutedCandidates;
    std::vector<GaloisField::Elem> message;
    long long delta = 0;           // codeword length minus root length
    long long windowBegin = -1;    // erasure window in codeword coords
    long long windowEnd = -1;
};

struct DecodeResult {
    bool ok = false;
    std::string failureReason;
    DecodeReport report;

    explicit operator bool() const { return ok; }
};

/// Block layout of a possibly-damaged root: per-block content or erasure.
struct LocalizeResult {
    bool ok = false;
    std::string failureReason;
    DecodeReport::Case caseTag = DecodeReport::Case::MarkersAligned;
    long long delta = 0;
    long long windowBegin = -1, windowEnd = -1;
    std::vector<std::optional<Word>> blocks;  // nullopt = erased
    std::vector<unsigned> erasedBlocks;
};

/// The full code: messages over GF(2^t) are RS-encoded, each symbol is
/// mapped to a message block, and blocks are interleaved with the marker
/// sigma into one irreducible codeword. Decoding inverts the pipeline
/// after rooting the channel output and survives any number of <=3
/// tandem duplications plus at most one substitution.
class Codec {
  public:
    Codec(int alphabet, const Word& sigma, std::size_t blockLen,
          int fieldDegree);

    const CodeParams& params() const { return params_; }
    const ReedSolomon& outerCode() const { return *rs_; }
    const BlockTable& blockTable() const { return *table_; }

    std::size_t messageLength() const { return rs_->messageLength(); }

    /// message (N-4 field symbols) -> irreducible codeword of length n
    Word encode(const std::vector<GaloisField::Elem>& message) const;

    /// Locate damage in a duplication root: markers aligned means every
    /// expected marker position holds sigma and the length is exact;
    /// otherwise the first out-of-pattern marker anchors an erasure
    /// window of at most four consecutive blocks.
    LocalizeResult localize(const Word& rootWord) const;

    /// Full decoder: root the channel output, localize, invert the block
    /// map (failures become symbol 0), and run the outer RS decoder.
    DecodeResult decode(const Word& channelOutput) const;

  private:
    CodeParams params_;
    std::shared_ptr<const IrrGraph> graph_;
    std::shared_ptr<const BlockTable> table_;
    std::shared_ptr<const ReedSolomon> rs_;
};

}  // namespace dupcodec

#endif
