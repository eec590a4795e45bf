#include "dupcodec/codec.hpp"

#include <algorithm>
#include <cassert>

#include "dupcodec/dup.hpp"

namespace dupcodec {

Codec::Codec(int alphabet, const Word& sigma, std::size_t blockLen,
             int fieldDegree) {
    graph_ = std::make_shared<IrrGraph>(alphabet);
    if (!graph_->vertexId(sigma))
        throw std::invalid_argument(
            "marker must be an irreducible 5-tuple over the alphabet");
    if (blockLen <= kWindowBound)
        throw std::invalid_argument(
            "block length must exceed the substitution window bound " +
            std::to_string(kWindowBound));

    table_ = std::make_shared<BlockTable>(*graph_, sigma, blockLen);
    rs_ = std::make_shared<ReedSolomon>(fieldDegree);  // validates degree

    const BigInt fieldSize = BigInt(1) << fieldDegree;
    if (fieldSize > table_->count())
        throw std::invalid_argument(
            "field too large: 2^degree exceeds the number of blocks (" +
            table_->count().str() + ")");

    params_.alphabet = alphabet;
    params_.sigma = sigma;
    params_.markerLen = sigma.size();
    params_.blockLen = blockLen;
    params_.fieldDegree = fieldDegree;
    params_.blockCount = rs_->blockLength();
    params_.windowBound = kWindowBound;
    params_.codewordLen =
        params_.blockCount * (blockLen + params_.markerLen) - params_.markerLen;
    params_.blockUniverse = table_->count();
}

Word Codec::encode(const std::vector<GaloisField::Elem>& message) const {
    const auto codeword = rs_->encode(message);
    std::vector<Sym> out;
    out.reserve(params_.codewordLen);
    for (unsigned i = 0; i < params_.blockCount; ++i) {
        if (i > 0)
            out.insert(out.end(), params_.sigma.symbols().begin(),
                       params_.sigma.symbols().end());
        Word block = table_->unrank(BigInt(codeword[i]));
        out.insert(out.end(), block.symbols().begin(), block.symbols().end());
    }
    Word x(std::move(out), params_.alphabet);
    // block-local irreducibility is sufficient for the whole word
    assert(isIrreducible(x));
    assert(x.countOccurrences(params_.sigma) == params_.blockCount - 1);
    return x;
}

LocalizeResult Codec::localize(const Word& y) const {
    const long long m = (long long)params_.blockLen;
    const long long l = (long long)params_.markerLen;
    const long long n = (long long)params_.codewordLen;
    const long long L = (long long)params_.windowBound;
    const unsigned N = params_.blockCount;
    const long long period = m + l;

    LocalizeResult res;
    res.delta = n - (long long)y.size();

    const Word padded = concat(params_.sigma, y, params_.sigma);
    const auto occ = padded.findOccurrences(params_.sigma);

    // Case A: exact length and a marker at every expected position.
    if (res.delta == 0) {
        bool aligned = true;
        for (unsigned i = 0; i <= N && aligned; ++i) {
            std::size_t p = std::size_t(i) * period;
            aligned = std::binary_search(occ.begin(), occ.end(), p);
        }
        if (aligned) {
            res.ok = true;
            res.caseTag = DecodeReport::Case::MarkersAligned;
            res.blocks.reserve(N);
            for (unsigned i = 0; i < N; ++i)
                res.blocks.emplace_back(y.subword(std::size_t(i) * period,
                                                  std::size_t(m)));
            return res;
        }
    }

    // Case B: anchor on the first marker whose successor structure is
    // wrong (not: m non-marker symbols followed by a marker).
    res.caseTag = DecodeReport::Case::MarkersShifted;
    long long anchor = -1;
    for (std::size_t idx = 0; idx < occ.size(); ++idx) {
        const long long s = (long long)occ[idx];
        bool nextAt = std::binary_search(occ.begin(), occ.end(),
                                         std::size_t(s + period));
        bool noneBetween = true;
        for (std::size_t j = idx + 1;
             j < occ.size() && (long long)occ[j] < s + period; ++j) {
            noneBetween = false;
            break;
        }
        if (!(nextAt && noneBetween)) {
            anchor = s;
            break;
        }
    }
    if (anchor < 0) {
        res.failureReason = "no marker anomaly found in a shifted word";
        return res;
    }

    const long long deltaPlus = std::max<long long>(0, res.delta);
    const long long ext = std::max<long long>(0, L - deltaPlus - 1);
    const long long padLen = (long long)padded.size();
    const long long winBegin = std::max<long long>(0, anchor - ext);
    const long long winEnd = std::min(padLen, anchor + m + 2 * l + ext);

    // Map the padded-root window to codeword coordinates: positions left
    // of the window are prefix-aligned, positions right of it are offset
    // by delta.
    res.windowBegin = std::clamp<long long>(winBegin - l, 0, n);
    res.windowEnd = std::clamp<long long>(winEnd - l + res.delta,
                                          res.windowBegin, n);

    for (unsigned i = 0; i < N; ++i) {
        const long long spanBegin = (long long)i * period;
        const long long spanEnd = spanBegin + m;
        if (spanBegin < res.windowEnd && res.windowBegin < spanEnd)
            res.erasedBlocks.push_back(i);
    }
    if (res.erasedBlocks.size() > ReedSolomon::kParity) {
        res.failureReason =
            "marker damage spans more than 4 blocks (outside the "
            "one-substitution model)";
        return res;
    }

    res.blocks.assign(N, std::nullopt);
    for (unsigned i = 0; i < N; ++i) {
        const long long spanBegin = (long long)i * period;
        const long long spanEnd = spanBegin + m;
        if (spanBegin < res.windowEnd && res.windowBegin < spanEnd) continue;
        const long long yBegin =
            spanEnd <= res.windowBegin ? spanBegin : spanBegin - res.delta;
        if (yBegin < 0 || yBegin + m > (long long)y.size()) {
            res.failureReason = "surviving block falls outside the root";
            return res;
        }
        res.blocks[i] = y.subword(std::size_t(yBegin), std::size_t(m));
    }
    res.ok = true;
    return res;
}

DecodeResult Codec::decode(const Word& channelOutput) const {
    DecodeResult out;
    const Word y = root(channelOutput);
    LocalizeResult loc = localize(y);
    out.report.caseTag = loc.caseTag;
    out.report.delta = loc.delta;
    out.report.windowBegin = loc.windowBegin;
    out.report.windowEnd = loc.windowEnd;
    out.report.erasedBlocks = loc.erasedBlocks;
    if (!loc.ok) {
        out.failureReason = loc.failureReason;
        return out;
    }

    const BigInt fieldSize = BigInt(1) << params_.fieldDegree;
    std::vector<GaloisField::Elem> received(params_.blockCount, 0);
    std::vector<unsigned> erasures = loc.erasedBlocks;
    for (unsigned i = 0; i < params_.blockCount; ++i) {
        if (!loc.blocks[i]) continue;  // erased; value stays 0
        auto rank = table_->tryRank(*loc.blocks[i]);
        if (rank && *rank < fieldSize) {
            received[i] = GaloisField::Elem(rank->convert_to<unsigned>());
        } else {
            // not a valid block (or beyond the field's image): leave 0,
            // the outer code treats it as a plain substitution
            received[i] = 0;
            out.report.substitutedCandidates.push_back(i);
        }
    }

    auto message = rs_->decode(received, erasures);
    if (!message) {
        out.failureReason = "outer code failure";
        return out;
    }
    out.ok = true;
    out.report.message = std::move(*message);
    return out;
}

}  // namespace dupcodec
