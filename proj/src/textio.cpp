#include "dupcodec/textio.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace dupcodec {

std::vector<Word> readSequences(std::istream& in, int alphabet, bool dna) {
    std::vector<Word> words;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            words.push_back(dna ? Word::parseDna(line)
                                : Word::parse(line, alphabet));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineNo) +
                                        ", " + e.what());
        }
    }
    return words;
}

void writeSequences(std::ostream& out, const std::vector<Word>& words,
                    bool dna) {
    for (const Word& w : words) out << (dna ? w.strDna() : w.str()) << '\n';
}

namespace {

unsigned hexWidth(int fieldDegree) { return unsigned(fieldDegree + 3) / 4; }

int hexValue(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::vector<std::vector<GaloisField::Elem>> readMessages(
    std::istream& in, int fieldDegree, std::size_t messageLen) {
    const unsigned width = hexWidth(fieldDegree);
    const unsigned fieldSize = 1u << fieldDegree;
    std::vector<std::vector<GaloisField::Elem>> messages;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.size() != messageLen * width)
            throw std::invalid_argument(
                "line " + std::to_string(lineNo) + ": expected " +
                std::to_string(messageLen * width) + " hex digits, got " +
                std::to_string(line.size()));
        std::vector<GaloisField::Elem> msg(messageLen);
        for (std::size_t i = 0; i < messageLen; ++i) {
            unsigned value = 0;
            for (unsigned j = 0; j < width; ++j) {
                int v = hexValue(line[i * width + j]);
                if (v < 0)
                    throw std::invalid_argument(
                        "line " + std::to_string(lineNo) + ", column " +
                        std::to_string(i * width + j + 1) +
                        ": invalid hex digit");
                value = value * 16 + unsigned(v);
            }
            if (value >= fieldSize)
                throw std::invalid_argument(
                    "line " + std::to_string(lineNo) + ": symbol " +
                    std::to_string(value) + " out of field");
            msg[i] = GaloisField::Elem(value);
        }
        messages.push_back(std::move(msg));
    }
    return messages;
}

void writeMessages(std::ostream& out,
                   const std::vector<std::vector<GaloisField::Elem>>& messages,
                   int fieldDegree) {
    const unsigned width = hexWidth(fieldDegree);
    static constexpr char kHex[] = "0123456789abcdef";
    for (const auto& msg : messages) {
        std::string line;
        line.reserve(msg.size() * width);
        for (GaloisField::Elem s : msg)
            for (unsigned j = width; j-- > 0;)
                line.push_back(kHex[(s >> (4 * j)) & 0xf]);
        out << line << '\n';
    }
}

}  // namespace dupcodec
