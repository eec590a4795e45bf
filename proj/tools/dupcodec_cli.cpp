// Command-line front end: encode/decode files, run channel simulations,
// emit rate tables, replay traces, and run the verification suites.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "dupcodec/channel.hpp"
#include "dupcodec/codec.hpp"
#include "dupcodec/dup.hpp"
#include "dupcodec/graph.hpp"
#include "dupcodec/textio.hpp"

using namespace dupcodec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CodeOptions {
    int q = 4;
    std::string sigma = "01201";
    std::size_t m = 18;
    int fieldDegree = 4;

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "alphabet size")->capture_default_str();
        cmd->add_option("--sigma", sigma, "marker (5 hex digits)")
            ->capture_default_str();
        cmd->add_option("--m", m, "message block length")
            ->capture_default_str();
        cmd->add_option("--field-degree", fieldDegree,
                        "outer field degree t; N = 2^t - 1")
            ->capture_default_str();
    }

    Codec makeCodec() const {
        return Codec(q, Word::parse(sigma, q), m, fieldDegree);
    }
};

std::ifstream openIn(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    return in;
}

std::ofstream openOut(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    return out;
}

unsigned threadCount(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DUPCODEC_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::string formatIndexList(const std::vector<unsigned>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

std::string messageHex(const std::vector<GaloisField::Elem>& msg,
                       int fieldDegree) {
    std::ostringstream out;
    writeMessages(out, {msg}, fieldDegree);
    std::string line = out.str();
    if (!line.empty() && line.back() == '\n') line.pop_back();
    return line;
}

std::string describeReport(const DecodeResult& res, int fieldDegree) {
    std::ostringstream out;
    if (!res.ok) {
        out << "status=fail reason=\"" << res.failureReason << "\"";
        return out.str();
    }
    const DecodeReport& r = res.report;
    out << "status=ok case="
        << (r.caseTag == DecodeReport::Case::MarkersAligned
                ? "markers-aligned"
                : "markers-shifted")
        << " delta=" << r.delta;
    if (r.caseTag == DecodeReport::Case::MarkersShifted)
        out << " window=[" << r.windowBegin << ',' << r.windowEnd << ')';
    out << " erased=" << formatIndexList(r.erasedBlocks)
        << " zeta-failures=" << formatIndexList(r.substitutedCandidates)
        << " message=" << messageHex(r.message, fieldDegree);
    return out.str();
}

int runEncode(const CodeOptions& opts, const std::string& inPath,
              const std::string& outPath, bool dna) {
    Codec codec = opts.makeCodec();
    auto in = openIn(inPath);
    auto messages =
        readMessages(in, opts.fieldDegree, codec.messageLength());
    std::vector<Word> words;
    words.reserve(messages.size());
    for (const auto& msg : messages) words.push_back(codec.encode(msg));
    auto out = openOut(outPath);
    writeSequences(out, words, dna);
    std::cout << "encoded " << words.size() << " codeword(s) of length "
              << codec.params().codewordLen << "\n";
    return kExitOk;
}

int runDecode(const CodeOptions& opts, const std::string& inPath,
              const std::string& outPath, bool dna) {
    Codec codec = opts.makeCodec();
    auto in = openIn(inPath);
    auto words = readSequences(in, opts.q, dna);
    std::vector<std::vector<GaloisField::Elem>> messages;
    bool anyFailed = false;
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto res = codec.decode(words[i]);
        std::cout << "word " << (i + 1) << ": "
                  << describeReport(res, opts.fieldDegree) << "\n";
        if (res.ok)
            messages.push_back(res.report.message);
        else
            anyFailed = true;
    }
    if (!outPath.empty()) {
        auto out = openOut(outPath);
        writeMessages(out, messages, opts.fieldDegree);
    }
    return anyFailed ? kExitFail : kExitOk;
}

int runSimulate(const CodeOptions& opts, std::size_t trials,
                std::size_t maxDups, std::uint64_t seed, bool noSub,
                const std::string& failuresPath, unsigned threadsOpt) {
    Codec codec = opts.makeCodec();
    const unsigned workers = threadCount(threadsOpt);

    struct Failure {
        std::size_t trial;
        Word input;
        ChannelTrace trace;
        std::string reason;
    };
    std::vector<std::optional<Failure>> failures(trials);
    std::atomic<std::size_t> nextTrial{0};
    std::atomic<std::size_t> successCount{0};

    auto worker = [&]() {
        for (;;) {
            std::size_t t = nextTrial.fetch_add(1);
            if (t >= trials) return;
            std::mt19937_64 rng(seed ^ std::uint64_t(t));
            std::vector<GaloisField::Elem> msg(codec.messageLength());
            for (auto& s : msg)
                s = GaloisField::Elem(rng() %
                                      codec.outerCode().field().size());
            Word cw = codec.encode(msg);
            ChannelConfig cfg;
            cfg.maxDuplications = maxDups;
            cfg.substitutionEnabled = !noSub;
            cfg.seed = rng();
            ChannelSampler sampler(cfg);
            auto [y, trace] = sampler.sample(cw);
            auto res = codec.decode(y);
            if (res.ok && res.report.message == msg) {
                successCount.fetch_add(1);
            } else {
                failures[t] = Failure{t, cw, trace,
                                      res.ok ? "wrong message"
                                             : res.failureReason};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    const std::size_t successes = successCount.load();
    std::cout << "trials=" << trials << " successes=" << successes
              << " failures=" << (trials - successes) << " success_rate="
              << std::fixed << std::setprecision(6)
              << (trials == 0 ? 1.0 : double(successes) / double(trials))
              << "\n";

    if (!failuresPath.empty()) {
        auto out = openOut(failuresPath);
        for (const auto& f : failures) {
            if (!f) continue;
            out << "# trial " << f->trial << " input " << f->input.str()
                << " reason " << f->reason << "\n"
                << serializeTrace(f->trace);
        }
    }
    return successes == trials ? kExitOk : kExitFail;
}

int runRates(int q, const std::string& mRange, const std::string& sigmaOpt,
             bool bestSigma) {
    std::size_t mLo = 0, mHi = 0;
    if (auto dots = mRange.find(".."); dots != std::string::npos) {
        mLo = std::stoul(mRange.substr(0, dots));
        mHi = std::stoul(mRange.substr(dots + 2));
    } else {
        mLo = mHi = std::stoul(mRange);
    }
    if (mLo < 1 || mHi < mLo)
        throw std::invalid_argument("bad --m-range, expected a..b");

    IrrGraph graph(q);
    Word sigma = bestSigma ? graph.bestSigma().first
                           : Word::parse(sigmaOpt, q);
    auto eig = graph.dominantEigenvalue(sigma);
    std::cout << "sigma,m,M,lambda,rate_exact,rate_lb,rate_asymptotic\n";
    for (std::size_t m = mLo; m <= mHi; ++m) {
        BigInt M = countBlocks(graph, sigma, m);
        std::ostringstream row;
        row << sigma.str() << ',' << m << ',' << M.str() << ','
            << std::fixed << std::setprecision(4) << eig.lambda << ',';
        if (M >= 8) {
            const std::size_t bits = boost::multiprecision::msb(M);
            const double N = std::exp2(double(bits)) - 1.0;
            auto rb = rateBounds(N, m, sigma.size(), M);
            row << std::setprecision(6) << rb.exact << ',' << rb.lowerBound
                << ',' << rb.asymptotic;
        } else {
            row << ",,";  // no permissible N with at least 7 symbols
        }
        std::cout << row.str() << "\n";
    }
    return kExitOk;
}

int runVerifyLemma1(const std::string& base, std::size_t cap, int q) {
    if (q == 0) {
        Sym maxSym = 0;
        for (char c : base) maxSym = std::max(maxSym, symbolFromChar(c));
        q = std::min(int(maxSym) + 2, 16);
    }
    Word x = Word::parse(base, q);
    auto res = maxRootAfterOneSub(x, cap);
    std::cout << "base=" << base << " cap=" << cap << " q=" << q
              << " max=" << res.maxRootLength
              << " witness=" << res.witness.str()
              << " witness_root_len=" << root(res.witness).size() << "\n";
    bool pass = false;
    if (x.size() <= 3) {
        // the maximum over length-3 starts is exactly 13, reachable once
        // the cap admits length-13 descendants
        pass = res.maxRootLength <= 13 &&
               (cap < 13 || res.maxRootLength == 13);
    } else if (x.size() <= 5) {
        pass = res.maxRootLength <= 17;
    } else {
        std::cout << "note: no bound is established for bases longer than 5\n";
        pass = true;
    }
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitFail;
}

int runVerifyTheorem1(std::size_t trials, std::uint64_t seed, int q) {
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Word x = randomIrreducible(q, 1 + rng() % 30, rng);
        ChannelConfig cfg;
        cfg.maxDuplications = 8;
        cfg.substitutionEnabled = true;
        cfg.seed = rng();
        ChannelSampler sampler(cfg);
        auto [xpp, trace] = sampler.sample(x);
        auto d = rootDiff(x, root(xpp));
        if (d.removed.size() > kWindowBound ||
            d.inserted.size() > kWindowBound)
            ++bad;
    }
    std::cout << "trials=" << trials << " window_violations=" << bad << "\n";
    std::cout << (bad == 0 ? "PASS" : "FAIL") << "\n";
    return bad == 0 ? kExitOk : kExitFail;
}

int runVerifyGraph(int q) {
    IrrGraph g(q);
    bool allPass = true;
    auto report = [&](const std::string& name, bool pass) {
        std::cout << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
        allPass = allPass && pass;
    };

    // vertex set against a direct filter of all q^5 tuples
    std::size_t expected = 0;
    {
        std::vector<Sym> v(5, 0);
        for (;;) {
            if (!detail::hasShortRepeat(v)) ++expected;
            std::size_t i = 5;
            while (i > 0 && v[i - 1] == q - 1) v[--i] = 0;
            if (i == 0) break;
            ++v[i - 1];
        }
    }
    report("vertex count matches brute force (" + std::to_string(expected) +
               ")",
           g.vertexCount() == expected);

    bool degreesOk = true, noLoops = true;
    for (std::size_t v = 0; v < g.vertexCount(); ++v) {
        degreesOk = degreesOk && g.outDegree(v) == g.outDegreeFormula(v);
        for (std::size_t w : g.outEdges(v)) noLoops = noLoops && w != v;
    }
    report("out-degree formula matches adjacency", degreesOk);
    report("no self-loops", noLoops);
    report("every vertex reaches 01020",
           g.reachesSigma(Word::parse("01020", q)));

    if (q <= 5) {
        bool countsOk = true;
        for (const char* sigmaStr : {"01020", "01201"}) {
            Word sigma = Word::parse(sigmaStr, q);
            for (std::size_t m = 1; m <= 4; ++m) {
                std::size_t brute = 0;
                std::vector<Sym> b(m, 0);
                for (;;) {
                    Word sbs = concat(sigma, Word(b, q), sigma);
                    if (isIrreducible(sbs) &&
                        sbs.countOccurrences(sigma) == 2)
                        ++brute;
                    std::size_t i = m;
                    while (i > 0 && b[i - 1] == q - 1) b[--i] = 0;
                    if (i == 0) break;
                    ++b[i - 1];
                }
                countsOk =
                    countsOk && countBlocks(g, sigma, m) == brute;
            }
        }
        report("block counts match brute-force filter (m <= 4)", countsOk);
    }
    std::cout << (allPass ? "PASS" : "FAIL") << "\n";
    return allPass ? kExitOk : kExitFail;
}

int runReplay(const std::string& tracePath, long long trial,
              const std::string& wordStr, int q, const std::string& outPath,
              bool dna) {
    auto in = openIn(tracePath);
    Word input;
    ChannelTrace trace;
    if (trial >= 0) {
        // pick the "# trial <i> input <word> ..." section
        std::string line;
        bool inSection = false;
        std::string eventText;
        const std::string header = "# trial " + std::to_string(trial) + " ";
        while (std::getline(in, line)) {
            if (line.rfind("# trial ", 0) == 0) {
                if (inSection) break;
                if (line.rfind(header, 0) == 0) {
                    inSection = true;
                    std::istringstream ls(line);
                    std::string hash, word, idx, inputTag, wordHex;
                    ls >> hash >> word >> idx >> inputTag >> wordHex;
                    input = Word::parse(wordHex, q);
                }
                continue;
            }
            if (inSection) eventText += line + "\n";
        }
        if (!inSection)
            throw std::invalid_argument("trial " + std::to_string(trial) +
                                        " not found in " + tracePath);
        trace = parseTrace(eventText);
    } else {
        if (wordStr.empty())
            throw std::invalid_argument("--word is required without --trial");
        input = Word::parse(wordStr, q);
        trace = parseTrace(in);
    }
    Word output = replayTrace(input, trace);
    std::cout << "input  " << input.str() << "\n";
    std::cout << "output " << output.str() << "\n";
    std::cout << "root   " << root(output).str() << "\n";
    if (!outPath.empty()) {
        auto out = openOut(outPath);
        writeSequences(out, {output}, dna);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codec for channels with short tandem duplications and one "
                 "substitution"};
    app.require_subcommand(1);

    // encode
    auto* encodeCmd = app.add_subcommand(
        "encode", "encode message files into codeword sequences");
    CodeOptions encodeOpts;
    encodeOpts.attach(encodeCmd);
    std::string encodeIn, encodeOut;
    bool encodeDna = false;
    encodeCmd->add_option("--in", encodeIn, "message file (hex lines)")
        ->required();
    encodeCmd->add_option("--out", encodeOut, "sequence file")->required();
    encodeCmd->add_flag("--dna", encodeDna, "render words as A/C/G/T (q=4)");

    // decode
    auto* decodeCmd = app.add_subcommand(
        "decode", "decode channel outputs back into messages");
    CodeOptions decodeOpts;
    decodeOpts.attach(decodeCmd);
    std::string decodeIn, decodeOut;
    bool decodeDna = false;
    decodeCmd->add_option("--in", decodeIn, "sequence file")->required();
    decodeCmd->add_option("--out", decodeOut, "message file (successes)");
    decodeCmd->add_flag("--dna", decodeDna, "parse words as A/C/G/T (q=4)");

    // simulate
    auto* simCmd = app.add_subcommand(
        "simulate", "Monte Carlo channel/decoder simulation");
    CodeOptions simOpts;
    simOpts.attach(simCmd);
    std::size_t simTrials = 1000, simMaxDups = 20;
    std::uint64_t simSeed = 1;
    bool simNoSub = false;
    std::string simFailures;
    unsigned simThreads = 0;
    simCmd->add_option("--trials", simTrials, "number of trials")
        ->capture_default_str();
    simCmd->add_option("--max-dups", simMaxDups,
                       "duplications per trial are uniform on [0, D]")
        ->capture_default_str();
    simCmd->add_option("--seed", simSeed, "base seed; trial t uses seed^t")
        ->capture_default_str();
    simCmd->add_flag("--no-substitution", simNoSub,
                     "disable the substitution error");
    simCmd->add_option("--failures", simFailures,
                       "write failing traces to this file");
    simCmd->add_option("--threads", simThreads,
                       "worker threads (default: DUPCODEC_THREADS or all)");

    // rates
    auto* ratesCmd =
        app.add_subcommand("rates", "emit a CSV rate table per block length");
    int ratesQ = 4;
    std::string ratesRange = "18..24", ratesSigma = "01201";
    bool ratesBest = false;
    ratesCmd->add_option("--q", ratesQ, "alphabet size")
        ->capture_default_str();
    ratesCmd->add_option("--m-range", ratesRange, "block lengths a..b")
        ->capture_default_str();
    auto* sigmaOpt =
        ratesCmd->add_option("--sigma", ratesSigma, "marker (5 hex digits)");
    auto* bestOpt = ratesCmd->add_flag(
        "--best-sigma", ratesBest, "scan all markers for the best eigenvalue");
    sigmaOpt->excludes(bestOpt);

    // verify
    auto* verifyCmd =
        app.add_subcommand("verify", "run the built-in verification suites");
    verifyCmd->require_subcommand(1);
    auto* lemma1Cmd = verifyCmd->add_subcommand(
        "lemma1", "bounded search for the maximal root after one "
                  "substitution");
    std::string lemma1Base = "012";
    std::size_t lemma1Cap = 13;
    int lemma1Q = 0;
    lemma1Cmd->add_option("--base", lemma1Base, "starting word")
        ->capture_default_str();
    lemma1Cmd->add_option("--cap", lemma1Cap, "descendant length cap")
        ->capture_default_str();
    lemma1Cmd->add_option(
        "--q", lemma1Q, "alphabet size (default: base symbols plus one)");

    auto* theorem1Cmd = verifyCmd->add_subcommand(
        "theorem1", "randomized root-difference window check");
    std::size_t theorem1Trials = 10000;
    std::uint64_t theorem1Seed = 1;
    int theorem1Q = 4;
    theorem1Cmd->add_option("--trials", theorem1Trials, "number of trials")
        ->capture_default_str();
    theorem1Cmd->add_option("--seed", theorem1Seed, "RNG seed")
        ->capture_default_str();
    theorem1Cmd->add_option("--q", theorem1Q, "alphabet size")
        ->capture_default_str();

    auto* graphCmd = verifyCmd->add_subcommand(
        "graph", "structural checks of the irreducible-tuple graph");
    int graphQ = 4;
    graphCmd->add_option("--q", graphQ, "alphabet size")
        ->capture_default_str();

    // replay
    auto* replayCmd = app.add_subcommand(
        "replay", "apply a recorded trace to an input word");
    std::string replayTracePath, replayWord, replayOut;
    long long replayTrial = -1;
    int replayQ = 4;
    bool replayDna = false;
    replayCmd->add_option("--trace", replayTracePath, "trace file")
        ->required();
    replayCmd->add_option("--trial", replayTrial,
                          "pick this trial from a simulate failure file");
    replayCmd->add_option("--word", replayWord,
                          "input word (hex digits) for a bare trace file");
    replayCmd->add_option("--q", replayQ, "alphabet size")
        ->capture_default_str();
    replayCmd->add_option("--out", replayOut, "write the output word here");
    replayCmd->add_flag("--dna", replayDna, "render output as A/C/G/T");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (encodeCmd->parsed())
            return runEncode(encodeOpts, encodeIn, encodeOut, encodeDna);
        if (decodeCmd->parsed())
            return runDecode(decodeOpts, decodeIn, decodeOut, decodeDna);
        if (simCmd->parsed())
            return runSimulate(simOpts, simTrials, simMaxDups, simSeed,
                               simNoSub, simFailures, simThreads);
        if (ratesCmd->parsed())
            return runRates(ratesQ, ratesRange, ratesSigma, ratesBest);
        if (verifyCmd->parsed()) {
            if (lemma1Cmd->parsed())
                return runVerifyLemma1(lemma1Base, lemma1Cap, lemma1Q);
            if (theorem1Cmd->parsed())
                return runVerifyTheorem1(theorem1Trials, theorem1Seed,
                                         theorem1Q);
            if (graphCmd->parsed()) return runVerifyGraph(graphQ);
        }
        if (replayCmd->parsed())
            return runReplay(replayTracePath, replayTrial, replayWord,
                             replayQ, replayOut, replayDna);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
