// Python bindings for the core operations: words travel as hex-digit
// strings, field symbols as plain ints, block counts as python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dupcodec/channel.hpp"
#include "dupcodec/codec.hpp"
#include "dupcodec/dup.hpp"
#include "dupcodec/graph.hpp"
#include "dupcodec/textio.hpp"

namespace py = pybind11;
using namespace dupcodec;

namespace {

py::int_ toPyInt(const BigInt& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

BigInt fromPyInt(const py::int_& value) {
    return BigInt(py::str(value).cast<std::string>());
}

py::dict reportToDict(const DecodeResult& res) {
    py::dict d;
    d["ok"] = res.ok;
    d["failure_reason"] = res.failureReason;
    d["case"] = res.report.caseTag == DecodeReport::Case::MarkersAligned
                    ? "markers-aligned"
                    : "markers-shifted";
    d["erased_blocks"] = res.report.erasedBlocks;
    d["zeta_failures"] = res.report.substitutedCandidates;
    d["delta"] = res.report.delta;
    std::vector<int> msg(res.report.message.begin(),
                         res.report.message.end());
    d["message"] = msg;
    return d;
}

}  // namespace

PYBIND11_MODULE(_dupcodec, m) {
    m.doc() = "codec for channels with short tandem duplications and at "
              "most one substitution";

    m.def(
        "apply_duplication",
        [](const std::string& w, std::size_t pos, std::size_t len, int q) {
            return applyDuplication(Word::parse(w, q), pos, len).str();
        },
        py::arg("word"), py::arg("pos"), py::arg("len"), py::arg("q") = 4);
    m.def(
        "apply_substitution",
        [](const std::string& w, std::size_t pos, int sym, int q) {
            return applySubstitution(Word::parse(w, q), pos, Sym(sym)).str();
        },
        py::arg("word"), py::arg("pos"), py::arg("sym"), py::arg("q") = 4);
    m.def(
        "is_irreducible",
        [](const std::string& w, int q) {
            return isIrreducible(Word::parse(w, q));
        },
        py::arg("word"), py::arg("q") = 4);
    m.def(
        "root",
        [](const std::string& w, int q) {
            return root(Word::parse(w, q)).str();
        },
        py::arg("word"), py::arg("q") = 4);
    m.def(
        "root_diff",
        [](const std::string& r1, const std::string& r2, int q) {
            auto d = rootDiff(Word::parse(r1, q), Word::parse(r2, q));
            return py::make_tuple(d.prefix.str(), d.removed.str(),
                                  d.inserted.str(), d.suffix.str());
        },
        py::arg("r1"), py::arg("r2"), py::arg("q") = 4,
        "(prefix, removed, inserted, suffix) with maximal prefix and "
        "clipped suffix");
    m.def(
        "bounded_descendants",
        [](const std::string& w, std::size_t maxLen, int q) {
            std::vector<std::string> out;
            for (const Word& d : boundedDescendants(Word::parse(w, q), maxLen))
                out.push_back(d.str());
            return out;
        },
        py::arg("word"), py::arg("max_len"), py::arg("q") = 4);
    m.def(
        "max_root_after_one_sub",
        [](const std::string& w, std::size_t maxLen, int q) {
            auto res = maxRootAfterOneSub(Word::parse(w, q), maxLen);
            return py::make_tuple(res.maxRootLength, res.witness.str());
        },
        py::arg("word"), py::arg("max_len"), py::arg("q") = 4);

    py::class_<IrrGraph>(m, "IrrGraph",
                         "graph of irreducible 5-tuples over {0..q-1}")
        .def(py::init<int>(), py::arg("q"))
        .def_property_readonly("q", &IrrGraph::alphabet)
        .def_property_readonly("vertex_count", &IrrGraph::vertexCount)
        .def(
            "out_degree",
            [](const IrrGraph& g, const std::string& v) {
                auto id = g.vertexId(Word::parse(v, g.alphabet()));
                if (!id) throw std::invalid_argument("not a vertex");
                return g.outDegree(*id);
            },
            py::arg("vertex"))
        .def(
            "reaches_sigma",
            [](const IrrGraph& g, const std::string& sigma) {
                return g.reachesSigma(Word::parse(sigma, g.alphabet()));
            },
            py::arg("sigma"))
        .def(
            "dominant_eigenvalue",
            [](const IrrGraph& g, const py::object& sigma) {
                auto res = sigma.is_none()
                               ? g.dominantEigenvalue()
                               : g.dominantEigenvalue(Word::parse(
                                     sigma.cast<std::string>(), g.alphabet()));
                return py::make_tuple(res.lambda, res.primitive);
            },
            py::arg("sigma") = py::none(),
            "(lambda, primitive) for the adjacency matrix, optionally with "
            "sigma's row and column deleted")
        .def("best_sigma",
             [](const IrrGraph& g) {
                 auto [sigma, lambda] = g.bestSigma();
                 return py::make_tuple(sigma.str(), lambda);
             })
        .def(
            "count_blocks",
            [](const IrrGraph& g, const std::string& sigma, std::size_t m) {
                return toPyInt(
                    countBlocks(g, Word::parse(sigma, g.alphabet()), m));
            },
            py::arg("sigma"), py::arg("m"))
        .def(
            "unrank_block",
            [](const IrrGraph& g, const std::string& sigma, std::size_t m,
               const py::int_& rank) {
                BlockTable table(g, Word::parse(sigma, g.alphabet()), m);
                return table.unrank(fromPyInt(rank)).str();
            },
            py::arg("sigma"), py::arg("m"), py::arg("rank"))
        .def(
            "rank_block",
            [](const IrrGraph& g, const std::string& sigma, std::size_t m,
               const std::string& block) {
                BlockTable table(g, Word::parse(sigma, g.alphabet()), m);
                return toPyInt(
                    table.rank(Word::parse(block, g.alphabet())));
            },
            py::arg("sigma"), py::arg("m"), py::arg("block"));

    py::class_<Codec>(m, "Codec",
                      "marker-separated block code with an RS outer layer")
        .def(py::init([](int q, const std::string& sigma, std::size_t m,
                         int fieldDegree) {
                 return Codec(q, Word::parse(sigma, q), m, fieldDegree);
             }),
             py::arg("q") = 4, py::arg("sigma") = "01201", py::arg("m") = 18,
             py::arg("field_degree") = 4)
        .def_property_readonly(
            "codeword_length",
            [](const Codec& c) { return c.params().codewordLen; })
        .def_property_readonly(
            "block_count",
            [](const Codec& c) { return c.params().blockCount; })
        .def_property_readonly("message_length", &Codec::messageLength)
        .def_property_readonly(
            "block_universe",
            [](const Codec& c) { return toPyInt(c.params().blockUniverse); })
        .def(
            "encode",
            [](const Codec& c, const std::vector<int>& message) {
                std::vector<GaloisField::Elem> msg(message.begin(),
                                                   message.end());
                return c.encode(msg).str();
            },
            py::arg("message"))
        .def(
            "decode",
            [](const Codec& c, const std::string& word) {
                return reportToDict(
                    c.decode(Word::parse(word, c.params().alphabet)));
            },
            py::arg("word"));

    m.def(
        "sample_channel",
        [](const std::string& word, int q, std::size_t maxDups,
           std::uint64_t seed, bool substitution,
           std::array<double, 3> weights) {
            ChannelConfig cfg;
            cfg.maxDuplications = maxDups;
            cfg.substitutionEnabled = substitution;
            cfg.seed = seed;
            cfg.duplicationLengthWeights = weights;
            ChannelSampler sampler(cfg);
            auto [y, trace] = sampler.sample(Word::parse(word, q));
            return py::make_tuple(y.str(), serializeTrace(trace));
        },
        py::arg("word"), py::arg("q") = 4, py::arg("max_dups") = 8,
        py::arg("seed") = 1, py::arg("substitution") = true,
        py::arg("weights") = std::array<double, 3>{1.0, 1.0, 1.0},
        "(output, trace) for one draw from the duplication+substitution "
        "channel");
    m.def(
        "replay_trace",
        [](const std::string& word, const std::string& trace, int q) {
            return replayTrace(Word::parse(word, q), parseTrace(trace)).str();
        },
        py::arg("word"), py::arg("trace"), py::arg("q") = 4);
    m.def(
        "exhaustive_outputs",
        [](const std::string& word, std::size_t maxDups, bool withSub,
           int q) {
            std::vector<std::string> out;
            for (const Word& y :
                 exhaustiveOutputs(Word::parse(word, q), maxDups, withSub))
                out.push_back(y.str());
            return out;
        },
        py::arg("word"), py::arg("max_dups"), py::arg("with_sub") = true,
        py::arg("q") = 4);
}
