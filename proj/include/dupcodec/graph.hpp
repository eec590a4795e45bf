#ifndef DUPCODEC_GRAPH_HPP
#define DUPCODEC_GRAPH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dupcodec/word.hpp"

namespace dupcodec {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown by rankBlock when the argument is a well-formed word but not a
/// member of the block set; the codec decoder branches on this case.
struct BlockMembershipError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenResult {
    double lambda = 0.0;   // dominant eigenvalue (spectral radius)
    bool primitive = false;  // strongly connected and aperiodic
    int iterations = 0;
};

/// Sparse row-major nonnegative matrix: rows[i] lists (column, weight).
using SparseRows = std::vector<std::vector<std::pair<std::size_t, double>>>;

/// Spectral radius of a nonnegative matrix by power iteration on A + I
/// (the shift keeps periodic matrices convergent), relative tolerance
/// 1e-9. Returns (lambda, iterations).
std::pair<double, int> spectralRadius(const SparseRows& rows);

/// Directed graph on the repeat-free 5-tuples over {0..q-1}. Vertex
/// a1..a5 has an edge to a2..a6 whenever a1..a6 is irreducible; the edge
/// label is a6. Paths correspond one-to-one to irreducible strings.
class IrrGraph {
  public:
    explicit IrrGraph(int alphabet);

    int alphabet() const { return q_; }
    std::size_t vertexCount() const { return vertices_.size(); }
    const Word& vertex(std::size_t id) const { return vertices_[id]; }
    /// Dense id of a 5-tuple vertex, or nullopt if not irreducible.
    std::optional<std::size_t> vertexId(const Word& v) const;
    /// Out-neighbor ids in ascending edge-label order.
    const std::vector<std::size_t>& outEdges(std::size_t id) const {
        return adj_[id];
    }

    /// Actual out-degree from the adjacency structure.
    std::size_t outDegree(std::size_t id) const { return adj_[id].size(); }
    /// Out-degree predicted from the vertex shape: q-2 when a3 = a5 or
    /// a1a2 = a4a5, q-1 otherwise.
    std::size_t outDegreeFormula(std::size_t id) const;

    /// True iff every vertex has a directed path to sigma.
    bool reachesSigma(const Word& sigma) const;

    /// Shortest-path distance from every vertex to sigma (reverse BFS);
    /// unreachable vertices get SIZE_MAX.
    std::vector<std::size_t> distancesTo(const Word& sigma) const;

    /// Dominant eigenvalue of the adjacency matrix, or of the matrix
    /// with sigma's row and column deleted when sigma is given. Power
    /// iteration to relative tolerance 1e-9.
    EigenResult dominantEigenvalue(const std::optional<Word>& sigma = {}) const;

    /// The marker sigma maximizing the dominant eigenvalue of the
    /// sigma-deleted matrix; ties go to the lexicographically least.
    std::pair<Word, double> bestSigma() const;

  private:
    int q_;
    std::vector<Word> vertices_;          // lexicographic order
    std::vector<std::vector<std::size_t>> adj_;
};

/// sigma-avoiding path counts in an IrrGraph: counts, ranking and
/// unranking of the message blocks B with sigma|B|sigma irreducible and
/// exactly two sigma occurrences. Blocks are ordered lexicographically.
class BlockTable {
  public:
    BlockTable(const IrrGraph& graph, const Word& sigma, std::size_t m);

    const Word& sigma() const { return sigma_; }
    std::size_t blockLength() const { return m_; }
    const BigInt& count() const { return total_; }

    /// rank -> block; rank must be in [0, count()).
    Word unrank(const BigInt& rank) const;
    /// block -> rank; throws BlockMembershipError if B is not a block.
    BigInt rank(const Word& block) const;
    /// block -> rank without throwing on non-membership.
    std::optional<BigInt> tryRank(const Word& block) const;

  private:
    const IrrGraph& graph_;
    Word sigma_;
    std::size_t m_;
    std::size_t sigmaId_;
    // counts_[r][v] = number of paths of length r from v to sigma whose
    // inner vertices avoid sigma (r = 1..m+5)
    std::vector<std::vector<BigInt>> counts_;
    BigInt total_;
};

/// Number of sigma-avoiding sigma->sigma paths of length m+5, i.e. the
/// number of valid message blocks of length m. Rolling-table variant for
/// when only the count is needed.
BigInt countBlocks(const IrrGraph& graph, const Word& sigma, std::size_t m);

struct RateBounds {
    double exact = 0.0;       // (N-4) log2(N+1) / (N m + (N-1) l)
    double lowerBound = 0.0;  // (1 - 8/(M-1)) (log2 M - 1) / (m + l)
    double asymptotic = 0.0;  // log2(M) / m
};

/// Code-rate expressions in bits per symbol for an [N, N-4, 5] outer
/// code over blocks counted by M. Requires N <= 2^floor(log2 M) - 1.
RateBounds rateBounds(std::size_t N, std::size_t m, std::size_t l,
                      const BigInt& M);

/// log2 of a positive big integer.
double log2BigInt(const BigInt& value);

}  // namespace dupcodec

#endif
