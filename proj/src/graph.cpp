#include "dupcodec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "dupcodec/dup.hpp"

namespace dupcodec {

namespace {

constexpr std::size_t kTupleLen = 5;

}  // namespace

IrrGraph::IrrGraph(int alphabet) : q_(alphabet) {
    if (q_ < kMinAlphabet || q_ > kMaxAlphabet)
        throw std::invalid_argument("alphabet size must be in [3, 16]");

    std::size_t total = 1;
    for (std::size_t i = 0; i < kTupleLen; ++i) total *= q_;

    // Vertices in lexicographic order; dense lookup keyed by base-q value.
    std::vector<std::int32_t> idByKey(total, -1);
    std::vector<Sym> tuple(kTupleLen);
    for (std::size_t key = 0; key < total; ++key) {
        std::size_t rest = key;
        for (std::size_t i = kTupleLen; i-- > 0;) {
            tuple[i] = Sym(rest % q_);
            rest /= q_;
        }
        if (!detail::hasShortRepeat(tuple)) {
            idByKey[key] = std::int32_t(vertices_.size());
            vertices_.emplace_back(tuple, q_);
        }
    }

    adj_.resize(vertices_.size());
    std::vector<Sym> six(kTupleLen + 1);
    for (std::size_t id = 0; id < vertices_.size(); ++id) {
        const auto& v = vertices_[id].symbols();
        std::copy(v.begin(), v.end(), six.begin());
        for (Sym a6 = 0; a6 < q_; ++a6) {
            six[kTupleLen] = a6;
            if (detail::hasShortRepeat(six)) continue;
            std::size_t key = 0;
            for (std::size_t i = 1; i <= kTupleLen; ++i) key = key * q_ + six[i];
            adj_[id].push_back(std::size_t(idByKey[key]));
        }
    }
}

std::optional<std::size_t> IrrGraph::vertexId(const Word& v) const {
    if (v.size() != kTupleLen) return std::nullopt;
    for (Sym s : v.symbols())
        if (s >= q_) return std::nullopt;
    if (detail::hasShortRepeat(v.symbols())) return std::nullopt;
    // Binary search works because vertices_ is lexicographically sorted.
    auto it = std::lower_bound(
        vertices_.begin(), vertices_.end(), v,
        [](const Word& a, const Word& b) { return a.symbols() < b.symbols(); });
    if (it == vertices_.end() || it->symbols() != v.symbols())
        return std::nullopt;
    return std::size_t(it - vertices_.begin());
}

std::size_t IrrGraph::outDegreeFormula(std::size_t id) const {
    const auto& a = vertices_[id].symbols();
    const bool fewer = (a[2] == a[4]) || (a[0] == a[3] && a[1] == a[4]);
    return fewer ? q_ - 2 : q_ - 1;
}

std::vector<std::size_t> IrrGraph::distancesTo(const Word& sigma) const {
    auto sid = vertexId(sigma);
    if (!sid) throw std::invalid_argument("sigma is not a graph vertex");
    std::vector<std::vector<std::size_t>> radj(vertices_.size());
    for (std::size_t u = 0; u < vertices_.size(); ++u)
        for (std::size_t w : adj_[u]) radj[w].push_back(u);

    constexpr std::size_t kInf = SIZE_MAX;
    std::vector<std::size_t> dist(vertices_.size(), kInf);
    std::vector<std::size_t> queue{*sid};
    dist[*sid] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t u = queue[head];
        for (std::size_t w : radj[u]) {
            if (dist[w] == kInf) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool IrrGraph::reachesSigma(const Word& sigma) const {
    auto dist = distancesTo(sigma);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::size_t d) { return d == SIZE_MAX; });
}

namespace {

// Strong connectivity and aperiodicity of the subgraph on `keep`.
bool isPrimitive(const std::vector<std::vector<std::size_t>>& adj,
                 const std::vector<std::size_t>& keep,
                 const std::vector<std::size_t>& denseId) {
    const std::size_t n = keep.size();
    if (n == 0) return false;

    auto reach = [&](auto edgesOf) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : edgesOf(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        return cnt == n;
    };

    std::vector<std::vector<std::size_t>> fwd(n), rev(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t w : adj[keep[i]]) {
            std::size_t j = denseId[w];
            if (j == SIZE_MAX) continue;
            fwd[i].push_back(j);
            rev[j].push_back(i);
        }
    }
    if (!reach([&](std::size_t u) -> const std::vector<std::size_t>& {
            return fwd[u];
        }))
        return false;
    if (!reach([&](std::size_t u) -> const std::vector<std::size_t>& {
            return rev[u];
        }))
        return false;

    // Period = gcd over edges of depth(u) + 1 - depth(w) in a BFS tree.
    std::vector<std::size_t> depth(n, SIZE_MAX);
    std::vector<std::size_t> queue{0};
    depth[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t u = queue[head];
        for (std::size_t w : fwd[u]) {
            if (depth[w] == SIZE_MAX) {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    long long g = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w : fwd[u]) {
            long long diff = (long long)depth[u] + 1 - (long long)depth[w];
            g = std::gcd(g, diff < 0 ? -diff : diff);
        }
    return g == 1;
}

}  // namespace

std::pair<double, int> spectralRadius(const SparseRows& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return {0.0, 0};

    // Power iteration on A + I; the shift keeps the iteration convergent
    // even for periodic matrices and subtracts out exactly at the end.
    std::vector<double> v(n, 1.0 / double(n)), w(n);
    double lambda = 0.0;
    int iterations = 0;
    constexpr double kTol = 1e-9;
    constexpr int kMaxIter = 500000;
    for (int iter = 1; iter <= kMaxIter; ++iter) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = v[i];
            for (auto [j, weight] : rows[i]) acc += weight * v[j];
            w[i] = acc;
            sum += acc;
        }
        double next = sum;  // ||w||_1 with v normalized to sum 1
        for (std::size_t i = 0; i < n; ++i) w[i] /= sum;
        v.swap(w);
        iterations = iter;
        if (std::abs(next - lambda) <= kTol * std::abs(next) && iter > 3) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return {lambda - 1.0, iterations};
}

EigenResult IrrGraph::dominantEigenvalue(
    const std::optional<Word>& sigma) const {
    std::vector<std::size_t> keep;
    std::vector<std::size_t> denseId(vertices_.size(), SIZE_MAX);
    std::size_t skip = SIZE_MAX;
    if (sigma) {
        auto sid = vertexId(*sigma);
        if (!sid) throw std::invalid_argument("sigma is not a graph vertex");
        skip = *sid;
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (v == skip) continue;
        denseId[v] = keep.size();
        keep.push_back(v);
    }

    EigenResult res;
    res.primitive = isPrimitive(adj_, keep, denseId);
    SparseRows rows(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t t : adj_[keep[i]])
            if (denseId[t] != SIZE_MAX) rows[i].emplace_back(denseId[t], 1.0);
    auto [lambda, iterations] = spectralRadius(rows);
    res.lambda = lambda;
    res.iterations = iterations;
    return res;
}

std::pair<Word, double> IrrGraph::bestSigma() const {
    Word best;
    double bestLambda = -1.0;
    for (std::size_t id = 0; id < vertices_.size(); ++id) {
        double lam = dominantEigenvalue(vertices_[id]).lambda;
        if (lam > bestLambda + 1e-9) {
            bestLambda = lam;
            best = vertices_[id];
        }
    }
    return {best, bestLambda};
}

BlockTable::BlockTable(const IrrGraph& graph, const Word& sigma, std::size_t m)
    : graph_(graph), sigma_(sigma), m_(m) {
    auto sid = graph.vertexId(sigma);
    if (!sid)
        throw std::invalid_argument(
            "marker must be an irreducible 5-tuple over the graph alphabet");
    if (m < 1) throw std::invalid_argument("block length must be positive");
    sigmaId_ = *sid;

    const std::size_t steps = m_ + kTupleLen;
    const std::size_t n = graph.vertexCount();
    counts_.assign(steps + 1, {});
    counts_[1].assign(n, BigInt(0));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : graph.outEdges(v))
            if (w == sigmaId_) counts_[1][v] = 1;
    for (std::size_t r = 2; r <= steps; ++r) {
        counts_[r].assign(n, BigInt(0));
        for (std::size_t v = 0; v < n; ++v) {
            BigInt acc = 0;
            for (std::size_t w : graph.outEdges(v))
                if (w != sigmaId_) acc += counts_[r - 1][w];
            counts_[r][v] = std::move(acc);
        }
    }
    total_ = counts_[steps][sigmaId_];
}

Word BlockTable::unrank(const BigInt& rank) const {
    if (rank < 0 || rank >= total_)
        throw std::invalid_argument("block rank out of range");
    BigInt rest = rank;
    std::vector<Sym> labels;
    labels.reserve(m_ + kTupleLen);
    std::size_t v = sigmaId_;
    for (std::size_t r = m_ + kTupleLen; r >= 1; --r) {
        bool advanced = false;
        for (std::size_t w : graph_.outEdges(v)) {
            if (r > 1) {
                if (w == sigmaId_) continue;
                const BigInt& c = counts_[r - 1][w];
                if (rest >= c) {
                    rest -= c;
                    continue;
                }
            } else if (w != sigmaId_) {
                continue;
            }
            labels.push_back(graph_.vertex(w).symbols().back());
            v = w;
            advanced = true;
            break;
        }
        if (!advanced)
            throw std::logic_error("block count table is inconsistent");
    }
    labels.resize(m_);
    return Word(std::move(labels), graph_.alphabet());
}

std::optional<BigInt> BlockTable::tryRank(const Word& block) const {
    if (block.size() != m_)
        throw std::invalid_argument("block has the wrong length");
    for (Sym s : block.symbols())
        if (s >= graph_.alphabet())
            throw std::invalid_argument("block symbol out of alphabet");

    const std::size_t steps = m_ + kTupleLen;
    BigInt rank = 0;
    std::size_t v = sigmaId_;
    for (std::size_t t = 1; t <= steps; ++t) {
        const Sym label =
            t <= m_ ? block[t - 1] : sigma_[t - m_ - 1];
        std::size_t next = SIZE_MAX;
        const std::size_t r = steps - t + 1;
        for (std::size_t w : graph_.outEdges(v)) {
            const Sym wl = graph_.vertex(w).symbols().back();
            if (wl == label) {
                next = w;
                break;
            }
            if (r > 1) {
                if (w != sigmaId_) rank += counts_[r - 1][w];
            }
        }
        if (next == SIZE_MAX) return std::nullopt;           // no such edge
        if (r > 1 && next == sigmaId_) return std::nullopt;  // inner sigma
        if (r == 1 && next != sigmaId_) return std::nullopt;
        v = next;
    }
    return rank;
}

BigInt BlockTable::rank(const Word& block) const {
    auto r = tryRank(block);
    if (!r) throw BlockMembershipError("word is not a valid message block");
    return *r;
}

BigInt countBlocks(const IrrGraph& graph, const Word& sigma, std::size_t m) {
    auto sid = graph.vertexId(sigma);
    if (!sid)
        throw std::invalid_argument(
            "marker must be an irreducible 5-tuple over the graph alphabet");
    if (m < 1) throw std::invalid_argument("block length must be positive");
    const std::size_t n = graph.vertexCount();
    std::vector<BigInt> cur(n, BigInt(0)), next(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : graph.outEdges(v))
            if (w == *sid) cur[v] = 1;
    for (std::size_t r = 2; r <= m + kTupleLen; ++r) {
        for (std::size_t v = 0; v < n; ++v) {
            BigInt acc = 0;
            for (std::size_t w : graph.outEdges(v))
                if (w != *sid) acc += cur[w];
            next[v] = std::move(acc);
        }
        cur.swap(next);
    }
    return cur[*sid];
}

double log2BigInt(const BigInt& value) {
    if (value <= 0) throw std::invalid_argument("log2 of a non-positive value");
    const std::size_t bits = boost::multiprecision::msb(value);
    if (bits <= 52) return std::log2(value.convert_to<double>());
    const std::size_t shift = bits - 52;
    const double top = BigInt(value >> shift).convert_to<double>();
    return std::log2(top) + double(shift);
}

RateBounds rateBounds(std::size_t N, std::size_t m, std::size_t l,
                      const BigInt& M) {
    if (N < 5) throw std::invalid_argument("N must be at least 5");
    if (M < 2) throw std::invalid_argument("block count too small");
    const std::size_t maxBits = boost::multiprecision::msb(M);
    if (BigInt(N) > (BigInt(1) << maxBits) - 1)
        throw std::invalid_argument("N exceeds 2^floor(log2 M) - 1");
    const double log2M = log2BigInt(M);
    RateBounds rb;
    rb.exact = double(N - 4) * std::log2(double(N) + 1.0) /
               (double(N) * double(m) + double(N - 1) * double(l));
    rb.lowerBound = (1.0 - 8.0 / (M - 1).convert_to<double>()) *
                    (log2M - 1.0) / double(m + l);
    rb.asymptotic = log2M / double(m);
    return rb;
}

}  // namespace dupcodec
