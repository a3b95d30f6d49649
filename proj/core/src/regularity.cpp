#include "agh/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "agh/oracles.hpp"
#include "agh/patterns.hpp"
#include "agh/ramsey.hpp"
#include "agh/rng.hpp"

namespace agh {

namespace {

template <typename F>
void forEachSubsetOf(int N, int r, F&& f) {
    if (r > N) return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        f(idx);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - r + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Rational snapRational(double x) {
    if (x <= 0) return Rational(0);
    if (x >= 1) return Rational(1);
    const std::int64_t den = 1 << 30;
    auto num = static_cast<std::int64_t>(x * static_cast<double>(den));
    if (num < 1) num = 1;
    return Rational(num, den);
}

// threshold = base^{1/deg}; exact power comparisons while the integers fit,
// long double beyond that (r >= 4 recursion depths)
struct RootThresh {
    Rational base{1};
    int deg = 1;
    bool exactRep = true;
    long double approx = 1.0L;

    long double value() const {
        if (!exactRep) return approx;
        return std::pow(static_cast<long double>(base.num()) / static_cast<long double>(base.den()),
                        1.0L / static_cast<long double>(deg));
    }

    RootThresh root(int k) const {
        RootThresh t = *this;
        if (t.exactRep && t.deg <= 1000 / k) t.deg *= k;
        else { t.exactRep = false; t.approx = std::pow(value(), 1.0L / k); }
        return t;
    }

    RootThresh times(std::int64_t c) const {
        RootThresh t = *this;
        if (t.exactRep) {
            __int128 pw = 1;
            bool over = false;
            for (int i = 0; i < t.deg && !over; ++i) {
                pw *= c;
                if (pw > static_cast<__int128>(INT64_MAX)) over = true;
            }
            if (!over) {
                try {
                    t.base = t.base * Rational(static_cast<std::int64_t>(pw));
                    return t;
                } catch (const Error&) {
                    // falls through to the approximate representation
                }
            }
        }
        t.exactRep = false;
        t.approx = static_cast<long double>(c) * value();
        return t;
    }
};

// sign of (count - thresh * size)
int cmpThresh(std::int64_t count, std::int64_t size, const RootThresh& t) {
    if (t.exactRep) {
        __int128 lhs = 1, rhs = 1;
        bool over = false;
        for (int i = 0; i < t.deg && !over; ++i) {
            lhs *= count;
            rhs *= size;
            if (lhs > static_cast<__int128>(1) << 100 || rhs > static_cast<__int128>(1) << 100)
                over = true;
        }
        if (!over) {
            __int128 a = lhs * t.base.den();
            __int128 b = rhs * t.base.num();
            if (a < b) return -1;
            if (a > b) return 1;
            return 0;
        }
    }
    long double lhs = static_cast<long double>(count);
    long double rhs = t.value() * static_cast<long double>(size);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

} // namespace

HomogeneityReport homogeneityReport(const EdgeStore& H, const Partition& part,
                                    const Rational& eps) {
    HomogeneityReport rep;
    rep.epsilon = eps;
    auto parts = part.parts();
    const int r = H.r();
    std::vector<std::vector<int>> tuple(static_cast<std::size_t>(r));
    forEachSubsetOf(part.K, r, [&](const std::vector<int>& idx) {
        ++rep.tuplesTotal;
        for (int i = 0; i < r; ++i)
            tuple[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        Rational dens = H.partDensity(tuple);
        if (dens == Rational(0)) ++rep.tuplesEmpty;
        else if (dens >= Rational(1) - eps) ++rep.tuplesDense;
        else ++rep.tuplesBad;
    });
    rep.badFraction = rep.tuplesTotal == 0
                          ? Rational(0)
                          : Rational(static_cast<std::int64_t>(rep.tuplesBad),
                                     static_cast<std::int64_t>(rep.tuplesTotal));
    rep.KBoundsOK = Rational(part.K) * eps > Rational(8);
    return rep;
}

namespace {

// split clusters into an equitable K-part partition, aligning part
// boundaries with cluster boundaries whenever the size arithmetic allows
Partition partitionFromClusters(const std::vector<std::vector<int>>& clusters, int K, int N) {
    Partition part;
    part.K = K;
    part.assignment.assign(static_cast<std::size_t>(N), 0);
    const int q = N / K;
    int hLeft = N % K;
    int emitted = 0;
    std::vector<int> buffer;

    auto emit = [&](std::vector<int>& pool, int size) {
        for (int i = 0; i < size; ++i) {
            part.assignment[static_cast<std::size_t>(pool[static_cast<std::size_t>(i)])] = emitted;
        }
        pool.erase(pool.begin(), pool.begin() + size);
        ++emitted;
    };

    for (const auto& cluster : clusters) {
        if (buffer.empty()) {
            int c = static_cast<int>(cluster.size());
            int b = q > 0 ? c % q : 0;
            if (q > 0 && b <= hLeft) {
                int a = (c - b * (q + 1)) / q;
                if (c - b * (q + 1) >= 0 && a * q + b * (q + 1) == c) {
                    std::vector<int> pool = cluster;
                    for (int i = 0; i < b; ++i) { emit(pool, q + 1); --hLeft; }
                    for (int i = 0; i < a; ++i) emit(pool, q);
                    continue;
                }
            }
        }
        buffer.insert(buffer.end(), cluster.begin(), cluster.end());
        while (true) {
            int want = hLeft > 0 ? q + 1 : q;
            if (static_cast<int>(buffer.size()) < want || want == 0) break;
            if (hLeft > 0) --hLeft;
            emit(buffer, want);
        }
    }
    while (!buffer.empty()) {
        int want = hLeft > 0 ? q + 1 : q;
        if (hLeft > 0) --hLeft;
        emit(buffer, std::min<int>(want, static_cast<int>(buffer.size())));
    }
    part.equitable = true;
    part.K = emitted;
    return part;
}

} // namespace

PartitionOutcome weakVcPartitionCore(const EdgeStore& H, const Rational& homogTarget,
                                     std::uint64_t seed, int kMin) {
    const int N = H.N();
    SetFamily fam = neighborhoodFamily(H);

    // seeded scan order for the net; ties in clustering break to the lowest
    // center index
    std::vector<int> scan(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) scan[static_cast<std::size_t>(i)] = i;
    Rng rng(seed);
    for (int i = N - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(scan[static_cast<std::size_t>(i)], scan[static_cast<std::size_t>(j)]);
    }

    PartitionOutcome best;
    bool haveBest = false;
    Rational delta = homogTarget / Rational(4);
    for (int round = 0; round < 8; ++round, delta = delta / Rational(2)) {
        // greedy separated net in scan order
        std::vector<int> net;
        Rational sepCount = delta * Rational(fam.baseSize);
        for (int v : scan) {
            bool far = true;
            for (int z : net)
                if (Rational(static_cast<std::int64_t>(
                        fam.members[static_cast<std::size_t>(v)].symmetricDifferenceCount(
                            fam.members[static_cast<std::size_t>(z)]))) < sepCount) {
                    far = false;
                    break;
                }
            if (far) net.push_back(v);
        }
        std::sort(net.begin(), net.end());
        // nearest-center clustering
        std::vector<std::vector<int>> clusters(net.size());
        for (int v = 0; v < N; ++v) {
            std::size_t bestC = 0;
            std::size_t bestDist = SIZE_MAX;
            for (std::size_t c = 0; c < net.size(); ++c) {
                std::size_t dist = fam.members[static_cast<std::size_t>(v)].symmetricDifferenceCount(
                    fam.members[static_cast<std::size_t>(net[c])]);
                if (dist < bestDist) { bestDist = dist; bestC = c; }
            }
            clusters[bestC].push_back(v);
        }
        std::erase_if(clusters, [](const std::vector<int>& c) { return c.empty(); });

        int K = std::max<int>(kMin, static_cast<int>(clusters.size()));
        if (K > N) {
            // no partition with nonempty parts can reach the floor
            continue;
        }
        PartitionOutcome cur;
        cur.partition = partitionFromClusters(clusters, K, N);
        cur.report = homogeneityReport(H, cur.partition, homogTarget);
        cur.rounds = round + 1;
        cur.ok = cur.report.badFraction <= homogTarget && cur.partition.K >= kMin;
        if (!haveBest || cur.report.badFraction < best.report.badFraction) {
            best = cur;
            haveBest = true;
        }
        if (cur.ok) return cur;
    }
    if (!haveBest) {
        // kMin exceeded N on every round; report on the trivial partition
        best.partition.K = N;
        best.partition.assignment.resize(static_cast<std::size_t>(N));
        for (int v = 0; v < N; ++v) best.partition.assignment[static_cast<std::size_t>(v)] = v;
        best.partition.equitable = true;
        best.report = homogeneityReport(H, best.partition, homogTarget);
        best.ok = false;
    }
    return best;
}

PartitionOutcome weakVcPartition(const EdgeStore& H, const Rational& eps, std::uint64_t seed) {
    if (!(eps > Rational(0) && eps < Rational(1, 4)))
        throwValidation("EpsilonOutOfRange", "need 0 < epsilon < 1/4");
    Rational kBound = Rational(8) / eps;
    int kMin = static_cast<int>(kBound.num() / kBound.den()) + 1;
    return weakVcPartitionCore(H, eps, seed, kMin);
}

SparseMedResult medDegreeSparse(const EdgeStore& H,
                                const std::vector<std::vector<int>>& classes,
                                const Rational& eps) {
    const int r = H.r();
    if (static_cast<int>(classes.size()) != r)
        throwValidation("ArityMismatch", "need r vertex classes");
    validateParts(classes, H.N());

    // cross-class edge list, one vertex per class, stored class-aligned
    std::vector<std::vector<int>> edges;
    {
        std::vector<std::size_t> cursor(classes.size(), 0);
        std::vector<int> pick(classes.size());
        bool done = false;
        while (!done) {
            for (std::size_t i = 0; i < classes.size(); ++i)
                pick[i] = classes[i][cursor[i]];
            if (H.hasSet(pick)) edges.push_back(pick);
            std::size_t k = classes.size();
            while (true) {
                if (k == 0) { done = true; break; }
                --k;
                if (++cursor[k] < classes[k].size()) break;
                cursor[k] = 0;
            }
        }
    }
    if (edges.empty()) throwValidation("EmptyInput", "no cross-class edges");
    {
        std::int64_t total = 1;
        for (const auto& c : classes) total *= static_cast<std::int64_t>(c.size());
        if (Rational(static_cast<std::int64_t>(edges.size()), total) > eps)
            throwValidation("TooDense", "cross density above epsilon");
    }

    RootThresh eps1{eps, r, true, 0.0L};

    std::vector<int> activeCls;
    for (int i = 0; i < r; ++i) activeCls.push_back(i);
    std::vector<int> chain; // one picked vertex per deactivated class
    std::vector<std::vector<int>> cur = edges;

    while (true) {
        // distinct class-j vertices among the current edges
        std::vector<std::set<int>> support(activeCls.size());
        for (const auto& e : cur)
            for (std::size_t a = 0; a < activeCls.size(); ++a)
                support[a].insert(e[static_cast<std::size_t>(activeCls[a])]);

        int stopAt = -1;
        for (std::size_t a = 0; a < activeCls.size(); ++a) {
            int cls = activeCls[a];
            if (cmpThresh(static_cast<std::int64_t>(support[a].size()),
                          static_cast<std::int64_t>(classes[static_cast<std::size_t>(cls)].size()),
                          eps1) <= 0) {
                stopAt = static_cast<int>(a);
                break;
            }
        }
        if (stopAt >= 0) {
            int cls = activeCls[static_cast<std::size_t>(stopAt)];
            SparseMedResult out;
            out.cls = cls;
            const auto& e0 = cur.front(); // lex-first current edge
            out.X = chain;
            for (int a : activeCls)
                if (a != cls) out.X.push_back(e0[static_cast<std::size_t>(a)]);
            std::set<int> nbs;
            for (const auto& e : cur) {
                bool match = true;
                for (int a : activeCls)
                    if (a != cls && e[static_cast<std::size_t>(a)] != e0[static_cast<std::size_t>(a)]) {
                        match = false;
                        break;
                    }
                if (match) nbs.insert(e[static_cast<std::size_t>(cls)]);
            }
            out.neighborhood.assign(nbs.begin(), nbs.end());
            if (out.neighborhood.empty())
                throwVerification("PostconditionFailed", "empty completion set");
            if (cmpThresh(static_cast<std::int64_t>(out.neighborhood.size()),
                          static_cast<std::int64_t>(classes[static_cast<std::size_t>(cls)].size()),
                          eps1) > 0)
                throwVerification("PostconditionFailed", "completion set above eps^{1/r}|W|");
            std::sort(out.X.begin(), out.X.end());
            return out;
        }
        if (activeCls.size() == 1)
            throwVerification("PostconditionFailed",
                              "single active class exceeded its support bound");
        // all classes rich: take the minimum-degree vertex in the first class
        int cls = activeCls[0];
        std::map<int, int> degree;
        for (const auto& e : cur) ++degree[e[static_cast<std::size_t>(cls)]];
        int x = -1, best = -1;
        for (const auto& [v, deg] : degree)
            if (best < 0 || deg < best) { best = deg; x = v; }
        chain.push_back(x);
        std::vector<std::vector<int>> next;
        for (const auto& e : cur)
            if (e[static_cast<std::size_t>(cls)] == x) next.push_back(e);
        cur = std::move(next);
        activeCls.erase(activeCls.begin());
    }
}

namespace {

int cleaningConstant(int r, int s) {
    if (r <= 2) return 2 * s;
    double inner = std::pow(6.0 * r * s, 1.0 / std::tgamma(r)); // (6rs)^{1/(r-1)!}
    return s + cleaningConstant(r - 1, s) * static_cast<int>(std::ceil(inner));
}

using EdgeList = std::vector<std::vector<int>>;

// one level of the trimming recursion; edges are rr-sets over the global
// vertex ids, parts shrink as the recursion descends
std::vector<std::vector<int>> cleanRec(int rr, const EdgeList& edges,
                                       const std::vector<std::vector<int>>& parts,
                                       const std::set<std::vector<int>>& sparse,
                                       const RootThresh& eps0, int s) {
    const int L = static_cast<int>(parts.size());
    int maxVertex = 0;
    for (const auto& p : parts)
        for (int v : p) maxVertex = std::max(maxVertex, v);
    for (const auto& e : edges)
        for (int v : e) maxVertex = std::max(maxVertex, v);
    std::vector<int> partOf(static_cast<std::size_t>(maxVertex) + 1, -1);
    for (int p = 0; p < L; ++p)
        for (int v : parts[static_cast<std::size_t>(p)]) partOf[static_cast<std::size_t>(v)] = p;

    RootThresh eps1 = eps0.root(rr);

    // co-neighborhoods: (Z, k) -> vertices of U_k adjacent through Z, where
    // Z is cross-part over distinct parts, none equal to k
    std::map<std::pair<std::vector<int>, int>, std::vector<int>> nb;
    for (const auto& e : edges) {
        for (std::size_t vi = 0; vi < e.size(); ++vi) {
            int v = e[vi];
            int k = partOf[static_cast<std::size_t>(v)];
            if (k < 0) continue;
            std::vector<int> Z;
            std::set<int> seenParts;
            bool good = true;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j == vi) continue;
                int u = e[j];
                int pu = partOf[static_cast<std::size_t>(u)];
                if (pu < 0 || pu == k || seenParts.count(pu)) { good = false; break; }
                seenParts.insert(pu);
                Z.push_back(u);
            }
            if (!good) continue;
            std::sort(Z.begin(), Z.end());
            nb[{Z, k}].push_back(v);
        }
    }
    for (auto& [key, vs] : nb) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    }

    // T_k: union of small nonempty co-neighborhoods
    std::vector<std::set<int>> trimmedOut(static_cast<std::size_t>(L));
    for (const auto& [key, vs] : nb) {
        int k = key.second;
        if (cmpThresh(static_cast<std::int64_t>(vs.size()),
                      static_cast<std::int64_t>(parts[static_cast<std::size_t>(k)].size()),
                      eps1) <= 0)
            trimmedOut[static_cast<std::size_t>(k)].insert(vs.begin(), vs.end());
    }
    std::vector<std::vector<int>> uPrime(static_cast<std::size_t>(L));
    std::vector<std::set<int>> uPrimeSet(static_cast<std::size_t>(L));
    for (int p = 0; p < L; ++p) {
        for (int v : parts[static_cast<std::size_t>(p)])
            if (!trimmedOut[static_cast<std::size_t>(p)].count(v)) {
                uPrime[static_cast<std::size_t>(p)].push_back(v);
                uPrimeSet[static_cast<std::size_t>(p)].insert(v);
            }
    }

    // heavy tuples F_{X,k}: Z over parts X with X ∪ {k} sparse, co-degree
    // >= eps1 |U_k|, still having a neighbor in U'_k
    auto heavySurvives = [&](const std::pair<std::vector<int>, int>& key,
                             const std::vector<int>& vs) {
        int k = key.second;
        std::vector<int> X;
        for (int u : key.first) X.push_back(partOf[static_cast<std::size_t>(u)]);
        std::sort(X.begin(), X.end());
        std::vector<int> tuple = X;
        tuple.push_back(k);
        std::sort(tuple.begin(), tuple.end());
        if (!sparse.count(tuple)) return false;
        if (cmpThresh(static_cast<std::int64_t>(vs.size()),
                      static_cast<std::int64_t>(parts[static_cast<std::size_t>(k)].size()),
                      eps1) < 0)
            return false;
        for (int v : vs)
            if (uPrimeSet[static_cast<std::size_t>(k)].count(v)) return true;
        return false;
    };

    if (rr == 2) {
        // F edges are single vertices; peel them from their own part
        std::vector<std::set<int>> peel(static_cast<std::size_t>(L));
        for (const auto& [key, vs] : nb) {
            if (!heavySurvives(key, vs)) continue;
            int z = key.first[0];
            peel[static_cast<std::size_t>(partOf[static_cast<std::size_t>(z)])].insert(z);
        }
        std::vector<std::vector<int>> out(static_cast<std::size_t>(L));
        for (int p = 0; p < L; ++p)
            for (int v : uPrime[static_cast<std::size_t>(p)])
                if (!peel[static_cast<std::size_t>(p)].count(v)) out[static_cast<std::size_t>(p)].push_back(v);
        return out;
    }

    std::set<std::vector<int>> hPrime;
    for (const auto& [key, vs] : nb)
        if (heavySurvives(key, vs)) hPrime.insert(key.first);

    std::set<std::vector<int>> completeSparse;
    forEachSubsetOf(L, rr - 1, [&](const std::vector<int>& idx) { completeSparse.insert(idx); });

    RootThresh next = eps1.times(6 * static_cast<std::int64_t>(rr) * s);
    return cleanRec(rr - 1, EdgeList(hPrime.begin(), hPrime.end()), uPrime, completeSparse,
                    next, s);
}

} // namespace

CleaningResult cleaning(const EdgeStore& H, const std::vector<std::vector<int>>& parts,
                        const std::vector<std::vector<int>>& sparseTuples,
                        const Rational& eps0, int s) {
    if (H.directed()) throwValidation("BadParameters", "cleaning needs an undirected store");
    const int r = H.r();
    validateParts(parts, H.N());
    std::set<std::vector<int>> sparse;
    for (auto t : sparseTuples) {
        std::sort(t.begin(), t.end());
        if (static_cast<int>(t.size()) != r)
            throwValidation("ArityMismatch", "sparse tuples must have r part indices");
        sparse.insert(t);
    }

    EdgeList edges;
    {
        std::vector<int> verts;
        for (const auto& p : parts) verts.insert(verts.end(), p.begin(), p.end());
        std::sort(verts.begin(), verts.end());
        std::vector<int> tuple(static_cast<std::size_t>(r));
        forEachSubsetOf(static_cast<int>(verts.size()), r, [&](const std::vector<int>& idx) {
            for (int i = 0; i < r; ++i)
                tuple[static_cast<std::size_t>(i)] = verts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (H.hasTuple(tuple)) edges.push_back(tuple);
        });
    }

    CleaningResult out;
    RootThresh eps{eps0, 1, true, 0.0L};
    out.trimmed = sparse.empty() ? parts : cleanRec(r, edges, parts, sparse, eps, s);

    // hard contract: zero edges across every sparse tuple of trimmed parts
    std::vector<std::set<int>> inPart(out.trimmed.size());
    for (std::size_t p = 0; p < out.trimmed.size(); ++p)
        inPart[p] = {out.trimmed[p].begin(), out.trimmed[p].end()};
    int maxVertex = H.N();
    std::vector<int> partOf(static_cast<std::size_t>(maxVertex), -1);
    for (std::size_t p = 0; p < out.trimmed.size(); ++p)
        for (int v : out.trimmed[p]) partOf[static_cast<std::size_t>(v)] = static_cast<int>(p);
    for (const auto& e : edges) {
        std::vector<int> tuple;
        bool allIn = true;
        for (int v : e) {
            int p = partOf[static_cast<std::size_t>(v)];
            if (p < 0) { allIn = false; break; }
            tuple.push_back(p);
        }
        if (!allIn) continue;
        std::sort(tuple.begin(), tuple.end());
        if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end()) continue;
        if (sparse.count(tuple))
            throwVerification("PostconditionFailed",
                              "edge survived inside a sparse tuple after cleaning");
    }

    double c = static_cast<double>(cleaningConstant(r, s));
    double rfact = 1;
    for (int i = 2; i <= r; ++i) rfact *= i;
    out.targetFraction = c * std::pow(eps0.toDouble(), 1.0 / rfact);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        double kept = static_cast<double>(out.trimmed[p].size());
        double want = (1.0 - out.targetFraction) * static_cast<double>(parts[p].size());
        if (kept < want) out.sizeTargetMet = false;
    }
    return out;
}

namespace {

Partition reequitabilize(int N, const std::vector<std::vector<int>>& trimmed) {
    std::vector<std::vector<int>> surviving;
    for (const auto& p : trimmed)
        if (!p.empty()) surviving.push_back(p);

    Partition part;
    if (surviving.empty()) {
        part.K = N;
        part.assignment.resize(static_cast<std::size_t>(N));
        for (int v = 0; v < N; ++v) part.assignment[static_cast<std::size_t>(v)] = v;
        part.equitable = true;
        return part;
    }
    std::size_t minSize = SIZE_MAX;
    for (const auto& p : surviving) minSize = std::min(minSize, p.size());
    int K = static_cast<int>(static_cast<std::size_t>(N) / minSize) + 1;
    K = std::min(K, N);
    K = std::max(K, static_cast<int>(surviving.size()));

    const int q = N / K;
    int hLeft = N % K;
    part.K = K;
    part.assignment.assign(static_cast<std::size_t>(N), -1);
    std::vector<char> placed(static_cast<std::size_t>(N), 0);
    int emitted = 0;
    for (const auto& p : surviving) {
        int want = (hLeft > 0 && static_cast<int>(p.size()) >= q + 1) ? q + 1 : q;
        if (hLeft > 0 && want == q + 1) --hLeft;
        want = std::min<int>(want, static_cast<int>(p.size()));
        for (int i = 0; i < want; ++i) {
            part.assignment[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = emitted;
            placed[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = 1;
        }
        ++emitted;
    }
    std::vector<int> leftovers;
    for (int v = 0; v < N; ++v)
        if (!placed[static_cast<std::size_t>(v)]) leftovers.push_back(v);
    std::size_t at = 0;
    while (emitted < K) {
        int want = hLeft > 0 ? q + 1 : q;
        if (hLeft > 0) --hLeft;
        for (int i = 0; i < want && at < leftovers.size(); ++i)
            part.assignment[static_cast<std::size_t>(leftovers[at++])] = emitted;
        ++emitted;
    }
    while (at < leftovers.size())
        part.assignment[static_cast<std::size_t>(leftovers[at++])] = emitted - 1;
    part.equitable = true;
    return part;
}

} // namespace

RegularityOutcome algebraicRegularity(const AlgebraicInstance& inst, const Rational& eps,
                                      std::uint64_t seed) {
    if (inst.kind() != InstanceKind::StronglyAlgebraic)
        throwUsage("BadMode", "regularity pipeline needs a strongly-algebraic instance");
    if (!(eps > Rational(0) && eps < Rational(1, 4)))
        throwValidation("EpsilonOutOfRange", "need 0 < epsilon < 1/4");
    const int r = inst.r();
    const int N = inst.N();
    EdgeStore H = EdgeStore::materialize(inst, 100000000ULL);

    const int s = static_cast<int>(monomialCount(inst.n(), inst.d())) + 1;
    double rfact = 1;
    for (int i = 2; i <= r; ++i) rfact *= i;
    double c1 = std::pow(2.0, r) * rfact * cleaningConstant(r, s) + 1.0;
    double epsD = eps.toDouble();
    double jA = rfact * (std::log2(c1) - std::log2(epsD));
    double jB = r + std::log2(1.0 / epsD);
    int j = static_cast<int>(std::ceil(std::max(jA, jB))) + 1;
    j = std::clamp(j, 1, 60);
    Rational eps0(1, static_cast<std::int64_t>(1) << j);

    Rational kBound = Rational(8) / eps;
    int kMin = static_cast<int>(kBound.num() / kBound.den()) + 1;

    RegularityOutcome best;
    best.eps0 = eps0.toDouble();
    for (int attempt = 0; attempt < 4; ++attempt) {
        PartitionOutcome po =
            weakVcPartitionCore(H, eps0, Rng::child(seed, static_cast<std::uint64_t>(attempt)), kMin);
        auto parts = po.partition.parts();

        std::vector<std::vector<int>> sparse;
        {
            std::vector<std::vector<int>> tuple(static_cast<std::size_t>(r));
            forEachSubsetOf(po.partition.K, r, [&](const std::vector<int>& idx) {
                for (int i = 0; i < r; ++i)
                    tuple[static_cast<std::size_t>(i)] =
                        parts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                if (H.partDensity(tuple) < eps0) sparse.push_back(idx);
            });
        }
        CleaningResult cr = cleaning(H, parts, sparse, eps0, s);

        RegularityOutcome cur;
        cur.eps0 = eps0.toDouble();
        cur.attempts = attempt + 1;
        cur.partition = reequitabilize(N, cr.trimmed);
        cur.report = homogeneityReport(H, cur.partition, eps);
        cur.ok = cur.report.badFraction <= eps && cur.report.KBoundsOK;
        if (attempt == 0 || cur.report.badFraction < best.report.badFraction) {
            int keep = best.attempts;
            best = cur;
            best.attempts = std::max(cur.attempts, keep);
        }
        if (cur.ok) { best = cur; break; }
    }
    return best;
}

BaseFinder exactOracleBaseFinder(int sTarget) {
    return [sTarget](const AlgebraicInstance& sub) {
        EdgeStore H = EdgeStore::materialize(sub, 100000000ULL);
        BaseFinderResult out;
        ExactResult is = maxIndependentExact(H);
        if (is.size >= sTarget) {
            out.isClique = false;
            out.vertices.assign(is.witness.begin(), is.witness.begin() + sTarget);
            return out;
        }
        ExactResult cl = maxCliqueExact(H);
        out.isClique = true;
        out.vertices = cl.witness;
        return out;
    };
}

AmplifyOutcome hereditaryAmplify(const AlgebraicInstance& inst, const BaseFinder& baseFinder,
                                 const Rational& beta, std::uint64_t seed) {
    if (!(beta > Rational(0) && beta < Rational(1)))
        throwValidation("BadParameters", "beta must lie in (0,1)");
    const int r = inst.r();
    const int n = inst.n();
    const int N = inst.N();

    double epsPaper = std::pow(static_cast<double>(std::max(N, 2)),
                               -beta.toDouble() / (std::tgamma(r + 1.0) * (2 * n + 1)));
    Rational eps = std::min(snapRational(epsPaper), Rational(1, 5));
    if (eps <= Rational(0)) eps = Rational(1, 5);

    RegularityOutcome reg = algebraicRegularity(inst, eps, Rng::child(seed, 0));
    if (!reg.ok)
        throwVerification("VerificationFailed", "regularity stage missed its contract");
    auto parts = reg.partition.parts();
    const int K = reg.partition.K;

    EdgeStore H = EdgeStore::materialize(inst, 100000000ULL);

    // class of each r-tuple of parts at the working epsilon
    std::map<std::vector<int>, int> cls; // 0 bad, 1 dense, 2 empty
    {
        std::vector<std::vector<int>> tuple(static_cast<std::size_t>(r));
        forEachSubsetOf(K, r, [&](const std::vector<int>& idx) {
            for (int i = 0; i < r; ++i)
                tuple[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            Rational dens = H.partDensity(tuple);
            int c = 0;
            if (dens == Rational(0)) c = 2;
            else if (dens >= Rational(1) - eps) c = 1;
            cls[idx] = c;
        });
    }

    AmplifyOutcome out;
    out.K = K;
    std::vector<int> sampled(static_cast<std::size_t>(K));
    EdgeStore agreement = EdgeStore::empty(r, K, false);
    bool good = false;
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(Rng::child(seed, 100 + static_cast<std::uint64_t>(attempt)));
        for (int i = 0; i < K; ++i) {
            const auto& p = parts[static_cast<std::size_t>(i)];
            sampled[static_cast<std::size_t>(i)] =
                p[static_cast<std::size_t>(rng.below(p.size()))];
        }
        std::vector<std::vector<int>> agreeEdges;
        std::vector<int> verts(static_cast<std::size_t>(r));
        forEachSubsetOf(K, r, [&](const std::vector<int>& idx) {
            for (int i = 0; i < r; ++i)
                verts[static_cast<std::size_t>(i)] = sampled[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            bool isEdge = H.hasSet(verts);
            int c = cls[idx];
            if ((isEdge && c == 1) || (!isEdge && c == 2)) agreeEdges.push_back(idx);
        });
        agreement = EdgeStore::fromSets(r, K, agreeEdges);
        out.resamples = attempt + 1;
        if (agreement.globalDensity() >= Rational(1) - Rational(2) * eps) { good = true; break; }
    }
    if (!good)
        throwBudget("ResampleBudgetExceeded",
                    "no sampled tuple family agreed with its partition classes");

    Rational gap = Rational(2) * eps;
    std::vector<int> J;
    std::int64_t kpow = 1;
    for (int i = 0; i < r - 1; ++i) kpow *= std::max(K, 1);
    if (K >= r && gap > Rational(1, kpow) && gap < Rational(1, 2)) {
        J = denseClique(agreement, gap, Rng::child(seed, 7), nullptr);
    } else {
        J = maxCliqueExact(agreement).witness;
    }
    if (J.empty()) throwInternal("InternalInconsistency", "agreement clique came back empty");

    std::vector<int> keep;
    for (int j : J) keep.push_back(sampled[static_cast<std::size_t>(j)]);
    std::sort(keep.begin(), keep.end());
    AlgebraicInstance sub = inst.induced(keep);
    BaseFinderResult bf = baseFinder(sub);

    if (bf.isClique) {
        out.viaClique = true;
        out.witness.kind = Witness::Kind::Clique;
        for (int rel : bf.vertices) out.witness.vertices.push_back(keep[static_cast<std::size_t>(rel)]);
        std::sort(out.witness.vertices.begin(), out.witness.vertices.end());
    } else {
        const int sNeeded = (r - 1) * static_cast<int>(monomialCount(inst.n(), inst.d())) + 1;
        if (static_cast<int>(bf.vertices.size()) < sNeeded)
            throwValidation("BadParameters",
                            "base finder returned an independent set shorter than s");
        // one of the touched parts must be fully independent
        int foundPart = -1;
        for (int i = 0; i < sNeeded && foundPart < 0; ++i) {
            int globalV = keep[static_cast<std::size_t>(bf.vertices[static_cast<std::size_t>(i)])];
            int partIdx = -1;
            for (int p = 0; p < K && partIdx < 0; ++p) {
                const auto& pp = parts[static_cast<std::size_t>(p)];
                if (std::find(pp.begin(), pp.end(), globalV) != pp.end()) partIdx = p;
            }
            const auto& pp = parts[static_cast<std::size_t>(partIdx)];
            if (H.edgesWithin(pp) == 0) foundPart = partIdx;
        }
        if (foundPart < 0)
            throwInternal("InternalInconsistency",
                          "no fully independent part among the independent sample");
        out.witness.kind = Witness::Kind::IndependentSet;
        out.witness.vertices = parts[static_cast<std::size_t>(foundPart)];
    }

    VerifyResult vr = verifyWitness(inst, out.witness);
    if (!vr.ok)
        throwVerification("VerificationFailed", "amplified witness failed: " + vr.detail);
    return out;
}

} // namespace agh
