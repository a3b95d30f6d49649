#include "agh/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "agh/oracles.hpp"
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

std::uint64_t factorialOf(int r) {
    std::uint64_t f = 1;
    for (int i = 2; i <= r; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// edge lists as sorted vertex sets; the med-degree recursion runs on these
using EdgeList = std::vector<std::vector<int>>;

EdgeList edgesWithinSet(const EdgeStore& store, const std::vector<int>& U) {
    EdgeList out;
    const int r = store.r();
    std::vector<int> tuple(static_cast<std::size_t>(r));
    forEachSubsetOf(static_cast<int>(U.size()), r, [&](const std::vector<int>& idx) {
        for (int i = 0; i < r; ++i)
            tuple[static_cast<std::size_t>(i)] = U[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (store.directed()) {
            std::sort(tuple.begin(), tuple.end());
            do {
                if (store.hasTuple(tuple)) out.push_back(tuple);
            } while (std::next_permutation(tuple.begin(), tuple.end()));
        } else if (store.hasTuple(tuple)) {
            out.push_back(tuple);
        }
    });
    return out;
}

// minimum-positive-degree descent over an explicit edge list
struct MedDegreeInternal {
    std::vector<int> X;
    std::vector<int> neighborhood;
};

MedDegreeInternal medDegreeOnEdges(EdgeList edges, int rr) {
    MedDegreeInternal out;
    while (rr > 1) {
        std::map<int, int> degree;
        for (const auto& e : edges)
            for (int v : e) ++degree[v];
        int u = -1, best = -1;
        for (const auto& [v, deg] : degree)
            if (deg > 0 && (best < 0 || deg < best)) { best = deg; u = v; }
        // lowest index among minimum degrees: map iterates ascending, so the
        // strict < above already keeps the first minimum
        out.X.push_back(u);
        EdgeList link;
        for (const auto& e : edges) {
            if (std::find(e.begin(), e.end(), u) == e.end()) continue;
            std::vector<int> reduced;
            for (int v : e)
                if (v != u) reduced.push_back(v);
            link.push_back(std::move(reduced));
        }
        std::sort(link.begin(), link.end());
        link.erase(std::unique(link.begin(), link.end()), link.end());
        edges = std::move(link);
        --rr;
    }
    for (const auto& e : edges) out.neighborhood.push_back(e[0]);
    std::sort(out.neighborhood.begin(), out.neighborhood.end());
    std::sort(out.X.begin(), out.X.end());
    return out;
}

// exhaustive fallback used on small sets: every X with nonempty N(X) is an
// edge minus one vertex, so candidates come from the edges themselves
MedDegreeInternal medDegreeExhaustive(const EdgeList& edges, int rr, const Rational& capCount) {
    std::map<std::vector<int>, std::set<int>> nb;
    for (const auto& e : edges)
        for (int i = 0; i < rr; ++i) {
            std::vector<int> X;
            for (int j = 0; j < rr; ++j)
                if (j != i) X.push_back(e[static_cast<std::size_t>(j)]);
            nb[X].insert(e[static_cast<std::size_t>(i)]);
        }
    const std::vector<int>* bestX = nullptr;
    std::size_t bestSize = 0;
    for (const auto& [X, nbs] : nb) {
        if (Rational(static_cast<std::int64_t>(nbs.size())) <= capCount)
            return {X, {nbs.begin(), nbs.end()}};
        if (!bestX || nbs.size() < bestSize) { bestX = &X; bestSize = nbs.size(); }
    }
    // no candidate met the cap; return the smallest nonempty neighborhood
    const auto& nbs = nb.at(*bestX);
    return {*bestX, {nbs.begin(), nbs.end()}};
}

std::vector<int> allVerts(int N) {
    std::vector<int> v(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

} // namespace

double hypergraphGamma(const AlgebraicInstance& inst) {
    double s = static_cast<double>(monomialCount(inst.n(), inst.d())) + 1.0;
    return 2.0 * inst.r() * inst.r() * inst.m() * s;
}

double graphGammaPrime(int n, int d, int m) {
    double term;
    if (n == 1) term = static_cast<double>(d);
    else term = std::min(static_cast<double>(d),
                         n * std::log(static_cast<double>(d)) / std::log(static_cast<double>(n)));
    term = std::max(term, 1.0);
    return 16.0 * m * n * term;
}

std::vector<int> denseClique(const EdgeStore& H, const Rational& gap, std::uint64_t seed,
                             bool* belowBound) {
    if (H.directed()) throwValidation("BadParameters", "denseClique needs an undirected store");
    const int N = H.N();
    const int r = H.r();
    if (N < r) throwValidation("AlphaOutOfRange", "no r-subsets to work with");
    // 1/N^{r-1} < gap < 1/2
    std::int64_t npow = 1;
    for (int i = 0; i < r - 1; ++i) npow *= N;
    if (!(Rational(1, npow) < gap && gap < Rational(1, 2)))
        throwValidation("AlphaOutOfRange", "need 1/N^{r-1} < alpha < 1/2");
    if (H.globalDensity() < Rational(1) - gap)
        throwValidation("DensityTooLow", "density below 1 - alpha");

    const double gapD = gap.toDouble();
    const double root = std::pow(1.0 / gapD, 1.0 / (r - 1));
    const int target = static_cast<int>(std::ceil(root / 4.0));
    const double sampleProb = 1.0 / (2.0 * N * std::pow(gapD, 1.0 / (r - 1)));

    std::vector<int> bestClique;
    std::vector<int> tuple(static_cast<std::size_t>(r));
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng(Rng::child(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<int> picked;
        for (int v = 0; v < N; ++v)
            if (rng.bernoulli(sampleProb)) picked.push_back(v);
        // delete one vertex (lowest index) of each surviving non-edge
        std::vector<char> alive(static_cast<std::size_t>(N), 0);
        for (int v : picked) alive[static_cast<std::size_t>(v)] = 1;
        forEachSubsetOf(static_cast<int>(picked.size()), r, [&](const std::vector<int>& idx) {
            for (int i = 0; i < r; ++i)
                tuple[static_cast<std::size_t>(i)] = picked[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            for (int v : tuple)
                if (!alive[static_cast<std::size_t>(v)]) return;
            if (!H.hasTuple(tuple)) alive[static_cast<std::size_t>(tuple[0])] = 0;
        });
        std::vector<int> clique;
        for (int v : picked)
            if (alive[static_cast<std::size_t>(v)]) clique.push_back(v);
        if (clique.size() > bestClique.size()) bestClique = clique;
        if (static_cast<int>(bestClique.size()) >= target) {
            if (belowBound) *belowBound = false;
            return bestClique;
        }
    }

    // greedy fallback: repeatedly delete the vertex in the most non-edges
    std::vector<int> cur = allVerts(N);
    while (true) {
        std::vector<std::int64_t> nonDeg(static_cast<std::size_t>(N), 0);
        std::int64_t nonEdges = 0;
        forEachSubsetOf(static_cast<int>(cur.size()), r, [&](const std::vector<int>& idx) {
            for (int i = 0; i < r; ++i)
                tuple[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (!H.hasTuple(tuple)) {
                ++nonEdges;
                for (int v : tuple) ++nonDeg[static_cast<std::size_t>(v)];
            }
        });
        if (nonEdges == 0) break;
        int worst = cur[0];
        for (int v : cur)
            if (nonDeg[static_cast<std::size_t>(v)] > nonDeg[static_cast<std::size_t>(worst)]) worst = v;
        cur.erase(std::find(cur.begin(), cur.end(), worst));
    }
    if (cur.size() > bestClique.size()) bestClique = cur;
    if (belowBound) *belowBound = static_cast<int>(bestClique.size()) < target;
    return bestClique;
}

MedDegreeResult medDegreeSet(const EdgeStore& G, const Rational& gap) {
    if (G.directed()) throwValidation("BadParameters", "medDegreeSet needs an undirected store");
    const int M = G.N();
    const int r = G.r();
    if (M < 100 * r)
        throwValidation("BadParameters", "public medDegreeSet requires M >= 100r");
    if (G.edgeCount() == 0) throwValidation("EmptyHypergraph", "no edges");
    if (G.globalDensity() > Rational(1) - gap)
        throwValidation("TooDense", "density above 1 - alpha");

    EdgeList edges = edgesWithinSet(G, allVerts(M));
    MedDegreeInternal mi = medDegreeOnEdges(edges, r);
    MedDegreeResult out;
    out.X = mi.X;
    out.neighborhood = mi.neighborhood;
    // |N(X)| <= (1 - gap/2r) M
    Rational cap = (Rational(1) - gap / Rational(2 * r)) * Rational(M);
    out.boundHeld = !mi.neighborhood.empty() &&
                    Rational(static_cast<std::int64_t>(mi.neighborhood.size())) <= cap;
    return out;
}

namespace {

// directed descent within U; never throws on bound misses, the caller's
// output verification is the contract
MedDegreeDirResult medDegreeDirWithin(const EdgeStore& diG, const EdgeStore& cp,
                                      const std::vector<int>& U, const Rational& gap) {
    const int r = diG.r();
    const int M = static_cast<int>(U.size());
    const std::uint64_t rfact = factorialOf(r);
    MedDegreeDirResult out;

    std::vector<char> inU(static_cast<std::size_t>(diG.N()), 0);
    for (int v : U) inU[static_cast<std::size_t>(v)] = 1;

    auto completionsWithin = [&](int slot, const std::vector<int>& Y) {
        std::vector<int> nbs;
        std::vector<int> tuple(static_cast<std::size_t>(r));
        for (int u : U) {
            if (std::find(Y.begin(), Y.end(), u) != Y.end()) continue;
            int yi = 0;
            for (int j = 0; j < r; ++j)
                tuple[static_cast<std::size_t>(j)] = (j == slot) ? u : Y[static_cast<std::size_t>(yi++)];
            if (diG.hasTuple(tuple)) nbs.push_back(u);
        }
        return nbs;
    };

    EdgeList cpEdges = edgesWithinSet(cp, U);
    if (!cpEdges.empty()) {
        Rational capCount = (Rational(1) - gap / Rational(2 * r)) * Rational(M);
        MedDegreeInternal mi = M >= 100 * r ? medDegreeOnEdges(cpEdges, r)
                                            : medDegreeExhaustive(cpEdges, r, capCount);
        // vertices of U whose join with X misses an orientation
        std::vector<char> inN(static_cast<std::size_t>(diG.N()), 0);
        for (int v : mi.neighborhood) inN[static_cast<std::size_t>(v)] = 1;
        std::vector<int> residual;
        for (int u : U)
            if (!inN[static_cast<std::size_t>(u)] &&
                std::find(mi.X.begin(), mi.X.end(), u) == mi.X.end())
                residual.push_back(u);

        int bestSlot = -1;
        std::vector<int> bestY;
        std::size_t bestMissing = 0;
        std::vector<int> orient = mi.X; // orientations of X in lex order
        std::sort(orient.begin(), orient.end());
        std::vector<int> tuple(static_cast<std::size_t>(r));
        do {
            for (int slot = 0; slot < r; ++slot) {
                std::size_t missing = 0;
                for (int u : residual) {
                    int yi = 0;
                    for (int j = 0; j < r; ++j)
                        tuple[static_cast<std::size_t>(j)] =
                            (j == slot) ? u : orient[static_cast<std::size_t>(yi++)];
                    if (!diG.hasTuple(tuple)) ++missing;
                }
                if (bestSlot < 0 || missing > bestMissing) {
                    bestSlot = slot;
                    bestY = orient;
                    bestMissing = missing;
                }
            }
        } while (std::next_permutation(orient.begin(), orient.end()));

        out.slot = bestSlot;
        out.Y = bestY;
        out.neighborhood = completionsWithin(bestSlot, bestY);
    } else {
        // complete part empty: scan every directed edge within U for a slot
        // whose completion set is small
        Rational cap = (Rational(1) - Rational(1, static_cast<std::int64_t>(rfact))) * Rational(M);
        std::vector<int> tuple(static_cast<std::size_t>(r));
        bool found = false;
        bool anyEdge = false;
        forEachSubsetOf(M, r, [&](const std::vector<int>& idx) {
            if (found) return;
            std::vector<int> perm(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i)
                perm[static_cast<std::size_t>(i)] = U[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            std::sort(perm.begin(), perm.end());
            do {
                if (!diG.hasTuple(perm)) continue;
                anyEdge = true;
                for (int slot = 0; slot < r && !found; ++slot) {
                    std::vector<int> Y;
                    for (int j = 0; j < r; ++j)
                        if (j != slot) Y.push_back(perm[static_cast<std::size_t>(j)]);
                    auto nbs = completionsWithin(slot, Y);
                    if (!nbs.empty() &&
                        Rational(static_cast<std::int64_t>(nbs.size())) <= cap) {
                        out.slot = slot;
                        out.Y = Y;
                        out.neighborhood = std::move(nbs);
                        found = true;
                    }
                }
                if (found) break;
            } while (std::next_permutation(perm.begin(), perm.end()));
            (void)tuple;
        });
        if (!anyEdge) throwValidation("EmptyHypergraph", "no directed edges within U");
        if (!found) {
            // orientation-closure escalation; on a truly [G]-empty input this
            // can only end in a contradiction
            throwInternal("InternalInconsistency",
                          "every slot of every edge has a near-full completion set "
                          "while the complete part is empty");
        }
    }

    Rational cap = (Rational(1) - gap / Rational(2 * static_cast<std::int64_t>(r) *
                                                 static_cast<std::int64_t>(rfact))) *
                   Rational(M);
    out.boundHeld = !out.neighborhood.empty() &&
                    Rational(static_cast<std::int64_t>(out.neighborhood.size())) <= cap;
    return out;
}

} // namespace

MedDegreeDirResult medDegreeDir(const EdgeStore& diG, const Rational& gap) {
    if (!diG.directed()) throwValidation("BadParameters", "medDegreeDir needs a directed store");
    const int M = diG.N();
    const int r = diG.r();
    if (M < 100 * r)
        throwValidation("BadParameters", "public medDegreeDir requires M >= 100r");
    EdgeStore cp = diG.completePart();
    if (cp.globalDensity() > Rational(1) - gap)
        throwValidation("TooDense", "complete-part density above 1 - alpha");
    bool any = false;
    {
        EdgeList edges = edgesWithinSet(diG, allVerts(M));
        any = !edges.empty();
    }
    if (!any) throwValidation("EmptyHypergraph", "no directed edges");
    return medDegreeDirWithin(diG, cp, allVerts(M), gap);
}

namespace {

// clique-or-empty status of H_i[U]: 0 undetermined (no tuples), 1 clique,
// 2 empty, 3 broken
int homogStatus(const EdgeStore& di, const std::vector<int>& U) {
    const int r = di.r();
    if (static_cast<int>(U.size()) < r) return 0;
    bool sawEdge = false, sawMissing = false;
    std::vector<int> perm(static_cast<std::size_t>(r));
    bool broken = false;
    forEachSubsetOf(static_cast<int>(U.size()), r, [&](const std::vector<int>& idx) {
        if (broken) return;
        for (int i = 0; i < r; ++i)
            perm[static_cast<std::size_t>(i)] = U[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        std::sort(perm.begin(), perm.end());
        do {
            if (di.hasTuple(perm)) sawEdge = true;
            else sawMissing = true;
            if (sawEdge && sawMissing) { broken = true; return; }
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    if (broken) return 3;
    if (sawEdge) return 1;
    if (sawMissing) return 2;
    return 0;
}

std::string renderGrid(const std::vector<std::vector<int>>& s) {
    std::string out = "s=";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += i ? ";" : "[";
        for (std::size_t k = 0; k < s[i].size(); ++k) {
            if (k) out += ",";
            out += std::to_string(s[i][k]);
        }
    }
    return out + "]";
}

} // namespace

HomogeneousResult homogeneousSubset(const AlgebraicInstance& inst, std::uint64_t seed,
                                    std::vector<std::vector<int>> sInit) {
    const int r = inst.r();
    const int m = inst.m();
    const int N = inst.N();
    if (sInit.empty()) {
        int def = static_cast<int>(monomialCount(inst.n(), inst.d())) + 1;
        sInit.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(r), def));
    }
    int sMax = 1;
    for (const auto& row : sInit)
        for (int v : row) sMax = std::max(sMax, v);

    std::vector<EdgeStore> di, cp;
    for (int i = 0; i < m; ++i) {
        di.push_back(EdgeStore::materializeDi(inst, i, 100000000ULL));
        cp.push_back(di.back().completePart());
    }

    HomogeneousResult res;
    res.trace.rngSeed = seed;

    // alpha = 2r*r! * N^{-1/(2rms)}, clamped into dense-clique range
    const double alphaPaper =
        2.0 * r * static_cast<double>(factorialOf(r)) *
        std::pow(static_cast<double>(std::max(N, 2)),
                 -1.0 / (2.0 * r * m * static_cast<double>(sMax)));
    Rational alpha = std::min(snapRational(alphaPaper), Rational(1, 4 * m));
    if (alpha <= Rational(0)) alpha = Rational(1, 4 * m);
    if (snapRational(alphaPaper) > alpha)
        res.trace.notes.push_back("alpha clamped to 1/(4m) for desk-scale extraction");
    res.trace.notes.push_back("alpha=" + alpha.str());

    std::vector<std::vector<int>> s = sInit;
    std::vector<int> U = allVerts(N);
    const int stepCap = 2 * r * m * sMax;
    int level = 0;
    std::uint64_t seedStream = 1;

    while (true) {
        if (level > stepCap)
            throwBudget("StepBudgetExceeded", "homogeneous-subset loop exceeded its step cap");
        std::vector<int> active; // i with H_i[U] nonempty
        for (int i = 0; i < m; ++i) {
            int st = homogStatus(di[static_cast<std::size_t>(i)], U);
            if (st == 1 || st == 3) active.push_back(i);
        }
        if (active.empty()) {
            res.trace.steps.push_back({level, 1, U.size(), renderGrid(s), "n/a"});
            res.U = U;
            break;
        }
        // densities of the complete parts within U
        int sparseIdx = -1;
        for (int i : active) {
            if (cp[static_cast<std::size_t>(i)].densityWithin(U) < Rational(1) - alpha) {
                sparseIdx = i;
                break;
            }
        }
        if (sparseIdx < 0) {
            // Case 2: intersect the complete parts and extract a clique
            res.trace.steps.push_back({level, 2, U.size(), renderGrid(s), "n/a"});
            const int M = static_cast<int>(U.size());
            std::vector<int> tuple(static_cast<std::size_t>(r));
            std::vector<std::vector<int>> relEdges;
            forEachSubsetOf(M, r, [&](const std::vector<int>& idx) {
                for (int i = 0; i < r; ++i)
                    tuple[static_cast<std::size_t>(i)] = U[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                bool all = true;
                for (int i : active)
                    if (!cp[static_cast<std::size_t>(i)].hasTuple(tuple)) { all = false; break; }
                if (all) relEdges.push_back(idx);
            });
            EdgeStore interStore = EdgeStore::fromSets(r, M, relEdges);

            Rational caseGap = alpha * Rational(m);
            std::int64_t mpow = 1;
            for (int i = 0; i < r - 1; ++i) mpow *= std::max(M, 1);
            std::vector<int> rel;
            if (M >= r && caseGap > Rational(1, mpow) && caseGap < Rational(1, 2)) {
                rel = denseClique(interStore, caseGap, Rng::child(seed, seedStream++), nullptr);
            } else {
                rel = maxCliqueExact(interStore).witness;
                res.trace.notes.push_back("case-2 exact-clique fallback on |U|=" +
                                          std::to_string(M));
            }
            std::vector<int> clique;
            for (int idx : rel) clique.push_back(U[static_cast<std::size_t>(idx)]);
            std::sort(clique.begin(), clique.end());
            res.U = clique;
            break;
        }
        // Case 3: shrink via the directed descent on the sparse index
        MedDegreeDirResult md =
            medDegreeDirWithin(di[static_cast<std::size_t>(sparseIdx)],
                               cp[static_cast<std::size_t>(sparseIdx)], U, alpha);
        std::vector<char> drop(static_cast<std::size_t>(N), 0);
        for (int v : md.neighborhood) drop[static_cast<std::size_t>(v)] = 1;
        std::vector<int> next;
        for (int v : U)
            if (!drop[static_cast<std::size_t>(v)]) next.push_back(v);
        res.trace.steps.push_back({level, 3, U.size(), renderGrid(s), "n/a"});
        if (next.size() == U.size())
            throwInternal("InternalInconsistency", "directed descent removed nothing");
        U = std::move(next);
        auto& cell = s[static_cast<std::size_t>(sparseIdx)][static_cast<std::size_t>(md.slot)];
        if (cell > 0) --cell;
        ++level;
    }

    // greedy extension while every H_i[U] stays a clique or empty
    {
        std::vector<char> inU(static_cast<std::size_t>(N), 0);
        for (int v : res.U) inU[static_cast<std::size_t>(v)] = 1;
        for (int v = 0; v < N; ++v) {
            if (inU[static_cast<std::size_t>(v)]) continue;
            std::vector<int> candidate = res.U;
            candidate.push_back(v);
            std::sort(candidate.begin(), candidate.end());
            bool ok = true;
            for (int i = 0; i < m && ok; ++i)
                if (homogStatus(di[static_cast<std::size_t>(i)], candidate) == 3) ok = false;
            if (ok) {
                res.U = candidate;
                inU[static_cast<std::size_t>(v)] = 1;
            }
        }
    }

    for (int i = 0; i < m; ++i)
        if (homogStatus(di[static_cast<std::size_t>(i)], res.U) == 1)
            res.cliqueFor.push_back(i + 1);
    return res;
}

RamseyResult hypergraphRamsey(const AlgebraicInstance& inst, std::uint64_t seed) {
    HomogeneousResult h = homogeneousSubset(inst, seed);
    RamseyResult res;
    res.vertices = h.U;
    res.trace = std::move(h.trace);
    res.boundContext.N = inst.N();
    res.boundContext.gamma = hypergraphGamma(inst);
    if (static_cast<int>(h.U.size()) >= inst.r()) {
        std::vector<int> first(h.U.begin(), h.U.begin() + inst.r());
        res.kind = inst.edgeQuery(first) ? RamseyResult::Kind::Clique
                                         : RamseyResult::Kind::IndependentSet;
    } else {
        res.kind = RamseyResult::Kind::IndependentSet;
    }
    if (inst.r() == 2) res.pattern = h.cliqueFor;
    res.verified = verifyRamseyResult(inst, res).ok;
    return res;
}

SparsePairResult sparsePair(const EdgeStore& G, const Rational& gap, const Rational& crossCap) {
    if (G.r() != 2 || G.directed())
        throwValidation("BadParameters", "sparsePair needs an undirected graph");
    const int N = G.N();
    if (G.globalDensity() > Rational(1) - gap)
        throwValidation("TooDense", "density above 1 - alpha");

    // low-degree set: deg(v) <= (1 - gap/2) N
    std::vector<int> low;
    Rational degCap = (Rational(1) - gap / Rational(2)) * Rational(N);
    for (int v = 0; v < N; ++v)
        if (Rational(static_cast<std::int64_t>(G.adjOut(v).count())) <= degCap) low.push_back(v);
    if (low.empty())
        throwVerification("PostconditionFailed", "low-degree set is empty");

    // greedy separated net over {N(v) : v in low}
    Rational sep = gap * crossCap / Rational(4);
    Rational sepCount = sep * Rational(N);
    std::vector<int> net;
    for (int v : low) {
        bool far = true;
        for (int z : net)
            if (Rational(static_cast<std::int64_t>(
                    G.adjOut(v).symmetricDifferenceCount(G.adjOut(z)))) < sepCount) {
                far = false;
                break;
            }
        if (far) net.push_back(v);
    }
    // densest ball
    int z0 = -1;
    std::size_t ballSize = 0;
    std::vector<int> ball;
    for (int z : net) {
        std::vector<int> b;
        for (int v : low)
            if (Rational(static_cast<std::int64_t>(
                    G.adjOut(v).symmetricDifferenceCount(G.adjOut(z)))) <= sepCount)
                b.push_back(v);
        if (z0 < 0 || b.size() > ballSize) { z0 = z; ballSize = b.size(); ball = std::move(b); }
    }

    SparsePairResult out;
    // trim B to (gap/4) N, lowest indices kept
    Rational bCap = gap * Rational(N) / Rational(4);
    for (int v : ball) {
        if (Rational(static_cast<std::int64_t>(out.B.size()) + 1) > bCap) break;
        out.B.push_back(v);
    }
    std::vector<char> excluded(static_cast<std::size_t>(N), 0);
    for (int v : out.B) excluded[static_cast<std::size_t>(v)] = 1;
    const DynBitset& nz0 = G.adjOut(z0);
    for (int v = 0; v < N; ++v)
        if (!excluded[static_cast<std::size_t>(v)] && !nz0.test(static_cast<std::size_t>(v)))
            out.A.push_back(v);

    if (Rational(static_cast<std::int64_t>(out.A.size())) < gap * Rational(N) / Rational(4))
        throwVerification("PostconditionFailed", "|A| < (alpha/4) N");
    DynBitset aMask(static_cast<std::size_t>(N));
    for (int v : out.A) aMask.set(static_cast<std::size_t>(v));
    Rational crossLimit = crossCap * Rational(static_cast<std::int64_t>(out.A.size()));
    for (int b : out.B) {
        std::size_t deg = G.adjOut(b).intersectionCount(aMask);
        if (Rational(static_cast<std::int64_t>(deg)) > crossLimit)
            throwVerification("PostconditionFailed",
                              "vertex " + std::to_string(b) + " exceeds beta|A| into A");
    }
    return out;
}

WellDirectedResult wellDirectedPair(const EdgeStore& diG, int n, int d, const Rational& gap,
                                    std::uint64_t seed) {
    (void)seed; // extraction is deterministic; the seed names the run in traces
    if (diG.r() != 2 || !diG.directed())
        throwValidation("BadParameters", "wellDirectedPair needs a directed graph");
    const int N = diG.N();
    EdgeStore cp = diG.completePart();
    if (cp.globalDensity() > Rational(1) - gap)
        throwValidation("TooDense", "complete-part density above 1 - alpha");

    std::uint64_t sBound = monomialCount(n, 2 * d) + 1;
    int s = static_cast<int>(std::min<std::uint64_t>(sBound, 1000));
    // beta = 1/(6*3^{2s}), clamped to 1/(4N) at desk scale
    Rational beta(1, std::max(4 * N, 8));
    if (2 * s <= 38) {
        std::int64_t p3 = 1;
        for (int i = 0; i < 2 * s; ++i) p3 *= 3;
        Rational paperBeta(1, 6 * p3 > 0 ? 6 * p3 : INT64_MAX);
        beta = std::max(paperBeta, beta);
    }

    SparsePairResult sp = sparsePair(cp, gap, beta);

    DynBitset aMask(static_cast<std::size_t>(N));
    for (int v : sp.A) aMask.set(static_cast<std::size_t>(v));

    WellDirectedResult out;
    out.crossCap = beta;
    for (int step = 1; step <= 2 * s + 1; ++step) {
        // is every b one-sided on the current A?
        int both = -1;
        for (int b : sp.B) {
            bool outAny = diG.adjOut(b).intersects(aMask);
            bool inAny = diG.adjIn(b).intersects(aMask);
            if (outAny && inAny) { both = b; break; }
        }
        if (both < 0) {
            std::vector<int> s1, s2; // s1: no out-neighbors (direction A->B)
            for (int b : sp.B) {
                if (!diG.adjOut(b).intersects(aMask)) s1.push_back(b);
                else s2.push_back(b);
            }
            out.directionAB = s1.size() >= s2.size();
            out.B = out.directionAB ? s1 : s2;
            out.A = aMask.toIndices();
            out.steps = step - 1;
            // every cross edge respects the direction
            for (int a : out.A)
                for (int b : out.B) {
                    int wrong[2];
                    if (out.directionAB) { wrong[0] = b; wrong[1] = a; }
                    else { wrong[0] = a; wrong[1] = b; }
                    if (diG.hasTuple(wrong))
                        throwVerification("PostconditionFailed",
                                          "edge against the extracted direction");
                }
            return out;
        }
        // remove the smaller side of the two-sided vertex
        DynBitset outN = diG.adjOut(both) & aMask;
        DynBitset inN = diG.adjIn(both) & aMask;
        const DynBitset& kill = outN.count() <= inN.count() ? outN : inN;
        DynBitset killCopy = kill;
        for (std::size_t i = 0; i < killCopy.size(); ++i)
            if (killCopy.test(i)) aMask.reset(i);
        if (!killCopy.any())
            throwInternal("InternalInconsistency", "two-sided vertex with empty sides");
    }
    throwBudget("StepBudgetExceeded", "well-directed elimination exceeded 2s steps");
}

namespace {

struct GraphRamseyCtx {
    const AlgebraicInstance* inst;
    std::vector<EdgeStore> di, cp;
    Rational alpha;
    double gammaPrime = 0;
    std::uint64_t case3Budget = 0;
    std::uint64_t case3Used = 0;
    std::uint64_t seed = 0;
    std::uint64_t seedStream = 0;
    std::vector<TraceStep> steps;
    std::vector<std::string> notes;
    std::optional<RamseyResult> best; // largest verified candidate seen
    bool exhausted = false;
};

bool patternVerified(const AlgebraicInstance& inst, const std::vector<int>& U,
                     const std::vector<int>& pattern) {
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = 0; j < U.size(); ++j) {
            if (i == j) continue;
            int pair[2] = {U[i], U[j]};
            if (inst.nonzeroPattern(pair) != pattern) return false;
        }
    return true;
}

void recordCandidate(GraphRamseyCtx& ctx, const std::vector<int>& U,
                     const std::vector<int>& pattern, bool viaExhaustion) {
    if (!patternVerified(*ctx.inst, U, pattern)) return;
    if (ctx.best && ctx.best->vertices.size() >= U.size()) return;
    RamseyResult res;
    res.vertices = U;
    std::sort(res.vertices.begin(), res.vertices.end());
    res.pattern = pattern;
    std::vector<bool> atoms(static_cast<std::size_t>(ctx.inst->m()), true);
    for (int i : pattern) atoms[static_cast<std::size_t>(i - 1)] = false;
    res.kind = ctx.inst->formula().eval(atoms) ? RamseyResult::Kind::Clique
                                               : RamseyResult::Kind::IndependentSet;
    res.belowBound = viaExhaustion;
    res.verified = true;
    ctx.best = std::move(res);
}

// returns true when a verified candidate was installed on ctx.best by this
// branch (DFS success); trace steps of failed branches are rolled back
bool graphRamseyRec(GraphRamseyCtx& ctx, const std::vector<int>& U, std::vector<int> s,
                    int level) {
    const int m = ctx.inst->m();
    std::vector<int> active;
    for (int i = 0; i < m; ++i)
        if (s[static_cast<std::size_t>(i)] > 1) active.push_back(i);

    auto grid = [&]() {
        std::string out = "s=[";
        for (int i = 0; i < m; ++i) {
            if (i) out += ",";
            out += std::to_string(s[static_cast<std::size_t>(i)]);
        }
        return out + "]";
    };

    if (active.empty()) {
        ctx.steps.push_back({level, 1, U.size(), grid(), "n/a"});
        std::vector<int> emptyPattern;
        if (patternVerified(*ctx.inst, U, emptyPattern)) {
            recordCandidate(ctx, U, emptyPattern, false);
            return true;
        }
        ctx.steps.pop_back();
        return false;
    }

    int sparseIdx = -1;
    for (int i : active)
        if (ctx.cp[static_cast<std::size_t>(i)].densityWithin(U) < Rational(1) - ctx.alpha) {
            sparseIdx = i;
            break;
        }

    if (sparseIdx < 0) {
        // Case 2: clique in the intersection of the complete parts
        ctx.steps.push_back({level, 2, U.size(), grid(), "n/a"});
        const int M = static_cast<int>(U.size());
        std::vector<std::vector<int>> relEdges;
        forEachSubsetOf(M, 2, [&](const std::vector<int>& idx) {
            int pair[2] = {U[static_cast<std::size_t>(idx[0])], U[static_cast<std::size_t>(idx[1])]};
            for (int i : active)
                if (!ctx.cp[static_cast<std::size_t>(i)].hasTuple(pair)) return;
            relEdges.push_back(idx);
        });
        EdgeStore inter = EdgeStore::fromSets(2, std::max(M, 1), relEdges);
        Rational caseGap = ctx.alpha * Rational(m);
        std::vector<int> rel;
        try {
            if (M >= 2 && caseGap > Rational(1, M) && caseGap < Rational(1, 2)) {
                rel = denseClique(inter, caseGap, Rng::child(ctx.seed, ctx.seedStream++), nullptr);
            } else {
                rel = maxCliqueExact(inter).witness;
            }
        } catch (const Error&) {
            rel = maxCliqueExact(inter).witness;
        }
        std::vector<int> clique;
        for (int idx : rel) clique.push_back(U[static_cast<std::size_t>(idx)]);
        std::vector<int> pattern;
        for (int i : active) pattern.push_back(i + 1);
        if (patternVerified(*ctx.inst, clique, pattern)) {
            recordCandidate(ctx, clique, pattern, false);
            return true;
        }
        ctx.steps.pop_back();
        return false;
    }

    // Case 3
    if (ctx.case3Used >= ctx.case3Budget) {
        ctx.exhausted = true;
        return false;
    }
    ++ctx.case3Used;

    WellDirectedResult wd;
    try {
        std::vector<int> sortedU = U;
        std::sort(sortedU.begin(), sortedU.end());
        EdgeStore sub = ctx.di[static_cast<std::size_t>(sparseIdx)].inducedSub(sortedU);
        wd = wellDirectedPair(sub, ctx.inst->n(), ctx.inst->d(), ctx.alpha,
                              Rng::child(ctx.seed, ctx.seedStream++));
        // map relative indices back
        for (auto& v : wd.A) v = sortedU[static_cast<std::size_t>(v)];
        for (auto& v : wd.B) v = sortedU[static_cast<std::size_t>(v)];
    } catch (const Error& e) {
        ctx.notes.push_back(std::string("case-3 extraction failed: ") + e.code());
        return false;
    }

    const int sI = s[static_cast<std::size_t>(sparseIdx)];
    int t = static_cast<int>(std::floor(sI / std::sqrt(static_cast<double>(ctx.inst->n()))));
    t = std::clamp(t, 1, sI - 1);
    int u = sI - t;

    // big jump first: recurse into B with the shrunken cap
    {
        ctx.steps.push_back({level, 3, U.size(), grid(), "big"});
        std::vector<int> s2 = s;
        s2[static_cast<std::size_t>(sparseIdx)] = t;
        std::size_t mark = ctx.steps.size();
        if (graphRamseyRec(ctx, wd.B, s2, level + 1)) return true;
        ctx.steps.resize(mark - 1);
    }
    // small jump: recurse into A
    {
        ctx.steps.push_back({level, 3, U.size(), grid(), "small"});
        std::vector<int> s2 = s;
        s2[static_cast<std::size_t>(sparseIdx)] = u;
        std::size_t mark = ctx.steps.size();
        if (graphRamseyRec(ctx, wd.A, s2, level + 1)) return true;
        ctx.steps.resize(mark - 1);
    }
    return false;
}

} // namespace

RamseyResult graphRamsey(const AlgebraicInstance& inst, const Rational& beta,
                         std::uint64_t seed) {
    if (inst.r() != 2)
        throwUsage("BadMode", "graphRamsey applies to r = 2 instances");
    if (!(beta > Rational(0) && beta < Rational(1)))
        throwValidation("BadParameters", "beta must lie in (0,1)");
    const int N = inst.N();
    const int m = inst.m();

    GraphRamseyCtx ctx;
    ctx.inst = &inst;
    ctx.seed = seed;
    for (int i = 0; i < m; ++i) {
        ctx.di.push_back(EdgeStore::materializeDi(inst, i, 100000000ULL));
        ctx.cp.push_back(ctx.di.back().completePart());
    }
    ctx.gammaPrime = graphGammaPrime(inst.n(), inst.d(), m);
    double alphaPaper = std::pow(static_cast<double>(std::max(N, 2)),
                                 -beta.toDouble() / ctx.gammaPrime);
    ctx.alpha = std::min(snapRational(alphaPaper), Rational(1, 4 * m));
    if (ctx.alpha <= Rational(0)) ctx.alpha = Rational(1, 4 * m);
    if (snapRational(alphaPaper) > ctx.alpha)
        ctx.notes.push_back("alpha clamped to 1/(4m) for desk-scale extraction");
    ctx.notes.push_back("alpha=" + ctx.alpha.str());

    const int s0 = static_cast<int>(monomialCount(inst.n(), inst.d())) + 1;
    double lnS0 = m * std::log(static_cast<double>(s0));
    std::uint64_t aMax, bMax;
    if (inst.n() == 1) {
        aMax = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(std::max(s0 - 1, 1));
        bMax = static_cast<std::uint64_t>(m);
    } else {
        aMax = static_cast<std::uint64_t>(
            std::ceil(2.0 * lnS0 / std::log(static_cast<double>(inst.n()))));
        bMax = static_cast<std::uint64_t>(
            std::ceil(4.0 * std::sqrt(static_cast<double>(inst.n())) * lnS0));
    }
    ctx.case3Budget = 4 * (std::max<std::uint64_t>(aMax, 1) + std::max<std::uint64_t>(bMax, 1));

    std::vector<int> s(static_cast<std::size_t>(m), s0);
    bool found = graphRamseyRec(ctx, allVerts(N), s, 0);

    RamseyResult res;
    if (found || ctx.best) {
        res = *ctx.best;
        res.belowBound = !found;
    } else {
        // smallest honest fallback: a single pair realizes its own pattern
        res.vertices = N >= 2 ? std::vector<int>{0, 1} : std::vector<int>{0};
        if (N >= 2) {
            int pair[2] = {0, 1};
            res.pattern = inst.nonzeroPattern(pair);
        }
        std::vector<bool> atoms(static_cast<std::size_t>(m), true);
        for (int i : res.pattern) atoms[static_cast<std::size_t>(i - 1)] = false;
        res.kind = inst.formula().eval(atoms) ? RamseyResult::Kind::Clique
                                              : RamseyResult::Kind::IndependentSet;
        res.verified = patternVerified(inst, res.vertices, res.pattern);
        res.belowBound = true;
    }
    res.trace.steps = ctx.steps;
    res.trace.rngSeed = seed;
    res.trace.notes = ctx.notes;
    res.boundContext.N = N;
    res.boundContext.gammaPrime = ctx.gammaPrime;
    res.boundContext.alpha = ctx.alpha.toDouble();
    res.boundContext.beta = beta.toDouble();
    res.verified = verifyRamseyResult(inst, res).ok;
    return res;
}

RamseyResult multicolorRamsey(const AlgebraicInstance& inst, const ColorMap& colors,
                              const Rational& beta, std::uint64_t seed) {
    RamseyResult res = graphRamsey(inst, beta, seed);
    std::vector<bool> atoms(static_cast<std::size_t>(inst.m()), true);
    for (int i : res.pattern) atoms[static_cast<std::size_t>(i - 1)] = false;
    res.kind = RamseyResult::Kind::MonochromaticClique;
    res.color = colors.colorOf(atoms);
    res.verified = verifyRamseyResult(inst, res, colors).ok;
    return res;
}

} // namespace agh
