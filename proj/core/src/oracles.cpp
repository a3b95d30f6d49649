#include "agh/oracles.hpp"

#include <algorithm>
#include <bit>

namespace agh {

namespace {

template <typename F>
void forEachSubsetOf(int N, int r, F&& f) {
    if (r > N) return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!f(idx)) return;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - r + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

using U64 = std::uint64_t;

struct GraphBB {
    int N;
    std::vector<U64> adj;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best = 0;
    U64 bestMask = 0;

    // greedy coloring bound over cand in index order
    int colorBound(U64 cand) const {
        int colors = 0;
        while (cand) {
            ++colors;
            U64 cls = cand;
            while (cls) {
                int v = std::countr_zero(cls);
                cand &= ~(U64{1} << v);
                cls &= ~adj[static_cast<std::size_t>(v)];
                cls &= ~(U64{1} << v);
            }
        }
        return colors;
    }

    void expand(U64 clique, int size, U64 cand) {
        if (++nodes > budget)
            throwBudget("BudgetExceeded", "clique search exceeded its node budget");
        if (size > best) { best = size; bestMask = clique; }
        if (!cand) return;
        if (size + std::popcount(cand) <= best) return;
        if (size + colorBound(cand) <= best) return;
        while (cand) {
            int v = std::countr_zero(cand);
            U64 bit = U64{1} << v;
            cand &= ~bit;
            if (size + 1 + std::popcount(cand & adj[static_cast<std::size_t>(v)]) <= best)
                continue;
            expand(clique | bit, size + 1, cand & adj[static_cast<std::size_t>(v)]);
        }
    }
};

ExactResult graphCliqueExact(const EdgeStore& H, std::uint64_t budget, bool reverseOrder) {
    const int N = H.N();
    if (N > 64) throwBudget("BudgetExceeded", "graph clique oracle capped at N = 64");
    std::vector<int> order(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        order[static_cast<std::size_t>(i)] = reverseOrder ? N - 1 - i : i;

    GraphBB bb;
    bb.N = N;
    bb.budget = budget;
    bb.adj.assign(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            int a = order[static_cast<std::size_t>(i)], b = order[static_cast<std::size_t>(j)];
            int pair[2] = {a, b};
            if (H.hasTuple(pair)) bb.adj[static_cast<std::size_t>(i)] |= (U64{1} << j);
        }
    U64 full = N == 64 ? ~U64{0} : ((U64{1} << N) - 1);
    bb.expand(0, 0, full);

    ExactResult res;
    res.size = bb.best;
    res.nodes = bb.nodes;
    for (int i = 0; i < N; ++i)
        if (bb.bestMask & (U64{1} << i)) res.witness.push_back(order[static_cast<std::size_t>(i)]);
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

ExactResult hyperCliqueExact(const EdgeStore& H, std::uint64_t budget) {
    const int N = H.N();
    const int r = H.r();
    if (N > 30) throwBudget("BudgetExceeded", "hypergraph clique oracle capped at N = 30");
    ExactResult res;
    std::vector<int> cur;
    std::vector<int> tuple(static_cast<std::size_t>(r));

    auto extendable = [&](int v) {
        if (static_cast<int>(cur.size()) < r - 1) return true;
        bool ok = true;
        forEachSubsetOf(static_cast<int>(cur.size()), r - 1, [&](const std::vector<int>& idx) {
            for (int i = 0; i < r - 1; ++i)
                tuple[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            tuple[static_cast<std::size_t>(r) - 1] = v;
            std::sort(tuple.begin(), tuple.end());
            if (!H.hasTuple(tuple)) { ok = false; return false; }
            return true;
        });
        return ok;
    };

    auto dfs = [&](auto&& self, int start) -> void {
        if (++res.nodes > budget)
            throwBudget("BudgetExceeded", "clique search exceeded its node budget");
        if (static_cast<int>(cur.size()) > res.size) {
            res.size = static_cast<int>(cur.size());
            res.witness = cur;
        }
        if (static_cast<int>(cur.size()) + (N - start) <= res.size) return;
        for (int v = start; v < N; ++v) {
            if (!extendable(v)) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return res;
}

EdgeStore hyperComplement(const EdgeStore& H) {
    const int N = H.N();
    const int r = H.r();
    std::vector<std::vector<int>> nonEdges;
    forEachSubsetOf(N, r, [&](const std::vector<int>& idx) {
        if (!H.hasTuple(idx)) nonEdges.push_back(idx);
        return true;
    });
    return EdgeStore::fromSets(r, N, nonEdges);
}

} // namespace

ExactResult maxCliqueExact(const EdgeStore& H, std::uint64_t budget, bool reverseOrder) {
    if (H.directed()) throwValidation("BadParameters", "clique oracle needs an undirected store");
    if (H.N() < H.r()) { // no r-subsets: everything is vacuously a clique
        ExactResult all;
        all.size = H.N();
        for (int v = 0; v < H.N(); ++v) all.witness.push_back(v);
        return all;
    }
    if (H.r() == 2) return graphCliqueExact(H, budget, reverseOrder);
    if (reverseOrder) {
        // same search on reversed vertex labels; sizes must agree
        std::vector<int> rev(static_cast<std::size_t>(H.N()));
        for (int i = 0; i < H.N(); ++i) rev[static_cast<std::size_t>(i)] = H.N() - 1 - i;
        EdgeStore flipped = H.inducedSub(rev);
        ExactResult r2 = hyperCliqueExact(flipped, budget);
        for (auto& v : r2.witness) v = H.N() - 1 - v;
        std::sort(r2.witness.begin(), r2.witness.end());
        return r2;
    }
    return hyperCliqueExact(H, budget);
}

ExactResult maxIndependentExact(const EdgeStore& H, std::uint64_t budget, bool reverseOrder) {
    if (H.directed()) throwValidation("BadParameters", "IS oracle needs an undirected store");
    if (H.N() < H.r()) {
        ExactResult all;
        all.size = H.N();
        for (int v = 0; v < H.N(); ++v) all.witness.push_back(v);
        return all;
    }
    EdgeStore comp = H.r() == 2 ? H.complement() : hyperComplement(H);
    return maxCliqueExact(comp, budget, reverseOrder);
}

BicliqueResult maxBalancedBicliqueExact(const EdgeStore& G, std::uint64_t budget) {
    if (G.r() != 2 || G.directed())
        throwValidation("BadParameters", "bi-clique oracle needs an undirected graph");
    const int N = G.N();
    if (N > 36) throwBudget("BudgetExceeded", "bi-clique oracle capped at N = 36");

    std::vector<U64> adj(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (i != j) {
                int pair[2] = {i, j};
                if (G.hasTuple(pair)) adj[static_cast<std::size_t>(i)] |= (U64{1} << j);
            }
    U64 full = (U64{1} << N) - 1;

    BicliqueResult res;
    U64 bestA = 0, bestB = 0;

    auto dfs = [&](auto&& self, U64 A, int sizeA, U64 common, int start) -> void {
        if (++res.nodes > budget)
            throwBudget("BudgetExceeded", "bi-clique search exceeded its node budget");
        U64 pool = common & ~A;
        int t = std::min(sizeA, std::popcount(pool));
        if (t > res.t) {
            res.t = t;
            bestA = A;
            bestB = 0;
            int take = t;
            U64 p = pool;
            while (take--) {
                int v = std::countr_zero(p);
                bestB |= (U64{1} << v);
                p &= ~(U64{1} << v);
            }
        }
        int maxA = sizeA + (N - start);
        if (std::min(maxA, std::popcount(pool)) <= res.t) return;
        for (int v = start; v < N; ++v) {
            U64 bit = U64{1} << v;
            self(self, A | bit, sizeA + 1, common & adj[static_cast<std::size_t>(v)], v + 1);
        }
    };
    dfs(dfs, 0, 0, full, 0);

    for (int v = 0; v < N; ++v) {
        if (bestA & (U64{1} << v)) res.sideA.push_back(v);
        if (bestB & (U64{1} << v)) res.sideB.push_back(v);
    }
    res.sideB.resize(static_cast<std::size_t>(res.t));
    return res;
}

namespace {

std::string tupleStr(std::span<const int> t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

VerifyResult fail(const std::string& detail) { return {false, detail}; }

VerifyResult verifyClique(const AlgebraicInstance& inst, const std::vector<int>& vs, bool wantEdges) {
    const int r = inst.r();
    if (static_cast<int>(vs.size()) < r) return {true, {}};
    std::vector<int> tuple(static_cast<std::size_t>(r));
    VerifyResult out{true, {}};
    forEachSubsetOf(static_cast<int>(vs.size()), r, [&](const std::vector<int>& idx) {
        for (int i = 0; i < r; ++i)
            tuple[static_cast<std::size_t>(i)] = vs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (inst.edgeQuery(tuple) != wantEdges) {
            out = fail(std::string(wantEdges ? "missing edge " : "unexpected edge ") + tupleStr(tuple));
            return false;
        }
        return true;
    });
    return out;
}

} // namespace

VerifyResult verifyWitness(const AlgebraicInstance& inst, const Witness& w,
                           const std::optional<ColorMap>& colors) {
    switch (w.kind) {
    case Witness::Kind::Clique:
        return verifyClique(inst, w.vertices, true);
    case Witness::Kind::IndependentSet:
        return verifyClique(inst, w.vertices, false);
    case Witness::Kind::Biclique: {
        if (inst.r() != 2) return fail("bi-clique witness on a non-graph instance");
        if (w.sideA.size() != w.sideB.size()) return fail("|A| != |B|");
        for (int a : w.sideA)
            for (int b : w.sideB) {
                if (a == b) return fail("sides overlap at " + std::to_string(a));
                int pair[2] = {a, b};
                if (!inst.edgeQuery(pair)) return fail("missing cross edge " + tupleStr(pair));
            }
        return {true, {}};
    }
    case Witness::Kind::WellDirected: {
        if (inst.r() != 2) return fail("well-directed witness on a non-graph instance");
        for (int a : w.sideA)
            for (int b : w.sideB) {
                if (a == b) return fail("sides overlap at " + std::to_string(a));
                int wrongWay[2];
                if (w.directionAB) { wrongWay[0] = b; wrongWay[1] = a; }
                else { wrongWay[0] = a; wrongWay[1] = b; }
                if (inst.diEdge(w.diPolyIdx, wrongWay))
                    return fail("edge against declared direction " + tupleStr(wrongWay));
            }
        return {true, {}};
    }
    case Witness::Kind::MPattern: {
        const int r = inst.r();
        const int k = w.coordinate;
        auto assemble = [&](const std::vector<int>& U, int z, std::vector<int>& tuple) {
            tuple.resize(static_cast<std::size_t>(r));
            int ui = 0;
            for (int j = 0; j < r; ++j)
                tuple[static_cast<std::size_t>(j)] = (j == k) ? z : U[static_cast<std::size_t>(ui++)];
        };
        std::vector<int> tuple;
        for (std::size_t i = 0; i < w.rows.size(); ++i) {
            assemble(w.rows[i].first, w.rows[i].second, tuple);
            if (!inst.diEdge(w.diPolyIdx, tuple))
                return fail("diagonal tuple not an edge: " + tupleStr(tuple));
            for (std::size_t i2 = i + 1; i2 < w.rows.size(); ++i2) {
                assemble(w.rows[i].first, w.rows[i2].second, tuple);
                if (inst.diEdge(w.diPolyIdx, tuple))
                    return fail("above-diagonal tuple is an edge: " + tupleStr(tuple));
            }
        }
        return {true, {}};
    }
    case Witness::Kind::NPattern: {
        const int r = inst.r();
        const int s = static_cast<int>(w.labeledEdges.size());
        std::vector<char> used(static_cast<std::size_t>(inst.N()), 0);
        for (const auto& e : w.labeledEdges) {
            if (!inst.edgeQuery(e)) return fail("row is not an edge: " + tupleStr(e));
            for (int v : e) {
                if (used[static_cast<std::size_t>(v)])
                    return fail("rows are not disjoint at " + std::to_string(v));
                used[static_cast<std::size_t>(v)] = 1;
            }
        }
        // all injective row assignments to positions must give non-edges
        std::vector<int> rowAt(static_cast<std::size_t>(r));
        std::vector<char> rowUsed(static_cast<std::size_t>(s), 0);
        std::vector<int> tuple(static_cast<std::size_t>(r));
        VerifyResult out{true, {}};
        auto rec = [&](auto&& self, int pos) -> bool {
            if (pos == r) {
                for (int j = 0; j < r; ++j)
                    tuple[static_cast<std::size_t>(j)] =
                        w.labeledEdges[static_cast<std::size_t>(rowAt[static_cast<std::size_t>(j)])]
                                      [static_cast<std::size_t>(j)];
                if (inst.edgeQuery(tuple)) {
                    out = fail("transversal is an edge: " + tupleStr(tuple));
                    return false;
                }
                return true;
            }
            for (int ri = 0; ri < s; ++ri) {
                if (rowUsed[static_cast<std::size_t>(ri)]) continue;
                rowAt[static_cast<std::size_t>(pos)] = ri;
                rowUsed[static_cast<std::size_t>(ri)] = 1;
                bool keep = self(self, pos + 1);
                rowUsed[static_cast<std::size_t>(ri)] = 0;
                if (!keep) return false;
            }
            return true;
        };
        if (s >= r) rec(rec, 0);
        return out;
    }
    case Witness::Kind::FocusedM: {
        const int r = inst.r();
        if (w.rows.empty()) return fail("empty focused witness");
        std::vector<int> partOf(static_cast<std::size_t>(inst.N()), -1);
        for (std::size_t p = 0; p < w.parts.size(); ++p)
            for (int v : w.parts[p]) partOf[static_cast<std::size_t>(v)] = static_cast<int>(p);
        int focus = partOf[static_cast<std::size_t>(w.rows[0].second)];
        if (focus < 0) return fail("apex outside every part");
        std::vector<int> tuple(static_cast<std::size_t>(r));
        for (std::size_t i = 0; i < w.rows.size(); ++i) {
            const auto& [Z, z] = w.rows[i];
            if (partOf[static_cast<std::size_t>(z)] != focus)
                return fail("apexes not in one part");
            std::vector<char> seen(w.parts.size(), 0);
            seen[static_cast<std::size_t>(focus)] = 1;
            for (int v : Z) {
                int pv = partOf[static_cast<std::size_t>(v)];
                if (pv < 0 || seen[static_cast<std::size_t>(pv)])
                    return fail("row edge not rainbow across parts");
                seen[static_cast<std::size_t>(pv)] = 1;
            }
            std::copy(Z.begin(), Z.end(), tuple.begin());
            tuple[static_cast<std::size_t>(r) - 1] = z;
            if (!inst.edgeQuery(tuple)) return fail("row set not an edge: " + tupleStr(tuple));
            for (std::size_t j = i + 1; j < w.rows.size(); ++j) {
                std::copy(Z.begin(), Z.end(), tuple.begin());
                tuple[static_cast<std::size_t>(r) - 1] = w.rows[j].second;
                if (inst.edgeQuery(tuple))
                    return fail("forbidden row/apex pair is an edge: " + tupleStr(tuple));
            }
        }
        return {true, {}};
    }
    case Witness::Kind::Monochromatic: {
        if (inst.r() != 2) return fail("monochromatic witness on a non-graph instance");
        if (!w.color) return fail("monochromatic witness without a color");
        ColorMap cm = colors.value_or(ColorMap{});
        for (std::size_t i = 0; i < w.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
                int pair[2] = {w.vertices[i], w.vertices[j]};
                int c = cm.colorOf(inst.atomsAt(pair));
                if (c != *w.color)
                    return fail("pair " + tupleStr(pair) + " has color " + std::to_string(c));
            }
        return {true, {}};
    }
    }
    return fail("unknown witness kind");
}

VerifyResult verifyRamseyResult(const AlgebraicInstance& inst, const RamseyResult& res,
                                const std::optional<ColorMap>& colors) {
    // the pattern claim: every ordered pair inside the set realizes exactly I
    if (!res.pattern.empty() || inst.r() == 2) {
        if (inst.r() == 2 && !res.vertices.empty()) {
            for (std::size_t i = 0; i < res.vertices.size(); ++i)
                for (std::size_t j = 0; j < res.vertices.size(); ++j) {
                    if (i == j) continue;
                    int pair[2] = {res.vertices[i], res.vertices[j]};
                    if (inst.nonzeroPattern(pair) != res.pattern)
                        return fail("pair " + tupleStr(pair) + " deviates from pattern");
                }
        }
    }
    switch (res.kind) {
    case RamseyResult::Kind::Clique:
        return verifyClique(inst, res.vertices, true);
    case RamseyResult::Kind::IndependentSet:
        return verifyClique(inst, res.vertices, false);
    case RamseyResult::Kind::MonochromaticClique: {
        Witness w;
        w.kind = Witness::Kind::Monochromatic;
        w.vertices = res.vertices;
        w.color = res.color;
        return verifyWitness(inst, w, colors);
    }
    }
    return fail("unknown result kind");
}

} // namespace agh
