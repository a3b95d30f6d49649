#include "agh/forbidden.hpp"

#include <algorithm>

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

struct MRow {
    std::vector<int> U; // positions [r] \ {k}, in increasing position order
    int z;              // position k
};

} // namespace

PatternSearchResult findMMember(const EdgeStore& diH, int s, int k, std::uint64_t budget) {
    if (!diH.directed()) throwValidation("BadParameters", "M(r,s,k) search needs a directed store");
    const int r = diH.r();
    const int N = diH.N();
    if (k < 0 || k >= r) throwValidation("BadParameters", "coordinate k out of range");
    if (s < 1) throwValidation("BadParameters", "s must be >= 1");

    // candidate rows = directed edges decomposed at slot k, in lex tuple order
    std::vector<MRow> rows;
    {
        std::vector<int> tuple(static_cast<std::size_t>(r));
        forEachSubsetOf(N, r, [&](const std::vector<int>& idx) {
            std::vector<int> perm = idx;
            std::sort(perm.begin(), perm.end());
            do {
                if (!diH.hasTuple(perm)) continue;
                MRow row;
                row.z = perm[static_cast<std::size_t>(k)];
                for (int j = 0; j < r; ++j)
                    if (j != k) row.U.push_back(perm[static_cast<std::size_t>(j)]);
                rows.push_back(std::move(row));
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
        std::sort(rows.begin(), rows.end(), [](const MRow& a, const MRow& b) {
            return std::tie(a.U, a.z) < std::tie(b.U, b.z);
        });
    }

    PatternSearchResult res;
    std::vector<int> chosen;
    std::vector<int> probe(static_cast<std::size_t>(r));
    bool budgetHit = false;

    auto assemble = [&](const std::vector<int>& U, int z) {
        int ui = 0;
        for (int j = 0; j < r; ++j)
            probe[static_cast<std::size_t>(j)] = (j == k) ? z : U[static_cast<std::size_t>(ui++)];
    };

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == s) return true;
        for (std::size_t c = 0; c < rows.size(); ++c) {
            if (++res.nodes > budget) { budgetHit = true; return false; }
            const MRow& cand = rows[c];
            bool ok = true;
            for (int prev : chosen) {
                const MRow& pr = rows[static_cast<std::size_t>(prev)];
                // X_{i,t} must be a valid tuple and a non-edge for i < t
                if (std::find(pr.U.begin(), pr.U.end(), cand.z) != pr.U.end()) { ok = false; break; }
                assemble(pr.U, cand.z);
                if (diH.hasTuple(probe)) { ok = false; break; }
            }
            if (!ok) continue;
            chosen.push_back(static_cast<int>(c));
            if (self(self, depth + 1)) return true;
            chosen.pop_back();
            if (budgetHit) return false;
        }
        return false;
    };

    bool found = dfs(dfs, 0);
    if (found) {
        Witness w;
        w.kind = Witness::Kind::MPattern;
        w.coordinate = k;
        for (int c : chosen)
            w.rows.emplace_back(rows[static_cast<std::size_t>(c)].U,
                                rows[static_cast<std::size_t>(c)].z);
        res.outcome = SearchOutcome::Found;
        res.witness = std::move(w);
    } else {
        res.outcome = budgetHit ? SearchOutcome::NoneBudget : SearchOutcome::NoneExhausted;
    }
    return res;
}

PatternSearchResult findNMember(const EdgeStore& H, int s, std::uint64_t budget) {
    if (H.directed()) throwValidation("BadParameters", "N_{r,s} search needs an undirected store");
    const int r = H.r();
    const int N = H.N();
    if (s < 1) throwValidation("BadParameters", "s must be >= 1");

    std::vector<std::vector<int>> edges; // sorted vertex lists, lex order
    forEachSubsetOf(N, r, [&](const std::vector<int>& idx) {
        if (H.hasTuple(idx)) edges.push_back(idx);
    });

    PatternSearchResult res;
    std::vector<std::vector<int>> labeled; // chosen rows, u_{i,0..r-1}
    std::vector<char> used(static_cast<std::size_t>(N), 0);
    std::vector<int> probe(static_cast<std::size_t>(r));
    bool budgetHit = false;

    // all new transversals created by appending `row`: position j reads the
    // row assigned to it; injective over distinct rows, must include the new one
    auto transversalsOk = [&](const std::vector<int>& row) {
        const int t = static_cast<int>(labeled.size()); // new row index
        if (t + 1 < r) return true;                     // not enough rows yet
        std::vector<int> slotRow(static_cast<std::size_t>(r));
        std::vector<char> rowUsed(static_cast<std::size_t>(t) + 1, 0);
        auto rec = [&](auto&& self, int pos) -> bool {
            if (pos == r) {
                for (int j = 0; j < r; ++j) {
                    int ri = slotRow[static_cast<std::size_t>(j)];
                    probe[static_cast<std::size_t>(j)] =
                        ri == t ? row[static_cast<std::size_t>(j)]
                                : labeled[static_cast<std::size_t>(ri)][static_cast<std::size_t>(j)];
                }
                return !H.hasTuple(probe); // transversal must be a non-edge
            }
            for (int ri = 0; ri <= t; ++ri) {
                if (rowUsed[static_cast<std::size_t>(ri)]) continue;
                slotRow[static_cast<std::size_t>(pos)] = ri;
                rowUsed[static_cast<std::size_t>(ri)] = 1;
                bool ok = self(self, pos + 1);
                rowUsed[static_cast<std::size_t>(ri)] = 0;
                if (!ok) return false;
            }
            return true;
        };
        // require the new row in the image: check all injections, skipping
        // those that avoid row t entirely (they were checked earlier)
        auto recWithT = [&](auto&& self, int pos, bool tUsed) -> bool {
            if (pos == r) {
                if (!tUsed) return true;
                for (int j = 0; j < r; ++j) {
                    int ri = slotRow[static_cast<std::size_t>(j)];
                    probe[static_cast<std::size_t>(j)] =
                        ri == t ? row[static_cast<std::size_t>(j)]
                                : labeled[static_cast<std::size_t>(ri)][static_cast<std::size_t>(j)];
                }
                return !H.hasTuple(probe);
            }
            for (int ri = 0; ri <= t; ++ri) {
                if (rowUsed[static_cast<std::size_t>(ri)]) continue;
                slotRow[static_cast<std::size_t>(pos)] = ri;
                rowUsed[static_cast<std::size_t>(ri)] = 1;
                bool ok = self(self, pos + 1, tUsed || ri == t);
                rowUsed[static_cast<std::size_t>(ri)] = 0;
                if (!ok) return false;
            }
            return true;
        };
        (void)rec;
        return recWithT(recWithT, 0, false);
    };

    auto dfs = [&](auto&& self, int depth, std::size_t firstEdge) -> bool {
        if (depth == s) return true;
        for (std::size_t e = firstEdge; e < edges.size(); ++e) {
            const auto& edge = edges[e];
            bool clash = false;
            for (int v : edge)
                if (used[static_cast<std::size_t>(v)]) { clash = true; break; }
            if (clash) continue;
            // row-permutation symmetry: rows ordered by least vertex, and
            // edges are lex-sorted so their index order matches that
            std::vector<int> lab = edge;
            bool first = true;
            do {
                if (depth == 0 && !first) break; // global position symmetry
                first = false;
                if (++res.nodes > budget) { budgetHit = true; return false; }
                if (!transversalsOk(lab)) continue;
                labeled.push_back(lab);
                for (int v : edge) used[static_cast<std::size_t>(v)] = 1;
                if (self(self, depth + 1, e + 1)) return true;
                labeled.pop_back();
                for (int v : edge) used[static_cast<std::size_t>(v)] = 0;
                if (budgetHit) return false;
            } while (std::next_permutation(lab.begin(), lab.end()));
        }
        return false;
    };

    bool found = dfs(dfs, 0, 0);
    if (found) {
        Witness w;
        w.kind = Witness::Kind::NPattern;
        w.labeledEdges = labeled;
        res.outcome = SearchOutcome::Found;
        res.witness = std::move(w);
    } else {
        res.outcome = budgetHit ? SearchOutcome::NoneBudget : SearchOutcome::NoneExhausted;
    }
    return res;
}

PatternSearchResult findFocusedM(const EdgeStore& H,
                                 const std::vector<std::vector<int>>& parts, int s,
                                 std::uint64_t budget) {
    if (H.directed()) throwValidation("BadParameters", "focused search needs an undirected store");
    const int r = H.r();
    const int N = H.N();
    validateParts(parts, N);

    std::vector<int> partOf(static_cast<std::size_t>(N), -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) partOf[static_cast<std::size_t>(v)] = static_cast<int>(p);

    // rows grouped by focus part: (Z sorted, z) with Z ∪ {z} an edge,
    // z in the focus part, Z rainbow over r-1 distinct other parts
    struct Row { std::vector<int> Z; int z; };
    std::vector<std::vector<Row>> rowsByPart(parts.size());
    forEachSubsetOf(N, r, [&](const std::vector<int>& idx) {
        if (!H.hasTuple(idx)) return;
        // the edge must be rainbow for some split; try each vertex as apex
        for (int zi = 0; zi < r; ++zi) {
            int z = idx[static_cast<std::size_t>(zi)];
            int zPart = partOf[static_cast<std::size_t>(z)];
            if (zPart < 0) continue;
            std::vector<int> Z;
            std::vector<char> seenPart(parts.size(), 0);
            seenPart[static_cast<std::size_t>(zPart)] = 1;
            bool rainbow = true;
            for (int j = 0; j < r; ++j) {
                if (j == zi) continue;
                int v = idx[static_cast<std::size_t>(j)];
                int pv = partOf[static_cast<std::size_t>(v)];
                if (pv < 0 || seenPart[static_cast<std::size_t>(pv)]) { rainbow = false; break; }
                seenPart[static_cast<std::size_t>(pv)] = 1;
                Z.push_back(v);
            }
            if (rainbow) rowsByPart[static_cast<std::size_t>(zPart)].push_back({std::move(Z), z});
        }
    });

    PatternSearchResult res;
    std::vector<int> probe(static_cast<std::size_t>(r));
    bool budgetHit = false;

    for (std::size_t focus = 0; focus < parts.size(); ++focus) {
        auto& rows = rowsByPart[focus];
        std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
            return std::tie(a.Z, a.z) < std::tie(b.Z, b.z);
        });
        std::vector<int> chosen;
        auto dfs = [&](auto&& self, int depth) -> bool {
            if (depth == s) return true;
            for (std::size_t c = 0; c < rows.size(); ++c) {
                if (++res.nodes > budget) { budgetHit = true; return false; }
                const Row& cand = rows[c];
                bool ok = true;
                for (int prev : chosen) {
                    const Row& pr = rows[static_cast<std::size_t>(prev)];
                    // Z_i ∪ {z_t} non-edge for i < t (z_t is outside Z_i's parts)
                    std::copy(pr.Z.begin(), pr.Z.end(), probe.begin());
                    probe[static_cast<std::size_t>(r) - 1] = cand.z;
                    if (H.hasSet(probe)) { ok = false; break; }
                }
                if (!ok) continue;
                chosen.push_back(static_cast<int>(c));
                if (self(self, depth + 1)) return true;
                chosen.pop_back();
                if (budgetHit) return false;
            }
            return false;
        };
        if (dfs(dfs, 0)) {
            Witness w;
            w.kind = Witness::Kind::FocusedM;
            w.parts = parts;
            for (int c : chosen)
                w.rows.emplace_back(rows[static_cast<std::size_t>(c)].Z,
                                    rows[static_cast<std::size_t>(c)].z);
            res.outcome = SearchOutcome::Found;
            res.witness = std::move(w);
            return res;
        }
        if (budgetHit) break;
    }
    res.outcome = budgetHit ? SearchOutcome::NoneBudget : SearchOutcome::NoneExhausted;
    return res;
}

} // namespace agh
