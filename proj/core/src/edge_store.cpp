#include "agh/edge_store.hpp"

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

std::uint64_t orderedTupleCount(int N, int r) {
    std::uint64_t c = 1;
    for (int i = 0; i < r; ++i) c *= static_cast<std::uint64_t>(N - i);
    return c;
}

} // namespace

void validateParts(const std::vector<std::vector<int>>& parts, int N) {
    std::vector<char> seen(static_cast<std::size_t>(N), 0);
    for (const auto& part : parts) {
        if (part.empty()) throwValidation("EmptyPart", "density query with an empty part");
        for (int v : part) {
            if (v < 0 || v >= N) throwValidation("BadParameters", "part index out of range");
            if (seen[static_cast<std::size_t>(v)])
                throwValidation("OverlappingParts", "parts must be disjoint");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
}

void EdgeStore::init(int r, int N, bool directed) {
    r_ = r; N_ = N; directed_ = directed;
    if (r == 2) {
        rows_.assign(static_cast<std::size_t>(N), DynBitset(static_cast<std::size_t>(N)));
    } else if (r == 3) {
        cube_ = DynBitset(static_cast<std::size_t>(N) * N * N);
    }
    edgeCount_ = 0;
}

void EdgeStore::checkTuple(std::span<const int> tuple) const {
    if (tuple.size() != static_cast<std::size_t>(r_))
        throwValidation("ArityMismatch", "tuple arity differs from store rank");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= N_)
            throwValidation("BadParameters", "vertex index out of range");
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j])
                throwValidation("RepeatedVertexInTuple", "tuple entries must be distinct");
    }
}

std::size_t EdgeStore::flatIndex(std::span<const int> tuple) const {
    std::size_t idx = 0;
    for (auto v : tuple) idx = idx * static_cast<std::size_t>(N_) + static_cast<std::size_t>(v);
    return idx;
}

void EdgeStore::addTupleUnchecked(std::span<const int> tuple) {
    if (r_ == 2) {
        if (!rows_[static_cast<std::size_t>(tuple[0])].test(static_cast<std::size_t>(tuple[1]))) {
            rows_[static_cast<std::size_t>(tuple[0])].set(static_cast<std::size_t>(tuple[1]));
            ++edgeCount_;
        }
    } else if (r_ == 3) {
        std::size_t f = flatIndex(tuple);
        if (!cube_.test(f)) { cube_.set(f); ++edgeCount_; }
    } else {
        tuples_.emplace_back(tuple.begin(), tuple.end());
        ++edgeCount_;
    }
}

void EdgeStore::setAllOrderings(std::span<const int> set) {
    std::vector<int> perm(set.begin(), set.end());
    std::sort(perm.begin(), perm.end());
    do {
        addTupleUnchecked(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

EdgeStore EdgeStore::materialize(const AlgebraicInstance& inst, std::uint64_t budget) {
    const int N = inst.N();
    const int r = inst.r();
    std::uint64_t need = N >= r ? binomial(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(r)) : 0;
    if (need > budget)
        throwBudget("BudgetExceeded",
                    "materialize needs " + std::to_string(need) + " evaluations, budget " +
                        std::to_string(budget));
    EdgeStore s;
    s.init(r, N, false);
    std::uint64_t sets = 0;
    forEachSubsetOf(N, r, [&](const std::vector<int>& idx) {
        ++sets;
        if (inst.edgeQuery(idx)) s.setAllOrderings(idx);
    });
    if (r <= 3) {
        // ordered bitset counted every orientation; store unordered count
        std::uint64_t fact = 1;
        for (int i = 2; i <= r; ++i) fact *= static_cast<std::uint64_t>(i);
        s.edgeCount_ /= fact;
    } else {
        std::sort(s.tuples_.begin(), s.tuples_.end());
        std::uint64_t fact = 1;
        for (int i = 2; i <= r; ++i) fact *= static_cast<std::uint64_t>(i);
        s.edgeCount_ /= fact;
    }
    return s;
}

EdgeStore EdgeStore::materializeDi(const AlgebraicInstance& inst, int polyIdx,
                                   std::uint64_t budget) {
    const int N = inst.N();
    const int r = inst.r();
    std::uint64_t need = N >= r ? orderedTupleCount(N, r) : 0;
    if (need > budget)
        throwBudget("BudgetExceeded",
                    "materializeDi needs " + std::to_string(need) + " evaluations, budget " +
                        std::to_string(budget));
    EdgeStore s;
    s.init(r, N, true);
    forEachSubsetOf(N, r, [&](const std::vector<int>& idx) {
        std::vector<int> perm = idx;
        do {
            if (inst.diEdge(polyIdx, perm)) s.addTupleUnchecked(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    if (r >= 4) std::sort(s.tuples_.begin(), s.tuples_.end());
    return s;
}

EdgeStore EdgeStore::fromSets(int r, int N, const std::vector<std::vector<int>>& sets) {
    EdgeStore s;
    s.init(r, N, false);
    for (const auto& e : sets) {
        s.checkTuple(e);
        s.setAllOrderings(e);
    }
    std::uint64_t fact = 1;
    for (int i = 2; i <= r; ++i) fact *= static_cast<std::uint64_t>(i);
    if (r >= 4) {
        std::sort(s.tuples_.begin(), s.tuples_.end());
        s.tuples_.erase(std::unique(s.tuples_.begin(), s.tuples_.end()), s.tuples_.end());
        s.edgeCount_ = s.tuples_.size() / fact;
    } else {
        s.edgeCount_ /= fact;
    }
    return s;
}

EdgeStore EdgeStore::fromTuples(int r, int N, const std::vector<std::vector<int>>& tuples) {
    EdgeStore s;
    s.init(r, N, true);
    for (const auto& t : tuples) {
        s.checkTuple(t);
        s.addTupleUnchecked(t);
    }
    if (r >= 4) {
        std::sort(s.tuples_.begin(), s.tuples_.end());
        s.tuples_.erase(std::unique(s.tuples_.begin(), s.tuples_.end()), s.tuples_.end());
        s.edgeCount_ = s.tuples_.size();
    }
    return s;
}

EdgeStore EdgeStore::completeGraph(int N) {
    EdgeStore s;
    s.init(2, N, false);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (i != j) s.rows_[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
    s.edgeCount_ = static_cast<std::uint64_t>(N) * (N - 1) / 2;
    return s;
}

EdgeStore EdgeStore::empty(int r, int N, bool directed) {
    EdgeStore s;
    s.init(r, N, directed);
    return s;
}

bool EdgeStore::hasTuple(std::span<const int> tuple) const {
    checkTuple(tuple);
    if (r_ == 2) return rows_[static_cast<std::size_t>(tuple[0])].test(static_cast<std::size_t>(tuple[1]));
    if (r_ == 3) return cube_.test(flatIndex(tuple));
    if (directed_)
        return std::binary_search(tuples_.begin(), tuples_.end(),
                                  std::vector<int>(tuple.begin(), tuple.end()));
    std::vector<int> key(tuple.begin(), tuple.end());
    std::sort(key.begin(), key.end());
    return std::binary_search(tuples_.begin(), tuples_.end(), key);
}

bool EdgeStore::hasSet(std::span<const int> set) const {
    if (directed_)
        throwInternal("DirectedSetQuery", "hasSet applies to undirected stores");
    std::vector<int> key(set.begin(), set.end());
    std::sort(key.begin(), key.end());
    return hasTuple(key);
}

std::uint64_t EdgeStore::edgeCount() const { return edgeCount_; }

EdgeStore EdgeStore::completePart() const {
    if (!directed_) throwInternal("NotDirected", "completePart needs a directed store");
    EdgeStore out;
    out.init(r_, N_, false);
    forEachSubsetOf(N_, r_, [&](const std::vector<int>& idx) {
        std::vector<int> perm = idx;
        bool complete = true;
        do {
            if (!hasTuple(perm)) { complete = false; break; }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (complete) {
            out.setAllOrderings(idx);
        }
    });
    std::uint64_t fact = 1;
    for (int i = 2; i <= r_; ++i) fact *= static_cast<std::uint64_t>(i);
    if (r_ >= 4) std::sort(out.tuples_.begin(), out.tuples_.end());
    out.edgeCount_ /= fact;
    return out;
}

EdgeStore EdgeStore::complement() const {
    if (r_ != 2) throwInternal("BadRank", "complement implemented for graphs");
    EdgeStore out;
    out.init(2, N_, directed_);
    for (int i = 0; i < N_; ++i)
        for (int j = 0; j < N_; ++j)
            if (i != j && !rows_[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j))) {
                out.rows_[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
                ++out.edgeCount_;
            }
    if (!directed_) out.edgeCount_ /= 2;
    return out;
}

EdgeStore EdgeStore::inducedSub(std::span<const int> keep) const {
    EdgeStore out;
    out.init(r_, static_cast<int>(keep.size()), directed_);
    const int M = static_cast<int>(keep.size());
    std::vector<int> tuple(static_cast<std::size_t>(r_));
    if (directed_) {
        forEachSubsetOf(M, r_, [&](const std::vector<int>& idx) {
            std::vector<int> perm = idx;
            do {
                for (int i = 0; i < r_; ++i)
                    tuple[static_cast<std::size_t>(i)] = keep[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                if (hasTuple(tuple)) out.addTupleUnchecked(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
        if (r_ >= 4) std::sort(out.tuples_.begin(), out.tuples_.end());
    } else {
        std::uint64_t fact = 1;
        for (int i = 2; i <= r_; ++i) fact *= static_cast<std::uint64_t>(i);
        forEachSubsetOf(M, r_, [&](const std::vector<int>& idx) {
            for (int i = 0; i < r_; ++i)
                tuple[static_cast<std::size_t>(i)] = keep[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (hasTuple(tuple)) out.setAllOrderings(idx);
        });
        if (r_ >= 4) std::sort(out.tuples_.begin(), out.tuples_.end());
        out.edgeCount_ /= fact;
    }
    return out;
}

Rational EdgeStore::partDensity(const std::vector<std::vector<int>>& parts) const {
    if (parts.size() != static_cast<std::size_t>(r_))
        throwValidation("ArityMismatch", "part tuple arity differs from rank");
    validateParts(parts, N_);
    std::int64_t total = 1;
    for (const auto& p : parts) total *= static_cast<std::int64_t>(p.size());
    std::int64_t hits = 0;
    std::vector<int> pick(parts.size());
    std::vector<std::size_t> cursor(parts.size(), 0);
    // odometer over the cartesian product of parts
    while (true) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            pick[i] = parts[i][cursor[i]];
        bool edge = directed_ ? hasTuple(pick) : hasSet(pick);
        if (edge) ++hits;
        std::size_t k = parts.size();
        while (k > 0) {
            --k;
            if (++cursor[k] < parts[k].size()) break;
            cursor[k] = 0;
            if (k == 0) return Rational(hits, total);
        }
    }
}

Rational EdgeStore::globalDensity() const {
    std::uint64_t denom = binomial(static_cast<std::uint64_t>(N_), static_cast<std::uint64_t>(r_));
    if (directed_) {
        std::uint64_t fact = 1;
        for (int i = 2; i <= r_; ++i) fact *= static_cast<std::uint64_t>(i);
        denom *= fact;
    }
    if (denom == 0) return Rational(0);
    return Rational(static_cast<std::int64_t>(edgeCount_), static_cast<std::int64_t>(denom));
}

std::uint64_t EdgeStore::edgesWithin(std::span<const int> U) const {
    if (directed_) throwInternal("DirectedDensity", "edgesWithin is for undirected stores");
    const int M = static_cast<int>(U.size());
    if (M < r_) return 0;
    std::uint64_t count = 0;
    std::vector<int> tuple(static_cast<std::size_t>(r_));
    forEachSubsetOf(M, r_, [&](const std::vector<int>& idx) {
        for (int i = 0; i < r_; ++i)
            tuple[static_cast<std::size_t>(i)] = U[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        std::sort(tuple.begin(), tuple.end());
        if (hasTuple(tuple)) ++count;
    });
    return count;
}

Rational EdgeStore::densityWithin(std::span<const int> U) const {
    if (directed_) throwInternal("DirectedDensity", "densityWithin is for undirected stores");
    const int M = static_cast<int>(U.size());
    if (M < r_) return Rational(0);
    std::uint64_t denom = binomial(static_cast<std::uint64_t>(M), static_cast<std::uint64_t>(r_));
    return Rational(static_cast<std::int64_t>(edgesWithin(U)), static_cast<std::int64_t>(denom));
}

std::vector<std::vector<int>> EdgeStore::dirNeighborhood(std::span<const int> positions,
                                                         std::span<const int> X) const {
    if (!directed_) throwInternal("NotDirected", "dirNeighborhood needs a directed store");
    if (positions.size() != X.size())
        throwValidation("ArityMismatch", "positions and X differ in length");
    const int free = r_ - static_cast<int>(positions.size());
    std::vector<int> freePos;
    {
        std::vector<char> used(static_cast<std::size_t>(r_), 0);
        for (int p : positions) {
            if (p < 0 || p >= r_ || used[static_cast<std::size_t>(p)])
                throwValidation("BadParameters", "bad position set");
            used[static_cast<std::size_t>(p)] = 1;
        }
        for (int p = 0; p < r_; ++p)
            if (!used[static_cast<std::size_t>(p)]) freePos.push_back(p);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(static_cast<std::size_t>(r_), -1);
    for (std::size_t i = 0; i < positions.size(); ++i)
        tuple[static_cast<std::size_t>(positions[i])] = X[i];

    std::vector<int> completion(static_cast<std::size_t>(free));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == free) {
            out.push_back(completion);
            return;
        }
        for (int v = 0; v < N_; ++v) {
            bool clash = false;
            for (int x : X) if (x == v) { clash = true; break; }
            if (!clash)
                for (int j = 0; j < depth; ++j)
                    if (completion[static_cast<std::size_t>(j)] == v) { clash = true; break; }
            if (clash) continue;
            completion[static_cast<std::size_t>(depth)] = v;
            tuple[static_cast<std::size_t>(freePos[static_cast<std::size_t>(depth)])] = v;
            if (depth + 1 < free) {
                self(self, depth + 1);
            } else if (hasTuple(tuple)) {
                out.push_back(completion);
            }
        }
    };
    if (free == 0) {
        if (hasTuple(tuple)) out.push_back({});
        return out;
    }
    rec(rec, 0);
    return out;
}

std::vector<std::vector<int>> EdgeStore::setNeighborhood(std::span<const int> X) const {
    if (directed_) throwInternal("Directed", "setNeighborhood is for undirected stores");
    const int s = static_cast<int>(X.size());
    const int free = r_ - s;
    if (free <= 0) throwValidation("ArityMismatch", "X must have fewer than r vertices");
    std::vector<char> inX(static_cast<std::size_t>(N_), 0);
    for (int v : X) inX[static_cast<std::size_t>(v)] = 1;
    std::vector<std::vector<int>> out;
    std::vector<int> full(X.begin(), X.end());
    full.resize(static_cast<std::size_t>(r_));
    forEachSubsetOf(N_, free, [&](const std::vector<int>& comp) {
        for (int v : comp) if (inX[static_cast<std::size_t>(v)]) return;
        for (int i = 0; i < free; ++i)
            full[static_cast<std::size_t>(s + i)] = comp[static_cast<std::size_t>(i)];
        if (hasSet(full)) out.push_back(comp);
    });
    return out;
}

const DynBitset& EdgeStore::adjOut(int v) const {
    if (r_ != 2) throwInternal("BadRank", "adjOut is a graph helper");
    return rows_[static_cast<std::size_t>(v)];
}

DynBitset EdgeStore::adjIn(int v) const {
    if (r_ != 2) throwInternal("BadRank", "adjIn is a graph helper");
    DynBitset in(static_cast<std::size_t>(N_));
    for (int u = 0; u < N_; ++u)
        if (rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v))) in.set(static_cast<std::size_t>(u));
    return in;
}

} // namespace agh
