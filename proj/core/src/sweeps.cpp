#include "agh/sweeps.hpp"

#include <algorithm>
#include <set>

#include "agh/constructions.hpp"
#include "agh/forbidden.hpp"
#include "agh/oracles.hpp"
#include "agh/patterns.hpp"
#include "agh/rng.hpp"
#include "agh/tensor.hpp"

namespace agh {

namespace {

MultiPoly randomPoly(const FieldPrime& f, int blocks, int n, int d, Rng& rng) {
    int howMany = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 + blocks * n)));
    std::vector<Monomial> ms;
    for (int t = 0; t < howMany; ++t) {
        Monomial m;
        m.coeff = 1 + static_cast<std::uint32_t>(rng.below(f.p() - 1));
        for (int b = 0; b < blocks; ++b) {
            while (true) {
                std::vector<std::uint16_t> blk(static_cast<std::size_t>(n));
                int sum = 0;
                for (auto& x : blk) {
                    x = static_cast<std::uint16_t>(rng.below(static_cast<std::uint64_t>(d) + 1));
                    sum += x;
                }
                if (sum <= d) {
                    m.exps.insert(m.exps.end(), blk.begin(), blk.end());
                    break;
                }
            }
        }
        ms.push_back(std::move(m));
    }
    return MultiPoly(f, blocks, n, d, std::move(ms));
}

} // namespace

std::vector<SweepRow> sweepTensorRank(std::uint64_t seed) {
    std::vector<SweepRow> rows;
    const std::uint64_t primes[3] = {5, 7, 13};
    for (int t = 0; t < 200; ++t) {
        Rng rng(Rng::child(seed, static_cast<std::uint64_t>(t)));
        FieldPrime f(primes[rng.below(3)]);
        int n = 1 + static_cast<int>(rng.below(3));
        int d = static_cast<int>(rng.below(4));
        int r = 2 + static_cast<int>(rng.below(2));
        double space = 1;
        for (int i = 0; i < n; ++i) space *= f.p();
        int maxV = static_cast<int>(std::min<double>(20, space));
        int nv = std::max(r, 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                                   std::max(1, maxV - 1)))));
        nv = std::min(nv, maxV);
        auto V = randomPoints(f, n, nv, rng.next());
        MultiPoly poly = randomPoly(f, r, n, d, rng);
        Tensor T = Tensor::fromPoly(poly, V, r);
        RankReport rep = T.maxFlatteningRank();
        std::uint64_t bound = monomialCount(n, d);
        SweepRow row;
        row.suite = "tensor";
        row.check = "rankCeiling[" + std::to_string(t) + "]";
        row.value = std::to_string(rep.max);
        row.bound = std::to_string(bound);
        row.pass = true;
        for (int axisRank : rep.perAxis)
            if (static_cast<std::uint64_t>(axisRank) > bound) row.pass = false;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SweepRow> sweepSemidiagonal(std::uint64_t seed) {
    std::vector<SweepRow> rows;
    FieldPrime f(7);
    for (int t = 0; t < 100; ++t) {
        Rng rng(Rng::child(seed, 1000 + static_cast<std::uint64_t>(t)));
        int r = 2 + static_cast<int>(rng.below(3));
        int A = 2 + static_cast<int>(rng.below(7));
        std::vector<int> dims(static_cast<std::size_t>(r), A);
        std::size_t total = 1;
        for (int i = 0; i < r; ++i) total *= static_cast<std::size_t>(A);
        std::vector<std::uint32_t> data(total);
        std::vector<int> idx(static_cast<std::size_t>(r), 0);
        for (std::size_t flat = 0;; ++flat) {
            bool allEq = true, allDist = true;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    if (idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(j)]) allDist = false;
                    else allEq = false;
                }
            if (allDist) data[flat] = 0;
            else if (allEq) data[flat] = 1 + static_cast<std::uint32_t>(rng.below(6));
            else data[flat] = static_cast<std::uint32_t>(rng.below(7));
            int i = r - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == A) { idx[static_cast<std::size_t>(i)] = 0; --i; }
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
        }
        Tensor T(f, dims, std::move(data));
        auto res = T.verifySemidiagBound();
        int floorCeil = (A + r - 2) / (r - 1); // ceil(A/(r-1))
        SweepRow row;
        row.suite = "tensor";
        row.check = "semidiagFloor[" + std::to_string(t) + "]";
        row.value = std::to_string(res.mfrank);
        row.bound = ">=" + std::to_string(floorCeil);
        row.pass = res.holds && res.mfrank >= floorCeil;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SweepRow> sweepZeroPatterns(std::uint64_t seed) {
    std::vector<SweepRow> rows;
    std::uint64_t stream = 0;
    for (std::uint64_t p : {3ULL, 5ULL}) {
        FieldPrime f(p);
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 4; ++m)
                for (int d = 0; d <= 2; ++d) {
                    bool pass = true;
                    std::uint64_t worst = 0, bound = 0;
                    for (int t = 0; t < 50; ++t) {
                        Rng rng(Rng::child(seed, 2000 + stream++));
                        std::vector<MultiPoly> polys;
                        for (int i = 0; i < m; ++i) polys.push_back(randomPoly(f, 1, n, d, rng));
                        ZeroPatternResult zp = zeroPatternsAll(polys);
                        bound = zp.bound;
                        worst = std::max(worst, zp.count);
                        if (!zp.withinBound) pass = false;
                    }
                    SweepRow row;
                    row.suite = "zeropattern";
                    row.check = "p" + std::to_string(p) + "_n" + std::to_string(n) + "_m" +
                                std::to_string(m) + "_d" + std::to_string(d);
                    row.value = std::to_string(worst);
                    row.bound = std::to_string(bound);
                    row.pass = pass;
                    rows.push_back(std::move(row));
                }
    }
    return rows;
}

std::vector<SweepRow> sweepStaircaseFree(std::uint64_t seed) {
    std::vector<SweepRow> rows;
    for (int t = 0; t < 50; ++t) {
        RandomInstanceParams prm;
        prm.p = 13;
        prm.n = 1;
        prm.d = static_cast<int>(t % 3);
        prm.r = 2 + (t % 2);
        prm.m = 1;
        prm.N = 8 + (t % 5);
        prm.formulaShape = "strongly";
        AlgebraicInstance inst = randomAlgebraic(prm, Rng::child(seed, 3000 + static_cast<std::uint64_t>(t)));
        EdgeStore di = EdgeStore::materializeDi(inst, 0, 10000000ULL);
        int s = static_cast<int>(monomialCount(inst.n(), inst.d())) + 1;
        SweepRow row;
        row.suite = "patterns";
        row.check = "staircaseFree[" + std::to_string(t) + "]_r" + std::to_string(prm.r) +
                    "_d" + std::to_string(prm.d) + "_N" + std::to_string(prm.N);
        row.bound = "none(exhausted),s=" + std::to_string(s);
        row.pass = true;
        std::uint64_t nodes = 0;
        for (int k = 0; k < prm.r; ++k) {
            PatternSearchResult res = findMMember(di, s, k, 400000000ULL);
            nodes += res.nodes;
            if (res.outcome != SearchOutcome::NoneExhausted) row.pass = false;
        }
        row.value = "nodes=" + std::to_string(nodes);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SweepRow> sweepMatchingFree(std::uint64_t seed) {
    std::vector<SweepRow> rows;
    for (int t = 0; t < 30; ++t) {
        RandomInstanceParams prm;
        prm.p = 17;
        prm.n = 1;
        prm.r = 2 + (t % 2);
        prm.d = prm.r == 2 ? 1 + (t / 2) % 2 : 1;
        prm.m = 1;
        prm.N = 12 + (t % 4);
        prm.formulaShape = "strongly";
        AlgebraicInstance inst = randomAlgebraic(prm, Rng::child(seed, 4000 + static_cast<std::uint64_t>(t)));
        EdgeStore H = EdgeStore::materialize(inst, 10000000ULL);
        int s = (prm.r - 1) * static_cast<int>(monomialCount(inst.n(), inst.d())) + 1;
        PatternSearchResult res = findNMember(H, s, 2000000000ULL);
        SweepRow row;
        row.suite = "patterns";
        row.check = "matchingFree[" + std::to_string(t) + "]_r" + std::to_string(prm.r) +
                    "_d" + std::to_string(prm.d) + "_N" + std::to_string(prm.N);
        row.value = "nodes=" + std::to_string(res.nodes);
        row.bound = "none(exhausted),s=" + std::to_string(s);
        row.pass = res.outcome == SearchOutcome::NoneExhausted;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SweepRow> sweepMixing() {
    std::vector<SweepRow> rows;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL}) {
        BicliqueCeiling ceiling = mixingBicliqueBound(q);
        for (bool erSide : {true, false}) {
            AlgebraicInstance inst = erPolarity(q, erSide);
            EdgeStore G = EdgeStore::materialize(inst, 10000000ULL);
            BicliqueResult res = maxBalancedBicliqueExact(G, 4000000000ULL);
            SweepRow row;
            row.suite = "mixing";
            row.check = std::string("biclique_q") + std::to_string(q) + (erSide ? "_er" : "_comp");
            row.value = std::to_string(res.t);
            row.bound = "<=" + std::to_string(ceiling.floorValue);
            row.pass = ceiling.admits(static_cast<std::uint64_t>(res.t));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string sweepsToCsv(const std::vector<SweepRow>& rows) {
    std::string out = "suite,check,value,bound,pass\n";
    for (const auto& r : rows)
        out += r.suite + "," + r.check + "," + r.value + "," + r.bound + "," +
               (r.pass ? "1" : "0") + "\n";
    return out;
}

bool allPass(const std::vector<SweepRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass; });
}

} // namespace agh
