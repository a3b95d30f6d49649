#include "agh/patterns.hpp"

#include <algorithm>

#include "agh/constructions.hpp"

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

} // namespace

ZeroPatternResult zeroPatterns(const std::vector<MultiPoly>& polys,
                               const std::vector<std::vector<std::uint32_t>>& domain,
                               std::uint64_t budget) {
    if (polys.empty()) throwValidation("BadParameters", "need at least one polynomial");
    const int n = polys[0].vars();
    int d = 0;
    for (const auto& f : polys) {
        if (f.vars() != n) throwValidation("ArityMismatch", "polynomials disagree on arity");
        d = std::max(d, f.degreeCap());
    }
    if (domain.size() > budget)
        throwBudget("BudgetExceeded", "domain larger than evaluation budget");

    ZeroPatternResult out;
    std::string pat(polys.size(), '0');
    for (const auto& x : domain) {
        for (std::size_t i = 0; i < polys.size(); ++i)
            pat[i] = polys[i].eval(x) == 0 ? '0' : '*';
        out.patterns.insert(pat);
    }
    out.count = out.patterns.size();
    out.bound = binomial(static_cast<std::uint64_t>(polys.size()) * static_cast<std::uint64_t>(d) +
                             static_cast<std::uint64_t>(n),
                         static_cast<std::uint64_t>(n));
    out.withinBound = out.count <= out.bound;
    return out;
}

ZeroPatternResult zeroPatternsAll(const std::vector<MultiPoly>& polys, std::uint64_t budget) {
    if (polys.empty()) throwValidation("BadParameters", "need at least one polynomial");
    auto domain = allPoints(polys[0].field(), polys[0].vars(), budget);
    return zeroPatterns(polys, domain, budget);
}

std::uint64_t shatterFunction(const SetFamily& family, int z, std::uint64_t budget) {
    if (z < 0 || z > family.baseSize)
        throwValidation("BadParameters", "z must lie in [0, baseSize]");
    std::uint64_t subsets = binomial(static_cast<std::uint64_t>(family.baseSize),
                                     static_cast<std::uint64_t>(z));
    if (subsets > budget)
        throwBudget("BudgetExceeded", "C(baseSize, z) exceeds the shatter budget");
    if (z == 0) return family.members.empty() ? 0 : 1;

    std::uint64_t best = 0;
    std::vector<char> seen(std::size_t{1} << z, 0);
    std::vector<std::uint32_t> stamps; // traces seen for the current subset
    forEachSubsetOf(family.baseSize, z, [&](const std::vector<int>& U) {
        stamps.clear();
        std::uint64_t distinct = 0;
        for (const auto& A : family.members) {
            std::uint32_t trace = 0;
            for (int i = 0; i < z; ++i)
                if (A.test(static_cast<std::size_t>(U[static_cast<std::size_t>(i)])))
                    trace |= (1u << i);
            if (!seen[trace]) { seen[trace] = 1; stamps.push_back(trace); ++distinct; }
        }
        for (auto t : stamps) seen[t] = 0;
        best = std::max(best, distinct);
    });
    return best;
}

SetFamily neighborhoodFamily(const EdgeStore& H) {
    if (H.directed()) throwInternal("Directed", "neighborhood family is undirected");
    const int N = H.N();
    const int r = H.r();
    SetFamily fam;
    if (r == 2) {
        fam.baseSize = N;
        for (int v = 0; v < N; ++v) fam.members.push_back(H.adjOut(v));
        return fam;
    }
    // base = unordered (r-1)-subsets of V in lex order
    std::uint64_t base = binomial(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(r - 1));
    if (base > 10000000ULL) throwBudget("BudgetExceeded", "V^(r-1) base too large");
    fam.baseSize = static_cast<int>(base);
    std::vector<std::vector<int>> baseSets;
    baseSets.reserve(base);
    forEachSubsetOf(N, r - 1, [&](const std::vector<int>& S) { baseSets.push_back(S); });
    std::vector<int> full(static_cast<std::size_t>(r));
    for (int v = 0; v < N; ++v) {
        DynBitset bits(static_cast<std::size_t>(fam.baseSize));
        for (std::size_t b = 0; b < baseSets.size(); ++b) {
            const auto& S = baseSets[b];
            if (std::find(S.begin(), S.end(), v) != S.end()) continue;
            std::copy(S.begin(), S.end(), full.begin());
            full[static_cast<std::size_t>(r) - 1] = v;
            if (H.hasSet(full)) bits.set(b);
        }
        fam.members.push_back(std::move(bits));
    }
    return fam;
}

std::vector<WeakVcRow> weakVcReport(const AlgebraicInstance& inst, int zMax,
                                    std::uint64_t budget) {
    EdgeStore H = EdgeStore::materialize(inst, budget);
    SetFamily fam = neighborhoodFamily(H);
    std::vector<WeakVcRow> rows;
    for (int z = 1; z <= zMax; ++z) {
        WeakVcRow row;
        row.z = z;
        row.shatter = shatterFunction(fam, z, budget);
        row.bound = binomial(static_cast<std::uint64_t>(z) * inst.m() * inst.d() +
                                 static_cast<std::uint64_t>(inst.n()),
                             static_cast<std::uint64_t>(inst.n()));
        row.withinBound = row.shatter <= row.bound;
        rows.push_back(row);
    }
    return rows;
}

std::vector<int> separatedPacking(const SetFamily& family, const Rational& delta) {
    if (delta <= Rational(0) || delta > Rational(1))
        throwValidation("BadParameters", "delta must lie in (0, 1]");
    std::vector<int> chosen;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        bool farFromAll = true;
        for (int c : chosen) {
            std::size_t diff = family.members[i].symmetricDifferenceCount(
                family.members[static_cast<std::size_t>(c)]);
            // |A Δ B| >= delta * baseSize, exactly
            if (Rational(static_cast<std::int64_t>(diff)) <
                delta * Rational(family.baseSize)) {
                farFromAll = false;
                break;
            }
        }
        if (farFromAll) chosen.push_back(static_cast<int>(i));
    }
    return chosen;
}

} // namespace agh
