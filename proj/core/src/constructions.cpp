#include "agh/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "agh/rng.hpp"

namespace agh {

namespace {

std::vector<Monomial> binomialPowerPlusOne(const FieldPrime& f, std::uint32_t e) {
    // (x+y)^e + 1 with x in block 1, y in block 2; C(e,k) tracked mod p
    // (e < p, so the k+1 divisors stay invertible)
    std::vector<Monomial> ms;
    std::uint32_t c = 1 % f.p();
    for (std::uint32_t k = 0; k <= e; ++k) {
        if (c != 0)
            ms.push_back({c, {static_cast<std::uint16_t>(e - k), static_cast<std::uint16_t>(k)}});
        if (k < e) c = f.mul(f.mul(c, (e - k) % f.p()), f.inv((k + 1) % f.p()));
    }
    ms.push_back({1, {0, 0}});
    return ms;
}

} // namespace

AlgebraicInstance paley(std::uint64_t p) {
    if (!FieldPrime::isPrime(p) || p % 4 != 1)
        throwValidation("BadPrime", "Paley construction needs a prime p ≡ 1 (mod 4)");
    FieldPrime f(p);
    std::uint32_t e = static_cast<std::uint32_t>((p - 1) / 2);

    AlgebraicInstance::Spec spec;
    spec.p = p;
    spec.r = 2; spec.n = 1; spec.d = static_cast<int>(e); spec.m = 1;
    spec.kind = InstanceKind::StronglyAlgebraic;
    spec.polys.push_back(MultiPoly(f, 2, 1, static_cast<int>(e), binomialPowerPlusOne(f, e)));
    for (std::uint32_t x = 0; x < p; ++x) spec.vertices.push_back({x});
    return AlgebraicInstance::build(std::move(spec));
}

AlgebraicInstance franklWilson(int n, std::uint64_t p, bool complementEdges) {
    if (!FieldPrime::isPrime(p)) throwValidation("BadPrime", "p must be prime");
    std::uint64_t k = p * p - 1;
    if (static_cast<std::uint64_t>(n) < k)
        throwValidation("BadParameters", "need p^2-1 <= n");
    std::uint64_t count = binomial(static_cast<std::uint64_t>(n), k);
    if (count > 100000)
        throwBudget("BudgetExceeded", "vertex budget: C(n, p^2-1) = " + std::to_string(count));
    FieldPrime f(p);

    AlgebraicInstance::Spec spec;
    spec.p = p;
    spec.r = 2; spec.n = n; spec.d = 2; spec.m = 1;
    // f(u,v) = <u,v> + 1
    std::vector<Monomial> ms;
    for (int j = 0; j < n; ++j) {
        std::vector<std::uint16_t> e(static_cast<std::size_t>(2 * n), 0);
        e[static_cast<std::size_t>(j)] = 1;
        e[static_cast<std::size_t>(n + j)] = 1;
        ms.push_back({1, std::move(e)});
    }
    ms.push_back({1, std::vector<std::uint16_t>(static_cast<std::size_t>(2 * n), 0)});
    spec.polys.push_back(MultiPoly(f, 2, n, 2, std::move(ms)));
    if (complementEdges) {
        spec.kind = InstanceKind::General;
        spec.formula = BoolFormula::atom(1); // edge iff <u,v>+1 = 0
    } else {
        spec.kind = InstanceKind::StronglyAlgebraic;
    }

    // characteristic vectors of k-subsets of [n], subsets in lex order
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    while (true) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
        for (int i : idx) v[static_cast<std::size_t>(i)] = 1;
        spec.vertices.push_back(std::move(v));
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - static_cast<int>(k) + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < idx.size(); ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return AlgebraicInstance::build(std::move(spec));
}

AlgebraicInstance erPolarity(std::uint64_t q, bool erSide) {
    if (!FieldPrime::isPrime(q)) throwValidation("BadPrime", "q must be prime");
    FieldPrime f(q);

    AlgebraicInstance::Spec spec;
    spec.p = q;
    spec.r = 2; spec.n = 3; spec.d = 2; spec.m = 1;
    std::vector<Monomial> ms;
    for (int j = 0; j < 3; ++j) {
        std::vector<std::uint16_t> e(6, 0);
        e[static_cast<std::size_t>(j)] = 1;
        e[static_cast<std::size_t>(3 + j)] = 1;
        ms.push_back({1, std::move(e)});
    }
    spec.polys.push_back(MultiPoly(f, 2, 3, 2, std::move(ms)));
    if (erSide) {
        spec.kind = InstanceKind::General;
        spec.formula = BoolFormula::atom(1); // edge iff orthogonal
    } else {
        spec.kind = InstanceKind::StronglyAlgebraic;
    }

    // one representative per projective point: first nonzero coordinate = 1
    for (std::uint32_t x1 = 0; x1 < q; ++x1)
        for (std::uint32_t x2 = 0; x2 < q; ++x2)
            spec.vertices.push_back({1, x1, x2});
    for (std::uint32_t x2 = 0; x2 < q; ++x2)
        spec.vertices.push_back({0, 1, x2});
    spec.vertices.push_back({0, 0, 1});
    return AlgebraicInstance::build(std::move(spec));
}

BicliqueCeiling mixingBicliqueBound(std::uint64_t q) {
    if (!FieldPrime::isPrime(q)) throwValidation("BadPrime", "q must be prime");
    BicliqueCeiling b;
    b.q = q;
    b.N = q * q + q + 1;
    b.approx = static_cast<double>(b.N) * std::sqrt(static_cast<double>(q)) /
               static_cast<double>(q + 1);
    std::uint64_t t = static_cast<std::uint64_t>(b.approx);
    while (b.admits(t + 1)) ++t;
    while (t > 0 && !b.admits(t)) --t;
    b.floorValue = t;
    return b;
}

std::vector<std::vector<std::uint32_t>> allPoints(const FieldPrime& f, int n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / f.p() + 1) throwBudget("BudgetExceeded", "p^n exceeds vertex cap");
        total *= f.p();
    }
    if (total > cap) throwBudget("BudgetExceeded", "p^n exceeds vertex cap");
    std::vector<std::vector<std::uint32_t>> pts;
    pts.reserve(total);
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(n), 0);
    while (true) {
        pts.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] + 1 == f.p()) { cur[static_cast<std::size_t>(i)] = 0; --i; }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return pts;
}

std::vector<std::vector<std::uint32_t>> randomPoints(const FieldPrime& f, int n, int count,
                                                     std::uint64_t seed) {
    double space = std::pow(static_cast<double>(f.p()), n);
    if (static_cast<double>(count) > space)
        throwBudget("BudgetExceeded", "not enough distinct points in F_p^n");
    Rng rng(seed);
    std::set<std::vector<std::uint32_t>> got;
    while (got.size() < static_cast<std::size_t>(count)) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(n));
        for (auto& c : v) c = static_cast<std::uint32_t>(rng.below(f.p()));
        got.insert(std::move(v));
    }
    return {got.begin(), got.end()};
}

namespace {

// exponent vector for one block with sum <= d, uniform by rejection
std::vector<std::uint16_t> randomBlockExps(Rng& rng, int n, int d) {
    while (true) {
        std::vector<std::uint16_t> e(static_cast<std::size_t>(n));
        int sum = 0;
        for (auto& x : e) {
            x = static_cast<std::uint16_t>(rng.below(static_cast<std::uint64_t>(d) + 1));
            sum += x;
        }
        if (sum <= d) return e;
    }
}

MultiPoly randomSymmetricPoly(const FieldPrime& f, int r, int n, int d, Rng& rng) {
    int howMany = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(3 + r * n)));
    std::vector<Monomial> ms;
    for (int t = 0; t < howMany; ++t) {
        Monomial m;
        m.coeff = 1 + static_cast<std::uint32_t>(rng.below(f.p() - 1));
        m.exps.clear();
        for (int b = 0; b < r; ++b) {
            auto blk = randomBlockExps(rng, n, d);
            m.exps.insert(m.exps.end(), blk.begin(), blk.end());
        }
        ms.push_back(std::move(m));
    }
    MultiPoly g(f, r, n, d, std::move(ms));
    // sum over all block permutations so the zero set is permutation-invariant
    std::vector<int> perm(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
    MultiPoly sym = MultiPoly::zero(f, r, n, d);
    do {
        sym = sym.add(g.permuteBlocks(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sym;
}

} // namespace

AlgebraicInstance randomAlgebraic(const RandomInstanceParams& prm, std::uint64_t seed) {
    FieldPrime f(prm.p);
    if (prm.r < 1 || prm.n < 1 || prm.m < 1 || prm.N < 1 || prm.d < 0)
        throwValidation("BadParameters", "bad random-instance parameters");
    double space = std::pow(static_cast<double>(prm.p), prm.n);
    if (static_cast<double>(prm.N) > space)
        throwBudget("BudgetExceeded", "N exceeds |F_p^n|");

    auto vertices = randomPoints(f, prm.n, prm.N, Rng::child(seed, 0));
    Rng rng(Rng::child(seed, 1));

    AlgebraicInstance::Spec spec;
    spec.p = prm.p;
    spec.r = prm.r; spec.n = prm.n; spec.d = prm.d; spec.m = prm.m;
    spec.vertices = vertices;

    std::vector<int> sample(static_cast<std::size_t>(prm.r));
    for (int i = 0; i < prm.m; ++i) {
        MultiPoly poly = MultiPoly::zero(f, prm.r, prm.n, prm.d);
        bool ok = false;
        for (int attempt = 0; attempt < 16 && !ok; ++attempt) {
            poly = randomSymmetricPoly(f, prm.r, prm.n, prm.d, rng);
            if (poly.isZero()) continue;
            if (prm.N < prm.r) { ok = true; break; }
            // reject polynomials vanishing on every sampled tuple
            std::vector<std::uint32_t> point(static_cast<std::size_t>(prm.r) * prm.n);
            for (int t = 0; t < 32 && !ok; ++t) {
                std::set<int> pick;
                while (pick.size() < static_cast<std::size_t>(prm.r))
                    pick.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(prm.N))));
                int b = 0;
                for (int v : pick) {
                    std::copy(vertices[static_cast<std::size_t>(v)].begin(),
                              vertices[static_cast<std::size_t>(v)].end(),
                              point.begin() + static_cast<std::ptrdiff_t>(b) * prm.n);
                    ++b;
                }
                if (poly.eval(point) != 0) ok = true;
            }
        }
        if (!ok)
            throwValidation("DegenerateInstance",
                            "symmetrized polynomial vanished on all sampled tuples after 16 redraws");
        spec.polys.push_back(std::move(poly));
    }

    if (prm.formulaShape == "strongly") {
        if (prm.m != 1) throwValidation("BadParameters", "formulaShape strongly needs m = 1");
        spec.kind = InstanceKind::StronglyAlgebraic;
    } else if (prm.formulaShape == "allNonzero") {
        spec.formula = BoolFormula::allNonzero(prm.m);
    } else if (prm.formulaShape == "anyZero") {
        spec.formula = BoolFormula::anyZero(prm.m);
    } else if (prm.formulaShape == "random") {
        // random monotone mix over the atoms
        nlohmann::json j = nlohmann::json::array({"atom", 1});
        for (int i = 2; i <= prm.m; ++i) {
            const char* op = rng.below(2) == 0 ? "and" : "or";
            nlohmann::json atom = nlohmann::json::array({"atom", i});
            if (rng.below(2) == 0) atom = nlohmann::json::array({"not", atom});
            j = nlohmann::json::array({op, j, atom});
        }
        if (rng.below(2) == 0) j = nlohmann::json::array({"not", j});
        spec.formula = BoolFormula::parse(j);
    } else {
        throwValidation("BadParameters", "unknown formulaShape '" + prm.formulaShape + "'");
    }
    return AlgebraicInstance::build(std::move(spec));
}

} // namespace agh
