#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "agh/constructions.hpp"
#include "agh/edge_store.hpp"
#include "agh/io.hpp"
#include "agh/oracles.hpp"
#include "agh/ramsey.hpp"
#include "agh/regularity.hpp"
#include "agh/sweeps.hpp"

namespace {

int exitCodeFor(const agh::Error& e) {
    switch (e.category()) {
    case agh::Error::Category::Usage: return 1;
    case agh::Error::Category::Validation: return 2;
    case agh::Error::Category::Verification: return 3;
    case agh::Error::Category::Internal: return 3;
    case agh::Error::Category::Budget: return 4;
    }
    return 3;
}

agh::Rational parseRatio(const std::string& s) {
    if (s.find('/') != std::string::npos) return agh::Rational::parse(s);
    double v = std::stod(s);
    const std::int64_t den = 1 << 20;
    return agh::Rational(static_cast<std::int64_t>(v * den + 0.5), den);
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) agh::throwUsage("FileNotFound", "cannot write " + outPath);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic hypergraph engine: builds, extractions, bound sweeps"};
    app.require_subcommand(1);
    std::function<int()> run;

    // --- build -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("build", "validate an instance file and print a summary");
        auto file = std::make_shared<std::string>();
        auto budget = std::make_shared<std::uint64_t>(1000000);
        cmd->add_option("file", *file, "instance JSON")->required();
        cmd->add_option("--budget", *budget, "materialization budget (tuple evaluations)");
        cmd->callback([=, &run] {
            run = [=] {
                agh::LoadedInstance li = agh::loadInstanceFile(*file);
                std::optional<std::uint64_t> edges;
                try {
                    edges = agh::EdgeStore::materialize(li.instance, *budget).edgeCount();
                } catch (const agh::Error& e) {
                    if (e.category() != agh::Error::Category::Budget) throw;
                }
                std::cout << agh::instanceSummary(li.instance, edges).dump(2) << "\n";
                return 0;
            };
        });
    }

    // --- ramsey ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("ramsey", "clique / independent-set extraction");
        auto file = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("hypergraph");
        auto beta = std::make_shared<std::string>("1/2");
        auto seed = std::make_shared<std::uint64_t>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("file", *file, "instance JSON")->required();
        cmd->add_option("--mode", *mode, "graph | hypergraph | multicolor")
            ->check(CLI::IsMember({"graph", "hypergraph", "multicolor"}));
        cmd->add_option("--beta", *beta, "exponent split, rational or decimal");
        cmd->add_option("--seed", *seed, "64-bit seed");
        cmd->add_option("--out", *out, "report path (stdout when omitted)");
        cmd->callback([=, &run] {
            run = [=] {
                agh::LoadedInstance li = agh::loadInstanceFile(*file);
                agh::RamseyResult res;
                if (*mode == "graph") {
                    if (li.instance.r() != 2)
                        agh::throwUsage("BadMode", "graph mode needs r = 2");
                    res = agh::graphRamsey(li.instance, parseRatio(*beta), *seed);
                } else if (*mode == "multicolor") {
                    if (li.instance.r() != 2)
                        agh::throwUsage("BadMode", "multicolor mode needs r = 2");
                    agh::ColorMap cm = li.colorMap.value_or(agh::ColorMap{});
                    res = agh::multicolorRamsey(li.instance, cm, parseRatio(*beta), *seed);
                } else {
                    res = agh::hypergraphRamsey(li.instance, *seed);
                }
                emit(res.toJson().dump(2) + "\n", *out);
                return res.verified ? 0 : 3;
            };
        });
    }

    // --- regularity ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("regularity", "polynomial regularity partition");
        auto file = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>("1/5");
        auto seed = std::make_shared<std::uint64_t>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("file", *file, "instance JSON")->required();
        cmd->add_option("--epsilon", *eps, "homogeneity epsilon, rational or decimal");
        cmd->add_option("--seed", *seed, "64-bit seed");
        cmd->add_option("--out", *out, "report path (stdout when omitted)");
        cmd->callback([=, &run] {
            run = [=] {
                agh::LoadedInstance li = agh::loadInstanceFile(*file);
                if (li.instance.kind() != agh::InstanceKind::StronglyAlgebraic)
                    agh::throwUsage("BadMode", "regularity needs a strongly-algebraic instance");
                agh::RegularityOutcome r =
                    agh::algebraicRegularity(li.instance, parseRatio(*eps), *seed);
                nlohmann::ordered_json j{{"partition", r.partition.toJson()},
                                         {"report", r.report.toJson()},
                                         {"ok", r.ok},
                                         {"attempts", r.attempts}};
                emit(j.dump(2) + "\n", *out);
                return r.ok ? 0 : 3;
            };
        });
    }

    // --- verify ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("verify", "fixed-size invariant sweeps");
        auto suite = std::make_shared<std::string>("all");
        auto seed = std::make_shared<std::uint64_t>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--suite", *suite, "tensor | zeropattern | patterns | mixing | all")
            ->check(CLI::IsMember({"tensor", "zeropattern", "patterns", "mixing", "all"}));
        cmd->add_option("--seed", *seed, "64-bit seed");
        cmd->add_option("--out", *out, "CSV path (stdout when omitted)");
        cmd->callback([=, &run] {
            run = [=] {
                std::vector<agh::SweepRow> rows;
                auto append = [&](std::vector<agh::SweepRow> more) {
                    rows.insert(rows.end(), more.begin(), more.end());
                };
                if (*suite == "tensor" || *suite == "all") {
                    append(agh::sweepTensorRank(*seed));
                    append(agh::sweepSemidiagonal(*seed));
                }
                if (*suite == "zeropattern" || *suite == "all")
                    append(agh::sweepZeroPatterns(*seed));
                if (*suite == "patterns" || *suite == "all") {
                    append(agh::sweepStaircaseFree(*seed));
                    append(agh::sweepMatchingFree(*seed));
                }
                if (*suite == "mixing" || *suite == "all") append(agh::sweepMixing());
                emit(agh::sweepsToCsv(rows), *out);
                return agh::allPass(rows) ? 0 : 3;
            };
        });
    }

    // --- oracle ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("oracle", "exact brute-force ground truth");
        auto file = std::make_shared<std::string>();
        auto what = std::make_shared<std::string>("clique");
        auto budget = std::make_shared<std::uint64_t>(50000000);
        cmd->add_option("file", *file, "instance JSON")->required();
        cmd->add_option("--what", *what, "clique | independent | biclique")
            ->check(CLI::IsMember({"clique", "independent", "biclique"}));
        cmd->add_option("--budget", *budget, "search node budget");
        cmd->callback([=, &run] {
            run = [=] {
                agh::LoadedInstance li = agh::loadInstanceFile(*file);
                agh::EdgeStore H = agh::EdgeStore::materialize(li.instance, 100000000ULL);
                nlohmann::ordered_json j;
                if (*what == "biclique") {
                    agh::BicliqueResult res = agh::maxBalancedBicliqueExact(H, *budget);
                    j = {{"what", "biclique"},
                         {"t", res.t},
                         {"sideA", res.sideA},
                         {"sideB", res.sideB},
                         {"nodes", res.nodes}};
                } else {
                    agh::ExactResult res = *what == "clique"
                                               ? agh::maxCliqueExact(H, *budget)
                                               : agh::maxIndependentExact(H, *budget);
                    j = {{"what", *what},
                         {"size", res.size},
                         {"witness", res.witness},
                         {"nodes", res.nodes}};
                }
                std::cout << j.dump(2) << "\n";
                return 0;
            };
        });
    }

    // --- gen -------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("gen", "emit canonical instance files");
        auto kind = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto p = std::make_shared<std::uint64_t>(13);
        auto q = std::make_shared<std::uint64_t>(3);
        auto n = std::make_shared<int>(5);
        auto d = std::make_shared<int>(2);
        auto m = std::make_shared<int>(1);
        auto r = std::make_shared<int>(2);
        auto count = std::make_shared<int>(10);
        auto shape = std::make_shared<std::string>("strongly");
        auto seed = std::make_shared<std::uint64_t>(0);
        auto er = std::make_shared<bool>(false);
        auto complement = std::make_shared<bool>(false);
        cmd->add_option("kind", *kind, "paley | franklWilson | erPolarity | random")
            ->required()
            ->check(CLI::IsMember({"paley", "franklWilson", "erPolarity", "random"}));
        cmd->add_option("--out", *out, "output path (stdout when omitted)");
        cmd->add_option("--p", *p, "prime");
        cmd->add_option("--q", *q, "prime for the polarity graph");
        cmd->add_option("--n", *n, "dimension");
        cmd->add_option("--d", *d, "degree cap");
        cmd->add_option("--m", *m, "polynomial count");
        cmd->add_option("--r", *r, "uniformity");
        cmd->add_option("--count", *count, "vertex count (random)");
        cmd->add_option("--shape", *shape, "formula shape (random)");
        cmd->add_option("--seed", *seed, "64-bit seed");
        cmd->add_flag("--er", *er, "emit the polarity side instead of its complement");
        cmd->add_flag("--complement", *complement, "Frankl-Wilson: intersection-condition side");
        cmd->callback([=, &run] {
            run = [=] {
                agh::AlgebraicInstance inst = [&] {
                    if (*kind == "paley") return agh::paley(*p);
                    if (*kind == "franklWilson") return agh::franklWilson(*n, *p, *complement);
                    if (*kind == "erPolarity") return agh::erPolarity(*q, *er);
                    agh::RandomInstanceParams prm;
                    prm.p = *p; prm.n = *n; prm.d = *d; prm.m = *m; prm.r = *r;
                    prm.N = *count; prm.formulaShape = *shape;
                    return agh::randomAlgebraic(prm, *seed);
                }();
                emit(agh::instanceToJson(inst).dump(2) + "\n", *out);
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        return run();
    } catch (const agh::Error& e) {
        std::cerr << e.what() << "\n";
        return exitCodeFor(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
