// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eil/catalog.hpp"
#include "eil/depth.hpp"
#include "eil/harness.hpp"
#include "eil/homology.hpp"
#include "eil/ideal.hpp"
#include "support.hpp"

using namespace eil;

namespace {

const std::vector<FieldChoice> kBoth{FieldChoice::gf2, FieldChoice::rationals};

struct Verdict {
    bool pass;
    std::string detail;
};

// Findings from every harness run feed criterion 10.
std::vector<Finding> all_findings;
std::size_t depth_outcomes_compared = 0;

Verdict suite_verdict(const Corpus& corpus, const std::vector<std::string>& checks, const HarnessOptions& options) {
    const auto report = run_suite(corpus, checks, kBoth, options);
    all_findings.insert(all_findings.end(), report.findings.begin(), report.findings.end());
    for (const auto& o : report.outcomes)
        if (o.field_char == 0 && o.status != Status::not_applicable) ++depth_outcomes_compared;
    std::string first_failure;
    for (const auto& o : report.outcomes) {
        if (o.status == Status::fails) {
            first_failure = " first failure " + o.check_id + " " + o.graph_id + " " + o.params;
            break;
        }
    }
    const bool ok = report.summary.fails == 0 && !report.truncated && report.findings.empty();
    return {ok, std::to_string(corpus.graphs.size()) + " graphs, holds=" + std::to_string(report.summary.holds) +
                    " fails=" + std::to_string(report.summary.fails) +
                    " not_applicable=" + std::to_string(report.summary.not_applicable) +
                    " findings=" + std::to_string(report.findings.size()) + first_failure};
}

Corpus corpus_up_to(int n) {
    return {"all graphs on at most " + std::to_string(n) + " vertices", testing_support::load_corpus(n)};
}

Verdict criterion_sharp() {
    std::string detail;
    bool ok = true;
    std::vector<CheckOutcome> both;
    for (auto field : kBoth) {
        EngineOptions engine;
        engine.field = field;
        const auto rows = check_examples_sharp(engine);
        both.insert(both.end(), rows.begin(), rows.end());
        for (const auto& o : rows) {
            ok = ok && o.status == Status::holds;
            if (field == FieldChoice::gf2 && o.check_id != "sharp_equality")
                detail += o.params.substr(6) + ":" + o.check_id.substr(6) + "=" + to_string(o.lhs) + " ";
        }
        ok = ok && rows.size() == 9;
    }
    const auto findings = field_disagreements(both);
    all_findings.insert(all_findings.end(), findings.begin(), findings.end());
    depth_outcomes_compared += both.size() / 2;
    return {ok && findings.empty(), detail};
}

Verdict criterion_main_parts() {
    const Corpus corpus = corpus_up_to(6);
    std::size_t wk3_free = 0;
    std::size_t triangle_free = 0;
    for (const auto& g : corpus.graphs) {
        if (g.edge_count() == 0) continue;
        wk3_free += is_wk3_free(g);
        triangle_free += is_triangle_free(g);
    }
    Verdict v = suite_verdict(corpus, {"main2", "main3"}, {});
    v.detail = std::to_string(wk3_free) + " W(K3)-free and " + std::to_string(triangle_free) +
               " triangle-free graphs with edges; " + v.detail;
    return v;
}

Verdict criterion_int() {
    Verdict v = suite_verdict(corpus_up_to(6), {"int"}, {});
    std::mt19937_64 rng(20240601);
    Corpus random{"random graphs", {}};
    for (int k = 0; k < 200; ++k) {
        const int n = 2 + static_cast<int>(rng() % 8);
        random.graphs.push_back(random_graph(n, rng));
    }
    const Verdict r = suite_verdict(random, {"int"}, {});
    return {v.pass && r.pass, "exhaustive: " + v.detail + "; random n<=9: " + r.detail};
}

Verdict criterion_engine() {
    std::mt19937_64 rng(99);
    std::size_t problems = 0;

    // homology of the three small complexes
    for (auto field : kBoth) {
        problems += reduced_homology_dims(ComplexView(3, {0b111}), 0b111, field).in_dimension(1) != 1;
        problems += !reduced_homology_dims(ComplexView(4, {}), 0b1111, field).vanishes();
        problems += reduced_homology_dims(ComplexView(2, {0b11}), 0b11, field).in_dimension(0) != 1;
    }

    const auto names = [](std::size_t n) {
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
        return out;
    };
    const auto random_ideal = [&](std::size_t n, std::uint32_t max_exp) {
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < count; ++k) {
            std::vector<std::uint32_t> e(n);
            for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_exp + 1));
            if (Monomial(e).is_one()) e[0] = 1;
            gens.emplace_back(e);
        }
        return MonomialIdeal(names(n), gens);
    };

    // polarization bridge
    for (int trial = 0; trial < 100; ++trial) {
        const auto ideal = random_ideal(1 + rng() % 5, 3);
        const auto pol = polarize(ideal);
        for (auto field : kBoth) {
            problems += depth_quotient(ideal, {field}).depth_quotient !=
                        depth_quotient(pol.ideal, {field}).depth_quotient - static_cast<int>(pol.extra);
        }
    }
    // complete intersections
    for (int k = 1; k <= 5; ++k) {
        std::vector<Monomial> gens;
        for (int g = 0; g < k; ++g) {
            std::vector<std::uint32_t> e(2 * k, 0);
            e[2 * g] = 1 + g % 3;
            e[2 * g + 1] = 1;
            gens.emplace_back(e);
        }
        for (auto field : kBoth) problems += depth_quotient(MonomialIdeal(names(2 * k), gens), {field}).pd_quotient != k;
    }
    // free variable
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto ideal = random_ideal(n, 2);
        const auto a = depth_quotient(ideal);
        const auto b = depth_quotient(with_ambient(ideal, names(n + 1)));
        problems += b.depth_quotient != a.depth_quotient + 1 || b.pd_quotient != a.pd_quotient;
    }
    // pruning
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 8;
        std::vector<Monomial> gens;
        for (int k = 0; k < 1 + static_cast<int>(rng() % 6); ++k)
            gens.push_back(Monomial::squarefree(n, (rng() & lower_bits(static_cast<int>(n))) | 1));
        const MonomialIdeal ideal(names(n), gens);
        for (auto field : kBoth) {
            EngineOptions pruned{field};
            EngineOptions full{field};
            full.prune = false;
            problems += betti_numbers(ideal, pruned) != betti_numbers(ideal, full);
        }
    }
    // membership laws
    for (int trial = 0; trial < 1000; ++trial) {
        const auto i = random_ideal(4, 3);
        const auto j = random_ideal(4, 3);
        std::vector<std::uint32_t> ve(4), me(4);
        for (auto& x : ve) x = static_cast<std::uint32_t>(rng() % 5);
        for (auto& x : me) x = static_cast<std::uint32_t>(rng() % 3);
        const Monomial v(ve), m(me);
        const auto member = [](const MonomialIdeal& ideal, const Monomial& x) {
            for (const auto& g : ideal.generators()) {
                bool divides = true;
                for (std::size_t k = 0; k < x.size(); ++k) divides = divides && g[k] <= x[k];
                if (divides) return true;
            }
            return false;
        };
        problems += colon(i, m).contains(v) != member(i, v * m);
        problems += intersect(i, j).contains(v) != (member(i, v) && member(j, v));
    }
    return {problems == 0, "mismatches=" + std::to_string(problems)};
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Verdict()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "sharp examples reproduced exactly", 5, criterion_sharp},
        {2, "main part 1 on all graphs with at most 6 vertices", 600,
         [] { return suite_verdict(corpus_up_to(6), {"main1"}, {}); }},
        {3, "main parts 2 and 3 on the W(K3)-free and triangle-free graphs", 600, criterion_main_parts},
        {4, "spn on all graphs with at most 7 vertices", 600,
         [] { return suite_verdict(corpus_up_to(7), {"spn"}, {}); }},
        {5, "intersection-of-colons identity", 120, criterion_int},
        {6, "Banerjee colon formula and Morey identity, at most 5 vertices", 1800,
         [] { return suite_verdict(corpus_up_to(5), {"banerjee", "morey"}, {}); }},
        {7, "star, depthlem, cordepth, last and deletion bounds, at most 5 vertices", 1800,
         [] { return suite_verdict(corpus_up_to(5), {"star", "depthlem", "cordepth", "last", "deletion"}, {}); }},
        {8, "symbolic square", 1800,
         [] {
             const Verdict eq = suite_verdict(corpus_up_to(6), {"symbolic_eq"}, {});
             const Verdict depth = suite_verdict(corpus_up_to(5), {"symbolic"}, {});
             return Verdict{eq.pass && depth.pass, "equality n<=6: " + eq.detail + "; depth n<=5: " + depth.detail};
         }},
        {9, "engine sanity properties", 60, criterion_engine},
        {10, "characteristics 2 and 0 agree", 0,
         [] {
             return Verdict{all_findings.empty(), std::to_string(depth_outcomes_compared) +
                                                      " outcomes compared, findings=" +
                                                      std::to_string(all_findings.size())};
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
        if (!in_time) v.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
        const bool pass = v.pass && in_time;
        failures += !pass;
        std::printf("%s %d %s: %s [%.2f s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), v.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
