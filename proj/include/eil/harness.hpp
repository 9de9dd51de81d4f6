#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eil/depth.hpp"
#include "eil/graph.hpp"

namespace eil {

enum class Status { holds, fails, not_applicable };

std::string to_string(Status s);

/// Integer for depth/packing comparisons, canonical ideal text for identities.
using CheckValue = std::variant<std::monostate, long long, std::string>;

std::string to_string(const CheckValue& v);

struct CheckOutcome {
    std::string check_id;
    std::string graph_id;  // graph6
    std::string params;    // "edge=x1*x2 A={x3}" for parameterized checks
    Status status = Status::not_applicable;
    CheckValue lhs;
    CheckValue rhs;
    std::map<std::string, std::string> witness;
    int field_char = 2;
    bool sampled = false;
    double elapsed_ms = 0.0;
};

// Individual checks. Depth-valued checks use `engine.field`; the others are
// field independent and report the field they were run under.

CheckOutcome check_prop_spn(const Graph& g, const EngineOptions& engine);
std::vector<CheckOutcome> check_lemma_star(const Graph& g);
CheckOutcome check_lemma_int(const Graph& g, Edge edge);
CheckOutcome check_lemma_depthlem(const Graph& g, Edge edge, VertexSet removed, const EngineOptions& engine);
CheckOutcome check_cor_cordepth(const Graph& g, Edge edge, VertexSet removed, const EngineOptions& engine);
CheckOutcome check_lemma_last(const Graph& g, Edge edge, VertexSet removed, const EngineOptions& engine);
/// Outcomes main1, main2, main3 for the three lower bounds on depth I(G)^2.
std::vector<CheckOutcome> check_main(const Graph& g, const EngineOptions& engine);
/// The three sharp instances: exact depth, exact packing number, equality with the bound.
std::vector<CheckOutcome> check_examples_sharp(const EngineOptions& engine);
CheckOutcome check_banerjee_colon(const Graph& g, Edge edge, VertexSet removed);
/// (I(G \ A)^2 : x_i x_j) = I(G \ A) for A the whole pool, where x_i x_j is a component.
CheckOutcome check_morey(const Graph& g, Edge edge);
/// I^2 = I^(2) when triangle-free, and depth I^(2) >= alpha_2 always.
CheckOutcome check_symbolic_square(const Graph& g, const EngineOptions& engine);
/// Only the ideal identity I^2 = I^(2) for triangle-free graphs.
CheckOutcome check_symbolic_equality(const Graph& g);
/// Searches edge orders for one where every successive colon is (I^2 : u_k)
/// plus variables from the pool of u_k. At most 8 edges.
CheckOutcome check_order_decomposition(const Graph& g);
CheckOutcome check_deletion_bound(const Graph& g, Edge edge, VertexSet removed);

struct HarnessOptions {
    EngineOptions engine;
    std::uint64_t seed = 0;
    /// Pools with at most this many vertices are enumerated exhaustively.
    int exhaustive_pool_limit = 10;
    /// Random subsets drawn from larger pools.
    int samples_per_edge = 64;
    /// Graph-level workers in run_suite.
    unsigned jobs = 1;
    /// Wall-clock budget in seconds; graphs not started in time are skipped.
    std::optional<double> budget_seconds;
};

/// Every admissible A for one edge, exhaustive or sampled.
struct AdmissibleSets {
    std::vector<VertexSet> sets;
    bool sampled = false;
};
AdmissibleSets admissible_sets(const Graph& g, Edge edge, const HarnessOptions& options);

struct CheckDefinition {
    std::string name;
    std::string summary;
    bool uses_depth;
    /// Part of "all"; the single-part aliases main1..main3 are not.
    bool in_all;
    /// Runs the check over every edge / admissible A of one graph.
    std::function<std::vector<CheckOutcome>(const Graph&, const HarnessOptions&)> run;
};

/// Registered checks in canonical order.
const std::vector<CheckDefinition>& check_registry();
/// Names accepted by run_suite: registry names plus "all".
std::vector<std::string> resolve_checks(const std::vector<std::string>& names);

struct Corpus {
    std::string descriptor;
    std::vector<Graph> graphs;
};

struct Finding {
    std::string check_id;
    std::string graph_id;
    std::string params;
    std::string detail;
};

struct Summary {
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t not_applicable = 0;
    std::size_t sampled = 0;
};

struct VerificationReport {
    std::string corpus;
    std::vector<int> field_chars;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;
    std::vector<CheckOutcome> outcomes;
    Summary summary;
    /// Characteristic disagreements; not failures.
    std::vector<Finding> findings;
    bool truncated = false;
    std::size_t graphs_skipped = 0;
};

Summary tally(const std::vector<CheckOutcome>& outcomes);

/// Outcomes of one check/graph/params whose lhs or status differs between
/// field characteristics.
std::vector<Finding> field_disagreements(const std::vector<CheckOutcome>& outcomes);

/// Runs every requested check on every graph under each field. Throws
/// std::invalid_argument for an unknown check before doing any work.
VerificationReport run_suite(const Corpus& corpus, const std::vector<std::string>& checks,
                             const std::vector<FieldChoice>& fields, const HarnessOptions& options);

struct HuntResult {
    VerificationReport report;
    std::optional<CheckOutcome> counterexample;
};

/// Random G(n, 1/2) graphs, stopping at the first failing outcome.
HuntResult hunt(const std::string& check, int n, int count, const std::vector<FieldChoice>& fields,
                const HarnessOptions& options);

}  // namespace eil
