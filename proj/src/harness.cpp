#include "eil/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "eil/catalog.hpp"
#include "eil/graph_io.hpp"
#include "eil/ideal.hpp"

namespace eil {

std::string to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        case Status::not_applicable: return "not_applicable";
    }
    return "unknown";
}

std::string to_string(const CheckValue& v) {
    if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
    if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
    return "";
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

private:
    Clock::time_point start_ = Clock::now();
};

int alpha2(const Graph& g) { return star_packing_number(g).size; }

int alpha2_without(const Graph& g, VertexSet removed) { return alpha2(delete_vertices(g, removed)); }

std::string edge_text(const Graph& g, Edge e) { return g.label(e.u) + "*" + g.label(e.v); }

std::string edge_params(const Graph& g, Edge e, VertexSet removed) {
    return "edge=" + edge_text(g, e) + " A=" + g.describe(removed);
}

CheckOutcome start(const std::string& id, const Graph& g, int field_char) {
    CheckOutcome o;
    o.check_id = id;
    o.graph_id = to_graph6(g);
    o.field_char = field_char;
    return o;
}

CheckOutcome& conclude(CheckOutcome& o, bool ok, const Stopwatch& clock) {
    o.status = ok ? Status::holds : Status::fails;
    if (!ok) o.witness.emplace("graph6", o.graph_id);
    o.elapsed_ms = clock.ms();
    return o;
}

CheckOutcome not_applicable(CheckOutcome o, const std::string& reason) {
    o.status = Status::not_applicable;
    o.witness["reason"] = reason;
    return o;
}

CheckOutcome compare_at_least(CheckOutcome o, long long lhs, long long rhs, const Stopwatch& clock) {
    o.lhs = lhs;
    o.rhs = rhs;
    return conclude(o, lhs >= rhs, clock);
}

CheckOutcome compare_ideals(CheckOutcome o, const MonomialIdeal& lhs, const MonomialIdeal& rhs, const Stopwatch& clock) {
    o.lhs = lhs.to_string();
    o.rhs = rhs.to_string();
    return conclude(o, lhs == rhs, clock);
}

Monomial edge_monomial(const Graph& h, const std::string& a, const std::string& b) {
    return monomial_of(h.labels(), {a, b});
}

// Even-connection formula for (I(H)^2 : x_i x_j), H = G \ A.
MonomialIdeal banerjee_formula(const Graph& h, int i, int j) {
    const auto n = static_cast<std::size_t>(h.size());
    std::vector<Monomial> gens = edge_ideal(h).generators();
    const VertexSet ni = h.neighbors(i);
    const VertexSet nj = h.neighbors(j);
    for (int p : members(ni))
        for (int q : members(nj))
            if (p != q) gens.push_back(Monomial::squarefree(n, bit(p) | bit(q)));
    for (int k : members(ni & nj)) {
        std::vector<std::uint32_t> e(n, 0);
        e[static_cast<std::size_t>(k)] = 2;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(h.labels(), std::move(gens));
}

// x_i x_j located in G \ A by label.
struct Reduced {
    Graph graph;
    int i;
    int j;
};

Reduced remove_pool_part(const Graph& g, Edge edge, VertexSet removed) {
    require_admissible(g, edge.u, edge.v, removed);
    Graph h = delete_vertices(g, removed);
    const int i = *h.index_of(g.label(edge.u));
    const int j = *h.index_of(g.label(edge.v));
    return {std::move(h), i, j};
}

void note_centers(CheckOutcome& o, const Graph& g) { o.witness["centers"] = g.describe(star_packing_number(g).centers); }

}  // namespace

CheckOutcome check_prop_spn(const Graph& g, const EngineOptions& engine) {
    Stopwatch clock;
    CheckOutcome o = start("spn", g, characteristic(engine.field));
    if (g.edge_count() == 0) return not_applicable(o, "edgeless");
    note_centers(o, g);
    return compare_at_least(o, depth_ideal(edge_ideal(g), engine), alpha2(g) + 1, clock);
}

std::vector<CheckOutcome> check_lemma_star(const Graph& g) {
    const auto tris = triangles(g);
    CheckOutcome base = start("star", g, 2);
    if (tris.empty()) return {not_applicable(base, "no triangle")};
    if (!is_wk3_free(g)) return {not_applicable(base, "contains an induced whiskered triangle")};
    const int a2 = alpha2(g);
    std::vector<CheckOutcome> out;
    for (const auto& t : tris) {
        Stopwatch local;
        CheckOutcome o = base;
        const VertexSet tri = bit(t[0]) | bit(t[1]) | bit(t[2]);
        const VertexSet removed = g.neighbors(tri);
        o.params = "triangle=" + g.describe(tri);
        o.witness["removed"] = g.describe(removed);
        note_centers(o, g);
        out.push_back(compare_at_least(o, alpha2_without(g, removed), a2 - 2, local));
    }
    return out;
}

CheckOutcome check_lemma_int(const Graph& g, Edge edge) {
    Stopwatch clock;
    CheckOutcome o = start("int", g, 2);
    const auto ec = even_connection_graph(g, edge.u, edge.v);
    o.params = "edge=" + edge_text(g, edge);
    const MonomialIdeal ideal = edge_ideal(g);
    const auto n = ideal.ambient_size();
    const MonomialIdeal lhs = intersect(colon(ideal, Monomial::variable(n, static_cast<std::size_t>(edge.u))),
                                        colon(ideal, Monomial::variable(n, static_cast<std::size_t>(edge.v))));
    const MonomialIdeal rhs =
        sum(with_ambient(edge_ideal(ec.graph), g.labels()), MonomialIdeal::variables(g.labels(), ec.common));
    o.witness["L"] = g.describe(ec.common);
    o.witness["G_prime"] = to_graph6(ec.graph);
    return compare_ideals(o, lhs, rhs, clock);
}

CheckOutcome check_lemma_depthlem(const Graph& g, Edge edge, VertexSet removed, const EngineOptions& engine) {
    Stopwatch clock;
    CheckOutcome o = start("depthlem", g, characteristic(engine.field));
    o.params = edge_params(g, edge, removed);
    const auto [h, i, j] = remove_pool_part(g, edge, removed);
    const MonomialIdeal ideal = edge_ideal(h);
    const auto n = ideal.ambient_size();
    const MonomialIdeal ji = intersect(colon(ideal, Monomial::variable(n, static_cast<std::size_t>(i))),
                                       colon(ideal, Monomial::variable(n, static_cast<std::size_t>(j))));
    note_centers(o, g);
    return compare_at_least(o, depth_ideal(ji, engine), alpha2(g), clock);
}

CheckOutcome check_cor_cordepth(const Graph& g, Edge edge, VertexSet removed, const EngineOptions& engine) {
    Stopwatch clock;
    CheckOutcome o = start("cordepth", g, characteristic(engine.field));
    o.params = edge_params(g, edge, removed);
    const auto [h, i, j] = remove_pool_part(g, edge, removed);
    const auto ec = even_connection_graph(g, edge.u, edge.v, removed);
    const MonomialIdeal ideal = edge_ideal(h);
    const auto n = ideal.ambient_size();
    const MonomialIdeal ji = intersect(colon(ideal, Monomial::variable(n, static_cast<std::size_t>(i))),
                                       colon(ideal, Monomial::variable(n, static_cast<std::size_t>(j))));
    VertexSet common_in_h = 0;
    for (int c : members(ec.common)) common_in_h |= bit(*h.index_of(g.label(c)));
    const MonomialIdeal target =
        sum(with_ambient(edge_ideal(ec.graph), h.labels()), MonomialIdeal::variables(h.labels(), common_in_h));
    o.witness["L"] = g.describe(ec.common);
    o.witness["G_prime"] = to_graph6(ec.graph);
    note_centers(o, g);
    if (ji != target) {
        o.witness["identity"] = "J = " + ji.to_string() + " but I(G')+(L) = " + target.to_string();
        o.lhs = ji.to_string();
        o.rhs = target.to_string();
        return conclude(o, false, clock);
    }
    return compare_at_least(o, depth_ideal(target, engine), alpha2(g), clock);
}

CheckOutcome check_lemma_last(const Graph& g, Edge edge, VertexSet removed, const EngineOptions& engine) {
    Stopwatch clock;
    CheckOutcome o = start("last", g, characteristic(engine.field));
    o.params = edge_params(g, edge, removed);
    const auto [h, i, j] = remove_pool_part(g, edge, removed);
    const MonomialIdeal c = colon(power(edge_ideal(h), 2), edge_monomial(h, h.label(i), h.label(j)));
    const bool wk3_free = is_wk3_free(g);
    o.witness["bound"] = wk3_free ? "alpha2-1" : "alpha2-2";
    note_centers(o, g);
    return compare_at_least(o, depth_ideal(c, engine), alpha2(g) - (wk3_free ? 1 : 2), clock);
}

std::vector<CheckOutcome> check_main(const Graph& g, const EngineOptions& engine) {
    Stopwatch clock;
    const int fc = characteristic(engine.field);
    std::vector<CheckOutcome> out{start("main1", g, fc), start("main2", g, fc), start("main3", g, fc)};
    if (g.edge_count() == 0) {
        for (auto& o : out) o = not_applicable(o, "edgeless");
        return out;
    }
    const long long depth = depth_ideal(power(edge_ideal(g), 2), engine);
    const int a2 = alpha2(g);
    const bool wk3_free = is_wk3_free(g);
    const bool triangle_free = is_triangle_free(g);
    for (auto& o : out) note_centers(o, g);
    out[0] = compare_at_least(out[0], depth, a2 - 2, clock);
    out[1] = wk3_free ? compare_at_least(out[1], depth, a2 - 1, clock)
                      : not_applicable(out[1], "contains an induced whiskered triangle");
    out[2] = triangle_free ? compare_at_least(out[2], depth, a2, clock) : not_applicable(out[2], "has a triangle");
    return out;
}

std::vector<CheckOutcome> check_examples_sharp(const EngineOptions& engine) {
    struct Instance {
        std::string name;
        Graph graph;
        long long depth;
        long long alpha2;
        int slack;  // bound = alpha2 - slack
    };
    const Graph wk3 = whiskered_triangle();
    const std::vector<Instance> instances{
        {"W(K3)", wk3, 1, 3, 2},
        {"W(K3) minus a leaf", delete_vertices(wk3, bit(*wk3.index_of("z3"))), 1, 2, 1},
        {"P4", path_graph(4), 2, 2, 0},
    };
    const int fc = characteristic(engine.field);
    std::vector<CheckOutcome> out;
    for (const auto& inst : instances) {
        Stopwatch clock;
        const long long depth = depth_ideal(power(edge_ideal(inst.graph), 2), engine);
        const auto packing = star_packing_number(inst.graph);
        const long long exhaustive = star_packing_number_exhaustive(inst.graph);

        CheckOutcome d = start("sharp_depth", inst.graph, fc);
        d.params = "graph=" + inst.name;
        d.lhs = depth;
        d.rhs = inst.depth;
        out.push_back(conclude(d, depth == inst.depth, clock));

        CheckOutcome a = start("sharp_alpha2", inst.graph, fc);
        a.params = "graph=" + inst.name;
        a.lhs = static_cast<long long>(packing.size);
        a.rhs = inst.alpha2;
        a.witness["centers"] = inst.graph.describe(packing.centers);
        a.witness["exhaustive"] = std::to_string(exhaustive);
        out.push_back(conclude(a, packing.size == inst.alpha2 && exhaustive == inst.alpha2, clock));

        CheckOutcome e = start("sharp_equality", inst.graph, fc);
        e.params = "graph=" + inst.name;
        e.lhs = depth;
        e.rhs = static_cast<long long>(packing.size - inst.slack);
        out.push_back(conclude(e, depth == packing.size - inst.slack, clock));
    }
    return out;
}

CheckOutcome check_banerjee_colon(const Graph& g, Edge edge, VertexSet removed) {
    Stopwatch clock;
    CheckOutcome o = start("banerjee", g, 2);
    o.params = edge_params(g, edge, removed);
    const auto [h, i, j] = remove_pool_part(g, edge, removed);
    const MonomialIdeal direct = colon(power(edge_ideal(h), 2), edge_monomial(h, h.label(i), h.label(j)));
    return compare_ideals(o, direct, banerjee_formula(h, i, j), clock);
}

CheckOutcome check_morey(const Graph& g, Edge edge) {
    Stopwatch clock;
    CheckOutcome o = start("morey", g, 2);
    const VertexSet removed = admissible_pool(g, edge.u, edge.v);
    o.params = edge_params(g, edge, removed);
    const auto [h, i, j] = remove_pool_part(g, edge, removed);
    const MonomialIdeal ideal = edge_ideal(h);
    return compare_ideals(o, colon(power(ideal, 2), edge_monomial(h, h.label(i), h.label(j))), ideal, clock);
}

CheckOutcome check_symbolic_square(const Graph& g, const EngineOptions& engine) {
    Stopwatch clock;
    CheckOutcome o = start("symbolic", g, characteristic(engine.field));
    if (g.edge_count() == 0) return not_applicable(o, "edgeless");
    const MonomialIdeal symbolic = symbolic_square_edge_ideal(g);
    const bool triangle_free = is_triangle_free(g);
    bool equal_ok = true;
    if (triangle_free) {
        equal_ok = symbolic == power(edge_ideal(g), 2);
        o.witness["ordinary_equals_symbolic"] = equal_ok ? "yes" : "no";
    }
    note_centers(o, g);
    const long long depth = depth_ideal(symbolic, engine);
    const long long a2 = alpha2(g);
    o.lhs = depth;
    o.rhs = a2;
    return conclude(o, equal_ok && depth >= a2, clock);
}

CheckOutcome check_symbolic_equality(const Graph& g) {
    Stopwatch clock;
    CheckOutcome o = start("symbolic_eq", g, 2);
    if (!is_triangle_free(g)) return not_applicable(o, "has a triangle");
    return compare_ideals(o, power(edge_ideal(g), 2), symbolic_square_edge_ideal(g), clock);
}

CheckOutcome check_order_decomposition(const Graph& g) {
    Stopwatch clock;
    CheckOutcome o = start("order", g, 2);
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return not_applicable(o, "edgeless");
    if (m > 8) return not_applicable(o, "more than 8 edges");

    const MonomialIdeal ideal = edge_ideal(g);
    const MonomialIdeal square = power(ideal, 2);
    const auto n = ideal.ambient_size();
    std::vector<Monomial> gen(m);
    std::vector<MonomialIdeal> base(m);
    for (int k = 0; k < m; ++k) {
        gen[k] = Monomial::squarefree(n, bit(edges[k].u) | bit(edges[k].v));
        base[k] = colon(square, gen[k]);
    }
    // Whether u_k may follow the set `placed` depends on the set only, so the
    // search runs over subsets instead of permutations.
    const auto allowed = [&](unsigned placed, int k) {
        std::vector<Monomial> earlier;
        for (int s : members(placed)) earlier.push_back(gen[s]);
        const MonomialIdeal c = colon(sum(square, MonomialIdeal(g.labels(), earlier)), gen[k]);
        const VertexSet vars = c.linear_part();
        if (vars & ~admissible_pool(g, edges[k].u, edges[k].v)) return false;
        return c == sum(base[k], MonomialIdeal::variables(g.labels(), vars));
    };
    const unsigned full = (1u << m) - 1;
    std::vector<int> came_from(full + 1, -2);  // -2 unreached, else last edge placed
    came_from[0] = -1;
    for (unsigned placed = 0; placed < full; ++placed) {
        if (came_from[placed] == -2) continue;
        for (int k = 0; k < m; ++k) {
            const unsigned next = placed | (1u << k);
            if ((placed & (1u << k)) || came_from[next] != -2) continue;
            if (allowed(placed, k)) came_from[next] = k;
        }
    }
    o.lhs = static_cast<long long>(came_from[full] != -2 ? 1 : 0);
    o.rhs = 1LL;
    if (came_from[full] != -2) {
        std::vector<std::string> order;
        for (unsigned s = full; s; s &= ~(1u << came_from[s])) order.push_back(edge_text(g, edges[came_from[s]]));
        std::reverse(order.begin(), order.end());
        std::string text;
        for (const auto& e : order) text += (text.empty() ? "" : ",") + e;
        o.witness["order"] = text;
    } else {
        o.witness["order"] = "none";
    }
    return conclude(o, came_from[full] != -2, clock);
}

CheckOutcome check_deletion_bound(const Graph& g, Edge edge, VertexSet removed) {
    Stopwatch clock;
    CheckOutcome o = start("deletion", g, 2);
    o.params = edge_params(g, edge, removed);
    require_admissible(g, edge.u, edge.v, removed);
    const int a2 = alpha2(g);
    const int around_i = alpha2_without(g, removed | g.closed_neighbors(edge.u));
    const int around_j = alpha2_without(g, removed | g.closed_neighbors(edge.v));
    const int both = alpha2_without(g, g.closed_neighbors(edge.u) | g.closed_neighbors(edge.v));
    o.witness["A_and_N[x_i]"] = std::to_string(around_i);
    o.witness["A_and_N[x_j]"] = std::to_string(around_j);
    o.witness["N[x_i]_and_N[x_j]"] = std::to_string(both);
    return compare_at_least(o, std::min({around_i, around_j, both}), a2 - 2, clock);
}

AdmissibleSets admissible_sets(const Graph& g, Edge edge, const HarnessOptions& options) {
    const VertexSet pool = admissible_pool(g, edge.u, edge.v);
    const auto pool_members = members(pool);
    AdmissibleSets out;
    if (static_cast<int>(pool_members.size()) <= options.exhaustive_pool_limit) {
        // all submasks of the pool, ascending
        VertexSet s = 0;
        do {
            out.sets.push_back(s);
            s = (s - pool) & pool;
        } while (s != 0);
        return out;
    }
    out.sampled = true;
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                                   static_cast<std::uint32_t>(edge.u), static_cast<std::uint32_t>(edge.v)};
    for (char c : to_graph6(g)) key.push_back(static_cast<unsigned char>(c));
    std::seed_seq seq(key.begin(), key.end());
    std::mt19937_64 rng(seq);
    for (int k = 0; k < options.samples_per_edge; ++k) {
        VertexSet s = 0;
        std::uint64_t bits = rng();
        for (int v : pool_members) {
            if (bits & 1) s |= bit(v);
            bits >>= 1;
        }
        out.sets.push_back(s);
    }
    std::sort(out.sets.begin(), out.sets.end());
    out.sets.erase(std::unique(out.sets.begin(), out.sets.end()), out.sets.end());
    return out;
}

namespace {

template <class Fn>
std::vector<CheckOutcome> per_admissible(const Graph& g, const HarnessOptions& options, const Fn& fn) {
    std::vector<CheckOutcome> out;
    for (const auto& e : g.edges()) {
        const auto family = admissible_sets(g, e, options);
        for (auto a : family.sets) {
            out.push_back(fn(e, a));
            out.back().sampled = family.sampled;
        }
    }
    return out;
}

std::vector<CheckOutcome> edgeless_marker(const std::string& id, const Graph& g, int fc) {
    return {not_applicable(start(id, g, fc), "edgeless")};
}

std::vector<CheckOutcome> main_part(const Graph& g, const HarnessOptions& o, const std::string& part) {
    auto all = check_main(g, o.engine);
    std::vector<CheckOutcome> out;
    for (auto& c : all)
        if (c.check_id == part) out.push_back(std::move(c));
    return out;
}

std::vector<CheckDefinition> build_registry() {
    using Out = std::vector<CheckOutcome>;
    std::vector<CheckDefinition> r;
    r.push_back({"spn", "depth I(G) >= alpha2 + 1", true, true,
                 [](const Graph& g, const HarnessOptions& o) { return Out{check_prop_spn(g, o.engine)}; }});
    r.push_back({"star", "alpha2 after deleting triangle neighbourhoods >= alpha2 - 2", false, true,
                 [](const Graph& g, const HarnessOptions&) { return check_lemma_star(g); }});
    r.push_back({"int", "(I:x_i) meet (I:x_j) = I(G') + (L)", false, true, [](const Graph& g, const HarnessOptions&) {
                     if (g.edge_count() == 0) return edgeless_marker("int", g, 2);
                     Out out;
                     for (const auto& e : g.edges()) out.push_back(check_lemma_int(g, e));
                     return out;
                 }});
    r.push_back({"depthlem", "depth of the colon intersection >= alpha2", true, true,
                 [](const Graph& g, const HarnessOptions& o) {
                     if (g.edge_count() == 0) return edgeless_marker("depthlem", g, characteristic(o.engine.field));
                     return per_admissible(g, o, [&](Edge e, VertexSet a) { return check_lemma_depthlem(g, e, a, o.engine); });
                 }});
    r.push_back({"cordepth", "depth(I(G') + (L)) >= alpha2 and the identity J = I(G') + (L)", true, true,
                 [](const Graph& g, const HarnessOptions& o) {
                     if (g.edge_count() == 0) return edgeless_marker("cordepth", g, characteristic(o.engine.field));
                     return per_admissible(g, o, [&](Edge e, VertexSet a) { return check_cor_cordepth(g, e, a, o.engine); });
                 }});
    r.push_back({"last", "depth (I(G\\A)^2 : x_i x_j) >= alpha2 - 2 (alpha2 - 1 if W(K3)-free)", true, true,
                 [](const Graph& g, const HarnessOptions& o) {
                     if (g.edge_count() == 0) return edgeless_marker("last", g, characteristic(o.engine.field));
                     return per_admissible(g, o, [&](Edge e, VertexSet a) { return check_lemma_last(g, e, a, o.engine); });
                 }});
    r.push_back({"main", "depth I(G)^2 lower bounds, all three parts", true, true,
                 [](const Graph& g, const HarnessOptions& o) { return check_main(g, o.engine); }});
    for (const char* part : {"main1", "main2", "main3"}) {
        const std::string name = part;
        r.push_back({name, "single part of main", true, false,
                     [name](const Graph& g, const HarnessOptions& o) { return main_part(g, o, name); }});
    }
    r.push_back({"banerjee", "even-connection formula for (I(G\\A)^2 : x_i x_j)", false, true,
                 [](const Graph& g, const HarnessOptions& o) {
                     if (g.edge_count() == 0) return edgeless_marker("banerjee", g, 2);
                     return per_admissible(g, o, [&](Edge e, VertexSet a) { return check_banerjee_colon(g, e, a); });
                 }});
    r.push_back({"morey", "(I^2 : x_i x_j) = I when x_i x_j is a component", false, true,
                 [](const Graph& g, const HarnessOptions&) {
                     if (g.edge_count() == 0) return edgeless_marker("morey", g, 2);
                     Out out;
                     for (const auto& e : g.edges()) out.push_back(check_morey(g, e));
                     return out;
                 }});
    r.push_back({"symbolic", "I^2 = I^(2) if triangle-free; depth I^(2) >= alpha2", true, true,
                 [](const Graph& g, const HarnessOptions& o) { return Out{check_symbolic_square(g, o.engine)}; }});
    r.push_back({"symbolic_eq", "I^2 = I^(2) for triangle-free graphs", false, true,
                 [](const Graph& g, const HarnessOptions&) { return Out{check_symbolic_equality(g)}; }});
    r.push_back({"order", "an edge order realizing the colon decomposition exists", false, true,
                 [](const Graph& g, const HarnessOptions&) { return Out{check_order_decomposition(g)}; }});
    r.push_back({"deletion", "alpha2 after the neighbourhood deletions >= alpha2 - 2", false, true,
                 [](const Graph& g, const HarnessOptions& o) {
                     if (g.edge_count() == 0) return edgeless_marker("deletion", g, 2);
                     return per_admissible(g, o, [&](Edge e, VertexSet a) { return check_deletion_bound(g, e, a); });
                 }});
    return r;
}

}  // namespace

const std::vector<CheckDefinition>& check_registry() {
    static const std::vector<CheckDefinition> registry = build_registry();
    return registry;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    const auto& reg = check_registry();
    for (const auto& name : names) {
        if (name == "all") {
            for (const auto& def : reg)
                if (def.in_all) out.push_back(def.name);
            continue;
        }
        if (name == "examples") {
            out.push_back(name);
            continue;
        }
        const bool known = std::any_of(reg.begin(), reg.end(), [&](const CheckDefinition& s) { return s.name == name; });
        if (!known) throw std::invalid_argument("unknown check '" + name + "'");
        out.push_back(name);
    }
    std::vector<std::string> unique;
    for (const auto& n : out)
        if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(n);
    return unique;
}

Summary tally(const std::vector<CheckOutcome>& outcomes) {
    Summary s;
    for (const auto& o : outcomes) {
        switch (o.status) {
            case Status::holds: ++s.holds; break;
            case Status::fails: ++s.fails; break;
            case Status::not_applicable: ++s.not_applicable; break;
        }
        if (o.sampled) ++s.sampled;
    }
    return s;
}

namespace {

std::vector<CheckOutcome> run_one_graph(const Graph& g, const std::vector<const CheckDefinition*>& defs,
                                        const std::vector<FieldChoice>& fields, const HarnessOptions& options) {
    std::vector<CheckOutcome> out;
    for (const auto* def : defs) {
        // field-independent checks run once
        const std::size_t runs = def->uses_depth ? fields.size() : 1;
        for (std::size_t f = 0; f < runs; ++f) {
            HarnessOptions local = options;
            local.engine.field = fields[f];
            local.engine.jobs = 1;
            auto part = def->run(g, local);
            for (auto& o : part) o.field_char = characteristic(fields[f]);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    return out;
}

}  // namespace

std::vector<Finding> field_disagreements(const std::vector<CheckOutcome>& outcomes) {
    std::vector<Finding> out;
    std::map<std::tuple<std::string, std::string, std::string>, const CheckOutcome*> first;
    for (const auto& o : outcomes) {
        auto key = std::make_tuple(o.check_id, o.graph_id, o.params);
        auto [it, inserted] = first.emplace(key, &o);
        if (inserted || it->second->field_char == o.field_char) continue;
        const auto& other = *it->second;
        if (other.lhs != o.lhs || other.status != o.status) {
            out.push_back({o.check_id, o.graph_id, o.params,
                           "char " + std::to_string(other.field_char) + " gives " + to_string(other.lhs) + " (" +
                               to_string(other.status) + "), char " + std::to_string(o.field_char) + " gives " +
                               to_string(o.lhs) + " (" + to_string(o.status) + ")"});
        }
    }
    return out;
}

VerificationReport run_suite(const Corpus& corpus, const std::vector<std::string>& checks,
                             const std::vector<FieldChoice>& fields, const HarnessOptions& options) {
    if (fields.empty()) throw std::invalid_argument("at least one field is required");
    const auto names = resolve_checks(checks);
    std::vector<const CheckDefinition*> defs;
    bool examples = false;
    for (const auto& n : names) {
        if (n == "examples") {
            examples = true;
            continue;
        }
        for (const auto& s : check_registry())
            if (s.name == n) defs.push_back(&s);
    }

    VerificationReport report;
    report.corpus = corpus.descriptor;
    for (auto f : fields) report.field_chars.push_back(characteristic(f));
    report.seed = options.seed;
    report.checks = names;

    if (examples) {
        for (auto f : fields) {
            EngineOptions engine = options.engine;
            engine.field = f;
            auto part = check_examples_sharp(engine);
            report.outcomes.insert(report.outcomes.end(), part.begin(), part.end());
        }
    }

    const auto deadline = options.budget_seconds
                              ? std::optional(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                                 std::chrono::duration<double>(*options.budget_seconds)))
                              : std::nullopt;
    std::vector<std::vector<CheckOutcome>> per_graph(corpus.graphs.size());
    std::vector<std::uint8_t> done(corpus.graphs.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex error_lock;
    std::exception_ptr error;
    const auto worker = [&] {
        for (std::size_t k = next++; k < corpus.graphs.size(); k = next++) {
            if (deadline && Clock::now() > *deadline) continue;
            try {
                per_graph[k] = run_one_graph(corpus.graphs[k], defs, fields, options);
                done[k] = 1;
            } catch (...) {
                std::lock_guard lock(error_lock);
                if (!error) error = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, options.jobs);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    for (std::size_t k = 0; k < per_graph.size(); ++k) {
        if (!done[k]) {
            report.truncated = true;
            ++report.graphs_skipped;
        }
        report.outcomes.insert(report.outcomes.end(), per_graph[k].begin(), per_graph[k].end());
    }
    report.summary = tally(report.outcomes);
    if (fields.size() > 1) report.findings = field_disagreements(report.outcomes);
    return report;
}

HuntResult hunt(const std::string& check, int n, int count, const std::vector<FieldChoice>& fields,
                const HarnessOptions& options) {
    resolve_checks({check});
    std::mt19937_64 rng(options.seed);
    HuntResult result;
    Corpus corpus{"random G(" + std::to_string(n) + ", 1/2) x" + std::to_string(count) + " seed " +
                      std::to_string(options.seed),
                  {}};
    result.report.corpus = corpus.descriptor;
    for (auto f : fields) result.report.field_chars.push_back(characteristic(f));
    result.report.seed = options.seed;
    result.report.checks = {check};
    for (int k = 0; k < count; ++k) {
        Corpus one{corpus.descriptor, {random_graph(n, rng)}};
        auto part = run_suite(one, {check}, fields, options);
        result.report.outcomes.insert(result.report.outcomes.end(), part.outcomes.begin(), part.outcomes.end());
        result.report.findings.insert(result.report.findings.end(), part.findings.begin(), part.findings.end());
        for (const auto& o : part.outcomes) {
            if (o.status == Status::fails) {
                result.counterexample = o;
                break;
            }
        }
        if (result.counterexample) break;
    }
    result.report.summary = tally(result.report.outcomes);
    return result;
}

}  // namespace eil
