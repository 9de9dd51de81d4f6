#include "doctest.h"

#include <random>
#include <sstream>

#include "eil/catalog.hpp"
#include "eil/graph_io.hpp"
#include "eil/ideal.hpp"
#include "support.hpp"

using namespace eil;
using namespace testing_support;

namespace {

using Names = std::vector<std::string>;

const Names xyz{"x", "y", "z"};

// "x^2*y" over the given names; "1" is the unit monomial.
Monomial mono(const Names& ambient, const std::string& text) {
    std::vector<std::uint32_t> e(ambient.size(), 0);
    if (text == "1") return Monomial(e);
    std::stringstream s(text);
    std::string factor;
    while (std::getline(s, factor, '*')) {
        const auto caret = factor.find('^');
        const std::string name = factor.substr(0, caret);
        const std::uint32_t k = caret == std::string::npos ? 1 : std::stoul(factor.substr(caret + 1));
        const auto it = std::find(ambient.begin(), ambient.end(), name);
        REQUIRE(it != ambient.end());
        e[it - ambient.begin()] += k;
    }
    return Monomial(e);
}

MonomialIdeal ideal(const Names& ambient, const std::vector<std::string>& gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(mono(ambient, g));
    return MonomialIdeal(ambient, ms);
}

// Membership straight from the generator list.
bool member(const std::vector<Monomial>& gens, const Monomial& m) {
    for (const auto& g : gens) {
        bool divides = true;
        for (std::size_t i = 0; i < m.size(); ++i) divides = divides && g[i] <= m[i];
        if (divides) return true;
    }
    return false;
}

Monomial random_monomial(std::size_t n, std::uint32_t max_exp, std::mt19937_64& rng) {
    std::vector<std::uint32_t> e(n);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_exp + 1));
    return Monomial(e);
}

MonomialIdeal random_ideal(const Names& ambient, std::mt19937_64& rng, std::uint32_t max_exp = 3) {
    const int count = 1 + static_cast<int>(rng() % 4);
    std::vector<Monomial> gens;
    for (int k = 0; k < count; ++k) {
        Monomial m = random_monomial(ambient.size(), max_exp, rng);
        if (m.is_one()) continue;
        gens.push_back(m);
    }
    if (gens.empty()) gens.push_back(Monomial::variable(ambient.size(), 0));
    return MonomialIdeal(ambient, gens);
}

Names names(std::size_t n) {
    Names out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

// Minimal vertex covers by scanning all subsets.
std::vector<VertexSet> brute_covers(const Graph& g) {
    std::vector<VertexSet> covers;
    const VertexSet full = g.all();
    for (VertexSet c = 0; c <= full; ++c) {
        bool covers_all = true;
        for (auto e : g.edges()) covers_all = covers_all && ((c >> e.u & 1) || (c >> e.v & 1));
        if (covers_all) covers.push_back(c);
    }
    std::vector<VertexSet> minimal;
    for (auto c : covers) {
        bool is_min = true;
        for (auto d : covers) is_min = is_min && !(d != c && (d & c) == d);
        if (is_min) minimal.push_back(c);
    }
    return minimal;
}

}  // namespace

TEST_CASE("edge ideals") {
    const Graph k2({"x", "y"}, {{0, 1}});
    CHECK(edge_ideal(k2).to_string() == "(x*y)");
    CHECK(edge_ideal(Graph(xyz, {{0, 1}, {0, 2}, {1, 2}})) == ideal(xyz, {"x*y", "x*z", "y*z"}));
    const auto zero = edge_ideal(Graph(3));
    CHECK(zero.is_zero());
    CHECK(zero.ambient_size() == 3);
    CHECK(zero.to_string() == "(0)");
}

TEST_CASE("minimal generators and canonical order") {
    CHECK(ideal(xyz, {"y", "y*z", "x*y"}) == ideal(xyz, {"y"}));
    CHECK(ideal(xyz, {"x^2", "x"}) == ideal(xyz, {"x"}));
    CHECK(ideal(xyz, {"x*y", "x*z", "y*z", "x*z^2", "z^2", "y*z^2"}) == ideal(xyz, {"x*y", "x*z", "y*z", "z^2"}));
    CHECK(ideal(xyz, {"y^2", "x*y", "x^2"}).to_string() == "(x^2, x*y, y^2)");
    CHECK(ideal(xyz, {"1", "x"}).is_unit());
    CHECK_THROWS_AS(MonomialIdeal(xyz, {Monomial(2)}), std::invalid_argument);
    CHECK_THROWS_AS(MonomialIdeal({"x", "x"}, {}), std::invalid_argument);
}

TEST_CASE("powers") {
    CHECK(power(ideal(xyz, {"x*y"}), 2) == ideal(xyz, {"x^2*y^2"}));
    const auto k3 = ideal(xyz, {"x*y", "x*z", "y*z"});
    CHECK(power(k3, 2) ==
          ideal(xyz, {"x^2*y^2", "x^2*y*z", "x^2*z^2", "x*y^2*z", "x*y*z^2", "y^2*z^2"}));
    CHECK(power(k3, 1) == k3);
    CHECK(power(k3, 3) == product(power(k3, 2), k3));
}

TEST_CASE("colon") {
    CHECK(colon(ideal(xyz, {"x*y"}), mono(xyz, "x")) == ideal(xyz, {"y"}));
    const auto k3 = ideal(xyz, {"x*y", "x*z", "y*z"});
    CHECK(colon(k3, mono(xyz, "1")) == k3);
    CHECK(colon(power(k3, 2), mono(xyz, "x*y")) == ideal(xyz, {"x*y", "x*z", "y*z", "z^2"}));
    CHECK(colon(k3, mono(xyz, "x*y")).is_unit());
}

TEST_CASE("intersection") {
    CHECK(intersect(ideal(xyz, {"x"}), ideal(xyz, {"y"})) == ideal(xyz, {"x*y"}));
    const auto k3 = ideal(xyz, {"x*y", "x*z", "y*z"});
    CHECK(intersect(k3, k3) == k3);
    CHECK(intersect(ideal(xyz, {"y", "z"}), ideal(xyz, {"x", "z"})) == ideal(xyz, {"z", "x*y"}));
    CHECK(intersect(k3, MonomialIdeal::zero(xyz)).is_zero());
    CHECK_THROWS_AS(intersect(k3, MonomialIdeal::zero({"a", "b", "c"})), std::invalid_argument);
}

TEST_CASE("membership") {
    CHECK(ideal(xyz, {"x*y"}).contains(mono(xyz, "x^2*y")));
    CHECK_FALSE(MonomialIdeal::zero(xyz).contains(mono(xyz, "x")));
    CHECK_FALSE(power(ideal(xyz, {"x*y", "x*z", "y*z"}), 2).contains(mono(xyz, "x*y*z")));
}

TEST_CASE("membership laws on random monomials") {
    std::mt19937_64 rng(101);
    const Names amb = names(4);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto i = random_ideal(amb, rng);
        const auto j = random_ideal(amb, rng);
        const Monomial m = random_monomial(4, 2, rng);
        const Monomial v = random_monomial(4, 4, rng);
        const auto& gi = i.generators();
        const auto& gj = j.generators();
        CHECK(colon(i, m).contains(v) == member(gi, v * m));
        CHECK(intersect(i, j).contains(v) == (member(gi, v) && member(gj, v)));
        CHECK(sum(i, j).contains(v) == (member(gi, v) || member(gj, v)));
        CHECK(i.contains(v) == member(gi, v));
        // products: v is in IJ iff some a*b divides it
        bool in_product = false;
        for (const auto& a : gi)
            for (const auto& b : gj) in_product = in_product || member({a * b}, v);
        CHECK(product(i, j).contains(v) == in_product);
        // the stored generators form an antichain
        for (const auto& a : gi)
            for (const auto& b : gi) CHECK((a == b || !a.divides(b)));
    }
}

TEST_CASE("I is inside (I^2 : e) for every generator e") {
    for (const auto& g : load_corpus(6)) {
        const auto i = edge_ideal(g);
        const auto sq = power(i, 2);
        for (const auto& e : i.generators()) CHECK(colon(sq, e).contains(i));
    }
}

TEST_CASE("Banerjee colon law") {
    for (const auto& g : load_corpus(6)) {
        for (auto e : g.edges()) {
            const VertexSet pool = admissible_pool(g, e.u, e.v);
            VertexSet a = 0;
            do {
                const Graph h = delete_vertices(g, a);
                const int i = *h.index_of(g.label(e.u));
                const int j = *h.index_of(g.label(e.v));
                const auto n = static_cast<std::size_t>(h.size());
                std::vector<Monomial> gens = edge_ideal(h).generators();
                for (int p : members(h.neighbors(i)))
                    for (int q : members(h.neighbors(j)))
                        if (p != q) gens.push_back(Monomial::squarefree(n, bit(p) | bit(q)));
                for (int k : members(h.neighbors(i) & h.neighbors(j))) {
                    std::vector<std::uint32_t> x(n, 0);
                    x[k] = 2;
                    gens.emplace_back(x);
                }
                const MonomialIdeal formula(h.labels(), gens);
                REQUIRE(colon(power(edge_ideal(h), 2), Monomial::squarefree(n, bit(i) | bit(j))) == formula);
                a = (a - pool) & pool;
            } while (a != 0);
        }
    }
}

TEST_CASE("Morey law for an edge that is a component") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph rest = random_labelled(1 + static_cast<int>(rng() % 6), 0.5, rng);
        const Graph g = disjoint_union(Graph({"a", "b"}, {{0, 1}}), rest);
        const auto i = edge_ideal(g);
        CHECK(colon(power(i, 2), monomial_of(g.labels(), {"a", "b"})) == i);
    }
}

TEST_CASE("intersection of single-variable colons") {
    const auto check = [](const Graph& g) {
        const auto i = edge_ideal(g);
        const auto n = i.ambient_size();
        for (auto e : g.edges()) {
            const auto lhs = intersect(colon(i, Monomial::variable(n, e.u)), colon(i, Monomial::variable(n, e.v)));
            const auto ec = even_connection_graph(g, e.u, e.v);
            const auto rhs =
                sum(with_ambient(edge_ideal(ec.graph), g.labels()), MonomialIdeal::variables(g.labels(), ec.common));
            REQUIRE(lhs == rhs);
        }
    };
    for (const auto& g : load_corpus(6)) check(g);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) check(random_labelled(2 + static_cast<int>(rng() % 8), 0.4, rng));

    // P4 a-b-c-d, edge bc: the result is the edge ideal of C4
    const Graph p4 = parse_edge_list("a b\nb c\nc d\n");
    const Names abcd{"a", "b", "c", "d"};
    const auto i = edge_ideal(p4);
    CHECK(intersect(colon(i, mono(abcd, "b")), colon(i, mono(abcd, "c"))) ==
          ideal(abcd, {"a*b", "a*d", "b*c", "c*d"}));
}

TEST_CASE("minimal vertex covers") {
    for (const auto& g : load_corpus(6)) CHECK(minimal_vertex_covers(g) == brute_covers(g));
}

TEST_CASE("second symbolic power") {
    const Graph k2({"x", "y"}, {{0, 1}});
    CHECK(symbolic_square_edge_ideal(k2) == power(edge_ideal(k2), 2));
    const Graph k3(xyz, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(symbolic_square_edge_ideal(k3) == sum(power(edge_ideal(k3), 2), ideal(xyz, {"x*y*z"})));
    const Graph p4 = path_graph(4);
    CHECK(symbolic_square_edge_ideal(p4) == power(edge_ideal(p4), 2));
}

TEST_CASE("symbolic square by prime membership, sandwich and the triangle formula") {
    std::mt19937_64 rng(13);
    for (const auto& g : load_corpus(6)) {
        if (g.edge_count() == 0) continue;
        const auto i = edge_ideal(g);
        const auto sq = power(i, 2);
        const auto sym = symbolic_square_edge_ideal(g);
        CHECK(sym.contains(sq));
        CHECK(i.contains(sym));
        if (is_triangle_free(g)) CHECK(sym == sq);
        // I^2 plus the triangle products
        std::vector<Monomial> gens = sq.generators();
        for (const auto& t : triangles(g))
            gens.push_back(Monomial::squarefree(g.size(), bit(t[0]) | bit(t[1]) | bit(t[2])));
        CHECK(sym == MonomialIdeal(g.labels(), gens));
        const auto covers = brute_covers(g);
        for (int trial = 0; trial < 20; ++trial) {
            const Monomial m = random_monomial(g.size(), 2, rng);
            bool in_all = true;
            for (auto c : covers) {
                std::uint32_t weight = 0;
                for (int v : members(c)) weight += m[v];
                in_all = in_all && weight >= 2;
            }
            CHECK(sym.contains(m) == in_all);
        }
    }
}

TEST_CASE("polarization") {
    const Names xy{"x", "y"};
    const auto p1 = polarize(ideal(xy, {"x^2*y^2"}));
    CHECK(p1.extra == 2);
    CHECK(p1.ideal.ambient() == Names{"x", "x_2", "y", "y_2"});
    CHECK(p1.ideal.to_string() == "(x*x_2*y*y_2)");

    const auto p2 = polarize(ideal(xy, {"x^2", "x*y"}));
    CHECK(p2.extra == 1);
    CHECK(p2.ideal.to_string() == "(x*x_2, x*y)");

    // the colon of K3 squared by xy polarizes to K3 plus a whisker at z
    const Graph k3(xyz, {{0, 1}, {0, 2}, {1, 2}});
    const auto pol = polarize(colon(power(edge_ideal(k3), 2), mono(xyz, "x*y")));
    const Graph h = whiskered_colon_graph(k3, 0, 1);
    CHECK(pol.ideal == with_ambient(edge_ideal(h), pol.ideal.ambient()));
}

TEST_CASE("depolarization returns the original ideal") {
    std::mt19937_64 rng(29);
    const Names amb = names(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto i = random_ideal(amb, rng);
        const auto p = polarize(i);
        CHECK(p.ideal.is_squarefree());
        CHECK(p.ideal.ambient_size() == amb.size() + p.extra);
        CHECK(p.ideal.generators().size() == i.generators().size());
        CHECK(depolarize(p, amb) == i);
    }
}

TEST_CASE("with_ambient and monomial_of") {
    const auto i = ideal(xyz, {"x*z"});
    const auto moved = with_ambient(i, {"z", "w", "x"});
    CHECK(moved.to_string() == "(z*x)");
    CHECK_THROWS_AS(with_ambient(i, {"x", "y"}), std::invalid_argument);
    CHECK(monomial_of(xyz, {"x", "x", "z"}) == mono(xyz, "x^2*z"));
    CHECK_THROWS_AS(monomial_of(xyz, {"w"}), std::invalid_argument);
}
