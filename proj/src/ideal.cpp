#include "eil/ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eil {

Monomial Monomial::variable(std::size_t ambient_size, std::size_t index) {
    Monomial m(ambient_size);
    m.exps_.at(index) = 1;
    return m;
}

Monomial Monomial::squarefree(std::size_t ambient_size, VertexSet s) {
    Monomial m(ambient_size);
    for (int v : members(s)) m.exps_.at(v) = 1;
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

VertexSet Monomial::support() const {
    if (exps_.size() > 64) throw std::length_error("support mask needs at most 64 variables");
    VertexSet s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i]) s |= bit(static_cast<int>(i));
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return out;
}

Monomial strip(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0;
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // larger exponent vector sorts first within a degree
    return b.exps_ <=> a.exps_;
}

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ideals live over different ambient variable lists");
}

std::vector<Monomial> minimal_sorted(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        // divisors have strictly lower degree, so they were visited already
        const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> ambient, std::vector<Monomial> gens)
    : ambient_(std::move(ambient)) {
    std::set<std::string> names(ambient_.begin(), ambient_.end());
    if (names.size() != ambient_.size()) throw std::invalid_argument("repeated variable name in ambient");
    for (const auto& g : gens) {
        if (g.size() != ambient_.size()) throw std::invalid_argument("generator length does not match ambient size");
    }
    gens_ = minimal_sorted(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> ambient) { return MonomialIdeal(std::move(ambient), {}); }

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> ambient) {
    const auto n = ambient.size();
    return MonomialIdeal(std::move(ambient), {Monomial(n)});
}

MonomialIdeal MonomialIdeal::variables(std::vector<std::string> ambient, VertexSet which) {
    const auto n = ambient.size();
    std::vector<Monomial> gens;
    for (int v : members(which)) gens.push_back(Monomial::variable(n, static_cast<std::size_t>(v)));
    return MonomialIdeal(std::move(ambient), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    require_same_ambient(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

VertexSet MonomialIdeal::linear_part() const {
    VertexSet s = 0;
    for (const auto& g : gens_)
        if (g.degree() == 1) s |= g.support();
    return s;
}

std::string MonomialIdeal::to_string() const {
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k) out += ", ";
        const auto& g = gens_[k];
        if (g.is_one()) {
            out += "1";
            continue;
        }
        bool first = true;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g[i]) continue;
            if (!first) out += "*";
            out += ambient_[i];
            if (g[i] > 1) out += "^" + std::to_string(g[i]);
            first = false;
        }
    }
    return out + ")";
}

std::string MonomialIdeal::to_rows() const {
    std::ostringstream out;
    for (const auto& g : gens_) {
        for (std::size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << g[i];
        out << '\n';
    }
    return out.str();
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::vector<std::string> ambient) {
    return MonomialIdeal(std::move(ambient), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) gens.push_back(u * v);
    return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
    if (k < 1) throw std::invalid_argument("power exponent must be positive");
    MonomialIdeal out = ideal;
    for (int i = 1; i < k; ++i) out = product(out, ideal);
    return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
    if (m.size() != ideal.ambient_size()) throw std::invalid_argument("monomial does not match ambient size");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& u : ideal.generators()) gens.push_back(strip(u, m));
    return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) gens.push_back(lcm(u, v));
    return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal with_ambient(const MonomialIdeal& ideal, const std::vector<std::string>& ambient) {
    std::map<std::string, std::size_t> target;
    for (std::size_t k = 0; k < ambient.size(); ++k) target[ambient[k]] = k;
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<std::uint32_t> exps(ambient.size(), 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g[i]) continue;
            auto it = target.find(ideal.ambient()[i]);
            if (it == target.end()) throw std::invalid_argument("variable " + ideal.ambient()[i] + " missing from target ambient");
            exps[it->second] = g[i];
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(ambient, std::move(gens));
}

Monomial monomial_of(const std::vector<std::string>& ambient, const std::vector<std::string>& names) {
    Monomial m(ambient.size());
    std::vector<std::uint32_t> exps(ambient.size(), 0);
    for (const auto& name : names) {
        auto it = std::find(ambient.begin(), ambient.end(), name);
        if (it == ambient.end()) throw std::invalid_argument("unknown variable " + name);
        ++exps[static_cast<std::size_t>(it - ambient.begin())];
    }
    return Monomial(std::move(exps));
}

MonomialIdeal edge_ideal(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<Monomial> gens;
    for (const auto& e : g.edges()) gens.push_back(Monomial::squarefree(n, bit(e.u) | bit(e.v)));
    return MonomialIdeal(g.labels(), std::move(gens));
}

namespace {

// Bron-Kerbosch with pivoting on the complement: maximal independent sets.
void maximal_independent(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    const auto non_neighbors = [&](int v) { return g.all() & ~g.closed_neighbors(v); };
    const int pivot = std::countr_zero(p | x);
    for (int v : members(p & ~non_neighbors(pivot))) {
        maximal_independent(g, r | bit(v), p & non_neighbors(v), x & non_neighbors(v), out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

}  // namespace

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexSet> independent;
    maximal_independent(g, 0, g.all(), 0, independent);
    std::vector<VertexSet> covers;
    covers.reserve(independent.size());
    for (auto s : independent) covers.push_back(g.all() & ~s);
    std::sort(covers.begin(), covers.end());
    return covers;
}

MonomialIdeal symbolic_square_edge_ideal(const Graph& g) {
    std::vector<MonomialIdeal> squares;
    for (auto cover : minimal_vertex_covers(g)) {
        squares.push_back(power(MonomialIdeal::variables(g.labels(), cover), 2));
    }
    if (squares.empty()) return MonomialIdeal::zero(g.labels());
    MonomialIdeal out = squares.front();
    for (std::size_t k = 1; k < squares.size(); ++k) out = intersect(out, squares[k]);
    return out;
}

PolarizationResult polarize(const MonomialIdeal& ideal) {
    const auto n = ideal.ambient_size();
    std::vector<std::uint32_t> top(n, 0);
    for (const auto& g : ideal.generators())
        for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g[i]);

    std::set<std::string> taken(ideal.ambient().begin(), ideal.ambient().end());
    std::vector<std::string> names;
    std::vector<std::size_t> origin;
    std::vector<std::size_t> first_copy(n);
    std::size_t extra = 0;
    for (std::size_t i = 0; i < n; ++i) {
        first_copy[i] = names.size();
        names.push_back(ideal.ambient()[i]);
        origin.push_back(i);
        for (std::uint32_t k = 2; k <= top[i]; ++k) {
            std::string name = ideal.ambient()[i] + "_" + std::to_string(k);
            while (taken.count(name)) name += "'";
            taken.insert(name);
            names.push_back(name);
            origin.push_back(i);
            ++extra;
        }
    }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<std::uint32_t> exps(names.size(), 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t k = 0; k < g[i]; ++k) exps[first_copy[i] + k] = 1;
        gens.emplace_back(std::move(exps));
    }
    return {MonomialIdeal(std::move(names), std::move(gens)), extra, std::move(origin)};
}

MonomialIdeal depolarize(const PolarizationResult& pol, const std::vector<std::string>& original_ambient) {
    std::vector<Monomial> gens;
    for (const auto& g : pol.ideal.generators()) {
        std::vector<std::uint32_t> exps(original_ambient.size(), 0);
        for (std::size_t k = 0; k < g.size(); ++k) exps.at(pol.origin[k]) += g[k];
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(original_ambient, std::move(gens));
}

}  // namespace eil
