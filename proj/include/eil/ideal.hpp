#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

/// Exponent vector over an ambient variable list owned by the enclosing ideal.
/// The all-zero vector is the monomial 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t ambient_size) : exps_(ambient_size, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t ambient_size, std::size_t index);
    /// Product of the variables in `s`.
    static Monomial squarefree(std::size_t ambient_size, VertexSet s);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    bool divides(const Monomial& other) const;
    /// Variables with positive exponent; requires size() <= 64.
    VertexSet support() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    /// a / gcd(a, b).
    friend Monomial strip(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded lexicographic ordering position: lower degree first, then the
    /// lexicographically larger exponent vector first (x1^2 < x1 x2 < x2^2).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> exps_;
};

/// Monomial ideal stored by its minimal generators in canonical order, so
/// two ideals over the same ambient are equal iff their generator lists are.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Minimalizes and sorts. Throws std::invalid_argument when a generator
    /// does not match the ambient size or a name is repeated.
    MonomialIdeal(std::vector<std::string> ambient, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::vector<std::string> ambient);
    static MonomialIdeal unit(std::vector<std::string> ambient);
    /// The ideal generated by the listed variables.
    static MonomialIdeal variables(std::vector<std::string> ambient, VertexSet which);

    const std::vector<std::string>& ambient() const { return ambient_; }
    std::size_t ambient_size() const { return ambient_.size(); }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_squarefree() const;
    bool contains(const Monomial& m) const;
    /// Every generator of `other` lies in this ideal (same ambient required).
    bool contains(const MonomialIdeal& other) const;
    /// Variables that are themselves generators.
    VertexSet linear_part() const;

    /// "(x1*x2, x3^2)"; "(0)" for the zero ideal and "(1)" for the unit ideal.
    std::string to_string() const;
    /// One generator per line, exponents separated by spaces.
    std::string to_rows() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> ambient_;
    std::vector<Monomial> gens_;
};

/// Same generators as `gens` after removing duplicates and non-minimal elements.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::vector<std::string> ambient);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// k >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, int k);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Re-expresses the ideal over `ambient`, matching variables by name. Every
/// variable used by a generator must be present; extra names stay unused.
MonomialIdeal with_ambient(const MonomialIdeal& ideal, const std::vector<std::string>& ambient);

/// Monomial over the ideal's ambient from variable names, e.g. {"x", "y"} -> xy.
Monomial monomial_of(const std::vector<std::string>& ambient, const std::vector<std::string>& names);

MonomialIdeal edge_ideal(const Graph& g);

/// Minimal vertex covers of G as vertex sets, ascending.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

/// Intersection of P^2 over the minimal primes P of I(G).
MonomialIdeal symbolic_square_edge_ideal(const Graph& g);

struct PolarizationResult {
    MonomialIdeal ideal;
    /// Number of variables added: the sum of (a_i - 1) over variables with a_i >= 1.
    std::size_t extra = 0;
    /// origin[k] is the index in the original ambient that new variable k specializes to.
    std::vector<std::size_t> origin;
};

/// Copy k >= 2 of variable v is named "v_k"; copy 1 keeps the name v.
PolarizationResult polarize(const MonomialIdeal& ideal);

/// Substitutes every polarized copy by its original variable.
MonomialIdeal depolarize(const PolarizationResult& pol, const std::vector<std::string>& original_ambient);

}  // namespace eil
