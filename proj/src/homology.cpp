#include "eil/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "homology_kernel.hpp"

namespace eil {

FieldChoice parse_field(const std::string& text) {
    if (text == "2") return FieldChoice::gf2;
    if (text == "0" || text == "q" || text == "Q") return FieldChoice::rationals;
    throw std::invalid_argument("unknown field '" + text + "' (expected 2, 0 or q)");
}

ComplexView::ComplexView(std::size_t vertex_count, std::vector<FaceMask> nonfaces)
    : vertex_count_(vertex_count), nonfaces_(std::move(nonfaces)) {
    if (vertex_count_ > 64) throw std::invalid_argument("complexes are limited to 64 vertices");
    const FaceMask all = vertex_count_ == 64 ? ~FaceMask{0} : (FaceMask{1} << vertex_count_) - 1;
    for (auto nf : nonfaces_)
        if (nf & ~all) throw std::invalid_argument("nonface uses a vertex outside the complex");
}

bool ComplexView::is_face(FaceMask w) const {
    return std::none_of(nonfaces_.begin(), nonfaces_.end(), [w](FaceMask nf) { return (nf & ~w) == 0; });
}

bool ReducedHomology::vanishes() const {
    return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

ReducedHomology reduced_homology_dims(const ComplexView& complex, FaceMask w, FieldChoice field) {
    const FaceMask all = complex.vertex_count() == 64 ? ~FaceMask{0} : (FaceMask{1} << complex.vertex_count()) - 1;
    if (w & ~all) throw std::invalid_argument("mask is not contained in the vertex set");
    if (std::popcount(w) > 26) throw std::length_error("induced subcomplex too large to enumerate");
    detail::HomologyScratch scratch;
    return detail::induced_homology(w, [&](FaceMask f) { return complex.is_face(f); }, field, -1, scratch);
}

std::size_t matrix_rank(const std::vector<std::vector<std::pair<std::uint32_t, int>>>& columns, FieldChoice field) {
    std::size_t rows = 0;
    std::vector<detail::SparseColumn> sorted = columns;
    for (auto& c : sorted) {
        std::sort(c.begin(), c.end());
        for (auto& [r, v] : c) rows = std::max<std::size_t>(rows, r + 1);
    }
    const std::vector<bool> cleared(sorted.size(), false);
    return field == FieldChoice::gf2 ? detail::reduce_gf2(sorted, rows, cleared).rank
                                     : detail::reduce_rational(sorted, rows, cleared).rank;
}

namespace detail {

RankResult reduce_gf2(const std::vector<SparseColumn>& columns, std::size_t rows, const std::vector<bool>& cleared) {
    RankResult out;
    std::vector<std::int32_t> pivot_of_row(rows, -1);
    std::vector<std::vector<std::uint32_t>> reduced(columns.size());
    std::vector<std::uint32_t> merged;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (cleared[j]) continue;
        auto& col = reduced[j];
        for (const auto& [r, v] : columns[j])
            if (v % 2 != 0) col.push_back(r);
        while (!col.empty() && pivot_of_row[col.back()] >= 0) {
            const auto& other = reduced[static_cast<std::size_t>(pivot_of_row[col.back()])];
            merged.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(merged));
            col.swap(merged);
        }
        if (!col.empty()) {
            pivot_of_row[col.back()] = static_cast<std::int32_t>(j);
            out.pivot_rows.push_back(col.back());
            ++out.rank;
        }
    }
    return out;
}

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow so the caller can retry wide.
struct Checked {
    using Int = std::int64_t;
    static Int mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int sub(Int a, Int b) {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int gcd(Int a, Int b) { return std::gcd(a, b); }
    static bool is_zero(Int a) { return a == 0; }
};

struct Wide {
    using Int = boost::multiprecision::cpp_int;
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int sub(const Int& a, const Int& b) { return a - b; }
    static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
    static bool is_zero(const Int& a) { return a.is_zero(); }
};

// Column reduction over Z standing in for Q: column j becomes
// c_p * col_j - c_j * col_p, then is divided by its content.
template <class Ops>
RankResult reduce_integral(const std::vector<SparseColumn>& columns, std::size_t rows, const std::vector<bool>& cleared) {
    using Int = typename Ops::Int;
    using Column = std::vector<std::pair<std::uint32_t, Int>>;
    RankResult out;
    std::vector<std::int32_t> pivot_of_row(rows, -1);
    std::vector<Column> reduced(columns.size());
    Column merged;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (cleared[j]) continue;
        auto& col = reduced[j];
        for (const auto& [r, v] : columns[j]) col.emplace_back(r, Int(v));
        while (!col.empty() && pivot_of_row[col.back().first] >= 0) {
            const auto& other = reduced[static_cast<std::size_t>(pivot_of_row[col.back().first])];
            const Int a = other.back().second;
            const Int b = col.back().second;
            merged.clear();
            std::size_t x = 0, y = 0;
            while (x < col.size() || y < other.size()) {
                if (y == other.size() || (x < col.size() && col[x].first < other[y].first)) {
                    merged.emplace_back(col[x].first, Ops::mul(a, col[x].second));
                    ++x;
                } else if (x == col.size() || other[y].first < col[x].first) {
                    merged.emplace_back(other[y].first, Ops::sub(Int(0), Ops::mul(b, other[y].second)));
                    ++y;
                } else {
                    Int v = Ops::sub(Ops::mul(a, col[x].second), Ops::mul(b, other[y].second));
                    if (!Ops::is_zero(v)) merged.emplace_back(col[x].first, std::move(v));
                    ++x;
                    ++y;
                }
            }
            Int content(0);
            for (const auto& e : merged) content = Ops::gcd(content, e.second);
            if (!Ops::is_zero(content) && content != Int(1)) {
                for (auto& e : merged) e.second /= content;
            }
            col.swap(merged);
        }
        if (!col.empty()) {
            pivot_of_row[col.back().first] = static_cast<std::int32_t>(j);
            out.pivot_rows.push_back(col.back().first);
            ++out.rank;
        }
    }
    return out;
}

}  // namespace

RankResult reduce_rational(const std::vector<SparseColumn>& columns, std::size_t rows, const std::vector<bool>& cleared) {
    try {
        return reduce_integral<Checked>(columns, rows, cleared);
    } catch (const Overflow&) {
        return reduce_integral<Wide>(columns, rows, cleared);
    }
}

}  // namespace detail

}  // namespace eil
