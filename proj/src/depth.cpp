#include "eil/depth.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <mutex>
#include <thread>
#include <vector>

#include "homology_kernel.hpp"

namespace eil {

namespace {

constexpr std::size_t kHardVertexLimit = 26;

// Face lookup over all 2^N masks: a mask is a face iff it contains no
// generator support.
class FaceTable {
public:
    FaceTable(std::size_t n, const std::vector<FaceMask>& nonfaces) : table_(std::size_t{1} << n, 1) {
        std::vector<std::uint8_t> blocked(table_.size(), 0);
        for (auto nf : nonfaces) blocked[nf] = 1;
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t step = std::size_t{1} << b;
            for (std::size_t m = 0; m < blocked.size(); ++m)
                if (m & step) blocked[m] |= blocked[m ^ step];
        }
        for (std::size_t m = 0; m < table_.size(); ++m) table_[m] = !blocked[m];
    }
    bool operator()(FaceMask m) const { return table_[m] != 0; }

private:
    std::vector<std::uint8_t> table_;
};

std::vector<FaceMask> supports(const MonomialIdeal& ideal) {
    std::vector<FaceMask> out;
    for (const auto& g : ideal.generators()) out.push_back(g.support());
    return out;
}

std::vector<FaceMask> scan_masks(std::size_t n, const std::vector<FaceMask>& nonfaces, bool prune) {
    std::vector<FaceMask> out;
    if (!prune) {
        out.resize(std::size_t{1} << n);
        for (std::size_t m = 0; m < out.size(); ++m) out[m] = m;
        return out;
    }
    std::vector<std::uint8_t> seen(std::size_t{1} << n, 0);
    out.push_back(0);
    seen[0] = 1;
    for (auto g : nonfaces) {
        const std::size_t before = out.size();
        for (std::size_t k = 0; k < before; ++k) {
            const FaceMask u = out[k] | g;
            if (!seen[u]) {
                seen[u] = 1;
                out.push_back(u);
            }
        }
    }
    return out;
}

void validate_squarefree(const MonomialIdeal& ideal, const EngineOptions& options) {
    if (ideal.is_unit()) throw std::invalid_argument("Betti numbers of S/I need a proper ideal");
    if (!ideal.is_squarefree()) throw std::invalid_argument("Hochster's formula needs a squarefree ideal");
    if (ideal.ambient_size() > options.ambient_cap) {
        throw CapacityError("polarized ambient of " + std::to_string(ideal.ambient_size()) +
                            " variables exceeds the cap of " + std::to_string(options.ambient_cap));
    }
    if (ideal.ambient_size() > kHardVertexLimit) {
        throw CapacityError("the Hochster sweep supports at most 26 variables");
    }
}

template <class Work>
void fan_out(std::size_t count, unsigned jobs, const Work& work) {
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    std::atomic<std::size_t> next{0};
    const auto run = [&] {
        detail::HomologyScratch scratch;
        for (std::size_t k = next++; k < count; k = next++) work(k, scratch);
    };
    if (workers == 1) {
        run();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
}

// pd(S/I) for squarefree I without materializing the Betti table: masks are
// visited by decreasing size and only homology in degrees that could beat
// the current maximum is computed.
int squarefree_pd(const MonomialIdeal& ideal, const EngineOptions& options) {
    const std::size_t n = ideal.ambient_size();
    const auto nonfaces = supports(ideal);
    if (nonfaces.empty()) return 0;
    const FaceTable faces(n, nonfaces);
    auto masks = scan_masks(n, nonfaces, options.prune);
    std::stable_sort(masks.begin(), masks.end(),
                     [](FaceMask a, FaceMask b) { return std::popcount(a) > std::popcount(b); });

    std::atomic<int> best{0};
    fan_out(masks.size(), options.jobs, [&](std::size_t k, detail::HomologyScratch& scratch) {
        const FaceMask w = masks[k];
        const int size = std::popcount(w);
        const int current = best.load();
        if (size <= current) return;
        const auto raise = [&](int degree) {
            int seen = best.load();
            while (degree > seen && !best.compare_exchange_weak(seen, degree)) {
            }
        };
        // degree i comes from H~_{size-1-i}; only i > current matters
        const int top_dim = size - 2 - current;
        if (top_dim < 0) {
            // just H~_{-1}: nonzero iff no vertex of W is a face
            bool void_below = true;
            for (FaceMask rest = w; rest && void_below; rest &= rest - 1) void_below = !faces(rest & (~rest + 1));
            if (void_below) raise(size);
            return;
        }
        const auto h = detail::induced_homology(w, faces, options.field, top_dim, scratch);
        for (int d = -1; d <= top_dim; ++d) {
            if (h.in_dimension(d) == 0) continue;
            raise(size - 1 - d);
            break;
        }
    });
    return best.load();
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& ideal, const EngineOptions& options) {
    validate_squarefree(ideal, options);
    const std::size_t n = ideal.ambient_size();
    const auto nonfaces = supports(ideal);
    const FaceTable faces(n, nonfaces);
    const auto masks = scan_masks(n, nonfaces, options.prune);

    BettiTable table;
    std::mutex merge;
    fan_out(masks.size(), options.jobs, [&](std::size_t k, detail::HomologyScratch& scratch) {
        const FaceMask w = masks[k];
        const auto h = detail::induced_homology(w, faces, options.field, -1, scratch);
        if (h.vanishes()) return;
        const int size = std::popcount(w);
        std::lock_guard lock(merge);
        for (int d = -1; d + 1 < static_cast<int>(h.ranks.size()); ++d) {
            if (auto r = h.in_dimension(d)) table[{size - 1 - d, w}] = r;
        }
    });
    return table;
}

int projective_dimension(const BettiTable& table) {
    int pd = 0;
    for (const auto& [key, rank] : table) pd = std::max(pd, key.first);
    return pd;
}

std::string betti_csv(const BettiTable& table) {
    std::string out = "i,size,mask,rank\n";
    char hex[32];
    for (const auto& [key, rank] : table) {
        std::snprintf(hex, sizeof hex, "%llx", static_cast<unsigned long long>(key.second));
        out += std::to_string(key.first) + "," + std::to_string(std::popcount(key.second)) + "," + hex + "," +
               std::to_string(rank) + "\n";
    }
    return out;
}

DepthResult depth_quotient(const MonomialIdeal& ideal, const EngineOptions& options) {
    if (ideal.is_unit()) throw std::invalid_argument("depth of S/I is undefined for the unit ideal");
    DepthResult out;
    out.ambient_size = ideal.ambient_size();
    out.field = options.field;
    if (ideal.is_zero()) {
        out.polarized_ambient = out.ambient_size;
        out.depth_quotient = static_cast<int>(out.ambient_size);
        if (options.keep_betti) out.betti = BettiTable{{{0, FaceMask{0}}, 1}};
        return out;
    }
    const PolarizationResult pol = polarize(ideal);
    out.polarized_ambient = pol.ideal.ambient_size();
    out.extra = pol.extra;
    validate_squarefree(pol.ideal, options);
    if (options.keep_betti) {
        out.betti = betti_numbers(pol.ideal, options);
        out.pd_quotient = projective_dimension(*out.betti);
    } else {
        out.pd_quotient = squarefree_pd(pol.ideal, options);
    }
    // pd is unchanged by polarization, so depth is relative to I's own ambient
    out.depth_quotient = static_cast<int>(out.ambient_size) - out.pd_quotient;
    out.depth_ideal = out.depth_quotient + 1;
    return out;
}

int depth_ideal(const MonomialIdeal& ideal, const EngineOptions& options) {
    if (ideal.is_zero()) throw std::invalid_argument("module depth of the zero ideal is not defined here");
    return *depth_quotient(ideal, options).depth_ideal;
}

}  // namespace eil
