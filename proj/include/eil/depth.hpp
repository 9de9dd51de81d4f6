#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "eil/homology.hpp"
#include "eil/ideal.hpp"

namespace eil {

/// Multigraded Betti numbers of S/I keyed by (homological degree, squarefree
/// multidegree as a variable mask). Only nonzero entries are stored.
using BettiTable = std::map<std::pair<int, FaceMask>, std::size_t>;

struct EngineOptions {
    FieldChoice field = FieldChoice::gf2;
    unsigned jobs = 1;
    /// Largest polarized ambient the Hochster sweep will accept.
    std::size_t ambient_cap = 24;
    /// Scan only unions of generator supports (the lcm lattice).
    bool prune = true;
    /// Populate DepthResult::betti with the full table.
    bool keep_betti = false;
};

/// Polarized ambient exceeds EngineOptions::ambient_cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Hochster's formula: beta_{i,W}(S/I) = dim H~_{|W|-i-1}(Delta_W) where
/// Delta is the Stanley-Reisner complex of I. Requires a squarefree, non-unit
/// ideal.
BettiTable betti_numbers(const MonomialIdeal& squarefree_ideal, const EngineOptions& options = {});

/// Largest homological degree in the table.
int projective_dimension(const BettiTable& table);

/// CSV rows "i,|W|,W-mask-hex,rank" with a header line.
std::string betti_csv(const BettiTable& table);

struct DepthResult {
    std::size_t ambient_size = 0;
    int pd_quotient = 0;
    int depth_quotient = 0;
    /// Module depth of I itself: depth_quotient + 1 for 0 != I != S.
    std::optional<int> depth_ideal;
    FieldChoice field = FieldChoice::gf2;
    /// Keyed by the polarized ambient; present only with keep_betti.
    std::optional<BettiTable> betti;
    std::size_t polarized_ambient = 0;
    std::size_t extra = 0;
};

/// Depth and projective dimension of S/I relative to I's own ambient.
/// Non-squarefree ideals are polarized first and the added variables are
/// subtracted back out. Throws std::invalid_argument for the unit ideal and
/// CapacityError when the polarized ambient is over the cap.
DepthResult depth_quotient(const MonomialIdeal& ideal, const EngineOptions& options = {});

/// depth of I as a module, i.e. depth(S/I) + 1. Throws std::invalid_argument
/// for the zero and unit ideals.
int depth_ideal(const MonomialIdeal& ideal, const EngineOptions& options = {});

}  // namespace eil
