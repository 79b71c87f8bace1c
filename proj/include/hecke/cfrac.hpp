#pragma once

// λ-continued-fraction walk on hyperbolic points of G_p and the primitive
// automorph M_α.
//
// The step follows the geodesic from α' to α through the tessellation by
// ideal p-gons whose edges are G_p-images of (0, ∞): for x > 0 lying between
// the consecutive cusps U^{s+1}(0) < x < U^s(0) (U(0) = ∞, U^p(0) = 0) the
// geodesic leaves the polygon through that edge, and x ↦ T U^{-s} x moves
// the crossing back onto (0, ∞). Negative points are first sent across by T.
// Simple points (α' < 0 < α) map to simple points, and the periodic part of
// every hyperbolic orbit is exactly the set of simple points of its class.

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/heckegroup.hpp"

namespace hecke {

/// One step: the orbit point moves to move.matrix^{-1}(x).
struct cf_move {
    int digit; // 0: T on a negative point; s >= 1: U^s T
    group_element matrix;

    std::string word() const;
};

struct cf_step_result {
    quad_element next;
    cf_move move;
};

struct cf_expansion {
    quad_element point;
    std::vector<cf_move> preperiod;
    std::vector<cf_move> period;
    /// Distinct points visited; the last period move returns to orbit[preperiod.size()].
    std::vector<quad_element> orbit;
};

inline constexpr std::size_t default_cf_budget = 10000;

/// Step budget: RPF_BUDGET from the environment when set, else the default.
std::size_t cf_budget();

/// Cusps U^s(0) for s = 1..p, as a vector indexed by s; entry 1 (∞) is unused.
const std::vector<field_element>& polygon_vertices(const field& f);

bool is_simple_point(const quad_element& x);

cf_step_result cf_step(const quad_element& x);

cf_expansion expansion(const quad_element& alpha, std::size_t budget = cf_budget());

/// The primitive hyperbolic element with positive trace attracting at α.
group_element automorph(const quad_element& alpha, std::size_t budget = cf_budget());

/// |cα + d| > 1, i.e. α is an attracting fixed point of m.
bool is_attracting(const group_element& m, const quad_element& alpha);

} // namespace hecke
