#pragma once

// Rational period functions of weight 2k on G_p: structured constructors,
// the flattened rational function, and an exact verifier of
//   q + q|T = 0   and   q + q|U + ... + q|U^{p-1} = 0.

#include <optional>
#include <string>
#include <vector>

#include "hecke/bqf.hpp"
#include "hecke/ratfun.hpp"

namespace hecke {

enum class term_kind {
    class_pp,        // c · (Σ_{Z_A} q_{k,α} − Σ_{Z_{−A}} q_{k,α'})
    class_quadratic, // c · Σ_{Z_A} Q_α(z,1)^{−k}
    pole_at_zero,    // a0 (1 − z^{−2k}) [+ b1/z when 2k = 2]
    tail,            // Σ c_n z^{−n}, 1 ≤ n ≤ 2k − 1
};

const char* to_string(term_kind k);

struct rpf_term {
    term_kind kind;
    std::optional<form_cycle> cycle; // class terms
    quad_element coefficient;        // C_ℓ, d_ℓ or a0
    std::optional<quad_element> b1;  // pole_at_zero, 2k = 2 only
    std::vector<quad_element> tail;  // c_1, c_2, ...
};

struct rpf_expression {
    int p;
    int k;
    std::vector<rpf_term> terms;
    rational_function realized;
};

/// q_{k,0}; b1 is only allowed when 2k = 2.
rational_function zero_pole_function(const field& f, int k, const quad_element& a0,
                                     const std::optional<quad_element>& b1 = std::nullopt);

/// q_{k,α} = PP_α[(α − α')^k / ((z − α)(z − α'))^k] = PP_α[D^{k/2} / Q_α(z,1)^k].
rational_function pp_piece(int k, const quad_element& alpha);

/// Q(z, 1)^{−k}.
rational_function form_power(const quadratic_form& q, int k);

/// Flattened sum of the structured terms.
rational_function realize(const field& f, int k, const std::vector<rpf_term>& terms);

rpf_expression pole_at_zero(const field& f, int k, const quad_element& a0,
                            const std::optional<quad_element>& b1 = std::nullopt);

struct weighted_class {
    form_cycle cycle;
    quad_element coefficient;
};

/// Σ C_ℓ (Σ_{Z_{A_ℓ}} q_{k,α} − Σ_{Z_{−A_ℓ}} q_{k,α'}) + c0 q_{k,0} + Σ c_n z^{−n}.
/// A candidate shape only; run verify.
rpf_expression build_general(const field& f, int k, const std::vector<weighted_class>& classes,
                             const quad_element& c0, const std::vector<quad_element>& tail = {});

/// Σ d_ℓ Σ_{Z_{A_ℓ}} Q_α(z,1)^{−k} + c0 q_{k,0}, k odd.
rpf_expression build_symmetric(const field& f, int k, const std::vector<weighted_class>& classes,
                               const quad_element& c0);

/// Σ_{Z_A} Q_α^{−k} − (−1)^k Σ_{Z_{−A}} Q_α^{−k}.
rpf_expression build_theorem3(int k, const form_cycle& cls);

struct isp_report {
    std::string label; // least simple form of the class
    std::vector<quad_element> poles;
    bool symmetric;
    bool complete; // the group is the full P_A of its class
};

struct pole_analysis {
    std::vector<pole_record> poles;
    std::vector<isp_report> isps;
    std::vector<pole_record> unclassified; // nonzero poles outside any hyperbolic class
    bool full_pole_set_symmetric = true;
};

/// Groups the nonzero poles of q into systems by the class of the pole
/// (positive poles) or of its T-image (negative poles).
pole_analysis analyze_poles(const rational_function& q, std::size_t budget = cf_budget());

struct rpf_verdict {
    bool relation1_ok;
    bool relation2_ok;
    rational_function residual1;
    rational_function residual2;
    pole_analysis analysis;

    bool ok() const { return relation1_ok && relation2_ok; }
};

/// Checks q = realized; the pole analysis covers its nonzero poles.
rpf_verdict verify(const rpf_expression& q, std::size_t budget = cf_budget());

} // namespace hecke
