#pragma once

// JSON serialization, the CLI expression grammar, and LaTeX rendering.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hecke/rpf.hpp"

namespace hecke {

using json = nlohmann::json;

json to_json(const field_element& x);
json to_json(const quad_element& x);
json to_json(const group_element& m);
json to_json(const quadratic_form& q);
json to_json(const form_cycle& c);
json to_json(const polynomial& p);
json to_json(const rational_function& f);
json to_json(const cf_expansion& e);
json to_json(const pole_record& r);
json to_json(const rpf_expression& q);
json to_json(const pole_analysis& a);
json to_json(const rpf_verdict& v);

field_element field_element_from_json(const json& j, const field& f);
quad_element quad_from_json(const json& j, const field& f);
group_element group_from_json(const json& j, const field& f);
quadratic_form form_from_json(const json& j, const field& f);
form_cycle cycle_from_json(const json& j, const field& f);
polynomial polynomial_from_json(const json& j, const field& f);
rational_function rational_function_from_json(const json& j, const field& f);

struct loaded_rpf {
    rpf_expression expression;
    /// When both terms and a realized function are given: whether they agree.
    std::optional<bool> terms_match_realized;
};

/// "realized" wins when present; otherwise the terms are realized.
loaded_rpf rpf_from_json(const json& j);

/*
 * Expression grammar (whitespace ignored):
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := ('+' | '-') factor | power
 *   power  := atom ('^' ['-'] integer)?
 *   atom   := integer | 'L' | 'z' | 'r' | 'sqrtD' | 'sqrt' integer | 'sqrt(' expr ')' | '(' expr ')'
 * L is λ_p, r and sqrtD are √D for the discriminant in scope, sqrtN is √N,
 * and z is the variable of a rational function. Rationals are written a/b.
 */
struct expression_context {
    field f;
    std::optional<field_element> disc;
    bool allow_z = false;
};

rational_function parse_rational_function(std::string_view text, const expression_context& ctx);
quad_element parse_quad(std::string_view text, const expression_context& ctx);
field_element parse_field_element(std::string_view text, const expression_context& ctx);

std::string latex(const field_element& x);
std::string latex(const quad_element& x);
std::string latex(const group_element& m);
std::string latex(const quadratic_form& q);
std::string latex(const polynomial& p, const std::string& var = "z");
std::string latex(const rational_function& f);
std::string latex(const rpf_expression& q);

} // namespace hecke
