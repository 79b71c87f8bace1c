#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hecke/io.hpp"
#include "support.hpp"

using namespace hecke;
using namespace hecke::testing;

namespace {

quad_element qe(const field_element& x) { return quad_element(x); }

// Serialize, print, reparse: the in-memory round trip and the byte round trip.
template <class T, class Read>
void check_round_trip(const T& x, Read read)
{
    json j = to_json(x);
    T back = read(json::parse(j.dump()));
    CHECK(back == x);
    CHECK(to_json(back).dump() == j.dump());
}

rational_function expr(const field& f, const std::string& s, std::optional<long> disc = std::nullopt)
{
    expression_context ctx{f, std::nullopt, true};
    if (disc)
        ctx.disc = fe(f, *disc);
    return parse_rational_function(s, ctx);
}

quad_element scalar(const field& f, const std::string& s, std::optional<long> disc = std::nullopt)
{
    expression_context ctx{f, std::nullopt, false};
    if (disc)
        ctx.disc = fe(f, *disc);
    return parse_quad(s, ctx);
}

} // namespace

TEST_CASE("field and quadratic elements round-trip")
{
    std::mt19937 rng(11);
    for (int p : {3, 4, 5, 7, 9}) {
        auto f = make_field(p);
        auto read_fe = [&](const json& j) { return field_element_from_json(j, f); };
        auto read_q = [&](const json& j) { return quad_from_json(j, f); };
        for (int i = 0; i < 20; ++i) {
            auto a = random_element(f, rng), b = random_element(f, rng);
            check_round_trip(a, read_fe);
            check_round_trip(qe(a), read_q);
            if (!b.is_zero())
                check_round_trip(quad_element(a, b, fe(f, 14)), read_q);
        }
    }
    auto f = make_field(4);
    CHECK(to_json(fe(f, {mpq_class(1, 3), 2})).dump() == R"({"coeffs":["1/3","2"],"p":4})");
    CHECK(field_element_from_json(json(5), f) == fe(f, 5));
    CHECK(field_element_from_json(json("-7/2"), f) == fe(f, {mpq_class(-7, 2)}));
}

TEST_CASE("group elements, forms and cycles round-trip")
{
    auto f = make_field(4);
    for (const char* w : {"S", "T", "U", "USUt", "TTSUUsT"})
        check_round_trip(from_word(f, w), [&](const json& j) { return group_from_json(j, f); });
    auto res = enumerate_classes(f, fe(f, 14));
    REQUIRE(res.cycles.size() == 2);
    for (const auto& c : res.cycles) {
        for (const auto& q : c.forms)
            check_round_trip(q, [&](const json& j) { return form_from_json(j, f); });
        json j = to_json(c);
        form_cycle back = cycle_from_json(json::parse(j.dump()), f);
        CHECK(back.forms == c.forms);
        CHECK(back.label == c.label);
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("polynomials and rational functions round-trip")
{
    auto f = make_field(5);
    auto r = expr(f, "(z^3 - L*z + 1/2)/(z^2 - (L+1)*z - 3) + sqrtD/z", 13);
    check_round_trip(r, [&](const json& j) { return rational_function_from_json(j, f); });
    check_round_trip(r.num(), [&](const json& j) { return polynomial_from_json(j, f); });
    check_round_trip(rational_function(f), [&](const json& j) { return rational_function_from_json(j, f); });
}

TEST_CASE("RPF expressions round-trip")
{
    auto f = make_field(4);
    auto res = enumerate_classes(f, fe(f, 14));
    auto one = qe(fe(f, 1)), zero = qe(field_element(f));
    auto c = quad(fe(f, 1), fe(f, 3), fe(f, 14), 5);
    std::vector<rpf_expression> cases{
        build_general(f, 1, {{res.cycles[0], one}}, zero, {zero}),
        build_general(f, 2, {{res.cycles[1], c}}, one, {one, zero, c}),
        build_symmetric(f, 3, {{res.cycles[0], one}, {res.cycles[1], one}}, zero),
        build_theorem3(2, res.cycles[0]),
        pole_at_zero(f, 1, one, c),
    };
    for (const auto& q : cases) {
        json j = to_json(q);
        loaded_rpf l = rpf_from_json(json::parse(j.dump()));
        CHECK(l.expression.realized == q.realized);
        REQUIRE(l.terms_match_realized.has_value());
        CHECK(*l.terms_match_realized);
        CHECK(l.expression.terms.size() == q.terms.size());
        CHECK(to_json(l.expression).dump() == j.dump());

        // Without "realized" the terms are flattened again.
        j.erase("realized");
        CHECK(rpf_from_json(j).expression.realized == q.realized);
    }
}

TEST_CASE("verdict JSON")
{
    auto f = make_field(4);
    auto res = enumerate_classes(f, fe(f, 14));
    auto q = build_theorem3(1, res.cycles[0]);
    json j = to_json(verify(q));
    CHECK(j.at("relation1_ok") == true);
    CHECK(j.at("relation2_ok") == true);
    CHECK(rational_function_from_json(j.at("residual1"), f).is_zero());
    CHECK(j.at("isp_report").size() == 2);
    CHECK(j.at("full_pole_set_symmetric") == true);
    CHECK(j.at("poles").size() == 8);
}

TEST_CASE("malformed JSON is rejected")
{
    auto f = make_field(4);
    CHECK_THROWS_AS(field_element_from_json(json("1/0"), f), parse_error);
    CHECK_THROWS_AS(field_element_from_json(json("x"), f), parse_error);
    CHECK_THROWS_AS(field_element_from_json(json::parse(R"({"p":5,"coeffs":["1"]})"), f), parse_error);
    CHECK_THROWS_AS(field_element_from_json(json::parse(R"({"p":4,"coeffs":["1","2","3"]})"), f), parse_error);
    CHECK_THROWS_AS(quad_from_json(json::parse(R"({"a":"1","b":"1","D":null})"), f), parse_error);

    auto res = enumerate_classes(f, fe(f, 14));
    json mixed = to_json(res.cycles[0]);
    mixed["forms"][1] = to_json(res.cycles[1].forms[0]);
    CHECK_THROWS_AS(cycle_from_json(mixed, f), parse_error);

    json q = to_json(pole_at_zero(f, 2, qe(fe(f, 1))));
    q["terms"][0]["type"] = "mystery";
    CHECK_THROWS_AS(rpf_from_json(q), parse_error);
}

TEST_CASE("expression grammar")
{
    auto f4 = make_field(4);
    auto l4 = field_element::lambda(f4);
    CHECK(scalar(f4, "(sqrt2+sqrt14)/2") == quad(l4, fe(f4, 1), fe(f4, 14), 2));
    CHECK(scalar(f4, "( L + r ) / 2", 14) == quad(l4, fe(f4, 1), fe(f4, 14), 2));
    CHECK(scalar(f4, "sqrtD", 14) == quad_element::sqrt_of(fe(f4, 14)));
    CHECK(scalar(f4, "sqrt(9/4)") == qe(fe(f4, {mpq_class(3, 2)})));
    CHECK(scalar(f4, "2^-2") == qe(fe(f4, {mpq_class(1, 4)})));
    CHECK(scalar(f4, "-L^2") == qe(fe(f4, -2)));
    CHECK(scalar(f4, "3 - -1") == qe(fe(f4, 4)));

    auto f5 = make_field(5);
    auto l5 = field_element::lambda(f5);
    CHECK(parse_field_element("L^2 - L - 1", {f5, std::nullopt, false}).is_zero());
    CHECK(parse_field_element("1/L", {f5, std::nullopt, false}) == l5.inverse());

    auto r = expr(f4, "1/(z^2 - L*z - 3)");
    auto z = polynomial::monomial(qe(fe(f4, 1)), 1);
    auto one = polynomial(qe(fe(f4, 1)));
    CHECK(r == rational_function(one, z * z - z * qe(l4) - one * qe(fe(f4, 3))));
    CHECK(expr(f4, "(z^2-1)/(z-1)") == rational_function(z + one));
    CHECK(expr(f4, "z^-2") == rational_function::z_power(f4, -2));

    expression_context no_z{f4, std::nullopt, false};
    CHECK_THROWS_AS(parse_quad("z", no_z), parse_error);
    CHECK_THROWS_AS(parse_quad("r", no_z), parse_error);
    CHECK_THROWS_AS(parse_quad("1/0", no_z), parse_error);
    CHECK_THROWS_AS(parse_quad("(1", no_z), parse_error);
    CHECK_THROWS_AS(parse_quad("1 +", no_z), parse_error);
    CHECK_THROWS_AS(parse_quad("x", no_z), parse_error);
    CHECK_THROWS_AS(parse_quad("sqrt(-2)", no_z), parse_error);
    CHECK_THROWS_AS(parse_quad("2^L", no_z), parse_error);
    CHECK_THROWS_AS(parse_field_element("sqrt3", no_z), parse_error);
}

TEST_CASE("LaTeX")
{
    auto f4 = make_field(4), f5 = make_field(5), f6 = make_field(6), f7 = make_field(7);
    CHECK(latex(field_element::lambda(f4)) == "\\sqrt{2}");
    CHECK(latex(field_element::lambda(f6)) == "\\sqrt{3}");
    CHECK(latex(field_element::lambda(f5)) == "\\lambda");
    CHECK(latex(fe(f7, {-1, 0, 1})) == "\\lambda^{2} - 1");
    CHECK(latex(fe(f4, {mpq_class(-1, 2)})) == "-\\frac{1}{2}");
    CHECK(latex(field_element(f4)) == "0");

    auto l = field_element::lambda(f4);
    CHECK(latex(quad(l, fe(f4, 1), fe(f4, 14), 2)) == "\\frac{1}{2}\\sqrt{2} + \\frac{1}{2}\\sqrt{14}");
    CHECK(latex(quad(fe(f4, 0), fe(f4, -1), fe(f4, 14))) == "-\\sqrt{14}");

    auto res = enumerate_classes(f4, fe(f4, 14));
    CHECK(latex(res.cycles[0].forms[0]) == "[1, -\\sqrt{2}, -3]");
    CHECK(latex(res.cycles[1].forms[1]) == "[3, \\sqrt{2}, -1]");
    CHECK(latex(group_element(l * 2, fe(f4, 3), fe(f4, 1), l)) ==
          "\\begin{pmatrix} 2\\sqrt{2} & 3 \\\\ 1 & \\sqrt{2} \\end{pmatrix}");
    CHECK(latex(expr(f4, "1/(z^2 - L*z - 3)")) == "\\frac{1}{z^{2} - \\sqrt{2} z - 3}");
}
