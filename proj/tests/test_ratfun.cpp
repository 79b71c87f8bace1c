#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hecke/bqf.hpp"
#include "hecke/ratfun.hpp"
#include "support.hpp"

using namespace hecke;
using namespace hecke::testing;

namespace {

quad_element qe(const field_element& x) { return quad_element(x); }

rational_function inv_linear(const quad_element& a)
{
    return rational_function(polynomial(qe(fe(a.descriptor(), 1))), polynomial::linear(a));
}

std::string random_word(std::mt19937& rng, int max_len)
{
    static const char letters[] = "SsTUu";
    std::uniform_int_distribution<int> len(0, max_len), pick(0, 4);
    std::string w;
    for (int i = len(rng); i > 0; --i)
        w += letters[pick(rng)];
    return w;
}

polynomial random_poly(const field& f, std::mt19937& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<quad_element> c;
    for (int i = deg(rng); i >= 0; --i)
        c.push_back(qe(random_element(f, rng, 3, 2)));
    polynomial p(f, c);
    return p.is_zero() ? polynomial(qe(fe(f, 1))) : p;
}

rational_function random_rf(const field& f, std::mt19937& rng)
{
    return rational_function(random_poly(f, rng, 3), random_poly(f, rng, 3));
}

// Q(z, 1) as a polynomial.
polynomial form_poly(const quadratic_form& q)
{
    return polynomial(q.descriptor(), {qe(q.C()), qe(q.B()), qe(q.A())});
}

rational_function form_power(const quadratic_form& q, int k)
{
    return rational_function(polynomial(qe(fe(q.descriptor(), 1))), form_poly(q).pow(k));
}

} // namespace

TEST_CASE("polynomial basics")
{
    auto f = make_field(4);
    auto l = field_element::lambda(f);
    polynomial z = polynomial::monomial(qe(fe(f, 1)), 1);
    polynomial p = z * z - polynomial(qe(fe(f, 2)));
    CHECK(p.eval(qe(l)).is_zero());
    CHECK(gcd(p, polynomial::linear(qe(l))) == polynomial::linear(qe(l)));
    CHECK(gcd(p, polynomial::linear(qe(fe(f, 1)))) == polynomial(qe(fe(f, 1))));
    polynomial q(f), r(f);
    polynomial::divmod(p * z + polynomial(qe(fe(f, 3))), p, q, r);
    CHECK(q == z);
    CHECK(r == polynomial(qe(fe(f, 3))));
    CHECK(p.taylor_shift(qe(l)) == z * z + z * qe(l * mpq_class(2)));
    auto sq = squarefree_decomposition(polynomial::linear(qe(l)).pow(3) * polynomial::linear(qe(fe(f, 1))));
    REQUIRE(sq.size() == 3);
    CHECK(sq[0] == polynomial::linear(qe(fe(f, 1))));
    CHECK(sq[1].degree() == 0);
    CHECK(sq[2] == polynomial::linear(qe(l)));
}

TEST_CASE("rational function arithmetic")
{
    auto f = make_field(4);
    auto l = field_element::lambda(f);
    auto a = quad(l, fe(f, 1), fe(f, 14), 2);
    auto ac = a.conjugate();
    auto g = inv_linear(a);
    CHECK(g + rational_function(f) == g);
    CHECK((g - g).is_zero());
    CHECK((g - g).den() == polynomial(qe(fe(f, 1))));
    auto s = inv_linear(a) + inv_linear(ac);
    // (2z − (α + α'))/(z² − (α + α')z + αα') with α + α' = λ, αα' = −3.
    polynomial z = polynomial::monomial(qe(fe(f, 1)), 1);
    rational_function expect(z * qe(fe(f, 2)) - polynomial(qe(l)),
                             z * z - z * qe(l) - polynomial(qe(fe(f, 3))));
    CHECK(s == expect);
    CHECK(s.in_base_field());
    CHECK(!g.in_base_field());
    CHECK((g * g) / g == g);
    CHECK_THROWS_AS(g / rational_function(f), arithmetic_error);
}

TEST_CASE("field axioms on random rational functions")
{
    std::mt19937 rng(51);
    auto f = make_field(5);
    for (int i = 0; i < 15; ++i) {
        auto x = random_rf(f, rng), y = random_rf(f, rng), w = random_rf(f, rng);
        CHECK((x + y) + w == x + (y + w));
        CHECK(x * (y + w) == x * y + x * w);
        if (!y.is_zero())
            CHECK((x / y) * y == x);
        auto v = qe(random_element(f, rng));
        if (x.den().eval(v).is_zero() || y.den().eval(v).is_zero())
            continue;
        CHECK((x * y).eval(v) == x.eval(v) * y.eval(v));
    }
}

TEST_CASE("slash examples")
{
    auto f = make_field(4);
    auto g = generators(f);
    auto inv_z = rational_function::z_power(f, -1);
    CHECK(slash(inv_z, group_element::identity(f), 1) == inv_z);
    // z^{-2} (−1/z)^{-1} = −1/z.
    CHECK(slash(inv_z, g.T, 1) == -inv_z);
    // (1/z) | S = 1/(z + λ).
    CHECK(slash(inv_z, g.S, 1) == inv_linear(qe(-field_element::lambda(f))));
    // z^2 | T with k = 1 is 1: z^{-2} (1/z^2)... (−1/z)^2 z^{-2} = z^{-4}.
    CHECK(slash(rational_function::z_power(f, 2), g.T, 1) == rational_function::z_power(f, -4));
}

TEST_CASE("slash is a right action respecting the sign quotient")
{
    std::mt19937 rng(61);
    for (int p : {3, 4, 5}) {
        auto f = make_field(p);
        for (int i = 0; i < 10; ++i) {
            auto x = random_rf(f, rng);
            auto m = from_word(f, random_word(rng, 4)), n = from_word(f, random_word(rng, 4));
            for (int k : {1, 2}) {
                CHECK(slash(slash(x, m, k), n, k) == slash(x, m * n, k));
                // Evaluate pointwise against the definition.
                auto v = qe(random_element(f, rng));
                auto cz_d = qe(m.c()) * v + qe(m.d());
                if (cz_d.is_zero())
                    continue;
                auto mv = mobius(m, v);
                if (x.den().eval(mv).is_zero())
                    continue;
                quad_element fac = qe(fe(f, 1));
                for (int j = 0; j < 2 * k; ++j)
                    fac = fac / cz_d;
                auto lhs = slash(x, m, k);
                if (!lhs.den().eval(v).is_zero())
                    CHECK(lhs.eval(v) == fac * x.eval(mv));
            }
        }
    }
}

TEST_CASE("principal parts")
{
    auto f = make_field(4);
    auto l = field_element::lambda(f);
    auto a = quad(l, fe(f, 1), fe(f, 14), 2);
    auto ac = a.conjugate();
    auto diff = a - ac;
    polynomial both = polynomial::linear(a) * polynomial::linear(ac);
    rational_function k1(polynomial(diff), both);
    auto pp1 = pp_at(k1, a);
    REQUIRE(pp1.order() == 1);
    CHECK(pp1.coefficients[0] == qe(fe(f, 1)));
    CHECK(pp1.to_function() == inv_linear(a));
    CHECK(pp_at(k1, qe(l)).empty());

    rational_function k2(polynomial(diff * diff), both.pow(2));
    auto pp2 = pp_at(k2, a);
    REQUIRE(pp2.order() == 2);
    CHECK(pp2.coefficients[1] == qe(fe(f, 1)));
    CHECK(pp2.coefficients[0] == qe(fe(f, -2)) / diff);
    auto rest = k2 - pp2.to_function();
    CHECK(!rest.den().eval(a).is_zero());
    CHECK(pp_at(rest, a).empty());
    // The part at α' is the conjugate.
    auto ppc = pp_at(k2, ac);
    CHECK(ppc.coefficients[1] == qe(fe(f, 1)));
    CHECK(ppc.coefficients[0] == qe(fe(f, 2)) / diff);
}

TEST_CASE("slash of Q^-k moves the form")
{
    std::mt19937 rng(71);
    for (auto [p, D] : {std::pair{4, 14L}, std::pair{3, 5L}}) {
        auto f = make_field(p);
        auto res = enumerate_classes(f, fe(f, D));
        std::vector<quadratic_form> forms;
        for (const auto& c : res.cycles)
            for (const auto& q : c.forms)
                forms.push_back(q);
        REQUIRE(!forms.empty());
        for (int i = 0; i < 8; ++i) {
            const auto& q = forms[static_cast<std::size_t>(i) % forms.size()];
            auto m = from_word(f, random_word(rng, 6));
            auto moved = form_of_point(mobius(m.inverse(), q.root()));
            for (int k : {1, 2})
                CHECK(slash(form_power(q, k), m, k) == form_power(moved, k));
        }
    }
}

TEST_CASE("poles of tails under U^t")
{
    std::mt19937 rng(81);
    for (int p : {4, 5, 7}) {
        auto f = make_field(p);
        auto zero = qe(field_element(f));
        for (int k : {1, 2}) {
            rational_function r(f);
            std::uniform_int_distribution<int> dist(-5, 5);
            for (int n = 1; n <= 2 * k - 1; ++n)
                r += rational_function::z_power(f, -n) * qe(fe(f, dist(rng)));
            if (r.is_zero())
                r = rational_function::z_power(f, -1);
            auto poles = poles_extended(r);
            REQUIRE(poles.size() == 1);
            CHECK(poles[0].point == extended_point(zero));
            for (int t = 1; t <= p - 1; ++t) {
                auto rt = slash(r, u_power(f, t), k);
                auto got = poles_extended(rt);
                std::vector<extended_point> expect;
                if (t <= p - 2)
                    expect = {mobius(u_power(f, p - t), extended_point(zero)),
                              mobius(u_power(f, p - t + 1), extended_point(zero))};
                else
                    expect = {mobius(u_power(f, 2), extended_point(zero))};
                CAPTURE(p);
                CAPTURE(k);
                CAPTURE(t);
                REQUIRE(got.size() == expect.size());
                for (const auto& e : expect) {
                    CHECK(!e.is_infinity());
                    bool hit = false;
                    for (const auto& g : got)
                        hit = hit || (g.point && *g.point == e && g.order > 0);
                    CHECK(hit);
                }
            }
        }
    }
}

TEST_CASE("poles over quadratic extensions")
{
    auto f = make_field(4);
    auto l = field_element::lambda(f);
    auto d = fe(f, 14);
    auto a1 = quad(l, fe(f, 1), d, 2), a2 = quad(-l, fe(f, 1), d, 2);
    auto b1c = quad(l, fe(f, -1), d, 6);
    auto q = inv_linear(a1) + inv_linear(a2) - inv_linear(b1c) +
             rational_function::z_power(f, 2) + rational_function(polynomial(qe(fe(f, 1))),
                                                                  polynomial::linear(qe(fe(f, 1))).pow(3));
    auto poles = poles_extended(q);
    std::vector<std::pair<quad_element, int>> want = {{b1c, 1}, {qe(fe(f, 1)), 3}, {a2, 1}, {a1, 1}};
    REQUIRE(poles.size() == 5);
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(poles[i].point);
        CHECK(poles[i].point->value() == want[i].first);
        CHECK(poles[i].order == want[i].second);
    }
    CHECK(poles[4].point->is_infinity());
    CHECK(poles[4].order == 2);
    // 1/(z² + 1): complex poles stay a factor record.
    polynomial z = polynomial::monomial(qe(fe(f, 1)), 1);
    auto c = poles_extended(rational_function(polynomial(qe(fe(f, 1))), z * z + polynomial(qe(fe(f, 1)))));
    REQUIRE(c.size() == 1);
    CHECK(!c[0].point);
    CHECK(c[0].factor->degree() == 2);
}
