#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hecke/numfield.hpp"
#include "support.hpp"

using namespace hecke;
using namespace hecke::testing;

namespace {

std::vector<mpz_class> zpoly(std::initializer_list<long> c)
{
    std::vector<mpz_class> v;
    for (long x : c)
        v.emplace_back(x);
    return v;
}

// Remainder of a by a monic b over Z, ascending coefficients.
std::vector<mpz_class> zrem(std::vector<mpz_class> a, const std::vector<mpz_class>& b)
{
    while (a.size() >= b.size()) {
        mpz_class lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= lead * b[i];
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

long totient(long n)
{
    long r = n;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            while (n % q == 0)
                n /= q;
            r -= r / q;
        }
    if (n > 1)
        r -= r / n;
    return r;
}

} // namespace

TEST_CASE("minimal polynomials of small Hecke fields")
{
    CHECK(make_field(3)->minimal_polynomial() == zpoly({-1, 1}));
    CHECK(make_field(4)->minimal_polynomial() == zpoly({-2, 0, 1}));
    CHECK(make_field(5)->minimal_polynomial() == zpoly({-1, -1, 1}));
    CHECK(make_field(7)->minimal_polynomial() == zpoly({1, -2, -1, 1}));
    CHECK_THROWS_AS(make_field(2), std::invalid_argument);
}

TEST_CASE("minimal polynomial divides the Chebyshev relation and has the totient degree")
{
    for (int p = 3; p <= 30; ++p) {
        auto f = make_field(p);
        CAPTURE(p);
        CHECK(f->degree() == totient(2 * p) / 2);
        CHECK(zrem(chebyshev_relation(p), f->minimal_polynomial()).empty());
        long double lam = 2 * std::cos(std::acos(-1.0L) / p);
        long double v = 0;
        const auto& mp = f->minimal_polynomial();
        for (std::size_t i = mp.size(); i-- > 0;)
            v = v * lam + mp[i].get_d();
        CHECK(std::fabs(static_cast<double>(v)) < 1e-9);
    }
}

TEST_CASE("100-digit enclosure of lambda brackets a root")
{
    for (int p = 3; p <= 7; ++p) {
        auto f = make_field(p);
        auto iv = f->lambda_enclosure(340);
        const auto& mp = f->minimal_polynomial();
        auto eval = [&](const mpq_class& x) {
            mpq_class v = 0;
            for (std::size_t i = mp.size(); i-- > 0;)
                v = v * x + mpq_class(mp[i]);
            return v;
        };
        CAPTURE(p);
        CHECK(iv.hi - iv.lo <= mpq_class(1, 1) / mpq_class(mpz_class(1) << 340));
        CHECK(sgn(eval(iv.lo)) * sgn(eval(iv.hi)) <= 0);
    }
}

TEST_CASE("field arithmetic examples")
{
    auto f4 = make_field(4), f5 = make_field(5);
    auto l4 = field_element::lambda(f4), l5 = field_element::lambda(f5);
    CHECK(l4 * l4 == fe(f4, 2));
    CHECK(l5 * l5 - l5 == fe(f5, 1));
    CHECK(l4 + field_element(f4) == l4);
    CHECK(field_element(f4).sign() == 0);
    CHECK((l4 - fe(f4, 1)).sign() == 1);
    CHECK((l4 * mpq_class(3) - fe(f4, 4)).sign() == 1);
    CHECK((l4 * mpq_class(3) - fe(f4, 5)).sign() == -1);
    CHECK_THROWS_AS(fe(f4, 1) / field_element(f4), arithmetic_error);
    CHECK_THROWS_AS(l4 + l5, descriptor_mismatch);
    CHECK(fe(f4, {mpq_class(-1, 2), 3}).to_string() == "3*L - 1/2");
}

TEST_CASE("ring axioms and sign consistency on random elements")
{
    std::mt19937 rng(7);
    for (int p : {3, 4, 5, 7, 9, 11}) {
        auto f = make_field(p);
        for (int i = 0; i < 30; ++i) {
            auto x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == fe(f, 1));
                CHECK((-x).sign() == -x.sign());
            }
            CHECK((x * y).sign() == x.sign() * y.sign());
            double dx = x.to_double();
            if (std::fabs(dx) > 1e-9)
                CHECK(x.sign() == (dx > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("square roots in K")
{
    auto f4 = make_field(4), f5 = make_field(5);
    auto l4 = field_element::lambda(f4);
    CHECK(fe(f4, 2).sqrt() == l4);
    CHECK(!fe(f4, 14).sqrt().has_value());
    CHECK((l4 * mpq_class(3)) * (l4 * mpq_class(3)) == fe(f4, 18));
    CHECK(fe(f4, 18).sqrt() == l4 * mpq_class(3));
    auto phi = field_element::lambda(f5);
    CHECK((phi * phi).sqrt() == phi);
    CHECK(fe(f5, 5).sqrt() == phi * mpq_class(2) - fe(f5, 1));
    CHECK(!fe(make_field(3), 5).sqrt().has_value());
}

TEST_CASE("quadratic extension")
{
    auto f = make_field(4);
    auto l = field_element::lambda(f);
    auto d = fe(f, 14);
    auto a1 = quad(l, fe(f, 1), d, 2);
    auto c1 = quad(l, fe(f, -1), d, 2);
    CHECK(a1.conjugate() == c1);
    CHECK(a1.conjugate().conjugate() == a1);
    CHECK(c1.sign() == -1);
    CHECK(a1.sign() == 1);
    CHECK(a1 * quad_element(fe(f, 1)) == a1);
    CHECK(a1 * c1 == quad_element(fe(f, -3)));
    CHECK(a1 + c1 == quad_element(l));
    CHECK((a1 + c1).in_base_field());
    // (λ + √56)/4 = λ/4 + √14/2: radicands agree up to rational squares.
    auto other = quad(l, fe(f, 1), fe(f, 56), 4);
    CHECK(other == quad_element(l * mpq_class(1, 4), fe(f, {mpq_class(1, 2)}), d));
    CHECK(other - a1 == quad_element(l * mpq_class(-1, 4)));
    // √(56/9) = (2/3)√14, with canonical coordinates.
    auto r = quad_element::sqrt_of(fe(f, {mpq_class(56, 9)}));
    CHECK(r == quad_element(field_element(f), fe(f, {mpq_class(2, 3)}), d));
    CHECK(r.b().coefficients()[0].get_den() == 3);
    CHECK(quad_element::sqrt_of(fe(f, 8)) == quad_element(l * mpq_class(2)));
    CHECK_THROWS_AS(a1 + quad_element::sqrt_of(fe(f, 3)), radicand_mismatch);
    CHECK(compare(a1, quad_element::sqrt_of(fe(f, 3))) == 1);
}

TEST_CASE("conjugation is a ring automorphism fixing K")
{
    std::mt19937 rng(11);
    for (int p : {3, 4, 5, 7}) {
        auto f = make_field(p);
        auto d = fe(f, 14);
        for (int i = 0; i < 20; ++i) {
            quad_element x(random_element(f, rng), random_element(f, rng), d);
            quad_element y(random_element(f, rng), random_element(f, rng), d);
            CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
            CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
            if (!y.is_zero())
                CHECK((x / y) * y == x);
            if (!x.is_zero() && !y.is_zero())
                CHECK((x * y).sign() == x.sign() * y.sign());
            double dx = x.to_double();
            if (std::fabs(dx) > 1e-9)
                CHECK(x.sign() == (dx > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("rational recognition")
{
    CHECK(recognize_rational(0.75L, 100, 1e-12L) == mpq_class(3, 4));
    CHECK(recognize_rational(-1.0L / 3, 100, 1e-12L) == mpq_class(-1, 3));
    CHECK(!recognize_rational(std::sqrt(2.0L), 100, 1e-12L).has_value());
}
