#pragma once

// Univariate polynomials and rational functions in z over K or K(√D), the
// weight-2k slash operator, principal parts and pole location.

#include <optional>
#include <string>
#include <vector>

#include "hecke/heckegroup.hpp"

namespace hecke {

class polynomial {
  public:
    explicit polynomial(field f);
    polynomial(field f, std::vector<quad_element> coeffs); // ascending powers
    polynomial(const quad_element& constant);              // NOLINT

    /// c·z^n.
    static polynomial monomial(const quad_element& c, int n);
    /// z − a.
    static polynomial linear(const quad_element& a);

    const field& descriptor() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<quad_element>& coefficients() const { return c_; }
    quad_element coeff(int i) const;
    const quad_element& lead() const { return c_.back(); }
    /// Every coefficient lies in K.
    bool in_base_field() const;

    polynomial conjugate() const;
    polynomial derivative() const;
    polynomial monic() const;
    quad_element eval(const quad_element& z) const;
    /// P(z + a).
    polynomial taylor_shift(const quad_element& a) const;
    polynomial pow(int e) const;

    polynomial operator-() const;
    polynomial& operator+=(const polynomial& o);
    polynomial& operator-=(const polynomial& o);
    polynomial& operator*=(const polynomial& o);
    polynomial& operator*=(const quad_element& s);

    friend polynomial operator+(polynomial x, const polynomial& y) { return x += y; }
    friend polynomial operator-(polynomial x, const polynomial& y) { return x -= y; }
    friend polynomial operator*(const polynomial& x, const polynomial& y);
    friend polynomial operator*(polynomial x, const quad_element& s) { return x *= s; }
    friend bool operator==(const polynomial& x, const polynomial& y) { return x.c_ == y.c_; }
    friend bool operator!=(const polynomial& x, const polynomial& y) { return !(x == y); }

    /// a = q b + r, deg r < deg b.
    static void divmod(const polynomial& a, const polynomial& b, polynomial& q, polynomial& r);
    /// Quotient of an exact division; throws arithmetic_error on a remainder.
    static polynomial exact_div(const polynomial& a, const polynomial& b);

    std::string to_string(const std::string& var = "z") const;

  private:
    void trim();

    field field_;
    std::vector<quad_element> c_;
};

/// Monic gcd; zero only when both arguments are zero.
polynomial gcd(polynomial a, polynomial b);

/// Square-free decomposition f = lc · Π s_i^i; entry i−1 holds s_i.
std::vector<polynomial> squarefree_decomposition(const polynomial& f);

/*
 * num/den with gcd(num, den) = 1 and den monic. The zero function is 0/1.
 */
class rational_function {
  public:
    explicit rational_function(field f);
    rational_function(polynomial num); // NOLINT
    rational_function(polynomial num, polynomial den);

    /// z^n for any integer n.
    static rational_function z_power(const field& f, int n);

    const polynomial& num() const { return num_; }
    const polynomial& den() const { return den_; }
    const field& descriptor() const { return num_.descriptor(); }
    bool is_zero() const { return num_.is_zero(); }
    bool in_base_field() const { return num_.in_base_field() && den_.in_base_field(); }

    /// Value at a non-pole.
    quad_element eval(const quad_element& z) const;

    rational_function operator-() const;
    friend rational_function operator+(const rational_function& x, const rational_function& y);
    friend rational_function operator-(const rational_function& x, const rational_function& y);
    friend rational_function operator*(const rational_function& x, const rational_function& y);
    friend rational_function operator/(const rational_function& x, const rational_function& y);
    friend rational_function operator*(const rational_function& x, const quad_element& s);
    rational_function& operator+=(const rational_function& o) { return *this = *this + o; }
    rational_function& operator-=(const rational_function& o) { return *this = *this - o; }

    friend bool operator==(const rational_function& x, const rational_function& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const rational_function& x, const rational_function& y) { return !(x == y); }

    std::string to_string(const std::string& var = "z") const;

    struct coprime_tag {};
    /// Trusted constructor: num and den already coprime; only normalizes den to monic.
    rational_function(polynomial num, polynomial den, coprime_tag);

  private:
    polynomial num_, den_;
};

/// (f | M)(z) = (cz + d)^{−2k} f(Mz).
rational_function slash(const rational_function& f, const group_element& m, int k);

struct principal_part {
    quad_element point;
    std::vector<quad_element> coefficients; // c_j of (z − point)^{−j}, j = 1..m

    bool empty() const { return coefficients.empty(); }
    int order() const { return static_cast<int>(coefficients.size()); }
    rational_function to_function() const;
};

/// Principal part of f at α; empty when f is regular there.
principal_part pp_at(const rational_function& f, const quad_element& alpha);

struct pole_record {
    std::optional<extended_point> point; // located pole, possibly ∞
    std::optional<polynomial> factor;    // otherwise: factor of the denominator over K
    int order = 0;
};

/*
 * Poles on C ∪ {∞}. Roots of the denominator lying in K or in a quadratic
 * extension of K are located exactly; what is left is reported as factor
 * records over K (orders then count multiplicity in the norm down to K).
 * Points come in embedded order, then ∞, then factor records.
 */
std::vector<pole_record> poles_extended(const rational_function& f);

} // namespace hecke
