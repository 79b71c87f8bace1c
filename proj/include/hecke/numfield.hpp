#pragma once

// Exact arithmetic in K = Q(λ_p), λ_p = 2cos(π/p), and in quadratic
// extensions K(√D). Signs are decided under the embedding λ_p ↦ 2cos(π/p).

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

struct rational_interval {
    mpq_class lo, hi;

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    int sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
};

/*
 * Data attached to one Hecke field: the minimal polynomial of λ_p (monic,
 * integer coefficients, ascending order), its degree φ(2p)/2, and a lazily
 * refined rational isolating interval for λ_p. The refinement cache is
 * guarded by a mutex, so descriptors can be shared between threads.
 */
class field_descriptor {
  public:
    explicit field_descriptor(int p);

    int p() const { return p_; }
    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
    const std::vector<mpz_class>& minimal_polynomial() const { return minpoly_; }

    /// Rational interval of width at most 2^-bits containing λ_p.
    rational_interval lambda_enclosure(unsigned bits) const;

    /// Real conjugates 2cos(jπ/p), gcd(j, 2p) = 1; the canonical one first.
    const std::vector<long double>& embeddings() const { return embeddings_; }

  private:
    int p_;
    std::vector<mpz_class> minpoly_;
    std::vector<long double> embeddings_;

    mutable std::mutex mutex_;
    mutable mpq_class lo_, hi_;
    mutable int sign_at_lo_ = 0;
    mutable unsigned bits_ = 0;
};

using field = std::shared_ptr<const field_descriptor>;

/// Shared descriptor for G_p. Rejects p < 3 and p > 100000.
field make_field(int p);

/// Integer polynomial (ascending) of the Chebyshev-type relation
/// V_p(x) + 2, where V_n(z + 1/z) = z^n + z^-n. 2cos(π/p) is a root.
std::vector<mpz_class> chebyshev_relation(int p);

class field_element {
  public:
    explicit field_element(field f);
    field_element(field f, long value);
    field_element(field f, const mpq_class& value);
    /// Reduces an arbitrary-length coefficient vector modulo the minimal polynomial.
    field_element(field f, std::vector<mpq_class> coefficients);

    static field_element lambda(field f);

    const field& descriptor() const { return field_; }
    int p() const { return field_->p(); }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Membership in Z[λ_p]: every power-basis coordinate is an integer.
    bool is_integral() const;

    int sign() const;
    field_element inverse() const;
    field_element abs() const { return sign() < 0 ? -*this : *this; }

    /// Square root with positive canonical embedding, when it lies in K.
    std::optional<field_element> sqrt() const;

    rational_interval enclosure(unsigned bits) const;
    double to_double() const;
    /// Value under the conjugate embedding λ ↦ embeddings()[j].
    long double embed(std::size_t j) const;
    /// Polynomial in L, highest power first, e.g. "3*L - 1/2".
    std::string to_string() const;

    field_element operator-() const;
    field_element& operator+=(const field_element& o);
    field_element& operator-=(const field_element& o);
    field_element& operator*=(const field_element& o);
    field_element& operator/=(const field_element& o);
    field_element& operator*=(const mpq_class& r);

    friend field_element operator+(field_element x, const field_element& y) { return x += y; }
    friend field_element operator-(field_element x, const field_element& y) { return x -= y; }
    friend field_element operator*(field_element x, const field_element& y) { return x *= y; }
    friend field_element operator/(field_element x, const field_element& y) { return x /= y; }
    friend field_element operator*(field_element x, const mpq_class& r) { return x *= r; }

    friend bool operator==(const field_element& x, const field_element& y);
    friend bool operator!=(const field_element& x, const field_element& y) { return !(x == y); }

  private:
    void check_same(const field_element& o) const;

    field field_;
    std::vector<mpq_class> coeffs_;
};

/// sign(x - y) under the canonical embedding.
int compare(const field_element& x, const field_element& y);

/*
 * a + b√D with a, b in K and D a positive non-square of K. The radicand is
 * optional: an element whose radical part vanishes carries no radicand and
 * is a plain element of K. Radicands are normalized up to rational squares
 * (integer coordinates, no square integer content), so the same number
 * built from discriminants D and D·s² compares equal.
 */
class quad_element {
  public:
    explicit quad_element(field f);
    quad_element(field_element a); // NOLINT: implicit promotion K → K(√D)
    /// a + b√D; collapses into K when D turns out to be a square.
    quad_element(field_element a, field_element b, const field_element& radicand);

    /// √D itself, or an element of K when D is a square there.
    static quad_element sqrt_of(const field_element& d);

    const field_element& a() const { return a_; }
    const field_element& b() const { return b_; }
    const std::optional<field_element>& radicand() const { return radicand_; }
    const field& descriptor() const { return a_.descriptor(); }
    int p() const { return a_.p(); }

    bool in_base_field() const { return !radicand_.has_value(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    quad_element conjugate() const;
    /// a² − b²D, the norm down to K.
    field_element norm() const;
    int sign() const;
    quad_element abs() const { return sign() < 0 ? -*this : *this; }

    rational_interval enclosure(unsigned bits) const;
    double to_double() const;
    std::string to_string() const;

    quad_element operator-() const;
    quad_element& operator+=(const quad_element& o);
    quad_element& operator-=(const quad_element& o);
    quad_element& operator*=(const quad_element& o);
    quad_element& operator/=(const quad_element& o);

    friend quad_element operator+(quad_element x, const quad_element& y) { return x += y; }
    friend quad_element operator-(quad_element x, const quad_element& y) { return x -= y; }
    friend quad_element operator*(quad_element x, const quad_element& y) { return x *= y; }
    friend quad_element operator/(quad_element x, const quad_element& y) { return x /= y; }

    friend bool operator==(const quad_element& x, const quad_element& y);
    friend bool operator!=(const quad_element& x, const quad_element& y) { return !(x == y); }

  private:
    void drop_radicand_if_rational();
    static std::optional<field_element> common_radicand(const quad_element& x,
                                                        const quad_element& y);

    field_element a_, b_;
    std::optional<field_element> radicand_;
};

/// Embedded order, valid across different radicands.
int compare(const quad_element& x, const quad_element& y);

/// Structural total order on coordinates, for use as a map key.
struct coordinate_less {
    bool operator()(const field_element& x, const field_element& y) const;
    bool operator()(const quad_element& x, const quad_element& y) const;
};

/// Embedded order.
struct embedded_less {
    bool operator()(const quad_element& x, const quad_element& y) const {
        return compare(x, y) < 0;
    }
};

/// Rational approximation of x with denominator at most max_den, if within tol.
std::optional<mpq_class> recognize_rational(long double x, long max_den, long double tol);

} // namespace hecke
