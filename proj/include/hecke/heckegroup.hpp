#pragma once

// The Hecke group G_p = <S, T> / {±I} as determinant-one matrices over
// Z[λ_p], with Möbius action on K(√D) ∪ {∞}.

#include <optional>
#include <string>
#include <string_view>

#include "hecke/numfield.hpp"

namespace hecke {

/*
 * 2x2 matrix with entries in Z[λ_p] and determinant 1, stored in ±I normal
 * form: the first nonzero of (trace, c, b) is positive. Equality is then
 * equality in PSL(2).
 */
class group_element {
  public:
    group_element(field_element a, field_element b, field_element c, field_element d);

    static group_element identity(const field& f);

    const field_element& a() const { return a_; }
    const field_element& b() const { return b_; }
    const field_element& c() const { return c_; }
    const field_element& d() const { return d_; }
    const field& descriptor() const { return a_.descriptor(); }
    int p() const { return a_.p(); }

    field_element trace() const { return a_ + d_; }
    group_element inverse() const;
    group_element pow(long e) const;

    friend group_element operator*(const group_element& m, const group_element& n);
    friend bool operator==(const group_element& m, const group_element& n);
    friend bool operator!=(const group_element& m, const group_element& n) { return !(m == n); }

    std::string to_string() const;

  private:
    void normalize();

    field_element a_, b_, c_, d_;
};

struct generator_set {
    group_element S, T, U;
};

/// S = [[1,λ],[0,1]], T = [[0,-1],[1,0]], U = S T = [[λ,-1],[1,0]].
generator_set generators(const field& f);

/// γ_t = sin(tπ/p)/sin(π/p) through γ_0 = 0, γ_1 = 1, γ_{t+1} = λγ_t − γ_{t−1}.
field_element gamma(const field& f, long t);

/// U^t = [[γ_{t+1}, −γ_t], [γ_t, −γ_{t−1}]].
group_element u_power(const field& f, long t);

/// Word over {S, s, T, t, U, u}; lowercase letters are inverses.
group_element from_word(const field& f, std::string_view word);

enum class element_kind { identity, elliptic, parabolic, hyperbolic };

element_kind classify(const group_element& m);
const char* to_string(element_kind k);

/// Point of K(√D) ∪ {∞}.
class extended_point {
  public:
    extended_point(quad_element value) : value_(std::move(value)) {} // NOLINT
    static extended_point infinity() { return extended_point(); }

    bool is_infinity() const { return !value_.has_value(); }
    const quad_element& value() const { return *value_; }

    friend bool operator==(const extended_point& x, const extended_point& y) {
        return x.value_ == y.value_;
    }
    friend bool operator!=(const extended_point& x, const extended_point& y) { return !(x == y); }

    std::string to_string() const { return value_ ? value_->to_string() : "oo"; }

  private:
    extended_point() = default;
    std::optional<quad_element> value_;
};

/// (az + b)/(cz + d) with M(∞) = a/c and M(−d/c) = ∞.
extended_point mobius(const group_element& m, const extended_point& z);

/// Finite image; throws arithmetic_error if z is the pole of m.
quad_element mobius(const group_element& m, const quad_element& z);

/// Decides m ∈ G_p for p ∈ {3, 4, 6}; std::nullopt for other p.
std::optional<bool> in_hecke_group(const group_element& m);

} // namespace hecke
