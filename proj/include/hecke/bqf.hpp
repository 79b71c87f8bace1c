#pragma once

// λ-binary quadratic forms Ax² + Bxy + Cy² over Z[λ_p], the right action
// of G_p, simple forms, class cycles Z_A and irreducible systems of poles.

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/cfrac.hpp"

namespace hecke {

class quadratic_form {
  public:
    /// Coefficients must lie in Z[λ_p].
    quadratic_form(field_element A, field_element B, field_element C);

    const field_element& A() const { return A_; }
    const field_element& B() const { return B_; }
    const field_element& C() const { return C_; }
    const field& descriptor() const { return A_.descriptor(); }
    int p() const { return A_.p(); }

    field_element discriminant() const { return B_ * B_ - A_ * C_ * mpq_class(4); }
    bool is_simple() const { return A_.sign() > 0 && C_.sign() < 0; }

    /// (Q∘M)(x, y) = Q(ax + by, cx + dy).
    quadratic_form act(const group_element& m) const;

    /// α_Q = (−B + √D) / (2A).
    quad_element root() const;

    /// Q(z, 1) evaluated at a point.
    quad_element evaluate(const quad_element& z) const;

    quadratic_form operator-() const { return quadratic_form(-A_, -B_, -C_); }
    friend bool operator==(const quadratic_form& x, const quadratic_form& y) {
        return x.A_ == y.A_ && x.B_ == y.B_ && x.C_ == y.C_;
    }
    friend bool operator!=(const quadratic_form& x, const quadratic_form& y) { return !(x == y); }

    std::string to_string() const;

  private:
    field_element A_, B_, C_;
};

/// Embedded lexicographic order on (A, B, C).
bool form_less(const quadratic_form& x, const quadratic_form& y);

inline quad_element root_of_form(const quadratic_form& q) { return q.root(); }
inline quadratic_form negate_form(const quadratic_form& q) { return -q; }

/// α' , the other root of Q_α.
inline quad_element hecke_conjugate(const quad_element& alpha) { return alpha.conjugate(); }

/// [c, d − a, −b]: the form whose roots are the fixed points of m, α_Q attracting.
quadratic_form form_of_matrix(const group_element& m);

/// Q_α for a hyperbolic point, read off its automorph.
quadratic_form form_of_point(const quad_element& alpha, std::size_t budget = cf_budget());

enum class hyperbolicity { hyperbolic, not_hyperbolic, budget_exhausted };

/*
 * Q is hyperbolic when it is the form of its root: √(D + 4) = τ lies in
 * Z[λ], M_Q = [[(τ − B)/2, −C], [A, (τ + B)/2]] is integral and equals the
 * automorph of α_Q. The cheap tests reject most candidates before any walk.
 */
hyperbolicity classify_form(const quadratic_form& q, std::size_t budget = cf_budget());

/// Next simple form along the walk of α_Q; q must be simple.
quadratic_form cycle_step(const quadratic_form& q);

struct form_cycle {
    int p;
    field_element discriminant;
    std::vector<quadratic_form> forms; // walk order, starting at the least form
    std::string label;

    /// Roots of the simple forms.
    std::vector<quad_element> zeros() const;
    bool contains(const quadratic_form& q) const;
};

/// The cycle of simple forms in the class of a hyperbolic form.
form_cycle class_cycle(const quadratic_form& q, std::size_t budget = cf_budget());

/// −A as a cycle.
form_cycle negate_class(const form_cycle& c, std::size_t budget = cf_budget());

struct enumeration_options {
    int bound = 12;
    std::size_t budget = cf_budget();
};

struct enumeration_result {
    std::vector<form_cycle> cycles;
    std::size_t candidates = 0;     // simple forms of discriminant D in the box
    std::size_t non_hyperbolic = 0; // candidates failing the hyperbolicity test
    std::size_t budget_exhausted = 0;
    int bound = 0;
};

/// Cycles through every simple form whose A, B coordinates lie in [−bound, bound].
enumeration_result enumerate_classes(const field& f, const field_element& disc,
                                     const enumeration_options& opts = {});

/// Finite set of hyperbolic points in embedded order.
class pole_set {
  public:
    pole_set() = default;
    explicit pole_set(const std::vector<quad_element>& xs);

    void insert(const quad_element& x);
    bool contains(const quad_element& x) const;
    const std::vector<quad_element>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    pole_set conjugate() const;
    pole_set united(const pole_set& o) const;

    friend bool operator==(const pole_set& x, const pole_set& y) { return x.elems_ == y.elems_; }
    friend bool operator!=(const pole_set& x, const pole_set& y) { return !(x == y); }

  private:
    std::vector<quad_element> elems_;
};

/// P_A = Z_A ∪ T Z_A.
pole_set isp(const form_cycle& c);

/// R = R'.
bool is_hecke_symmetric(const pole_set& r);

} // namespace hecke
