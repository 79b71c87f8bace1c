#include "hecke/bqf.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hecke {

quadratic_form::quadratic_form(field_element A, field_element B, field_element C)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C))
{
    if (A_.descriptor() != B_.descriptor() || A_.descriptor() != C_.descriptor())
        throw descriptor_mismatch("quadratic_form: coefficients over different fields");
    if (!A_.is_integral() || !B_.is_integral() || !C_.is_integral())
        throw std::invalid_argument("quadratic_form: coefficients must lie in Z[lambda]");
}

quadratic_form quadratic_form::act(const group_element& m) const
{
    if (m.p() != p())
        throw descriptor_mismatch("quadratic_form::act: different Hecke groups");
    const auto &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
    return quadratic_form(A_ * a * a + B_ * a * c + C_ * c * c,
                          (A_ * a * b + C_ * c * d) * mpq_class(2) + B_ * (a * d + b * c),
                          A_ * b * b + B_ * b * d + C_ * d * d);
}

quad_element quadratic_form::root() const
{
    if (A_.is_zero())
        throw std::invalid_argument("root_of_form: A = 0");
    field_element disc = discriminant();
    if (disc.sign() <= 0)
        throw std::invalid_argument("root_of_form: discriminant is not positive");
    field_element inv2a = (A_ * mpq_class(2)).inverse();
    return quad_element(-B_ * inv2a, inv2a, disc);
}

quad_element quadratic_form::evaluate(const quad_element& z) const
{
    return (quad_element(A_) * z + quad_element(B_)) * z + quad_element(C_);
}

std::string quadratic_form::to_string() const
{
    return "[" + A_.to_string() + ", " + B_.to_string() + ", " + C_.to_string() + "]";
}

bool form_less(const quadratic_form& x, const quadratic_form& y)
{
    if (int s = compare(x.A(), y.A()))
        return s < 0;
    if (int s = compare(x.B(), y.B()))
        return s < 0;
    return compare(x.C(), y.C()) < 0;
}

namespace {

struct form_key_less {
    bool operator()(const quadratic_form& x, const quadratic_form& y) const
    {
        coordinate_less lt;
        if (lt(x.A(), y.A()) || lt(y.A(), x.A()))
            return lt(x.A(), y.A());
        if (lt(x.B(), y.B()) || lt(y.B(), x.B()))
            return lt(x.B(), y.B());
        return lt(x.C(), y.C());
    }
};

// Forms along the walk of α_Q: Q_{i+1} = Q_i ∘ move_i.
struct walked {
    cf_expansion expansion;
    std::vector<quadratic_form> forms;
};

walked walk(const quadratic_form& q, std::size_t budget)
{
    walked w{expansion(q.root(), budget), {q}};
    std::vector<cf_move> moves = w.expansion.preperiod;
    moves.insert(moves.end(), w.expansion.period.begin(), w.expansion.period.end());
    for (std::size_t i = 0; i + 1 < moves.size(); ++i)
        w.forms.push_back(w.forms.back().act(moves[i].matrix));
    return w;
}

} // namespace

quadratic_form form_of_matrix(const group_element& m)
{
    return quadratic_form(m.c(), m.d() - m.a(), -m.b());
}

quadratic_form form_of_point(const quad_element& alpha, std::size_t budget)
{
    return form_of_matrix(automorph(alpha, budget));
}

hyperbolicity classify_form(const quadratic_form& q, std::size_t budget)
{
    field_element disc = q.discriminant();
    if (disc.sign() <= 0 || q.A().is_zero())
        return hyperbolicity::not_hyperbolic;
    auto tau = (disc + field_element(q.descriptor(), 4L)).sqrt();
    if (!tau || !tau->is_integral())
        return hyperbolicity::not_hyperbolic;
    field_element a = (*tau - q.B()) * mpq_class(1, 2), d = (*tau + q.B()) * mpq_class(1, 2);
    if (!a.is_integral() || !d.is_integral())
        return hyperbolicity::not_hyperbolic;
    group_element mq(a, -q.C(), q.A(), d);
    if (in_hecke_group(mq) == false)
        return hyperbolicity::not_hyperbolic;
    quad_element alpha = q.root();
    if (alpha.in_base_field())
        return hyperbolicity::not_hyperbolic;
    try {
        return automorph(alpha, budget) == mq ? hyperbolicity::hyperbolic
                                              : hyperbolicity::not_hyperbolic;
    } catch (const budget_exceeded&) {
        return hyperbolicity::budget_exhausted;
    }
}

quadratic_form cycle_step(const quadratic_form& q)
{
    if (!q.is_simple())
        throw std::invalid_argument("cycle_step: form is not simple");
    quad_element x = q.root();
    quadratic_form cur = q;
    std::size_t budget = cf_budget();
    for (std::size_t i = 0; i < budget; ++i) {
        auto r = cf_step(x);
        cur = cur.act(r.move.matrix);
        x = std::move(r.next);
        if (is_simple_point(x))
            return cur;
    }
    throw budget_exceeded("cycle_step: no simple successor within budget");
}

std::vector<quad_element> form_cycle::zeros() const
{
    std::vector<quad_element> z;
    z.reserve(forms.size());
    for (const auto& q : forms)
        z.push_back(q.root());
    return z;
}

bool form_cycle::contains(const quadratic_form& q) const
{
    return std::find(forms.begin(), forms.end(), q) != forms.end();
}

form_cycle class_cycle(const quadratic_form& q, std::size_t budget)
{
    walked w = walk(q, budget);
    std::vector<quadratic_form> period(w.forms.begin() +
                                           static_cast<std::ptrdiff_t>(w.expansion.preperiod.size()),
                                       w.forms.end());
    auto least = std::min_element(period.begin(), period.end(), form_less);
    std::rotate(period.begin(), least, period.end());
    for (const auto& f : period)
        if (!f.is_simple())
            throw std::logic_error("class_cycle: periodic form is not simple");
    std::string label = period.front().to_string();
    return form_cycle{q.p(), q.discriminant(), std::move(period), std::move(label)};
}

form_cycle negate_class(const form_cycle& c, std::size_t budget)
{
    const quadratic_form& q = c.forms.front();
    // −Q ∘ T = [−C, B, −A] is simple.
    return class_cycle(quadratic_form(-q.C(), q.B(), -q.A()), budget);
}

namespace {

// Integer vectors with coordinates in [−bound, bound].
std::vector<field_element> box(const field& f, int bound)
{
    std::vector<field_element> out;
    int n = f->degree();
    std::vector<long> c(n, -bound);
    for (;;) {
        std::vector<mpq_class> q(c.begin(), c.end());
        out.emplace_back(f, std::move(q));
        int i = 0;
        while (i < n && c[i] == bound)
            c[i++] = -bound;
        if (i == n)
            break;
        ++c[i];
    }
    return out;
}

} // namespace

enumeration_result enumerate_classes(const field& f, const field_element& disc,
                                     const enumeration_options& opts)
{
    if (disc.descriptor() != f)
        throw descriptor_mismatch("enumerate_classes: discriminant over a different field");
    if (disc.sign() <= 0)
        throw std::invalid_argument("enumerate_classes: discriminant must be positive");
    if (!disc.is_integral())
        throw std::invalid_argument("enumerate_classes: discriminant must lie in Z[lambda]");
    if (opts.bound < 0)
        throw std::invalid_argument("enumerate_classes: negative bound");

    enumeration_result res;
    res.bound = opts.bound;
    std::vector<field_element> coords = box(f, opts.bound);
    std::vector<field_element> bs;
    for (const auto& b : coords)
        if (compare(b * b, disc) < 0)
            bs.push_back(b);

    std::set<quadratic_form, form_key_less> placed;
    for (const auto& a : coords) {
        if (a.sign() <= 0)
            continue;
        field_element inv4a = (a * mpq_class(4)).inverse();
        for (const auto& b : bs) {
            field_element c = (b * b - disc) * inv4a;
            if (!c.is_integral())
                continue;
            quadratic_form q(a, b, c);
            ++res.candidates;
            if (placed.count(q))
                continue;
            switch (classify_form(q, opts.budget)) {
            case hyperbolicity::not_hyperbolic:
                ++res.non_hyperbolic;
                continue;
            case hyperbolicity::budget_exhausted:
                ++res.budget_exhausted;
                continue;
            case hyperbolicity::hyperbolic:
                break;
            }
            form_cycle cyc = class_cycle(q, opts.budget);
            for (const auto& g : cyc.forms)
                placed.insert(g);
            res.cycles.push_back(std::move(cyc));
        }
    }
    std::sort(res.cycles.begin(), res.cycles.end(), [](const form_cycle& x, const form_cycle& y) {
        return form_less(x.forms.front(), y.forms.front());
    });
    return res;
}

pole_set::pole_set(const std::vector<quad_element>& xs)
{
    for (const auto& x : xs)
        insert(x);
}

void pole_set::insert(const quad_element& x)
{
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x, embedded_less{});
    if (it != elems_.end() && *it == x)
        return;
    elems_.insert(it, x);
}

bool pole_set::contains(const quad_element& x) const
{
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x, embedded_less{});
    return it != elems_.end() && *it == x;
}

pole_set pole_set::conjugate() const
{
    pole_set r;
    for (const auto& x : elems_)
        r.insert(x.conjugate());
    return r;
}

pole_set pole_set::united(const pole_set& o) const
{
    pole_set r = *this;
    for (const auto& x : o.elems_)
        r.insert(x);
    return r;
}

pole_set isp(const form_cycle& c)
{
    pole_set r;
    for (const auto& alpha : c.zeros()) {
        r.insert(alpha);
        r.insert(-(quad_element(field_element(alpha.descriptor(), 1L)) / alpha));
    }
    return r;
}

bool is_hecke_symmetric(const pole_set& r)
{
    for (const auto& x : r.elements())
        if (x.in_base_field())
            return false;
    return r.conjugate() == r;
}

} // namespace hecke
