#include "hecke/rpf.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace hecke {

const char* to_string(term_kind k)
{
    switch (k) {
    case term_kind::class_pp: return "class_pp";
    case term_kind::class_quadratic: return "class_quadratic";
    case term_kind::pole_at_zero: return "pole_at_zero";
    case term_kind::tail: return "tail";
    }
    return "?";
}

namespace {

quad_element one_of(const field& f) { return quad_element(field_element(f, 1L)); }

void check_weight(int k)
{
    if (k < 1)
        throw std::invalid_argument("weight parameter k must be at least 1");
}

} // namespace

rational_function zero_pole_function(const field& f, int k, const quad_element& a0,
                                     const std::optional<quad_element>& b1)
{
    check_weight(k);
    if (b1 && k != 1)
        throw std::invalid_argument("pole_at_zero: b1 is only allowed for weight 2k = 2");
    rational_function q = (rational_function(polynomial(one_of(f))) - rational_function::z_power(f, -2 * k)) * a0;
    if (b1)
        q += rational_function::z_power(f, -1) * *b1;
    return q;
}

rational_function pp_piece(int k, const quad_element& alpha)
{
    check_weight(k);
    if (alpha.in_base_field())
        throw std::invalid_argument("pp_piece: point is not hyperbolic");
    quad_element ac = alpha.conjugate();
    quad_element diff = alpha - ac, num = one_of(alpha.descriptor());
    for (int i = 0; i < k; ++i)
        num *= diff;
    polynomial den = (polynomial::linear(alpha) * polynomial::linear(ac)).pow(k);
    rational_function g(polynomial(num), den, rational_function::coprime_tag{});
    return pp_at(g, alpha).to_function();
}

rational_function form_power(const quadratic_form& q, int k)
{
    check_weight(k);
    const field& f = q.descriptor();
    polynomial qz(f, {quad_element(q.C()), quad_element(q.B()), quad_element(q.A())});
    return rational_function(polynomial(one_of(f)), qz.pow(k));
}

namespace {

rational_function realize_term(const field& f, int k, const rpf_term& t)
{
    switch (t.kind) {
    case term_kind::class_pp: {
        rational_function s(f);
        for (const auto& alpha : t.cycle->zeros())
            s += pp_piece(k, alpha);
        for (const auto& beta : negate_class(*t.cycle).zeros())
            s -= pp_piece(k, beta.conjugate());
        return s * t.coefficient;
    }
    case term_kind::class_quadratic: {
        rational_function s(f);
        for (const auto& q : t.cycle->forms)
            s += form_power(q, k);
        return s * t.coefficient;
    }
    case term_kind::pole_at_zero:
        return zero_pole_function(f, k, t.coefficient, t.b1);
    case term_kind::tail: {
        if (static_cast<int>(t.tail.size()) > 2 * k - 1)
            throw std::invalid_argument("tail longer than 2k - 1");
        rational_function s(f);
        for (std::size_t n = 0; n < t.tail.size(); ++n)
            s += rational_function::z_power(f, -static_cast<int>(n) - 1) * t.tail[n];
        return s;
    }
    }
    throw std::logic_error("realize: unknown term");
}

} // namespace

rational_function realize(const field& f, int k, const std::vector<rpf_term>& terms)
{
    check_weight(k);
    rational_function q(f);
    for (const auto& t : terms) {
        if (t.cycle && t.cycle->p != f->p())
            throw descriptor_mismatch("rpf term over a different Hecke group");
        q += realize_term(f, k, t);
    }
    return q;
}

rpf_expression pole_at_zero(const field& f, int k, const quad_element& a0,
                            const std::optional<quad_element>& b1)
{
    std::vector<rpf_term> terms{{term_kind::pole_at_zero, std::nullopt, a0, b1, {}}};
    rational_function q = zero_pole_function(f, k, a0, b1);
    return rpf_expression{f->p(), k, std::move(terms), std::move(q)};
}

rpf_expression build_general(const field& f, int k, const std::vector<weighted_class>& classes,
                             const quad_element& c0, const std::vector<quad_element>& tail)
{
    check_weight(k);
    if (static_cast<int>(tail.size()) > 2 * k - 1)
        throw std::invalid_argument("build_general: tail longer than 2k - 1");
    std::vector<rpf_term> terms;
    for (const auto& c : classes) {
        if (c.cycle.p != f->p())
            throw descriptor_mismatch("build_general: class over a different Hecke group");
        terms.push_back({term_kind::class_pp, c.cycle, c.coefficient, std::nullopt, {}});
    }
    terms.push_back({term_kind::pole_at_zero, std::nullopt, c0, std::nullopt, {}});
    if (!tail.empty())
        terms.push_back({term_kind::tail, std::nullopt, quad_element(f), std::nullopt, tail});
    rational_function q = realize(f, k, terms);
    return rpf_expression{f->p(), k, std::move(terms), std::move(q)};
}

rpf_expression build_symmetric(const field& f, int k, const std::vector<weighted_class>& classes,
                               const quad_element& c0)
{
    check_weight(k);
    if (k % 2 == 0)
        throw std::invalid_argument("build_symmetric: k must be odd");
    std::vector<rpf_term> terms;
    for (const auto& c : classes) {
        if (c.cycle.p != f->p())
            throw descriptor_mismatch("build_symmetric: class over a different Hecke group");
        terms.push_back({term_kind::class_quadratic, c.cycle, c.coefficient, std::nullopt, {}});
    }
    terms.push_back({term_kind::pole_at_zero, std::nullopt, c0, std::nullopt, {}});
    rational_function q = realize(f, k, terms);
    return rpf_expression{f->p(), k, std::move(terms), std::move(q)};
}

rpf_expression build_theorem3(int k, const form_cycle& cls)
{
    check_weight(k);
    const field& f = cls.discriminant.descriptor();
    quad_element minus_sign(field_element(f, k % 2 == 0 ? -1L : 1L));
    std::vector<rpf_term> terms{
        {term_kind::class_quadratic, cls, one_of(f), std::nullopt, {}},
        {term_kind::class_quadratic, negate_class(cls), minus_sign, std::nullopt, {}},
    };
    rational_function q = realize(f, k, terms);
    return rpf_expression{f->p(), k, std::move(terms), std::move(q)};
}

rpf_verdict verify(const rpf_expression& expr, std::size_t budget)
{
    const rational_function& q = expr.realized;
    const field& f = q.descriptor();
    int k = expr.k;
    check_weight(k);
    if (f->p() != expr.p)
        throw descriptor_mismatch("verify: realized function over a different field");

    auto g = generators(f);
    std::vector<std::future<rational_function>> parts;
    for (int t = 1; t < expr.p; ++t)
        parts.push_back(std::async(std::launch::async | std::launch::deferred,
                                   [&q, &f, t, k] { return slash(q, u_power(f, t), k); }));
    rational_function r1 = q + slash(q, g.T, k);
    rational_function r2 = q;
    for (auto& part : parts)
        r2 += part.get();

    return rpf_verdict{r1.is_zero(), r2.is_zero(), r1, r2, analyze_poles(q, budget)};
}

pole_analysis analyze_poles(const rational_function& q, std::size_t budget)
{
    const field& f = q.descriptor();
    pole_analysis v;
    v.poles = poles_extended(q);
    std::map<std::string, std::pair<form_cycle, pole_set>> groups;
    pole_set all;
    for (const auto& pr : v.poles) {
        if (!pr.point) {
            v.unclassified.push_back(pr);
            continue;
        }
        if (pr.point->is_infinity())
            continue;
        const quad_element& x = pr.point->value();
        if (x.is_zero())
            continue;
        if (x.in_base_field()) {
            v.unclassified.push_back(pr);
            continue;
        }
        all.insert(x);
        quad_element y = x.sign() > 0 ? x : -(one_of(f) / x);
        try {
            form_cycle c = class_cycle(form_of_point(y, budget), budget);
            auto it = groups.find(c.label);
            if (it == groups.end())
                it = groups.emplace(c.label, std::make_pair(c, pole_set())).first;
            it->second.second.insert(x);
        } catch (const budget_exceeded&) {
            v.unclassified.push_back(pr);
        }
    }
    std::vector<std::pair<form_cycle, pole_set>> ordered;
    for (auto& [label, entry] : groups)
        ordered.push_back(entry);
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        return form_less(x.first.forms.front(), y.first.forms.front());
    });
    for (const auto& [cyc, poles] : ordered)
        v.isps.push_back({cyc.label, poles.elements(), is_hecke_symmetric(poles), poles == isp(cyc)});
    v.full_pole_set_symmetric = v.unclassified.empty() && is_hecke_symmetric(all);
    return v;
}

} // namespace hecke
