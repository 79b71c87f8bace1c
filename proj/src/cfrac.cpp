#include "hecke/cfrac.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

namespace hecke {

std::string cf_move::word() const
{
    if (digit == 0)
        return "T";
    return std::string(static_cast<std::size_t>(digit), 'U') + "T";
}

std::size_t cf_budget()
{
    if (const char* env = std::getenv("RPF_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return default_cf_budget;
}

const std::vector<field_element>& polygon_vertices(const field& f)
{
    static std::mutex mutex;
    static std::map<int, std::vector<field_element>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(f->p());
    if (it != cache.end())
        return it->second;
    std::vector<field_element> v(f->p() + 1, field_element(f));
    for (int s = 2; s <= f->p(); ++s)
        v[s] = gamma(f, s) / gamma(f, s - 1);
    return cache.emplace(f->p(), std::move(v)).first->second;
}

bool is_simple_point(const quad_element& x)
{
    return !x.in_base_field() && x.sign() > 0 && x.conjugate().sign() < 0;
}

cf_step_result cf_step(const quad_element& x)
{
    if (x.in_base_field())
        throw std::invalid_argument("cf_step: point must be irrational over K");
    const field& f = x.descriptor();
    auto g = generators(f);
    int sx = x.sign();
    if (sx < 0)
        return {mobius(g.T, x), cf_move{0, g.T}};
    if (sx == 0)
        throw std::invalid_argument("cf_step: zero point");

    const auto& v = polygon_vertices(f);
    int s = 1;
    if (compare(x, quad_element(v[2])) < 0) {
        s = 2;
        while (s < f->p() - 1 && compare(x, quad_element(v[s + 1])) < 0)
            ++s;
    }
    group_element move = u_power(f, s) * g.T.inverse();
    return {mobius(move.inverse(), x), cf_move{s, move}};
}

cf_expansion expansion(const quad_element& alpha, std::size_t budget)
{
    cf_expansion e{alpha, {}, {}, {}};
    std::map<quad_element, std::size_t, coordinate_less> seen;
    std::vector<cf_move> moves;
    quad_element x = alpha;
    for (std::size_t step = 0;; ++step) {
        auto [it, fresh] = seen.emplace(x, e.orbit.size());
        if (!fresh) {
            std::size_t start = it->second;
            e.preperiod.assign(moves.begin(), moves.begin() + static_cast<std::ptrdiff_t>(start));
            e.period.assign(moves.begin() + static_cast<std::ptrdiff_t>(start), moves.end());
            return e;
        }
        if (step >= budget)
            throw budget_exceeded("cf expansion of " + alpha.to_string() + " exceeded " +
                                  std::to_string(budget) + " steps");
        e.orbit.push_back(x);
        auto r = cf_step(x);
        moves.push_back(r.move);
        x = std::move(r.next);
    }
}

bool is_attracting(const group_element& m, const quad_element& alpha)
{
    quad_element t = quad_element(m.c()) * alpha + quad_element(m.d());
    quad_element one(field_element(alpha.descriptor(), 1L));
    return (t * t - one).sign() > 0;
}

group_element automorph(const quad_element& alpha, std::size_t budget)
{
    if (alpha.in_base_field())
        throw std::invalid_argument("automorph: point is not quadratic over K");
    cf_expansion e = expansion(alpha, budget);
    const field& f = alpha.descriptor();
    // orbit[j] = move_{j+1} ... move_{j+L} orbit[j], and α = move_1 ... move_j orbit[j].
    group_element w = group_element::identity(f);
    for (const auto& m : e.period)
        w = w * m.matrix;
    group_element h = group_element::identity(f);
    for (const auto& m : e.preperiod)
        h = h * m.matrix;
    group_element result = h * w * h.inverse();
    if (!is_attracting(result, alpha))
        result = result.inverse();
    if (mobius(result, alpha) != alpha || classify(result) != element_kind::hyperbolic)
        throw std::logic_error("automorph: period product does not fix the point");
    return result;
}

} // namespace hecke
