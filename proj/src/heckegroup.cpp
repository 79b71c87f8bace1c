#include "hecke/heckegroup.hpp"

#include <sstream>

namespace hecke {

group_element::group_element(field_element a, field_element b, field_element c, field_element d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    if (!(a_ * d_ - b_ * c_ == field_element(a_.descriptor(), 1L)))
        throw std::invalid_argument("group_element: determinant is not 1");
    if (!a_.is_integral() || !b_.is_integral() || !c_.is_integral() || !d_.is_integral())
        throw std::invalid_argument("group_element: entries must lie in Z[lambda]");
    normalize();
}

void group_element::normalize()
{
    int s = trace().sign();
    if (s == 0)
        s = c_.sign();
    if (s == 0)
        s = b_.sign();
    if (s < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

group_element group_element::identity(const field& f)
{
    return group_element(field_element(f, 1L), field_element(f), field_element(f),
                         field_element(f, 1L));
}

group_element group_element::inverse() const { return group_element(d_, -b_, -c_, a_); }

group_element operator*(const group_element& m, const group_element& n)
{
    if (m.p() != n.p())
        throw descriptor_mismatch("group elements over different Hecke groups");
    return group_element(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                         m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
}

bool operator==(const group_element& m, const group_element& n)
{
    return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
}

group_element group_element::pow(long e) const
{
    group_element base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    group_element acc = identity(descriptor());
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string group_element::to_string() const
{
    std::ostringstream os;
    os << "[[" << a_.to_string() << ", " << b_.to_string() << "], [" << c_.to_string() << ", "
       << d_.to_string() << "]]";
    return os.str();
}

generator_set generators(const field& f)
{
    field_element zero(f), one(f, 1L), lam = field_element::lambda(f);
    return {group_element(one, lam, zero, one), group_element(zero, -one, one, zero),
            group_element(lam, -one, one, zero)};
}

field_element gamma(const field& f, long t)
{
    // γ has period 2p and γ_{-t} = -γ_t.
    long period = 2L * f->p();
    long r = ((t % period) + period) % period;
    field_element lam = field_element::lambda(f);
    field_element prev(f), cur(f, 1L);
    if (r == 0)
        return prev;
    for (long i = 1; i < r; ++i) {
        field_element next = lam * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

group_element u_power(const field& f, long t)
{
    return group_element(gamma(f, t + 1), -gamma(f, t), gamma(f, t), -gamma(f, t - 1));
}

group_element from_word(const field& f, std::string_view word)
{
    auto g = generators(f);
    group_element acc = group_element::identity(f);
    for (char ch : word) {
        switch (ch) {
        case 'S': acc = acc * g.S; break;
        case 's': acc = acc * g.S.inverse(); break;
        case 'T': acc = acc * g.T; break;
        case 't': acc = acc * g.T.inverse(); break;
        case 'U': acc = acc * g.U; break;
        case 'u': acc = acc * g.U.inverse(); break;
        case ' ': break;
        default:
            throw parse_error(std::string("invalid group word letter '") + ch + "'");
        }
    }
    return acc;
}

element_kind classify(const group_element& m)
{
    if (m == group_element::identity(m.descriptor()))
        return element_kind::identity;
    field_element two(m.descriptor(), 2L);
    int s = compare(m.trace().abs(), two);
    if (s > 0)
        return element_kind::hyperbolic;
    if (s == 0)
        return element_kind::parabolic;
    return element_kind::elliptic;
}

const char* to_string(element_kind k)
{
    switch (k) {
    case element_kind::identity: return "identity";
    case element_kind::elliptic: return "elliptic";
    case element_kind::parabolic: return "parabolic";
    case element_kind::hyperbolic: return "hyperbolic";
    }
    return "?";
}

extended_point mobius(const group_element& m, const extended_point& z)
{
    if (z.is_infinity()) {
        if (m.c().is_zero())
            return extended_point::infinity();
        return quad_element(m.a() / m.c());
    }
    const quad_element& x = z.value();
    quad_element den = quad_element(m.c()) * x + quad_element(m.d());
    if (den.is_zero())
        return extended_point::infinity();
    return (quad_element(m.a()) * x + quad_element(m.b())) / den;
}

quad_element mobius(const group_element& m, const quad_element& z)
{
    extended_point r = mobius(m, extended_point(z));
    if (r.is_infinity())
        throw arithmetic_error("mobius: point maps to infinity");
    return r.value();
}

std::optional<bool> in_hecke_group(const group_element& m)
{
    int p = m.p();
    if (p == 3)
        return true; // PSL(2, Z) and integrality is a constructor invariant.
    if (p != 4 && p != 6)
        return std::nullopt;
    // G_4, G_6: (a, b√q; c√q, d) or (a√q, b; c, d√q) with integers a, b, c, d.
    auto rational_int = [](const field_element& x) { return x.is_rational(); };
    auto radical_int = [](const field_element& x) { return x.coefficients()[0] == 0; };
    bool even = rational_int(m.a()) && rational_int(m.d()) && radical_int(m.b()) &&
                radical_int(m.c());
    bool odd = radical_int(m.a()) && radical_int(m.d()) && rational_int(m.b()) &&
               rational_int(m.c());
    return even || odd;
}

} // namespace hecke
