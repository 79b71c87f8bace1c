#include "hecke/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace hecke {

// ---------------------------------------------------------------- polynomial

polynomial::polynomial(field f) : field_(std::move(f)) {}

polynomial::polynomial(field f, std::vector<quad_element> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        if (c.descriptor() != field_)
            throw descriptor_mismatch("polynomial: coefficient over a different field");
    trim();
}

polynomial::polynomial(const quad_element& constant) : field_(constant.descriptor())
{
    if (!constant.is_zero())
        c_.push_back(constant);
}

polynomial polynomial::monomial(const quad_element& c, int n)
{
    if (n < 0)
        throw std::invalid_argument("polynomial::monomial: negative degree");
    polynomial r(c.descriptor());
    if (c.is_zero())
        return r;
    r.c_.assign(static_cast<std::size_t>(n) + 1, quad_element(c.descriptor()));
    r.c_.back() = c;
    return r;
}

polynomial polynomial::linear(const quad_element& a)
{
    quad_element one(field_element(a.descriptor(), 1L));
    return polynomial(a.descriptor(), {-a, one});
}

void polynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

quad_element polynomial::coeff(int i) const
{
    if (i < 0 || i > degree())
        return quad_element(field_);
    return c_[static_cast<std::size_t>(i)];
}

bool polynomial::in_base_field() const
{
    return std::all_of(c_.begin(), c_.end(), [](const quad_element& c) { return c.in_base_field(); });
}

polynomial polynomial::conjugate() const
{
    polynomial r(field_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_)
        r.c_.push_back(c.conjugate());
    return r;
}

polynomial polynomial::derivative() const
{
    polynomial r(field_);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * quad_element(field_element(field_, static_cast<long>(i))));
    r.trim();
    return r;
}

polynomial polynomial::monic() const
{
    if (is_zero())
        return *this;
    quad_element inv = quad_element(field_element(field_, 1L)) / lead();
    polynomial r = *this * inv;
    r.c_.back() = quad_element(field_element(field_, 1L));
    return r;
}

quad_element polynomial::eval(const quad_element& z) const
{
    quad_element acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * z + c_[i];
    return acc;
}

polynomial polynomial::taylor_shift(const quad_element& a) const
{
    std::vector<quad_element> c = c_;
    std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            c[j] += a * c[j + 1];
    return polynomial(field_, std::move(c));
}

polynomial polynomial::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("polynomial::pow: negative exponent");
    polynomial acc(quad_element(field_element(field_, 1L)));
    polynomial base = *this;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return acc;
}

polynomial polynomial::operator-() const
{
    polynomial r(field_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_)
        r.c_.push_back(-c);
    return r;
}

polynomial& polynomial::operator+=(const polynomial& o)
{
    if (o.field_ != field_)
        throw descriptor_mismatch("polynomials over different fields");
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), quad_element(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

polynomial& polynomial::operator-=(const polynomial& o)
{
    if (o.field_ != field_)
        throw descriptor_mismatch("polynomials over different fields");
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), quad_element(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

polynomial operator*(const polynomial& x, const polynomial& y)
{
    if (x.field_ != y.field_)
        throw descriptor_mismatch("polynomials over different fields");
    polynomial r(x.field_);
    if (x.is_zero() || y.is_zero())
        return r;
    r.c_.assign(x.c_.size() + y.c_.size() - 1, quad_element(x.field_));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j)
            if (!y.c_[j].is_zero())
                r.c_[i + j] += x.c_[i] * y.c_[j];
    }
    r.trim();
    return r;
}

polynomial& polynomial::operator*=(const polynomial& o) { return *this = *this * o; }

polynomial& polynomial::operator*=(const quad_element& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

void polynomial::divmod(const polynomial& a, const polynomial& b, polynomial& q, polynomial& r)
{
    if (b.is_zero())
        throw arithmetic_error("polynomial division by zero");
    const field& f = a.field_;
    r = a;
    q = polynomial(f);
    int db = b.degree();
    if (r.degree() < db)
        return;
    quad_element inv = quad_element(field_element(f, 1L)) / b.lead();
    bool monic_b = b.lead() == quad_element(field_element(f, 1L));
    q.c_.assign(static_cast<std::size_t>(r.degree() - db) + 1, quad_element(f));
    for (int i = r.degree(); i >= db; --i) {
        const quad_element& top = r.c_[static_cast<std::size_t>(i)];
        if (top.is_zero())
            continue;
        quad_element coef = monic_b ? top : top * inv;
        for (int j = 0; j < db; ++j)
            if (!b.c_[static_cast<std::size_t>(j)].is_zero())
                r.c_[static_cast<std::size_t>(i - db + j)] -= coef * b.c_[static_cast<std::size_t>(j)];
        r.c_[static_cast<std::size_t>(i)] = quad_element(f);
        q.c_[static_cast<std::size_t>(i - db)] = std::move(coef);
    }
    q.trim();
    r.trim();
}

polynomial polynomial::exact_div(const polynomial& a, const polynomial& b)
{
    polynomial q(a.field_), r(a.field_);
    divmod(a, b, q, r);
    if (!r.is_zero())
        throw arithmetic_error("polynomial::exact_div: nonzero remainder");
    return q;
}

std::string polynomial::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        std::string c = c_[i].to_string();
        if (i == 0) {
            os << "(" << c << ")";
            continue;
        }
        if (c != "1")
            os << "(" << c << ")*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

polynomial gcd(polynomial a, polynomial b)
{
    while (!b.is_zero()) {
        polynomial q(a.descriptor()), r(a.descriptor());
        polynomial::divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::vector<polynomial> squarefree_decomposition(const polynomial& f)
{
    // Yun's algorithm.
    std::vector<polynomial> out;
    if (f.degree() < 1)
        return out;
    polynomial fm = f.monic();
    polynomial d = fm.derivative();
    polynomial a = gcd(fm, d);
    polynomial b = polynomial::exact_div(fm, a);
    polynomial c = polynomial::exact_div(d, a);
    polynomial dd = c - b.derivative();
    while (b.degree() > 0) {
        polynomial g = gcd(b, dd);
        out.push_back(g);
        b = polynomial::exact_div(b, g);
        c = polynomial::exact_div(dd, g);
        dd = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

// --------------------------------------------------------- rational_function

namespace {

quad_element one_of(const field& f) { return quad_element(field_element(f, 1L)); }

} // namespace

rational_function::rational_function(field f) : num_(f), den_(one_of(f)) {}

rational_function::rational_function(polynomial num) : num_(std::move(num)), den_(one_of(num_.descriptor())) {}

rational_function::rational_function(polynomial num, polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw arithmetic_error("rational_function: zero denominator");
    if (num_.descriptor() != den_.descriptor())
        throw descriptor_mismatch("rational_function: numerator and denominator over different fields");
    if (num_.is_zero()) {
        den_ = polynomial(one_of(num_.descriptor()));
        return;
    }
    if (den_.degree() > 0) {
        polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = polynomial::exact_div(num_, g);
            den_ = polynomial::exact_div(den_, g);
        }
    }
    quad_element inv = one_of(num_.descriptor()) / den_.lead();
    num_ *= inv;
    den_ = den_.monic();
}

rational_function::rational_function(polynomial num, polynomial den, coprime_tag)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw arithmetic_error("rational_function: zero denominator");
    if (num_.is_zero()) {
        den_ = polynomial(one_of(num_.descriptor()));
        return;
    }
    quad_element inv = one_of(num_.descriptor()) / den_.lead();
    num_ *= inv;
    den_ = den_.monic();
}

rational_function rational_function::z_power(const field& f, int n)
{
    polynomial zn = polynomial::monomial(one_of(f), std::abs(n));
    if (n >= 0)
        return rational_function(zn);
    return rational_function(polynomial(one_of(f)), zn, coprime_tag{});
}

quad_element rational_function::eval(const quad_element& z) const
{
    quad_element d = den_.eval(z);
    if (d.is_zero())
        throw arithmetic_error("rational_function::eval: pole");
    return num_.eval(z) / d;
}

rational_function rational_function::operator-() const
{
    rational_function r = *this;
    r.num_ = -r.num_;
    return r;
}

rational_function operator+(const rational_function& x, const rational_function& y)
{
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    if (x.den_ == y.den_) {
        polynomial n = x.num_ + y.num_;
        return rational_function(std::move(n), x.den_);
    }
    // gcd(x.den, y.den) = g; any common factor of the new numerator and
    // denominator divides g.
    polynomial g = gcd(x.den_, y.den_);
    polynomial xd = polynomial::exact_div(x.den_, g), yd = polynomial::exact_div(y.den_, g);
    polynomial n = x.num_ * yd + y.num_ * xd;
    if (n.is_zero())
        return rational_function(x.descriptor());
    polynomial h = gcd(n, g);
    if (h.degree() > 0) {
        n = polynomial::exact_div(n, h);
        g = polynomial::exact_div(g, h);
    }
    return rational_function(std::move(n), g * xd * yd, rational_function::coprime_tag{});
}

rational_function operator-(const rational_function& x, const rational_function& y) { return x + (-y); }

rational_function operator*(const rational_function& x, const rational_function& y)
{
    if (x.is_zero() || y.is_zero())
        return rational_function(x.descriptor());
    polynomial g1 = gcd(x.num_, y.den_), g2 = gcd(y.num_, x.den_);
    polynomial n = polynomial::exact_div(x.num_, g1) * polynomial::exact_div(y.num_, g2);
    polynomial d = polynomial::exact_div(x.den_, g2) * polynomial::exact_div(y.den_, g1);
    return rational_function(std::move(n), std::move(d), rational_function::coprime_tag{});
}

rational_function operator/(const rational_function& x, const rational_function& y)
{
    if (y.is_zero())
        throw arithmetic_error("rational_function: division by the zero function");
    return x * rational_function(y.den_, y.num_, rational_function::coprime_tag{});
}

rational_function operator*(const rational_function& x, const quad_element& s)
{
    if (s.is_zero())
        return rational_function(x.descriptor());
    rational_function r = x;
    r.num_ *= s;
    return r;
}

std::string rational_function::to_string(const std::string& var) const
{
    if (den_.degree() == 0)
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// --------------------------------------------------------------------- slash

rational_function slash(const rational_function& f, const group_element& m, int k)
{
    if (k < 1)
        throw std::invalid_argument("slash: weight parameter k must be positive");
    const field& fd = f.descriptor();
    if (m.descriptor() != fd)
        throw descriptor_mismatch("slash: group element over a different field");
    if (f.is_zero())
        return f;
    quad_element a(m.a()), b(m.b()), c(m.c()), d(m.d());
    polynomial az_b(fd, {b, a}), cz_d(fd, {d, c});
    int e = std::max(f.num().degree(), f.den().degree());

    std::vector<polynomial> ap(static_cast<std::size_t>(e) + 1, polynomial(one_of(fd)));
    std::vector<polynomial> cp(static_cast<std::size_t>(e) + 1, polynomial(one_of(fd)));
    for (int i = 1; i <= e; ++i) {
        ap[static_cast<std::size_t>(i)] = ap[static_cast<std::size_t>(i - 1)] * az_b;
        cp[static_cast<std::size_t>(i)] = cp[static_cast<std::size_t>(i - 1)] * cz_d;
    }
    auto homogenize = [&](const polynomial& p) {
        polynomial r(fd);
        for (int i = 0; i <= p.degree(); ++i) {
            const quad_element& ci = p.coefficients()[static_cast<std::size_t>(i)];
            if (!ci.is_zero())
                r += ap[static_cast<std::size_t>(i)] * cp[static_cast<std::size_t>(e - i)] * ci;
        }
        return r;
    };
    polynomial n = homogenize(f.num()), dn = homogenize(f.den());
    // gcd(n, dn) = 1; only factors of (cz + d)^{2k} can cancel against n.
    int extra = 2 * k;
    if (!m.c().is_zero()) {
        quad_element root = -d / c;
        while (extra > 0 && n.eval(root).is_zero()) {
            n = polynomial::exact_div(n, cz_d);
            --extra;
        }
    }
    return rational_function(std::move(n), dn * cz_d.pow(extra), rational_function::coprime_tag{});
}

// ------------------------------------------------------------ principal part

rational_function principal_part::to_function() const
{
    const field& f = point.descriptor();
    if (coefficients.empty())
        return rational_function(f);
    int m = order();
    polynomial lin = polynomial::linear(point);
    polynomial num(f);
    for (int j = 1; j <= m; ++j)
        num += lin.pow(m - j) * coefficients[static_cast<std::size_t>(j - 1)];
    return rational_function(std::move(num), lin.pow(m), rational_function::coprime_tag{});
}

principal_part pp_at(const rational_function& f, const quad_element& alpha)
{
    principal_part pp{alpha, {}};
    if (!f.den().eval(alpha).is_zero())
        return pp;
    polynomial ds = f.den().taylor_shift(alpha);
    polynomial ns = f.num().taylor_shift(alpha);
    int m = 0;
    while (ds.coeff(m).is_zero())
        ++m;
    // Series of ns(h) / (ds(h) / h^m) up to h^{m−1}.
    std::vector<quad_element> s;
    quad_element inv0 = one_of(f.descriptor()) / ds.coeff(m);
    for (int i = 0; i < m; ++i) {
        quad_element acc = ns.coeff(i);
        for (int j = 1; j <= i; ++j)
            acc -= ds.coeff(m + j) * s[static_cast<std::size_t>(i - j)];
        s.push_back(acc * inv0);
    }
    pp.coefficients.resize(static_cast<std::size_t>(m), quad_element(f.descriptor()));
    for (int j = 1; j <= m; ++j)
        pp.coefficients[static_cast<std::size_t>(j - 1)] = s[static_cast<std::size_t>(m - j)];
    return pp;
}

// -------------------------------------------------------------- pole finding

namespace {

using cld = std::complex<long double>;

constexpr std::size_t tuple_cap = 5000000;

// Aberth–Ehrlich iteration on a squarefree complex polynomial (ascending).
std::vector<cld> complex_roots(const std::vector<cld>& a)
{
    int n = static_cast<int>(a.size()) - 1;
    std::vector<cld> z(static_cast<std::size_t>(n));
    if (n < 1)
        return z;
    long double radius = 0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::pow(std::abs(a[static_cast<std::size_t>(i)] / a.back()),
                                           1.0L / (n - i)));
    radius = 2 * radius + 1e-3L;
    for (int i = 0; i < n; ++i)
        z[static_cast<std::size_t>(i)] =
            std::polar(radius * 0.5L, 2 * std::numbers::pi_v<long double> * i / n + 0.4L);

    auto eval = [&](cld x, cld& dp) {
        cld p = a.back();
        dp = 0;
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + a[static_cast<std::size_t>(i)];
        }
        return p;
    };
    for (int it = 0; it < 2000; ++it) {
        long double worst = 0;
        for (int i = 0; i < n; ++i) {
            cld dp;
            cld p = eval(z[static_cast<std::size_t>(i)], dp);
            if (p == cld(0))
                continue;
            cld ratio = p / dp;
            cld sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    sum += 1.0L / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            cld step = ratio / (1.0L - ratio * sum);
            z[static_cast<std::size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step) / (1 + std::abs(z[static_cast<std::size_t>(i)])));
        }
        if (worst < 1e-17L)
            break;
    }
    return z;
}

// Solve V x = r with V[j][i] = e_j^i (Gaussian elimination with pivoting).
std::vector<long double> solve_vandermonde(const std::vector<long double>& e, std::vector<long double> r)
{
    std::size_t n = e.size();
    std::vector<std::vector<long double>> v(n, std::vector<long double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        long double pw = 1;
        for (std::size_t i = 0; i < n; ++i, pw *= e[j])
            v[j][i] = pw;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::fabs(v[row][col]) > std::fabs(v[piv][col]))
                piv = row;
        std::swap(v[col], v[piv]);
        std::swap(r[col], r[piv]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col)
                continue;
            long double fac = v[row][col] / v[col][col];
            for (std::size_t k = col; k < n; ++k)
                v[row][k] -= fac * v[col][k];
            r[row] -= fac * r[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        r[i] /= v[i][i];
    return r;
}

// Element of K with the given embedded values, if its coordinates look rational.
std::optional<field_element> recognize(const field& f, const std::vector<long double>& values)
{
    auto x = solve_vandermonde(f->embeddings(), values);
    std::vector<mpq_class> c;
    for (long double xi : x) {
        auto q = recognize_rational(xi, 1000000, 1e-9L * (1 + std::fabs(xi)));
        if (!q)
            return std::nullopt;
        c.push_back(*q);
    }
    return field_element(f, std::move(c));
}

std::vector<cld> embedded_roots(const polynomial& g, std::size_t j)
{
    std::vector<cld> a;
    for (const auto& c : g.coefficients())
        a.emplace_back(c.a().embed(j), 0.0L);
    return complex_roots(a);
}

// Odometer over per-embedding candidate lists.
template <class Cand, class Fn>
void for_each_tuple(const std::vector<std::vector<Cand>>& lists, Fn&& fn)
{
    std::size_t total = 1;
    for (const auto& l : lists) {
        if (l.empty())
            return;
        total *= l.size();
        if (total > tuple_cap)
            return;
    }
    std::vector<std::size_t> idx(lists.size(), 0);
    std::vector<const Cand*> pick(lists.size());
    for (std::size_t t = 0; t < total; ++t) {
        for (std::size_t j = 0; j < lists.size(); ++j)
            pick[j] = &lists[j][idx[j]];
        fn(pick);
        for (std::size_t j = 0; j < lists.size(); ++j) {
            if (++idx[j] < lists[j].size())
                break;
            idx[j] = 0;
        }
    }
}

struct k_factors {
    std::vector<field_element> linear_roots;
    std::vector<polynomial> quadratics; // monic, irreducible over K
    polynomial rest;
};

// Linear and quadratic factors over K of a squarefree g ∈ K[z].
k_factors split_over_k(polynomial g)
{
    const field& f = g.descriptor();
    std::size_t n = static_cast<std::size_t>(f->degree());
    k_factors out{{}, {}, polynomial(f)};
    g = g.monic();

    if (g.degree() >= 1) {
        std::vector<std::vector<long double>> lists(n);
        for (std::size_t j = 0; j < n; ++j)
            for (const cld& r : embedded_roots(g, j))
                if (std::fabs(r.imag()) <= 1e-9L * (1 + std::abs(r)))
                    lists[j].push_back(r.real());
        std::vector<field_element> found;
        for_each_tuple(lists, [&](const std::vector<const long double*>& pick) {
            std::vector<long double> v;
            for (auto* x : pick)
                v.push_back(*x);
            auto r = recognize(f, v);
            if (!r || !g.eval(quad_element(*r)).is_zero())
                return;
            for (const auto& s : found)
                if (s == *r)
                    return;
            found.push_back(*r);
        });
        for (const auto& r : found)
            g = polynomial::exact_div(g, polynomial::linear(quad_element(r)));
        out.linear_roots = std::move(found);
    }

    if (g.degree() >= 2) {
        struct pair_sp {
            long double s, p;
        };
        std::vector<std::vector<pair_sp>> lists(n);
        for (std::size_t j = 0; j < n; ++j) {
            auto roots = embedded_roots(g, j);
            for (std::size_t a = 0; a < roots.size(); ++a)
                for (std::size_t b = a + 1; b < roots.size(); ++b) {
                    cld s = roots[a] + roots[b], p = roots[a] * roots[b];
                    if (std::fabs(s.imag()) <= 1e-9L * (1 + std::abs(s)) &&
                        std::fabs(p.imag()) <= 1e-9L * (1 + std::abs(p)))
                        lists[j].push_back({s.real(), p.real()});
                }
        }
        std::vector<polynomial> found;
        for_each_tuple(lists, [&](const std::vector<const pair_sp*>& pick) {
            std::vector<long double> sv, pv;
            for (auto* x : pick) {
                sv.push_back(x->s);
                pv.push_back(x->p);
            }
            auto s = recognize(f, sv);
            if (!s)
                return;
            auto p = recognize(f, pv);
            if (!p)
                return;
            polynomial quadratic(f, {quad_element(*p), quad_element(-*s), one_of(f)});
            for (const auto& h : found)
                if (h == quadratic)
                    return;
            polynomial q(f), r(f);
            polynomial::divmod(g, quadratic, q, r);
            if (r.is_zero())
                found.push_back(quadratic);
        });
        for (const auto& h : found)
            g = polynomial::exact_div(g, h);
        out.quadratics = std::move(found);
    }
    out.rest = g;
    return out;
}

int multiplicity(polynomial den, const quad_element& root)
{
    polynomial lin = polynomial::linear(root);
    int m = 0;
    while (den.degree() >= 1 && den.eval(root).is_zero()) {
        den = polynomial::exact_div(den, lin);
        ++m;
    }
    return m;
}

} // namespace

std::vector<pole_record> poles_extended(const rational_function& f)
{
    const field& fd = f.descriptor();
    std::vector<pole_record> points, factors;
    const polynomial& den = f.den();

    if (den.degree() >= 1) {
        polynomial norm = den.in_base_field() ? den : den * den.conjugate();
        auto parts = squarefree_decomposition(norm);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].degree() < 1)
                continue;
            int mult_in_norm = static_cast<int>(i) + 1;
            k_factors kf = split_over_k(parts[i]);
            auto add_point = [&](const quad_element& x) {
                int m = 0;
                try {
                    m = multiplicity(den, x);
                } catch (const radicand_mismatch&) {
                    return false;
                }
                if (m > 0)
                    points.push_back({extended_point(x), std::nullopt, m});
                return true;
            };
            for (const auto& r : kf.linear_roots)
                add_point(quad_element(r));
            for (const auto& h : kf.quadratics) {
                // z² − s z + p, roots (s ± √(s² − 4p))/2.
                field_element s = -h.coeff(1).a(), p = h.coeff(0).a();
                field_element disc = s * s - p * mpq_class(4);
                bool located = false;
                if (disc.sign() > 0) {
                    quad_element r1(s * mpq_class(1, 2), field_element(fd, mpq_class(1, 2)), disc);
                    located = add_point(r1) && add_point(r1.conjugate());
                }
                if (!located)
                    factors.push_back({std::nullopt, h, mult_in_norm});
            }
            if (kf.rest.degree() >= 1)
                factors.push_back({std::nullopt, kf.rest, mult_in_norm});
        }
    }
    std::sort(points.begin(), points.end(), [](const pole_record& x, const pole_record& y) {
        return compare(x.point->value(), y.point->value()) < 0;
    });
    int at_infinity = f.num().degree() - den.degree();
    if (!f.is_zero() && at_infinity > 0)
        points.push_back({extended_point::infinity(), std::nullopt, at_infinity});
    points.insert(points.end(), factors.begin(), factors.end());
    return points;
}

} // namespace hecke
