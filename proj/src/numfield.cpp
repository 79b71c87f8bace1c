#include "hecke/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace hecke {

namespace {

using ipoly = std::vector<mpz_class>;
using qpoly = std::vector<mpq_class>;

template <class P>
void trim(P& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

// f / g for monic g, exact.
ipoly div_exact_monic(ipoly f, const ipoly& g)
{
    std::size_t dg = g.size() - 1;
    if (f.size() < g.size())
        throw std::logic_error("div_exact_monic: degree too small");
    ipoly q(f.size() - dg, 0);
    for (std::size_t i = f.size(); i-- > dg;) {
        mpz_class c = f[i];
        q[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j)
            f[i - dg + j] -= c * g[j];
    }
    trim(f);
    if (!f.empty())
        throw std::logic_error("div_exact_monic: nonzero remainder");
    return q;
}

ipoly cyclotomic(int n, std::map<int, ipoly>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    ipoly f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            f = div_exact_monic(f, cyclotomic(d, memo));
    memo[n] = f;
    return f;
}

// V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}; V_k(z + 1/z) = z^k + z^-k.
std::vector<ipoly> lucas_polys(int upto)
{
    std::vector<ipoly> v;
    v.push_back({2});
    v.push_back({0, 1});
    for (int k = 1; k < upto; ++k) {
        ipoly next(k + 2, 0);
        for (std::size_t i = 0; i < v[k].size(); ++i)
            next[i + 1] += v[k][i];
        for (std::size_t i = 0; i < v[k - 1].size(); ++i)
            next[i] -= v[k - 1][i];
        trim(next);
        v.push_back(next);
    }
    return v;
}

// Minimal polynomial of 2cos(2π/n) from the palindromic Φ_n.
ipoly real_cyclotomic(int n)
{
    std::map<int, ipoly> memo;
    ipoly phi = cyclotomic(n, memo);
    int half = static_cast<int>(phi.size() - 1) / 2;
    auto v = lucas_polys(std::max(half, 1));
    ipoly psi(half + 1, 0);
    psi[0] += phi[half];
    for (int k = 1; k <= half; ++k)
        for (std::size_t i = 0; i < v[k].size(); ++i)
            psi[i] += phi[half + k] * v[k][i];
    trim(psi);
    return psi;
}

template <class T>
T eval(const ipoly& f, const T& x)
{
    T acc = 0;
    for (std::size_t i = f.size(); i-- > 0;)
        acc = acc * x + T(f[i]);
    return acc;
}

int qsign(const mpq_class& x) { return sgn(x); }

std::pair<qpoly, qpoly> divmod(qpoly f, const qpoly& g)
{
    trim(f);
    if (f.size() < g.size())
        return {{}, f};
    qpoly q(f.size() - g.size() + 1, 0);
    std::size_t dg = g.size() - 1;
    for (std::size_t i = f.size(); i-- > dg;) {
        if (f[i] == 0)
            continue;
        mpq_class c = f[i] / g.back();
        q[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j)
            f[i - dg + j] -= c * g[j];
    }
    f.resize(dg);
    trim(f);
    return {q, f};
}

qpoly sub_mul(const qpoly& a, const qpoly& q, const qpoly& b)
{
    // a - q*b
    qpoly r = a;
    if (!q.empty() && !b.empty()) {
        r.resize(std::max(r.size(), q.size() + b.size() - 1), 0);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] -= q[i] * b[j];
    }
    trim(r);
    return r;
}

// Integer square root bounds of a nonnegative rational at 2^-bits resolution.
rational_interval sqrt_interval(const rational_interval& x, unsigned bits)
{
    auto root = [&](const mpq_class& v, bool up) {
        if (v <= 0)
            return mpq_class(0);
        mpz_class scale = mpz_class(1) << (2 * bits);
        mpq_class scaled = v * mpq_class(scale);
        mpz_class n;
        if (up)
            mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        else
            mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        if (up && s * s < n)
            s += 1;
        mpq_class r(s, mpz_class(1) << bits);
        r.canonicalize();
        return r;
    };
    return {root(x.lo, false), root(x.hi, true)};
}

rational_interval mul(const rational_interval& x, const rational_interval& y)
{
    mpq_class c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

mpz_class square_part(mpz_class g)
{
    mpz_class s = 1;
    for (unsigned long d = 2; d < 1000000 && mpz_class(d) * d <= g; ++d) {
        while (g % (d * d) == 0) {
            s *= d;
            g /= d * d;
        }
        if (g % d == 0)
            g /= d;
    }
    return s;
}

} // namespace

std::vector<mpz_class> chebyshev_relation(int p)
{
    auto v = lucas_polys(p);
    ipoly f = v[p];
    f[0] += 2;
    return f;
}

field_descriptor::field_descriptor(int p) : p_(p)
{
    minpoly_ = real_cyclotomic(2 * p);
    for (int j = 1; j < p; j += 2)
        if (std::gcd(j, 2 * p) == 1)
            embeddings_.push_back(2.0L * std::cos(static_cast<long double>(j) *
                                                  std::numbers::pi_v<long double> / p));
    if (static_cast<int>(embeddings_.size()) != degree())
        throw std::logic_error("field_descriptor: embedding count mismatch");

    if (degree() == 1) {
        lo_ = hi_ = mpq_class(-minpoly_[0]);
        bits_ = ~0u;
        return;
    }
    double lambda = 2.0 * std::cos(std::numbers::pi / p);
    mpq_class eps(mpz_class(1), mpz_class("1000000000000"));
    lo_ = mpq_class(lambda) - eps;
    hi_ = mpq_class(lambda) + eps;
    sign_at_lo_ = qsign(eval(minpoly_, lo_));
    int sign_at_hi = qsign(eval(minpoly_, hi_));
    if (sign_at_lo_ == 0 || sign_at_lo_ * sign_at_hi >= 0)
        throw std::logic_error("field_descriptor: isolating bracket failed");
    bits_ = 39;
}

rational_interval field_descriptor::lambda_enclosure(unsigned bits) const
{
    std::lock_guard lock(mutex_);
    if (bits_ != ~0u) {
        mpq_class width(1, mpz_class(1) << bits);
        while (hi_ - lo_ > width) {
            mpq_class mid = (lo_ + hi_) / 2;
            int s = qsign(eval(minpoly_, mid));
            if (s == sign_at_lo_)
                lo_ = mid;
            else
                hi_ = mid;
        }
    }
    return {lo_, hi_};
}

field make_field(int p)
{
    if (p < 3)
        throw std::invalid_argument("make_field: p must be at least 3");
    if (p > 100000)
        throw std::invalid_argument("make_field: p too large");
    static std::mutex registry_mutex;
    static std::map<int, field> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[p];
    if (!slot)
        slot = std::make_shared<const field_descriptor>(p);
    return slot;
}

// ---------------------------------------------------------------- field_element

field_element::field_element(field f) : field_(std::move(f)), coeffs_(field_->degree(), 0) {}

field_element::field_element(field f, long value) : field_element(std::move(f))
{
    coeffs_[0] = value;
}

field_element::field_element(field f, const mpq_class& value) : field_element(std::move(f))
{
    coeffs_[0] = value;
}

field_element::field_element(field f, std::vector<mpq_class> coefficients)
    : field_(std::move(f)), coeffs_(std::move(coefficients))
{
    const auto& m = field_->minimal_polynomial();
    std::size_t n = field_->degree();
    for (std::size_t i = coeffs_.size(); i-- > n;) {
        if (coeffs_[i] == 0)
            continue;
        mpq_class c = coeffs_[i];
        for (std::size_t j = 0; j <= n; ++j)
            coeffs_[i - n + j] -= c * m[j];
    }
    coeffs_.resize(n, 0);
}

field_element field_element::lambda(field f)
{
    if (f->degree() == 1)
        return field_element(f, mpq_class(-f->minimal_polynomial()[0]));
    std::vector<mpq_class> c(f->degree(), 0);
    c[1] = 1;
    return field_element(std::move(f), std::move(c));
}

bool field_element::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

bool field_element::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

bool field_element::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& c) { return c.get_den() == 1; });
}

void field_element::check_same(const field_element& o) const
{
    if (field_ != o.field_ && field_->p() != o.field_->p())
        throw descriptor_mismatch("field elements over different Hecke fields");
}

field_element field_element::operator-() const
{
    field_element r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

field_element& field_element::operator+=(const field_element& o)
{
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

field_element& field_element::operator-=(const field_element& o)
{
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

field_element& field_element::operator*=(const field_element& o)
{
    check_same(o);
    std::size_t n = coeffs_.size();
    if (n == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    std::vector<mpq_class> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (o.coeffs_[j] != 0)
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    *this = field_element(field_, std::move(prod));
    return *this;
}

field_element& field_element::operator*=(const mpq_class& r)
{
    for (auto& c : coeffs_)
        c *= r;
    return *this;
}

field_element field_element::inverse() const
{
    if (is_zero())
        throw arithmetic_error("inverse of zero field element");
    if (coeffs_.size() == 1)
        return field_element(field_, mpq_class(1 / coeffs_[0]));
    const auto& m = field_->minimal_polynomial();
    qpoly r0(m.begin(), m.end()), r1 = coeffs_;
    trim(r1);
    qpoly s0, s1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        qpoly s2 = sub_mul(s0, q, s1);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the minimal polynomial is irreducible.
    mpq_class c = r0[0];
    for (auto& x : s0)
        x /= c;
    return field_element(field_, std::move(s0));
}

field_element& field_element::operator/=(const field_element& o)
{
    check_same(o);
    if (o.is_zero())
        throw arithmetic_error("division by zero in K");
    if (o.is_rational()) {
        mpq_class inv = 1 / o.coeffs_[0];
        return *this *= inv;
    }
    return *this *= o.inverse();
}

bool operator==(const field_element& x, const field_element& y)
{
    return x.p() == y.p() && x.coeffs_ == y.coeffs_;
}

rational_interval field_element::enclosure(unsigned bits) const
{
    rational_interval lam = field_->lambda_enclosure(bits);
    rational_interval acc{coeffs_[0], coeffs_[0]};
    mpq_class plo = 1, phi = 1;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        plo *= lam.lo;
        phi *= lam.hi;
        const mpq_class& c = coeffs_[i];
        if (c > 0) {
            acc.lo += c * plo;
            acc.hi += c * phi;
        } else if (c < 0) {
            acc.lo += c * phi;
            acc.hi += c * plo;
        }
    }
    return acc;
}

int field_element::sign() const
{
    if (coeffs_.size() == 1 || is_rational())
        return qsign(coeffs_[0]);
    if (is_zero())
        return 0;
    for (unsigned bits = 64;; bits *= 2) {
        int s = enclosure(bits).sign();
        if (s != 0)
            return s;
    }
}

int compare(const field_element& x, const field_element& y) { return (x - y).sign(); }

long double field_element::embed(std::size_t j) const
{
    long double lam = field_->embeddings().at(j);
    long double acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * lam + static_cast<long double>(coeffs_[i].get_d());
    return acc;
}

double field_element::to_double() const
{
    rational_interval e = enclosure(80);
    return mpq_class((e.lo + e.hi) / 2).get_d();
}

std::optional<field_element> field_element::sqrt() const
{
    if (is_zero())
        return *this;
    if (sign() < 0)
        return std::nullopt;
    if (is_rational()) {
        const mpq_class& c = coeffs_[0];
        if (mpz_perfect_square_p(c.get_num_mpz_t()) != 0 && mpz_perfect_square_p(c.get_den_mpz_t()) != 0) {
            mpz_class n, d;
            mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
            mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
            return field_element(field_, mpq_class(n, d));
        }
        // A rational can still be a square in K, e.g. 2 = λ₄².
        if (coeffs_.size() == 1)
            return std::nullopt;
    }
    std::size_t n = coeffs_.size();
    if (n > 20)
        throw std::invalid_argument("field_element::sqrt: field degree too large");

    // sqrt(x) = sqrt(E) / L with E = x L² integral; Z[λ] is integrally
    // closed, so sqrt(E) has integer coordinates whenever it exists in K.
    mpz_class lden = 1;
    for (const auto& c : coeffs_)
        mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), c.get_den_mpz_t());
    field_element e = *this * mpq_class(lden * lden);

    const auto& lams = field_->embeddings();
    std::vector<long double> roots(n);
    for (std::size_t j = 0; j < n; ++j) {
        long double v = e.embed(j);
        if (v < -1e-9L * (1 + std::fabs(v)))
            return std::nullopt;
        roots[j] = std::sqrt(std::max(v, 0.0L));
    }
    // Inverse of the Vandermonde matrix rows (lam_j^i).
    std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        long double pw = 1;
        for (std::size_t i = 0; i < n; ++i, pw *= lams[j])
            a[j][i] = pw;
        a[j][n + j] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col]))
                piv = r;
        std::swap(a[col], a[piv]);
        long double d = a[col][col];
        for (auto& v : a[col])
            v /= d;
        for (std::size_t r = 0; r < n; ++r)
            if (r != col) {
                long double f = a[r][col];
                if (f != 0)
                    for (std::size_t k = 0; k < 2 * n; ++k)
                        a[r][k] -= f * a[col][k];
            }
    }
    std::size_t patterns = std::size_t(1) << (n - 1);
    for (std::size_t mask = 0; mask < patterns; ++mask) {
        std::vector<mpq_class> cand(n);
        bool plausible = true;
        for (std::size_t i = 0; i < n && plausible; ++i) {
            long double c = 0;
            for (std::size_t j = 0; j < n; ++j) {
                long double v = (j > 0 && ((mask >> (j - 1)) & 1)) ? -roots[j] : roots[j];
                c += a[i][n + j] * v;
            }
            long double r = std::round(c);
            if (std::fabs(c - r) > 1e-3L + 1e-12L * std::fabs(c))
                plausible = false;
            else
                cand[i] = mpq_class(static_cast<double>(r));
        }
        if (!plausible)
            continue;
        field_element y(field_, std::move(cand));
        if (y * y == e) {
            if (y.sign() < 0)
                y = -y;
            return y * mpq_class(1, lden);
        }
    }
    return std::nullopt;
}

std::string field_element::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        mpq_class c = coeffs_[i];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = ::abs(c);
        if (i == 0) {
            os << c;
        } else {
            if (c != 1)
                os << c << "*";
            os << "L";
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

// ---------------------------------------------------------------- quad_element

quad_element::quad_element(field f) : a_(f), b_(f) {}

quad_element::quad_element(field_element a) : a_(a), b_(a.descriptor()) {}

quad_element::quad_element(field_element a, field_element b, const field_element& radicand)
    : a_(std::move(a)), b_(std::move(b))
{
    if (b_.is_zero())
        return;
    if (radicand.sign() <= 0)
        throw arithmetic_error("radicand must be positive");
    mpz_class lden = 1;
    for (const auto& c : radicand.coefficients())
        mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), c.get_den_mpz_t());
    field_element e = radicand * mpq_class(lden * lden);
    mpz_class g = 0;
    for (const auto& c : e.coefficients())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_class s = square_part(g);
    e *= mpq_class(1, s * s);
    mpq_class scale(s, lden);
    scale.canonicalize();
    b_ *= scale;
    if (auto root = e.sqrt()) {
        a_ += b_ * *root;
        b_ = field_element(a_.descriptor());
        return;
    }
    radicand_ = std::move(e);
}

quad_element quad_element::sqrt_of(const field_element& d)
{
    return quad_element(field_element(d.descriptor()), field_element(d.descriptor(), 1L), d);
}

void quad_element::drop_radicand_if_rational()
{
    if (b_.is_zero())
        radicand_.reset();
}

std::optional<field_element> quad_element::common_radicand(const quad_element& x,
                                                           const quad_element& y)
{
    if (!x.radicand_)
        return y.radicand_;
    if (!y.radicand_ || *x.radicand_ == *y.radicand_)
        return x.radicand_;
    throw radicand_mismatch("quadratic elements over different radicands: " +
                            x.radicand_->to_string() + " vs " + y.radicand_->to_string());
}

quad_element quad_element::operator-() const
{
    quad_element r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

quad_element quad_element::conjugate() const
{
    quad_element r = *this;
    r.b_ = -r.b_;
    return r;
}

field_element quad_element::norm() const
{
    if (!radicand_)
        return a_ * a_;
    return a_ * a_ - b_ * b_ * *radicand_;
}

quad_element& quad_element::operator+=(const quad_element& o)
{
    radicand_ = common_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    drop_radicand_if_rational();
    return *this;
}

quad_element& quad_element::operator-=(const quad_element& o)
{
    radicand_ = common_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    drop_radicand_if_rational();
    return *this;
}

quad_element& quad_element::operator*=(const quad_element& o)
{
    if (o.in_base_field()) {
        if (o.a_.is_rational()) {
            const mpq_class& r = o.a_.coefficients()[0];
            a_ *= r;
            b_ *= r;
        } else {
            a_ *= o.a_;
            if (radicand_)
                b_ *= o.a_;
        }
        drop_radicand_if_rational();
        return *this;
    }
    if (in_base_field()) {
        field_element a = a_;
        a_ = a * o.a_;
        b_ = a * o.b_;
        radicand_ = o.radicand_;
        drop_radicand_if_rational();
        return *this;
    }
    auto rad = common_radicand(*this, o);
    field_element a = a_ * o.a_ + b_ * o.b_ * *rad;
    field_element b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    radicand_ = std::move(rad);
    drop_radicand_if_rational();
    return *this;
}

quad_element& quad_element::operator/=(const quad_element& o)
{
    if (o.is_zero())
        throw arithmetic_error("division by zero in K(sqrt D)");
    if (o.in_base_field()) {
        if (o.a_.is_rational()) {
            mpq_class inv = 1 / o.a_.coefficients()[0];
            a_ *= inv;
            b_ *= inv;
        } else {
            field_element inv = o.a_.inverse();
            a_ *= inv;
            if (radicand_)
                b_ *= inv;
        }
        drop_radicand_if_rational();
        return *this;
    }
    common_radicand(*this, o);
    field_element inv = o.norm().inverse();
    *this *= o.conjugate();
    a_ *= inv;
    b_ *= inv;
    drop_radicand_if_rational();
    return *this;
}

bool operator==(const quad_element& x, const quad_element& y)
{
    return x.a_ == y.a_ && x.b_ == y.b_ && x.radicand_ == y.radicand_;
}

int quad_element::sign() const
{
    int sa = a_.sign();
    if (!radicand_)
        return sa;
    int sb = b_.sign();
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    int t = (a_ * a_ - b_ * b_ * *radicand_).sign();
    return t > 0 ? sa : (t < 0 ? sb : 0);
}

rational_interval quad_element::enclosure(unsigned bits) const
{
    rational_interval a = a_.enclosure(bits);
    if (!radicand_)
        return a;
    rational_interval b = b_.enclosure(bits);
    rational_interval r = sqrt_interval(radicand_->enclosure(bits), bits);
    rational_interval br = mul(b, r);
    return {a.lo + br.lo, a.hi + br.hi};
}

double quad_element::to_double() const
{
    rational_interval e = enclosure(80);
    return mpq_class((e.lo + e.hi) / 2).get_d();
}

std::string quad_element::to_string() const
{
    if (!radicand_)
        return a_.to_string();
    std::string b = b_.to_string();
    bool compound_b = b.find_first_of("+-", 1) != std::string::npos;
    std::string out;
    if (!a_.is_zero())
        out = a_.to_string() + " + ";
    out += (compound_b ? "(" + b + ")" : b) + "*sqrt(" + radicand_->to_string() + ")";
    return out;
}

int compare(const quad_element& x, const quad_element& y)
{
    if (!x.radicand() || !y.radicand() || *x.radicand() == *y.radicand())
        return (x - y).sign();
    // Same number written over radicands differing by a square of K.
    if (auto t = (*x.radicand() / *y.radicand()).sqrt()) {
        quad_element xx(x.a(), x.b() * *t, *y.radicand());
        return (xx - y).sign();
    }
    for (unsigned bits = 64;; bits *= 2) {
        rational_interval ex = x.enclosure(bits), ey = y.enclosure(bits);
        if (ex.hi < ey.lo)
            return -1;
        if (ey.hi < ex.lo)
            return 1;
    }
}

bool coordinate_less::operator()(const field_element& x, const field_element& y) const
{
    if (x.p() != y.p())
        return x.p() < y.p();
    const auto& cx = x.coefficients();
    const auto& cy = y.coefficients();
    for (std::size_t i = 0; i < cx.size(); ++i) {
        int c = cmp(cx[i], cy[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

bool coordinate_less::operator()(const quad_element& x, const quad_element& y) const
{
    if ((*this)(x.a(), y.a()))
        return true;
    if ((*this)(y.a(), x.a()))
        return false;
    if ((*this)(x.b(), y.b()))
        return true;
    if ((*this)(y.b(), x.b()))
        return false;
    if (x.radicand().has_value() != y.radicand().has_value())
        return !x.radicand().has_value();
    if (!x.radicand())
        return false;
    return (*this)(*x.radicand(), *y.radicand());
}

std::optional<mpq_class> recognize_rational(long double x, long max_den, long double tol)
{
    // Convergents of the continued fraction of x.
    long double r = x;
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        long double fl = std::floor(r);
        mpz_class a(static_cast<double>(fl));
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den)
            break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        mpq_class cand(h1, k1);
        cand.canonicalize();
        if (std::fabs(static_cast<long double>(cand.get_d()) - x) <= tol * std::max(1.0L, std::fabs(x)))
            return cand;
        long double frac = r - fl;
        if (frac < 1e-30L)
            break;
        r = 1 / frac;
    }
    return std::nullopt;
}

} // namespace hecke
