#include "hecke/io.hpp"

#include <cctype>
#include <sstream>

namespace hecke {

// ---------------------------------------------------------------------- JSON

namespace {

mpq_class rational_from_json(const json& j)
{
    mpq_class q;
    if (j.is_number_integer()) {
        q = mpq_class(std::to_string(j.get<long long>()));
    } else if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (q.set_str(s, 10) != 0)
            throw parse_error("invalid rational '" + s + "'");
        if (q.get_den() == 0)
            throw parse_error("zero denominator in '" + s + "'");
        q.canonicalize();
    } else {
        throw parse_error("rational must be a string or an integer");
    }
    return q;
}

void check_p(const json& j, const field& f)
{
    if (j.contains("p") && j.at("p").get<int>() != f->p())
        throw parse_error("element over G_" + std::to_string(j.at("p").get<int>()) + " where G_" +
                          std::to_string(f->p()) + " was expected");
}

json quads_to_json(const std::vector<quad_element>& xs)
{
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(to_json(x));
    return a;
}

std::vector<quad_element> quads_from_json(const json& j, const field& f)
{
    std::vector<quad_element> out;
    for (const auto& x : j)
        out.push_back(quad_from_json(x, f));
    return out;
}

json move_to_json(const cf_move& m)
{
    return {{"digit", m.digit}, {"word", m.word()}, {"matrix", to_json(m.matrix)}};
}

} // namespace

json to_json(const field_element& x)
{
    json c = json::array();
    for (const auto& q : x.coefficients())
        c.push_back(q.get_str());
    return {{"p", x.p()}, {"coeffs", c}};
}

json to_json(const quad_element& x)
{
    return {{"a", to_json(x.a())},
            {"b", to_json(x.b())},
            {"D", x.radicand() ? to_json(*x.radicand()) : json(nullptr)}};
}

json to_json(const group_element& m)
{
    return {{"p", m.p()}, {"mat", {to_json(m.a()), to_json(m.b()), to_json(m.c()), to_json(m.d())}}};
}

json to_json(const quadratic_form& q)
{
    return {{"A", to_json(q.A())}, {"B", to_json(q.B())}, {"C", to_json(q.C())}};
}

json to_json(const form_cycle& c)
{
    json forms = json::array(), roots = json::array();
    for (const auto& q : c.forms) {
        forms.push_back(to_json(q));
        roots.push_back(to_json(q.root()));
    }
    return {{"p", c.p}, {"D", to_json(c.discriminant)}, {"label", c.label}, {"forms", forms}, {"roots", roots}};
}

json to_json(const polynomial& p) { return quads_to_json(p.coefficients()); }

json to_json(const rational_function& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const cf_expansion& e)
{
    json pre = json::array(), per = json::array();
    for (const auto& m : e.preperiod)
        pre.push_back(move_to_json(m));
    for (const auto& m : e.period)
        per.push_back(move_to_json(m));
    return {{"point", to_json(e.point)}, {"preperiod", pre}, {"period", per}, {"orbit", quads_to_json(e.orbit)}};
}

json to_json(const pole_record& r)
{
    json j;
    if (r.point)
        j["point"] = r.point->is_infinity() ? json("oo") : to_json(r.point->value());
    else
        j["factor"] = to_json(*r.factor);
    j["order"] = r.order;
    return j;
}

json to_json(const rpf_expression& q)
{
    json terms = json::array();
    for (const auto& t : q.terms) {
        json j = {{"type", to_string(t.kind)}};
        switch (t.kind) {
        case term_kind::class_pp:
        case term_kind::class_quadratic:
            j["class"] = to_json(*t.cycle);
            j["coefficient"] = to_json(t.coefficient);
            break;
        case term_kind::pole_at_zero:
            j["a0"] = to_json(t.coefficient);
            if (t.b1)
                j["b1"] = to_json(*t.b1);
            break;
        case term_kind::tail:
            j["coeffs"] = quads_to_json(t.tail);
            break;
        }
        terms.push_back(std::move(j));
    }
    return {{"p", q.p}, {"k", q.k}, {"terms", terms}, {"realized", to_json(q.realized)}};
}

json to_json(const pole_analysis& a)
{
    json poles = json::array(), isps = json::array(), unclassified = json::array();
    for (const auto& r : a.poles)
        poles.push_back(to_json(r));
    for (const auto& s : a.isps)
        isps.push_back({{"class", s.label},
                        {"symmetric", s.symmetric},
                        {"complete", s.complete},
                        {"poles", quads_to_json(s.poles)}});
    for (const auto& r : a.unclassified)
        unclassified.push_back(to_json(r));
    return {{"poles", poles},
            {"isp_report", isps},
            {"unclassified", unclassified},
            {"full_pole_set_symmetric", a.full_pole_set_symmetric}};
}

json to_json(const rpf_verdict& v)
{
    json j = {{"relation1_ok", v.relation1_ok},
              {"relation2_ok", v.relation2_ok},
              {"residual1", to_json(v.residual1)},
              {"residual2", to_json(v.residual2)}};
    j.update(to_json(v.analysis));
    return j;
}

field_element field_element_from_json(const json& j, const field& f)
{
    if (j.is_number_integer() || j.is_string())
        return field_element(f, rational_from_json(j));
    check_p(j, f);
    std::vector<mpq_class> c;
    for (const auto& x : j.at("coeffs"))
        c.push_back(rational_from_json(x));
    if (static_cast<int>(c.size()) > f->degree())
        throw parse_error("too many coefficients for a field of degree " + std::to_string(f->degree()));
    return field_element(f, std::move(c));
}

quad_element quad_from_json(const json& j, const field& f)
{
    field_element a = field_element_from_json(j.at("a"), f);
    if (!j.contains("b") || j.at("b").is_null())
        return quad_element(a);
    field_element b = field_element_from_json(j.at("b"), f);
    if (b.is_zero())
        return quad_element(a);
    if (!j.contains("D") || j.at("D").is_null())
        throw parse_error("quadratic element with a radical part needs D");
    return quad_element(a, b, field_element_from_json(j.at("D"), f));
}

group_element group_from_json(const json& j, const field& f)
{
    check_p(j, f);
    const json& m = j.at("mat");
    if (!m.is_array() || m.size() != 4)
        throw parse_error("group element needs four entries");
    return group_element(field_element_from_json(m[0], f), field_element_from_json(m[1], f),
                         field_element_from_json(m[2], f), field_element_from_json(m[3], f));
}

quadratic_form form_from_json(const json& j, const field& f)
{
    return quadratic_form(field_element_from_json(j.at("A"), f), field_element_from_json(j.at("B"), f),
                          field_element_from_json(j.at("C"), f));
}

form_cycle cycle_from_json(const json& j, const field& f)
{
    check_p(j, f);
    const json& forms = j.at("forms");
    if (!forms.is_array() || forms.empty())
        throw parse_error("class needs at least one simple form");
    form_cycle c = class_cycle(form_from_json(forms[0], f));
    std::vector<quadratic_form> given;
    for (const auto& x : forms)
        given.push_back(form_from_json(x, f));
    std::vector<quadratic_form> sorted_given = given, sorted_walk = c.forms;
    auto lt = [](const quadratic_form& x, const quadratic_form& y) { return form_less(x, y); };
    std::sort(sorted_given.begin(), sorted_given.end(), lt);
    std::sort(sorted_walk.begin(), sorted_walk.end(), lt);
    if (sorted_given != sorted_walk)
        throw parse_error("listed forms are not the cycle of " + given[0].to_string());
    return c;
}

polynomial polynomial_from_json(const json& j, const field& f) { return polynomial(f, quads_from_json(j, f)); }

rational_function rational_function_from_json(const json& j, const field& f)
{
    polynomial num = polynomial_from_json(j.at("num"), f);
    polynomial den = j.contains("den") ? polynomial_from_json(j.at("den"), f)
                                       : polynomial(quad_element(field_element(f, 1L)));
    return rational_function(std::move(num), std::move(den));
}

loaded_rpf rpf_from_json(const json& j)
{
    int p = j.at("p").get<int>();
    int k = j.at("k").get<int>();
    field f = make_field(p);
    std::vector<rpf_term> terms;
    if (j.contains("terms")) {
        for (const auto& t : j.at("terms")) {
            std::string type = t.at("type").get<std::string>();
            if (type == "class_pp" || type == "class_quadratic") {
                terms.push_back({type == "class_pp" ? term_kind::class_pp : term_kind::class_quadratic,
                                 cycle_from_json(t.at("class"), f), quad_from_json(t.at("coefficient"), f),
                                 std::nullopt,
                                 {}});
            } else if (type == "pole_at_zero") {
                std::optional<quad_element> b1;
                if (t.contains("b1"))
                    b1 = quad_from_json(t.at("b1"), f);
                terms.push_back({term_kind::pole_at_zero, std::nullopt, quad_from_json(t.at("a0"), f), b1, {}});
            } else if (type == "tail") {
                terms.push_back({term_kind::tail, std::nullopt, quad_element(f), std::nullopt,
                                 quads_from_json(t.at("coeffs"), f)});
            } else {
                throw parse_error("unknown term type '" + type + "'");
            }
        }
    }
    loaded_rpf out{rpf_expression{p, k, terms, rational_function(f)}, std::nullopt};
    if (j.contains("realized")) {
        out.expression.realized = rational_function_from_json(j.at("realized"), f);
        if (!terms.empty())
            out.terms_match_realized = realize(f, k, terms) == out.expression.realized;
    } else {
        out.expression.realized = realize(f, k, terms);
    }
    return out;
}

// ---------------------------------------------------------------- expression

namespace {

class expression_parser {
  public:
    expression_parser(std::string_view text, const expression_context& ctx) : s_(text), ctx_(ctx) {}

    rational_function parse()
    {
        rational_function v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw parse_error("expression '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    rational_function constant(const quad_element& x) const { return rational_function(polynomial(x)); }

    rational_function expr()
    {
        rational_function v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    rational_function term()
    {
        rational_function v = factor();
        for (;;) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                rational_function d = factor();
                if (d.is_zero())
                    fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    rational_function factor()
    {
        if (eat('-'))
            return -factor();
        if (eat('+'))
            return factor();
        return power();
    }

    rational_function power()
    {
        rational_function base = atom();
        if (!eat('^'))
            return base;
        bool negative = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("exponent must be an integer");
        int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (e > 1000)
            fail("exponent too large");
        rational_function acc = constant(quad_element(field_element(ctx_.f, 1L)));
        for (int i = 0; i < e; ++i)
            acc = acc * base;
        if (negative) {
            if (acc.is_zero())
                fail("zero to a negative power");
            acc = constant(quad_element(field_element(ctx_.f, 1L))) / acc;
        }
        return acc;
    }

    field_element base_value(const rational_function& v) const
    {
        if (v.den().degree() != 0 || v.num().degree() > 0)
            fail("sqrt argument must be a constant");
        quad_element c = v.num().is_zero() ? quad_element(ctx_.f) : v.num().coeff(0);
        if (!c.in_base_field())
            fail("sqrt argument must lie in the base field");
        return c.a();
    }

    rational_function sqrt_of(const field_element& d) const
    {
        if (d.sign() < 0)
            fail("square root of a negative number");
        if (d.is_zero())
            return rational_function(ctx_.f);
        return constant(quad_element::sqrt_of(d));
    }

    rational_function discriminant_root() const
    {
        if (!ctx_.disc)
            fail("sqrtD needs a discriminant (--disc)");
        return sqrt_of(*ctx_.disc);
    }

    rational_function atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (eat('(')) {
            rational_function v = expr();
            if (!eat(')'))
                fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            mpz_class n(std::string(s_.substr(start, pos_ - start)));
            return constant(quad_element(field_element(ctx_.f, mpq_class(n))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            std::string id(s_.substr(start, pos_ - start));
            if (id == "L")
                return constant(quad_element(field_element::lambda(ctx_.f)));
            if (id == "z") {
                if (!ctx_.allow_z)
                    fail("the variable z is not allowed here");
                return rational_function(polynomial::monomial(quad_element(field_element(ctx_.f, 1L)), 1));
            }
            if (id == "r" || id == "sqrtD")
                return discriminant_root();
            if (id == "sqrt") {
                skip();
                if (pos_ < s_.size() && s_[pos_] == '(') {
                    ++pos_;
                    rational_function v = expr();
                    if (!eat(')'))
                        fail("missing ')'");
                    return sqrt_of(base_value(v));
                }
                std::size_t ds = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (ds == pos_)
                    fail("sqrt needs an integer or a parenthesized argument");
                mpz_class n(std::string(s_.substr(ds, pos_ - ds)));
                return sqrt_of(field_element(ctx_.f, mpq_class(n)));
            }
            fail("unknown identifier '" + id + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const expression_context& ctx_;
    std::size_t pos_ = 0;
};

} // namespace

rational_function parse_rational_function(std::string_view text, const expression_context& ctx)
{
    return expression_parser(text, ctx).parse();
}

quad_element parse_quad(std::string_view text, const expression_context& ctx)
{
    expression_context scalar = ctx;
    scalar.allow_z = false;
    rational_function v = parse_rational_function(text, scalar);
    if (v.is_zero())
        return quad_element(ctx.f);
    return v.num().coeff(0);
}

field_element parse_field_element(std::string_view text, const expression_context& ctx)
{
    quad_element q = parse_quad(text, ctx);
    if (!q.in_base_field())
        throw parse_error("'" + std::string(text) + "' does not lie in Q(lambda)");
    return q.a();
}

// --------------------------------------------------------------------- LaTeX

namespace {

std::string latex_rational(const mpq_class& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string lambda_symbol(int p)
{
    if (p == 4)
        return "\\sqrt{2}";
    if (p == 6)
        return "\\sqrt{3}";
    return "\\lambda";
}

// Signed sum of coefficient·monomial pieces.
std::string join_terms(const std::vector<std::pair<mpq_class, std::string>>& terms)
{
    std::string out;
    for (const auto& [c, mono] : terms) {
        if (c == 0)
            continue;
        mpq_class a = abs(c);
        std::string body = mono.empty() ? latex_rational(a) : (a == 1 ? "" : latex_rational(a)) + mono;
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

bool is_single_term(const std::string& s)
{
    std::size_t depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '{' || c == '(')
            ++depth;
        else if (c == '}' || c == ')')
            --depth;
        else if (depth == 0 && i > 0 && (c == '+' || c == '-'))
            return false;
    }
    return true;
}

std::string paren(const std::string& s) { return is_single_term(s) ? s : "\\left(" + s + "\\right)"; }

} // namespace

std::string latex(const field_element& x)
{
    std::vector<std::pair<mpq_class, std::string>> terms;
    const auto& c = x.coefficients();
    std::string sym = lambda_symbol(x.p());
    for (std::size_t i = c.size(); i-- > 0;) {
        std::string mono = i == 0 ? "" : (i == 1 ? sym : sym + "^{" + std::to_string(i) + "}");
        terms.emplace_back(c[i], mono);
    }
    return join_terms(terms);
}

std::string latex(const quad_element& x)
{
    if (x.in_base_field())
        return latex(x.a());
    const field_element& d = *x.radicand();
    std::string root = "\\sqrt{" + latex(d) + "}";
    std::string b = latex(x.b());
    std::string rad;
    if (b == "1")
        rad = root;
    else if (b == "-1")
        rad = "-" + root;
    else
        rad = paren(b) + root;
    if (x.a().is_zero())
        return rad;
    std::string a = latex(x.a());
    return a + (rad[0] == '-' ? " - " + rad.substr(1) : " + " + rad);
}

std::string latex(const group_element& m)
{
    return "\\begin{pmatrix} " + latex(m.a()) + " & " + latex(m.b()) + " \\\\ " + latex(m.c()) + " & " +
           latex(m.d()) + " \\end{pmatrix}";
}

std::string latex(const quadratic_form& q)
{
    return "[" + latex(q.A()) + ", " + latex(q.B()) + ", " + latex(q.C()) + "]";
}

std::string latex(const polynomial& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const quad_element& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^{" + std::to_string(i) + "}");
        std::string cs = latex(c);
        bool neg = cs[0] == '-' && is_single_term(cs);
        if (neg)
            cs = cs.substr(1);
        std::string body;
        if (mono.empty())
            body = is_single_term(cs) ? cs : "\\left(" + cs + "\\right)";
        else if (cs == "1")
            body = mono;
        else
            body = paren(cs) + " " + mono;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

std::string latex(const rational_function& f)
{
    if (f.den().degree() == 0)
        return latex(f.num());
    return "\\frac{" + latex(f.num()) + "}{" + latex(f.den()) + "}";
}

std::string latex(const rpf_expression& q)
{
    std::ostringstream os;
    std::string k = std::to_string(q.k);
    os << "q(z) = ";
    bool first = true;
    auto plus = [&](const std::string& coeff_tex, const std::string& body) {
        std::string c = coeff_tex;
        if (!first)
            os << " + ";
        first = false;
        if (c != "1")
            os << paren(c) << " ";
        os << body;
    };
    auto form_tex = [&](const quadratic_form& f) {
        polynomial qz(f.descriptor(), {quad_element(f.C()), quad_element(f.B()), quad_element(f.A())});
        std::string base = "\\left(" + latex(qz) + "\\right)";
        return q.k == 1 ? "\\frac{1}{" + latex(qz) + "}" : "\\frac{1}{" + base + "^{" + k + "}}";
    };
    auto piece_tex = [&](const quad_element& a) {
        if (q.k == 1)
            return "\\frac{1}{z - " + paren(latex(a)) + "}";
        return "q_{" + k + "," + latex(a) + "}(z)";
    };
    for (const auto& t : q.terms) {
        switch (t.kind) {
        case term_kind::class_quadratic: {
            std::string body;
            for (const auto& f : t.cycle->forms)
                body += (body.empty() ? "" : " + ") + form_tex(f);
            plus(latex(t.coefficient), "\\left(" + body + "\\right)");
            break;
        }
        case term_kind::class_pp: {
            std::string body;
            for (const auto& a : t.cycle->zeros())
                body += (body.empty() ? "" : " + ") + piece_tex(a);
            for (const auto& b : negate_class(*t.cycle).zeros())
                body += " - " + piece_tex(b.conjugate());
            plus(latex(t.coefficient), "\\left(" + body + "\\right)");
            break;
        }
        case term_kind::pole_at_zero:
            if (!t.coefficient.is_zero())
                plus(latex(t.coefficient), "\\left(1 - z^{-" + std::to_string(2 * q.k) + "}\\right)");
            if (t.b1 && !t.b1->is_zero())
                plus(latex(*t.b1), "z^{-1}");
            break;
        case term_kind::tail:
            for (std::size_t n = 0; n < t.tail.size(); ++n)
                if (!t.tail[n].is_zero())
                    plus(latex(t.tail[n]), "z^{-" + std::to_string(n + 1) + "}");
            break;
        }
    }
    if (first)
        os << latex(q.realized);
    return os.str();
}

} // namespace hecke
