#include "hecke/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"

#include "hecke/io.hpp"

namespace hecke::cli {

namespace {

constexpr const char* version = "0.1.0";

constexpr const char* grammar_help = R"(Expressions (--elem, --disc, --alpha, --class i=c, --c0, --tail, --a0, --b1):
  integers, rationals a/b, + - * / ^ (integer exponent, may be negative), parentheses
  L        lambda_p = 2cos(pi/p)
  sqrtD, r the square root of the discriminant given by --disc
  sqrtN    the square root of the integer N, e.g. sqrt14
  sqrt(e)  the square root of a positive element of Q(lambda)
Examples: "(sqrt2+sqrt14)/2", "L^2-2", "3/2 - r".
Environment: RPF_BUDGET overrides the continued-fraction step budget (default 10000).
Exit codes: 0 success or verified, 2 relations fail, 1 usage or input error, 3 budget exhausted.)";

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct settings {
    int p = 0;
    std::string elem, word, disc, alpha, in, out, construction, c0 = "0", a0 = "1", b1;
    long t = 1;
    int k = 1, theorem = 0, bound = enumeration_options{}.bound;
    std::vector<std::string> classes, tail;
};

struct outcome {
    json data;
    std::string latex;
    int code = exit_ok;
};

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

field_element parse_disc(const field& f, const std::string& text)
{
    if (text.empty())
        throw usage_error("--disc is required");
    field_element d = parse_field_element(text, {f, std::nullopt, false});
    if (d.sign() <= 0)
        throw usage_error("discriminant must be positive");
    return d;
}

enumeration_result enumerate(const field& f, const field_element& d, int bound)
{
    if (bound < 1)
        throw usage_error("--bound must be positive");
    return enumerate_classes(f, d, {bound, cf_budget()});
}

void require_complete(const enumeration_result& r)
{
    if (r.budget_exhausted > 0)
        throw budget_exceeded(std::to_string(r.budget_exhausted) +
                              " candidate forms ran out of budget; class list may be incomplete");
}

const form_cycle& class_at(const enumeration_result& r, const std::string& index_text)
{
    std::size_t pos = 0;
    long i = 0;
    try {
        i = std::stol(index_text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != index_text.size() || index_text.empty())
        throw usage_error("class index '" + index_text + "' is not an integer");
    if (i < 1 || static_cast<std::size_t>(i) > r.cycles.size())
        throw usage_error("class index " + index_text + " out of range 1.." + std::to_string(r.cycles.size()));
    return r.cycles[static_cast<std::size_t>(i - 1)];
}

json quads(const std::vector<quad_element>& xs)
{
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(to_json(x));
    return a;
}

std::string read_input(const std::string& path)
{
    if (path.empty())
        throw usage_error("--in is required");
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw usage_error("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

// ------------------------------------------------------------------ commands

outcome cmd_field(const settings& s)
{
    field f = make_field(s.p);
    json minpoly = json::array();
    for (const auto& c : f->minimal_polynomial())
        minpoly.push_back(c.get_str());
    field_element lam = field_element::lambda(f);
    outcome o;
    o.data = {{"p", s.p},
              {"degree", f->degree()},
              {"minimal_polynomial", minpoly},
              {"lambda", to_json(lam)},
              {"lambda_approx", lam.to_double()}};
    o.latex = "\\lambda_{" + std::to_string(s.p) + "} = 2\\cos(\\pi/" + std::to_string(s.p) + ")";
    if (!s.elem.empty()) {
        field_element x = parse_field_element(s.elem, {f, std::nullopt, false});
        o.data["element"] = {{"value", to_json(x)},
                             {"sign", x.sign()},
                             {"integral", x.is_integral()},
                             {"approx", x.to_double()}};
        o.latex = latex(x);
    }
    return o;
}

outcome group_report(const group_element& m)
{
    outcome o;
    o.data = {{"p", m.p()},
              {"matrix", to_json(m)},
              {"trace", to_json(m.trace())},
              {"kind", to_string(classify(m))}};
    o.latex = latex(m);
    return o;
}

outcome cmd_group_word(const settings& s)
{
    field f = make_field(s.p);
    group_element m = from_word(f, s.word);
    outcome o = group_report(m);
    o.data["word"] = s.word;
    return o;
}

outcome cmd_group_upow(const settings& s)
{
    field f = make_field(s.p);
    outcome o = group_report(u_power(f, s.t));
    o.data["t"] = s.t;
    return o;
}

outcome cmd_forms_enumerate(const settings& s)
{
    field f = make_field(s.p);
    field_element d = parse_disc(f, s.disc);
    enumeration_result r = enumerate(f, d, s.bound);
    json cycles = json::array();
    std::size_t forms = 0;
    std::string tex;
    for (std::size_t i = 0; i < r.cycles.size(); ++i) {
        cycles.push_back(to_json(r.cycles[i]));
        forms += r.cycles[i].forms.size();
        tex += "A_{" + std::to_string(i + 1) + "}:";
        for (const auto& q : r.cycles[i].forms)
            tex += " " + latex(q);
        if (i + 1 < r.cycles.size())
            tex += "\n";
    }
    outcome o;
    o.data = {{"p", s.p},
              {"D", to_json(d)},
              {"bound", r.bound},
              {"class_number", r.cycles.size()},
              {"simple_forms", forms},
              {"cycles", cycles},
              {"candidates", r.candidates},
              {"non_hyperbolic", r.non_hyperbolic},
              {"budget_exhausted", r.budget_exhausted}};
    o.latex = tex.empty() ? "\\text{no classes}" : tex;
    if (r.budget_exhausted > 0)
        o.code = exit_budget;
    return o;
}

outcome cmd_forms_isp(const settings& s)
{
    field f = make_field(s.p);
    field_element d = parse_disc(f, s.disc);
    enumeration_result r = enumerate(f, d, s.bound);
    require_complete(r);
    std::vector<std::size_t> picked;
    if (s.classes.empty()) {
        for (std::size_t i = 0; i < r.cycles.size(); ++i)
            picked.push_back(i);
    } else {
        for (const auto& c : s.classes)
            picked.push_back(static_cast<std::size_t>(&class_at(r, c) - r.cycles.data()));
    }
    json systems = json::array();
    std::string tex;
    for (std::size_t i : picked) {
        const form_cycle& c = r.cycles[i];
        pole_set poles = isp(c);
        systems.push_back({{"index", i + 1},
                           {"class", c.label},
                           {"negated_class", negate_class(c).label},
                           {"symmetric", is_hecke_symmetric(poles)},
                           {"poles", quads(poles.elements())}});
        if (!tex.empty())
            tex += "\n";
        tex += "P_{" + std::to_string(i + 1) + "} = \\{";
        for (std::size_t j = 0; j < poles.elements().size(); ++j)
            tex += (j ? ", " : "") + latex(poles.elements()[j]);
        tex += "\\}";
    }
    outcome o;
    o.data = {{"p", s.p}, {"D", to_json(d)}, {"systems", systems}};
    o.latex = tex;
    return o;
}

outcome cmd_forms_symmetric(const settings& s)
{
    field f = make_field(s.p);
    field_element d = parse_disc(f, s.disc);
    enumeration_result r = enumerate(f, d, s.bound);
    require_complete(r);
    std::vector<const form_cycle*> picked;
    if (s.classes.empty()) {
        for (const auto& c : r.cycles)
            picked.push_back(&c);
    } else {
        for (const auto& c : s.classes)
            picked.push_back(&class_at(r, c));
    }
    json classes = json::array();
    pole_set all;
    for (const form_cycle* c : picked) {
        pole_set poles = isp(*c);
        classes.push_back({{"class", c->label}, {"symmetric", is_hecke_symmetric(poles)}});
        all = all.united(poles);
    }
    bool sym = is_hecke_symmetric(all);
    outcome o;
    o.data = {{"p", s.p}, {"D", to_json(d)}, {"classes", classes}, {"union_symmetric", sym}};
    o.latex = sym ? "\\text{Hecke-symmetric}" : "\\text{not Hecke-symmetric}";
    return o;
}

outcome cmd_cfrac_expand(const settings& s)
{
    field f = make_field(s.p);
    expression_context ctx{f, std::nullopt, false};
    if (!s.disc.empty())
        ctx.disc = parse_disc(f, s.disc);
    if (s.alpha.empty())
        throw usage_error("--alpha is required");
    quad_element alpha = parse_quad(s.alpha, ctx);
    if (alpha.in_base_field())
        throw usage_error("alpha must be a quadratic irrationality over Q(lambda)");
    cf_expansion e = expansion(alpha);
    group_element m = automorph(alpha);
    outcome o;
    o.data = {{"p", s.p},
              {"alpha", to_json(alpha)},
              {"expansion", to_json(e)},
              {"automorph", to_json(m)},
              {"trace", to_json(m.trace())}};
    std::string word;
    for (const auto& mv : e.preperiod)
        word += mv.word() + " ";
    word += "(";
    for (std::size_t i = 0; i < e.period.size(); ++i)
        word += (i ? " " : "") + e.period[i].word();
    word += ")";
    o.latex = "\\alpha = " + latex(alpha) + "\\quad " + word + "\\quad M_\\alpha = " + latex(m);
    return o;
}

quad_element coefficient(const std::string& text, const expression_context& ctx)
{
    return parse_quad(text, ctx);
}

outcome cmd_rpf_build(const settings& s)
{
    field f = make_field(s.p);
    if (s.k < 1)
        throw usage_error("--k must be at least 1");
    std::string how = s.construction;
    if (s.theorem != 0) {
        static const char* names[] = {"general", "symmetric", "theorem3"};
        if (s.theorem < 1 || s.theorem > 3)
            throw usage_error("--theorem must be 1, 2 or 3");
        if (!how.empty() && how != names[s.theorem - 1])
            throw usage_error("--theorem and --construction disagree");
        how = names[s.theorem - 1];
    }
    if (how.empty())
        throw usage_error("one of --theorem or --construction is required");

    expression_context ctx{f, std::nullopt, false};
    if (!s.disc.empty())
        ctx.disc = parse_disc(f, s.disc);

    std::vector<weighted_class> picked;
    if (how != "zero") {
        if (!ctx.disc)
            throw usage_error("--disc is required for class constructions");
        enumeration_result r = enumerate(f, *ctx.disc, s.bound);
        require_complete(r);
        for (const auto& spec : s.classes) {
            auto eq = spec.find('=');
            const form_cycle& c = class_at(r, spec.substr(0, eq));
            quad_element w = eq == std::string::npos ? quad_element(field_element(f, 1L))
                                                     : coefficient(spec.substr(eq + 1), ctx);
            picked.push_back({c, w});
        }
    }

    quad_element c0 = coefficient(s.c0, ctx);
    std::optional<rpf_expression> q;
    if (how == "general") {
        std::vector<quad_element> tail;
        for (const auto& t : s.tail)
            tail.push_back(coefficient(t, ctx));
        q = build_general(f, s.k, picked, c0, tail);
    } else if (how == "symmetric") {
        if (s.k % 2 == 0)
            throw usage_error("the symmetric construction needs odd k");
        q = build_symmetric(f, s.k, picked, c0);
    } else if (how == "theorem3") {
        if (picked.size() != 1)
            throw usage_error("theorem3 takes exactly one --class");
        q = build_theorem3(s.k, picked.front().cycle);
    } else if (how == "zero") {
        std::optional<quad_element> b1;
        if (!s.b1.empty()) {
            if (s.k != 1)
                throw usage_error("--b1 is only allowed for k = 1");
            b1 = coefficient(s.b1, ctx);
        }
        q = pole_at_zero(f, s.k, coefficient(s.a0, ctx), b1);
    } else {
        throw usage_error("unknown construction '" + how + "'");
    }

    outcome o;
    o.data = to_json(*q);
    o.latex = latex(*q) + "\n= " + latex(q->realized);
    if (!s.out.empty()) {
        std::ofstream file(s.out);
        if (!file)
            throw usage_error("cannot write '" + s.out + "'");
        file << o.data.dump(2) << '\n';
    }
    return o;
}

loaded_rpf load(const settings& s)
{
    std::string text = read_input(s.in);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return rpf_from_json(j);
}

outcome cmd_rpf_verify(const settings& s)
{
    loaded_rpf l = load(s);
    rpf_verdict v = verify(l.expression);
    outcome o;
    o.data = {{"p", l.expression.p}, {"k", l.expression.k}, {"verified", v.ok()}};
    o.data.update(to_json(v));
    if (l.terms_match_realized)
        o.data["terms_match_realized"] = *l.terms_match_realized;
    o.latex = std::string("q + q|T = ") + latex(v.residual1) + "\nq + \\sum_{t=1}^{" +
              std::to_string(l.expression.p - 1) + "} q|U^t = " + latex(v.residual2);
    o.code = v.ok() ? exit_ok : exit_not_verified;
    return o;
}

outcome cmd_rpf_analyze(const settings& s)
{
    loaded_rpf l = load(s);
    pole_analysis a = analyze_poles(l.expression.realized);
    outcome o;
    o.data = {{"p", l.expression.p}, {"k", l.expression.k}};
    o.data.update(to_json(a));
    std::string tex;
    for (const auto& r : a.isps)
        tex += (tex.empty() ? "" : "\n") + r.label + ": " + (r.symmetric ? "symmetric" : "not symmetric");
    o.latex = tex.empty() ? "\\text{no hyperbolic poles}" : tex;
    return o;
}

json parameters_of(const CLI::App* sub)
{
    json params = json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name() == "--help" || opt->get_name() == "-h")
            continue;
        std::string name = opt->get_name();
        while (!name.empty() && name.front() == '-')
            name.erase(name.begin());
        if (opt->count() > 0) {
            const auto& rs = opt->results();
            if (opt->get_expected_max() > 1)
                params[name] = rs;
            else if (opt->get_type_size() == 0)
                params[name] = true;
            else
                params[name] = rs.empty() ? std::string() : rs.back();
        } else if (!opt->get_default_str().empty()) {
            params[name] = opt->get_default_str();
        }
    }
    return params;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rational period functions on Hecke groups G_p, computed exactly.", "heckerpf"};
    app.footer(grammar_help);
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version);

    bool want_latex = false;
    std::string manifest_path;
    app.add_flag("--latex", want_latex, "print LaTeX instead of JSON");
    app.add_option("--manifest", manifest_path, "write a run manifest (JSON) to FILE")->option_text("FILE");

    settings s;
    using handler = outcome (*)(const settings&);
    std::vector<std::pair<CLI::App*, handler>> leaves;

    auto add_p = [&](CLI::App* c) { c->add_option("--p", s.p, "Hecke group index, p >= 3")->required(); };
    auto add_disc = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--disc", s.disc, "discriminant D, an expression in L");
        if (required)
            o->required();
        c->add_option("--bound", s.bound, "coordinate bound for the class search")->capture_default_str();
    };

    auto* field_cmd = app.add_subcommand("field", "field data for Q(lambda_p)");
    add_p(field_cmd);
    field_cmd->add_option("--elem", s.elem, "element to evaluate");
    leaves.emplace_back(field_cmd, cmd_field);

    auto* group = app.add_subcommand("group", "elements of G_p");
    group->require_subcommand(1);
    auto* word = group->add_subcommand("word", "matrix of a word over S, T, U (lowercase: inverse)");
    add_p(word);
    word->add_option("--word", s.word, "word, e.g. USUt")->required();
    leaves.emplace_back(word, cmd_group_word);
    auto* upow = group->add_subcommand("upow", "U^t via the gamma recurrence");
    add_p(upow);
    upow->add_option("--t", s.t, "exponent")->required();
    leaves.emplace_back(upow, cmd_group_upow);

    auto* forms = app.add_subcommand("forms", "lambda-quadratic forms of a discriminant");
    forms->require_subcommand(1);
    auto* fenum = forms->add_subcommand("enumerate", "class cycles of simple forms");
    add_p(fenum);
    add_disc(fenum, true);
    leaves.emplace_back(fenum, cmd_forms_enumerate);
    auto* fisp = forms->add_subcommand("isp", "irreducible systems of poles");
    add_p(fisp);
    add_disc(fisp, true);
    fisp->add_option("--class", s.classes, "1-based class index (repeatable; default all)");
    leaves.emplace_back(fisp, cmd_forms_isp);
    auto* fsym = forms->add_subcommand("symmetric", "Hecke symmetry of a union of systems");
    add_p(fsym);
    add_disc(fsym, true);
    fsym->add_option("--class", s.classes, "1-based class index (repeatable; default all)");
    leaves.emplace_back(fsym, cmd_forms_symmetric);

    auto* cfrac = app.add_subcommand("cfrac", "continued fractions and automorphs");
    cfrac->require_subcommand(1);
    auto* expand = cfrac->add_subcommand("expand", "eventually periodic expansion of a hyperbolic point");
    add_p(expand);
    expand->add_option("--alpha", s.alpha, "the point")->required();
    expand->add_option("--disc", s.disc, "discriminant, enabling sqrtD in --alpha");
    leaves.emplace_back(expand, cmd_cfrac_expand);

    auto* rpf = app.add_subcommand("rpf", "rational period functions");
    rpf->require_subcommand(1);
    auto* build = rpf->add_subcommand("build", "construct an RPF");
    add_p(build);
    add_disc(build, false);
    build->add_option("--k", s.k, "weight 2k")->capture_default_str();
    build->add_option("--theorem", s.theorem, "1 general, 2 symmetric, 3 paired classes");
    build->add_option("--construction", s.construction, "general | symmetric | theorem3 | zero")
        ->check(CLI::IsMember({"general", "symmetric", "theorem3", "zero"}));
    build->add_option("--class", s.classes, "class index with optional coefficient, i or i=c (repeatable)");
    build->add_option("--c0", s.c0, "coefficient of the pole-at-zero function")->capture_default_str();
    build->add_option("--tail", s.tail, "tail coefficients c_1, c_2, ... (general)")->delimiter(',');
    build->add_option("--a0", s.a0, "a0 for the zero construction")->capture_default_str();
    build->add_option("--b1", s.b1, "b1 for the zero construction, k = 1 only");
    build->add_option("--out", s.out, "also write the JSON to FILE")->option_text("FILE");
    leaves.emplace_back(build, cmd_rpf_build);
    auto* ver = rpf->add_subcommand("verify", "check both period relations exactly");
    ver->add_option("--in", s.in, "RPF JSON file, - for stdin")->required()->option_text("FILE");
    leaves.emplace_back(ver, cmd_rpf_verify);
    auto* analyze = rpf->add_subcommand("analyze", "poles, systems of poles and symmetry");
    analyze->add_option("--in", s.in, "RPF JSON file, - for stdin")->required()->option_text("FILE");
    leaves.emplace_back(analyze, cmd_rpf_analyze);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    CLI::App* leaf = nullptr;
    handler h = nullptr;
    for (auto& [cmd, fn] : leaves)
        if (cmd->parsed()) {
            leaf = cmd;
            h = fn;
        }
    if (!h) {
        err << "heckerpf: no command given\n";
        return exit_error;
    }

    outcome o;
    try {
        o = h(s);
    } catch (const budget_exceeded& e) {
        err << "heckerpf: budget exhausted (RPF_BUDGET=" << cf_budget() << "): " << e.what() << '\n';
        return exit_budget;
    } catch (const json::exception& e) {
        err << "heckerpf: malformed JSON input: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        err << "heckerpf: " << e.what() << '\n';
        return exit_error;
    }

    std::string text = want_latex ? o.latex + '\n' : o.data.dump(2) + '\n';
    out << text;
    if (o.code == exit_budget)
        err << "heckerpf: budget exhausted (RPF_BUDGET=" << cf_budget()
            << "); the class list may be incomplete\n";
    else if (o.code == exit_not_verified)
        err << "heckerpf: the period relations do not hold\n";

    if (!manifest_path.empty()) {
        json args = json::array();
        for (int i = 1; i < argc; ++i)
            args.push_back(argv[i]);
        std::string name = leaf->get_parent()->get_name() == "heckerpf"
                               ? leaf->get_name()
                               : leaf->get_parent()->get_name() + " " + leaf->get_name();
        json p = s.p > 0 ? json(s.p) : (o.data.contains("p") ? o.data["p"] : json(nullptr));
        json manifest = {{"version", version},
                         {"command", name},
                         {"command_line", args},
                         {"p", p},
                         {"parameters", parameters_of(leaf)},
                         {"latex", want_latex},
                         {"budget", cf_budget()},
                         {"exit_code", o.code},
                         {"output_sha256", sha256_hex(text)}};
        std::ofstream file(manifest_path);
        if (!file) {
            err << "heckerpf: cannot write manifest '" << manifest_path << "'\n";
            return exit_error;
        }
        file << manifest.dump(2) << '\n';
    }
    return o.code;
}

} // namespace hecke::cli
