// Command-line frontend: exact computations in the covering quantum group,
// the odd nilHecke algebra, its cyclotomic quotients, and the bubble calculus.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "oddsl2/bubbles.hpp"
#include "oddsl2/cyclotomic.hpp"
#include "oddsl2/onh.hpp"
#include "oddsl2/udot.hpp"
#include "oddsl2/verify.hpp"

using json = nlohmann::json;
using namespace oddsl2;

namespace {

int default_cutoff() {
    if (const char* env = std::getenv("ODDSL2_CUTOFF_DEFAULT")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw ParseError(0, "ODDSL2_CUTOFF_DEFAULT is not an integer");
        }
    }
    return 20;
}

json scalar_to_json(const CoveringScalar& s) {
    json terms = json::array();
    for (const auto& [k, c] : s.terms())
        terms.push_back({{"q", k.first}, {"pi", k.second}, {"c", c.str()}});
    return json{{"terms", terms}};
}

CoveringScalar scalar_from_json(const json& j) {
    CoveringScalar s;
    for (const auto& t : j.at("terms")) {
        Int c = t.at("c").is_string() ? Int(t.at("c").get<std::string>())
                                      : Int(t.at("c").get<long long>());
        s += CoveringScalar::monomial(c, t.at("q").get<int>(), t.at("pi").get<int>());
    }
    return s;
}

json series_to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [k, c] : s.terms())
        terms.push_back({{"q", k.first}, {"pi", k.second}, {"c", c.str()}});
    return json{{"cutoff", s.cutoff()}, {"terms", terms}};
}

json onh_to_json(const OnhElement& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms())
        terms.push_back({{"w", k.w.one_line()}, {"alpha", k.alpha}, {"c", c.str()}});
    return json{{"n", e.n()}, {"terms", terms}};
}

json canonical_to_json(const CanonicalElement& e) {
    json terms = json::array();
    for (const auto& [s, c] : e.terms())
        terms.push_back({{"sym", s.to_string()}, {"coef", scalar_to_json(c)}});
    return json{{"terms", terms}};
}

json skew_to_json(const SkewPoly& f) {
    json terms = json::array();
    for (const auto& [a, c] : f.terms()) terms.push_back({{"alpha", a}, {"c", c.str()}});
    return json{{"n", f.n()}, {"terms", terms}};
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

std::string laurent_to_string(const std::map<int, Int>& poly) {
    if (poly.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : poly) {
        Int a = c < 0 ? Int(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (a != 1 || e == 0) out += a.str();
        if (e != 0) {
            if (a != 1) out += "*";
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for covering sl2, odd nilHecke algebras, and bubbles"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // ----- scalars -----
    auto* scalars = app.add_subcommand("scalars", "covering ground ring operations");
    scalars->require_subcommand(1);
    long s_n = 0, s_a = 0;
    int s_s = 1, s_pipow = 0, s_cut = default_cutoff(), s_pival = 1;
    std::string s_jsonin, s_q;

    auto* sc_qint = scalars->add_subcommand("qint", "(q,pi)-integer [n]");
    sc_qint->add_option("-n,--n", s_n, "integer n")->required();
    sc_qint->callback([&] {
        CoveringScalar v = qint(s_n);
        emit(as_json, scalar_to_json(v), v.to_string());
    });

    auto* sc_qfact = scalars->add_subcommand("qfact", "(q,pi)-factorial [n]!");
    sc_qfact->add_option("-n,--n", s_n, "nonnegative n")->required();
    sc_qfact->callback([&] {
        if (s_n < 0) throw CLI::ValidationError("qfact", "n must be nonnegative");
        CoveringScalar v = qfact(s_n);
        emit(as_json, scalar_to_json(v), v.to_string());
    });

    auto* sc_qbinom = scalars->add_subcommand("qbinom", "(q,pi)-binomial [n; a]");
    sc_qbinom->add_option("-n,--n", s_n, "integer n")->required();
    sc_qbinom->add_option("-a,--a", s_a, "nonnegative a")->required();
    sc_qbinom->callback([&] {
        if (s_a < 0) throw CLI::ValidationError("qbinom", "a must be nonnegative");
        CoveringScalar v = qbinom(s_n, s_a);
        emit(as_json, scalar_to_json(v), v.to_string());
    });

    auto* sc_bar = scalars->add_subcommand("bar", "bar involution of a JSON scalar");
    sc_bar->add_option("--scalar", s_jsonin, "scalar as JSON {\"terms\": [...]}")->required();
    sc_bar->callback([&] {
        CoveringScalar v = scalar_from_json(json::parse(s_jsonin)).bar();
        emit(as_json, scalar_to_json(v), v.to_string());
    });

    auto* sc_spec = scalars->add_subcommand("specialize", "evaluate at pi = ±1 (and optional q)");
    sc_spec->add_option("--scalar", s_jsonin, "scalar as JSON")->required();
    sc_spec->add_option("--pi", s_pival, "+1 or -1")->required();
    sc_spec->add_option("--q", s_q, "rational value for q, e.g. 3/2");
    sc_spec->callback([&] {
        if (s_pival != 1 && s_pival != -1)
            throw CLI::ValidationError("specialize", "pi must be +1 or -1");
        CoveringScalar v = scalar_from_json(json::parse(s_jsonin));
        if (s_q.empty()) {
            auto poly = v.specialize_pi(s_pival);
            json terms = json::array();
            for (const auto& [e, c] : poly) terms.push_back({{"q", e}, {"c", c.str()}});
            emit(as_json, json{{"terms", terms}}, laurent_to_string(poly));
        } else {
            Rat q(s_q);
            Rat r = v.specialize(s_pival, q);
            emit(as_json, json{{"value", r.str()}}, r.str());
        }
    });

    auto* sc_geom = scalars->add_subcommand("geom", "series (1 - pi^p q^(2s))^-1");
    sc_geom->add_option("-s,--s", s_s, "s >= 1")->required();
    sc_geom->add_option("-p,--pi-power", s_pipow, "pi power (0 or 1)");
    sc_geom->add_option("--cutoff", s_cut, "max q-degree");
    sc_geom->callback([&] {
        TruncatedSeries v = geom_inverse(s_s, s_pipow, s_cut);
        emit(as_json, series_to_json(v), v.to_string());
    });

    // ----- skew -----
    auto* skew = app.add_subcommand("skew", "skew polynomial ring operations");
    skew->require_subcommand(1);
    int sk_n = 2, sk_i = 1;
    std::string sk_left, sk_right, sk_expr, sk_perm;

    auto* sk_mul = skew->add_subcommand("mul", "product of two skew polynomials");
    sk_mul->add_option("--n", sk_n, "variable count")->required();
    sk_mul->add_option("--left", sk_left)->required();
    sk_mul->add_option("--right", sk_right)->required();
    sk_mul->callback([&] {
        SkewPoly p = parse_skew(sk_left, sk_n) * parse_skew(sk_right, sk_n);
        emit(as_json, skew_to_json(p), p.to_string());
    });

    auto* sk_act = skew->add_subcommand("act", "apply a permutation");
    sk_act->add_option("--n", sk_n)->required();
    sk_act->add_option("--perm", sk_perm, "one-line notation, e.g. \"2 1 3\"")->required();
    sk_act->add_option("--expr", sk_expr)->required();
    sk_act->callback([&] {
        std::vector<int> w;
        std::istringstream is(sk_perm);
        int v;
        while (is >> v) w.push_back(v);
        SkewPoly p = act(Permutation(w), parse_skew(sk_expr, sk_n));
        emit(as_json, skew_to_json(p), p.to_string());
    });

    auto* sk_dd = skew->add_subcommand("dd", "odd divided difference");
    sk_dd->add_option("--n", sk_n)->required();
    sk_dd->add_option("--i", sk_i)->required();
    sk_dd->add_option("--expr", sk_expr)->required();
    sk_dd->callback([&] {
        SkewPoly p = oddpartial(sk_i, parse_skew(sk_expr, sk_n));
        emit(as_json, skew_to_json(p), p.to_string());
    });

    auto* sk_sym = skew->add_subcommand("issym", "odd-symmetry membership test");
    sk_sym->add_option("--n", sk_n)->required();
    sk_sym->add_option("--expr", sk_expr)->required();
    sk_sym->callback([&] {
        bool v = is_odd_symmetric(parse_skew(sk_expr, sk_n));
        emit(as_json, json{{"odd_symmetric", v}}, v ? "true" : "false");
    });

    // ----- onh -----
    auto* onh = app.add_subcommand("onh", "odd nilHecke algebra");
    onh->require_subcommand(1);
    int o_n = 2, o_cut = 8;
    std::string o_word, o_left, o_right, o_expr;

    auto* o_nf = onh->add_subcommand("nf", "normal form of a word");
    o_nf->add_option("--n", o_n)->required();
    o_nf->add_option("--word", o_word, "letters like \"x2 d1\"")->required();
    o_nf->callback([&] {
        OnhElement e = normal_form(o_n, parse_onh_word(o_word, o_n));
        emit(as_json, onh_to_json(e), e.to_string());
    });

    auto* o_act = onh->add_subcommand("act", "apply a word to a skew polynomial");
    o_act->add_option("--n", o_n)->required();
    o_act->add_option("--word", o_word)->required();
    o_act->add_option("--expr", o_expr)->required();
    o_act->callback([&] {
        SkewPoly p = onh_act(o_n, parse_onh_word(o_word, o_n), parse_skew(o_expr, o_n));
        emit(as_json, skew_to_json(p), p.to_string());
    });

    auto* o_mul = onh->add_subcommand("mul", "product of two words, normalized");
    o_mul->add_option("--n", o_n)->required();
    o_mul->add_option("--left", o_left)->required();
    o_mul->add_option("--right", o_right)->required();
    o_mul->callback([&] {
        OnhElement e = onh_mul(normal_form(o_n, parse_onh_word(o_left, o_n)),
                               normal_form(o_n, parse_onh_word(o_right, o_n)));
        emit(as_json, onh_to_json(e), e.to_string());
    });

    auto* o_en = onh->add_subcommand("en", "the idempotent e_n");
    o_en->add_option("--n", o_n)->required();
    o_en->callback([&] {
        OnhElement e = e_idempotent(o_n);
        emit(as_json, onh_to_json(e), e.to_string());
    });

    auto* o_dims = onh->add_subcommand("dims", "graded dimension series of ONH_n");
    o_dims->add_option("--n", o_n)->required();
    o_dims->add_option("--cutoff", o_cut);
    o_dims->callback([&] {
        if (o_n > 5) throw CLI::ValidationError("dims", "n <= 5 (cost)");
        TruncatedSeries s = graded_dim_onh(o_n, o_cut);
        emit(as_json, series_to_json(s), s.to_string());
    });

    auto* o_ideal = onh->add_subcommand("ideal-dims", "graded dimension of ONH_n e_n");
    o_ideal->add_option("--n", o_n)->required();
    o_ideal->add_option("--cutoff", o_cut);
    o_ideal->callback([&] {
        if (o_n > 4) throw CLI::ValidationError("ideal-dims", "n <= 4 (cost)");
        TruncatedSeries s = graded_dim_left_ideal(e_idempotent(o_n), o_cut);
        emit(as_json, series_to_json(s), s.to_string());
    });

    // ----- cyc -----
    auto* cyc = app.add_subcommand("cyc", "cyclotomic quotients and weight modules");
    cyc->require_subcommand(1);
    int c_n = 2, c_lambda = 2, c_k = 0;
    std::string c_word;

    auto* c_dims = cyc->add_subcommand("dims", "per-degree dimensions of ONH_n/(x_1^Lambda)");
    c_dims->add_option("--n", c_n)->required();
    c_dims->add_option("--lambda", c_lambda)->required();
    c_dims->callback([&] {
        if (c_n > 3 || c_lambda > 6)
            throw CLI::ValidationError("dims", "desk scale is n <= 3, lambda <= 6");
        CycQuotient q = quotient_dims(c_n, c_lambda);
        json dims = json::object();
        std::ostringstream os;
        os << "degree  dim\n";
        for (const auto& [d, v] : q.dims) {
            dims[std::to_string(d)] = v;
            os << d << "  " << v << "\n";
        }
        os << "total  " << q.total;
        emit(as_json,
             json{{"n", q.n}, {"lambda", q.Lambda}, {"dims", dims}, {"total", q.total}},
             os.str());
    });

    auto* c_mod = cyc->add_subcommand("module", "E/F action coefficients on V^Lambda");
    c_mod->add_option("--lambda", c_lambda)->required();
    c_mod->callback([&] {
        WeightModule m(c_lambda);
        json rows = json::array();
        std::ostringstream os;
        for (int k = 0; k <= c_lambda; ++k) {
            rows.push_back({{"k", k},
                            {"weight", m.weight(k)},
                            {"F", scalar_to_json(m.f_coef(k))},
                            {"E", scalar_to_json(m.e_coef(k))}});
            os << "v_" << k << " (weight " << m.weight(k) << "): F -> ("
               << m.f_coef(k).to_string() << ") v_" << k + 1 << ", E -> ("
               << m.e_coef(k).to_string() << ") v_" << k - 1 << "\n";
        }
        emit(as_json, json{{"lambda", c_lambda}, {"basis", rows}}, os.str());
    });

    auto* c_act = cyc->add_subcommand("act", "apply an E/F word to v_k");
    c_act->add_option("--lambda", c_lambda)->required();
    c_act->add_option("--k", c_k)->required();
    c_act->add_option("--word", c_word, "letters E and F, rightmost acts first")->required();
    c_act->callback([&] {
        ModuleVector v = act_word(c_word, c_lambda, c_k);
        json coords = json::array();
        std::ostringstream os;
        bool all_zero = true;
        for (std::size_t t = 0; t < v.size(); ++t) {
            coords.push_back(scalar_to_json(v[t]));
            if (!v[t].is_zero()) {
                if (!all_zero) os << " + ";
                os << "(" << v[t].to_string() << ") v_" << t;
                all_zero = false;
            }
        }
        emit(as_json, json{{"coords", coords}}, all_zero ? "0" : os.str());
    });

    // ----- udot -----
    auto* udot = app.add_subcommand("udot", "idempotented covering quantum group");
    udot->require_subcommand(1);
    std::string u_left, u_right, u_expr;
    int u_cut = default_cutoff(), u_lmax = 12;

    auto* u_mul = udot->add_subcommand("mul", "product of canonical elements");
    u_mul->add_option("--left", u_left, "e.g. \"E(1)F(0)@lam=3\"")->required();
    u_mul->add_option("--right", u_right)->required();
    u_mul->callback([&] {
        CanonicalElement l = parse_canonical(u_left), r = parse_canonical(u_right);
        CanonicalElement p = multiply(l, r);
        if (p.is_zero() && !l.is_zero() && !r.is_zero() && l.source() != r.target())
            std::cerr << "note: weight mismatch, product is zero\n";
        emit(as_json, canonical_to_json(p), p.to_string());
    });

    auto* u_form = udot->add_subcommand("form", "sesquilinear form as a truncated series");
    u_form->add_option("--left", u_left)->required();
    u_form->add_option("--right", u_right)->required();
    u_form->add_option("--cutoff", u_cut);
    u_form->callback([&] {
        TruncatedSeries s =
            sesquilinear_form(parse_canonical(u_left), parse_canonical(u_right), u_cut);
        emit(as_json, series_to_json(s), s.to_string());
    });

    auto* u_rho = udot->add_subcommand("rho", "linear anti-automorphism rho");
    u_rho->add_option("--expr", u_expr)->required();
    u_rho->callback([&] {
        CanonicalElement e = rho(parse_canonical(u_expr));
        emit(as_json, canonical_to_json(e), e.to_string());
    });

    auto* u_tau = udot->add_subcommand("tau", "anti-linear anti-automorphism tau");
    u_tau->add_option("--expr", u_expr)->required();
    u_tau->callback([&] {
        CanonicalElement e = tau(parse_canonical(u_expr));
        emit(as_json, canonical_to_json(e), e.to_string());
    });

    auto* u_bar = udot->add_subcommand("bar", "bar involution");
    u_bar->add_option("--expr", u_expr)->required();
    u_bar->callback([&] {
        CanonicalElement e = bar(parse_canonical(u_expr));
        emit(as_json, canonical_to_json(e), e.to_string());
    });

    auto* u_oracle = udot->add_subcommand("oracle", "compare two elements on all V^Lambda");
    u_oracle->add_option("--left", u_left)->required();
    u_oracle->add_option("--right", u_right)->required();
    u_oracle->add_option("--lambda-max", u_lmax);
    u_oracle->callback([&] {
        bool eq = oracle_equal(parse_canonical(u_left), parse_canonical(u_right), u_lmax);
        emit(as_json, json{{"equal", eq}}, eq ? "equal" : "different");
    });

    // ----- bubbles -----
    auto* bub = app.add_subcommand("bubbles", "bubble algebra");
    bub->require_subcommand(1);
    int b_m = 6, b_cut = default_cutoff();
    std::string b_mode = "integer_free_rank";

    auto* b_fake = bub->add_subcommand("fake", "solve the fake bubbles B_0..B_m");
    b_fake->add_option("--m", b_m)->required();
    b_fake->callback([&] {
        auto B = solve_fake_bubbles(b_m);
        json rows = json::array();
        std::ostringstream os;
        for (int m = 0; m <= b_m; ++m) {
            rows.push_back({{"m", m}, {"value", B[static_cast<std::size_t>(m)].to_string()}});
            os << "B_" << m << " = " << B[static_cast<std::size_t>(m)].to_string() << "\n";
        }
        emit(as_json, json{{"bubbles", rows}}, os.str());
    });

    auto* b_xi = bub->add_subcommand("xi", "graded dimension series of the bubble algebra");
    b_xi->add_option("--mode", b_mode, "integer_free_rank|char2|char_not_2");
    b_xi->add_option("--cutoff", b_cut);
    b_xi->callback([&] {
        TruncatedSeries s = xi_series(xi_mode_from_string(b_mode), b_cut);
        emit(as_json, series_to_json(s), s.to_string());
    });

    // ----- hom -----
    auto* hom = app.add_subcommand("hom", "2-hom graded dimension enumerator");
    hom->require_subcommand(1);
    std::string h_lower, h_upper, h_mode = "char2";
    int h_lam = 0, h_cut = default_cutoff();

    auto* h_dims = hom->add_subcommand("dims", "graded dimension of a 2-hom space");
    h_dims->add_option("--lower", h_lower, "signed sequence over +-");
    h_dims->add_option("--upper", h_upper, "signed sequence over +-");
    h_dims->add_option("--lam", h_lam)->required();
    h_dims->add_option("--mode", h_mode);
    h_dims->add_option("--cutoff", h_cut);
    h_dims->callback([&] {
        HomDims d = hom_dim_series(parse_signed_sequence(h_lower), parse_signed_sequence(h_upper),
                                   h_lam, xi_mode_from_string(h_mode), h_cut);
        json j{{"even", series_to_json(d.even)},
               {"pi", series_to_json(d.odd)},
               {"combined", series_to_json(d.full)}};
        std::ostringstream os;
        os << "even: " << d.even.to_string() << "\npi:   " << d.odd.to_string();
        emit(as_json, j, os.str());
    });

    auto* h_check = hom->add_subcommand("check", "adjunction-rotation consistency checks");
    h_check->add_option("--lower", h_lower);
    h_check->add_option("--upper", h_upper);
    h_check->add_option("--lam", h_lam)->required();
    h_check->add_option("--cutoff", h_cut);
    h_check->callback([&] {
        auto checks = char2_consistency(parse_signed_sequence(h_lower),
                                        parse_signed_sequence(h_upper), h_lam, h_cut);
        json rows = json::array();
        std::ostringstream os;
        bool all = true;
        for (const auto& c : checks) {
            rows.push_back({{"check", c.description}, {"passed", c.passed}});
            os << (c.passed ? "PASS  " : "FAIL  ") << c.description << "\n";
            all = all && c.passed;
        }
        emit(as_json, json{{"checks", rows}, {"all_passed", all}}, os.str());
        if (!all) throw std::logic_error("consistency check failed");
    });

    // ----- verify -----
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    bool v_quick = false;
    auto* v_all = verify->add_subcommand("all", "all invariants");
    v_all->add_flag("--quick", v_quick, "skip the slowest checks");
    v_all->callback([&] {
        auto results = run_verification(v_quick);
        json rows = json::array();
        bool all = true;
        for (const auto& r : results) {
            rows.push_back({{"check", r.name}, {"passed", r.passed}, {"seconds", r.seconds}});
            std::printf("%s  %-62s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        r.seconds);
            all = all && r.passed;
        }
        if (as_json) std::cout << json{{"checks", rows}, {"all_passed", all}}.dump(2) << "\n";
        if (!all) throw std::logic_error("verification failed");
    });
    verify->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error at offset " << e.pos << ": " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
