#include "pmp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pmp/decompose.hpp"
#include "pmp/expr_parser.hpp"
#include "pmp/moment_problem.hpp"
#include "pmp/parallel.hpp"
#include "pmp/ritt_forms.hpp"
#include "pmp/text_format.hpp"

namespace pmp {

namespace {

using json = nlohmann::ordered_json;

json jpoly(const Poly& p) {
    json a = json::array();
    for (int i = 0; i <= std::max(p.degree(), 0); ++i) a.push_back(to_string(p.coeff(i)));
    return a;
}

json jmap(const LinearMap& l) { return jpoly(l.to_poly()); }

std::string endpoint_text(const Endpoints& e, bool first) {
    if (e.is_node()) return to_string(first ? e.node_a() : e.node_b());
    return to_string(first ? e.rat_a() : e.rat_b());
}

json jendpoints(const Endpoints& e) {
    json j;
    j["kind"] = e.is_node() ? "node" : "rational";
    j["a"] = endpoint_text(e, true);
    j["b"] = endpoint_text(e, false);
    if (e.is_node()) j["field_min_poly"] = jpoly(e.field()->min_poly());
    return j;
}

json jcertificate(const MomentCertificate& c) {
    json j;
    if (std::holds_alternative<StructuralCertificate>(c)) {
        const auto& sc = std::get<StructuralCertificate>(c);
        j["kind"] = "structural";
        json terms = json::array();
        for (const auto& t : sc.terms) {
            json jt;
            jt["V"] = jpoly(t.V);
            jt["W"] = jpoly(t.W);
            terms.push_back(jt);
        }
        j["terms"] = terms;
    } else {
        const auto& cc = std::get<CheckedCertificate>(c);
        j["kind"] = "checked";
        j["K"] = cc.K;
        json vals = json::array();
        for (const auto& v : cc.values) vals.push_back(to_string(v));
        j["moments"] = vals;
        j["all_zero"] = cc.all_zero;
    }
    return j;
}

json jwitness(const EquivWitness& w) {
    json j;
    j["kind"] = w.kind == EquivWitness::Kind::Power ? "power" : "chebyshev";
    j["n"] = w.n;
    if (w.mu) j["mu"] = jmap(*w.mu);
    if (w.nu) j["nu"] = jmap(*w.nu);
    if (w.extension_disc) j["disc"] = to_string(*w.extension_disc);
    return j;
}

std::string witness_text(const EquivWitness& w) {
    std::string s = w.kind == EquivWitness::Kind::Power ? "power" : "chebyshev";
    s += " n=" + std::to_string(w.n);
    if (w.materialized()) {
        s += " mu=(" + poly_to_string(w.mu->to_poly()) + ")";
        s += " nu=(" + poly_to_string(w.nu->to_poly()) + ")";
    } else if (w.extension_disc) {
        s += " over quadratic extension disc=" + to_string(*w.extension_disc);
    }
    return s;
}

Endpoints parse_endpoints(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("endpoints must be 'a,b'", 0);
    std::string sa = text.substr(0, comma);
    std::string sb = text.substr(comma + 1);
    auto is_node_text = [](const std::string& s) {
        return s.find("cos(") != std::string::npos;
    };
    bool na = is_node_text(sa), nb = is_node_text(sb);
    if (na != nb)
        throw EndpointError("endpoints must both be rational or both nodes");
    if (na) return Endpoints::nodes(parse_node(sa), parse_node(sb));
    return Endpoints::rationals(parse_rational(sa), parse_rational(sb));
}

Poly parse_arg(const std::string& src, std::ostream& err) {
    ParsedPoly p = parse_poly_checked(src);
    for (const auto& w : p.warnings) err << "warning: " << w << "\n";
    return p.value;
}

json classification_json(const Classification& c, const Endpoints& e) {
    json j;
    j["case"] = c.case_number;
    json w;
    if (c.case1) {
        w["P_tilde"] = jpoly(c.case1->p_tilde);
        w["Q_tilde"] = jpoly(c.case1->q_tilde);
        w["W"] = jpoly(c.case1->W);
    } else if (c.case2) {
        w["V1"] = jpoly(c.case2->V1);
        w["V2"] = jpoly(c.case2->V2);
        w["R"] = jpoly(c.case2->R);
        w["W"] = jpoly(c.case2->W);
        w["U"] = jpoly(c.case2->U);
        w["s"] = c.case2->s;
        w["n"] = c.case2->n;
    } else if (c.case3) {
        w["V1"] = jpoly(c.case3->V1);
        w["V2"] = jpoly(c.case3->V2);
        w["U"] = jpoly(c.case3->U);
        w["W"] = jpoly(c.case3->W);
        w["n"] = c.case3->n;
        w["m"] = c.case3->m;
    } else if (c.case4) {
        w["V1"] = jpoly(c.case4->V1);
        w["V2"] = jpoly(c.case4->V2);
        w["V3"] = jpoly(c.case4->V3);
        w["U"] = jpoly(c.case4->U);
        w["W"] = jpoly(c.case4->W);
        w["R"] = jpoly(c.case4->R);
        w["n"] = c.case4->n;
        w["m"] = c.case4->m;
    } else {
        w["status"] = c.status == UnclassifiedStatus::kNotASolution
                          ? "not_a_solution"
                          : "beyond_classifier";
    }
    j["witnesses"] = w;
    j["endpoints"] = jendpoints(e);
    j["certificate"] = jcertificate(c.certificate);
    return j;
}

void print_classification(const Classification& c, std::ostream& out) {
    out << "case " << c.case_number << "\n";
    if (c.case1) {
        out << "W = " << poly_to_string(c.case1->W) << "\n";
        out << "P_tilde = " << poly_to_string(c.case1->p_tilde) << "\n";
        out << "Q_tilde = " << poly_to_string(c.case1->q_tilde) << "\n";
    } else if (c.case2) {
        out << "n = " << c.case2->n << ", s = " << c.case2->s << "\n";
        out << "R = " << poly_to_string(c.case2->R) << "\n";
        out << "W = " << poly_to_string(c.case2->W) << "\n";
        out << "U = " << poly_to_string(c.case2->U) << "\n";
        out << "V1 = " << poly_to_string(c.case2->V1) << "\n";
        out << "V2 = " << poly_to_string(c.case2->V2) << "\n";
    } else if (c.case3) {
        out << "n = " << c.case3->n << ", m = " << c.case3->m << "\n";
        out << "W = " << poly_to_string(c.case3->W) << "\n";
        out << "U = " << poly_to_string(c.case3->U) << "\n";
        out << "V1 = " << poly_to_string(c.case3->V1) << "\n";
        out << "V2 = " << poly_to_string(c.case3->V2) << "\n";
    } else if (c.case4) {
        out << "n = " << c.case4->n << ", m = " << c.case4->m << "\n";
        out << "R = " << poly_to_string(c.case4->R) << "\n";
        out << "W = " << poly_to_string(c.case4->W) << "\n";
        out << "U = " << poly_to_string(c.case4->U) << "\n";
        out << "V1 = " << poly_to_string(c.case4->V1) << "\n";
        out << "V2 = " << poly_to_string(c.case4->V2) << "\n";
        out << "V3 = " << poly_to_string(c.case4->V3) << "\n";
    } else {
        out << (c.status == UnclassifiedStatus::kNotASolution
                    ? "not a solution: nonzero moment found\n"
                    : "all checked moments vanish; outside classifier reach\n");
    }
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(std::stol(piece));
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact polynomial composition and moment-problem toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool use_json = false;
    bool serial = false;
    app.add_flag("--json", use_json, "emit JSON output");
    app.add_flag("--serial", serial, "disable the OpenMP kernels");

    // cheb
    auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev polynomial T_n");
    long cheb_n = 0;
    cheb_cmd->add_option("n", cheb_n, "index")->required();

    // compose
    auto* compose_cmd = app.add_subcommand("compose", "A @ B");
    std::string comp_a, comp_b;
    compose_cmd->add_option("A", comp_a)->required();
    compose_cmd->add_option("B", comp_b)->required();

    // decompose
    auto* decompose_cmd =
        app.add_subcommand("decompose", "right factor of a given degree");
    std::string dec_f;
    long dec_d = 0;
    decompose_cmd->add_option("F", dec_f)->required();
    decompose_cmd->add_option("-d,--degree", dec_d, "inner degree")->required();

    // factors
    auto* factors_cmd = app.add_subcommand("factors", "all normalized right factors");
    std::string fac_f, fac_file;
    factors_cmd->add_option("F", fac_f);
    factors_cmd->add_option("--file", fac_file, "one expression per line");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "gcd-degree reduction");
    std::vector<std::string> red_p, red_w;
    reduce_cmd->add_option("-P", red_p, "outer factors")->required();
    reduce_cmd->add_option("-W", red_w, "inner factors")->required();

    // ritt2
    auto* ritt_cmd = app.add_subcommand("ritt2", "second Ritt theorem normal form");
    std::string r_p1, r_w1, r_p2, r_w2;
    ritt_cmd->add_option("--p1", r_p1)->required();
    ritt_cmd->add_option("--w1", r_w1)->required();
    ritt_cmd->add_option("--p2", r_p2)->required();
    ritt_cmd->add_option("--w2", r_w2)->required();

    // equiv
    auto* equiv_cmd =
        app.add_subcommand("equiv", "linear equivalence to a power or Chebyshev");
    std::string eq_f, eq_file;
    equiv_cmd->add_option("F", eq_f);
    equiv_cmd->add_option("--file", eq_file, "one expression per line");

    // moments
    auto* moments_cmd = app.add_subcommand("moments", "moments of P^k dQ");
    std::string m_p, m_q, m_e;
    long m_k = 10;
    moments_cmd->add_option("-P", m_p)->required();
    moments_cmd->add_option("-Q", m_q)->required();
    moments_cmd->add_option("--endpoints", m_e)->required();
    moments_cmd->add_option("-K", m_k, "highest moment order");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "structural certificate");
    std::string c_p, c_q, c_w, c_e;
    certify_cmd->add_option("-P", c_p)->required();
    certify_cmd->add_option("-Q", c_q)->required();
    certify_cmd->add_option("-W", c_w)->required();
    certify_cmd->add_option("--endpoints", c_e)->required();

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "moment-problem solution classifier");
    std::string cl_p, cl_q, cl_e;
    long cl_k = -1;
    classify_cmd->add_option("-P", cl_p)->required();
    classify_cmd->add_option("-Q", cl_q)->required();
    classify_cmd->add_option("--endpoints", cl_e)->required();
    classify_cmd->add_option("-K", cl_k, "fallback moment bound");

    // merge
    auto* merge_cmd = app.add_subcommand("merge", "merge reducible terms");
    std::string mg_p, mg_e;
    std::vector<std::string> mg_v, mg_w;
    merge_cmd->add_option("-P", mg_p)->required();
    merge_cmd->add_option("--endpoints", mg_e)->required();
    merge_cmd->add_option("-V", mg_v, "term V_i")->required();
    merge_cmd->add_option("-W", mg_w, "term W_i")->required();

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "solution-family generators");
    std::string gen_which, gen_r = "0", gen_v1 = "x", gen_v2 = "x", gen_v3 = "x";
    std::string gen_e, gen_a = "1";
    long gen_n = 2, gen_m = 3, gen_s = 1;
    gen_cmd->add_option("case", gen_which, "case2 | case3 | case4")->required();
    gen_cmd->add_option("-n", gen_n);
    gen_cmd->add_option("-m", gen_m);
    gen_cmd->add_option("-s", gen_s);
    gen_cmd->add_option("-R", gen_r);
    gen_cmd->add_option("--v1", gen_v1);
    gen_cmd->add_option("--v2", gen_v2);
    gen_cmd->add_option("--v3", gen_v3);
    gen_cmd->add_option("-a", gen_a, "rational endpoint (case2)");
    gen_cmd->add_option("--endpoints", gen_e, "node endpoints (case3/case4)");

    // skun
    auto* skun_cmd = app.add_subcommand("skun", "Chebyshev endpoint lemma checks");
    std::string sk_part, sk_m, sk_e;
    skun_cmd->add_option("-p,--part", sk_part, "a | b | c")->required();
    skun_cmd->add_option("-m", sk_m, "comma-separated moduli")->required();
    skun_cmd->add_option("--endpoints", sk_e)->required();

    // remark
    auto* remark_cmd =
        app.add_subcommand("remark", "non-representability check for the 3-term family");
    long rk_m = 5, rk_n = 7;
    std::string rk_r = "x - 1";
    remark_cmd->add_option("-m", rk_m)->required();
    remark_cmd->add_option("-n", rk_n)->required();
    remark_cmd->add_option("-R", rk_r);

    std::vector<const char*> argv;
    argv.push_back("pmp");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (serial) exec::set_parallel_enabled(false);

    try {
        if (cheb_cmd->parsed()) {
            Poly t = chebyshev(cheb_n);
            if (use_json) {
                json j;
                j["n"] = cheb_n;
                j["poly"] = jpoly(t);
                out << j.dump(2) << "\n";
            } else {
                out << poly_to_string(t) << "\n";
            }
        } else if (compose_cmd->parsed()) {
            Poly r = compose(parse_arg(comp_a, err), parse_arg(comp_b, err));
            if (use_json) {
                json j;
                j["result"] = jpoly(r);
                out << j.dump(2) << "\n";
            } else {
                out << poly_to_string(r) << "\n";
            }
        } else if (decompose_cmd->parsed()) {
            auto rf = right_factor(parse_arg(dec_f, err), dec_d);
            if (use_json) {
                json j;
                j["degree"] = dec_d;
                j["found"] = rf.has_value();
                if (rf) {
                    j["inner"] = jpoly(rf->inner);
                    j["outer"] = jpoly(rf->outer);
                }
                out << j.dump(2) << "\n";
            } else if (rf) {
                out << "inner: " << poly_to_string(rf->inner) << "\n";
                out << "outer: " << poly_to_string(rf->outer) << "\n";
            } else {
                out << "no right factor of degree " << dec_d << "\n";
            }
        } else if (factors_cmd->parsed()) {
            std::vector<std::string> inputs;
            if (!fac_file.empty())
                inputs = read_lines(fac_file);
            else if (!fac_f.empty())
                inputs.push_back(fac_f);
            else
                throw Error("factors needs an expression or --file");
            for (const auto& src : inputs) {
                auto fs = all_right_factors(parse_arg(src, err));
                if (use_json) {
                    json j;
                    json m;
                    for (const auto& [d, w] : fs)
                        m[std::to_string(d)] = w ? jpoly(*w) : json(nullptr);
                    j["factors"] = m;
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& [d, w] : fs)
                        out << d << ": " << (w ? poly_to_string(*w) : "-") << "\n";
                }
            }
        } else if (reduce_cmd->parsed()) {
            std::vector<Poly> ps, ws;
            for (const auto& s : red_p) ps.push_back(parse_arg(s, err));
            for (const auto& s : red_w) ws.push_back(parse_arg(s, err));
            ReducedTuple t = reduce_coprime(ps, ws);
            if (use_json) {
                json j;
                j["U"] = jpoly(t.U);
                j["V"] = jpoly(t.V);
                json jp = json::array(), jw = json::array();
                for (const auto& p : t.p_tilde) jp.push_back(jpoly(p));
                for (const auto& w : t.w_tilde) jw.push_back(jpoly(w));
                j["P_tilde"] = jp;
                j["W_tilde"] = jw;
                out << j.dump(2) << "\n";
            } else {
                out << "U = " << poly_to_string(t.U) << "\n";
                out << "V = " << poly_to_string(t.V) << "\n";
                for (std::size_t i = 0; i < t.p_tilde.size(); ++i)
                    out << "P_tilde_" << i + 1 << " = " << poly_to_string(t.p_tilde[i])
                        << "\n";
                for (std::size_t i = 0; i < t.w_tilde.size(); ++i)
                    out << "W_tilde_" << i + 1 << " = " << poly_to_string(t.w_tilde[i])
                        << "\n";
            }
        } else if (ritt_cmd->parsed()) {
            RittForm f = ritt2_normal_form(parse_arg(r_p1, err), parse_arg(r_w1, err),
                                           parse_arg(r_p2, err), parse_arg(r_w2, err));
            json j;
            j["swapped"] = f.swapped;
            if (std::holds_alternative<RittFirstKind>(f.form)) {
                const auto& k = std::get<RittFirstKind>(f.form);
                j["kind"] = "first";
                j["nu"] = jmap(k.nu);
                j["sigma1"] = jmap(k.sigma1);
                j["sigma2"] = jmap(k.sigma2);
                j["mu"] = jmap(k.mu);
                j["R"] = jpoly(k.R);
                j["s"] = k.s;
                j["n"] = k.n;
            } else {
                const auto& k = std::get<RittSecondKind>(f.form);
                j["kind"] = "second";
                j["nu"] = jmap(k.nu);
                j["sigma1"] = jmap(k.sigma1);
                j["sigma2"] = jmap(k.sigma2);
                j["mu"] = jmap(k.mu);
                j["m"] = k.m;
                j["n"] = k.n;
            }
            if (use_json) {
                out << j.dump(2) << "\n";
            } else {
                out << (std::holds_alternative<RittFirstKind>(f.form)
                            ? "first kind (power side)"
                            : "second kind (Chebyshev pair)")
                    << (f.swapped ? ", roles swapped" : "") << "\n";
                if (std::holds_alternative<RittFirstKind>(f.form)) {
                    const auto& k = std::get<RittFirstKind>(f.form);
                    out << "n = " << k.n << ", s = " << k.s
                        << ", R = " << poly_to_string(k.R) << "\n";
                } else {
                    const auto& k = std::get<RittSecondKind>(f.form);
                    out << "n = " << k.n << ", m = " << k.m << "\n";
                }
            }
        } else if (equiv_cmd->parsed()) {
            std::vector<std::string> inputs;
            if (!eq_file.empty())
                inputs = read_lines(eq_file);
            else if (!eq_f.empty())
                inputs.push_back(eq_f);
            else
                throw Error("equiv needs an expression or --file");
            for (const auto& src : inputs) {
                Poly p = parse_arg(src, err);
                std::optional<EquivWitness> w;
                if (p.degree() >= 2) w = power_equiv(p);
                if (!w && p.degree() >= 3) w = cheb_equiv(p);
                if (use_json) {
                    json j;
                    j["input"] = jpoly(p);
                    j["witness"] = w ? jwitness(*w) : json(nullptr);
                    out << j.dump(2) << "\n";
                } else {
                    out << (w ? witness_text(*w) : "none") << "\n";
                }
            }
        } else if (moments_cmd->parsed()) {
            Endpoints e = parse_endpoints(m_e);
            CheckedCertificate c =
                moments_vanish(parse_arg(m_p, err), parse_arg(m_q, err), e, m_k);
            if (use_json) {
                json j = jcertificate(MomentCertificate(c));
                j["endpoints"] = jendpoints(e);
                out << j.dump(2) << "\n";
            } else {
                if (e.is_node())
                    out << "field: w satisfies "
                        << poly_to_string(e.field()->min_poly()) << " = 0\n";
                for (std::size_t i = 0; i < c.values.size(); ++i)
                    out << (i ? ", " : "") << to_string(c.values[i]);
                out << "\n";
            }
        } else if (certify_cmd->parsed()) {
            Endpoints e = parse_endpoints(c_e);
            Poly p = parse_arg(c_p, err), q = parse_arg(c_q, err);
            StructuralCertificate cert =
                certify_reducible(p, q, parse_arg(c_w, err), e);
            if (use_json) {
                out << jcertificate(MomentCertificate(cert)).dump(2) << "\n";
            } else {
                out << "reducible: P_tilde = " << poly_to_string(cert.p_quotients[0])
                    << ", Q_tilde = " << poly_to_string(cert.terms[0].V) << "\n";
            }
        } else if (classify_cmd->parsed()) {
            Endpoints e = parse_endpoints(cl_e);
            Classification c =
                classify_solution(parse_arg(cl_p, err), parse_arg(cl_q, err), e, cl_k);
            if (use_json)
                out << classification_json(c, e).dump(2) << "\n";
            else
                print_classification(c, out);
        } else if (merge_cmd->parsed()) {
            if (mg_v.size() != mg_w.size())
                throw Error("merge needs matching -V and -W lists");
            Endpoints e = parse_endpoints(mg_e);
            std::vector<ReducibleTerm> terms;
            for (std::size_t i = 0; i < mg_v.size(); ++i)
                terms.push_back({parse_arg(mg_v[i], err), parse_arg(mg_w[i], err)});
            MergeResult r = merge_reducible(parse_arg(mg_p, err), std::move(terms), e);
            if (r.length_warning)
                err << "warning: more than three terms survived merging\n";
            if (use_json) {
                json j;
                json terms_j = json::array();
                for (const auto& t : r.terms) {
                    json jt;
                    jt["V"] = jpoly(t.V);
                    jt["W"] = jpoly(t.W);
                    terms_j.push_back(jt);
                }
                j["terms"] = terms_j;
                j["length_warning"] = r.length_warning;
                out << j.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < r.terms.size(); ++i) {
                    out << "term " << i + 1 << ": V = " << poly_to_string(r.terms[i].V)
                        << ", W = " << poly_to_string(r.terms[i].W) << "\n";
                }
            }
        } else if (gen_cmd->parsed()) {
            GeneratedSolution g = [&] {
                if (gen_which == "case2")
                    return gen_case2(gen_n, gen_s, parse_arg(gen_r, err),
                                     parse_arg(gen_v1, err), parse_arg(gen_v2, err),
                                     parse_rational(gen_a));
                if (gen_which == "case3")
                    return gen_case3(gen_n, gen_m, parse_arg(gen_v1, err),
                                     parse_arg(gen_v2, err), parse_endpoints(gen_e));
                if (gen_which == "case4")
                    return gen_case4(gen_n, gen_m, parse_arg(gen_r, err),
                                     parse_arg(gen_v1, err), parse_arg(gen_v2, err),
                                     parse_arg(gen_v3, err), parse_endpoints(gen_e));
                throw Error("unknown generator '" + gen_which + "'");
            }();
            if (use_json) {
                json j;
                j["P"] = jpoly(g.P);
                j["Q"] = jpoly(g.Q);
                j["endpoints"] = jendpoints(g.endpoints);
                j["certificate"] = jcertificate(MomentCertificate(g.certificate));
                out << j.dump(2) << "\n";
            } else {
                out << "P = " << poly_to_string(g.P) << "\n";
                out << "Q = " << poly_to_string(g.Q) << "\n";
                out << "endpoints: " << endpoint_text(g.endpoints, true) << ", "
                    << endpoint_text(g.endpoints, false) << "\n";
            }
        } else if (skun_cmd->parsed()) {
            Endpoints e = parse_endpoints(sk_e);
            std::vector<long> ms = parse_long_list(sk_m);
            json j;
            std::string text;
            if (sk_part == "a") {
                SkunPartA r = skun_check_a(ms, e);
                j["part"] = "a";
                j["pair"] = {r.i1 + 1, r.i2 + 1};
                j["l"] = r.l;
                text = "pair (" + std::to_string(r.i1 + 1) + "," +
                       std::to_string(r.i2 + 1) + "), l = " + std::to_string(r.l);
            } else if (sk_part == "b") {
                if (ms.size() != 2) throw Error("part b takes two moduli");
                SkunPartB r = skun_check_b(ms[0], ms[1], e);
                j["part"] = "b";
                j["a_is_zero"] = r.a_is_zero;
                text = r.a_is_zero ? "a = 0" : "a != 0";
            } else if (sk_part == "c") {
                if (ms.size() != 2) throw Error("part c takes two moduli");
                SkunPartC r = skun_check_c(ms[0], ms[1], e);
                j["part"] = "c";
                if (r.a_equals_minus_b) {
                    j["disjunct"] = "a = -b";
                    text = "a = -b";
                } else {
                    j["disjunct"] = "T_{m1 m2}(a) = " + to_string(*r.t_value);
                    text = "T_{m1*m2}(a) = " + to_string(*r.t_value);
                }
            } else {
                throw Error("part must be a, b or c");
            }
            if (use_json)
                out << j.dump(2) << "\n";
            else
                out << text << "\n";
        } else if (remark_cmd->parsed()) {
            RemarkReport r = verify_remark_example(rk_m, rk_n, parse_arg(rk_r, err));
            if (use_json) {
                json j;
                j["primality_hypothesis_met"] = r.primality_hypothesis_met;
                j["endpoints"] = jendpoints(r.endpoints);
                j["factor_degrees"] = r.factor_degrees;
                j["endpoint_kept_degrees"] = r.endpoint_kept_degrees;
                json pairs = json::array();
                for (const auto& [d1, d2, feas] : r.pair_feasible)
                    pairs.push_back({{"d1", d1}, {"d2", d2}, {"feasible", feas}});
                j["pair_systems"] = pairs;
                j["two_term_impossible"] = r.two_term_impossible;
                j["triple_feasible"] = r.triple_feasible;
                out << j.dump(2) << "\n";
            } else {
                out << "primality hypothesis met: "
                    << (r.primality_hypothesis_met ? "yes" : "no") << "\n";
                out << "endpoints: " << endpoint_text(r.endpoints, true) << ", "
                    << endpoint_text(r.endpoints, false) << "\n";
                out << "factors kept by W(a)=W(b): ";
                for (std::size_t i = 0; i < r.endpoint_kept_degrees.size(); ++i)
                    out << (i ? ", " : "") << r.endpoint_kept_degrees[i];
                out << "\n";
                for (const auto& [d1, d2, feas] : r.pair_feasible)
                    out << "pair (" << d1 << "," << d2 << "): "
                        << (feas ? "feasible" : "infeasible") << "\n";
                out << "every 2-term system infeasible: "
                    << (r.two_term_impossible ? "yes" : "no") << "\n";
                out << "3-term system feasible: " << (r.triple_feasible ? "yes" : "no")
                    << "\n";
            }
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pmp
