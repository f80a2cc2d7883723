// Command-line surface: generation, verification, search, and class listing
// with machine-readable output. Exit codes: 0 success, 1 verification
// failure, 2 usage error, 3 domain error.

#include <CLI11.hpp>

#include <diosys/brute_force.hpp>
#include <diosys/curve_solutions.hpp>
#include <diosys/json_io.hpp>
#include <diosys/param_family.hpp>
#include <diosys/polygonal.hpp>
#include <diosys/quad_family.hpp>
#include <diosys/rational_param.hpp>
#include <diosys/residue_rules.hpp>
#include <diosys/verify.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using diosys::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : diosys::error {
    using diosys::error::error;
};

// ---- small parsers ----------------------------------------------------

std::pair<diosys::Integer, diosys::Integer> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            diosys::Integer v = diosys::parse_integer(text);
            return {v, v};
        }
        diosys::Integer lo = diosys::parse_integer(text.substr(0, dots));
        diosys::Integer hi = diosys::parse_integer(text.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range '" + text + "'");
        return {lo, hi};
    } catch (const diosys::parse_error&) {
        throw UsageError("range must be INT or LO..HI, got '" + text + "'");
    }
}

diosys::Form parse_form(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("form must be quad:A or cubic:A,B, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    try {
        if (kind == "quad") return diosys::QuadraticForm(diosys::parse_rational(args));
        if (kind == "cubic") {
            const auto comma = args.find(',');
            if (comma == std::string::npos) throw UsageError("cubic form needs a and b");
            return diosys::CubicForm(diosys::parse_integer(args.substr(0, comma)),
                                     diosys::parse_integer(args.substr(comma + 1)));
        }
    } catch (const diosys::parse_error& e) {
        throw UsageError(e.what());
    } catch (const diosys::construction_error& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown form kind '" + kind + "'");
}

std::vector<diosys::Rational> parse_tuple(const std::string& text) {
    std::vector<diosys::Rational> out;
    std::size_t pos = 0;
    try {
        while (pos <= text.size()) {
            const auto comma = text.find(',', pos);
            const std::string piece =
                comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
            out.push_back(diosys::parse_rational(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } catch (const diosys::parse_error& e) {
        throw UsageError(e.what());
    }
    if (out.size() != 7 && out.size() != 9)
        throw UsageError("tuple needs 7 entries z,x,y,u,v,p,q or 9 with r,s");
    return out;
}

// ---- output -----------------------------------------------------------

void render_table(const Json& j, std::ostream& os, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_array() && !j.empty() && j.front().is_object()) {
        std::vector<std::string> keys;
        for (auto it = j.front().begin(); it != j.front().end(); ++it) keys.push_back(it.key());
        std::vector<std::size_t> widths;
        for (const auto& k : keys) {
            std::size_t w = k.size();
            for (const auto& row : j) {
                const Json cell = row.contains(k) ? row.at(k) : Json();
                w = std::max(w, (cell.is_string() ? cell.get<std::string>() : cell.dump()).size());
            }
            widths.push_back(w);
        }
        os << pad;
        for (std::size_t i = 0; i < keys.size(); ++i)
            os << std::left << std::setw(static_cast<int>(widths[i]) + 2) << keys[i];
        os << "\n";
        for (const auto& row : j) {
            os << pad;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                const Json cell = row.contains(keys[i]) ? row.at(keys[i]) : Json();
                const std::string s = cell.is_string() ? cell.get<std::string>() : cell.dump();
                os << std::left << std::setw(static_cast<int>(widths[i]) + 2) << s;
            }
            os << "\n";
        }
        return;
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const bool nested = it.value().is_object() ||
                                (it.value().is_array() && !it.value().empty() &&
                                 it.value().front().is_object());
            if (nested) {
                os << pad << it.key() << ":\n";
                render_table(it.value(), os, indent + 2);
            } else {
                const auto& v = it.value();
                os << pad << it.key() << ": "
                   << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
        return;
    }
    os << pad << j.dump() << "\n";
}

void emit(const Json& j, const std::string& output) {
    if (output == "table")
        render_table(j, std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

// ---- subcommand handlers ----------------------------------------------

struct CommonOpts {
    std::string output = "json";
};

int run_generate_quad(const std::string& a_text, const std::string& t_text,
                      std::size_t family_index, bool all_families, const CommonOpts& common) {
    const diosys::Integer a = diosys::parse_integer(a_text);
    const auto [t_lo, t_hi] = parse_range(t_text);
    const auto table = diosys::load_residue_table(diosys::default_residue_table_path());
    const auto families = diosys::families_for(a, table);
    if (families.empty())
        throw diosys::construction_error("no residue rule covers a = " + a.str());

    auto tuples_json = [&, t_lo = t_lo, t_hi = t_hi](const diosys::QuadFamily& fam) {
        Json arr = Json::array();
        for (diosys::Integer t = t_lo; t <= t_hi; ++t) {
            const auto tup = diosys::instantiate(fam, t);
            if (!diosys::verify_system(tup).ok())
                throw diosys::construction_error("generated tuple failed verification");
            Json row{{"t", diosys::to_decimal(t)}};
            row.update(diosys::tuple_to_json(tup));
            arr.push_back(std::move(row));
        }
        return arr;
    };

    if (all_families) {
        Json out = Json::array();
        for (const auto& fam : families) {
            out.push_back(Json{{"pell_level", fam.rule.pell_level},
                               {"a_class", diosys::to_decimal(fam.rule.a_residue) + " mod " +
                                               diosys::to_decimal(fam.rule.a_modulus)},
                               {"c_offset", diosys::to_decimal(fam.c_offset)},
                               {"tuples", tuples_json(fam)}});
        }
        emit(out, common.output);
        return kExitOk;
    }
    if (family_index >= families.size())
        throw UsageError("family index out of range; a = " + a.str() + " has " +
                         std::to_string(families.size()) + " families");
    emit(tuples_json(families[family_index]), common.output);
    return kExitOk;
}

int run_generate_param(const std::string& a_text, const std::string& m_text,
                       const std::string& n_text, const std::string& k_text,
                       const std::string& S_text, const std::string& T_text,
                       const CommonOpts& common) {
    const diosys::Integer a = diosys::parse_integer(a_text);
    const diosys::Integer m = diosys::parse_integer(m_text);
    const diosys::Integer n = diosys::parse_integer(n_text);
    const diosys::Integer S = S_text.empty() ? diosys::Integer(0) : diosys::parse_integer(S_text);

    const auto residues = diosys::solve_k(a, m, n);
    const diosys::Integer period = diosys::ParamConfig(a, m, n, 0).period();
    Json out{{"a", diosys::to_decimal(a)},
             {"m", diosys::to_decimal(m)},
             {"n", diosys::to_decimal(n)},
             {"modulus", diosys::to_decimal(period)}};
    Json res = Json::array();
    for (const auto& k : residues) res.push_back(diosys::to_decimal(k));
    out["residues"] = std::move(res);

    std::vector<diosys::Integer> ks;
    if (!k_text.empty())
        ks.push_back(diosys::parse_integer(k_text));
    else
        ks = residues;

    Json fams = Json::array();
    for (const auto& k : ks) {
        const auto sol = diosys::build_family(diosys::ParamConfig(a, m, n, k), S);
        Json fam{{"k", diosys::to_decimal(k)}, {"S", diosys::to_decimal(S)}};
        fam["polynomials"] = Json{
            {"z", diosys::to_json(sol.z)}, {"x", diosys::to_json(sol.x)},
            {"y", diosys::to_json(sol.y)}, {"u", diosys::to_json(sol.u)},
            {"v", diosys::to_json(sol.v)}, {"p", diosys::to_json(sol.p)},
            {"q", diosys::to_json(sol.q)}};
        if (!T_text.empty()) {
            const auto [t_lo, t_hi] = parse_range(T_text);
            Json arr = Json::array();
            for (diosys::Integer T = t_lo; T <= t_hi; ++T) {
                const auto tup = diosys::instantiate(sol, T);
                if (!diosys::verify_system(tup).ok())
                    throw diosys::construction_error("generated tuple failed verification");
                Json row{{"T", diosys::to_decimal(T)}};
                row.update(diosys::tuple_to_json(tup));
                arr.push_back(std::move(row));
            }
            fam["tuples"] = std::move(arr);
        }
        fams.push_back(std::move(fam));
    }
    out["families"] = std::move(fams);
    emit(out, common.output);
    return kExitOk;
}

int run_generate_rational(const std::string& a, const std::string& k, const std::string& t,
                          const std::string& w, const std::string& q, const std::string& m,
                          const CommonOpts& common) {
    diosys::FiveParams ps{diosys::parse_rational(a), diosys::parse_rational(k),
                          diosys::parse_rational(t), diosys::parse_rational(w),
                          diosys::parse_rational(q), diosys::parse_rational(m)};
    const auto tup = diosys::solve_rational(ps);
    const auto rep = diosys::verify_system(tup);
    Json out{{"params",
              Json{{"a", diosys::to_decimal(ps.a)}, {"k", diosys::to_decimal(ps.k)},
                   {"t", diosys::to_decimal(ps.t)}, {"w", diosys::to_decimal(ps.w)},
                   {"q", diosys::to_decimal(ps.q)}, {"m", diosys::to_decimal(ps.m)}}},
             {"tuple", diosys::tuple_to_json(tup)},
             {"report", diosys::report_to_json(rep)}};
    emit(out, common.output);
    return rep.ok() ? kExitOk : kExitVerifyFailure;
}

int run_generate_cubic(const std::string& a_text, const std::string& b_text, unsigned multiple,
                       const std::string& specialize, const CommonOpts& common) {
    const diosys::Integer a = diosys::parse_integer(a_text);
    const diosys::Integer b = diosys::parse_integer(b_text);
    const auto sol = diosys::compose_full(a, b, multiple);

    Json entries;
    entries["z"] = diosys::to_json(sol.z_of_Q, "Q");
    entries["x"] = diosys::to_json(sol.x, "T");
    entries["y"] = diosys::to_json(sol.y, "T");
    entries["u"] = diosys::to_json(sol.u, "T");
    entries["v"] = diosys::to_json(sol.v, "T");
    entries["p"] = diosys::to_json(sol.p_of_Q, "Q");
    entries["q"] = diosys::to_json(diosys::RatFunc(diosys::RatPoly::variable("q")), "q");
    entries["r"] = diosys::to_json(sol.r, "T");
    entries["s"] = diosys::to_json(sol.s, "T");

    Json notes;
    for (const auto kind : {diosys::CurveKind::sum, diosys::CurveKind::difference,
                            diosys::CurveKind::product}) {
        const auto data = diosys::make_curve(kind, a, b);
        const char* name = kind == diosys::CurveKind::sum          ? "sum"
                           : kind == diosys::CurveKind::difference ? "difference"
                                                                   : "product";
        if (!data.note.empty()) notes[name] = data.note;
    }

    Json out{{"a", diosys::to_decimal(a)},
             {"b", diosys::to_decimal(b)},
             {"multiple", multiple},
             {"parameter", "q"},
             {"intermediates", Json{{"Q", "q(q+a)(q+b)"}, {"T", "z as a function of Q"}}},
             {"entries", std::move(entries)}};
    if (!notes.empty()) out["curve_notes"] = std::move(notes);

    int exit_code = kExitOk;
    if (!specialize.empty()) {
        const diosys::Rational qv = diosys::parse_rational(specialize);
        const auto tup = sol.specialize(qv);
        const auto rep = diosys::verify_system(tup);
        out["specialized"] = Json{{"q", diosys::to_decimal(qv)},
                                  {"tuple", diosys::tuple_to_json(tup)},
                                  {"report", diosys::report_to_json(rep)}};
        if (!rep.ok()) exit_code = kExitVerifyFailure;
    }
    emit(out, common.output);
    return exit_code;
}

int run_verify(const std::string& form_text, const std::string& tuple_text,
               const CommonOpts& common) {
    const diosys::Form form = parse_form(form_text);
    const auto entries = parse_tuple(tuple_text);
    diosys::SolutionTuple tup{form,       entries[0], entries[1], entries[2],   entries[3],
                              entries[4], entries[5], entries[6], std::nullopt, std::nullopt};
    if (entries.size() == 9) {
        tup.r = entries[7];
        tup.s = entries[8];
    }
    const auto rep = diosys::verify_system(tup);
    Json out{{"form", form_text},
             {"tuple", diosys::tuple_to_json(tup)},
             {"report", diosys::report_to_json(rep)}};
    emit(out, common.output);
    return rep.ok() ? kExitOk : kExitVerifyFailure;
}

int run_search(const std::string& form_text, const std::string& bound_text, int jobs,
               const CommonOpts& common) {
    const diosys::Form form = parse_form(form_text);
    const auto* quad = std::get_if<diosys::QuadraticForm>(&form);
    if (!quad || !diosys::is_integral(quad->a))
        throw UsageError("search supports quad:A with integer A");
    const diosys::Integer a = numerator(quad->a);
    const diosys::Integer bound = diosys::parse_integer(bound_text);

    const auto tuples = diosys::brute_force(a, bound, jobs);
    Json arr = Json::array();
    for (const auto& t : tuples) {
        if (!diosys::verify_system(t).ok())
            throw diosys::construction_error("oracle produced an invalid tuple");
        arr.push_back(diosys::tuple_to_json(t));
    }
    Json out{{"a", diosys::to_decimal(a)},
             {"bound", diosys::to_decimal(bound)},
             {"count", tuples.size()},
             {"tuples", std::move(arr)}};
    emit(out, common.output);
    return kExitOk;
}

int run_classes(int modulus, const CommonOpts& common) {
    if (modulus != 5 && modulus != 58 && modulus != 145)
        throw UsageError("supported moduli: 5, 58, 145");
    const auto table = diosys::load_residue_table(diosys::default_residue_table_path());
    Json res = Json::array();
    for (const auto& r : diosys::covered_classes(modulus, table))
        res.push_back(diosys::to_decimal(r));
    const char* provenance = modulus == 5 ? "level-1 Pell construction"
                                          : "level-2 Pell construction (extension table)";
    emit(Json{{"modulus", modulus}, {"residues", std::move(res)}, {"provenance", provenance}},
         common.output);
    return kExitOk;
}

int run_polygonal(const std::string& n_text, const std::string& k_text,
                  const std::string& l_text, const std::string& search_text,
                  const CommonOpts& common) {
    const diosys::Integer n_big = diosys::parse_integer(n_text);
    if (n_big < 3 || n_big > 1000000) throw UsageError("n must be in [3, 10^6]");
    const int n = static_cast<int>(n_big);

    if (!search_text.empty()) {
        const diosys::Integer bound = diosys::parse_integer(search_text);
        Json pairs = Json::array();
        for (const auto& [k, l] : diosys::hirose_search(n, bound))
            pairs.push_back(Json{{"k", diosys::to_decimal(k)}, {"l", diosys::to_decimal(l)}});
        emit(Json{{"n", n}, {"bound", diosys::to_decimal(bound)}, {"pairs", std::move(pairs)}},
             common.output);
        return kExitOk;
    }
    if (k_text.empty()) throw UsageError("polygonal needs --k or --search");
    const diosys::Integer k = diosys::parse_integer(k_text);
    if (l_text.empty()) {
        emit(Json{{"n", n},
                  {"k", diosys::to_decimal(k)},
                  {"value", diosys::to_decimal(diosys::polygonal(n, k))}},
             common.output);
        return kExitOk;
    }
    const diosys::Integer l = diosys::parse_integer(l_text);
    const bool holds = diosys::hirose_condition(n, k, l);
    emit(Json{{"n", n},
              {"k", diosys::to_decimal(k)},
              {"l", diosys::to_decimal(l)},
              {"hirose_condition", holds}},
         common.output);
    return holds ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generators and verifiers for the polynomial-value systems\n"
                 "f(z) = f(x)+f(y) = f(u)-f(v) = f(p)f(q) [= f(r)/f(s)]"};
    app.require_subcommand(1);

    CommonOpts common;

    std::string gq_a, gq_t = "0..0";
    std::size_t gq_family = 0;
    bool gq_all = false;
    auto* gq = app.add_subcommand("generate-quad",
                                  "integer families for f(X)=X(X+a) from residue rules");
    gq->add_option("--a", gq_a, "coefficient a (nonzero integer)")->required();
    gq->add_option("--t", gq_t, "parameter value or range LO..HI");
    gq->add_option("--family", gq_family, "family index (rules x offsets, default 0)");
    gq->add_flag("--all-families", gq_all, "emit every family for this a");
    gq->add_option("--output", common.output, "json|table");

    std::string gp_a, gp_m, gp_n, gp_k, gp_S, gp_T;
    auto* gp = app.add_subcommand("generate-param",
                                  "degree-3 parametric families via undetermined coefficients");
    gp->add_option("--a", gp_a, "coefficient a (nonzero integer)")->required();
    gp->add_option("--m", gp_m, "parameter m (1 <= m < n)")->required();
    gp->add_option("--n", gp_n, "parameter n")->required();
    gp->add_option("--k", gp_k, "specific k (default: every admissible residue)");
    gp->add_option("--S", gp_S, "residue shift index (default 0)");
    gp->add_option("--T", gp_T, "instantiate at T value or range LO..HI");
    gp->add_option("--output", common.output, "json|table");

    std::string gr_a, gr_k, gr_t, gr_w, gr_q, gr_m;
    auto* gr = app.add_subcommand("generate-rational",
                                  "five-parameter rational solution including f(r)/f(s)");
    gr->add_option("--a", gr_a, "nonzero rational a")->required();
    gr->add_option("--k", gr_k, "rational parameter k")->required();
    gr->add_option("--t", gr_t, "rational parameter t (not +-1)")->required();
    gr->add_option("--w", gr_w, "rational parameter w")->required();
    gr->add_option("--q", gr_q, "rational parameter q")->required();
    gr->add_option("--m", gr_m, "rational parameter m")->required();
    gr->add_option("--output", common.output, "json|table");

    std::string gc_a, gc_b, gc_specialize;
    unsigned gc_multiple = 2;
    auto* gc = app.add_subcommand("generate-cubic",
                                  "symbolic rational-function solution for f(X)=X(X+a)(X+b)");
    gc->add_option("--a", gc_a, "nonzero integer a")->required();
    gc->add_option("--b", gc_b, "nonzero integer b, b != a")->required();
    gc->add_option("--multiple", gc_multiple, "anchor multiple for the sum/difference parts");
    gc->add_option("--specialize", gc_specialize, "emit a concrete verified tuple at q=VALUE");
    gc->add_option("--output", common.output, "json|table");

    std::string v_form, v_tuple;
    auto* vf = app.add_subcommand("verify", "exact verification of a candidate tuple");
    vf->add_option("--form", v_form, "quad:A or cubic:A,B")->required();
    vf->add_option("--tuple", v_tuple, "z,x,y,u,v,p,q[,r,s]")->required();
    vf->add_option("--output", common.output, "json|table");

    std::string s_form, s_bound;
    int s_jobs = 1;
    auto* sc = app.add_subcommand("search", "exhaustive oracle over 1 <= z <= bound");
    sc->add_option("--form", s_form, "quad:A with integer A")->required();
    sc->add_option("--bound", s_bound, "z bound")->required();
    sc->add_option("--jobs", s_jobs, "worker threads (default 1)");
    sc->add_option("--output", common.output, "json|table");

    int c_modulus = 0;
    auto* cl = app.add_subcommand("classes", "covered residue classes of a");
    cl->add_option("--modulus", c_modulus, "5, 58, or 145")->required();
    cl->add_option("--output", common.output, "json|table");

    std::string p_n, p_k, p_l, p_search;
    auto* pg = app.add_subcommand("polygonal", "n-gonal numbers and the Hirose screen");
    pg->add_option("--n", p_n, "number of sides, n >= 3")->required();
    pg->add_option("--k", p_k, "index k");
    pg->add_option("--l", p_l, "check the Hirose condition against l");
    pg->add_option("--search", p_search, "search k <= bound for condition pairs");
    pg->add_option("--output", common.output, "json|table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (common.output != "json" && common.output != "table")
            throw UsageError("--output must be json or table");
        if (gq->parsed()) return run_generate_quad(gq_a, gq_t, gq_family, gq_all, common);
        if (gp->parsed()) return run_generate_param(gp_a, gp_m, gp_n, gp_k, gp_S, gp_T, common);
        if (gr->parsed()) return run_generate_rational(gr_a, gr_k, gr_t, gr_w, gr_q, gr_m, common);
        if (gc->parsed()) return run_generate_cubic(gc_a, gc_b, gc_multiple, gc_specialize, common);
        if (vf->parsed()) return run_verify(v_form, v_tuple, common);
        if (sc->parsed()) return run_search(s_form, s_bound, s_jobs, common);
        if (cl->parsed()) return run_classes(c_modulus, common);
        if (pg->parsed()) return run_polygonal(p_n, p_k, p_l, p_search, common);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const diosys::parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const diosys::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
