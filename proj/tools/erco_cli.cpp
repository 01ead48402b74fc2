// Command-line frontend. One subcommand per reproducible artifact: interval
// tables, phase transitions, inequality verification suites, the brute-force
// optimizer, coloring counts, constructions, and property checks. Output is
// deterministic for a fixed configuration; exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 budget exceeded.

#include "erco/counting.hpp"
#include "erco/qsolver.hpp"
#include "erco/sweeps.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

int g_precision = 12;

std::string fmt(double v, int digits = 0) {
    std::ostringstream out;
    out << std::setprecision(digits > 0 ? digits : g_precision) << v;
    return out.str();
}

std::string fixed12(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(g_precision) << v;
    return out.str();
}

std::string join(const std::vector<int>& xs, const std::string& sep) {
    std::ostringstream out;
    for (size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
    return out.str();
}

struct Output {
    std::string path;
    std::ostringstream buf;
    int flush_to(std::ostream& fallback) {
        if (path.empty()) {
            fallback << buf.str();
            return 0;
        }
        std::ofstream f(path);
        if (!f) {
            std::cerr << "cannot open output file: " << path << "\n";
            return 2;
        }
        f << buf.str();
        return 0;
    }
};

void print_table(const erco::IntervalTable& table, Output& out, const std::string& format) {
    if (format == "json") {
        out.buf << "[";
        for (size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            out.buf << (i ? "," : "") << "{\"s_lo\":" << row.s_lo << ",\"s_hi\":" << row.s_hi
                    << ",\"winners\":[" << join(row.winners, ",") << "]}";
        }
        out.buf << "]\n";
        return;
    }
    for (const auto& row : table.rows)
        out.buf << row.s_lo << ',' << row.s_hi << ',' << join(row.winners, "|") << '\n';
}

// Range argument "2..6" or a single value.
std::pair<long long, long long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long long v = std::stoll(text);
        return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

void print_solution(const erco::QSolution& sol, Output& out) {
    out.buf << "r " << sol.r << '\n';
    out.buf << "alpha";
    for (double a : sol.alpha) out.buf << ' ' << fixed12(a);
    out.buf << '\n';
    out.buf << "q " << fmt(sol.q) << '\n';
    out.buf << "contributions";
    for (double c : sol.contributions) out.buf << ' ' << fixed12(c);
    out.buf << '\n';
    out.buf << "feasible_t " << sol.feasible_t << '\n';
    out.buf << "basic " << (sol.is_basic ? "true" : "false") << '\n';
    out.buf << "color_labelings " << sol.color_labelings.str() << '\n';
    out.buf << "kkt_residual " << fmt(sol.cert.kkt_residual, 3) << '\n';
    out.buf << "support";
    for (int i : sol.cert.support) out.buf << ' ' << i + 1;
    out.buf << '\n';
    out.buf << erco::serialize_template(sol.phi);
}

int report_outcome(const erco::VerifyReport& rep, Output& out) {
    out.buf << rep.suite << ',' << rep.checked << ',' << rep.vacuous << ','
            << rep.failures.size() << ',' << fmt(rep.min_slack, 6) << '\n';
    for (const auto& f : rep.failures)
        std::cerr << "violation: " << f.lemma << " s=" << f.s << " r=" << f.r << " x=" << f.x
                  << " lhs=" << fmt(f.lhs) << " rhs=" << fmt(f.rhs) << '\n';
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations for edge colorings avoiding forbidden colored cliques"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path, format, emit = "summary";  // format: per-command default
    app.add_option("--out", out_path, "write results to a file instead of stdout");
    app.add_option("--format", format, "csv|json|text")->check(CLI::IsMember({"csv", "json", "text"}));
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    double budget = 1e7;
    app.add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);
    app.add_option("--precision", g_precision, "significant digits for real output")
        ->check(CLI::Range(1, 17));

    // rset
    auto* c_rset = app.add_subcommand("rset", "optimal part counts for one s");
    long long rset_s = 2;
    std::string rset_parity = "even";
    bool rset_full = false;
    c_rset->add_option("--s", rset_s)->required();
    c_rset->add_option("--parity", rset_parity)->check(CLI::IsMember({"even", "all"}));
    c_rset->add_flag("--full-scan", rset_full, "compare all r instead of the two candidates");

    // sweeps
    auto* c_sweep2 = app.add_subcommand("sweep-r2", "interval table of R_2(s)");
    auto* c_sweep = app.add_subcommand("sweep-r", "interval table of R(s)");
    long long sweep_max = 100;
    c_sweep2->add_option("--s-max", sweep_max)->required();
    long long sweep_max_all = 100;
    c_sweep->add_option("--s-max", sweep_max_all)->required();

    // sk
    auto* c_sk = app.add_subcommand("sk", "improper-clique phase transition s(k)");
    int sk_k = 3;
    bool sk_exact = false;
    long long sk_cap = 400000000;
    c_sk->add_option("--k", sk_k)->required();
    c_sk->add_flag("--exact", sk_exact);
    c_sk->add_option("--s-cap", sk_cap);

    // verify
    auto* c_verify = app.add_subcommand("verify", "inequality verification suites");
    std::string suite;
    long long v_smax = 0, v_smin = 0;
    int v_kmax = 9;
    c_verify->add_option("suite", suite,
                         "esr|gsr|hanalytic|gapprox|wbounds|rs|maxoflog|fcomp|t19|largepart|all")
        ->required();
    c_verify->add_option("--s-max", v_smax);
    c_verify->add_option("--s-min", v_smin);
    c_verify->add_option("--k-max", v_kmax);
    c_verify->add_option("--emit", emit, "summary|all")->check(CLI::IsMember({"summary", "all"}));

    // qsolve
    auto* c_qsolve = app.add_subcommand("qsolve", "brute-force search for Q_t(X)");
    std::string q_family, q_srange = "2";
    int q_rmax = 4, q_t = 2;
    c_qsolve->add_option("--family", q_family)->required();
    c_qsolve->add_option("--s", q_srange, "color count or range lo..hi")->required();
    c_qsolve->add_option("--r-max", q_rmax);
    c_qsolve->add_option("--t", q_t);

    // alpha
    auto* c_alpha = app.add_subcommand("alpha", "optimize weights for a template file");
    std::string a_file, a_mode = "support";
    c_alpha->add_option("template", a_file)->required();
    c_alpha->add_option("--mode", a_mode)->check(CLI::IsMember({"support", "replicator"}));

    // count
    auto* c_count = app.add_subcommand("count", "exact count of X-free colorings");
    std::string cnt_graph, cnt_family;
    long long cnt_s = 2;
    c_count->add_option("--graph", cnt_graph)->required();
    c_count->add_option("--family", cnt_family)->required();
    c_count->add_option("--s", cnt_s)->required();

    // construct
    auto* c_construct = app.add_subcommand("construct", "matching template and its counts");
    int con_r = 4;
    long long con_s = 27, con_n = 0;
    c_construct->add_option("--r", con_r)->required();
    c_construct->add_option("--s", con_s)->required();
    c_construct->add_option("--n", con_n, "emit the coloring count of the Turan graph T_r(n)");

    // props
    auto* c_props = app.add_subcommand("props", "property checks for basic optima");
    std::string p_family;
    long long p_s = 2;
    int p_rmax = 4;
    c_props->add_option("--family", p_family)->required();
    c_props->add_option("--s", p_s)->required();
    c_props->add_option("--r-max", p_rmax);

    // summary
    auto* c_summary = app.add_subcommand("summary", "optimal part counts, rates and partition counts for one s");
    long long sum_s = 2;
    c_summary->add_option("--s", sum_s)->required();

    // inspect
    auto* c_inspect = app.add_subcommand("inspect", "structural report for a template file");
    std::string ins_file, ins_family;
    int ins_t = 0;
    c_inspect->add_option("template", ins_file)->required();
    c_inspect->add_option("--family", ins_family, "check feasibility and maximality against this family");
    c_inspect->add_option("--t", ins_t, "multiplicity floor for the feasibility check");

    // plotdata
    auto* c_plot = app.add_subcommand("plotdata", "x,y series for the analytic curves");
    std::string plot_curve = "gtilde";
    long long plot_s = 300;
    double plot_xmin = 0, plot_xmax = 0, plot_step = 0.01;
    c_plot->add_option("--curve", plot_curve)->check(CLI::IsMember({"gtilde", "ftilde"}));
    c_plot->add_option("--s", plot_s);
    c_plot->add_option("--xmin", plot_xmin);
    c_plot->add_option("--xmax", plot_xmax);
    c_plot->add_option("--step", plot_step);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    out.path = out_path;
    int status = 0;
    try {
        erco::RowSink sink;
        if (emit == "all")
            sink = [&](const erco::CheckRow& row) {
                out.buf << row.lemma << ',' << row.s << ',' << row.r << ',' << fmt(row.x, 6) << ','
                        << fmt(row.lhs) << ',' << fmt(row.rhs) << ',' << fmt(row.slack, 6) << ','
                        << (row.ok ? "ok" : "fail") << '\n';
            };

        if (*c_rset) {
            erco::RSetResult rs =
                erco::R_set(rset_s, rset_parity == "even" ? erco::Parity::even : erco::Parity::all,
                            rset_full ? erco::RMode::full_scan : erco::RMode::candidates);
            if (format == "json") {
                out.buf << "{\"s\":" << rs.s << ",\"winners\":[" << join(rs.winners, ",")
                        << "],\"g\":" << fmt(rs.g) << "}\n";
            } else {
                out.buf << rs.s << ",{" << join(rs.winners, "|") << "}\n";
            }
        } else if (*c_sweep2) {
            print_table(erco::sweep_R2(sweep_max, workers), out, format);
        } else if (*c_sweep) {
            print_table(erco::sweep_R(sweep_max_all, workers), out, format);
        } else if (*c_sk) {
            erco::SkResult sk = erco::compute_sk(sk_k, sk_cap, sk_exact);
            if (!sk.found) {
                std::cerr << "s(k) not found below cap " << sk_cap << '\n';
                status = 1;
            } else if (format == "json") {
                out.buf << "{\"k\":" << sk.k << ",\"s_k\":" << sk.value << ",\"mode\":\""
                        << (sk.exact ? "exact" : "approx") << "\"}\n";
            } else {
                out.buf << sk.k << ',' << sk.value << ',' << (sk.exact ? "exact" : "approx")
                        << '\n';
            }
        } else if (*c_verify) {
            std::vector<erco::VerifyReport> reports;
            auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
            if (want("esr")) reports.push_back(erco::verify_esr(v_smax ? v_smax : 100000, sink));
            if (want("gsr")) reports.push_back(erco::verify_gsr(v_smax ? v_smax : 100000, sink));
            if (want("hanalytic")) reports.push_back(erco::verify_hanalytic(sink));
            if (want("gapprox"))
                reports.push_back(
                    erco::verify_gapprox(v_smin ? v_smin : 200, v_smax ? v_smax : 100000, sink));
            if (want("wbounds")) reports.push_back(erco::verify_wbounds(1e6, sink));
            if (want("rs")) reports.push_back(erco::verify_rs(v_smax ? v_smax : 100000, sink));
            if (want("maxoflog")) reports.push_back(erco::verify_maxoflog(10000, sink));
            if (want("fcomp"))
                reports.push_back(erco::verify_fcomp(2, v_smax ? v_smax : 1100, sink));
            if (want("t19"))
                reports.push_back(erco::verify_t19(v_kmax, v_smax ? v_smax : 1231, sink));
            if (want("largepart")) reports.push_back(erco::verify_largepart(6, sink));
            if (reports.empty()) {
                std::cerr << "unknown suite: " << suite << '\n';
                status = 2;
            }
            for (const auto& rep : reports) status = std::max(status, report_outcome(rep, out));
        } else if (*c_qsolve) {
            auto [s_lo, s_hi] = parse_range(q_srange);
            for (long long s = s_lo; s <= s_hi; ++s) {
                erco::ForbiddenFamily fam = erco::parse_family(q_family, (int)s);
                erco::BruteForceResult bf = erco::brute_force_Q(fam, q_rmax, q_t, budget);
                out.buf << "s " << s << " Q " << fmt(bf.Q) << " optima " << bf.total_optima
                        << " enumerated " << bf.templates_enumerated << '\n';
                for (const auto& sol : bf.optima) {
                    print_solution(sol, out);
                    out.buf << '\n';
                }
            }
        } else if (*c_alpha) {
            std::ifstream in(a_file);
            if (!in) throw std::invalid_argument("cannot open template file: " + a_file);
            std::stringstream ss;
            ss << in.rdbuf();
            erco::ColorTemplate phi = erco::parse_template(ss.str());
            erco::AlphaResult ar = erco::optimize_alpha(
                phi, a_mode == "support" ? erco::AlphaMode::support_enumeration
                                         : erco::AlphaMode::replicator);
            out.buf << "q " << fmt(ar.q) << '\n';
            out.buf << "alpha";
            for (double a : ar.alpha) out.buf << ' ' << fixed12(a);
            out.buf << '\n';
            out.buf << "support";
            for (int i : ar.cert.support) out.buf << ' ' << i + 1;
            out.buf << '\n';
            out.buf << "kkt_residual " << fmt(ar.cert.kkt_residual, 3) << '\n';
            out.buf << "off_support_slack " << fmt(ar.cert.off_support_slack, 3) << '\n';
        } else if (*c_count) {
            erco::SmallGraph g = erco::parse_graph(cnt_graph);
            erco::ForbiddenFamily fam = erco::parse_family(cnt_family, (int)cnt_s);
            erco::CountResult res = erco::count_valid_colorings(g, fam, std::max(budget, 1e8));
            if (format == "csv")
                out.buf << cnt_graph << ',' << cnt_family << ',' << cnt_s << ','
                        << res.count.str() << '\n';
            else if (format == "json")
                out.buf << "{\"count\":" << res.count.str() << "}\n";
            else
                out.buf << res.count.str() << '\n';
        } else if (*c_construct) {
            erco::MatchingPartition mp = erco::decomposition_partition(con_r, (int)con_s);
            erco::ColorTemplate phi = erco::build_matching_template(mp);
            out.buf << erco::serialize_template(phi);
            out.buf << "# uniform " << (erco::is_uniform(phi) ? "true" : "false") << '\n';
            out.buf << "# q " << fmt(erco::q_value(phi, erco::uniform_weights(con_r))) << '\n';
            if (con_n > 0) {
                erco::CountResult cr = erco::construction_count(con_r, (int)con_n, mp);
                out.buf << "# colorings_T_" << con_r << "(" << con_n << ") " << cr.count.str()
                        << '\n';
            }
        } else if (*c_props) {
            erco::ForbiddenFamily fam = erco::parse_family(p_family, (int)p_s);
            erco::BruteForceResult bf = erco::brute_force_Q(fam, p_rmax, 2, budget);
            auto basics = erco::basic_opt_filter(bf.optima);
            if (basics.empty()) {
                out.buf << "no basic optima within r <= " << p_rmax << '\n';
            }
            for (const auto& sol : basics) {
                erco::PropertyReport pr = erco::check_properties(sol, fam, budget);
                out.buf << "r " << sol.r << " q " << fmt(sol.q) << '\n';
                out.buf << "mode " << pr.mode << " attachments " << pr.attachments_checked << '\n';
                out.buf << "hermetic " << erco::to_string(pr.hermetic) << '\n';
                out.buf << "extension_property " << erco::to_string(pr.extension_property) << '\n';
                out.buf << "strong_extension " << erco::to_string(pr.strong_extension) << '\n';
                out.buf << "stable_inside " << erco::to_string(pr.stable_inside) << '\n';
                if (!pr.witness.empty()) out.buf << "witness " << pr.witness << '\n';
                out.buf << '\n';
            }
        } else if (*c_summary) {
            erco::SSummary sum = erco::qsolution_for_s(sum_s);
            out.buf << "s," << sum.s << '\n';
            out.buf << "winners," << join(sum.winners, "|") << '\n';
            out.buf << "g," << fmt(sum.g) << '\n';
            for (size_t i = 0; i < sum.winners.size(); ++i) {
                out.buf << "rate," << sum.winners[i] << ',' << fmt(sum.rate_per_edge[i]) << '\n';
                out.buf << "partitions," << sum.winners[i] << ',';
                if (sum.partition_count[i])
                    out.buf << sum.partition_count[i]->str() << '\n';
                else
                    out.buf << "not enumerated" << '\n';
            }
        } else if (*c_inspect) {
            std::ifstream in(ins_file);
            if (!in) throw std::invalid_argument("cannot open template file: " + ins_file);
            std::stringstream ss;
            ss << in.rdbuf();
            erco::ColorTemplate phi = erco::parse_template(ss.str());
            out.buf << "r " << phi.r << " s " << phi.s << '\n';
            out.buf << "min_multiplicity " << phi.min_multiplicity() << '\n';
            out.buf << "uniform " << (erco::is_uniform(phi) ? "true" : "false") << '\n';
            for (int c = 0; c < phi.s; ++c) {
                auto cls = erco::color_class(phi, c);
                out.buf << "class " << c + 1 << (erco::is_matching(cls) ? " matching " : " non-matching ")
                        << cls.size() << " edges\n";
            }
            for (int i = 0; i < phi.r; ++i)
                for (int j = i + 1; j < phi.r; ++j) {
                    erco::CloneKind ck = erco::clone_kind(phi, i, j);
                    if (ck != erco::CloneKind::not_clone)
                        out.buf << "clone " << i + 1 << ' ' << j + 1 << ' '
                                << (ck == erco::CloneKind::strong_clone ? "strong" : "weak")
                                << '\n';
                }
            if (!ins_family.empty()) {
                erco::ForbiddenFamily fam = erco::parse_family(ins_family, phi.s);
                bool feas = erco::is_feasible(phi, fam, ins_t);
                out.buf << "feasible_t" << ins_t << ' ' << (feas ? "true" : "false") << '\n';
                if (erco::is_template_free(phi, fam))
                    out.buf << "maximal " << (erco::is_maximal(phi, fam) ? "true" : "false")
                            << '\n';
            }
        } else if (*c_plot) {
            if (plot_curve == "gtilde") {
                double lo = plot_xmin > 1 ? plot_xmin : 1.05;
                double hi = plot_xmax > lo ? plot_xmax : std::max(8.0, 2 * erco::m_of_s(plot_s));
                for (double x = lo; x <= hi + 1e-12; x += plot_step)
                    out.buf << fmt(x, 6) << ',' << fmt(erco::g_tilde(plot_s, x)) << '\n';
            } else {
                double lo = plot_xmin > 0 ? plot_xmin : 0.05;
                double hi = plot_xmax > lo ? plot_xmax : 0.5;
                for (double x = lo; x <= hi + 1e-12; x += plot_step) {
                    int r = (int)std::floor(1.0 / x) + 1;  // 1/r <= x < 1/(r-1)
                    if (std::abs(x * (r - 1) - 1.0) < 1e-12) r -= 1;
                    if (r < 2) continue;
                    out.buf << fmt(x, 6) << ',' << fmt(erco::f_tilde_val(plot_s, r, x)) << '\n';
                }
            }
        }
    } catch (const erco::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << " (estimate " << e.estimate() << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    int flush_status = out.flush_to(std::cout);
    return flush_status ? flush_status : status;
}
