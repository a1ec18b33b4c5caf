#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "json.hpp"
#include "qtl/asymptotics/asymptotics.hpp"
#include "qtl/bernoulli/relations.hpp"
#include "qtl/core/error.hpp"
#include "qtl/gppv/gppv.hpp"
#include "qtl/lie/lie.hpp"
#include "qtl/seifert/seifert.hpp"
#include "qtl/wrt/wrt.hpp"

namespace {

using nlohmann::json;
using namespace qtl;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_verification = 2;

struct RunConfig {
    int precision = 60;
    int threads = 1;
    std::string format = "json";
    std::optional<double> tolerance;

    double tol_or(double fallback) const { return tolerance.value_or(fallback); }
};

struct Output {
    json doc;
    std::vector<std::vector<std::string>> csv;  // first row is the header
    bool verification_failed = false;
};

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

Complex parse_complex(const std::string& text)
{
    auto comma = text.find(',');
    try {
        size_t used = 0;
        double re = std::stod(text.substr(0, comma), &used);
        if (used != text.substr(0, comma).size()) throw std::invalid_argument(text);
        double im = 0;
        if (comma != std::string::npos) {
            auto tail = text.substr(comma + 1);
            im = std::stod(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(text);
        }
        return {re, im};
    } catch (const std::logic_error&) {
        fail(ErrorCode::invalid_input, "expected re[,im], got '" + text + "'");
    }
}

std::vector<long> parse_longs(const std::string& text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            fail(ErrorCode::invalid_input, "expected a comma-separated integer list, got '" + text + "'");
        }
    }
    if (out.empty()) fail(ErrorCode::invalid_input, "empty integer list");
    return out;
}

// Inline JSON or a path to a file.
std::string read_document(const std::string& arg)
{
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    std::ifstream in(arg);
    if (!in) fail(ErrorCode::invalid_input, "cannot open file '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json series_json(const QSeries& q) { return json::parse(q.to_json()); }

void series_csv(Output& out, const std::string& label, const QSeries& q)
{
    if (out.csv.empty()) out.csv.push_back({"block", "exponent", "coefficient"});
    for (auto& [ex, c] : q.terms) out.csv.push_back({label, to_string(ex), to_string(c)});
}

void entirety_csv(Output& out, const wrt::EntiretyReport& r)
{
    out.csv.push_back({"s", "residue_re", "residue_im", "l_pole"});
    for (auto& p : r.candidates)
        out.csv.push_back({fmt(p.s), fmt(p.residue.real()), fmt(p.residue.imag()), p.l_pole ? "1" : "0"});
}

json spinc_json(const plumbing::SpincClass& b)
{
    json rep = json::array();
    for (auto& x : b.representative) rep.push_back(x.get_str());
    return {{"index", b.index}, {"representative", rep}, {"stabilizer_order", b.stabilizer_order}};
}

const plumbing::SpincClass& pick_class(const std::vector<plumbing::SpincClass>& classes, int index)
{
    if (index < 0 || index >= static_cast<int>(classes.size()))
        fail(ErrorCode::invalid_input, "spin^c index " + std::to_string(index) + " out of range [0, " +
                                           std::to_string(classes.size()) + ")");
    return classes[index];
}

// Continued value at a point, with the spread between two Mellin cuts as the error estimate
// when no closed form is attached.
lfunc::ContinuationValue value_at(const lfunc::LSeriesHandle& h, Complex s)
{
    lfunc::ContinuationValue v;
    v.s = s;
    v.value = lfunc::l_value(h, s);
    if (!h.reference && !(s.imag() == 0 && s.real() <= 0 && s.real() == std::floor(s.real()))) {
        const int step = h.expansion.step;
        int M = std::min(std::max(0, static_cast<int>(std::floor(-s.real() * step)) + 1), h.expansion.order);
        v.error = std::abs(v.value - lfunc::mellin_oracle(h, s, M, {2e-3, 1e-12}));
    }
    return v;
}

struct LfuncArgs {
    std::string s;
    std::optional<int> n;
};

Output continuation_output(const lfunc::LSeriesHandle& h, const LfuncArgs& a)
{
    Output out;
    if (a.n) {
        out.doc = json::parse(lfunc::continuation_value(h, *a.n).to_json());
    } else if (!a.s.empty()) {
        out.doc = json::parse(value_at(h, parse_complex(a.s)).to_json());
    } else {
        fail(ErrorCode::invalid_input, "one of --s or --n is required");
    }
    return out;
}

seifert::SeifertData seifert_from(const std::string& p_text, const std::string& q_text, const std::string& relation)
{
    auto rel = relation == "minus" ? seifert::Relation::minus : seifert::Relation::plus;
    auto p = parse_longs(p_text);
    if (q_text == "auto") return seifert::make_seifert(p, rel);
    return seifert::make_seifert(p, parse_longs(q_text), rel);
}

lie::RootSystemData root_from(const std::string& type, int rank)
{
    if (type.size() == 2) return lie::root_system(type);
    if (type.size() != 1) fail(ErrorCode::invalid_input, "unknown root system type '" + type + "'");
    return lie::root_system(type[0], rank);
}

void emit(const Output& out, const RunConfig& cfg)
{
    if (cfg.format == "csv") {
        if (out.csv.empty()) fail(ErrorCode::invalid_input, "csv output is available for series and residue tables only");
        for (auto& row : out.csv) {
            for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
            std::cout << '\n';
        }
        return;
    }
    std::cout << out.doc.dump(2) << '\n';
}

int default_precision()
{
    if (const char* env = std::getenv("QTL_PRECISION")) {
        try {
            return std::stoi(env);
        } catch (const std::logic_error&) {
            fail(ErrorCode::invalid_input, std::string("QTL_PRECISION is not an integer: '") + env + "'");
        }
    }
    return 60;
}

int run(int argc, char** argv)
{
    CLI::App app{"q-series invariants, their L-functions and numerical checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "qtl 1.0.0");

    RunConfig cfg;
    cfg.precision = default_precision();
    double tolerance = 0;
    app.add_option("--precision", cfg.precision, "decimal digits (>= 30; default from QTL_PRECISION)")
        ->check(CLI::Range(30, 100000));
    app.add_option("--threads", cfg.threads, "parallelism degree")->check(CLI::Range(1, 4096));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    auto* tol_opt = app.add_option("--tolerance", tolerance, "check tolerance")->check(CLI::PositiveNumber);

    std::function<Output()> action;

    // zhat
    auto* zhat = app.add_subcommand("zhat", "GPPV blocks of a plumbing graph");
    std::string graph;
    std::string emax = "10";
    std::optional<int> spinc;
    zhat->add_option("--graph", graph, "plumbing graph: JSON file or inline JSON")->required();
    zhat->add_option("--emax", emax, "largest q-exponent (rational)");
    zhat->add_option("--spinc", spinc, "spin^c class index (default: all)");
    zhat->callback([&] {
        action = [&] {
            auto L = plumbing::linking_data(plumbing::parse_plumbing(graph));
            auto classes = plumbing::spinc_classes(L);
            Rational q = parse_rational(emax);
            Output out;
            out.doc["det"] = L.abs_det().get_str();
            out.doc["blocks"] = json::array();
            for (auto& b : classes) {
                if (spinc && b.index != pick_class(classes, *spinc).index) continue;
                auto z = gppv::zhat_series(L, b, q);
                auto j = spinc_json(b);
                j["series"] = series_json(z);
                out.doc["blocks"].push_back(j);
                series_csv(out, std::to_string(b.index), z);
            }
            return out;
        };
    });

    // wrt
    auto* wrtc = app.add_subcommand("wrt", "WRT invariant as the s = 0 value of the combined L-function");
    long level = 0;
    std::string coeffs;
    int order = 8;
    wrtc->add_option("--graph", graph, "plumbing graph: JSON file or inline JSON")->required();
    wrtc->add_option("--level", level, "level k")->required()->check(CLI::Range(2L, 100000L));
    wrtc->add_option("--emax", emax, "accepted for compatibility; the value comes from the t -> 0 expansion");
    wrtc->add_option("--coeffs", coeffs, "external coefficient table: JSON file or inline JSON");
    wrtc->add_option("--order", order, "expansion order in t^{1/2}")->check(CLI::Range(2, 40));
    wrtc->callback([&] {
        action = [&] {
            auto L = plumbing::linking_data(plumbing::parse_plumbing(graph));
            const bool external = !coeffs.empty();
            auto table = external ? wrt::parse_coefficient_table(read_document(coeffs)) : std::map<int, Complex>{};
            auto c = wrt::combined_l(L, level, external ? wrt::CoefficientRule::external_table : wrt::CoefficientRule::s_matrix,
                                     table, order);
            auto rep = wrt::entirety_report(c.merged, 4);
            Output out;
            out.doc["k"] = level;
            out.doc["wrt"] = cjson(wrt::wrt_from_combined(c));
            out.doc["entirety"] = json::parse(rep.to_json());
            out.doc["coefficient_rule"] = external ? "external_table" : "default";
            for (auto& [idx, v] : c.coefficients) out.doc["coefficients"].push_back({{"b", idx}, {"c", cjson(v)}});
            const double tol = cfg.tol_or(1e-8);
            out.doc["tolerance"] = tol;
            // an external table need not produce an entire function
            out.verification_failed = !external && !rep.entire(tol);
            entirety_csv(out, rep);
            return out;
        };
    });

    // lfunc
    auto* lf = app.add_subcommand("lfunc", "continued L-functions: Hurwitz zeta or a GPPV block");
    std::string hurwitz;
    int spinc_index = 0;
    LfuncArgs largs;
    lf->add_option("--hurwitz", hurwitz, "alpha of sum (n + alpha)^{-s} (rational)");
    lf->add_option("--graph", graph, "plumbing graph: JSON file or inline JSON");
    lf->add_option("--level", level, "level k (with --graph)")->check(CLI::Range(2L, 100000L));
    lf->add_option("--spinc", spinc_index, "spin^c class index (with --graph)");
    lf->add_option("--s", largs.s, "point re[,im]");
    lf->add_option("--n", largs.n, "n >= 0: L(-n); n < 0: residue at s = -n");
    lf->callback([&] {
        action = [&] {
            if (!hurwitz.empty() == !graph.empty()) fail(ErrorCode::invalid_input, "exactly one of --hurwitz or --graph is required");
            if (!hurwitz.empty()) return continuation_output(lfunc::hurwitz_handle(parse_rational(hurwitz)), largs);
            if (level == 0) fail(ErrorCode::invalid_input, "--level is required with --graph");
            auto L = plumbing::linking_data(plumbing::parse_plumbing(graph));
            auto classes = plumbing::spinc_classes(L);
            return continuation_output(wrt::gppv_l_function(L, pick_class(classes, spinc_index), level), largs);
        };
    });

    // seifert
    auto* sf = app.add_subcommand("seifert", "Seifert homology spheres");
    std::string p_text, q_text = "auto", relation = "plus";
    sf->add_option("--p", p_text, "p_1,...,p_n")->required();
    sf->add_option("--q", q_text, "auto or q_1,...,q_n");
    sf->add_option("--relation", relation, "sign of sum q_i/p_i = +-1/P mod 1")->check(CLI::IsMember({"plus", "minus"}));
    sf->require_subcommand(1);
    auto* sinfo = sf->add_subcommand("info", "invariants, plumbing and Chern-Simons set");
    sinfo->callback([&] {
        action = [&] {
            auto S = seifert_from(p_text, q_text, relation);
            Output out;
            out.doc["p"] = S.p;
            out.doc["q"] = S.q;
            out.doc["P"] = S.P;
            out.doc["phi"] = to_string(seifert::phi_rational(S));
            out.doc["delta"] = to_string(seifert::default_delta(S));
            out.doc["plumbing"] = json::parse(plumbing::to_json(seifert::seifert_plumbing(S)));
            out.doc["cs_set"] = json::array();
            for (auto& x : seifert::cs_set(S.p)) out.doc["cs_set"].push_back(to_string(x));
            auto align = seifert::exponent_alignment(S, seifert::default_delta(S));
            out.doc["aligned"] = align.aligned;
            return out;
        };
    });
    auto* sfeq = sf->add_subcommand("feq", "functional equation check");
    std::string s_text, delta_text = "auto";
    seifert::FeqOptions feq_opt;
    sfeq->add_option("--s", s_text, "point re[,im]")->required();
    sfeq->add_option("--delta", delta_text, "auto or a rational shift");
    sfeq->add_option("--eps", feq_opt.eps, "ray angle")->check(CLI::Range(1e-3, 1.0));
    sfeq->add_option("--max-m", feq_opt.max_m, "residue-sum cutoff (0: automatic)")->check(CLI::NonNegativeNumber);
    sfeq->callback([&] {
        action = [&] {
            auto S = seifert_from(p_text, q_text, relation);
            Rational delta = delta_text == "auto" ? seifert::default_delta(S) : parse_rational(delta_text);
            auto rep = seifert::functional_equation_check(S, delta, parse_complex(s_text), feq_opt);
            Output out;
            out.doc = json::parse(rep.to_json());
            const double tol = cfg.tol_or(1e-3);
            out.doc["tolerance"] = {{"difference", tol}, {"eps_variation", 1e-6}};
            out.verification_failed = rep.difference > tol || rep.eps_variation > 1e-6;
            return out;
        };
    });

    // lie
    auto* lc = app.add_subcommand("lie", "blocks and WRT invariants for a simple Lie algebra");
    std::string type = "A";
    int rank = 1;
    lc->add_option("--type", type, "A, D or a full name such as D4")->required();
    lc->add_option("--rank", rank, "rank")->check(CLI::Range(1, 8));
    lc->add_option("--p", p_text, "p_1,...,p_n")->required();
    lc->add_option("--level", level, "level k")->check(CLI::Range(1L, 100000L));
    lc->require_subcommand(1);
    auto* lblock = lc->add_subcommand("block", "homological block");
    lblock->add_option("--emax", emax, "largest q-exponent (rational)")->required();
    lblock->callback([&] {
        action = [&] {
            auto S = seifert::make_seifert(parse_longs(p_text));
            auto R = root_from(type, rank);
            auto blk = lie::homological_block(S, R, parse_rational(emax));
            Output out;
            out.doc["type"] = R.name();
            out.doc["series"] = series_json(blk.series);
            out.doc["warnings"] = blk.series.warnings;
            series_csv(out, R.name(), blk.series);
            return out;
        };
    });
    auto* lwrt = lc->add_subcommand("wrt", "WRT invariant from the radial limit");
    std::string path = "finite";
    lwrt->add_option("--path", path, "finite or lvalue")->check(CLI::IsMember({"finite", "lvalue"}));
    lwrt->callback([&] {
        action = [&] {
            if (level == 0) fail(ErrorCode::invalid_input, "--level is required");
            auto S = seifert::make_seifert(parse_longs(p_text));
            auto R = root_from(type, rank);
            Output out;
            out.doc["type"] = R.name();
            out.doc["k"] = level;
            out.doc["path"] = path;
            out.doc["wrt"] = cjson(lie::wrt_g(S, R, level, path == "finite" ? lie::LimitPath::finite_sum : lie::LimitPath::l_value));
            if (path == "finite") out.doc["finite_sum"] = json::parse(lie::radial_limit_finite_sum(S, R, level).to_json());
            return out;
        };
    });
    auto* llf = lc->add_subcommand("lfunc", "the L-function of the block");
    LfuncArgs lie_args;
    llf->add_option("--s", lie_args.s, "point re[,im]");
    llf->add_option("--n", lie_args.n, "n >= 0: L(-n); n < 0: residue at s = -n");
    llf->callback([&] {
        action = [&] {
            if (level == 0) fail(ErrorCode::invalid_input, "--level is required");
            auto S = seifert::make_seifert(parse_longs(p_text));
            auto R = root_from(type, rank);
            return continuation_output(lie::lie_l_function(S, R, level, R.num_positive() > 1 ? 0 : 6), lie_args);
        };
    });

    // bernoulli
    auto* bc = app.add_subcommand("bernoulli", "Bernoulli relation for a two-variable weight form");
    std::string form;
    int M = 0;
    bc->add_option("form", form, "epstein or cubic")->required()->check(CLI::IsMember({"epstein", "cubic"}));
    bc->add_option("--M", M, "order")->required()->check(CLI::Range(-4, 6));
    bc->callback([&] {
        action = [&] {
            auto w = form == "epstein" ? bernoulli::make_weight_form(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}})
                                       : bernoulli::make_weight_form(2, {{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}});
            auto rep = bernoulli::relation_check(asymptotics::indicator(2), {Rational(1, 2), Rational(1, 2)}, w, M);
            Output out;
            out.doc = json::parse(rep.to_json());
            const double tol = cfg.tol_or(1e-7);
            out.doc["tolerance"] = tol;
            out.verification_failed = rep.abs_diff > tol;
            return out;
        };
    });

    // verify
    auto* vc = app.add_subcommand("verify", "acceptance suites");
    std::vector<std::string> names;
    std::string suite_list;
    for (auto& s : acceptance::suites()) suite_list += (suite_list.empty() ? "" : ", ") + s.name;
    vc->add_option("suite", names, "suite names or numbers, or 'all' (" + suite_list + ")")->required();
    vc->callback([&] {
        action = [&] {
            std::vector<const acceptance::Suite*> chosen;
            for (auto& n : names) {
                if (n == "all") {
                    for (auto& s : acceptance::suites()) chosen.push_back(&s);
                } else {
                    chosen.push_back(&acceptance::find_suite(n));
                }
            }
            Output out;
            out.csv.push_back({"id", "suite", "pass"});
            bool all = true;
            for (auto* s : chosen) {
                auto r = acceptance::run(*s);
                std::cerr << "verify " << r.name << ": " << (r.pass ? "pass" : "FAIL") << " in " << fmt(r.seconds) << " s\n";
                all &= r.pass;
                out.doc["suites"].push_back(acceptance::to_json(r));
                out.csv.push_back({std::to_string(r.id), r.name, r.pass ? "1" : "0"});
            }
            out.doc["pass"] = all;
            out.verification_failed = !all;
            return out;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }
    if (cfg.precision < 30) fail(ErrorCode::invalid_input, "precision must be at least 30 digits");
    if (*tol_opt) cfg.tolerance = tolerance;

    Output out = action();
    out.doc["config"] = {{"precision", cfg.precision}, {"threads", cfg.threads}};
    emit(out, cfg);
    return out.verification_failed ? exit_verification : exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const qtl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return exit_input;
}
