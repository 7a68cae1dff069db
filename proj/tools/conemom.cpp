#include "conemom/asymptotics.hpp"
#include "conemom/classify.hpp"
#include "conemom/curvature.hpp"
#include "conemom/errors.hpp"
#include "conemom/potential.hpp"
#include "conemom/profile.hpp"
#include "conemom/serialize.hpp"
#include "conemom/toric.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace conemom;

namespace {

// 0 success, 2 input validation, 3 certification failure.
int exit_code_for(errc c) {
    switch (c) {
    case errc::sign_assumption_failed:
    case errc::quadrature_budget_exceeded:
    case errc::branch_cut_hit:
        return 3;
    default:
        return 2;
    }
}

int emit_error(const Error& e) {
    json err;
    err["error"] = errc_name(e.code());
    err["message"] = e.what();
    std::cerr << dump_json(err) << "\n";
    return exit_code_for(e.code());
}

void emit(const json& j) { std::cout << dump_json(j) << "\n"; }

BoundaryPreset parse_bc(const std::string& s) {
    if (s == "cone")
        return BoundaryPreset::cone_smooth();
    if (s == "bundle")
        return BoundaryPreset::bundle_smooth();
    if (s.rfind("custom:", 0) == 0) {
        std::string rest = s.substr(7);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            fail(errc::invalid_argument, "--bc custom needs two values: custom:v0,v1");
        return BoundaryPreset::custom(parse_rational(rest.substr(0, comma)),
                                      parse_rational(rest.substr(comma + 1)));
    }
    fail(errc::invalid_argument, "--bc must be cone, bundle, or custom:v0,v1");
}

void require_m(long m) {
    if (m < 1)
        fail(errc::invalid_argument, "m must be >= 1");
}

double tol_from_env() {
    const char* env = std::getenv("CONEMOM_TOL");
    if (!env)
        return 1e-12;
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0))
        fail(errc::invalid_argument, "CONEMOM_TOL must be a positive number");
    return v;
}

// "a,b,c" or "lo:hi" / "lo:hi:step" (inclusive, exact arithmetic).
std::vector<Rational> parse_rational_values(const std::string& text) {
    std::vector<Rational> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string piece;
        while (std::getline(ss, piece, ':'))
            parts.push_back(piece);
        if (parts.size() != 2 && parts.size() != 3)
            fail(errc::invalid_argument, "range must be lo:hi or lo:hi:step");
        Rational lo = parse_rational(parts[0]);
        Rational hi = parse_rational(parts[1]);
        Rational step = parts.size() == 3 ? parse_rational(parts[2]) : Rational(1);
        if (!(step > 0))
            fail(errc::invalid_argument, "range step must be > 0");
        for (Rational v = lo; v <= hi; v += step)
            out.push_back(v);
    } else {
        std::stringstream ss(text);
        std::string piece;
        while (std::getline(ss, piece, ','))
            out.push_back(parse_rational(piece));
    }
    if (out.empty())
        fail(errc::invalid_argument, "empty value list");
    return out;
}

std::vector<long> parse_m_values(const std::string& text) {
    std::vector<long> out;
    for (const Rational& v : parse_rational_values(text)) {
        if (denominator(v) != 1)
            fail(errc::invalid_argument, "m values must be integers");
        out.push_back(static_cast<long>(numerator(v).convert_to<long long>()));
        require_m(out.back());
    }
    return out;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path);
    if (!os)
        fail(errc::invalid_argument, "cannot open output file: " + path);
    return os;
}

// ---- profile ---------------------------------------------------------

int cmd_profile(long m, const std::string& kappa, const std::string& c, const std::string& bc) {
    require_m(m);
    Profile pr = build_profile({m, parse_rational(kappa), parse_rational(c), parse_bc(bc)});
    json out;
    out["profile"] = to_json(pr);
    out["classification"] = to_json(theorem_verdict(pr));
    emit(out);
    return 0;
}

// ---- c0 --------------------------------------------------------------

int cmd_c0(long m, const std::string& kappa, const std::string& bc, double tol) {
    require_m(m);
    BoundaryPreset preset = parse_bc(bc);
    emit(to_json(solve_c0(m, parse_rational(kappa), preset, tol)));
    return 0;
}

// ---- sweep -----------------------------------------------------------

struct SweepRow {
    std::string m, kappa, c;
    std::string verdict, einstein, b, order_at_zero, order_at_b, t1, t2;
};

SweepRow eval_sweep_row(long m, const Rational& kappa, const Rational& c,
                        const BoundaryPreset& bc) {
    SweepRow row;
    row.m = std::to_string(m);
    row.kappa = to_string(kappa);
    row.c = to_string(c);
    try {
        Profile pr = build_profile({m, kappa, c, bc});
        ClassificationReport rep = theorem_verdict(pr);
        row.verdict = verdict_name(rep.verdict);
        // alpha only means an Einstein metric when the profile lives on the
        // whole half-line
        if (rep.einstein && rep.behavior.b_infinite)
            row.einstein = to_string(*rep.einstein);
        row.b = rep.behavior.b_infinite
                    ? "inf"
                    : format_double(to_double(rep.behavior.b.midpoint()));
        row.order_at_zero = std::to_string(rep.behavior.order_at_zero);
        if (!rep.behavior.b_infinite)
            row.order_at_b = std::to_string(rep.behavior.order_at_b);
        row.t1 = rep.behavior.t1_infinite ? "true" : "false";
        row.t2 = rep.behavior.t2_infinite ? "true" : "false";
    } catch (const Error& e) {
        row.verdict = errc_name(e.code()); // no metric for this combination
    }
    return row;
}

int cmd_sweep(const std::string& ms, const std::string& kappas, const std::string& cs,
              const std::string& c_rule, const std::string& bc, const std::string& format,
              const std::string& output) {
    if (cs.empty() == c_rule.empty())
        fail(errc::invalid_argument, "exactly one of --c and --c-rule is required");
    if (!c_rule.empty() && c_rule != "einstein")
        fail(errc::invalid_argument, "--c-rule must be einstein");
    if (format != "csv" && format != "json")
        fail(errc::invalid_argument, "--format must be csv or json");
    BoundaryPreset preset = parse_bc(bc);
    if (!c_rule.empty() && preset.tag == BoundaryTag::custom)
        fail(errc::invalid_argument, "--c-rule einstein needs the cone or bundle preset");

    struct Combo {
        long m;
        Rational kappa, c;
    };
    std::vector<Combo> combos;
    for (long m : parse_m_values(ms))
        for (const Rational& kappa : parse_rational_values(kappas)) {
            if (!c_rule.empty()) {
                // the exact c making the metric Einstein for this preset
                Rational c = preset.tag == BoundaryTag::cone_smooth
                                 ? Rational(m + 1) * kappa
                                 : Rational(m + 1) * (kappa - 2);
                combos.push_back({m, kappa, c});
            } else {
                for (const Rational& c : parse_rational_values(cs))
                    combos.push_back({m, kappa, c});
            }
        }

    // independent exact tasks; rows come back in input order regardless of
    // completion order
    std::vector<SweepRow> rows(combos.size());
    unsigned workers = std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, combos.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= combos.size())
                    break;
                rows[i] = eval_sweep_row(combos[i].m, combos[i].kappa, combos[i].c, preset);
            }
        });
    for (auto& th : pool)
        th.join();

    std::string body;
    if (format == "csv") {
        body = "m,kappa,c,verdict,einstein,b,order_at_zero,order_at_b,t1_infinite,t2_infinite\n";
        for (const SweepRow& r : rows)
            body += r.m + ',' + r.kappa + ',' + r.c + ',' + r.verdict + ',' + r.einstein +
                    ',' + r.b + ',' + r.order_at_zero + ',' + r.order_at_b + ',' + r.t1 +
                    ',' + r.t2 + '\n';
    } else {
        json arr = json::array();
        for (const SweepRow& r : rows) {
            json row;
            row["m"] = r.m;
            row["kappa"] = r.kappa;
            row["c"] = r.c;
            row["verdict"] = r.verdict;
            row["einstein"] = r.einstein;
            row["b"] = r.b;
            row["order_at_zero"] = r.order_at_zero;
            row["order_at_b"] = r.order_at_b;
            row["t1_infinite"] = r.t1;
            row["t2_infinite"] = r.t2;
            arr.push_back(std::move(row));
        }
        json out;
        out["rows"] = std::move(arr);
        body = dump_json(out) + "\n";
    }
    if (output.empty())
        std::cout << body;
    else
        open_output(output) << body;
    return 0;
}

// ---- potential -------------------------------------------------------

int cmd_potential(long m, const std::string& kappa, const std::string& c, const std::string& bc,
                  double tau_max, long samples, double tol, const std::string& csv_path,
                  const std::string& format) {
    require_m(m);
    if (!(tau_max > 0))
        fail(errc::invalid_argument, "--tau-max must be > 0");
    if (samples < 1)
        fail(errc::invalid_argument, "--samples must be >= 1");
    if (format != "csv" && format != "json")
        fail(errc::invalid_argument, "--format must be csv or json");
    Profile pr = build_profile({m, parse_rational(kappa), parse_rational(c), parse_bc(bc)});
    PotentialOptions opt;
    opt.abs_tol = tol;
    PotentialContext ctx(pr, opt);
    std::vector<double> grid(samples);
    for (long i = 1; i <= samples; ++i)
        grid[i - 1] = tau_max * static_cast<double>(i) / static_cast<double>(samples);
    PotentialTable table = ctx.build_table(grid);
    if (!csv_path.empty()) {
        auto os = open_output(csv_path);
        write_potential_csv(os, table);
        json note;
        note["rows"] = static_cast<long>(table.samples.size());
        note["quoted_error"] = table.quoted_error;
        note["csv"] = csv_path;
        emit(note);
    } else if (format == "csv") {
        write_potential_csv(std::cout, table);
    } else {
        emit(to_json(table));
    }
    return 0;
}

// ---- toric -----------------------------------------------------------

int cmd_toric_check(const std::string& path, long facet_cap) {
    std::ifstream is(path);
    if (!is)
        fail(errc::invalid_argument, "cannot open diagram file: " + path);
    json parsed;
    try {
        parsed = json::parse(is);
    } catch (const std::exception& e) {
        fail(errc::invalid_argument, std::string("diagram file is not valid JSON: ") + e.what());
    }
    DiagramInput input = parse_diagram(parsed);

    json out;
    PrimitiveMinimalReport pm = check_primitive_minimal(input.diagram);
    out["primitive_minimal"] = to_json(pm);
    out["goodness"] = pm.ok() ? to_json(check_good(input.diagram, facet_cap)) : json(nullptr);
    HeightResult height = compute_height(input.diagram);
    out["height"] = to_json(height);
    if (input.xi && height.status == HeightResult::Status::found)
        out["reeb"] = to_json(reeb_admissible(input.diagram, *input.xi));
    else
        out["reeb"] = nullptr;
    emit(out);
    return 0;
}

// ---- asympt ----------------------------------------------------------

int cmd_asympt(long m, const std::string& window, const std::string& remainder_window,
               const std::string& csv_path, double r_min, double r_max, long samples) {
    require_m(m);
    auto parse_window = [](const std::string& text) {
        auto colon = text.find(':');
        if (colon == std::string::npos)
            fail(errc::invalid_argument, "window must be lo:hi");
        return std::pair<double, double>{to_double(parse_rational(text.substr(0, colon))),
                                         to_double(parse_rational(text.substr(colon + 1)))};
    };
    AsymptoticReport rep = fit_expansion(m, parse_window(window), parse_window(remainder_window));
    if (!csv_path.empty()) {
        if (!(r_min > 0) || !(r_max > r_min) || samples < 2)
            fail(errc::invalid_argument, "need 0 < --r-min < --r-max and --samples >= 2");
        auto os = open_output(csv_path);
        os << "r_tilde,f,f_minus_r2\n";
        for (long i = 0; i < samples; ++i) {
            double r = r_min * std::exp(std::log(r_max / r_min) * static_cast<double>(i) /
                                        static_cast<double>(samples - 1));
            os << format_double(r) << ',' << format_double(closed_form_potential(m, r)) << ','
               << format_double(potential_minus_leading(m, r)) << '\n';
        }
    }
    emit(to_json(rep));
    return 0;
}

// ---- verify ----------------------------------------------------------

int cmd_verify(const std::string& grid) {
    if (grid != "default")
        fail(errc::invalid_argument, "--grid must be default");
    long checked = 0, skipped = 0, failures = 0;
    for (long m = 1; m <= 5; ++m) {
        std::vector<Rational> kappas = {-3, -2, -1, 0, 1, 2, Rational(2 * m + 2)};
        for (const Rational& kappa : kappas)
            for (long ci = -4; ci <= 0; ++ci)
                for (BoundaryPreset bc :
                     {BoundaryPreset::cone_smooth(), BoundaryPreset::bundle_smooth()}) {
                    Profile pr = build_profile({m, kappa, Rational(ci), bc});
                    if (pr.numerator().is_zero()) { // no profile: phi == 0
                        ++skipped;
                        continue;
                    }
                    ++checked;
                    RationalFunction sigma = scalar_curvature(pr);
                    if (!(sigma - RationalFunction(Rational(ci))).is_zero())
                        ++failures;
                }
    }
    json out;
    out["grid"] = grid;
    out["checked"] = checked;
    out["skipped"] = skipped;
    out["failures"] = failures;
    out["ok"] = failures == 0;
    emit(out);
    return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of constant-scalar-curvature momentum profiles on Kahler cones"};
    app.require_subcommand(1);

    std::string kappa, c, bc = "cone", tol_text;
    long m = 1;

    auto* p_profile = app.add_subcommand("profile", "build a profile and classify it");
    p_profile->add_option("--m", m, "dimension parameter, m >= 1 (the cone has complex dimension m+1)")->required();
    p_profile->add_option("--kappa", kappa, "transverse Ricci constant (rational)")->required();
    p_profile->add_option("--c", c, "target scalar curvature (rational)")->required();
    p_profile->add_option("--bc", bc, "cone | bundle | custom:v0,v1");

    double tol = 0; // 0 = take the CONEMOM_TOL / built-in default
    auto* p_c0 = app.add_subcommand("c0", "positivity threshold c0 with Sturm certificates");
    p_c0->add_option("--m", m)->required();
    p_c0->add_option("--kappa", kappa)->required();
    p_c0->add_option("--bc", bc, "cone | bundle");
    p_c0->add_option("--tol", tol, "certificate tolerance (default CONEMOM_TOL or 1e-12)");

    std::string ms, kappas, cs, c_rule, format = "csv", output;
    auto* p_sweep = app.add_subcommand("sweep", "classify a grid of (m, kappa, c)");
    p_sweep->add_option("--m", ms, "integer list or lo:hi range")->required();
    p_sweep->add_option("--kappa", kappas, "rational list or lo:hi:step range")->required();
    p_sweep->add_option("--c", cs, "rational list or lo:hi:step range");
    p_sweep->add_option("--c-rule", c_rule, "einstein: pick c making the metric Einstein");
    p_sweep->add_option("--bc", bc, "cone | bundle | custom:v0,v1");
    p_sweep->add_option("--format", format, "csv | json");
    p_sweep->add_option("--output", output, "write to file instead of stdout");

    double tau_max = 10;
    long samples = 200;
    std::string csv_path;
    auto* p_potential = app.add_subcommand("potential", "t, F, G, s table by quadrature");
    p_potential->add_option("--m", m)->required();
    p_potential->add_option("--kappa", kappa)->required();
    p_potential->add_option("--c", c)->required();
    p_potential->add_option("--bc", bc, "cone | bundle | custom:v0,v1");
    p_potential->add_option("--tau-max", tau_max, "largest tau in the table")->required();
    p_potential->add_option("--samples", samples, "number of rows (default 200)");
    p_potential->add_option("--tol", tol, "quadrature tolerance (default CONEMOM_TOL or 1e-12)");
    p_potential->add_option("--csv", csv_path, "write CSV to this file");
    p_potential->add_option("--format", format, "csv | json (stdout)");

    std::string diagram_path;
    long facet_cap = 14;
    auto* p_toric = app.add_subcommand("toric", "toric diagram certificates");
    auto* p_check = p_toric->add_subcommand("check", "check a diagram JSON file");
    p_check->add_option("file", diagram_path, "diagram JSON file")->required();
    p_check->add_option("--facet-cap", facet_cap, "largest facet count for the subset scan");
    p_toric->require_subcommand(1);

    std::string window = "10:100", remainder_window = "2:6";
    double r_min = 1, r_max = 100;
    auto* p_asympt = app.add_subcommand("asympt", "Ricci-flat asymptotic expansion fit");
    p_asympt->add_option("--m", m)->required();
    p_asympt->add_option("--window", window, "fit window lo:hi in r~ (default 10:100)");
    p_asympt->add_option("--remainder-window", remainder_window, "remainder window lo:hi");
    p_asympt->add_option("--csv", csv_path, "write (r_tilde, f, f_minus_r2) CSV to this file");
    p_asympt->add_option("--r-min", r_min, "CSV grid start (default 1)");
    p_asympt->add_option("--r-max", r_max, "CSV grid end (default 100)");
    p_asympt->add_option("--samples", samples, "CSV grid size (default 200)");

    std::string grid = "default";
    auto* p_verify = app.add_subcommand("verify", "exact scalar-curvature identity suite");
    p_verify->add_option("--grid", grid, "grid name (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err;
        err["error"] = "InvalidArgument";
        err["message"] = e.what();
        std::cerr << dump_json(err) << "\n";
        return 2;
    }

    try {
        if (tol == 0)
            tol = tol_from_env();
        if (!(tol > 0))
            fail(errc::invalid_argument, "--tol must be > 0");
        if (p_profile->parsed())
            return cmd_profile(m, kappa, c, bc);
        if (p_c0->parsed())
            return cmd_c0(m, kappa, bc, tol);
        if (p_sweep->parsed())
            return cmd_sweep(ms, kappas, cs, c_rule, bc, format, output);
        if (p_potential->parsed())
            return cmd_potential(m, kappa, c, bc, tau_max, samples, tol, csv_path, format);
        if (p_toric->parsed())
            return cmd_toric_check(diagram_path, facet_cap);
        if (p_asympt->parsed())
            return cmd_asympt(m, window, remainder_window, csv_path, r_min, r_max, samples);
        if (p_verify->parsed())
            return cmd_verify(grid);
    } catch (const Error& e) {
        return emit_error(e);
    } catch (const std::exception& e) {
        json err;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::cerr << dump_json(err) << "\n";
        return 3;
    }
    return 2;
}
