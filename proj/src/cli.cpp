#include "wavearith/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "wavearith/bump_model.hpp"
#include "wavearith/discrete_model.hpp"
#include "wavearith/errors.hpp"
#include "wavearith/format.hpp"
#include "wavearith/json_io.hpp"
#include "wavearith/kernel_opt.hpp"
#include "wavearith/periodic_model.hpp"
#include "wavearith/primality.hpp"

namespace wavearith::cli {

namespace {

constexpr const char* version = "wavearith 1.0.0";

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError("malformed JSON in '" + path + "': " + e.what());
    }
}

double parse_finite(const std::string& text)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw DomainError("not a finite number: '" + text + "'");
    }
    return v;
}

const CLI::Validator finite_number = CLI::Validator(
    [](std::string& s) -> std::string {
        try {
            parse_finite(s);
        } catch (const DomainError& e) {
            return e.what();
        }
        return {};
    },
    "FINITE");

enum class Format { text, json, csv };

// What a verb produced, in every output format.
struct Output {
    Json inputs = Json::object();
    Json result;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::string text;  // full text body, newline-terminated
};

std::string line(const std::string& s) { return s + "\n"; }

Output single_value(Json inputs, const std::string& name, double value)
{
    Output o;
    o.inputs = std::move(inputs);
    o.result = {{name, number_to_json(value)}};
    o.csv_header = {name};
    o.csv_rows = {{format_number(value)}};
    o.text = line(format_number(value));
    return o;
}

struct GlobalOptions {
    std::string output = "text";
    std::string config_path;
    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
    std::optional<int> grid_per_unit;
    std::optional<int> max_depth;
    std::optional<double> epsilon;
};

RunConfig resolve_config(const GlobalOptions& g)
{
    RunConfig cfg;
    std::string path = g.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("WAVEARITH_CONFIG"); env != nullptr && *env != '\0') {
            path = env;
        }
    }
    if (!path.empty()) {
        cfg = config_from_json(read_json_file(path), cfg);
    }
    if (g.rel_tol) cfg.approx.rel_tol = *g.rel_tol;
    if (g.abs_tol) cfg.approx.abs_tol = *g.abs_tol;
    if (g.grid_per_unit) cfg.approx.grid_per_unit = *g.grid_per_unit;
    if (g.max_depth) cfg.approx.max_depth = *g.max_depth;
    if (g.epsilon) cfg.epsilon = *g.epsilon;
    cfg.approx.validate();
    if (!(cfg.epsilon > 0.0)) {
        throw DomainError("epsilon must be positive");
    }
    return cfg;
}

std::vector<Rational> parse_operands(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_rational(item));
    }
    return out;
}

std::string rational_text(const Rational& r)
{
    return r.is_integer() ? std::to_string(r.num()) : std::to_string(r.num()) + "/" + std::to_string(r.den());
}

// Deterministic operand tuples for an identity.
std::vector<Rational> random_operands(Axiom axiom, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::int64_t> natural(1, 20);
    std::uniform_int_distribution<std::int64_t> numerator(-30, 30);
    std::uniform_int_distribution<std::int64_t> denominator(1, 12);
    std::vector<Rational> ops;
    for (std::size_t i = 0; i < axiom_arity(axiom); ++i) {
        if (axiom_requires_naturals(axiom)) {
            ops.emplace_back(natural(rng));
        } else {
            const std::int64_t num = numerator(rng);
            ops.emplace_back(num, denominator(rng));
        }
    }
    return ops;
}

void emit(const Output& o, Format format, const std::string& verb, const RunConfig& cfg, std::ostream& out)
{
    switch (format) {
    case Format::text: out << o.text; break;
    case Format::json: {
        Json envelope = {{"verb", verb}, {"inputs", o.inputs}, {"result", o.result}, {"config", config_to_json(cfg)}};
        out << envelope.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        auto row = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "," : "") << cells[i];
            }
            out << '\n';
        };
        row(o.csv_header);
        for (const auto& r : o.csv_rows) {
            row(r);
        }
        break;
    }
    }
}

} // namespace

FourierKernel parse_kernel_spec(const std::string& spec)
{
    if (spec == "standard") {
        return FourierKernel::standard();
    }
    if (spec.rfind("alpha:", 0) == 0) {
        return FourierKernel::alpha(parse_finite(spec.substr(6)));
    }
    if (spec.rfind("alphabeta:", 0) == 0) {
        const std::string rest = spec.substr(10);
        const auto comma = rest.find(',');
        if (comma == std::string::npos) {
            throw DomainError("alphabeta kernel needs two values: alphabeta:<alpha>,<beta>");
        }
        return FourierKernel::alpha_beta(parse_finite(rest.substr(0, comma)), parse_finite(rest.substr(comma + 1)));
    }
    if (spec.rfind("file:", 0) == 0) {
        return kernel_from_json(read_json_file(spec.substr(5)));
    }
    throw DomainError("unknown kernel spec '" + spec + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Numbers as integrals of smooth bump and Fourier kernels.", "wavearith"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--config", g.config_path, "ApproxConfig JSON (default: $WAVEARITH_CONFIG)");
    app.add_option("--rel-tol", g.rel_tol, "Relative quadrature tolerance")->check(finite_number);
    app.add_option("--abs-tol", g.abs_tol, "Absolute quadrature tolerance")->check(finite_number);
    app.add_option("--grid-per-unit", g.grid_per_unit, "L2 sampling points per unit length");
    app.add_option("--max-depth", g.max_depth, "Adaptive bisection depth cap");
    app.add_option("--epsilon", g.epsilon, "Rigidity threshold")->check(finite_number);
    bool show_version = false;
    app.add_flag("--version", show_version, "Print the version to stderr");

    std::string verb;
    std::function<Output(const RunConfig&)> action;

    auto add_kernel = [](CLI::App* sub, std::string& target) {
        return sub->add_option("--kernel", target, "standard | alpha:<v> | alphabeta:<v>,<v> | file:<path>")
            ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    };

    // eval
    std::string eval_kernel = "standard";
    std::optional<double> eval_x;
    std::optional<std::int64_t> eval_n;
    {
        auto* sub = app.add_subcommand("eval", "Analytic value of x (periodic kernel) or of n (bump comb)");
        auto* k = add_kernel(sub, eval_kernel);
        auto* x = sub->add_option("--x", eval_x, "Real argument, periodic model")->check(finite_number);
        auto* n = sub->add_option("--n", eval_n, "Natural number, bump model")->check(CLI::NonNegativeNumber);
        x->excludes(n);
        n->excludes(k);
        sub->callback([&] {
            verb = "eval";
            if (!eval_x && !eval_n) {
                throw CLI::ValidationError("eval", "one of --x or --n is required");
            }
            action = [&](const RunConfig& cfg) {
                if (eval_n) {
                    return single_value({{"model", "bump"}, {"n", *eval_n}}, "value", nat_value(*eval_n, cfg.approx));
                }
                const FourierKernel kernel = parse_kernel_spec(eval_kernel);
                return single_value({{"model", "periodic"}, {"kernel", kernel_to_json(kernel)}, {"x", *eval_x}},
                                    "value", analytic_value(kernel, *eval_x));
            };
        });
    }

    // product
    std::string product_kernel = "standard";
    std::optional<double> product_x, product_y;
    std::optional<std::int64_t> product_a, product_b;
    {
        auto* sub = app.add_subcommand("product", "Star product of reals (periodic) or grid product of naturals (bump)");
        auto* k = add_kernel(sub, product_kernel);
        auto* x = sub->add_option("--x", product_x)->check(finite_number);
        auto* y = sub->add_option("--y", product_y)->check(finite_number);
        auto* a = sub->add_option("--a", product_a)->check(CLI::PositiveNumber);
        auto* b = sub->add_option("--b", product_b)->check(CLI::PositiveNumber);
        x->needs(y);
        y->needs(x);
        a->needs(b);
        b->needs(a);
        x->excludes(a);
        x->excludes(b);
        y->excludes(a);
        y->excludes(b);
        a->excludes(k);
        sub->callback([&] {
            verb = "product";
            if (!product_x && !product_a) {
                throw CLI::ValidationError("product", "give --x/--y or --a/--b");
            }
            action = [&](const RunConfig& cfg) {
                if (product_a) {
                    return single_value({{"model", "bump"}, {"a", *product_a}, {"b", *product_b}}, "value",
                                        mul_value(*product_a, *product_b, cfg.approx));
                }
                const FourierKernel kernel = parse_kernel_spec(product_kernel);
                return single_value(
                    {{"model", "periodic"}, {"kernel", kernel_to_json(kernel)}, {"x", *product_x}, {"y", *product_y}},
                    "value", analytic_product(kernel, *product_x, *product_y));
            };
        });
    }

    // pow
    std::int64_t pow_a = 0, pow_b = 0;
    {
        auto* sub = app.add_subcommand("pow", "a^b as a b-dimensional bump tensor");
        sub->add_option("--a", pow_a)->required()->check(CLI::PositiveNumber);
        sub->add_option("--b", pow_b)->required()->check(CLI::PositiveNumber);
        sub->callback([&] {
            verb = "pow";
            action = [&](const RunConfig& cfg) {
                return single_value({{"a", pow_a}, {"b", pow_b}}, "value", pow_value(pow_a, pow_b, cfg.approx));
            };
        });
    }

    // rational
    std::int64_t rat_m = 0, rat_n = 1;
    std::string rat_variant;
    {
        auto* sub = app.add_subcommand("rational", "m/n as scaled bumps, or via the periodic series variants");
        sub->add_option("--m", rat_m)->required();
        sub->add_option("--n", rat_n)->required();
        sub->add_option("--variant", rat_variant, "fragment_sum | cumulative (periodic series)")
            ->check(CLI::IsMember({"fragment_sum", "cumulative"}));
        sub->callback([&] {
            verb = "rational";
            action = [&](const RunConfig& cfg) {
                if (!rat_variant.empty()) {
                    const auto v = rat_variant == "fragment_sum" ? SeriesVariant::fragment_sum : SeriesVariant::cumulative;
                    return single_value({{"model", "series"}, {"variant", rat_variant}, {"p", rat_m}, {"q", rat_n}},
                                        "value", series_rational(rat_m, rat_n, v));
                }
                return single_value({{"model", "bump"}, {"m", rat_m}, {"n", rat_n}}, "value",
                                    rational_value(rat_m, rat_n, cfg.approx));
            };
        });
    }

    // discrete
    std::string disc_kernel = "standard";
    std::optional<double> disc_x;
    std::optional<std::int64_t> disc_n;
    std::int64_t disc_m = 100;
    std::int64_t disc_harmonics = 10;
    {
        auto* sub = app.add_subcommand("discrete", "Integral-free discrete approximation of the analytic value");
        auto* k = add_kernel(sub, disc_kernel);
        auto* x = sub->add_option("--x", disc_x, "Argument x >= 0 (general kernel formula)")->check(finite_number);
        auto* n = sub->add_option("--n", disc_n, "Natural n (literal telescoping sum, standard kernel)")
                      ->check(CLI::PositiveNumber);
        sub->add_option("--m", disc_m, "Subintervals per unit")->capture_default_str()->check(CLI::PositiveNumber);
        auto* harm = sub->add_option("--N", disc_harmonics, "Harmonics summed")->check(CLI::PositiveNumber);
        x->excludes(n);
        n->excludes(k);
        n->excludes(harm);
        sub->callback([&] {
            verb = "discrete";
            if (!disc_x && !disc_n) {
                throw CLI::ValidationError("discrete", "one of --x or --n is required");
            }
            action = [&](const RunConfig&) {
                if (disc_n) {
                    return single_value({{"formula", "telescoping"}, {"n", *disc_n}, {"m", disc_m}}, "value",
                                        discrete_standard(*disc_n, disc_m));
                }
                const FourierKernel kernel = parse_kernel_spec(disc_kernel);
                return single_value({{"formula", "general"},
                                     {"kernel", kernel_to_json(kernel)},
                                     {"x", *disc_x},
                                     {"m", disc_m},
                                     {"N", disc_harmonics}},
                                    "value", discrete_general(kernel, *disc_x, {disc_m, disc_harmonics}));
            };
        });
    }

    // residual-scan
    std::int64_t scan_from = 2, scan_to = 30;
    std::optional<double> scan_epsilon;
    {
        auto* sub = app.add_subcommand("residual-scan", "Rigidity verdicts for a range of n");
        sub->add_option("--from", scan_from)->required();
        sub->add_option("--to", scan_to)->required();
        sub->add_option("--epsilon", scan_epsilon, "Rigidity threshold (overrides config)")->check(finite_number);
        sub->callback([&] {
            verb = "residual-scan";
            action = [&](const RunConfig& cfg) {
                const double eps = scan_epsilon.value_or(cfg.epsilon);
                const std::vector<RigidityVerdict> curve = residual_curve(scan_from, scan_to, eps, cfg.approx);
                Output o;
                o.inputs = {{"from", scan_from}, {"to", scan_to}, {"epsilon", eps}};
                o.result = Json::array();
                std::ostringstream csv;
                write_residual_csv(csv, curve);
                std::ostringstream text;
                for (const RigidityVerdict& v : curve) {
                    o.result.push_back(verdict_to_json(v));
                    text << v.n << ' ' << classification_name(v.classification)
                         << " min_defect=" << format_number(v.min_defect)
                         << " best_c=" << (v.best_c ? std::to_string(*v.best_c) : std::string("none")) << '\n';
                }
                // The CSV layout is fixed by write_residual_csv; keep it verbatim.
                std::istringstream rows(csv.str());
                std::string header;
                std::getline(rows, header);
                o.csv_header = {header};
                for (std::string r; std::getline(rows, r);) {
                    o.csv_rows.push_back({r});
                }
                o.text = text.str();
                return o;
            };
        });
    }

    // factor
    std::int64_t factor_n = 1;
    {
        auto* sub = app.add_subcommand("factor", "Analytic factorization into prime bump combs");
        sub->add_option("--n", factor_n)->required()->check(CLI::PositiveNumber);
        sub->callback([&] {
            verb = "factor";
            action = [&](const RunConfig& cfg) {
                const Factorization f = analytic_factorization(factor_n, cfg.approx, cfg.epsilon);
                Output o;
                o.inputs = {{"n", factor_n}};
                o.result = factorization_to_json(f);
                std::string joined;
                for (std::size_t i = 0; i < f.factors.size(); ++i) {
                    joined += (i ? " " : "") + std::to_string(f.factors[i]);
                }
                o.csv_header = {"n", "factors", "verification_defect"};
                o.csv_rows = {{std::to_string(f.n), joined, format_number(f.verification_defect)}};
                o.text = "factors: " + joined + "\nverification_defect: " + format_number(f.verification_defect) + "\n";
                return o;
            };
        });
    }

    // optimize
    std::string opt_problem_path;
    std::string opt_family;
    std::vector<double> opt_interval;
    std::string opt_objective;
    std::optional<std::int64_t> opt_budget;
    std::optional<std::int64_t> opt_harmonics;
    std::vector<std::string> opt_pins;
    {
        auto* sub = app.add_subcommand("optimize", "Fit kernel parameters to minimize deviation from x");
        auto* prob = sub->add_option("--problem", opt_problem_path, "Problem JSON file");
        auto* fam = sub->add_option("--family", opt_family)->check(CLI::IsMember({"alpha", "alpha_beta", "explicit"}));
        sub->add_option("--interval", opt_interval, "lo,hi")->delimiter(',')->expected(2);
        sub->add_option("--objective", opt_objective)->check(CLI::IsMember({"sup_deviation", "l2_deviation"}));
        sub->add_option("--budget", opt_budget);
        sub->add_option("--harmonics", opt_harmonics);
        sub->add_option("--pin", opt_pins, "name=value (repeatable)");
        prob->excludes(fam);
        sub->callback([&] {
            verb = "optimize";
            if (opt_problem_path.empty() && opt_family.empty()) {
                throw CLI::ValidationError("optimize", "give --problem or --family");
            }
            action = [&](const RunConfig&) {
                Json pj = opt_problem_path.empty() ? Json{{"family", opt_family}} : read_json_file(opt_problem_path);
                if (!opt_interval.empty()) pj["interval"] = opt_interval;
                if (!opt_objective.empty()) pj["objective"] = opt_objective;
                if (opt_budget) pj["budget"] = *opt_budget;
                if (opt_harmonics) pj["harmonics"] = *opt_harmonics;
                for (const std::string& pin : opt_pins) {
                    const auto eq = pin.find('=');
                    if (eq == std::string::npos) {
                        throw DomainError("--pin expects name=value, got '" + pin + "'");
                    }
                    pj["pins"][pin.substr(0, eq)] = parse_finite(pin.substr(eq + 1));
                }
                const OptimizationProblem problem = problem_from_json(pj);
                const OptimizationResult r = optimize(problem);
                Output o;
                o.inputs = problem_to_json(problem);
                o.result = result_to_json(r);
                for (const auto& [name, value] : r.params) {
                    o.csv_header.push_back(name);
                    o.text += name + "=" + format_number(value) + "\n";
                }
                o.csv_header.insert(o.csv_header.end(), {"objective_value", "evaluations_used", "converged"});
                std::vector<std::string> row;
                for (const auto& [name, value] : r.params) {
                    row.push_back(format_number(value));
                }
                row.insert(row.end(), {format_number(r.objective_value), std::to_string(r.evaluations_used),
                                       r.converged ? "true" : "false"});
                o.csv_rows = {row};
                o.text += "objective_value=" + format_number(r.objective_value) + "\n" +
                          "evaluations_used=" + std::to_string(r.evaluations_used) + "\n" +
                          "converged=" + (r.converged ? "true" : "false") + "\n";
                return o;
            };
        });
    }

    // axioms
    std::string axiom_id;
    std::string axiom_operands;
    std::int64_t axiom_random = 50;
    std::uint64_t axiom_seed = 1;
    {
        auto* sub = app.add_subcommand("axioms", "Check the arithmetic identities through the bump representations");
        auto* id = sub->add_option("--axiom", axiom_id, "Identity id (default: all nine)");
        auto* ops = sub->add_option("--operands", axiom_operands, "Comma-separated rationals, e.g. 2,3,4 or 1/2,-3/4");
        auto* rnd = sub->add_option("--random", axiom_random, "Random tuples per identity")->capture_default_str()
                        ->check(CLI::PositiveNumber);
        sub->add_option("--seed", axiom_seed, "Seed for the random tuples")->capture_default_str();
        ops->needs(id);
        ops->excludes(rnd);
        sub->callback([&] {
            verb = "axioms";
            action = [&](const RunConfig& cfg) {
                std::vector<Axiom> selected;
                if (axiom_id.empty()) {
                    selected.assign(std::begin(all_axioms), std::end(all_axioms));
                } else {
                    selected.push_back(parse_axiom(axiom_id));
                }
                Output o;
                o.inputs = {{"axiom", axiom_id.empty() ? Json("all") : Json(axiom_id)}};
                o.result = Json::array();
                if (!axiom_operands.empty()) {
                    const std::vector<Rational> operands = parse_operands(axiom_operands);
                    const AxiomCheck c = check_axiom(selected.front(), operands, cfg.approx);
                    o.inputs["operands"] = axiom_operands;
                    o.result.push_back({{"axiom", axiom_id},
                                        {"holds", c.holds},
                                        {"defect", c.defect},
                                        {"lhs", c.lhs},
                                        {"rhs", c.rhs}});
                    o.csv_header = {"axiom", "holds", "defect", "lhs", "rhs"};
                    o.csv_rows = {{axiom_id, c.holds ? "true" : "false", format_number(c.defect),
                                   format_number(c.lhs), format_number(c.rhs)}};
                    o.text = axiom_id + " holds=" + (c.holds ? "true" : "false") + " defect=" +
                             format_number(c.defect) + " lhs=" + format_number(c.lhs) + " rhs=" + format_number(c.rhs) +
                             "\n";
                    return o;
                }
                o.inputs["random"] = axiom_random;
                o.inputs["seed"] = axiom_seed;
                o.csv_header = {"axiom", "checks", "failures", "max_defect"};
                std::mt19937_64 rng(axiom_seed);
                for (Axiom a : selected) {
                    std::int64_t failures = 0;
                    double worst = 0.0;
                    Json tuples = Json::array();
                    for (std::int64_t t = 0; t < axiom_random; ++t) {
                        const std::vector<Rational> operands = random_operands(a, rng);
                        const AxiomCheck c = check_axiom(a, operands, cfg.approx);
                        failures += c.holds ? 0 : 1;
                        worst = std::max(worst, c.defect);
                        Json ops_json = Json::array();
                        for (const Rational& r : operands) {
                            ops_json.push_back(rational_text(r));
                        }
                        tuples.push_back({{"operands", ops_json}, {"holds", c.holds}, {"defect", c.defect}});
                    }
                    const std::string name(axiom_name(a));
                    o.result.push_back({{"axiom", name},
                                        {"checks", axiom_random},
                                        {"failures", failures},
                                        {"max_defect", worst},
                                        {"cases", tuples}});
                    o.csv_rows.push_back({name, std::to_string(axiom_random), std::to_string(failures),
                                          format_number(worst)});
                    o.text += name + " checks=" + std::to_string(axiom_random) + " failures=" +
                              std::to_string(failures) + " max_defect=" + format_number(worst) + "\n";
                }
                return o;
            };
        });
    }

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("wavearith");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (show_version) {
            err << version << '\n';
            return exit_ok;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage_error;
    }

    if (show_version) {
        err << version << '\n';
    }
    const Format format = g.output == "json" ? Format::json : g.output == "csv" ? Format::csv : Format::text;
    try {
        const RunConfig cfg = resolve_config(g);
        const Output o = action(cfg);
        emit(o, format, verb, cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
    return exit_ok;
}

} // namespace wavearith::cli
