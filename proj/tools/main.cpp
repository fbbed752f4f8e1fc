// Command-line front end. Exit codes: 0 pass, 1 property violated,
// 2 inconclusive or budget exhausted, 3 usage error.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "tverberg/errors.hpp"
#include "tverberg/experiments.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/json_io.hpp"
#include "tverberg/version.hpp"

namespace {

using namespace tverberg;

constexpr int exit_pass = 0;
constexpr int exit_violated = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_usage = 3;

struct Globals
{
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget;
    unsigned workers = 1;
    std::string out;
    std::string format;
};

std::string read_input(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path)
{
    try
    {
        return Json::parse(read_input(path));
    }
    catch (const Json::exception& e)
    {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

// A configuration file is JSON when it starts with '{', CSV otherwise.
PointConfiguration read_configuration(const std::string& path)
{
    const std::string text = read_input(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return configuration_from_json(Json::parse(text));
    return parse_csv(text);
}

void emit(const Globals& g, const std::string& text)
{
    if (g.out.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot write '" + g.out + "'");
    out << text;
}

void emit(const Globals& g, const Json& j)
{
    if (g.format == "csv")
        throw InvalidInput("csv output is only available for gen");
    emit(g, j.dump(2) + "\n");
}

void emit(const Globals& g, const PointConfiguration& c)
{
    if (g.format == "json")
        emit(g, to_json(c).dump(2) + "\n");
    else
        emit(g, to_csv(c));
}

int search_exit(SearchStatus s, bool want_found)
{
    if (s == SearchStatus::budget_exhausted)
        return exit_inconclusive;
    return (s == SearchStatus::found) == want_found ? exit_pass : exit_violated;
}

SearchOptions search_options(const Globals& g)
{
    SearchOptions o;
    if (g.budget)
        o.budget = *g.budget;
    o.workers = g.workers;
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact-arithmetic Tverberg-type searches, constructions and checks"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tverberg::version));

    Globals g;
    app.add_option("--seed", g.seed, "Seed for every pseudorandom stream");
    app.add_option("--budget", g.budget, "Maximum number of candidates examined");
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::function<int()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate point configurations (CSV by default)");
    gen->require_subcommand(1);
    int gen_dim = 0, gen_count = 0;
    std::vector<std::string> gen_params;
    auto* moment = gen->add_subcommand("moment", "Points on the moment curve");
    moment->add_option("--dim", gen_dim, "Dimension d")->required();
    moment->add_option("--count", gen_count, "Use t = 1..count");
    moment->add_option("--params", gen_params, "Explicit parameters t_i (p/q)")->delimiter(',');
    moment->callback([&] {
        action = [&] {
            PointConfiguration c = gen_params.empty() ? moment_curve_points(gen_dim, gen_count) : [&] {
                Vector t;
                for (const auto& s : gen_params)
                    t.push_back(parse_rational(s));
                return moment_curve_points(gen_dim, t);
            }();
            emit(g, c);
            return exit_pass;
        };
    });
    RandomConfigOptions random_opts;
    auto* random = gen->add_subcommand("random", "Seeded random rational points in general position");
    random->add_option("--dim", gen_dim, "Dimension d")->required();
    random->add_option("--count", gen_count, "Number of points N")->required();
    random->add_option("--denominator-bound", random_opts.denominator_bound, "Bound B on denominators");
    random->add_option("--max-retries", random_opts.max_retries, "Redraws before giving up");
    random->callback([&] {
        action = [&] {
            emit(g, random_rational_config(gen_count, gen_dim, g.seed, random_opts));
            return exit_pass;
        };
    });

    // search / refute
    std::string config_path;
    int r = 0;
    std::vector<int> sizes;
    auto* search = app.add_subcommand("search", "First Tverberg partition in enumeration order");
    search->add_option("--config", config_path, "Point configuration (CSV or JSON, '-' for stdin)")->required();
    search->add_option("--r", r, "Number of parts")->required();
    search->add_option("--sizes", sizes, "Part sizes, nondecreasing")->delimiter(',');
    search->callback([&] {
        action = [&] {
            const auto config = read_configuration(config_path);
            std::optional<std::vector<int>> s;
            if (!sizes.empty())
                s = sizes;
            const auto res = find_tverberg_partition(config, r, s, search_options(g));
            Json j = to_json(res);
            if (res.witness)
                j["verified"] = verify_witness(config, *res.partition, *res.witness);
            emit(g, j);
            return search_exit(res.status, true);
        };
    });
    auto* refute = app.add_subcommand("refute", "Exhaustive proof that a size profile does not occur");
    refute->add_option("--config", config_path, "Point configuration (CSV or JSON, '-' for stdin)")->required();
    refute->add_option("--r", r, "Number of parts")->required();
    refute->add_option("--sizes", sizes, "Part sizes, nondecreasing")->delimiter(',')->required();
    refute->callback([&] {
        action = [&] {
            const auto config = read_configuration(config_path);
            const auto res = refute_occurrence(config, r, sizes, search_options(g));
            emit(g, to_json(res));
            return search_exit(res.status, false);
        };
    });

    // cexmap
    auto* cexmap = app.add_subcommand("cexmap", "Skeleton-distance counterexample maps");
    cexmap->require_subcommand(1);
    int map_n = 0, map_d = 0, map_d1 = 0;
    std::string g_path, map_path;
    std::vector<int> dims;
    auto build_map = [&] {
        if (!map_path.empty())
            return pl_map_from_json(read_json(map_path));
        if (g_path.empty())
            throw InvalidInput("give --map or --g with --N, --d, --d1");
        return build_counterexample_map(map_n, map_d, map_d1, read_configuration(g_path));
    };
    auto* cex_build = cexmap->add_subcommand("build", "Build the map from g in Q^{d-1}");
    cex_build->add_option("--N", map_n, "Domain simplex Δ_N")->required();
    cex_build->add_option("--d", map_d, "Target dimension")->required();
    cex_build->add_option("--d1", map_d1, "Skeleton dimension")->required();
    cex_build->add_option("--g", g_path, "N+1 points in Q^{d-1}")->required();
    cex_build->callback([&] {
        action = [&] {
            emit(g, to_json(build_map()));
            return exit_pass;
        };
    });
    auto* cex_probe = cexmap->add_subcommand("probe", "Search face tuples for an r-fold intersection");
    cex_probe->add_option("--map", map_path, "PL map JSON from cexmap build");
    cex_probe->add_option("--N", map_n, "Domain simplex Δ_N");
    cex_probe->add_option("--d", map_d, "Target dimension");
    cex_probe->add_option("--d1", map_d1, "Skeleton dimension");
    cex_probe->add_option("--g", g_path, "N+1 points in Q^{d-1}");
    cex_probe->add_option("--r", r, "Number of faces")->required();
    cex_probe->add_option("--dims", dims, "Face dimensions, nondecreasing")->delimiter(',')->required();
    cex_probe->callback([&] {
        action = [&] {
            const PLMap f = build_map();
            const int d = map_d ? map_d : f.target_dim();
            MapSearchOptions o;
            if (g.budget)
                o.budget = *g.budget;
            o.workers = g.workers;
            o.seed = g.seed;
            const auto res = search_map_violation(f, r, DimensionTuple(r, d, dims), o);
            Json j = to_json(res);
            if (res.witness)
                j["verified"] = verify_map_witness(f, *res.partition, *res.witness);
            emit(g, j);
            if (res.status == SearchStatus::found)
                return exit_violated;
            return res.status == SearchStatus::exhausted_none ? exit_pass : exit_inconclusive;
        };
    });

    // collapse
    int join_d = 0, join_n = -1;
    std::int64_t bound = 16;
    auto* collapse = app.add_subcommand("collapse", "Collapse a Z/r-orbit of an affine map on [r]^{*(n+1)}");
    collapse->add_option("--map", map_path, "AffineJoinMap JSON; random from --seed when absent");
    collapse->add_option("--r", r, "Group order r");
    collapse->add_option("--d", join_d, "Target dimension");
    collapse->add_option("--n", join_n, "Columns minus one; default (r-1)d");
    collapse->add_option("--bound", bound, "Coefficient bound for random maps");
    collapse->callback([&] {
        action = [&] {
            AffineJoinMap f;
            if (!map_path.empty())
                f = join_map_from_json(read_json(map_path));
            else
            {
                if (r < 2 || join_d < 1)
                    throw InvalidInput("random maps need --r >= 2 and --d >= 1");
                f = random_affine_join_map(r, join_n < 0 ? (r - 1) * join_d : join_n, join_d, g.seed, bound);
            }
            const auto c = collapse_orbit(f);
            emit(g, Json{{"map", to_json(f)}, {"collapse", to_json(c)}});
            return exit_pass;
        };
    });

    // complex
    auto* complex = app.add_subcommand("complex", "Simplicial complexes");
    complex->require_subcommand(1);
    std::string kind, in_path;
    int cm = 0, cn = 0, power = 1, modulus = 0;
    std::vector<int> bounds;
    auto* cbuild = complex->add_subcommand("build", "Build a complex as JSON");
    cbuild->add_option("--kind", kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"simplex", "boundary", "chessboard", "symmetric-chessboard", "deleted-join",
                               "circle-join", "subdivision"}));
    cbuild->add_option("--m", cm, "Rows (chessboards)");
    cbuild->add_option("--n", cn, "Simplex dimension, or columns for chessboards");
    cbuild->add_option("--k", bounds, "Column bounds")->delimiter(',');
    cbuild->add_option("--r", r, "Deleted-join arity or circle order");
    cbuild->add_option("--power", power, "Join power for circle-join");
    cbuild->add_option("--in", in_path, "Base complex JSON for deleted-join or subdivision");
    cbuild->callback([&] {
        action = [&] {
            auto input = [&] {
                return in_path.empty() ? SimplicialComplex::simplex(cn) : complex_from_json(read_json(in_path));
            };
            Json out;
            if (kind == "simplex")
                out = to_json(SimplicialComplex::simplex(cn));
            else if (kind == "boundary")
                out = to_json(SimplicialComplex::simplex_boundary(cn));
            else if (kind == "chessboard")
                out = to_json(multiple_chessboard(cm, cn, bounds));
            else if (kind == "symmetric-chessboard")
                out = to_json(symmetric_multiple_chessboard(cm, cn, bounds));
            else if (kind == "deleted-join")
                out = to_json(deleted_join(input(), r));
            else if (kind == "subdivision")
                out = to_json(barycentric_subdivision(input()));
            else
            {
                const auto c = circle_join_power(r, power);
                out = to_json(c.complex);
                out["action"] = c.action;
                out["embedding"] = c.embedding;
                out["embeds_as_subcomplex"] = c.embeds_as_subcomplex;
                out["equivariant"] = c.equivariant;
            }
            emit(g, out);
            return exit_pass;
        };
    });
    auto* chom = complex->add_subcommand("hom", "Reduced homology");
    chom->add_option("--in", in_path, "Complex JSON ('-' for stdin)")->required();
    chom->add_option("--modulus", modulus, "0 for the integers, or a prime p");
    chom->callback([&] {
        action = [&] {
            emit(g, to_json(homology(complex_from_json(read_json(in_path)), modulus)));
            return exit_pass;
        };
    });
    auto* cshell = complex->add_subcommand("shell", "Backtracking shellability search");
    cshell->add_option("--in", in_path, "Complex JSON ('-' for stdin)")->required();
    cshell->callback([&] {
        action = [&] {
            const auto k = complex_from_json(read_json(in_path));
            const auto res = is_shellable(k, g.budget.value_or(1'000'000));
            emit(g, to_json(res, k));
            switch (res.status)
            {
                case ShellStatus::shellable: return exit_pass;
                case ShellStatus::not_shellable: return exit_violated;
                default: return exit_inconclusive;
            }
        };
    });
    int phi_d = 0, phi_n = -1;
    auto* cphi = complex->add_subcommand("phi-verify", "Exhaustive check of the constraint map zero set");
    cphi->add_option("--r", r, "Number of components")->required();
    cphi->add_option("--d", phi_d, "Dimension d")->required();
    cphi->add_option("--N", phi_n, "Simplex Δ_N; default (r-1)(d+2)");
    cphi->add_option("--dims", dims, "Dimension tuple; default balanced")->delimiter(',');
    cphi->callback([&] {
        action = [&] {
            const DimensionTuple t = dims.empty() ? balanced_tuple(r, phi_d) : DimensionTuple(r, phi_d, dims);
            const int n = phi_n < 0 ? (r - 1) * (phi_d + 2) : phi_n;
            const auto v = verify_constraint_zero_set(n, t, std::nullopt, g.budget.value_or(20'000'000));
            emit(g, to_json(v));
            return v.passed ? exit_pass : exit_violated;
        };
    });

    // run
    std::string experiment;
    std::vector<std::string> assignments;
    auto* run = app.add_subcommand("run", "Run a registered experiment with key=value parameters");
    run->add_option("experiment", experiment, "Experiment id")->required();
    run->add_option("params", assignments, "key=value parameters");
    run->callback([&] {
        action = [&] {
            ExperimentParams params;
            for (const auto& a : assignments)
            {
                const auto eq = a.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw InvalidInput("parameters are key=value, got '" + a + "'");
                params[a.substr(0, eq)] = a.substr(eq + 1);
            }
            ExperimentContext ctx{g.seed, g.budget, g.workers};
            const auto report = run_experiment(experiment, params, ctx);
            emit(g, report.report);
            return static_cast<int>(report.verdict);
        };
    });

    std::string experiments_list;
    for (const auto& name : experiment_names())
        experiments_list += "  " + name + "\n";
    run->footer("Experiments:\n" + experiments_list);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_usage;
    }

    try
    {
        return action();
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const BudgetExceeded& e)
    {
        std::cerr << "budget: " << e.what() << "\n";
        return exit_inconclusive;
    }
    catch (const RetriesExhausted& e)
    {
        std::cerr << "retries: " << e.what() << "\n";
        return exit_inconclusive;
    }
    catch (const Json::exception& e)
    {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return exit_usage;
    }
}
