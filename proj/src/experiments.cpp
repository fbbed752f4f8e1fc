#include "tverberg/experiments.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "tverberg/errors.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/version.hpp"

namespace tverberg {

std::string to_string(Verdict v)
{
    switch (v)
    {
        case Verdict::pass: return "pass";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

// Typed access to key=value parameters; every key read is recorded with its
// effective value, and leftover keys are rejected.
class Params
{
    public:
        explicit Params(const ExperimentParams& raw) : raw_(raw) {}

        int integer(const std::string& key, int fallback, int min = std::numeric_limits<int>::min())
        {
            int v = fallback;
            if (auto it = raw_.find(key); it != raw_.end())
            {
                std::size_t used = 0;
                try
                {
                    v = std::stoi(it->second, &used);
                }
                catch (const std::exception&)
                {
                    used = 0;
                }
                if (used == 0 || used != it->second.size())
                    throw InvalidInput("parameter " + key + " must be an integer");
            }
            if (v < min)
                throw InvalidInput("parameter " + key + " must be >= " + std::to_string(min));
            seen_.insert(key);
            resolved_[key] = v;
            return v;
        }

        std::optional<std::vector<int>> list(const std::string& key)
        {
            seen_.insert(key);
            auto it = raw_.find(key);
            if (it == raw_.end())
                return std::nullopt;
            std::vector<int> out;
            std::stringstream ss(it->second);
            std::string item;
            while (std::getline(ss, item, ','))
            {
                try
                {
                    std::size_t used = 0;
                    out.push_back(std::stoi(item, &used));
                    if (used != item.size())
                        throw InvalidInput("");
                }
                catch (const std::exception&)
                {
                    throw InvalidInput("parameter " + key + " must be a comma-separated list of integers");
                }
            }
            resolved_[key] = out;
            return out;
        }

        void record(const std::string& key, Json value) { resolved_[key] = std::move(value); }

        Json finish()
        {
            for (const auto& [key, value] : raw_)
                if (!seen_.count(key))
                    throw InvalidInput("unknown parameter '" + key + "'");
            return resolved_;
        }

    private:
        const ExperimentParams& raw_;
        std::set<std::string> seen_;
        Json resolved_ = Json::object();
};

struct Outcome
{
    Verdict verdict = Verdict::pass;
    Json summary = Json::object();
    Json results = Json::array();
};

Verdict worst(Verdict a, Verdict b)
{
    if (a == Verdict::violated || b == Verdict::violated)
        return Verdict::violated;
    if (a == Verdict::inconclusive || b == Verdict::inconclusive)
        return Verdict::inconclusive;
    return Verdict::pass;
}

Verdict from_search(SearchStatus s, bool want_found)
{
    if (s == SearchStatus::budget_exhausted)
        return Verdict::inconclusive;
    return (s == SearchStatus::found) == want_found ? Verdict::pass : Verdict::violated;
}

std::uint64_t budget_or(const ExperimentContext& ctx, std::uint64_t fallback)
{
    return ctx.budget.value_or(fallback);
}

Json budget_json(std::uint64_t b)
{
    return b == unlimited ? Json(nullptr) : Json(b);
}

Outcome existence_trials(Params& p, const ExperimentContext& ctx, bool balanced)
{
    const int r = p.integer("r", 3, 2);
    const int d = p.integer("d", 2, 1);
    const int trials = p.integer("trials", 50, 1);
    const std::uint64_t budget = budget_or(ctx, unlimited);
    p.record("budget", budget_json(budget));

    int points = (r - 1) * (d + 1) + 1;
    std::optional<std::vector<int>> sizes;
    if (balanced)
    {
        points = (r - 1) * (d + 2) + 1;
        sizes.emplace();
        const DimensionTuple tuple = balanced_tuple(r, d);
        for (int k : tuple.dims())
            sizes->push_back(k + 1);
        p.record("sizes", *sizes);
    }
    p.record("points", points);

    Outcome out;
    SplitMix64 seeds(ctx.seed);
    int found = 0;
    int verified = 0;
    for (int t = 0; t < trials; ++t)
    {
        const std::uint64_t s = seeds.next();
        const auto config = random_rational_config(points, d, s);
        const auto res = find_tverberg_partition(config, r, sizes, {budget, ctx.workers});
        const bool ok = res.status == SearchStatus::found && verify_witness(config, *res.partition, *res.witness);
        found += res.status == SearchStatus::found;
        verified += ok;
        Json entry = to_json(res);
        entry["trial"] = t;
        entry["seed"] = s;
        entry["verified"] = ok;
        out.results.push_back(entry);
        Verdict v = from_search(res.status, true);
        if (v == Verdict::pass && !ok)
            v = Verdict::violated;
        out.verdict = worst(out.verdict, v);
    }
    out.summary = {{"trials", trials}, {"found", found}, {"verified", verified}};
    return out;
}

Outcome colorful_sweep(Params& p, const ExperimentContext&)
{
    const int rmax = p.integer("rmax", 6, 2);
    const int dmax = p.integer("dmax", 6, 1);
    Outcome out;
    int tuples = 0, passed = 0, d_minus_dj = 0;
    for (int r = 2; r <= rmax; ++r)
        for (int d = 1; d <= dmax; ++d)
        {
            int here = 0, ok_here = 0;
            for (const auto& t : admissible_tuples(r, d))
            {
                ++tuples;
                ++here;
                const auto part = build_colorful_partition(t);
                const auto sizes = part.sizes();
                bool sizes_ok = true, other_reading = true;
                for (int i = 0; i < r; ++i)
                {
                    sizes_ok = sizes_ok && sizes[i] == t.dims()[i] + 1;
                    other_reading = other_reading && sizes[i] == d - t.dims()[i];
                }
                d_minus_dj += other_reading;
                if (sizes_ok && is_colorful(part, r, d))
                {
                    ++passed;
                    ++ok_here;
                }
                else
                {
                    out.verdict = Verdict::violated;
                    out.results.push_back({{"failure", to_json(t)}, {"partition", to_json(part)}});
                }
            }
            out.summary["by_rd"].push_back({{"r", r}, {"d", d}, {"tuples", here}, {"passed", ok_here}});
        }
    out.summary["tuples"] = tuples;
    out.summary["passed"] = passed;
    out.summary["part_size_rule"] = "d_i + 1";
    out.summary["tuples_matching_size_d_minus_d_i"] = d_minus_dj;
    return out;
}

Outcome phi_verify(Params& p, const ExperimentContext& ctx)
{
    const int r = p.integer("r", 2, 2);
    const int d = p.integer("d", 1, 1);
    const int n = p.integer("N", (r - 1) * (d + 2), 0);
    const auto dims_list = p.list("dims");
    const DimensionTuple dims = dims_list ? DimensionTuple(r, d, *dims_list) : balanced_tuple(r, d);
    p.record("dims", dims.dims());
    const std::uint64_t budget = budget_or(ctx, 20'000'000);
    p.record("budget", budget);

    Outcome out;
    out.summary["balanced"] = is_balanced(dims);
    out.summary["sum_matches"] = std::accumulate(dims.dims().begin(), dims.dims().end(), 0) == (r - 1) * d;
    try
    {
        const auto v = verify_constraint_zero_set(n, dims, std::nullopt, budget);
        out.results.push_back(to_json(v));
        out.verdict = v.passed ? Verdict::pass : Verdict::violated;
    }
    catch (const BudgetExceeded& e)
    {
        out.summary["error"] = e.what();
        out.verdict = Verdict::inconclusive;
    }
    return out;
}

Outcome moment_refute(Params& p, const ExperimentContext& ctx)
{
    const int d = p.integer("d", 2, 1);
    const int n = p.integer("n", 9, 2);
    const int r = p.integer("r", 2, 2);
    const std::uint64_t budget = budget_or(ctx, unlimited);
    p.record("budget", budget_json(budget));
    const auto config = moment_curve_points(d, n);

    Outcome out;
    std::uint64_t lps = 0;
    int profiles = 0;
    for (const auto& prof : size_profiles(r, n))
    {
        if (prof.front() > d / 2)
            continue;
        ++profiles;
        const auto res = refute_occurrence(config, r, prof, {budget, ctx.workers});
        lps += res.stats.lps_solved;
        Json entry = to_json(res);
        entry["sizes"] = prof;
        out.results.push_back(entry);
        out.verdict = worst(out.verdict, from_search(res.status, false));
    }
    out.summary = {{"profiles", profiles}, {"lps_solved", lps}};
    return out;
}

Outcome cexmap_probe(Params& p, const ExperimentContext& ctx)
{
    const int r = p.integer("r", 3, 2);
    const int d = p.integer("d", 3, 2);
    const int n = p.integer("N", 13, 1);
    const int d1 = p.integer("d1", 1, 0);
    const auto dims_list = p.list("dims");
    const DimensionTuple dims =
        dims_list ? DimensionTuple(r, d, *dims_list) : DimensionTuple(r, d, [&] {
            std::vector<int> v{d1};
            for (int i = 1; i < r; ++i)
                v.push_back(std::min(d, d1 + i));
            return v;
        }());
    p.record("dims", dims.dims());
    const int sgp_budget = p.integer("sgp_budget", 3'000'000, 1);
    const int control_budget = p.integer("control_budget", 1'000'000, 1);
    const std::uint64_t samples = budget_or(ctx, 100'000);
    p.record("budget", samples);

    Outcome out;
    SplitMix64 seeds(ctx.seed);
    std::optional<PointConfiguration> g;
    Json attempts = Json::array();
    for (int a = 0; a < 10 && !g; ++a)
    {
        const std::uint64_t s = seeds.next();
        auto candidate = random_rational_config(n + 1, d - 1, s);
        const auto verdict = strong_general_position_check(candidate, r, static_cast<std::size_t>(sgp_budget), s);
        attempts.push_back({{"seed", s}, {"strong_general_position", to_json(verdict)}});
        if (verdict.status != PositionStatus::violated)
        {
            g = std::move(candidate);
            if (verdict.status != PositionStatus::holds)
                out.verdict = Verdict::inconclusive;
        }
    }
    out.summary["g_attempts"] = attempts;
    if (!g)
    {
        out.verdict = Verdict::inconclusive;
        return out;
    }
    out.summary["g"] = to_json(*g);

    const PLMap f = build_counterexample_map(n, d, d1, *g);
    const auto probe = search_map_violation(f, r, dims, {samples, ctx.workers, seeds.next()});
    Json probe_json = to_json(probe);
    probe_json["role"] = "probe";
    if (probe.status == SearchStatus::found)
    {
        probe_json["verified"] = verify_map_witness(f, *probe.partition, *probe.witness);
        out.verdict = Verdict::violated;
    }
    out.results.push_back(probe_json);

    const auto control_points = random_rational_config(n + 1, d, seeds.next());
    const DimensionTuple control_dims = balanced_tuple(r, d);
    const PLMap affine = affine_pl_map(control_points);
    const auto control = search_map_violation(affine, r, control_dims,
                                              {static_cast<std::uint64_t>(control_budget), ctx.workers, 0});
    Json control_json = to_json(control);
    control_json["role"] = "affine-control";
    control_json["dims"] = control_dims.dims();
    const bool control_ok =
        control.status == SearchStatus::found && verify_map_witness(affine, *control.partition, *control.witness);
    control_json["verified"] = control_ok;
    out.results.push_back(control_json);
    if (!control_ok)
        out.verdict = worst(out.verdict, Verdict::inconclusive);

    out.summary["probe_intersections"] = probe.status == SearchStatus::found ? 1 : 0;
    out.summary["probe_exhaustive"] = !probe.sampled;
    out.summary["control_found"] = control_ok;
    return out;
}

Outcome orbit_collapse(Params& p, const ExperimentContext& ctx)
{
    const int r = p.integer("r", 3, 2);
    const int d = p.integer("d", 1, 1);
    const int n = p.integer("n", (r - 1) * d, 0);
    const int trials = p.integer("trials", 100, 1);
    const int bound = p.integer("bound", 16, 1);

    Outcome out;
    SplitMix64 seeds(ctx.seed);
    int collapsed = 0;
    std::size_t pivots = 0;
    for (int t = 0; t < trials; ++t)
    {
        const std::uint64_t s = seeds.next();
        const auto f = random_affine_join_map(r, n, d, s, bound);
        const auto c = collapse_orbit(f);
        bool equal = true;
        for (int k = 1; k < r; ++k)
            equal = equal && evaluate(f, shift(c.point, r, k)) == c.image;
        collapsed += equal;
        pivots += c.pivots;
        Json entry = to_json(c);
        entry["trial"] = t;
        entry["seed"] = s;
        entry["images_equal"] = equal;
        out.results.push_back(entry);
        if (!equal)
            out.verdict = Verdict::violated;
    }
    out.summary = {{"trials", trials}, {"collapsed", collapsed}, {"pivots", pivots}};
    return out;
}

Outcome sphere_homology(Params& p, const ExperimentContext&)
{
    const int r = p.integer("r", 3, 2);
    const int k = p.integer("k", 2, 1);
    const int nmax = p.integer("nmax", 5, 1);

    Outcome out;
    auto check = [&](const std::string& name, const SimplicialComplex& c, int sphere) {
        const auto h = homology(c);
        const bool ok = is_homology_sphere(h, sphere);
        out.results.push_back({{"complex", name},
                               {"vertices", c.vertex_count()},
                               {"facets", c.facets().size()},
                               {"expected_sphere", sphere},
                               {"homology", to_json(h)},
                               {"euler_consistent", [&] {
                                    Integer alt = 0;
                                    for (std::size_t i = 0; i < h.betti.size(); ++i)
                                        alt += (i % 2 == 0 ? -1 : 1) * h.betti[i];
                                    return alt == c.reduced_euler_characteristic();
                                }()},
                               {"match", ok}});
        if (!ok)
            out.verdict = Verdict::violated;
    };

    const auto cj = circle_join_power(r, k);
    check("C_" + std::to_string(2 * r) + "^*" + std::to_string(k), cj.complex, 2 * k - 1);
    out.results.back()["embeds_as_subcomplex"] = cj.embeds_as_subcomplex;
    out.results.back()["equivariant"] = cj.equivariant;
    if (!cj.embeds_as_subcomplex || !cj.equivariant)
        out.verdict = Verdict::violated;
    for (int n = 1; n <= nmax; ++n)
        check("boundary of simplex " + std::to_string(n), SimplicialComplex::simplex_boundary(n), n - 1);
    check("chessboard 3x2", multiple_chessboard(3, 2, {1, 1}), 1);
    out.summary = {{"complexes", out.results.size()}};
    return out;
}

using Runner = std::function<Outcome(Params&, const ExperimentContext&)>;

const std::map<std::string, Runner>& registry()
{
    static const std::map<std::string, Runner> table{
        {"tverberg-existence", [](Params& p, const ExperimentContext& c) { return existence_trials(p, c, false); }},
        {"balanced-search", [](Params& p, const ExperimentContext& c) { return existence_trials(p, c, true); }},
        {"colorful-builder-sweep", colorful_sweep},
        {"phi-verify", phi_verify},
        {"moment-refute", moment_refute},
        {"cexmap-probe", cexmap_probe},
        {"orbit-collapse", orbit_collapse},
        {"sphere-homology", sphere_homology},
    };
    return table;
}

} // namespace

std::vector<std::string> experiment_names()
{
    std::vector<std::string> out;
    for (const auto& [name, run] : registry())
        out.push_back(name);
    return out;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentParams& params,
                                const ExperimentContext& context)
{
    const auto it = registry().find(name);
    if (it == registry().end())
        throw InvalidInput("unknown experiment '" + name + "'");
    Params p(params);
    Outcome outcome = it->second(p, context);
    ExperimentReport report;
    report.verdict = outcome.verdict;
    report.report = Json{{"tool", "tverberg"},
                         {"version", version},
                         {"experiment", name},
                         {"seed", context.seed},
                         {"params", p.finish()},
                         {"verdict", to_string(outcome.verdict)},
                         {"summary", outcome.summary},
                         {"results", outcome.results}};
    return report;
}

} // namespace tverberg
