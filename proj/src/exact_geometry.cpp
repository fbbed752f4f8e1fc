#include "tverberg/exact_geometry.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "tverberg/errors.hpp"
#include "tverberg/lp.hpp"
#include "tverberg/random.hpp"

namespace tverberg {

PointConfiguration::PointConfiguration(int dim, std::vector<Vector> points) : dim_(dim), points_(std::move(points))
{
    if (dim_ < 1)
        throw InvalidInput("point configuration needs dim >= 1");
    if (points_.empty())
        throw InvalidInput("point configuration needs at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i)
    {
        if (static_cast<int>(points_[i].size()) != dim_)
            throw InvalidInput("point " + std::to_string(i + 1) + " has " + std::to_string(points_[i].size()) +
                               " coordinates, expected " + std::to_string(dim_));
    }
}

std::optional<HullIntersection> common_point(std::span<const std::vector<Vector>> hulls, std::size_t dim)
{
    if (hulls.empty())
        throw InvalidInput("common_point: no hulls");
    std::vector<std::size_t> offset{0};
    for (const auto& h : hulls)
    {
        if (h.empty())
            throw InvalidInput("common_point: empty point list");
        for (const auto& p : h)
            if (p.size() != dim)
                throw InvalidInput("common_point: point dimension mismatch");
        offset.push_back(offset.back() + h.size());
    }
    const std::size_t cols = offset.back();
    const std::size_t r = hulls.size();

    Matrix a;
    Vector b;
    for (std::size_t i = 0; i < r; ++i)
    {
        Vector row(cols, Rational(0));
        for (std::size_t j = offset[i]; j < offset[i + 1]; ++j)
            row[j] = 1;
        a.push_back(std::move(row));
        b.push_back(1);
    }
    // sum_j w_0j p_0j - sum_j w_ij p_ij = 0 for i >= 1, every coordinate.
    for (std::size_t i = 1; i < r; ++i)
    {
        for (std::size_t c = 0; c < dim; ++c)
        {
            Vector row(cols, Rational(0));
            for (std::size_t j = 0; j < hulls[0].size(); ++j)
                row[offset[0] + j] = hulls[0][j][c];
            for (std::size_t j = 0; j < hulls[i].size(); ++j)
                row[offset[i] + j] = -hulls[i][j][c];
            a.push_back(std::move(row));
            b.push_back(0);
        }
    }

    auto lp = find_feasible_point(a, b, cols);
    if (!lp.solution)
        return std::nullopt;

    HullIntersection out;
    out.pivots = lp.pivots;
    out.point.assign(dim, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
    {
        Vector w(lp.solution->begin() + static_cast<std::ptrdiff_t>(offset[i]),
                 lp.solution->begin() + static_cast<std::ptrdiff_t>(offset[i + 1]));
        out.weights.push_back(std::move(w));
    }
    for (std::size_t j = 0; j < hulls[0].size(); ++j)
        for (std::size_t c = 0; c < dim; ++c)
            out.point[c] += out.weights[0][j] * hulls[0][j][c];
    return out;
}

std::optional<IntersectionWitness> convex_hulls_intersect(const PointConfiguration& config,
                                                          const IndexPartition& partition)
{
    if (partition.ground_size != config.size())
        throw InvalidInput("convex_hulls_intersect: partition ground size " + std::to_string(partition.ground_size) +
                           " does not match " + std::to_string(config.size()) + " points");
    validate_partition(partition);
    std::vector<std::vector<Vector>> hulls;
    for (const auto& part : partition.parts)
    {
        if (part.empty())
            throw InvalidInput("convex_hulls_intersect: empty part");
        std::vector<Vector> pts;
        for (int label : part)
            pts.push_back(config.point(label));
        hulls.push_back(std::move(pts));
    }
    auto hit = common_point(hulls, static_cast<std::size_t>(config.dim()));
    if (!hit)
        return std::nullopt;
    IntersectionWitness w;
    w.point = std::move(hit->point);
    for (std::size_t i = 0; i < partition.parts.size(); ++i)
    {
        std::map<int, Rational> coeffs;
        for (std::size_t j = 0; j < partition.parts[i].size(); ++j)
            coeffs.emplace(partition.parts[i][j], hit->weights[i][j]);
        w.coefficients.push_back(std::move(coeffs));
    }
    return w;
}

bool verify_witness(const PointConfiguration& config, const IndexPartition& partition,
                    const IntersectionWitness& witness)
{
    if (witness.coefficients.size() != partition.parts.size() ||
        static_cast<int>(witness.point.size()) != config.dim())
        return false;
    for (std::size_t i = 0; i < partition.parts.size(); ++i)
    {
        const auto& coeffs = witness.coefficients[i];
        if (coeffs.size() != partition.parts[i].size())
            return false;
        Rational total = 0;
        Vector sum(static_cast<std::size_t>(config.dim()), Rational(0));
        for (int label : partition.parts[i])
        {
            auto it = coeffs.find(label);
            if (it == coeffs.end() || it->second < 0)
                return false;
            total += it->second;
            for (int c = 0; c < config.dim(); ++c)
                sum[c] += it->second * config.point(label)[c];
        }
        if (total != 1 || sum != witness.point)
            return false;
    }
    return true;
}

bool is_barycentric(const Vector& x)
{
    Rational total = 0;
    for (const auto& v : x)
    {
        if (v < 0)
            return false;
        total += v;
    }
    return !x.empty() && total == 1;
}

Vector project_to_simplex(const Vector& v)
{
    if (v.empty())
        throw InvalidInput("project_to_simplex: empty vector");
    Vector sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    Rational prefix = 0;
    Rational tau = 0;
    for (std::size_t j = 0; j < sorted.size(); ++j)
    {
        prefix += sorted[j];
        Rational t = (prefix - 1) / static_cast<long>(j + 1);
        if (sorted[j] - t > 0)
            tau = std::move(t);
    }
    Vector y(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        y[i] = v[i] > tau ? Rational(v[i] - tau) : Rational(0);
    return y;
}

Rational squared_distance_to_skeleton(const Vector& x, int k)
{
    if (!is_barycentric(x))
        throw InvalidInput("squared_distance_to_skeleton: point is not barycentric");
    const int n = static_cast<int>(x.size()) - 1;
    if (k < 0 || k > n)
        throw InvalidInput("squared_distance_to_skeleton: skeleton dimension out of range");

    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

    Vector face;
    for (int i = 0; i <= k; ++i)
        face.push_back(x[order[i]]);
    const Vector y = project_to_simplex(face);

    Rational dist = 0;
    for (int i = 0; i <= k; ++i)
    {
        Rational diff = face[i] - y[i];
        dist += diff * diff;
    }
    for (std::size_t i = static_cast<std::size_t>(k) + 1; i < order.size(); ++i)
        dist += x[order[i]] * x[order[i]];
    return dist;
}

std::string to_string(PositionStatus s)
{
    switch (s)
    {
        case PositionStatus::holds: return "holds";
        case PositionStatus::violated: return "violated";
        case PositionStatus::inconclusive_budget_exhausted: return "inconclusive-budget-exhausted";
    }
    return "?";
}

namespace {

Vector lifted(const PointConfiguration& config, int label)
{
    Vector v = config.point(label);
    v.push_back(1);
    return v;
}

bool affinely_independent(const PointConfiguration& config, const IndexSet& labels)
{
    Matrix m;
    for (int l : labels)
        m.push_back(lifted(config, l));
    return rank(std::move(m), static_cast<std::size_t>(config.dim()) + 1) == labels.size();
}

// Rows spanning the linear functionals that vanish on the lifted points.
Matrix annihilator(const PointConfiguration& config, const IndexSet& labels)
{
    Matrix m;
    for (int l : labels)
        m.push_back(lifted(config, l));
    return nullspace(std::move(m), static_cast<std::size_t>(config.dim()) + 1);
}

} // namespace

PositionVerdict in_general_position(const PointConfiguration& config)
{
    PositionVerdict verdict;
    const int n = config.size();
    const int k = std::min(n, config.dim() + 1);
    IndexSet ground(static_cast<std::size_t>(n));
    std::iota(ground.begin(), ground.end(), 1);
    PartitionEnumerator subsets(ground, {k}, n);
    while (auto p = subsets.next())
    {
        ++verdict.checked;
        if (!affinely_independent(config, p->parts[0]))
        {
            verdict.status = PositionStatus::violated;
            verdict.witness = p->parts;
            return verdict;
        }
    }
    return verdict;
}

namespace {

int codimension_of_stack(Matrix stacked, std::size_t width)
{
    const std::size_t base = rank(stacked, width);
    Vector last(width, Rational(0));
    last.back() = 1;
    stacked.push_back(std::move(last));
    if (rank(std::move(stacked), width) == base)
        return static_cast<int>(width);
    return static_cast<int>(base);
}

} // namespace

int affine_intersection_codimension(const PointConfiguration& config, const std::vector<IndexSet>& sets)
{
    Matrix stacked;
    for (const auto& s : sets)
        for (auto& row : annihilator(config, s))
            stacked.push_back(std::move(row));
    return codimension_of_stack(std::move(stacked), static_cast<std::size_t>(config.dim()) + 1);
}

namespace {

// Nondecreasing size profiles with entries in [1, cap] and total <= n.
void size_profiles(int r, int cap, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == r)
    {
        out.push_back(cur);
        return;
    }
    const int used = std::accumulate(cur.begin(), cur.end(), 0);
    for (int s = cur.empty() ? 1 : cur.back(); s <= cap && used + s <= n; ++s)
    {
        cur.push_back(s);
        size_profiles(r, cap, n, cur, out);
        cur.pop_back();
    }
}

} // namespace

PositionVerdict strong_general_position_check(const PointConfiguration& config, int r, std::size_t budget,
                                              std::uint64_t seed)
{
    if (r < 2)
        throw InvalidInput("strong_general_position_check needs r >= 2");
    if (budget < 1)
        throw InvalidInput("strong_general_position_check needs budget >= 1");
    const int n = config.size();
    const int d = config.dim();
    const int cap = std::min(d + 1, n);

    std::vector<std::vector<int>> profiles;
    std::vector<int> cur;
    size_profiles(r, cap, n, cur, profiles);

    Integer total = 0;
    for (const auto& p : profiles)
        total += count_partitions(static_cast<std::size_t>(n), p);

    std::map<IndexSet, Matrix> annihilators;
    auto annihilator_of = [&](const IndexSet& s) -> const Matrix& {
        auto it = annihilators.find(s);
        if (it == annihilators.end())
            it = annihilators.emplace(s, annihilator(config, s)).first;
        return it->second;
    };

    PositionVerdict verdict;
    auto check = [&](const IndexPartition& p) {
        ++verdict.checked;
        int sum = 0;
        Matrix stacked;
        for (const auto& s : p.parts)
        {
            const Matrix& a = annihilator_of(s);
            sum += static_cast<int>(a.size());
            stacked.insert(stacked.end(), a.begin(), a.end());
        }
        if (codimension_of_stack(std::move(stacked), static_cast<std::size_t>(d) + 1) != std::min(sum, d + 1))
        {
            verdict.status = PositionStatus::violated;
            verdict.witness = p.parts;
            return false;
        }
        return true;
    };

    IndexSet ground(static_cast<std::size_t>(n));
    std::iota(ground.begin(), ground.end(), 1);

    if (total <= budget)
    {
        verdict.exhaustive = true;
        for (const auto& prof : profiles)
        {
            PartitionEnumerator it(ground, prof, n);
            while (auto p = it.next())
                if (!check(*p))
                    return verdict;
        }
        verdict.status = PositionStatus::holds;
        return verdict;
    }

    verdict.exhaustive = false;
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < budget; ++i)
    {
        const auto& prof = profiles[rng.below(profiles.size())];
        if (!check(sample_partition(ground, prof, n, rng)))
            return verdict;
    }
    verdict.status = PositionStatus::inconclusive_budget_exhausted;
    return verdict;
}

std::string to_csv(const PointConfiguration& config)
{
    std::ostringstream out;
    out << "dim=" << config.dim() << '\n';
    for (const auto& p : config.points())
    {
        for (std::size_t c = 0; c < p.size(); ++c)
            out << (c ? "," : "") << to_string(p[c]);
        out << '\n';
    }
    return out.str();
}

PointConfiguration parse_csv(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int dim = -1;
    std::vector<Vector> points;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (dim < 0)
        {
            const auto eq = line.find('=');
            if (line.rfind("dim", 0) != 0 || eq == std::string::npos)
                throw InvalidInput("csv: expected 'dim=<d>' header on line " + std::to_string(line_no));
            try
            {
                dim = std::stoi(line.substr(eq + 1));
            }
            catch (const std::exception&)
            {
                throw InvalidInput("csv: bad dim header on line " + std::to_string(line_no));
            }
            continue;
        }
        Vector p;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
        {
            try
            {
                p.push_back(parse_rational(cell));
            }
            catch (const std::invalid_argument& e)
            {
                throw InvalidInput("csv line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        points.push_back(std::move(p));
    }
    if (dim < 0)
        throw InvalidInput("csv: missing 'dim=<d>' header");
    return PointConfiguration(dim, std::move(points));
}

PointConfiguration read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

void write_csv_file(const std::string& path, const PointConfiguration& config)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write " + path);
    out << to_csv(config);
}

} // namespace tverberg
