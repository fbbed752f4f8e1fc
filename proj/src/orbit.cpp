#include "tverberg/orbit.hpp"

#include <stdexcept>

#include "tverberg/errors.hpp"
#include "tverberg/exact_geometry.hpp"
#include "tverberg/linalg.hpp"
#include "tverberg/random.hpp"

namespace tverberg {

const Vector& AffineJoinMap::value(int column, int symbol) const
{
    if (column < 0 || column > n || symbol < 1 || symbol > r)
        throw InvalidInput("AffineJoinMap: vertex out of range");
    return values.at(static_cast<std::size_t>(column * r + symbol - 1));
}

JoinPoint shift(const JoinPoint& x, int r, int k)
{
    JoinPoint out = x;
    const int step = ((k % r) + r) % r;
    for (auto& s : out.symbol)
        s = (s - 1 + step) % r + 1;
    return out;
}

Vector evaluate(const AffineJoinMap& f, const JoinPoint& x)
{
    const auto columns = static_cast<std::size_t>(f.n) + 1;
    if (x.lambda.size() != columns || x.symbol.size() != columns || !is_barycentric(x.lambda))
        throw InvalidInput("evaluate: not a point of the join");
    for (int s : x.symbol)
        if (s < 1 || s > f.r)
            throw InvalidInput("evaluate: symbol out of range");
    Vector out(static_cast<std::size_t>(f.d), Rational(0));
    for (std::size_t j = 0; j < columns; ++j)
    {
        if (x.lambda[j] == 0)
            continue;
        const Vector& v = f.value(static_cast<int>(j), x.symbol[j]);
        for (std::size_t c = 0; c < out.size(); ++c)
            out[c] += x.lambda[j] * v[c];
    }
    return out;
}

std::pair<Vector, Vector> nearest_point_to_origin(const std::vector<Vector>& points)
{
    const std::size_t m = points.size();
    if (m == 0 || m > 30)
        throw InvalidInput("nearest_point_to_origin: need 1..30 points");

    // Subsets by increasing size, then lexicographically; the first affinely
    // independent subset whose projection point satisfies the optimality
    // conditions over all points gives the (unique) nearest point.
    for (std::size_t size = 1; size <= m; ++size)
    {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        while (true)
        {
            // Minimise |Σ μ_i y_i|^2 subject to Σ μ_i = 1.
            Matrix a(size + 1, Vector(size + 1, Rational(0)));
            Vector b(size + 1, Rational(0));
            for (std::size_t i = 0; i < size; ++i)
            {
                for (std::size_t j = 0; j < size; ++j)
                    a[i][j] = dot(points[idx[i]], points[idx[j]]);
                a[i][size] = 1;
                a[size][i] = 1;
            }
            b[size] = 1;
            if (auto sol = solve_square(std::move(a), std::move(b)))
            {
                bool nonnegative = true;
                for (std::size_t i = 0; i < size; ++i)
                    nonnegative = nonnegative && (*sol)[i] >= 0;
                if (nonnegative)
                {
                    Vector p(points[0].size(), Rational(0));
                    for (std::size_t i = 0; i < size; ++i)
                        p = p + (*sol)[i] * points[idx[i]];
                    const Rational pp = squared_norm(p);
                    bool optimal = true;
                    for (const auto& y : points)
                        optimal = optimal && dot(y, p) >= pp;
                    if (optimal)
                    {
                        Vector weights(m, Rational(0));
                        for (std::size_t i = 0; i < size; ++i)
                            weights[idx[i]] = (*sol)[i];
                        return {std::move(p), std::move(weights)};
                    }
                }
            }
            std::size_t k = size;
            while (k > 0 && idx[k - 1] == m - size + k - 1)
                --k;
            if (k == 0)
                break;
            ++idx[k - 1];
            for (std::size_t i = k; i < size; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
    throw std::logic_error("nearest_point_to_origin: no optimal subset found");
}

ColorfulSelection colorful_caratheodory(const std::vector<std::vector<Vector>>& sets)
{
    if (sets.empty())
        throw InvalidInput("colorful_caratheodory: no sets");
    const std::size_t d = sets.size() - 1;
    for (std::size_t i = 0; i < sets.size(); ++i)
    {
        if (sets[i].empty())
            throw InvalidInput("colorful_caratheodory: set " + std::to_string(i + 1) + " is empty");
        for (const auto& x : sets[i])
            if (x.size() != d)
                throw InvalidInput("colorful_caratheodory: need d+1 sets of points in Q^d");
        if (d > 0)
        {
            const std::vector<std::vector<Vector>> hulls{sets[i], {Vector(d, Rational(0))}};
            if (!common_point(hulls, d))
                throw InvalidInput("colorful_caratheodory: set " + std::to_string(i + 1) +
                                   " does not capture the origin");
        }
    }

    ColorfulSelection out;
    out.choice.assign(sets.size(), 0);
    while (true)
    {
        std::vector<Vector> transversal;
        for (std::size_t i = 0; i < sets.size(); ++i)
            transversal.push_back(sets[i][out.choice[i]]);
        auto [p, weights] = nearest_point_to_origin(transversal);
        const Rational potential = squared_norm(p);
        out.potentials.push_back(potential);
        if (potential == 0)
        {
            out.coefficients = std::move(weights);
            return out;
        }
        if (out.potentials.size() >= 2 && !(potential < out.potentials[out.potentials.size() - 2]))
            throw std::logic_error("colorful_caratheodory: potential did not decrease");

        std::size_t blocked = 0;
        while (weights[blocked] != 0)
            ++blocked;
        std::size_t best = 0;
        Rational best_value = dot(sets[blocked][0], p);
        for (std::size_t k = 1; k < sets[blocked].size(); ++k)
        {
            const Rational v = dot(sets[blocked][k], p);
            if (v < best_value)
            {
                best_value = v;
                best = k;
            }
        }
        out.choice[blocked] = best;
        ++out.pivots;
    }
}

OrbitCollapse collapse_orbit(const AffineJoinMap& f)
{
    const int r = f.r;
    const int d = f.d;
    if (r < 2 || d < 1)
        throw InvalidInput("collapse_orbit needs r >= 2 and d >= 1");
    if (f.values.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(f.n + 1))
        throw InvalidInput("collapse_orbit: incomplete value table");
    const int dim = (r - 1) * d;
    if (f.n < dim)
        throw InvalidInput("collapse_orbit needs n >= (r-1)d = " + std::to_string(dim));

    // π(F(j, a)) where F(v) = (f(v), f(t·v), ..., f(t^{r-1}·v)) and π
    // subtracts the block mean and keeps the first r-1 blocks.
    auto projected = [&](int column, int symbol) {
        std::vector<Vector> blocks;
        for (int k = 0; k < r; ++k)
            blocks.push_back(f.value(column, (symbol - 1 + k) % r + 1));
        Vector mean(static_cast<std::size_t>(d), Rational(0));
        for (const auto& b : blocks)
            mean = mean + b;
        for (auto& c : mean)
            c /= r;
        Vector out;
        for (int k = 0; k + 1 < r; ++k)
            for (int c = 0; c < d; ++c)
                out.push_back(blocks[k][c] - mean[c]);
        return out;
    };

    std::vector<std::vector<Vector>> sets;
    for (int j = 0; j <= dim; ++j)
    {
        std::vector<Vector> orbit;
        for (int a = 1; a <= r; ++a)
            orbit.push_back(projected(j, a));
        sets.push_back(std::move(orbit));
    }
    const ColorfulSelection sel = colorful_caratheodory(sets);

    OrbitCollapse out;
    out.pivots = sel.pivots;
    out.point.lambda.assign(static_cast<std::size_t>(f.n) + 1, Rational(0));
    out.point.symbol.assign(static_cast<std::size_t>(f.n) + 1, 1);
    for (int j = 0; j <= dim; ++j)
    {
        out.point.lambda[j] = sel.coefficients[j];
        out.point.symbol[j] = static_cast<int>(sel.choice[j]) + 1;
    }
    out.image = evaluate(f, out.point);
    for (int k = 1; k < r; ++k)
        if (evaluate(f, shift(out.point, r, k)) != out.image)
            throw std::logic_error("collapse_orbit: orbit images differ");
    return out;
}

AffineJoinMap random_affine_join_map(int r, int n, int d, std::uint64_t seed, std::int64_t bound)
{
    if (r < 2 || n < 0 || d < 1 || bound < 1)
        throw InvalidInput("random_affine_join_map: invalid parameters");
    SplitMix64 rng(seed);
    AffineJoinMap f{r, n, d, {}};
    for (int v = 0; v < r * (n + 1); ++v)
    {
        Vector p;
        for (int c = 0; c < d; ++c)
        {
            const std::int64_t q = rng.between(1, bound);
            p.emplace_back(rng.between(-bound * q, bound * q), q);
        }
        f.values.push_back(std::move(p));
    }
    return f;
}

} // namespace tverberg
