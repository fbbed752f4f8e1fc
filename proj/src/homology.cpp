#include "tverberg/homology.hpp"

#include <algorithm>
#include <map>

#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

Integer magnitude(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

} // namespace

std::vector<Integer> smith_invariants(IntMatrix a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<Integer> diag;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    {
        while (true)
        {
            // Smallest nonzero magnitude in the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || magnitude(a[i][j]) < magnitude(a[pr][pc])))
                    {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
            {
                if (a[i][t] == 0)
                    continue;
                const Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j)
            {
                if (a[t][j] == 0)
                    continue;
                const Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (!clean)
                continue;

            // The pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0)
                    {
                        for (std::size_t c = t; c < cols; ++c)
                            a[t][c] += a[i][c];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        diag.push_back(magnitude(a[t][t]));
    }
    return diag;
}

std::size_t rank_mod_p(const IntMatrix& a, int p)
{
    if (p < 2)
        throw InvalidInput("rank_mod_p needs a prime p");
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const long long mod = p;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
        {
            Integer r = a[i][j] % p;
            m[i][j] = (r.convert_to<long long>() + mod) % mod;
        }
    auto inverse = [&](long long x) {
        long long result = 1, base = x, e = mod - 2;
        while (e > 0)
        {
            if (e & 1)
                result = result * base % mod;
            base = base * base % mod;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        const long long inv = inverse(m[rank][c]);
        for (std::size_t j = c; j < cols; ++j)
            m[rank][j] = m[rank][j] * inv % mod;
        for (std::size_t i = 0; i < rows; ++i)
        {
            if (i == rank || m[i][c] == 0)
                continue;
            const long long f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[rank][j]) % mod + mod) % mod;
        }
        ++rank;
    }
    return rank;
}

HomologyResult homology(const SimplicialComplex& k, int modulus)
{
    if (modulus < 0 || modulus == 1)
        throw InvalidInput("homology: modulus must be 0 or a prime");
    for (int d = 2; d * d <= modulus; ++d)
        if (modulus % d == 0)
            throw InvalidInput("homology: modulus must be prime");

    HomologyResult out;
    out.modulus = modulus;
    const auto levels = k.faces();
    if (levels.empty())
        return out;

    // boundary[q] maps chains on levels[q] to chains on levels[q-1].
    const std::size_t top = levels.size();
    std::vector<std::size_t> ranks(top + 1, 0);
    std::vector<std::vector<Integer>> factors(top + 1);
    for (std::size_t q = 1; q < top; ++q)
    {
        std::map<Face, std::size_t> index;
        for (std::size_t i = 0; i < levels[q - 1].size(); ++i)
            index.emplace(levels[q - 1][i], i);
        IntMatrix m(levels[q - 1].size(), std::vector<Integer>(levels[q].size(), Integer(0)));
        for (std::size_t j = 0; j < levels[q].size(); ++j)
        {
            const Face& f = levels[q][j];
            for (std::size_t drop = 0; drop < f.size(); ++drop)
            {
                Face g;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop)
                        g.push_back(f[i]);
                m[index.at(g)][j] = drop % 2 == 0 ? 1 : -1;
            }
        }
        if (modulus == 0)
        {
            factors[q] = smith_invariants(std::move(m));
            ranks[q] = factors[q].size();
        }
        else
        {
            ranks[q] = rank_mod_p(m, modulus);
        }
    }

    for (std::size_t q = 0; q < top; ++q)
    {
        out.betti.push_back(static_cast<long>(levels[q].size() - ranks[q] - ranks[q + 1]));
        std::vector<Integer> tors;
        if (modulus == 0)
            for (const auto& f : factors[q + 1])
                if (f > 1)
                    tors.push_back(f);
        out.torsion.push_back(std::move(tors));
    }
    return out;
}

bool is_homology_sphere(const HomologyResult& h, int n)
{
    if (n < -1 || static_cast<std::size_t>(n + 1) >= h.betti.size())
        return false;
    for (std::size_t i = 0; i < h.betti.size(); ++i)
    {
        if (h.betti[i] != (static_cast<int>(i) == n + 1 ? 1 : 0))
            return false;
        if (!h.torsion[i].empty())
            return false;
    }
    return true;
}

} // namespace tverberg
