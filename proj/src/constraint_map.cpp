#include "tverberg/constraint_map.hpp"

#include <algorithm>

#include "tverberg/errors.hpp"

namespace tverberg {

bool join_face_subset(const JoinFace& a, const JoinFace& b)
{
    if (a.components.size() != b.components.size())
        return false;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        if (!std::includes(b.components[i].begin(), b.components[i].end(), a.components[i].begin(),
                           a.components[i].end()))
            return false;
    return true;
}

bool in_sigma(const JoinFace& face, const DimensionTuple& dims)
{
    if (static_cast<int>(face.components.size()) != dims.r())
        throw InvalidInput("in_sigma: join face must have r components");
    std::vector<int> sizes;
    for (const auto& c : face.components)
        sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    const auto& d = dims.dims();
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] > d[i] + 1)
            return false;
    return true;
}

int constraint_label(const JoinFace& face, const DimensionTuple& dims)
{
    if (in_sigma(face, dims))
        return 0;
    std::size_t lowest = face.components[0].size();
    for (const auto& c : face.components)
        lowest = std::min(lowest, c.size());
    int best = 0;
    for (std::size_t i = 0; i < face.components.size(); ++i)
    {
        const auto& c = face.components[i];
        if (c.size() != lowest)
            continue;
        if (best == 0 || (!c.empty() && c.front() < face.components[best - 1].front()))
            best = static_cast<int>(i) + 1;
    }
    return best;
}

Vector constraint_value(int label, int r)
{
    if (r < 2 || label < 0 || label > r)
        throw InvalidInput("constraint_value: label out of range");
    Vector v(static_cast<std::size_t>(r), Rational(0));
    if (label == 0)
        return v;
    for (auto& c : v)
        c = Rational(-1, r);
    v[label - 1] += 1;
    return v;
}

ConstraintVerification verify_constraint_zero_set(int n, const DimensionTuple& dims,
                                                  const std::optional<ConstraintLabeling>& labeling,
                                                  std::uint64_t budget)
{
    const int r = dims.r();
    if (n < 0)
        throw InvalidInput("verify_constraint_zero_set: N must be >= 0");
    if (r > 6)
        throw InvalidInput("verify_constraint_zero_set supports r <= 6");
    const int vertices = n + 1;
    std::vector<std::uint64_t> power(static_cast<std::size_t>(vertices) + 1, 1);
    for (int v = 0; v < vertices; ++v)
    {
        if (power[v] > budget / static_cast<std::uint64_t>(r + 1))
            throw BudgetExceeded("verify_constraint_zero_set: (r+1)^(N+1) join faces exceed the budget");
        power[v + 1] = power[v] * static_cast<std::uint64_t>(r + 1);
    }
    const std::uint64_t total = power[vertices];

    auto decode = [&](std::uint64_t code) {
        JoinFace f;
        f.components.resize(static_cast<std::size_t>(r));
        for (int v = 0; v < vertices; ++v, code /= r + 1)
            if (code % (r + 1) != 0)
                f.components[code % (r + 1) - 1].push_back(v + 1);
        return f;
    };
    auto side = [&](std::uint64_t code, int v) { return static_cast<int>(code / power[v] % (r + 1)); };

    ConstraintVerification out;
    // down[c]: bitset over label masks reachable by inclusion chains of
    // nonzero-labelled faces contained in face c.
    std::vector<std::uint64_t> down(total, 0);
    std::vector<std::uint64_t> below_of(total, 0);
    std::vector<int> label(total, 0);
    const std::uint64_t full = (std::uint64_t{1} << r) - 1;

    for (std::uint64_t code = 1; code < total; ++code)
    {
        const JoinFace face = decode(code);
        const int l = labeling ? (*labeling)(face) : constraint_label(face, dims);
        if (l < 0 || l > r)
            throw InvalidInput("verify_constraint_zero_set: labelling returned an out-of-range label");
        label[code] = l;
        ++out.faces;
        const bool sigma = in_sigma(face, dims);
        if (l == 0)
            ++out.zero_faces;
        if ((l == 0) != sigma)
        {
            out.failure = sigma ? "nonzero label on a face of Sigma" : "zero label off Sigma";
            out.violating_chain = {face};
            out.chain_labels = {l};
            return out;
        }

        std::uint64_t below = 0;
        for (int v = 0; v < vertices; ++v)
            if (const int s = side(code, v); s > 0)
                below |= down[code - static_cast<std::uint64_t>(s) * power[v]];
        below_of[code] = below;
        std::uint64_t here = below;
        if (l != 0)
        {
            const std::uint64_t bit = std::uint64_t{1} << (l - 1);
            here |= std::uint64_t{1} << bit;
            for (std::uint64_t m = 1; m <= full; ++m)
                if (below >> m & 1)
                    here |= std::uint64_t{1} << (m | bit);
        }
        down[code] = here;

        if (here >> full & 1)
        {
            // Walk down to recover a chain carrying every label.
            std::vector<std::uint64_t> chain;
            std::uint64_t c = code;
            std::uint64_t target = full;
            while (true)
            {
                bool moved = false;
                for (int v = 0; v < vertices && !moved; ++v)
                    if (const int s = side(c, v); s > 0)
                    {
                        const std::uint64_t sub = c - static_cast<std::uint64_t>(s) * power[v];
                        if (down[sub] >> target & 1)
                        {
                            c = sub;
                            moved = true;
                        }
                    }
                if (moved)
                    continue;
                chain.push_back(c);
                const std::uint64_t bit = std::uint64_t{1} << (label[c] - 1);
                if (target == bit)
                    break;
                target = (below_of[c] >> target & 1) ? target : target & ~bit;
            }
            std::reverse(chain.begin(), chain.end());
            out.failure = "inclusion chain carries all r labels";
            for (auto x : chain)
            {
                out.violating_chain.push_back(decode(x));
                out.chain_labels.push_back(label[x]);
            }
            return out;
        }
    }
    out.passed = true;
    return out;
}

} // namespace tverberg
