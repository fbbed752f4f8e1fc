// Small complexes shared by the topology tests.
#ifndef TVERBERG_TESTS_FIXTURES_HPP
#define TVERBERG_TESTS_FIXTURES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "tverberg/complex.hpp"

namespace fixture {

inline tverberg::SimplicialComplex labelled(int vertices, std::vector<tverberg::Face> facets)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= vertices; ++i)
        labels.push_back(std::to_string(i));
    return tverberg::SimplicialComplex(std::move(labels), std::move(facets));
}

// The six-vertex real projective plane.
inline tverberg::SimplicialComplex projective_plane()
{
    return labelled(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4},
                        {2, 4, 5}, {1, 3, 5}});
}

// The seven-vertex torus.
inline tverberg::SimplicialComplex torus()
{
    std::vector<tverberg::Face> facets;
    for (int i = 0; i < 7; ++i)
    {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    for (auto& f : facets)
        std::sort(f.begin(), f.end());
    return labelled(7, facets);
}

inline tverberg::SimplicialComplex two_edges()
{
    return labelled(4, {{0, 1}, {2, 3}});
}

inline tverberg::SimplicialComplex four_cycle()
{
    return labelled(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

} // namespace fixture

#endif
