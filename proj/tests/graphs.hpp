#pragma once

#include "qtl/plumbing/plumbing.hpp"

namespace testgraphs {

inline qtl::plumbing::PlumbingGraph single(long w) { return qtl::plumbing::make_graph({w}, {}); }

// E8 with all weights -2: trivalent vertex 0, legs of lengths 1, 2, 4.
inline qtl::plumbing::PlumbingGraph e8()
{
    return qtl::plumbing::make_graph({-2, -2, -2, -2, -2, -2, -2, -2},
                                     {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}});
}

inline qtl::plumbing::PlumbingGraph path(std::vector<long> w)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) e.emplace_back(i, i + 1);
    return qtl::plumbing::make_graph(std::move(w), std::move(e));
}

}  // namespace testgraphs
