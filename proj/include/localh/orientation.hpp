#ifndef LOCALH_ORIENTATION_HPP
#define LOCALH_ORIENTATION_HPP

#include <unordered_map>
#include <vector>

#include "localh/complex.hpp"
#include "localh/util.hpp"

namespace localh {

/*
 * Compatible facet signs for a closed pseudomanifold: with each facet's
 * vertices in ascending order, removing the vertex at position i induces
 * sign (-1)^i on the ridge, and adjacent facets must induce opposite signs
 * on their shared ridge.  Signs are propagated from the face_less-least
 * facet (sign +1) across the facet adjacency graph.
 */
struct Orientation {
    std::vector<Mask> facets;                // sorted by face_less
    std::vector<int> sign;                   // +1 / -1, aligned with facets
    std::unordered_map<Mask, int> index;     // facet -> position

    int sign_of(Mask facet) const {
        auto it = index.find(facet);
        if (it == index.end()) throw internal_error("sign_of on non-facet");
        return sign[it->second];
    }
};

Orientation orient(const Complex& cx);

}  // namespace localh

#endif
