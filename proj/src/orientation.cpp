#include "localh/orientation.hpp"

#include <algorithm>
#include <deque>

namespace localh {

namespace {
int removal_position(Mask facet, Mask vertex_bit) {
    // Index of the removed vertex within the ascending vertex list.
    return popcount64(facet & (vertex_bit - 1));
}
}  // namespace

Orientation orient(const Complex& cx) {
    Orientation o;
    o.facets = cx.facets;
    std::sort(o.facets.begin(), o.facets.end(), face_less);
    o.sign.assign(o.facets.size(), 0);
    for (std::size_t i = 0; i < o.facets.size(); ++i) o.index[o.facets[i]] = static_cast<int>(i);

    // ridge -> incident facets
    std::unordered_map<Mask, std::vector<int>> at_ridge;
    for (std::size_t i = 0; i < o.facets.size(); ++i) {
        Mask f = o.facets[i], rest = f;
        while (rest) {
            Mask low = rest & (~rest + 1);
            rest ^= low;
            at_ridge[f ^ low].push_back(static_cast<int>(i));
        }
    }
    for (const auto& [r, inc] : at_ridge)
        if (inc.size() != 2) throw internal_error("orientation: ridge not in exactly two facets");

    if (o.facets.empty()) return o;
    o.sign[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        Mask f = o.facets[i], rest = f;
        while (rest) {
            Mask low = rest & (~rest + 1);
            rest ^= low;
            Mask ridge = f ^ low;
            const auto& inc = at_ridge[ridge];
            int j = (inc[0] == i) ? inc[1] : inc[0];
            Mask other_bit = o.facets[j] ^ ridge;
            int si = removal_position(f, low);
            int sj = removal_position(o.facets[j], other_bit);
            // sign_i * (-1)^si = -sign_j * (-1)^sj
            int expected = -o.sign[i] * ((si + sj) % 2 == 0 ? 1 : -1);
            if (o.sign[j] == 0) {
                o.sign[j] = expected;
                queue.push_back(j);
            } else if (o.sign[j] != expected) {
                throw internal_error("orientation: inconsistent signs across a ridge");
            }
        }
    }
    for (int s : o.sign)
        if (s == 0) throw internal_error("orientation: facet graph disconnected");
    return o;
}

}  // namespace localh
