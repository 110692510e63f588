#ifndef LOCALH_GEOMETRY_HPP
#define LOCALH_GEOMETRY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "localh/complex.hpp"

namespace localh {

/*
 * Geometric data for a triangulation: exact rational coordinates per vertex
 * in (d-1)-space and a lifting height per vertex.  The reference simplex has
 * coordinate 1 at the origin and coordinate i at the unit vector e_{i-1}.
 */
struct Realization {
    std::map<std::string, std::vector<mpq_class>> coords;
    std::map<std::string, mpq_class> heights;
};

struct RegularityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/*
 * Certifies that the triangulation is the regular subdivision induced by the
 * heights: every vertex must sit in the relative interior of the reference
 * face indexed by its carrier, every facet must be affinely independent, and
 * the affine function through each lifted facet must lie strictly below
 * every other lifted vertex.
 */
RegularityReport verify_regular(const Triangulation& t, const Realization& g);

// Coordinates/heights for a join: the second factor is embedded in the
// complementary coordinates; heights carry over verbatim.
Realization join_realization(const Triangulation& a, const Realization& ga, int db,
                             const Realization& gb);

std::vector<mpq_class> reference_position(int coordinate, int d);  // 1-based

}  // namespace localh

#endif
