#ifndef LOCALH_EXAMPLES_HPP
#define LOCALH_EXAMPLES_HPP

#include "localh/complex.hpp"
#include "localh/geometry.hpp"

namespace localh {

// The trivial triangulation of the (d-1)-simplex: the simplex itself.
Triangulation trivial_triangulation(int d);

// Cone over the boundary from one interior point w: vertices v1..vd with
// sigma(vi) = {i} plus w with sigma(w) = V; facets replace one vi by w.
Triangulation interior_point(int d);

// Edge split at an interior midpoint: d = 2, vertices a, b, m.
Triangulation subdivided_edge();

// Triangle with one edge vertex and one interior vertex; quasi-geometric but
// not vertex-induced because the carrier of edge {2,3} is forced up to V by
// an override.
Triangulation figure1();
// Same data without the override; fails the ball validation at U = {2,3}.
Triangulation figure1_no_override();

// t-fold free join of interior_point(3); vertex ids are "s.v1".."s.w".
Triangulation gamma_t(int t);

// Standard reference coordinates: vertex of coordinate 1 at the origin and
// coordinate i at unit vector e_{i-1}; interior points at carrier centroids;
// heights 0 on the boundary vertices of interior_point and -1 at w.
Realization interior_point_realization(int d);

// Product coordinates and concatenated heights for gamma_t.
Realization gamma_t_realization(int t);

}  // namespace localh

#endif
