#ifndef LOCALH_KX_HPP
#define LOCALH_KX_HPP

#include <string>
#include <vector>

#include "localh/complex.hpp"

namespace localh {

/*
 * One instance of the characteristic-2 derivative identity for the pairing
 * with fully symbolic parameter coefficients a(i,j):
 *
 *   corollary mode:    d^I B(u, x^J u)      = (B(u, sqrt(x^I x^J)))^2
 *   proposition mode:  d^I deg(h^2 x^J)     = (deg(h sqrt(x^I x^J)))^2
 *
 * I is a d x n matrix with one 1 per row placed inside the carrier of its
 * column's vertex; J has row sum d - 2s; elem lists the monomials of u
 * (respectively h) as exponent vectors over the triangulation's vertices
 * (proposition mode also accepts an extra final exponent for the cone
 * vertex).  All coefficients of elem are 1.
 */
struct KxInstance {
    std::vector<std::vector<int>> I;
    std::vector<int> J;
    std::vector<std::vector<int>> elem;
    bool cor_mode = true;
};

struct KxReport {
    bool input_valid = false;
    std::vector<std::string> issues;
    bool identity_holds = false;
    bool rhs_zero = false;  // odd exponent made the square root vanish
    std::string lhs;
    std::string rhs;
    std::vector<std::string> var_names;
};

// Verifies the instance by exact computation over F_2(a(i,j)).  Symbolic
// cost limits the triangulation to d <= 3 and at most 6 vertices.
KxReport verify_kx_identity(const Triangulation& t, const KxInstance& inst);

}  // namespace localh

#endif
