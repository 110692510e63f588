#include "localh/geometry.hpp"

#include <sstream>

#include "localh/fields.hpp"
#include "localh/matrix.hpp"

namespace localh {

namespace {

std::string vertex_list(Mask f, const std::vector<std::string>& ids) {
    std::string s = "{";
    bool first = true;
    for (int v = 0; v < static_cast<int>(ids.size()); ++v)
        if ((f >> v) & 1) {
            if (!first) s += ",";
            first = false;
            s += ids[v];
        }
    return s + "}";
}

// Barycentric coordinates of x with respect to the reference simplex:
// lambda_i = x_{i-1} for i >= 2 and lambda_1 = 1 - sum.
std::vector<mpq_class> barycentric(const std::vector<mpq_class>& x) {
    std::vector<mpq_class> l(x.size() + 1);
    mpq_class first(1);
    for (std::size_t k = 0; k < x.size(); ++k) {
        l[k + 1] = x[k];
        first -= x[k];
    }
    l[0] = first;
    return l;
}

}  // namespace

RegularityReport verify_regular(const Triangulation& t, const Realization& g) {
    RegularityReport rep;
    int dim = t.d - 1;
    std::vector<std::vector<mpq_class>> pos(t.n());
    std::vector<mpq_class> ht(t.n());
    for (int v = 0; v < t.n(); ++v) {
        auto ci = g.coords.find(t.ids[v]);
        auto hi = g.heights.find(t.ids[v]);
        if (ci == g.coords.end() || hi == g.heights.end()) {
            rep.violations.push_back("realization missing vertex " + t.ids[v]);
            continue;
        }
        if (static_cast<int>(ci->second.size()) != dim) {
            rep.violations.push_back("coordinates of " + t.ids[v] + " have wrong dimension");
            continue;
        }
        pos[v] = ci->second;
        ht[v] = hi->second;
    }
    if (!rep.violations.empty()) {
        rep.ok = false;
        return rep;
    }

    // Carrier condition: barycentric support of each vertex must be exactly
    // sigma(v), with positive weights there.
    for (int v = 0; v < t.n(); ++v) {
        std::vector<mpq_class> l = barycentric(pos[v]);
        Mask support = 0;
        bool positive = true;
        for (int i = 0; i < t.d; ++i) {
            if (l[i] != 0) support |= (1ULL << i);
            if (l[i] < 0) positive = false;
        }
        if (!positive || support != t.vsigma[v])
            rep.violations.push_back("vertex " + t.ids[v] +
                                     " does not lie in the relative interior of its carrier face");
    }

    RationalField Q;
    for (Mask f : t.cx.facets) {
        // Affine function h_F(x) = a.x + b through the lifted facet.
        std::vector<int> vs;
        for (int v = 0; v < t.n(); ++v)
            if ((f >> v) & 1) vs.push_back(v);
        Mat<RationalField> A(static_cast<int>(vs.size()), dim + 1);
        std::vector<mpq_class> rhs;
        for (std::size_t r = 0; r < vs.size(); ++r) {
            for (int k = 0; k < dim; ++k) A.at(static_cast<int>(r), k) = pos[vs[r]][k];
            A.at(static_cast<int>(r), dim) = 1;
            rhs.push_back(ht[vs[r]]);
        }
        if (rank(Q, A) != t.d) {
            rep.violations.push_back("facet " + vertex_list(f, t.ids) + " is affinely degenerate");
            continue;
        }
        auto sol = solve(Q, A, rhs);
        if (!sol) {
            rep.violations.push_back("no affine function through lifted facet " + vertex_list(f, t.ids));
            continue;
        }
        for (int v = 0; v < t.n(); ++v) {
            if ((f >> v) & 1) continue;
            mpq_class hv = (*sol)[dim];
            for (int k = 0; k < dim; ++k) hv += (*sol)[k] * pos[v][k];
            if (!(hv < ht[v])) {
                std::ostringstream os;
                os << "facet " << vertex_list(f, t.ids) << " does not lie strictly below vertex "
                   << t.ids[v];
                rep.violations.push_back(os.str());
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace localh
