#ifndef LOCALH_COMPLEX_HPP
#define LOCALH_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "localh/intpoly.hpp"

namespace localh {

using Mask = std::uint64_t;  // vertex subset, bit k = vertex index k

// Deterministic face order: by cardinality, then lexicographic on the
// ascending vertex-index list.
bool face_less(Mask a, Mask b);

/*
 * A simplicial complex on vertices 0..nv-1, closed under subsets.  `faces`
 * always contains the empty face and is sorted by face_less; `facets` are the
 * inclusion-maximal faces.
 */
struct Complex {
    int nv = 0;
    std::vector<Mask> faces;
    std::vector<Mask> facets;
    std::unordered_set<Mask> face_set;

    bool is_face(Mask f) const { return face_set.count(f) != 0; }
    static Complex from_facets(int nv, const std::vector<Mask>& facets);
    std::vector<std::int64_t> f_vector() const;  // f[i] = #faces of size i
};

// h-polynomial of a face list with dimension parameter m:
//   h(t) = sum over faces F of t^{|F|} (1-t)^{m-|F|}.
IntPoly h_vector(const std::vector<Mask>& faces, int m);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

/*
 * Raw description of a triangulation of the (d-1)-simplex on coordinate set
 * V = {1..d}: a carrier assignment sigma on vertices plus optional overrides
 * on higher faces.  The effective carrier of a face is the union of its
 * vertices' carriers and of all overrides supported on subsets of the face;
 * overrides therefore only ever enlarge carriers, which keeps sigma
 * order-preserving by construction.
 */
struct TriangulationInput {
    int d = 0;
    std::vector<std::pair<std::string, std::vector<int>>> vertices;  // id, carrier
    std::vector<std::vector<std::string>> facets;                    // vertex ids
    std::vector<std::pair<std::vector<std::string>, std::vector<int>>> overrides;
};

class Triangulation {
public:
    int d = 0;
    std::vector<std::string> ids;   // ascending; vertex index = position
    std::vector<Mask> vsigma;       // carrier of each vertex, bits 0..d-1
    std::vector<std::pair<Mask, Mask>> overrides;  // (face, extra carrier)
    Complex cx;                     // the face complex
    std::vector<Mask> sigma;        // carrier per face, aligned with cx.faces

    int n() const { return cx.nv; }
    Mask full() const { return (d >= 64) ? ~0ULL : ((1ULL << d) - 1); }
    Mask sigma_of(Mask face) const;
    int excess(Mask face) const;
    int vertex_index(const std::string& id) const;  // -1 if absent

    // Indexes and closes the input; throws input_error if validation fails.
    static Triangulation build(const TriangulationInput& in);

    // Indexing only; caller inspects the validation report separately.
    static Triangulation build_unchecked(const TriangulationInput& in);

    TriangulationInput to_input() const;

private:
    std::unordered_map<Mask, Mask> sigma_map_;
    void close_faces();
    friend ValidationReport validate(const Triangulation& t);
};

// Checks all data-model invariants: known vertices, overrides on actual
// faces, carrier bounds, and |F| <= |sigma(F)| on every face.
ValidationReport validate(const Triangulation& t);

struct Classification {
    bool quasi_geometric = false;
    bool vertex_induced = false;
};
Classification classify(const Triangulation& t);

enum class LocalHMethod { excess, alternating };
IntPoly local_h(const Triangulation& t, LocalHMethod method = LocalHMethod::excess);

// Faces of the restriction to coordinate subset U: {F : sigma(F) subseteq U}.
std::vector<Mask> subset_faces(const Triangulation& t, Mask U);

// census[i][j] = number of faces with |F| = i and |sigma(F)| = j.
std::vector<std::vector<std::int64_t>> face_census(const Triangulation& t);

std::vector<Mask> interior_faces(const Triangulation& t);

// 2 e(F) <= |sigma(F)| for every face.
bool is_semismall(const Triangulation& t);

/*
 * Link of a face E: vertices j with {j} cup E in the complex, faces G with
 * G cup E in the complex; carrier data is inherited as sigma(G cup E).
 * Vertices are re-indexed 0..nv-1 with parent[] mapping back.
 */
struct LinkComplex {
    Mask E = 0;                 // in parent indexing
    std::vector<int> parent;    // local vertex -> parent vertex
    Complex cx;                 // local indexing
    std::vector<Mask> sigma;    // carrier of (face cup E) per face, parent coords
    Mask lift(Mask local) const;
};
LinkComplex link(const Triangulation& t, Mask E);

IntPoly relative_local_h(const Triangulation& t, Mask E);

// Join: vertex ids prefixed "1."/"2.", carriers of the second factor shifted
// by a.d; every face splits uniquely as F1 sqcup F2.
Triangulation join(const Triangulation& a, const Triangulation& b);

/*
 * The boundary sphere obtained by coning the boundary of t over one new
 * vertex c (index n): faces of t plus {G cup c : sigma(G) != V}.  Checks the
 * Euler characteristic and that every ridge lies in exactly two facets.
 */
struct ConedSphere {
    int cone = 0;  // index of c
    Complex cx;
};
ConedSphere cone_sphere(const Triangulation& t);

struct HomologySubsetReport {
    Mask U = 0;
    bool absolute_ok = false;  // restriction has vanishing reduced homology
    bool relative_ok = false;  // relative homology is k in degree |U|-1 only
};
struct HomologyReport {
    bool ok = true;
    std::vector<HomologySubsetReport> subsets;
};

// Validates that every restriction looks like a ball of the right dimension
// through exact homology ranks over Q (characteristic 0) or F_p.
HomologyReport homology_validate(const Triangulation& t, int characteristic);

}  // namespace localh

#endif
