#include "localh/complex.hpp"

#include <algorithm>
#include <sstream>

#include "localh/fields.hpp"
#include "localh/matrix.hpp"
#include "localh/util.hpp"

namespace localh {

bool face_less(Mask a, Mask b) {
    int pa = popcount64(a), pb = popcount64(b);
    if (pa != pb) return pa < pb;
    // Same size: lexicographic on ascending vertex lists.  Compare the
    // lowest vertex where the faces differ.
    while (a && b) {
        Mask la = a & (~a + 1), lb = b & (~b + 1);
        if (la != lb) return la < lb;
        a ^= la;
        b ^= lb;
    }
    return false;
}

namespace {

std::string face_name(Mask f, const std::vector<std::string>* ids) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v = 0; v < 64; ++v)
        if ((f >> v) & 1) {
            if (!first) os << ",";
            first = false;
            if (ids) os << (*ids)[v];
            else os << v;
        }
    os << "}";
    return os.str();
}

std::string set_name(Mask s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v = 0; v < 64; ++v)
        if ((s >> v) & 1) {
            if (!first) os << ",";
            first = false;
            os << (v + 1);
        }
    os << "}";
    return os.str();
}

}  // namespace

Complex Complex::from_facets(int nv, const std::vector<Mask>& facets_in) {
    Complex c;
    c.nv = nv;
    std::unordered_set<Mask> seen;
    // Downward closure by recursive single-vertex removal.
    std::vector<Mask> stack(facets_in.begin(), facets_in.end());
    seen.insert(0);
    while (!stack.empty()) {
        Mask f = stack.back();
        stack.pop_back();
        if (!seen.insert(f).second) continue;
        Mask rest = f;
        while (rest) {
            Mask low = rest & (~rest + 1);
            rest ^= low;
            Mask sub = f ^ low;
            if (!seen.count(sub)) stack.push_back(sub);
        }
    }
    c.faces.assign(seen.begin(), seen.end());
    std::sort(c.faces.begin(), c.faces.end(), face_less);
    c.face_set = std::move(seen);
    for (Mask f : c.faces) {
        bool maximal = true;
        for (int v = 0; v < nv && maximal; ++v)
            if (!((f >> v) & 1) && c.face_set.count(f | (1ULL << v))) maximal = false;
        if (maximal && f != 0) c.facets.push_back(f);
    }
    if (c.facets.empty() && c.face_set.count(0)) c.facets.push_back(0);
    return c;
}

std::vector<std::int64_t> Complex::f_vector() const {
    int maxdim = 0;
    for (Mask f : faces) maxdim = std::max(maxdim, popcount64(f));
    std::vector<std::int64_t> fv(maxdim + 1, 0);
    for (Mask f : faces) fv[popcount64(f)]++;
    return fv;
}

IntPoly h_vector(const std::vector<Mask>& faces, int m) {
    IntPoly h;
    std::vector<std::int64_t> fv(m + 1, 0);
    for (Mask f : faces) {
        int s = popcount64(f);
        if (s > m) throw internal_error("face larger than h-vector dimension parameter");
        fv[s]++;
    }
    for (int i = 0; i <= m; ++i)
        if (fv[i]) h += IntPoly::shifted_power(i, m - i) * fv[i];
    return h;
}

Mask Triangulation::sigma_of(Mask face) const {
    auto it = sigma_map_.find(face);
    if (it == sigma_map_.end()) throw internal_error("sigma_of on non-face " + face_name(face, &ids));
    return it->second;
}

int Triangulation::excess(Mask face) const {
    return popcount64(sigma_of(face)) - popcount64(face);
}

int Triangulation::vertex_index(const std::string& id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return -1;
    return static_cast<int>(it - ids.begin());
}

void Triangulation::close_faces() {
    cx = Complex::from_facets(static_cast<int>(ids.size()), cx.facets);
    sigma.clear();
    sigma_map_.clear();
    for (Mask f : cx.faces) {
        Mask s = 0;
        Mask rest = f;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            s |= vsigma[v];
        }
        for (const auto& [of, os] : overrides)
            if ((of & f) == of) s |= os;
        sigma.push_back(s);
        sigma_map_[f] = s;
    }
}

Triangulation Triangulation::build_unchecked(const TriangulationInput& in) {
    Triangulation t;
    t.d = in.d;
    if (in.d < 1 || in.d > 62) throw input_error("d out of range [1,62]");
    if (in.vertices.size() > 62) throw input_error("too many vertices (max 62)");

    std::vector<std::string> raw;
    for (const auto& [id, sig] : in.vertices) raw.push_back(id);
    std::sort(raw.begin(), raw.end());
    if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
        throw input_error("duplicate vertex id");
    t.ids = raw;

    t.vsigma.assign(t.ids.size(), 0);
    for (const auto& [id, sig] : in.vertices) {
        int v = t.vertex_index(id);
        Mask m = 0;
        for (int i : sig) {
            if (i < 1 || i > in.d) throw input_error("sigma coordinate out of range on vertex " + id);
            m |= (1ULL << (i - 1));
        }
        t.vsigma[v] = m;
    }

    auto to_mask = [&](const std::vector<std::string>& vs, const char* what) {
        Mask m = 0;
        for (const auto& id : vs) {
            int v = t.vertex_index(id);
            if (v < 0) throw input_error(std::string(what) + " references unknown vertex " + id);
            m |= (1ULL << v);
        }
        return m;
    };
    std::vector<Mask> fmasks;
    for (const auto& fvs : in.facets) fmasks.push_back(to_mask(fvs, "facet"));
    std::sort(fmasks.begin(), fmasks.end(), face_less);
    fmasks.erase(std::unique(fmasks.begin(), fmasks.end()), fmasks.end());
    t.cx.facets = fmasks;

    for (const auto& [fvs, sig] : in.overrides) {
        Mask fm = to_mask(fvs, "override");
        if (popcount64(fm) < 2) throw input_error("override must be on a face with >= 2 vertices");
        Mask sm = 0;
        for (int i : sig) {
            if (i < 1 || i > in.d) throw input_error("override sigma coordinate out of range");
            sm |= (1ULL << (i - 1));
        }
        t.overrides.emplace_back(fm, sm);
    }
    std::sort(t.overrides.begin(), t.overrides.end(),
              [](const auto& a, const auto& b) { return face_less(a.first, b.first) || (a.first == b.first && a.second < b.second); });

    t.close_faces();
    return t;
}

Triangulation Triangulation::build(const TriangulationInput& in) {
    Triangulation t = build_unchecked(in);
    ValidationReport rep = validate(t);
    if (!rep.ok) {
        std::string msg = "invalid triangulation:";
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw input_error(msg);
    }
    return t;
}

TriangulationInput Triangulation::to_input() const {
    TriangulationInput in;
    in.d = d;
    auto set_list = [](Mask m) {
        std::vector<int> r;
        for (int i = 0; i < 64; ++i)
            if ((m >> i) & 1) r.push_back(i + 1);
        return r;
    };
    auto id_list = [&](Mask m) {
        std::vector<std::string> r;
        for (int v = 0; v < static_cast<int>(ids.size()); ++v)
            if ((m >> v) & 1) r.push_back(ids[v]);
        return r;
    };
    for (std::size_t v = 0; v < ids.size(); ++v) in.vertices.emplace_back(ids[v], set_list(vsigma[v]));
    for (Mask f : cx.facets) in.facets.push_back(id_list(f));
    for (const auto& [f, s] : overrides) in.overrides.emplace_back(id_list(f), set_list(s));
    return in;
}

ValidationReport validate(const Triangulation& t) {
    ValidationReport rep;
    if (t.cx.facets.empty()) rep.fail("no facets");
    for (std::size_t v = 0; v < t.ids.size(); ++v) {
        if (t.vsigma[v] == 0) rep.fail("vertex " + t.ids[v] + " has empty sigma");
        bool used = false;
        for (Mask f : t.cx.facets)
            if ((f >> v) & 1) used = true;
        if (!used) rep.fail("vertex " + t.ids[v] + " lies in no facet");
    }
    for (const auto& [of, os] : t.overrides) {
        if (!t.cx.is_face(of)) rep.fail("override on non-face " + face_name(of, &t.ids));
        (void)os;
    }
    for (std::size_t i = 0; i < t.cx.faces.size(); ++i) {
        Mask f = t.cx.faces[i];
        int sz = popcount64(f), ssz = popcount64(t.sigma[i]);
        if (sz > ssz)
            rep.fail("face " + face_name(f, &t.ids) + " has |F|=" + std::to_string(sz) +
                     " > |sigma(F)|=" + std::to_string(ssz));
    }
    // sigma is order-preserving by construction (unions only); assert anyway.
    for (std::size_t i = 0; i < t.cx.faces.size(); ++i) {
        Mask f = t.cx.faces[i];
        Mask rest = f;
        while (rest) {
            Mask low = rest & (~rest + 1);
            rest ^= low;
            Mask sub = f ^ low;
            if (t.cx.is_face(sub) && (t.sigma_of(sub) & ~t.sigma[i]) != 0)
                rep.fail("sigma not order-preserving at " + face_name(f, &t.ids));
        }
    }
    bool covered = false;
    for (Mask s : t.sigma)
        if (s == t.full()) covered = true;
    if (!covered) rep.fail("no face has sigma(F) = V (no interior face)");
    return rep;
}

Classification classify(const Triangulation& t) {
    Classification c;
    c.quasi_geometric = true;
    c.vertex_induced = true;
    for (std::size_t i = 0; i < t.cx.faces.size(); ++i) {
        Mask f = t.cx.faces[i];
        Mask un = 0;
        Mask rest = f;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            un |= t.vsigma[v];
        }
        if (popcount64(un) < popcount64(f)) c.quasi_geometric = false;
        if (un != t.sigma[i]) c.vertex_induced = false;
    }
    return c;
}

std::vector<Mask> subset_faces(const Triangulation& t, Mask U) {
    std::vector<Mask> out;
    for (std::size_t i = 0; i < t.cx.faces.size(); ++i)
        if ((t.sigma[i] & ~U) == 0) out.push_back(t.cx.faces[i]);
    return out;
}

IntPoly local_h(const Triangulation& t, LocalHMethod method) {
    if (method == LocalHMethod::excess) {
        // sum over faces of (-1)^(d - |sigma(F)|) t^(d - e(F)) (1-t)^(e(F))
        IntPoly l;
        for (std::size_t i = 0; i < t.cx.faces.size(); ++i) {
            int ssz = popcount64(t.sigma[i]);
            int e = ssz - popcount64(t.cx.faces[i]);
            IntPoly term = IntPoly::shifted_power(t.d - e, e);
            l += ((t.d - ssz) % 2 == 0) ? term : term * -1;
        }
        return l;
    }
    // Alternating sum of h-vectors of the restrictions.
    IntPoly l;
    Mask full = t.full();
    for (Mask U = 0;; ++U) {
        IntPoly h = h_vector(subset_faces(t, U), popcount64(U));
        int sign = (t.d - popcount64(U)) % 2;
        l += (sign == 0) ? h : h * -1;
        if (U == full) break;
    }
    return l;
}

std::vector<std::vector<std::int64_t>> face_census(const Triangulation& t) {
    std::vector<std::vector<std::int64_t>> c(t.d + 1, std::vector<std::int64_t>(t.d + 1, 0));
    for (std::size_t i = 0; i < t.cx.faces.size(); ++i)
        c[popcount64(t.cx.faces[i])][popcount64(t.sigma[i])]++;
    return c;
}

std::vector<Mask> interior_faces(const Triangulation& t) {
    std::vector<Mask> out;
    for (std::size_t i = 0; i < t.cx.faces.size(); ++i)
        if (t.sigma[i] == t.full()) out.push_back(t.cx.faces[i]);
    return out;
}

bool is_semismall(const Triangulation& t) {
    for (std::size_t i = 0; i < t.cx.faces.size(); ++i) {
        int ssz = popcount64(t.sigma[i]);
        if (2 * (ssz - popcount64(t.cx.faces[i])) > ssz) return false;
    }
    return true;
}

Mask LinkComplex::lift(Mask local) const {
    Mask m = 0;
    for (std::size_t v = 0; v < parent.size(); ++v)
        if ((local >> v) & 1) m |= (1ULL << parent[v]);
    return m;
}

LinkComplex link(const Triangulation& t, Mask E) {
    if (!t.cx.is_face(E)) throw input_error("link of a non-face");
    LinkComplex lk;
    lk.E = E;
    for (int v = 0; v < t.n(); ++v)
        if (!((E >> v) & 1) && t.cx.is_face(E | (1ULL << v))) lk.parent.push_back(v);
    std::vector<int> local_of(t.n(), -1);
    for (std::size_t i = 0; i < lk.parent.size(); ++i) local_of[lk.parent[i]] = static_cast<int>(i);

    std::vector<Mask> lfacets;
    for (Mask f : t.cx.faces) {
        if ((f & E) != 0 || !t.cx.is_face(f | E)) continue;
        Mask lm = 0;
        Mask rest = f;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            lm |= (1ULL << local_of[v]);
        }
        lfacets.push_back(lm);
    }
    lk.cx = Complex::from_facets(static_cast<int>(lk.parent.size()), lfacets);
    for (Mask f : lk.cx.faces) lk.sigma.push_back(t.sigma_of(lk.lift(f) | E));
    return lk;
}

IntPoly relative_local_h(const Triangulation& t, Mask E) {
    LinkComplex lk = link(t, E);
    Mask sigE = t.sigma_of(E);
    int esz = popcount64(E);
    IntPoly l;
    // Iterate U over supersets of sigma(E) inside V.
    Mask complement = t.full() & ~sigE;
    Mask sub = 0;
    while (true) {
        Mask U = sigE | sub;
        std::vector<Mask> cu;
        for (std::size_t i = 0; i < lk.cx.faces.size(); ++i)
            if ((lk.sigma[i] & ~U) == 0) cu.push_back(lk.cx.faces[i]);
        IntPoly h = h_vector(cu, popcount64(U) - esz);
        int sign = (t.d - popcount64(U)) % 2;
        l += (sign == 0) ? h : h * -1;
        if (sub == complement) break;
        sub = (sub - complement) & complement;  // next subset of complement
    }
    return l;
}

Triangulation join(const Triangulation& a, const Triangulation& b) {
    TriangulationInput in;
    in.d = a.d + b.d;
    TriangulationInput ia = a.to_input(), ib = b.to_input();
    for (auto& [id, sig] : ia.vertices) in.vertices.emplace_back("1." + id, sig);
    for (auto& [id, sig] : ib.vertices) {
        std::vector<int> shifted;
        for (int i : sig) shifted.push_back(i + a.d);
        in.vertices.emplace_back("2." + id, shifted);
    }
    for (const auto& fa : ia.facets)
        for (const auto& fb : ib.facets) {
            std::vector<std::string> f;
            for (const auto& v : fa) f.push_back("1." + v);
            for (const auto& v : fb) f.push_back("2." + v);
            in.facets.push_back(f);
        }
    for (const auto& [fvs, sig] : ia.overrides) {
        std::vector<std::string> f;
        for (const auto& v : fvs) f.push_back("1." + v);
        in.overrides.emplace_back(f, sig);
    }
    for (const auto& [fvs, sig] : ib.overrides) {
        std::vector<std::string> f;
        for (const auto& v : fvs) f.push_back("2." + v);
        std::vector<int> shifted;
        for (int i : sig) shifted.push_back(i + a.d);
        in.overrides.emplace_back(f, shifted);
    }
    return Triangulation::build(in);
}

ConedSphere cone_sphere(const Triangulation& t) {
    ConedSphere cs;
    cs.cone = t.n();
    Mask cbit = 1ULL << cs.cone;
    std::vector<Mask> maximal = t.cx.facets;
    for (std::size_t i = 0; i < t.cx.faces.size(); ++i)
        if (t.sigma[i] != t.full()) maximal.push_back(t.cx.faces[i] | cbit);
    cs.cx = Complex::from_facets(t.n() + 1, maximal);

    // Sanity of the closed pseudomanifold structure.
    for (Mask f : cs.cx.facets)
        if (popcount64(f) != t.d)
            throw input_error("coned boundary is not pure of the expected dimension");
    std::unordered_map<Mask, int> ridge_count;
    for (Mask f : cs.cx.facets) {
        Mask rest = f;
        while (rest) {
            Mask low = rest & (~rest + 1);
            rest ^= low;
            ridge_count[f ^ low]++;
        }
    }
    for (const auto& [r, cnt] : ridge_count)
        if (cnt != 2)
            throw input_error("coned boundary is not a closed pseudomanifold at ridge " + face_name(r, nullptr));
    std::int64_t chi = 0;
    auto fv = cs.cx.f_vector();
    for (std::size_t i = 1; i < fv.size(); ++i) chi += (i % 2 == 1) ? fv[i] : -fv[i];
    std::int64_t expected = 1 + ((t.d % 2 == 0) ? -1 : 1);
    if (chi != expected) throw input_error("coned boundary has wrong Euler characteristic");
    return cs;
}

namespace {

// Reduced/relative homology ranks via boundary matrices over one field.
// Faces include the empty face at dimension -1 (augmented complex).
template <class F>
std::vector<int> homology_dims(const F& field, const std::vector<Mask>& faces, int topdim) {
    // Group faces by dimension.
    std::vector<std::vector<Mask>> by_dim(topdim + 2);
    for (Mask f : faces) by_dim[popcount64(f)].push_back(f);
    for (auto& v : by_dim) std::sort(v.begin(), v.end(), face_less);
    std::vector<std::unordered_map<Mask, int>> index(topdim + 2);
    for (int k = 0; k <= topdim + 1; ++k)
        for (std::size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = static_cast<int>(i);

    // rank of boundary from chains of card k to card k-1, restricted to the
    // given face list on both sides.
    std::vector<int> bd_rank(topdim + 2, 0);
    for (int k = 1; k <= topdim + 1; ++k) {
        if (by_dim[k].empty() || by_dim[k - 1].empty()) continue;
        Mat<F> m(static_cast<int>(by_dim[k - 1].size()), static_cast<int>(by_dim[k].size()));
        for (std::size_t c = 0; c < by_dim[k].size(); ++c) {
            Mask f = by_dim[k][c];
            int pos = 0;
            Mask rest = f;
            while (rest) {
                Mask low = rest & (~rest + 1);
                rest ^= low;
                Mask sub = f ^ low;
                auto it = index[k - 1].find(sub);
                if (it != index[k - 1].end())
                    m.at(it->second, static_cast<int>(c)) = field.from_int(pos % 2 == 0 ? 1 : -1);
                ++pos;
            }
        }
        bd_rank[k] = rank(field, std::move(m));
    }
    // H_{k}, with k measured as cardinality (dimension + 1); dims[k] for k in
    // 0..topdim+1 so dims[0] is degree -1.
    std::vector<int> dims(topdim + 2, 0);
    for (int k = 0; k <= topdim + 1; ++k) {
        int ck = static_cast<int>(by_dim[k].size());
        int below = bd_rank[k];
        int above = (k + 1 <= topdim + 1) ? bd_rank[k + 1] : 0;
        dims[k] = ck - below - above;
    }
    return dims;
}

template <class F>
HomologyReport homology_validate_impl(const F& field, const Triangulation& t) {
    HomologyReport rep;
    Mask full = t.full();
    for (Mask U = 0;; ++U) {
        HomologySubsetReport sr;
        sr.U = U;
        std::vector<Mask> gu = subset_faces(t, U);
        int usz = popcount64(U);

        if (U == 0) {
            // The (-1)-ball: the restriction must be exactly {empty face}.
            sr.absolute_ok = (gu.size() == 1 && gu[0] == 0);
        } else {
            std::vector<int> dims = homology_dims(field, gu, usz);
            sr.absolute_ok = true;
            for (int k = 0; k < static_cast<int>(dims.size()); ++k)
                if (dims[k] != 0) sr.absolute_ok = false;
        }

        std::vector<Mask> rel;
        for (Mask f : gu)
            if (t.sigma_of(f) == U) rel.push_back(f);
        std::vector<int> rdims = homology_dims(field, rel, usz);
        sr.relative_ok = true;
        for (int k = 0; k < static_cast<int>(rdims.size()); ++k) {
            int expect = (k == usz) ? 1 : 0;  // degree |U|-1 at cardinality |U|
            if (rdims[k] != expect) sr.relative_ok = false;
        }

        if (!sr.absolute_ok || !sr.relative_ok) rep.ok = false;
        rep.subsets.push_back(sr);
        if (U == full) break;
    }
    return rep;
}

}  // namespace

HomologyReport homology_validate(const Triangulation& t, int characteristic) {
    if (characteristic == 0) return homology_validate_impl(RationalField{}, t);
    if (characteristic == 2) return homology_validate_impl(GF2Ext(1), t);
    return homology_validate_impl(GFPrimeExt(characteristic, 1), t);
}

}  // namespace localh
