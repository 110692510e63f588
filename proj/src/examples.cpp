#include "localh/examples.hpp"
#include "localh/util.hpp"

#include <string>

namespace localh {

Triangulation trivial_triangulation(int d) {
    TriangulationInput in;
    in.d = d;
    std::vector<std::string> facet;
    for (int i = 1; i <= d; ++i) {
        std::string id = "v" + std::to_string(i);
        in.vertices.emplace_back(id, std::vector<int>{i});
        facet.push_back(id);
    }
    in.facets.push_back(facet);
    return Triangulation::build(in);
}

Triangulation interior_point(int d) {
    TriangulationInput in;
    in.d = d;
    std::vector<int> all;
    for (int i = 1; i <= d; ++i) {
        in.vertices.emplace_back("v" + std::to_string(i), std::vector<int>{i});
        all.push_back(i);
    }
    in.vertices.emplace_back("w", all);
    for (int skip = 1; skip <= d; ++skip) {
        std::vector<std::string> facet;
        for (int i = 1; i <= d; ++i)
            if (i != skip) facet.push_back("v" + std::to_string(i));
        facet.push_back("w");
        in.facets.push_back(facet);
    }
    return Triangulation::build(in);
}

Triangulation subdivided_edge() {
    TriangulationInput in;
    in.d = 2;
    in.vertices.emplace_back("a", std::vector<int>{1});
    in.vertices.emplace_back("b", std::vector<int>{2});
    in.vertices.emplace_back("m", std::vector<int>{1, 2});
    in.facets = {{"a", "m"}, {"m", "b"}};
    return Triangulation::build(in);
}

namespace {
TriangulationInput figure1_input() {
    TriangulationInput in;
    in.d = 3;
    in.vertices.emplace_back("1", std::vector<int>{1});
    in.vertices.emplace_back("2", std::vector<int>{2});
    in.vertices.emplace_back("3", std::vector<int>{3});
    in.vertices.emplace_back("4", std::vector<int>{2, 3});
    in.vertices.emplace_back("5", std::vector<int>{1, 2, 3});
    in.facets = {{"1", "2", "3"}, {"2", "3", "5"}, {"2", "4", "5"}, {"3", "4", "5"}};
    return in;
}
}  // namespace

Triangulation figure1() {
    TriangulationInput in = figure1_input();
    in.overrides.emplace_back(std::vector<std::string>{"2", "3"}, std::vector<int>{1, 2, 3});
    return Triangulation::build(in);
}

Triangulation figure1_no_override() { return Triangulation::build(figure1_input()); }

Triangulation gamma_t(int t) {
    if (t < 1) throw input_error("gamma_t requires t >= 1");
    TriangulationInput in;
    in.d = 3 * t;
    for (int s = 1; s <= t; ++s) {
        std::string pre = std::to_string(s) + ".";
        for (int i = 1; i <= 3; ++i)
            in.vertices.emplace_back(pre + "v" + std::to_string(i),
                                     std::vector<int>{3 * (s - 1) + i});
        in.vertices.emplace_back(pre + "w",
                                 std::vector<int>{3 * s - 2, 3 * s - 1, 3 * s});
    }
    // Facets: one choice of skipped boundary vertex per factor.
    std::vector<int> skip(t, 1);
    while (true) {
        std::vector<std::string> facet;
        for (int s = 1; s <= t; ++s) {
            std::string pre = std::to_string(s) + ".";
            for (int i = 1; i <= 3; ++i)
                if (i != skip[s - 1]) facet.push_back(pre + "v" + std::to_string(i));
            facet.push_back(pre + "w");
        }
        in.facets.push_back(facet);
        int s = 0;
        while (s < t && skip[s] == 3) skip[s++] = 1;
        if (s == t) break;
        skip[s]++;
    }
    return Triangulation::build(in);
}

std::vector<mpq_class> reference_position(int coordinate, int d) {
    std::vector<mpq_class> p(d - 1, 0);
    if (coordinate >= 2) p[coordinate - 2] = 1;
    return p;
}

Realization interior_point_realization(int d) {
    Realization g;
    for (int i = 1; i <= d; ++i) {
        g.coords["v" + std::to_string(i)] = reference_position(i, d);
        g.heights["v" + std::to_string(i)] = 0;
    }
    // Barycenter of the reference simplex.
    std::vector<mpq_class> c(d - 1, mpq_class(1, d));
    g.coords["w"] = c;
    g.heights["w"] = -1;
    return g;
}

Realization join_realization(const Triangulation& a, const Realization& ga, int db,
                             const Realization& gb) {
    int da = a.d;
    Realization g;
    for (const auto& [id, x] : ga.coords) {
        std::vector<mpq_class> p(da + db - 1, 0);
        for (int k = 0; k < da - 1; ++k) p[k] = x[k];
        g.coords["1." + id] = p;
        g.heights["1." + id] = ga.heights.at(id);
    }
    for (const auto& [id, y] : gb.coords) {
        // Barycentric weight of the second factor's first coordinate becomes
        // the coefficient on e_{da-1}.
        std::vector<mpq_class> p(da + db - 1, 0);
        mpq_class first(1);
        for (const auto& v : y) first -= v;
        p[da - 1] = first;
        for (int k = 0; k < db - 1; ++k) p[da + k] = y[k];
        g.coords["2." + id] = p;
        g.heights["2." + id] = gb.heights.at(id);
    }
    return g;
}

Realization gamma_t_realization(int t) {
    // Fold the join embedding; ids end up as "s.v1" etc. because gamma_t
    // uses flat per-factor prefixes, so rebuild the fold with matching names.
    Realization acc = interior_point_realization(3);
    int dacc = 3;
    for (int s = 2; s <= t; ++s) {
        Realization next = interior_point_realization(3);
        Realization joined;
        for (const auto& [id, x] : acc.coords) {
            std::vector<mpq_class> p(dacc + 3 - 1, 0);
            for (std::size_t k = 0; k < x.size(); ++k) p[k] = x[k];
            joined.coords[id] = p;
            joined.heights[id] = acc.heights.at(id);
        }
        for (const auto& [id, y] : next.coords) {
            std::vector<mpq_class> p(dacc + 3 - 1, 0);
            mpq_class first(1);
            for (const auto& v : y) first -= v;
            p[dacc - 1] = first;
            for (std::size_t k = 0; k < y.size(); ++k) p[dacc + k] = y[k];
            joined.coords[std::to_string(s) + "." + id] = p;
            joined.heights[std::to_string(s) + "." + id] = next.heights.at(id);
        }
        acc = std::move(joined);
        dacc += 3;
    }
    if (t >= 2) {
        // First factor ids need their "1." prefix.
        Realization renamed;
        for (const auto& [id, x] : acc.coords) {
            std::string nid = (id.find('.') == std::string::npos) ? "1." + id : id;
            renamed.coords[nid] = x;
            renamed.heights[nid] = acc.heights.at(id);
        }
        return renamed;
    }
    // t == 1: gamma_t(1) ids are "1.v1".. so prefix as well.
    Realization renamed;
    for (const auto& [id, x] : acc.coords) {
        renamed.coords["1." + id] = x;
        renamed.heights["1." + id] = acc.heights.at(id);
    }
    return renamed;
}

}  // namespace localh
