#include "localh/io_json.hpp"

#include <fstream>
#include <sstream>

#include "localh/util.hpp"

namespace localh {

namespace {

std::vector<int> sigma_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error(std::string(what) + " must contain integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<std::string> ids_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array of vertex ids");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw input_error(std::string(what) + " must contain strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw input_error("malformed rational: " + s);
    if (q.get_den() == 0) throw input_error("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

TriangulationInput triangulation_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("triangulation document must be a JSON object");
    TriangulationInput in;
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw input_error("triangulation needs an integer field \"d\"");
    in.d = j["d"].get<int>();
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw input_error("triangulation needs an array field \"vertices\"");
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("sigma"))
            throw input_error("each vertex needs \"id\" and \"sigma\"");
        in.vertices.emplace_back(v["id"].get<std::string>(),
                                 sigma_from_json(v["sigma"], "vertex sigma"));
    }
    if (!j.contains("facets") || !j["facets"].is_array())
        throw input_error("triangulation needs an array field \"facets\"");
    for (const auto& f : j["facets"]) in.facets.push_back(ids_from_json(f, "facet"));
    if (j.contains("sigma_overrides")) {
        if (!j["sigma_overrides"].is_array())
            throw input_error("\"sigma_overrides\" must be an array");
        for (const auto& o : j["sigma_overrides"]) {
            if (!o.is_object() || !o.contains("face") || !o.contains("sigma"))
                throw input_error("each override needs \"face\" and \"sigma\"");
            in.overrides.emplace_back(ids_from_json(o["face"], "override face"),
                                      sigma_from_json(o["sigma"], "override sigma"));
        }
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "d" && key != "vertices" && key != "facets" && key != "sigma_overrides")
            throw input_error("unknown triangulation field \"" + key + "\"");
    }
    return in;
}

Json triangulation_to_json(const TriangulationInput& in) {
    Json j;
    j["d"] = in.d;
    j["vertices"] = Json::array();
    for (const auto& [id, sigma] : in.vertices) {
        Json v;
        v["id"] = id;
        v["sigma"] = sigma;
        j["vertices"].push_back(std::move(v));
    }
    j["facets"] = Json::array();
    for (const auto& f : in.facets) j["facets"].push_back(f);
    j["sigma_overrides"] = Json::array();
    for (const auto& [face, sigma] : in.overrides) {
        Json o;
        o["face"] = face;
        o["sigma"] = sigma;
        j["sigma_overrides"].push_back(std::move(o));
    }
    return j;
}

Realization realization_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("realization document must be a JSON object");
    Realization r;
    if (!j.contains("coords") || !j["coords"].is_object())
        throw input_error("realization needs an object field \"coords\"");
    for (const auto& [id, arr] : j["coords"].items()) {
        if (!arr.is_array()) throw input_error("coords of " + id + " must be an array");
        std::vector<mpq_class> pos;
        for (const auto& x : arr) {
            if (!x.is_string()) throw input_error("coordinates must be \"p/q\" strings");
            pos.push_back(rational_from_string(x.get<std::string>()));
        }
        r.coords[id] = std::move(pos);
    }
    if (!j.contains("heights") || !j["heights"].is_object())
        throw input_error("realization needs an object field \"heights\"");
    for (const auto& [id, h] : j["heights"].items()) {
        if (!h.is_string()) throw input_error("heights must be \"p/q\" strings");
        r.heights[id] = rational_from_string(h.get<std::string>());
    }
    return r;
}

Json realization_to_json(const Realization& r) {
    Json j;
    j["coords"] = Json::object();
    for (const auto& [id, pos] : r.coords) {
        Json arr = Json::array();
        for (const auto& q : pos) arr.push_back(rational_to_string(q));
        j["coords"][id] = std::move(arr);
    }
    j["heights"] = Json::object();
    for (const auto& [id, h] : r.heights) j["heights"][id] = rational_to_string(h);
    return j;
}

Json intpoly_to_json(const IntPoly& p, int min_degree) {
    Json arr = Json::array();
    for (std::int64_t c : p.coeffs(min_degree)) arr.push_back(c);
    return arr;
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON input");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace localh
