#pragma once

#include <json.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ih2/errors.hpp"
#include "ih2/filtration.hpp"
#include "ih2/subdivision.hpp"

namespace ih2 {

using json = nlohmann::ordered_json;

/// On-disk description of a space: facets of the complex plus optional
/// skeleton vertex sets, UTF-8 JSON with a versioned "format" field.
struct SpaceFile {
    std::string name;
    int dimension = 0;
    std::vector<std::vector<int>> facets;
    std::vector<SkeletonSpec> skeleta;
    json metadata = json::object();

    bool operator==(const SpaceFile& other) const {
        return name == other.name && dimension == other.dimension && facets == other.facets &&
               skeleta_equal(other) && metadata == other.metadata;
    }

private:
    bool skeleta_equal(const SpaceFile& other) const {
        if (skeleta.size() != other.skeleta.size()) return false;
        for (std::size_t i = 0; i < skeleta.size(); ++i)
            if (skeleta[i].dim != other.skeleta[i].dim ||
                skeleta[i].vertices != other.skeleta[i].vertices)
                return false;
        return true;
    }
};

namespace detail {

inline int require_nat(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(path + ": expected a non-negative integer");
    return j.get<int>();
}

inline void check_fields(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path, bool lenient,
                         std::vector<std::string>* warnings) {
    for (const auto& item : obj.items()) {
        if (allowed.count(item.key())) continue;
        const std::string msg = path + "." + item.key() + ": unknown field";
        if (!lenient) throw InputError(msg);
        if (warnings) warnings->push_back(msg);
    }
}

}  // namespace detail

/// Parses and validates a space file. Unknown fields are rejected unless
/// lenient, in which case they are reported through warnings.
inline SpaceFile parse_space_file(const std::string& text, bool lenient = false,
                                  std::vector<std::string>* warnings = nullptr) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("$: expected a JSON object");
    detail::check_fields(j, {"format", "name", "dimension", "facets", "skeleta", "metadata"},
                         "$", lenient, warnings);

    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != 1)
        throw InputError("$.format: expected the integer 1");
    if (!j.contains("name") || !j["name"].is_string())
        throw InputError("$.name: expected a string");
    if (!j.contains("dimension")) throw InputError("$.dimension: missing");
    if (!j.contains("facets") || !j["facets"].is_array() || j["facets"].empty())
        throw InputError("$.facets: expected a non-empty array");

    SpaceFile s;
    s.name = j["name"].get<std::string>();
    s.dimension = detail::require_nat(j["dimension"], "$.dimension");

    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < j["facets"].size(); ++i) {
        const json& jf = j["facets"][i];
        const std::string path = "$.facets[" + std::to_string(i) + "]";
        if (!jf.is_array() || jf.empty())
            throw InputError(path + ": expected a non-empty array of vertex ids");
        std::vector<int> facet;
        for (std::size_t v = 0; v < jf.size(); ++v)
            facet.push_back(detail::require_nat(jf[v], path + "[" + std::to_string(v) + "]"));
        std::sort(facet.begin(), facet.end());
        for (std::size_t v = 1; v < facet.size(); ++v)
            if (facet[v] == facet[v - 1])
                throw InputError(path + ": repeated vertex " + std::to_string(facet[v]));
        if (seen.insert(facet).second) s.facets.push_back(std::move(facet));
    }
    std::sort(s.facets.begin(), s.facets.end());

    if (j.contains("skeleta")) {
        if (!j["skeleta"].is_array()) throw InputError("$.skeleta: expected an array");
        int prev_dim = -1;
        for (std::size_t i = 0; i < j["skeleta"].size(); ++i) {
            const json& js = j["skeleta"][i];
            const std::string path = "$.skeleta[" + std::to_string(i) + "]";
            if (!js.is_object()) throw InputError(path + ": expected an object");
            detail::check_fields(js, {"dim", "vertices"}, path, lenient, warnings);
            if (!js.contains("dim") || !js.contains("vertices"))
                throw InputError(path + ": needs fields dim and vertices");
            SkeletonSpec spec;
            spec.dim = detail::require_nat(js["dim"], path + ".dim");
            if (spec.dim <= prev_dim)
                throw InputError(path + ".dim: skeleton dims must be strictly increasing");
            if (spec.dim > s.dimension - 2)
                throw InputError(path + ".dim: must be at most dimension - 2 = " +
                                 std::to_string(s.dimension - 2));
            prev_dim = spec.dim;
            if (!js["vertices"].is_array())
                throw InputError(path + ".vertices: expected an array");
            for (std::size_t v = 0; v < js["vertices"].size(); ++v)
                spec.vertices.push_back(detail::require_nat(
                    js["vertices"][v], path + ".vertices[" + std::to_string(v) + "]"));
            std::sort(spec.vertices.begin(), spec.vertices.end());
            spec.vertices.erase(std::unique(spec.vertices.begin(), spec.vertices.end()),
                                spec.vertices.end());
            s.skeleta.push_back(std::move(spec));
        }
    }

    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw InputError("$.metadata: expected an object");
        s.metadata = j["metadata"];
    }
    return s;
}

/// Canonical emission; byte-identical for equal content.
inline std::string emit_space_file(const SpaceFile& s) {
    json j;
    j["format"] = 1;
    j["name"] = s.name;
    j["dimension"] = s.dimension;
    j["facets"] = s.facets;
    j["skeleta"] = json::array();
    for (const auto& spec : s.skeleta)
        j["skeleta"].push_back(json{{"dim", spec.dim}, {"vertices", spec.vertices}});
    if (!s.metadata.empty()) j["metadata"] = s.metadata;
    return j.dump(2) + "\n";
}

/// A space file realized in memory: the face closure and the filtration
/// (trivial when the file declares no skeleta).
struct Space {
    SpaceFile file;
    SimplicialComplex complex;
    FilteredComplex filtered;
};

inline Space realize(const SpaceFile& s) {
    Space space;
    space.file = s;
    space.complex = SimplicialComplex::from_facets(s.facets);
    if (space.complex.dimension() != s.dimension)
        throw InputError("$.dimension: declared " + std::to_string(s.dimension) +
                         " but the facets span dimension " +
                         std::to_string(space.complex.dimension()));
    if (s.skeleta.empty())
        space.filtered = FilteredComplex::trivial(space.complex);
    else
        space.filtered = FilteredComplex::build(space.complex, s.skeleta);
    return space;
}

inline SpaceFile space_file_from(const std::string& name, const FilteredComplex& x) {
    SpaceFile s;
    s.name = name;
    s.dimension = x.ambient_dim();
    for (const auto& f : x.complex().facets()) s.facets.push_back(f.vertices());
    std::sort(s.facets.begin(), s.facets.end());
    s.skeleta = x.skeleton_jumps();
    return s;
}

/// One barycentric subdivision with the induced filtration: the vertex of
/// the subdivision sitting at a simplex of X_k joins the new X_k.
inline SpaceFile subdivided_space(const SpaceFile& s) {
    const Space space = realize(s);
    const BarycentricSubdivision bs = barycentric_subdivision(space.complex);

    std::vector<SkeletonSpec> skeleta;
    const int a = space.complex.dimension();
    std::vector<int> prev;
    for (int k = 0; k <= a - 2; ++k) {
        std::vector<int> verts;
        for (std::size_t v = 0; v < bs.origin.size(); ++v)
            if (space.filtered.simplex_level(bs.origin[v]) <= k)
                verts.push_back(static_cast<int>(v));
        if (verts != prev) {
            skeleta.push_back({k, verts});
            prev = verts;
        }
    }

    SpaceFile out;
    out.name = s.name + "_sd";
    out.dimension = a;
    for (const auto& f : bs.complex.facets()) out.facets.push_back(f.vertices());
    std::sort(out.facets.begin(), out.facets.end());
    out.skeleta = std::move(skeleta);
    return out;
}

}  // namespace ih2
