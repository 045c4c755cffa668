#pragma once

#include <string>
#include <vector>

#include "ih2/space_io.hpp"
#include "ih2/stratified.hpp"

namespace ih2 {

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "circle",        "sphere2",      "torus7",     "rp2_6",    "klein",
        "disk_cone",     "pinched_torus", "susp_torus", "susp_sphere2", "susp_rp2"};
    return names;
}

namespace detail {

inline std::vector<std::vector<int>> circle_facets() { return {{0, 1}, {0, 2}, {1, 2}}; }

// octahedron: opposite vertex pairs (0,1), (2,3), (4,5)
inline std::vector<std::vector<int>> sphere2_facets() {
    return {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
            {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}};
}

// the 7-vertex torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7
inline std::vector<std::vector<int>> torus7_facets() {
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 7; ++i) {
        std::vector<int> t1 = {i, (i + 1) % 7, (i + 3) % 7};
        std::vector<int> t2 = {i, (i + 2) % 7, (i + 3) % 7};
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        f.push_back(t1);
        f.push_back(t2);
    }
    std::sort(f.begin(), f.end());
    return f;
}

// minimal 6-vertex projective plane (antipodal icosahedron quotient)
inline std::vector<std::vector<int>> rp2_facets() {
    return {{0, 1, 2}, {0, 1, 5}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
            {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
}

// Klein bottle: 3x3 grid, cyclic vertically, glued with a reflection
// horizontally; vertex (i,j) is 3i+j
inline std::vector<std::vector<int>> klein_facets() {
    std::vector<std::vector<int>> f;
    const auto grid = [](int i, int j) {
        j = ((j % 3) + 3) % 3;
        if (i < 3) return 3 * i + j;
        return (3 - j) % 3;  // seam column, reflected
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::vector<int> t1 = {grid(i, j), grid(i + 1, j), grid(i + 1, j + 1)};
            std::vector<int> t2 = {grid(i, j), grid(i + 1, j + 1), grid(i, j + 1)};
            std::sort(t1.begin(), t1.end());
            std::sort(t2.begin(), t2.end());
            f.push_back(t1);
            f.push_back(t2);
        }
    std::sort(f.begin(), f.end());
    return f;
}

// cone over the triangle circle; the apex 3 is the singular point
inline std::vector<std::vector<int>> disk_cone_facets() {
    return {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
}

// two-ring cylinder over the triangle circle with both rims coned to a
// single apex 6: a sphere with two points identified at the apex
inline std::vector<std::vector<int>> pinched_torus_facets() {
    return {{0, 1, 4}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {0, 2, 3}, {2, 3, 5},
            {0, 1, 6}, {1, 2, 6}, {0, 2, 6}, {3, 4, 6}, {4, 5, 6}, {3, 5, 6}};
}

inline SpaceFile base_entry(const std::string& name, int dimension,
                            std::vector<std::vector<int>> facets,
                            std::vector<SkeletonSpec> skeleta) {
    SpaceFile s;
    s.name = name;
    s.dimension = dimension;
    s.facets = std::move(facets);
    std::sort(s.facets.begin(), s.facets.end());
    s.skeleta = std::move(skeleta);
    return s;
}

inline SpaceFile suspended_entry(const std::string& name, const SpaceFile& base) {
    const Space space = realize(base);
    SpaceFile s = space_file_from(name, suspend_filtered(space.filtered));
    return s;
}

}  // namespace detail

/// The builtin catalog. Every entry carries its documented expected
/// values under metadata.expect, consumed by the selftest command.
inline SpaceFile catalog_entry(const std::string& name) {
    using detail::base_entry;
    SpaceFile s;
    if (name == "circle") {
        s = base_entry(name, 1, detail::circle_facets(), {});
        s.metadata["notes"] = "triangle boundary";
        s.metadata["expect"] = {{"kind", "closed"},    {"euler", 0},
                                {"f_vector", {3, 3}},  {"homology", {1, 1}},
                                {"ih", {{"m", {1, 1}}}}, {"witt", true},
                                {"duality", true},     {"top_sw_number", 0},
                                {"obstructed", false}};
    } else if (name == "sphere2") {
        s = base_entry(name, 2, detail::sphere2_facets(), {});
        s.metadata["notes"] = "octahedron";
        s.metadata["expect"] = {{"kind", "closed"},       {"euler", 2},
                                {"f_vector", {6, 12, 8}}, {"homology", {1, 0, 1}},
                                {"ih", {{"m", {1, 0, 1}}}}, {"witt", true},
                                {"duality", true},        {"top_sw_number", 0},
                                {"obstructed", false}};
    } else if (name == "torus7") {
        s = base_entry(name, 2, detail::torus7_facets(), {});
        s.metadata["notes"] = "7-vertex torus, triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7";
        s.metadata["expect"] = {{"kind", "closed"},        {"euler", 0},
                                {"f_vector", {7, 21, 14}}, {"homology", {1, 2, 1}},
                                {"ih", {{"m", {1, 2, 1}}}}, {"witt", true},
                                {"duality", true},         {"top_sw_number", 0},
                                {"w1_vanishes", true},     {"obstructed", false}};
    } else if (name == "rp2_6") {
        s = base_entry(name, 2, detail::rp2_facets(), {});
        s.metadata["notes"] = "minimal 6-vertex projective plane";
        s.metadata["expect"] = {{"kind", "closed"},        {"euler", 1},
                                {"f_vector", {6, 15, 10}}, {"homology", {1, 1, 1}},
                                {"ih", {{"m", {1, 1, 1}}}}, {"witt", true},
                                {"duality", true},         {"top_sw_number", 1},
                                {"w1_vanishes", false},    {"obstructed", true}};
    } else if (name == "klein") {
        s = base_entry(name, 2, detail::klein_facets(), {});
        s.metadata["notes"] = "9-vertex Klein bottle from a reflected 3x3 grid";
        s.metadata["expect"] = {{"kind", "closed"},        {"euler", 0},
                                {"f_vector", {9, 27, 18}}, {"homology", {1, 2, 1}},
                                {"ih", {{"m", {1, 2, 1}}}}, {"witt", true},
                                {"duality", true},         {"top_sw_number", 0},
                                {"w1_vanishes", false},    {"obstructed", false}};
    } else if (name == "disk_cone") {
        s = base_entry(name, 2, detail::disk_cone_facets(), {{0, {3}}});
        s.metadata["notes"] = "cone over the triangle circle, apex singular";
        s.metadata["expect"] = {{"kind", "with_boundary"},
                                {"euler", 1},
                                {"homology", {1, 0, 0}},
                                {"ih", {{"0", {1, 0, 0}}, {"m", {1, 0, 0}}}},
                                {"witt", true},
                                {"zero_perv_allowable_edges", 3},
                                {"zero_perv_ic2_basis", 1}};
    } else if (name == "pinched_torus") {
        s = base_entry(name, 2, detail::pinched_torus_facets(), {{0, {6}}});
        s.metadata["notes"] =
            "cylinder over the triangle with both rims coned to one apex; "
            "the apex link is two disjoint circles";
        s.metadata["expect"] = {{"kind", "closed"},
                                {"euler", 1},
                                {"homology", {1, 1, 1}},
                                {"ih", {{"m", {1, 0, 1}}, {"n", {1, 0, 1}}}},
                                {"witt", true},
                                {"duality", true},
                                {"omega_m", {{"1", {0, 1, 0}}, {"2", {1, 1, 1}}}}};
    } else if (name == "susp_torus") {
        s = detail::suspended_entry(name, catalog_entry("torus7"));
        s.metadata["notes"] = "suspension of the 7-vertex torus; apex links are tori";
        s.metadata["expect"] = {{"kind", "closed"},
                                {"euler", 2},
                                {"homology", {1, 0, 2, 1}},
                                {"ih", {{"m", {1, 2, 0, 1}}, {"n", {1, 0, 2, 1}}}},
                                {"witt", false},
                                {"witt_link_ranks", {2, 2}},
                                {"duality", false}};
    } else if (name == "susp_sphere2") {
        s = detail::suspended_entry(name, catalog_entry("sphere2"));
        s.metadata["notes"] = "suspension of the octahedron; a stratified 3-sphere";
        s.metadata["expect"] = {{"kind", "closed"},
                                {"euler", 0},
                                {"homology", {1, 0, 0, 1}},
                                {"ih", {{"m", {1, 0, 0, 1}}, {"n", {1, 0, 0, 1}}}},
                                {"witt", true},
                                {"duality", true}};
    } else if (name == "susp_rp2") {
        s = detail::suspended_entry(name, catalog_entry("rp2_6"));
        s.metadata["notes"] = "suspension of the 6-vertex projective plane";
        s.metadata["expect"] = {{"kind", "closed"},
                                {"euler", 1},
                                {"homology", {1, 0, 1, 1}},
                                {"ih", {{"m", {1, 1, 0, 1}}, {"n", {1, 0, 1, 1}}}},
                                {"witt", false},
                                {"witt_link_ranks", {1, 1}},
                                {"duality", false}};
    } else {
        std::string msg = "unknown catalog space '" + name + "'; available:";
        for (const auto& n : catalog_names()) msg += " " + n;
        throw InputError(msg);
    }
    return s;
}

}  // namespace ih2
