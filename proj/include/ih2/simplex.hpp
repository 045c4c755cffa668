#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "ih2/errors.hpp"

namespace ih2 {

/// Abstract simplex: a strictly increasing list of non-negative vertex ids.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
        std::sort(verts_.begin(), verts_.end());
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (verts_[i] < 0)
                throw InputError("simplex vertex ids must be non-negative");
            if (i > 0 && verts_[i] == verts_[i - 1])
                throw InputError("repeated vertex " + std::to_string(verts_[i]) +
                                 " in simplex");
        }
    }

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<int>& vertices() const { return verts_; }

    bool contains_vertex(int v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool is_face_of(const Simplex& other) const {
        return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(),
                             verts_.end());
    }

    /// The codimension-one faces, in the order of the dropped vertex.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        if (verts_.size() < 2) return out;
        out.reserve(verts_.size());
        for (std::size_t skip = 0; skip < verts_.size(); ++skip) {
            Simplex f;
            f.verts_.reserve(verts_.size() - 1);
            for (std::size_t i = 0; i < verts_.size(); ++i)
                if (i != skip) f.verts_.push_back(verts_[i]);
            out.push_back(std::move(f));
        }
        return out;
    }

    Simplex joined_with(int vertex) const {
        if (contains_vertex(vertex))
            throw InternalError("join with vertex already present");
        Simplex s;
        s.verts_ = verts_;
        s.verts_.insert(std::upper_bound(s.verts_.begin(), s.verts_.end(), vertex), vertex);
        return s;
    }

    /// Vertices of this simplex that are absent from the other one.
    Simplex minus(const Simplex& other) const {
        Simplex s;
        std::set_difference(verts_.begin(), verts_.end(), other.verts_.begin(),
                            other.verts_.end(), std::back_inserter(s.verts_));
        return s;
    }

    bool disjoint_from(const Simplex& other) const {
        std::vector<int> tmp;
        std::set_intersection(verts_.begin(), verts_.end(), other.verts_.begin(),
                              other.verts_.end(), std::back_inserter(tmp));
        return tmp.empty();
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(verts_[i]);
        }
        return s + "}";
    }

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<int> verts_;
};

/// Canonical global ordering: by dimension, then lexicographically.
inline bool dim_lex_less(const Simplex& a, const Simplex& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
}

}  // namespace ih2
