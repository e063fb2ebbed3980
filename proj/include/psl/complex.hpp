#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "psl/errors.hpp"
#include "psl/point_cloud.hpp"

namespace psl {

using Vertex = int;

/// An abstract simplex, stored with strictly increasing vertex indices.
/// The ascending order is the canonical orientation used throughout.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices)
        : Simplex(std::vector<Vertex>(vertices)) {}

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<Vertex>& vertices() const { return verts_; }
    Vertex operator[](std::size_t i) const { return verts_[i]; }

    bool contains(Vertex v) const;
    /// True when `face`'s vertex set is a subset of this simplex's.
    bool has_face(const Simplex& face) const;
    /// The codim-1 face obtained by deleting the i-th vertex.
    Simplex facet(int i) const;

    bool operator==(const Simplex& o) const { return verts_ == o.verts_; }
    bool operator!=(const Simplex& o) const { return verts_ != o.verts_; }
    bool operator<(const Simplex& o) const { return verts_ < o.verts_; }

    std::string to_string() const;

private:
    std::vector<Vertex> verts_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Vertex v : s.vertices())
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
        return h;
    }
};

/// Signed incidence number [face : coface] in {-1, 0, +1}.
/// Returns (-1)^i when `face` is `coface` minus its i-th vertex, 0 otherwise.
int incidence_sign(const Simplex& face, const Simplex& coface);

struct FiltrationEntry {
    Simplex simplex;
    double birth = 0.0;
};

class ComplexView;

/// A filtered simplicial complex: entries sorted by (birth, dim, lex),
/// closed under faces at every level, no duplicates. Immutable once built.
class Filtration {
public:
    Filtration() = default;
    /// Normalizes the entry order and validates the filtration invariants.
    explicit Filtration(std::vector<FiltrationEntry> entries,
                        std::shared_ptr<const LabeledPointCloud> points = nullptr);

    const std::vector<FiltrationEntry>& entries() const { return entries_; }
    const std::shared_ptr<const LabeledPointCloud>& points() const { return points_; }

    double max_birth() const;
    int max_dim() const;
    bool empty() const { return entries_.empty(); }

private:
    std::vector<FiltrationEntry> entries_;
    std::shared_ptr<const LabeledPointCloud> points_;
};

/// The subcomplex at a fixed scale: exactly the simplices with birth <= t,
/// grouped by dimension, each dimension sorted lexicographically.
class ComplexView {
public:
    ComplexView(const Filtration& f, double t);

    double level() const { return level_; }
    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    /// Number of q-simplices (0 when q is out of range).
    int count(int q) const;
    const std::vector<Simplex>& simplices(int q) const;
    /// Position of a simplex within its dimension's ordered list, or -1.
    int position(const Simplex& s) const;
    bool contains(const Simplex& s) const { return position(s) >= 0; }

    std::size_t total_simplices() const;

private:
    double level_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
    static const std::vector<Simplex> kEmpty;
};

/// Vietoris-Rips filtration up to dimension dim_max. A simplex is born at
/// the largest pairwise distance among its vertices (vertices at 0); only
/// simplices born at or below r_max are kept.
Filtration build_rips(const LabeledPointCloud& points, double r_max, int dim_max);

Filtration build_rips(std::shared_ptr<const LabeledPointCloud> points,
                      double r_max, int dim_max);

inline ComplexView complex_at(const Filtration& f, double t) {
    return ComplexView(f, t);
}

}  // namespace psl
