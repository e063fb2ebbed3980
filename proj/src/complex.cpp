#include "psl/complex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace psl {

Simplex::Simplex(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty())
        throw Error(ErrorCode::InvalidParameter, "simplex needs at least one vertex");
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i] < 0)
            throw Error(ErrorCode::InvalidParameter, "negative vertex index");
        if (i > 0 && verts_[i] <= verts_[i - 1])
            throw Error(ErrorCode::InvalidParameter,
                        "simplex vertices must be strictly increasing");
    }
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::has_face(const Simplex& face) const {
    return std::includes(verts_.begin(), verts_.end(),
                         face.verts_.begin(), face.verts_.end());
}

Simplex Simplex::facet(int i) const {
    std::vector<Vertex> v;
    v.reserve(verts_.size() - 1);
    for (std::size_t j = 0; j < verts_.size(); ++j)
        if (static_cast<int>(j) != i) v.push_back(verts_[j]);
    return Simplex(std::move(v));
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ',';
        os << verts_[i];
    }
    os << ']';
    return os.str();
}

int incidence_sign(const Simplex& face, const Simplex& coface) {
    if (coface.dim() - face.dim() != 1) return 0;
    // Find the unique vertex of coface missing from face; any mismatch
    // beyond one deletion means face is not a facet.
    const auto& f = face.vertices();
    const auto& c = coface.vertices();
    int deleted = -1;
    std::size_t fi = 0;
    for (std::size_t ci = 0; ci < c.size(); ++ci) {
        if (fi < f.size() && f[fi] == c[ci]) {
            ++fi;
        } else if (deleted < 0) {
            deleted = static_cast<int>(ci);
        } else {
            return 0;
        }
    }
    if (fi != f.size()) return 0;
    return (deleted % 2 == 0) ? 1 : -1;
}

namespace {

bool entry_order(const FiltrationEntry& a, const FiltrationEntry& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
    return a.simplex < b.simplex;
}

}  // namespace

Filtration::Filtration(std::vector<FiltrationEntry> entries,
                       std::shared_ptr<const LabeledPointCloud> points)
    : entries_(std::move(entries)), points_(std::move(points)) {
    std::sort(entries_.begin(), entries_.end(), entry_order);

    std::unordered_map<Simplex, double, SimplexHash> birth_of;
    birth_of.reserve(entries_.size());
    for (const auto& e : entries_) {
        auto [it, inserted] = birth_of.emplace(e.simplex, e.birth);
        if (!inserted)
            throw Error(ErrorCode::DuplicateSimplex,
                        "duplicate simplex " + e.simplex.to_string());
    }
    // Closure under faces: every codim-1 face must exist with birth <= ours.
    for (const auto& e : entries_) {
        if (e.simplex.dim() == 0) continue;
        for (int i = 0; i <= e.simplex.dim(); ++i) {
            Simplex face = e.simplex.facet(i);
            auto it = birth_of.find(face);
            if (it == birth_of.end() || it->second > e.birth)
                throw Error(ErrorCode::ClosureViolation,
                            "face " + face.to_string() + " of " +
                                e.simplex.to_string() +
                                " missing or born later");
        }
    }
}

double Filtration::max_birth() const {
    return entries_.empty() ? 0.0 : entries_.back().birth;
}

int Filtration::max_dim() const {
    int d = -1;
    for (const auto& e : entries_) d = std::max(d, e.simplex.dim());
    return d;
}

const std::vector<Simplex> ComplexView::kEmpty;

ComplexView::ComplexView(const Filtration& f, double t) : level_(t) {
    for (const auto& e : f.entries()) {
        if (e.birth > t) break;  // entries sorted by birth
        int d = e.simplex.dim();
        if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
        by_dim_[d].push_back(e.simplex);
    }
    index_.resize(by_dim_.size());
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        std::sort(by_dim_[d].begin(), by_dim_[d].end());
        index_[d].reserve(by_dim_[d].size());
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
            index_[d].emplace(by_dim_[d][i], static_cast<int>(i));
    }
}

int ComplexView::count(int q) const {
    if (q < 0 || q >= static_cast<int>(by_dim_.size())) return 0;
    return static_cast<int>(by_dim_[q].size());
}

const std::vector<Simplex>& ComplexView::simplices(int q) const {
    if (q < 0 || q >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[q];
}

int ComplexView::position(const Simplex& s) const {
    int d = s.dim();
    if (d < 0 || d >= static_cast<int>(index_.size())) return -1;
    auto it = index_[d].find(s);
    return it == index_[d].end() ? -1 : it->second;
}

std::size_t ComplexView::total_simplices() const {
    std::size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
}

Filtration build_rips(std::shared_ptr<const LabeledPointCloud> points,
                      double r_max, int dim_max) {
    if (!points) throw Error(ErrorCode::InvalidParameter, "null point cloud");
    const LabeledPointCloud& pc = *points;
    if (r_max <= 0.0)
        throw Error(ErrorCode::InvalidParameter, "r_max must be positive");
    if (dim_max < 0)
        throw Error(ErrorCode::InvalidParameter, "dim_max must be non-negative");
    pc.validate();

    const int n = static_cast<int>(pc.size());
    std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = pc.distance(i, j);
            if (d == 0.0)
                throw Error(ErrorCode::DuplicatePoints,
                            "points " + std::to_string(i) + " and " +
                                std::to_string(j) + " coincide");
            dist[i * n + j] = dist[j * n + i] = d;
        }
    }

    std::vector<FiltrationEntry> entries;
    for (int i = 0; i < n; ++i)
        entries.push_back({Simplex({i}), 0.0});

    // Lower neighbors: u < v with d(u,v) <= r_max, ascending.
    std::vector<std::vector<Vertex>> lower(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (dist[u * n + v] <= r_max) lower[v].push_back(u);

    struct Frontier {
        std::vector<Vertex> verts;  // ascending
        double birth;
    };
    std::vector<Frontier> frontier;
    if (dim_max >= 1) {
        for (int v = 0; v < n; ++v) {
            for (int u : lower[v]) {
                frontier.push_back({{u, v}, dist[u * n + v]});
                entries.push_back({Simplex({u, v}), dist[u * n + v]});
            }
        }
    }

    // Incremental expansion: extend each simplex by common lower neighbors
    // of all its vertices, so every clique is generated exactly once.
    for (int d = 2; d <= dim_max && !frontier.empty(); ++d) {
        std::vector<Frontier> next;
        for (const auto& s : frontier) {
            std::vector<Vertex> common = lower[s.verts[0]];
            for (std::size_t k = 1; k < s.verts.size() && !common.empty(); ++k) {
                std::vector<Vertex> tmp;
                std::set_intersection(common.begin(), common.end(),
                                      lower[s.verts[k]].begin(),
                                      lower[s.verts[k]].end(),
                                      std::back_inserter(tmp));
                common.swap(tmp);
            }
            for (Vertex u : common) {
                // u is adjacent to every vertex of s, so birth <= r_max
                double birth = s.birth;
                for (Vertex v : s.verts)
                    birth = std::max(birth, dist[u * n + v]);
                std::vector<Vertex> verts;
                verts.reserve(s.verts.size() + 1);
                verts.push_back(u);
                verts.insert(verts.end(), s.verts.begin(), s.verts.end());
                next.push_back({verts, birth});
                entries.push_back({Simplex(verts), birth});
            }
        }
        frontier.swap(next);
    }

    return Filtration(std::move(entries), std::move(points));
}

Filtration build_rips(const LabeledPointCloud& points, double r_max, int dim_max) {
    return build_rips(std::make_shared<LabeledPointCloud>(points), r_max, dim_max);
}

}  // namespace psl
