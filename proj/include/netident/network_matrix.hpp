#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "netident/graph.hpp"
#include "netident/matrix.hpp"

namespace netident {

/// Network matrix G(z) attached to a graph: the entry on edge (j,i) is housed
/// at position G_{ij} (row i, column j). Admissibility means:
///   P1  every entry is a proper rational function,
///   P2  the support equals the edge set and all stored entries are nonzero,
///   P3  every principal minor of lim_{z->inf}(I - G(z)) is nonzero.
class NetworkMatrix {
public:
    explicit NetworkMatrix(Graph graph) : graph_(std::move(graph)) {}

    const Graph& graph() const { return graph_; }

    /// Sets the entry for edge (from, to), i.e. G_{to,from}.
    void set_entry(Vertex from, Vertex to, RatFunc f) {
        if (!graph_.has_edge(from, to))
            throw input_error("entry (" + std::to_string(from) + "," + std::to_string(to) +
                              ") has no matching edge");
        if (f.is_zero())
            entries_.erase({from, to});
        else
            entries_[{from, to}] = std::move(f);
    }

    /// G_{to,from}; zero when the edge carries no entry.
    const RatFunc& entry(Vertex from, Vertex to) const {
        static const RatFunc zero;
        auto it = entries_.find({from, to});
        return it == entries_.end() ? zero : it->second;
    }

    const std::map<Edge, RatFunc>& entries() const { return entries_; }

    /// Dense n x n matrix G(z).
    RatMatrix dense() const {
        const std::size_t n = static_cast<std::size_t>(graph_.vertex_count());
        RatMatrix g(n, n);
        for (const auto& [edge, f] : entries_)
            g(static_cast<std::size_t>(edge.second - 1),
              static_cast<std::size_t>(edge.first - 1)) = f;
        return g;
    }

    RatMatrix identity_minus() const {
        RatMatrix m = dense();
        const std::size_t n = m.rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = (i == j) ? RatFunc::one() - m(i, j) : -m(i, j);
        return m;
    }

private:
    Graph graph_;
    std::map<Edge, RatFunc> entries_;
};

struct AdmissibilityReport {
    bool p1_proper = true;
    bool p2_support = true;
    bool p3_minors = true;
    std::string detail;

    bool admissible() const { return p1_proper && p2_support && p3_minors; }
};

/// lim_{z->inf} (I - G(z)) as an exact rational matrix; empty if some entry is
/// improper (the limit does not exist).
inline std::optional<QMatrix> limit_identity_minus(const NetworkMatrix& nm) {
    const std::size_t n = static_cast<std::size_t>(nm.graph().vertex_count());
    QMatrix lim(n, n);
    for (std::size_t i = 0; i < n; ++i) lim(i, i) = Rational(1);
    for (const auto& [edge, f] : nm.entries()) {
        auto l = f.limit_at_infinity();
        if (!l) return std::nullopt;
        lim(static_cast<std::size_t>(edge.second - 1), static_cast<std::size_t>(edge.first - 1)) -=
            *l;
    }
    return lim;
}

/// Full P1/P2/P3 audit. P3 enumerates all principal minors of the exact limit
/// matrix; when the limit is the identity (all entries strictly proper) the
/// minors are all 1 and enumeration is skipped.
inline AdmissibilityReport audit_admissible(const NetworkMatrix& nm) {
    AdmissibilityReport report;
    const Graph& g = nm.graph();

    for (const auto& [edge, f] : nm.entries()) {
        if (!g.has_edge(edge.first, edge.second)) {
            report.p2_support = false;
            report.detail = "entry outside the edge set";
            return report;
        }
        if (!f.is_proper()) {
            report.p1_proper = false;
            report.detail = "improper entry on edge (" + std::to_string(edge.first) + "," +
                            std::to_string(edge.second) + ")";
            return report;
        }
    }
    if (nm.entries().size() != g.edge_count()) {
        report.p2_support = false;
        report.detail = "some edge carries a zero entry";
        return report;
    }

    auto lim = limit_identity_minus(nm);
    if (!lim) {
        report.p1_proper = false;
        report.detail = "improper entry";
        return report;
    }
    const std::size_t n = lim->rows();
    if (*lim == QMatrix::identity(n)) return report; // all principal minors are 1
    if (n > 20)
        throw input_error("principal-minor audit limited to 20 vertices for matrices whose "
                          "limit is not the identity");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (determinant(lim->submatrix(idx, idx)) == 0) {
            report.p3_minors = false;
            report.detail = "vanishing principal minor of the limit matrix";
            return report;
        }
    }
    return report;
}

/// Samples an admissible network matrix: each edge gets c/z with c a nonzero
/// random integer in [-1000, 1000]. Strict properness makes lim(I - G) = I,
/// so P3 holds by construction.
inline NetworkMatrix sample_admissible(const Graph& g, std::mt19937_64& rng) {
    NetworkMatrix nm(g);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    for (const Edge& e : g.edges()) {
        int c = 0;
        while (c == 0) c = dist(rng);
        nm.set_entry(e.first, e.second, RatFunc::over_z(Rational(c)));
    }
    return nm;
}

inline NetworkMatrix sample_admissible(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_admissible(g, rng);
}

/// T(z;G) = (I - G(z))^{-1}, exactly.
inline RatMatrix transfer_matrix(const NetworkMatrix& nm) {
    return inverse(nm.identity_minus());
}

namespace detail {
inline std::vector<std::size_t> zero_based(const VertexSet& s) {
    std::vector<std::size_t> idx;
    idx.reserve(s.size());
    for (Vertex v : s) idx.push_back(static_cast<std::size_t>(v - 1));
    return idx;
}
} // namespace detail

/// T_{rows,cols}: rows and columns in sorted vertex order.
inline RatMatrix transfer_submatrix(const RatMatrix& t, const VertexSet& rows,
                                    const VertexSet& cols) {
    return t.submatrix(detail::zero_based(rows), detail::zero_based(cols));
}

/// normal_rank(T_{rows,cols}) without materializing the full symbolic inverse
/// unless needed: evaluation of (I - G(lambda))^{-1} at random rational points
/// can only under-estimate, so a full-rank evaluation is conclusive; otherwise
/// the exact symbolic solve decides.
inline std::size_t transfer_submatrix_rank(const NetworkMatrix& nm, const VertexSet& rows,
                                           const VertexSet& cols,
                                           std::uint64_t seed = 0x6e657469) {
    nm.graph().check_set(rows);
    nm.graph().check_set(cols);
    const std::size_t full = std::min(rows.size(), cols.size());
    if (full == 0) return 0;
    const RatMatrix im = nm.identity_minus();
    const std::size_t n = im.rows();
    std::mt19937_64 rng(seed);
    const auto row_idx = detail::zero_based(rows);
    const auto col_idx = detail::zero_based(cols);
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto at = evaluate(im, random_eval_point(rng));
        if (!at) continue;
        try {
            const QMatrix t_at = inverse(*at);
            if (rank(t_at.submatrix(row_idx, col_idx)) == full) return full;
        } catch (const singular_matrix_error&) {
            continue; // pole of T; draw another point
        }
    }
    // exact route: solve only the needed columns of T
    RatMatrix rhs(n, cols.size());
    for (std::size_t j = 0; j < col_idx.size(); ++j) rhs(col_idx[j], j) = RatFunc::one();
    const RatMatrix t_cols = solve(im, std::move(rhs));
    std::vector<std::size_t> all_cols(cols.size());
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
    return rank(t_cols.submatrix(row_idx, all_cols));
}

} // namespace netident
