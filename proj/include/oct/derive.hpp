#pragma once

#include "oct/circuit_log.hpp"
#include "oct/face_trace.hpp"

namespace oct {

struct Derived {
    RotationSystem system;
    FaceSet faces;
    bool triangular = false;
    int genus = -1;
};

namespace detail {

inline int mod(int x, int n) { return ((x % n) + n) % n; }

// Neighbor rows -> simple-graph rotation system over Z_n.
inline RotationSystem rows_to_system(int n, const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Vertex>> nbrs(n);
    for (int i = 0; i < n; ++i) {
        nbrs[i].reserve(rows[i].size());
        for (int x : rows[i]) {
            int w = mod(x, n);
            if (w == i) throw std::invalid_argument("derived rotation lists vertex " + std::to_string(i) +
                                                    " as its own neighbor");
            nbrs[i].push_back(w);
        }
    }
    return from_neighbor_lists(nbrs);
}

inline Derived finish(RotationSystem rs) {
    Derived d;
    d.faces = trace_faces(rs);
    d.triangular = d.faces.all_triangular();
    d.genus = genus_of(d.faces);
    d.system = std::move(rs);
    return d;
}

} // namespace detail

// Additivity rule, index 1: the rotation at vertex i is the log with i added
// to each element. Edges with one odd and one even endpoint pick up a twist,
// which is normalized away by flipping every odd vertex, so the returned
// system is pure: even rows read the shifted log forward, odd rows reversed.
inline Derived derive_index1(const Log& log) {
    log.require_covers_once();
    int n = log.modulus;
    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i) {
        if (i % 2 == 0)
            for (int x : log.values) rows[i].push_back(i + x);
        else
            for (auto it = log.values.rbegin(); it != log.values.rend(); ++it)
                rows[i].push_back(i + *it);
    }
    return detail::finish(detail::rows_to_system(n, rows));
}

// The same derivation before the odd-vertex flips: every row reads the
// shifted log forward and odd-even edges carry signature -1. Equivalent to
// derive_index1 up to vertex flips; kept for orientability demonstrations.
inline RotationSystem derive_index1_twisted(const Log& log) {
    log.require_covers_once();
    int n = log.modulus;
    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i)
        for (int x : log.values) rows[i].push_back(i + x);
    RotationSystem rs = detail::rows_to_system(n, rows);
    for (EdgeId e = 0; e < rs.edge_slots(); ++e) {
        auto [u, v] = rs.edge_ends(e);
        if ((u + v) % 2 != 0) rs.set_twisted(e, true);
    }
    return rs;
}

// Additivity rule, index 2: vertex i takes the log of circuit [i mod 2]
// shifted by i. The result is pure as given; triangularity is established by
// tracing, never assumed, and reported through Derived::triangular.
inline Derived derive_index2(const Log& row0, const Log& row1) {
    if (row0.modulus != row1.modulus)
        throw std::invalid_argument("index-2 logs have different moduli");
    if (row0.modulus % 2 != 0)
        throw std::invalid_argument("index-2 derivation needs an even modulus");
    if (row0.size() != row0.modulus - 2 || row1.size() != row1.modulus - 2)
        throw std::invalid_argument("index-2 logs must have length n-2");
    row0.require_covers_once();
    row1.require_covers_once();
    int n = row0.modulus;
    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i) {
        const Log& src = (i % 2 == 0) ? row0 : row1;
        for (int x : src.values) rows[i].push_back(i + x);
    }
    return detail::finish(detail::rows_to_system(n, rows));
}

} // namespace oct
