#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oct {

using Vertex = int;
using EdgeId = int;
using Dart = int; // 2*edge + end

constexpr Dart partner(Dart d) { return d ^ 1; }
constexpr EdgeId edge_of(Dart d) { return d >> 1; }
constexpr Dart dart_of(EdgeId e, int end) { return 2 * e + end; }

// Malformed combinatorial data (bad file, inconsistent rotations).
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical check that the toolkit expected to hold did not.
struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cellular embedding as a rotation system: a cyclic order of darts at each
// vertex plus a +1/-1 signature per edge. Multigraphs and self-loops are
// allowed; an edge owns darts 2e and 2e+1. Edges removed by surgery stay as
// dead slots until compacted() so ids held by callers remain stable.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(int vertex_count)
        : rotations_(static_cast<size_t>(vertex_count)) {}

    int vertex_count() const { return static_cast<int>(rotations_.size()); }

    int edge_count() const { return live_edges_; }

    int edge_slots() const { return static_cast<int>(ends_.size()); }

    bool edge_alive(EdgeId e) const {
        return e >= 0 && e < edge_slots() && ends_[e][0] >= 0;
    }

    Vertex tail(Dart d) const { return ends_[edge_of(d)][d & 1]; }
    Vertex head(Dart d) const { return tail(partner(d)); }

    bool twisted(EdgeId e) const { return twisted_[e] != 0; }
    bool twisted_dart(Dart d) const { return twisted_[edge_of(d)] != 0; }

    const std::vector<Dart>& rotation(Vertex v) const { return rotations_[v]; }

    int degree(Vertex v) const { return static_cast<int>(rotations_[v].size()); }

    // Successor/predecessor of d in the cyclic rotation at tail(d).
    Dart succ(Dart d) const {
        const auto& rot = rotations_[tail(d)];
        size_t i = pos_[d];
        return rot[(i + 1) % rot.size()];
    }
    Dart pred(Dart d) const {
        const auto& rot = rotations_[tail(d)];
        size_t i = pos_[d];
        return rot[(i + rot.size() - 1) % rot.size()];
    }

    EdgeId add_edge(Vertex u, Vertex v, bool twist = false) {
        EdgeId e = new_edge(u, v, twist);
        append_dart(u, dart_of(e, 0));
        append_dart(v, dart_of(e, 1));
        return e;
    }

    // Insert the new darts immediately after existing anchor darts in the
    // rotations at u and v. Anchors must be distinct darts of u resp. v.
    EdgeId add_edge_after(Vertex u, Dart anchor_u, Vertex v, Dart anchor_v,
                          bool twist = false) {
        if (tail(anchor_u) != u || tail(anchor_v) != v)
            throw structure_error("add_edge_after: anchor dart not at vertex");
        EdgeId e = new_edge(u, v, twist);
        insert_dart_after(u, anchor_u, dart_of(e, 0));
        insert_dart_after(v, anchor_v, dart_of(e, 1));
        return e;
    }

    void remove_edge(EdgeId e) {
        if (!edge_alive(e)) throw structure_error("remove_edge: edge " + std::to_string(e) + " not present");
        detach_dart(dart_of(e, 0));
        detach_dart(dart_of(e, 1));
        ends_[e] = {-1, -1};
        --live_edges_;
    }

    void set_twisted(EdgeId e, bool twist) { twisted_[e] = twist ? 1 : 0; }

    void set_rotation(Vertex v, std::vector<Dart> rot) {
        rotations_[v] = std::move(rot);
        reindex_vertex(v);
    }

    // All live edges between u and v, in id order.
    std::vector<EdgeId> edges_between(Vertex u, Vertex v) const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < edge_slots(); ++e) {
            if (!edge_alive(e)) continue;
            Vertex a = ends_[e][0], b = ends_[e][1];
            if ((a == u && b == v) || (a == v && b == u)) out.push_back(e);
        }
        return out;
    }

    std::optional<Dart> find_dart(Vertex u, Vertex v) const {
        for (Dart d : rotations_[u])
            if (head(d) == v) return d;
        return std::nullopt;
    }

    bool is_pure() const {
        for (EdgeId e = 0; e < edge_slots(); ++e)
            if (edge_alive(e) && twisted_[e]) return false;
        return true;
    }

    bool connected() const {
        int n = vertex_count();
        if (n == 0) return true;
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Dart d : rotations_[v]) {
                Vertex w = head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == n;
    }

    // Every live dart in exactly one rotation exactly once; throws naming the
    // offending dart.
    void check_valid() const {
        std::vector<int> count(static_cast<size_t>(edge_slots()) * 2, 0);
        for (Vertex v = 0; v < vertex_count(); ++v) {
            for (Dart d : rotations_[v]) {
                if (edge_of(d) >= edge_slots() || !edge_alive(edge_of(d)))
                    throw structure_error("dart " + dart_name(d) + " refers to a missing edge");
                if (tail(d) != v)
                    throw structure_error("dart " + dart_name(d) + " listed at wrong vertex " + std::to_string(v));
                if (++count[d] > 1)
                    throw structure_error("dart " + dart_name(d) + " appears twice");
            }
        }
        for (EdgeId e = 0; e < edge_slots(); ++e) {
            if (!edge_alive(e)) continue;
            for (int end = 0; end < 2; ++end)
                if (count[dart_of(e, end)] != 1)
                    throw structure_error("dart " + dart_name(dart_of(e, end)) + " missing from rotations");
        }
    }

    // Renumber live edges densely; dead slots dropped. Rotation order kept.
    RotationSystem compacted() const {
        RotationSystem out(vertex_count());
        std::vector<EdgeId> remap(edge_slots(), -1);
        for (EdgeId e = 0; e < edge_slots(); ++e) {
            if (!edge_alive(e)) continue;
            remap[e] = out.new_edge(ends_[e][0], ends_[e][1], twisted_[e] != 0);
        }
        for (Vertex v = 0; v < vertex_count(); ++v) {
            std::vector<Dart> rot;
            rot.reserve(rotations_[v].size());
            for (Dart d : rotations_[v])
                rot.push_back(dart_of(remap[edge_of(d)], d & 1));
            out.set_rotation(v, std::move(rot));
        }
        return out;
    }

    std::string dart_name(Dart d) const {
        if (edge_of(d) < edge_slots() && ends_[edge_of(d)][0] >= 0)
            return std::to_string(tail(d)) + "->" + std::to_string(head(d)) +
                   " (edge " + std::to_string(edge_of(d)) + ")";
        return "#" + std::to_string(d);
    }

    std::array<Vertex, 2> edge_ends(EdgeId e) const { return ends_[e]; }

    bool operator==(const RotationSystem&) const = default;

private:
    EdgeId new_edge(Vertex u, Vertex v, bool twist) {
        ends_.push_back({u, v});
        twisted_.push_back(twist ? 1 : 0);
        pos_.resize(ends_.size() * 2, -1);
        ++live_edges_;
        return static_cast<EdgeId>(ends_.size()) - 1;
    }

    void append_dart(Vertex v, Dart d) {
        pos_[d] = static_cast<int>(rotations_[v].size());
        rotations_[v].push_back(d);
    }

    void insert_dart_after(Vertex v, Dart anchor, Dart d) {
        auto& rot = rotations_[v];
        size_t i = pos_[anchor];
        if (i >= rot.size() || rot[i] != anchor)
            throw structure_error("insert: anchor dart " + dart_name(anchor) + " not found");
        rot.insert(rot.begin() + static_cast<long>(i) + 1, d);
        reindex_vertex(v);
    }

    void detach_dart(Dart d) {
        Vertex v = tail(d);
        auto& rot = rotations_[v];
        size_t i = pos_[d];
        if (i >= rot.size() || rot[i] != d)
            throw structure_error("detach: dart " + dart_name(d) + " not found");
        rot.erase(rot.begin() + static_cast<long>(i));
        pos_[d] = -1;
        reindex_vertex(v);
    }

    void reindex_vertex(Vertex v) {
        const auto& rot = rotations_[v];
        for (size_t i = 0; i < rot.size(); ++i) pos_[rot[i]] = static_cast<int>(i);
    }

    std::vector<std::vector<Dart>> rotations_;
    std::vector<std::array<Vertex, 2>> ends_;
    std::vector<std::int8_t> twisted_;
    std::vector<int> pos_;
    int live_edges_ = 0;
};

// Reverse the rotation at v and negate signatures of its non-loop edges.
inline RotationSystem flip_vertex(const RotationSystem& rs, Vertex v) {
    if (v < 0 || v >= rs.vertex_count())
        throw std::invalid_argument("flip_vertex: no vertex " + std::to_string(v));
    RotationSystem out = rs;
    std::vector<Dart> rot(rs.rotation(v).rbegin(), rs.rotation(v).rend());
    out.set_rotation(v, std::move(rot));
    for (Dart d : rs.rotation(v)) {
        EdgeId e = edge_of(d);
        if (rs.tail(d) == rs.head(d)) continue; // self-loop keeps its signature
        out.set_twisted(e, !rs.twisted(e));
    }
    return out;
}

// Build a pure rotation system over vertices 0..n-1 from per-vertex neighbor
// lists. Parallel edges are matched by occurrence order (the k-th mention of w
// at v pairs with the k-th mention of v at w); a loop is two mentions of v in
// its own list.
inline RotationSystem from_neighbor_lists(const std::vector<std::vector<Vertex>>& nbrs) {
    int n = static_cast<int>(nbrs.size());
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : nbrs[v]) {
            if (w < 0 || w >= n)
                throw structure_error("neighbor " + std::to_string(w) + " out of range at vertex " +
                                      std::to_string(v));
            ++mult[v][w];
        }
    RotationSystem rs(n);
    // edge ids per (u <= v) pair, one per slot; ends stored as (u, v)
    std::vector<std::vector<std::vector<EdgeId>>> ids(n, std::vector<std::vector<EdgeId>>(n));
    for (Vertex u = 0; u < n; ++u) {
        if (mult[u][u] % 2 != 0)
            throw structure_error("vertex " + std::to_string(u) + " lists itself an odd number of times");
        for (int k = 0; k < mult[u][u] / 2; ++k) ids[u][u].push_back(rs.add_edge(u, u));
        for (Vertex v = u + 1; v < n; ++v) {
            if (mult[u][v] != mult[v][u])
                throw structure_error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                      "} mentioned " + std::to_string(mult[u][v]) + " vs " +
                                      std::to_string(mult[v][u]) + " times");
            for (int k = 0; k < mult[u][v]; ++k) ids[u][v].push_back(rs.add_edge(u, v));
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Dart> rot;
        rot.reserve(nbrs[v].size());
        std::vector<int> seen(n, 0);
        for (Vertex w : nbrs[v]) {
            int occ = seen[w]++;
            Dart d;
            if (w == v)
                d = dart_of(ids[v][v][occ / 2], occ % 2);
            else if (v < w)
                d = dart_of(ids[v][w][occ], 0);
            else
                d = dart_of(ids[w][v][occ], 1);
            rot.push_back(d);
        }
        rs.set_rotation(v, std::move(rot));
    }
    rs.check_valid();
    return rs;
}

} // namespace oct
