#pragma once

#include <numeric>

#include "oct/rotation_system.hpp"

namespace oct {

// One traversal step of a face boundary walk: the dart being crossed and the
// behavior in effect while crossing it (alternate = the local orientation at
// the dart's head is read reversed).
struct FaceStep {
    Dart dart;
    bool alternate;
    bool operator==(const FaceStep&) const = default;
    auto key() const { return (static_cast<long>(dart) << 1) | (alternate ? 1 : 0); }
};

struct Face {
    std::vector<FaceStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    bool triangular() const { return steps.size() == 3; }

    std::vector<Vertex> vertex_walk(const RotationSystem& rs) const {
        std::vector<Vertex> out;
        out.reserve(steps.size());
        for (const FaceStep& s : steps) out.push_back(rs.tail(s.dart));
        return out;
    }

    bool operator==(const Face&) const = default;
};

struct FaceSet {
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<Face> faces;

    int face_count() const { return static_cast<int>(faces.size()); }

    long boundary_total() const {
        long t = 0;
        for (const Face& f : faces) t += f.length();
        return t;
    }

    int euler_characteristic() const { return vertex_count - edge_count + face_count(); }

    bool all_triangular() const {
        return std::all_of(faces.begin(), faces.end(), [](const Face& f) { return f.triangular(); });
    }

    std::vector<int> length_multiset() const {
        std::vector<int> ls;
        ls.reserve(faces.size());
        for (const Face& f : faces) ls.push_back(f.length());
        std::sort(ls.begin(), ls.end());
        return ls;
    }
};

namespace detail {

// Rotate a cyclic step sequence to its lexicographically least form.
inline void canonicalize_walk(std::vector<FaceStep>& steps) {
    if (steps.empty()) return;
    size_t n = steps.size(), best = 0;
    for (size_t s = 1; s < n; ++s) {
        for (size_t i = 0; i < n; ++i) {
            auto a = steps[(s + i) % n].key(), b = steps[(best + i) % n].key();
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    std::rotate(steps.begin(), steps.begin() + static_cast<long>(best), steps.end());
}

} // namespace detail

// Trace all face boundary walks. Walks start in normal behavior; crossing a
// twisted edge toggles it. Arriving at v through dart d, the walk continues
// with the successor (normal) or predecessor (alternate) of partner(d) in v's
// rotation. Every walk is traced twice, once per side; one representative of
// each mirror pair is kept, so the boundary total equals 2|E|. Faces are
// canonicalized to their least rotation and sorted, making the output depend
// only on the input system.
inline FaceSet trace_faces(const RotationSystem& rs) {
    rs.check_valid();
    if (!rs.connected())
        throw std::invalid_argument("trace_faces: underlying graph is not connected");

    FaceSet out;
    out.vertex_count = rs.vertex_count();
    out.edge_count = rs.edge_count();

    auto state_id = [](Dart d, int s) { return 2 * d + s; };
    std::vector<char> visited(static_cast<size_t>(rs.edge_slots()) * 4, 0);

    auto step = [&rs](Dart d, int s) -> std::pair<Dart, int> {
        int s2 = s ^ (rs.twisted_dart(d) ? 1 : 0);
        Dart p = partner(d);
        return {s2 == 0 ? rs.succ(p) : rs.pred(p), s2};
    };

    for (EdgeId e = 0; e < rs.edge_slots(); ++e) {
        if (!rs.edge_alive(e)) continue;
        for (Dart d0 : {dart_of(e, 0), dart_of(e, 1)}) {
            for (int s0 : {0, 1}) {
                if (visited[state_id(d0, s0)]) continue;
                std::vector<FaceStep> steps;
                Dart d = d0;
                int s = s0;
                do {
                    visited[state_id(d, s)] = 1;
                    // the behavior *while crossing* d is the post-toggle value
                    int cross = s ^ (rs.twisted_dart(d) ? 1 : 0);
                    steps.push_back({d, cross != 0});
                    auto [nd, ns] = step(d, s);
                    d = nd;
                    s = ns;
                } while (!(d == d0 && s == s0));
                // Mark the mirror traversal of the same face as consumed. A
                // mirror state that is already visited could only belong to
                // this orbit itself (distinct orbits never mirror into a
                // visited one, or this walk would not have started).
                for (const FaceStep& fs : steps) {
                    int t = rs.twisted_dart(fs.dart) ? 1 : 0;
                    int s_in = (fs.alternate ? 1 : 0) ^ t;
                    int mirror = state_id(partner(fs.dart), s_in ^ 1 ^ t);
                    if (visited[mirror])
                        throw structure_error("trace_faces: self-mirrored boundary walk at dart " +
                                              rs.dart_name(fs.dart));
                    visited[mirror] = 1;
                }
                detail::canonicalize_walk(steps);
                out.faces.push_back({std::move(steps)});
            }
        }
    }

    std::sort(out.faces.begin(), out.faces.end(), [](const Face& a, const Face& b) {
        return std::lexicographical_compare(
            a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
            [](const FaceStep& x, const FaceStep& y) { return x.key() < y.key(); });
    });

    if (out.boundary_total() != 2L * out.edge_count)
        throw structure_error("trace_faces: boundary double-count mismatch");
    return out;
}

// Genus from Euler's polyhedral equation. A non-even characteristic deficit
// means the counts did not come from an orientable cellular embedding.
inline int genus_of(const FaceSet& fs) {
    int chi = fs.euler_characteristic();
    if ((2 - chi) % 2 != 0)
        throw verify_error("genus_of: odd Euler deficit 2-chi = " + std::to_string(2 - chi) +
                           "; embedding is nonorientable or miscounted");
    int g = (2 - chi) / 2;
    if (g < 0) throw verify_error("genus_of: negative genus from counts");
    return g;
}

inline int genus_of(int v, int e, int f) {
    FaceSet fs;
    fs.vertex_count = v;
    fs.edge_count = e;
    fs.faces.resize(static_cast<size_t>(f));
    int chi = v - e + f;
    if ((2 - chi) % 2 != 0)
        throw verify_error("genus_of: odd Euler deficit");
    return (2 - chi) / 2;
}

// Orientable iff twist parity vanishes on every cycle: propagate a local
// orientation over a spanning tree and check the non-tree edges.
inline bool is_orientable(const RotationSystem& rs) {
    int n = rs.vertex_count();
    if (n == 0) return true;
    std::vector<int> orient(n, 0);
    std::vector<Vertex> stack{0};
    orient[0] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Dart d : rs.rotation(v)) {
            Vertex w = rs.head(d);
            int sign = rs.twisted_dart(d) ? -1 : 1;
            if (orient[w] == 0) {
                orient[w] = orient[v] * sign;
                stack.push_back(w);
            } else if (orient[w] != orient[v] * sign) {
                return false;
            }
        }
    }
    return true;
}

// Mirror image: reverse every rotation. Face walks reverse; genus and face
// sizes are unchanged.
inline RotationSystem mirrored(const RotationSystem& rs) {
    RotationSystem out = rs;
    for (Vertex v = 0; v < rs.vertex_count(); ++v) {
        std::vector<Dart> rot(rs.rotation(v).rbegin(), rs.rotation(v).rend());
        out.set_rotation(v, std::move(rot));
    }
    return out;
}

} // namespace oct
