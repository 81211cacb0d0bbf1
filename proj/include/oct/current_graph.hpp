#pragma once

#include "oct/circuit_log.hpp"
#include "oct/face_trace.hpp"

namespace oct {

// Embedded multigraph with Z_n currents on its darts. current[d] is the label
// of the arc leaving tail(d); the two darts of edge e satisfy
// current[2e+1] = -sign(e) * current[2e] (mod n).
struct CurrentGraph {
    RotationSystem system;
    int modulus = 0;
    std::vector<int> current; // indexed by dart

    int current_of(Dart d) const { return current[d]; }

    void check_valid() const {
        system.check_valid();
        if (modulus <= 0 || modulus % 6 != 0)
            throw structure_error("current graph modulus must be a positive multiple of 6");
        if (current.size() != static_cast<size_t>(system.edge_slots()) * 2)
            throw structure_error("current table size mismatch");
        for (EdgeId e = 0; e < system.edge_slots(); ++e) {
            if (!system.edge_alive(e)) continue;
            int a = mod(current[dart_of(e, 0)]);
            int b = mod(current[dart_of(e, 1)]);
            int lambda = system.twisted(e) ? -1 : 1;
            if (a == 0 || b == 0)
                throw structure_error("edge " + std::to_string(e) + " carries current 0");
            if (mod(b + lambda * a) != 0)
                throw structure_error("edge " + std::to_string(e) +
                                      " violates the dart current relation");
        }
    }

    int mod(int x) const { return ((x % modulus) + modulus) % modulus; }

    // Sum of currents on arcs entering v.
    int excess(Vertex v) const {
        long s = 0;
        for (Dart d : system.rotation(v)) s += current[partner(d)];
        return mod(static_cast<int>(s % modulus));
    }
};

struct CascadeReport {
    bool c1 = false, c2 = false, c3 = false, c4 = false, c5 = false, c6 = false;
    std::vector<int> excess;                 // per vertex
    int circuit_count = 0;
    std::vector<char> bidirectional;         // per edge slot; valid when c2 holds
    Log log;                                 // canonical circuit log when extractable
    bool log_valid = false;
    std::vector<std::string> failures;

    bool pass() const { return c1 && c2 && c3 && c4 && c5 && c6; }
};

namespace detail {

// The two mirror boundary walks of a one-face current graph, oriented so the
// walk is in normal behavior where it traverses the degree-1 vertex (or, with
// no degree-1 vertex, starting from the lowest dart). Returns the step list.
inline std::vector<FaceStep> oriented_circuit(const CurrentGraph& cg) {
    const RotationSystem& rs = cg.system;
    FaceSet fs = trace_faces(rs);
    if (fs.face_count() != 1)
        throw std::invalid_argument("current graph has " + std::to_string(fs.face_count()) +
                                    " circuits, need exactly one");
    Vertex deg1 = -1;
    for (Vertex v = 0; v < rs.vertex_count(); ++v)
        if (rs.degree(v) == 1) { deg1 = v; break; }
    if (deg1 < 0)
        throw std::invalid_argument("current graph has no degree-1 vertex");

    std::vector<FaceStep> walk = fs.faces[0].steps;
    // locate the arrival step at deg1
    auto arrival = [&](const std::vector<FaceStep>& w) -> int {
        for (size_t i = 0; i < w.size(); ++i)
            if (rs.head(w[i].dart) == deg1) return static_cast<int>(i);
        return -1;
    };
    int at = arrival(walk);
    if (at < 0) throw structure_error("circuit never reaches the degree-1 vertex");
    if (walk[at].alternate) {
        // take the mirror orientation instead: reverse, flip darts, recompute behaviors
        std::vector<FaceStep> rev;
        rev.reserve(walk.size());
        for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
            int t = rs.twisted_dart(it->dart) ? 1 : 0;
            int s_in = (it->alternate ? 1 : 0) ^ t;
            rev.push_back({partner(it->dart), (s_in ^ 1) != 0});
        }
        walk = std::move(rev);
        at = arrival(walk);
        if (at < 0 || walk[at].alternate)
            throw structure_error("cannot orient circuit normally at the degree-1 vertex");
    }
    // rotate so the arrival step comes first
    std::rotate(walk.begin(), walk.begin() + at, walk.end());
    return walk;
}

} // namespace detail

// Log of the single circuit: entries are the currents on the traversed arcs,
// negated while the walk is in alternate behavior, oriented by the degree-1
// vertex rule, starting with the arrival at that vertex.
inline Log extract_log(const CurrentGraph& cg) {
    cg.check_valid();
    std::vector<FaceStep> walk = detail::oriented_circuit(cg);
    Log log{cg.modulus, {}};
    log.values.reserve(walk.size());
    for (const FaceStep& s : walk) {
        int val = cg.current_of(s.dart);
        if (s.alternate) val = -val;
        log.values.push_back(cg.mod(val));
    }
    return log;
}

// The standard checks for an orientable cascade.
inline CascadeReport verify_cascade(const CurrentGraph& cg) {
    cg.check_valid();
    const RotationSystem& rs = cg.system;
    CascadeReport rep;

    // C1: degrees 1 or 3
    rep.c1 = true;
    for (Vertex v = 0; v < rs.vertex_count(); ++v) {
        int d = rs.degree(v);
        if (d != 1 && d != 3) {
            rep.c1 = false;
            rep.failures.push_back("C1: vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        }
    }

    // C2: one face
    FaceSet fs = trace_faces(rs);
    rep.circuit_count = fs.face_count();
    rep.c2 = rep.circuit_count == 1;
    if (!rep.c2)
        rep.failures.push_back("C2: " + std::to_string(rep.circuit_count) + " circuits instead of 1");

    // C3 / C4: excesses
    rep.excess.resize(rs.vertex_count());
    rep.c3 = rep.c4 = true;
    for (Vertex v = 0; v < rs.vertex_count(); ++v) {
        rep.excess[v] = cg.excess(v);
        if (rs.degree(v) == 3 && rep.excess[v] != 0) {
            rep.c3 = false;
            rep.failures.push_back("C3: excess " + std::to_string(rep.excess[v]) + " at vertex " +
                                   std::to_string(v));
        }
        if (rs.degree(v) == 1) {
            int e = rep.excess[v];
            bool order3 = e != 0 && cg.mod(3 * e) == 0;
            if (!order3) {
                rep.c4 = false;
                rep.failures.push_back("C4: degree-1 vertex " + std::to_string(v) + " has excess " +
                                       std::to_string(e) + ", not of order 3");
            }
        }
    }

    // C5 / C6 need the single oriented circuit
    if (rep.c2) {
        int deg1 = -1;
        for (Vertex v = 0; v < rs.vertex_count(); ++v)
            if (rs.degree(v) == 1) { deg1 = v; break; }
        if (deg1 >= 0) {
            rep.log = extract_log(cg);
            rep.log_valid = true;
            rep.c5 = rep.log.covers_once();
            if (!rep.c5) rep.failures.push_back("C5: log does not cover Z_n \\ {0, n/2} exactly once");

            std::vector<FaceStep> walk = detail::oriented_circuit(cg);
            std::vector<std::vector<Dart>> crossings(rs.edge_slots());
            for (const FaceStep& s : walk) crossings[edge_of(s.dart)].push_back(s.dart);
            rep.bidirectional.assign(rs.edge_slots(), 0);
            rep.c6 = true;
            for (EdgeId e = 0; e < rs.edge_slots(); ++e) {
                if (!rs.edge_alive(e)) continue;
                if (crossings[e].size() != 2) {
                    rep.c6 = false;
                    rep.failures.push_back("C6: edge " + std::to_string(e) + " crossed " +
                                           std::to_string(crossings[e].size()) + " times");
                    continue;
                }
                bool bidir = crossings[e][0] != crossings[e][1];
                rep.bidirectional[e] = bidir ? 1 : 0;
                bool even = cg.mod(cg.current_of(dart_of(e, 0))) % 2 == 0;
                if (even != bidir) {
                    rep.c6 = false;
                    rep.failures.push_back("C6: edge " + std::to_string(e) + " is " +
                                           (bidir ? "bidirectional" : "unidirectional") +
                                           " but its current is " + (even ? "even" : "odd"));
                }
            }
        } else {
            rep.failures.push_back("C5/C6: no degree-1 vertex to orient the circuit");
        }
    } else {
        rep.failures.push_back("C5/C6: skipped, needs a single circuit");
    }
    return rep;
}

} // namespace oct
