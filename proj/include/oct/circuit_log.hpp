#pragma once

#include <set>

#include "oct/rotation_system.hpp"

namespace oct {

// Cyclic sequence over Z_n read off a circuit of a current graph. Row 0 of a
// derived rotation system.
struct Log {
    int modulus = 0;
    std::vector<int> values;

    int size() const { return static_cast<int>(values.size()); }

    void check_nonzero() const {
        for (int x : values)
            if (x % modulus == 0)
                throw std::invalid_argument("log contains 0 (mod " + std::to_string(modulus) + ")");
    }

    // Each element of Z_n \ {0, n/2} exactly once.
    bool covers_once() const {
        if (modulus % 2 != 0 || size() != modulus - 2) return false;
        std::set<int> seen;
        for (int x : values) {
            int r = ((x % modulus) + modulus) % modulus;
            if (r == 0 || r == modulus / 2) return false;
            if (!seen.insert(r).second) return false;
        }
        return true;
    }

    void require_covers_once() const {
        if (!covers_once())
            throw std::invalid_argument("log over Z_" + std::to_string(modulus) +
                                        " must contain each nonzero non-involution element exactly once");
    }

    Log reversed_negated() const {
        Log out{modulus, {}};
        out.values.reserve(values.size());
        for (auto it = values.rbegin(); it != values.rend(); ++it)
            out.values.push_back(((-*it) % modulus + modulus) % modulus);
        return out;
    }

    bool operator==(const Log&) const = default;
};

// True if the cyclic sequence contains the given fragment consecutively.
inline bool contains_fragment(const Log& log, const std::vector<int>& frag) {
    int m = log.size();
    if (m == 0 || static_cast<int>(frag.size()) > m) return false;
    for (int s = 0; s < m; ++s) {
        bool ok = true;
        for (size_t i = 0; i < frag.size(); ++i)
            if (log.values[(s + i) % m] != frag[i]) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

inline bool cyclically_equal(const Log& a, const Log& b) {
    return a.modulus == b.modulus && a.size() == b.size() &&
           (a.size() == 0 || contains_fragment(a, b.values));
}

} // namespace oct
