#pragma once

// Built-in resolution-graph families.  Every generated matrix passes
// validate(): symmetric, diagonal <= -2, off-diagonal adjacency 1, connected
// tree, negative definite.

#include <cstddef>
#include <string>
#include <vector>

#include "lipman/divisor_model.hpp"
#include "lipman/errors.hpp"
#include "lipman/int_matrix.hpp"

namespace lipman {

// Tridiagonal with diagonal -weights[i] and 1 on the off-diagonals.
inline IntersectionMatrix chain_matrix(const std::vector<long>& weights) {
    const std::size_t n = weights.size();
    if (n == 0) throw InvalidParamsError("chain needs at least one weight");
    for (long w : weights)
        if (w < 2)
            throw InvalidParamsError("chain weights must be >= 2, got " +
                                     std::to_string(w));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = -weights[i];
        if (i + 1 < n) {
            m(i, i + 1) = 1;
            m(i + 1, i) = 1;
        }
    }
    return validate(m);
}

// A_n: chain of n (-2)-curves.
inline IntersectionMatrix a_family(std::size_t n) {
    if (n < 1) throw InvalidParamsError("a family needs n >= 1");
    return chain_matrix(std::vector<long>(n, 2));
}

// D_n: chain of n-1 (-2)-curves plus node n attached to node n-2.
inline IntersectionMatrix d_family(std::size_t n) {
    if (n < 4) throw InvalidParamsError("d family needs n >= 4");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = -2;
    for (std::size_t i = 0; i + 1 < n - 1; ++i) {
        m(i, i + 1) = 1;
        m(i + 1, i) = 1;
    }
    m(n - 1, n - 3) = 1;
    m(n - 3, n - 1) = 1;
    return validate(m);
}

// Star: center node first, then each arm as a chain hanging off the center.
inline IntersectionMatrix star_matrix(long center_weight,
                                      const std::vector<std::vector<long>>& arms) {
    if (center_weight < 2)
        throw InvalidParamsError("star center weight must be >= 2");
    if (arms.empty()) throw InvalidParamsError("star needs at least one arm");
    std::size_t n = 1;
    for (const auto& arm : arms) {
        if (arm.empty()) throw InvalidParamsError("star arm must be nonempty");
        for (long w : arm)
            if (w < 2)
                throw InvalidParamsError("star arm weights must be >= 2, got " +
                                         std::to_string(w));
        n += arm.size();
    }
    IntMatrix m(n, n);
    m(0, 0) = -center_weight;
    std::size_t next = 1;
    for (const auto& arm : arms) {
        std::size_t prev = 0;  // attach to the center
        for (long w : arm) {
            m(next, next) = -w;
            m(prev, next) = 1;
            m(next, prev) = 1;
            prev = next++;
        }
    }
    return validate(m);
}

// E_6, E_7, E_8: star-shaped trees of (-2)-curves with arm lengths
// (2,2,1), (3,2,1), (4,2,1).
inline IntersectionMatrix e_family(std::size_t n) {
    switch (n) {
        case 6: return star_matrix(2, {{2, 2}, {2, 2}, {2}});
        case 7: return star_matrix(2, {{2, 2, 2}, {2, 2}, {2}});
        case 8: return star_matrix(2, {{2, 2, 2, 2}, {2, 2}, {2}});
        default: throw InvalidParamsError("e family is defined for n in {6,7,8}");
    }
}

}  // namespace lipman
