#pragma once

// Validated intersection matrices, divisors and value vectors, the
// correspondence M(E) m = -d, cone rays F_i with multipliers g_i, and
// Laufer's fundamental-cycle algorithm.

#include <cstddef>
#include <variant>
#include <vector>

#include "lipman/errors.hpp"
#include "lipman/exact_linalg.hpp"
#include "lipman/hilbert_engine.hpp"
#include "lipman/int_matrix.hpp"

namespace lipman {

// D = m_1 E_1 + ... + m_n E_n with m_i >= 0.
struct Divisor {
    IntVector coeffs;
    bool operator==(const Divisor& o) const { return coeffs == o.coeffs; }
};

// d_i = -D.E_i, all >= 0.
struct ValueVector {
    IntVector values;
    bool operator==(const ValueVector& o) const { return values == o.values; }
};

// Returned when D.E_i > 0 somewhere, i.e. D is not in the Lipman semigroup.
struct OutsideSemigroup {
    std::vector<std::size_t> positive_indices;  // 0-based i with D.E_i > 0
};

// Symmetric negative-definite intersection matrix with connectivity data.
// Construct through validate(); the invariants hold from then on.
class IntersectionMatrix {
public:
    std::size_t n() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }
    const Int& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    bool connected() const { return connected_; }

private:
    IntersectionMatrix(IntMatrix m, bool connected)
        : m_(std::move(m)), connected_(connected) {}
    friend IntersectionMatrix validate(const IntMatrix&, bool);

    IntMatrix m_;
    bool connected_;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> graph_components(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w = 0; w < n; ++w)
                if (w != v && !seen[w] && m(v, w) > 0) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

}  // namespace detail

// Checks, in order: symmetry, diagonal <= -1, off-diagonal >= 0, negative
// definiteness, connectivity.  The first violation is reported via its
// structured error.  allow_disconnected relaxes only the last check (the
// mathematics still runs; Artin positivity of generators is lost).
inline IntersectionMatrix validate(const IntMatrix& raw,
                                   bool allow_disconnected = false) {
    if (!raw.square())
        throw DimensionMismatchError("intersection matrix must be square");
    if (raw.rows() == 0)
        throw DimensionMismatchError("intersection matrix must have n >= 1");
    const std::size_t n = raw.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (raw(i, j) != raw(j, i)) throw NonSymmetricError(i, j);
    for (std::size_t i = 0; i < n; ++i)
        if (raw(i, i) >= 0) throw NonNegativeDiagonalError(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && raw(i, j) < 0) throw NegativeOffDiagonalError(i, j);
    if (const std::size_t k = first_bad_minor(raw); k != 0)
        throw NotNegativeDefiniteError(k);
    auto components = detail::graph_components(raw);
    const bool connected = components.size() == 1;
    if (!connected && !allow_disconnected)
        throw DisconnectedError(std::move(components));
    return IntersectionMatrix(raw, connected);
}

// d = -M m; OutsideSemigroup when some d_i < 0 (i.e. D.E_i > 0).
inline std::variant<ValueVector, OutsideSemigroup> value_vector(
    const IntersectionMatrix& M, const Divisor& D) {
    if (D.coeffs.size() != M.n())
        throw DimensionMismatchError("divisor length differs from matrix size");
    IntVector d = M.matrix().apply(D.coeffs);
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = -d[i];
        if (d[i] < 0) positive.push_back(i);
    }
    if (!positive.empty()) return OutsideSemigroup{std::move(positive)};
    return ValueVector{std::move(d)};
}

// (m, -M m) as a 2n-vector, defined exactly on the Lipman semigroup.
inline std::variant<SolutionVector, OutsideSemigroup> lift(
    const IntersectionMatrix& M, const Divisor& D) {
    auto vv = value_vector(M, D);
    if (auto* out = std::get_if<OutsideSemigroup>(&vv)) return *out;
    IntVector v = D.coeffs;
    const IntVector& d = std::get<ValueVector>(vv).values;
    v.insert(v.end(), d.begin(), d.end());
    return SolutionVector{std::move(v)};
}

// Rays F_i (columns of -M^{-1}), minimal integer multipliers g_i, and the
// integral rays g_i F_i.
struct RaySystem {
    RatMatrix rays;                     // column i = F_i
    std::vector<Int> multipliers;       // g_i
    std::vector<Divisor> integer_rays;  // g_i F_i
};

inline RaySystem ray_system(const IntersectionMatrix& M) {
    RaySystem rs;
    rs.rays = neg_inverse(M.matrix());
    const std::size_t n = M.n();
    rs.multipliers.reserve(n);
    rs.integer_rays.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Rational> col = rs.rays.column(i);
        Int g = lcm_denominators(col);
        IntVector ray(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = col[j] * Rational(g);
            // exact by choice of g
            ray[j] = scaled.get_num();
        }
        rs.multipliers.push_back(std::move(g));
        rs.integer_rays.push_back(Divisor{std::move(ray)});
    }
    return rs;
}

// Laufer's algorithm for the smallest nonzero element of the Lipman
// semigroup: start at Z = (1,...,1); while some Z.E_i > 0, bump coordinate
// i (smallest such i, for determinism); the limit is the fundamental cycle.
// Termination is guaranteed by negative definiteness; the result is
// independent of the tie-break (cross-checked against brute force in tests,
// not assumed).
inline Divisor fundamental_cycle(const IntersectionMatrix& M) {
    const std::size_t n = M.n();
    IntVector z(n, 1);
    IntVector mz = M.matrix().apply(z);  // mz[i] = Z.E_i
    for (;;) {
        std::size_t bump = n;
        for (std::size_t i = 0; i < n; ++i)
            if (mz[i] > 0) { bump = i; break; }
        if (bump == n) break;
        z[bump] += 1;
        for (std::size_t i = 0; i < n; ++i) mz[i] += M(i, bump);
    }
    return Divisor{std::move(z)};
}

}  // namespace lipman
