#pragma once

// The pipeline: build A = [M(E) | I_n], compute the Hilbert basis of
// S = ker(A) cap N^{2n}, split it into Lipman-semigroup generators (m-parts)
// and value vectors (d-parts), and assemble the toric parametrization.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "lipman/divisor_model.hpp"
#include "lipman/errors.hpp"
#include "lipman/hilbert_engine.hpp"
#include "lipman/int_matrix.hpp"

namespace lipman {

// Exponent vectors of the parametrization monomials u_1^{d_1}...u_n^{d_n}:
// the ray exponents g_i e_i first (i ascending), then the remaining
// value-part vectors in canonical order.
struct ToricParametrization {
    std::size_t n_vars = 0;
    std::vector<IntVector> exponent_vectors;
};

struct LipmanReport {
    IntersectionMatrix matrix;
    HilbertBasis hilbert_S;              // 2n-vectors, canonical order
    std::vector<Divisor> generators;     // m-parts (H of the Lipman semigroup)
    std::vector<ValueVector> value_parts;  // d-parts (H_{S_2}), same order
    RaySystem rays;
    Divisor fundamental_cycle;
    ToricParametrization parametrization;
    EngineStats stats;
};

// A = [M | I_n], the n x 2n doubled system.  A nonnegative kernel vector
// (m, d) says exactly that M m = -d with both halves nonnegative, i.e. that
// the divisor m lies in the Lipman semigroup with value vector d.
inline KernelProblem doubled_matrix(const IntersectionMatrix& M) {
    const std::size_t n = M.n();
    IntMatrix A(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = M(i, j);
        A(i, n + i) = 1;
    }
    return KernelProblem{std::move(A)};
}

// Element-wise split of the doubled basis into (m, d) halves, verifying
// M m = -d for every pair.
inline std::pair<std::vector<Divisor>, std::vector<ValueVector>> split(
    const IntersectionMatrix& M, const HilbertBasis& b) {
    const std::size_t n = M.n();
    std::vector<Divisor> ms;
    std::vector<ValueVector> ds;
    ms.reserve(b.elements.size());
    ds.reserve(b.elements.size());
    for (std::size_t idx = 0; idx < b.elements.size(); ++idx) {
        const IntVector& v = b.elements[idx].v;
        if (v.size() != 2 * n)
            throw DimensionMismatchError("basis vector is not a 2n-vector");
        IntVector m(v.begin(), v.begin() + n);
        IntVector d(v.begin() + n, v.end());
        IntVector mm = M.matrix().apply(m);
        for (std::size_t i = 0; i < n; ++i)
            if (mm[i] != -d[i]) throw InconsistentPairError(idx);
        ms.push_back(Divisor{std::move(m)});
        ds.push_back(ValueVector{std::move(d)});
    }
    return {std::move(ms), std::move(ds)};
}

// Order the parametrization: g_i e_i first, remaining value parts by
// canonical order.  Each vector d is the monomial u_1^{d_1}...u_n^{d_n}.
inline ToricParametrization parametrization(const IntersectionMatrix& M,
                                            const std::vector<ValueVector>& value_parts,
                                            const RaySystem& rays) {
    const std::size_t n = M.n();
    ToricParametrization par;
    par.n_vars = n;
    std::vector<bool> used(value_parts.size(), false);
    for (std::size_t i = 0; i < n; ++i) {
        IntVector target(n, 0);
        target[i] = rays.multipliers[i];
        std::size_t found = value_parts.size();
        for (std::size_t j = 0; j < value_parts.size(); ++j)
            if (!used[j] && value_parts[j].values == target) { found = j; break; }
        if (found == value_parts.size()) throw MissingRayError(i);
        used[found] = true;
        par.exponent_vectors.push_back(target);
    }
    std::vector<IntVector> rest;
    for (std::size_t j = 0; j < value_parts.size(); ++j)
        if (!used[j]) rest.push_back(value_parts[j].values);
    std::sort(rest.begin(), rest.end(), canonical_less);
    for (IntVector& v : rest) par.exponent_vectors.push_back(std::move(v));
    return par;
}

struct AnalyzeOptions {
    unsigned long long node_budget = 10'000'000;
    unsigned threads = 1;
    // Feed the engine the certified box and seeds derived below.  Output is
    // identical either way (tested); this only prunes work.
    bool use_certificates = true;
    // The box holds exactly prod(g_i)/|det M| solutions.  When that count
    // stays below this limit the engine enumerates the box directly
    // (box_complete), which beats completion by orders of magnitude on
    // structured matrices; above it, completion with seeds and box pruning
    // is the cheaper search.  Either route returns the same basis.
    unsigned long long direct_enumeration_limit = 2'000'000;
};

namespace detail {

// Certificates for the doubled system, both consequences of the
// fundamental-parallelepiped description of the cone over the semigroup.
// Write a semigroup element as m = sum_i lambda_i (g_i F_i), lambda_i >= 0;
// its value vector is then d = sum_i lambda_i g_i e_i, so d_i = lambda_i g_i.
//
//  * Seeds: every (g_i F_i, g_i e_i) is a minimal solution.  A solution
//    below it has d = c e_i with 0 <= c <= g_i and integral m = c F_i, and
//    minimality of the multiplier g_i forces c in {0, g_i}.
//  * Box: a minimal solution other than a seed has every lambda_i < 1.
//    If lambda_i >= 1, then m - g_i F_i is a nonnegative integer combination
//    of cone generators, hence (by saturation) a semigroup element, so the
//    seed (g_i F_i, g_i e_i) sits componentwise below (m, d) - contradiction
//    with minimality unless (m, d) is that seed.  Thus d_i <= g_i - 1 and
//    m_j <= sum_i (g_i - 1) F_ij, floored entrywise.
struct Certificates {
    std::vector<IntVector> seeds;
    IntVector box;  // length 2n
};

inline Certificates doubled_certificates(const IntersectionMatrix& M,
                                         const RaySystem& rays) {
    const std::size_t n = M.n();
    Certificates cert;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector s(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) s[j] = rays.integer_rays[i].coeffs[j];
        s[n + i] = rays.multipliers[i];
        cert.seeds.push_back(std::move(s));
    }
    cert.box.assign(2 * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Rational acc(0);
        for (std::size_t i = 0; i < n; ++i)
            acc += Rational(rays.multipliers[i] - 1) * rays.rays(j, i);
        // floor of a nonnegative rational
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), acc.get_num().get_mpz_t(),
                   acc.get_den().get_mpz_t());
        cert.box[j] = std::move(fl);
    }
    for (std::size_t i = 0; i < n; ++i) cert.box[n + i] = rays.multipliers[i] - 1;
    return cert;
}

}  // namespace detail

// Full pipeline with eager cross-checks of every report invariant.
inline LipmanReport analyze(const IntersectionMatrix& M,
                            const AnalyzeOptions& options = {}) {
    const std::size_t n = M.n();
    RaySystem rays = ray_system(M);

    KernelProblem problem = doubled_matrix(M);
    EngineStats stats;
    EngineOptions engine_options;
    engine_options.node_budget = options.node_budget;
    engine_options.threads = options.threads;
    engine_options.stats = &stats;
    if (options.use_certificates) {
        detail::Certificates cert = detail::doubled_certificates(M, rays);
        engine_options.seeds = std::move(cert.seeds);
        engine_options.coordinate_bound = std::move(cert.box);
        // The box argument shows every minimal solution is a seed or lies
        // inside the box, which is exactly the stronger engine contract.
        // Whether direct enumeration of the box is the faster route depends
        // on how many solutions it holds: prod(g_i)/|det M| exactly, since
        // the solutions inside it are the points of an index-|det| sublattice
        // in the d-block.
        Int in_box = 1;
        for (const Int& g : rays.multipliers) in_box *= g;
        in_box /= abs(determinant(M.matrix()));
        engine_options.box_complete =
            in_box <= Int(static_cast<unsigned long>(
                          std::min<unsigned long long>(
                              options.direct_enumeration_limit,
                              std::numeric_limits<unsigned long>::max())));
    }
    HilbertBasis basis = hilbert_basis(problem, engine_options);

    auto [generators, value_parts] = split(M, basis);
    Divisor cycle = fundamental_cycle(M);
    ToricParametrization par = parametrization(M, value_parts, rays);

    // report invariants, fail-fast
    if (M.connected()) {
        bool cycle_found = false;
        for (const Divisor& g : generators)
            if (g == cycle) { cycle_found = true; break; }
        if (!cycle_found)
            throw InvariantViolationError("fundamental cycle among generators");
        for (const Divisor& g : generators)
            for (const Int& c : g.coeffs)
                if (c < 1)
                    throw InvariantViolationError("generator positivity");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rays.rays(i, j) <= 0)
                    throw InvariantViolationError("ray positivity");
    }

    return LipmanReport{M,
                        std::move(basis),
                        std::move(generators),
                        std::move(value_parts),
                        std::move(rays),
                        std::move(cycle),
                        std::move(par),
                        stats};
}

}  // namespace lipman
