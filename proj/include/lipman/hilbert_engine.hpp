#pragma once

// Hilbert basis of {v in N^k : A v = 0} for an arbitrary integer matrix A,
// by Contejean-Devie completion, plus a brute-force oracle and a monoid
// membership test for cross-checking.
//
// The completion maintains a frontier of candidate vectors, initially the k
// unit vectors, processed breadth-first by coordinate sum.  A frontier
// vector t with residual A t = 0 is a new basis element; otherwise t is
// extended to t+e_j for every direction j with <A t, A e_j> < 0, and
// candidates dominated componentwise by a known basis element are dropped.
// BFS order makes the dominance filter sound: minimal solutions are reached
// before anything that dominates them.
//
// Callers that know the problem's geometry can speed this up without
// changing the answer through EngineOptions:
//   * coordinate_bound — a certified componentwise bound: every minimal
//     solution v satisfies v <= bound.  Since prefixes of minimal solutions
//     stay below them, the search never needs to leave the box.
//   * seeds — vectors certified to BE minimal solutions.  They enter the
//     basis before the search starts, so their dominance cones are pruned
//     from generation one.
//   * box_complete — strengthens the box to a completeness certificate:
//     every minimal solution is a seed or lies within the box.  The engine
//     then skips completion entirely: it enumerates every solution inside
//     the box depth-first (per coordinate, the feasible value range is
//     solved exactly from per-row suffix capacities) and keeps the
//     componentwise-minimal ones.  Any candidate that decomposes is
//     dominated by a strictly smaller minimal solution, which the
//     certificate places among the candidates, so an ascending sweep that
//     drops anything above an earlier survivor returns exactly the basis.
// All certificates are the caller's obligation; with none supplied the
// engine is the plain completion.  Soundness of the Lipman certificates is
// established in divisor_model/lipman_api (fundamental-parallelepiped
// argument).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "lipman/errors.hpp"
#include "lipman/int_matrix.hpp"

namespace lipman {

struct KernelProblem {
    IntMatrix A;  // r x k, r >= 1, k >= 1
    std::size_t k() const { return A.cols(); }
    std::size_t r() const { return A.rows(); }
};

struct SolutionVector {
    IntVector v;
    bool operator==(const SolutionVector& o) const { return v == o.v; }
};

// canonical order: ascending coordinate sum, ties lexicographic
inline bool canonical_less(const IntVector& a, const IntVector& b) {
    Int sa = 0, sb = 0;
    for (const Int& x : a) sa += x;
    for (const Int& x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
}

struct HilbertBasis {
    KernelProblem problem;
    std::vector<SolutionVector> elements;  // canonical order
};

struct EngineStats {
    unsigned long long node_expansions = 0;
    std::size_t max_frontier_width = 0;
    unsigned threads = 1;
};

struct EngineOptions {
    unsigned long long node_budget = 10'000'000;
    unsigned threads = 1;  // frontier generations expand in parallel when > 1
    std::optional<IntVector> coordinate_bound;  // certified box, see above
    std::vector<IntVector> seeds;               // certified minimal solutions
    bool box_complete = false;  // box+seeds cover all minimal solutions
    EngineStats* stats = nullptr;               // optional out-param
};

namespace detail {

// The completion is templated on the coordinate type so the same code runs
// on machine words when certified safe and on mpz otherwise.  With Scalar =
// int64_t all dot products go through __int128; eligibility (entry and box
// magnitudes) is checked by the dispatcher below.
template <typename Scalar>
struct Completion {
    std::size_t r, k;
    std::vector<Scalar> a;        // row-major r x k
    std::vector<Scalar> acols;    // column-major k x r (for residual updates)
    std::vector<Scalar> box;      // empty = unbounded
    unsigned long long budget;
    unsigned threads;

    // flattened storage: generation vectors plus cached residuals
    struct Gen {
        std::vector<Scalar> vec;  // count * k
        std::vector<Scalar> res;  // count * r
        std::size_t count = 0;
    };

    std::vector<std::vector<Scalar>> basis;  // each length k
    std::vector<Scalar> basis_sums;
    // basis indices with coordinate sum <= current candidate sum; an element
    // can only dominate vectors of at least its own sum, so the rest are
    // skipped (matters for seeds, whose sums are large)
    std::vector<std::size_t> active;
    unsigned long long expansions = 0;
    std::size_t max_width = 0;

    static bool leq(const Scalar* a, const Scalar* b, std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    void push_basis(std::vector<Scalar> b) {
        Scalar s = 0;
        for (const Scalar& x : b) s += x;
        basis.push_back(std::move(b));
        basis_sums.push_back(s);
    }

    void refresh_active(const Scalar& candidate_sum) {
        active.clear();
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis_sums[i] <= candidate_sum) active.push_back(i);
    }

    bool dominated(const Scalar* t) const {
        for (std::size_t i : active)
            if (leq(basis[i].data(), t, k)) return true;
        return false;
    }

    bool residual_zero(const Scalar* q) const {
        for (std::size_t i = 0; i < r; ++i)
            if (q[i] != Scalar(0)) return false;
        return true;
    }

    // <q, A e_j> < 0 ?
    bool descends(const Scalar* q, std::size_t j) const {
        if constexpr (std::is_same_v<Scalar, std::int64_t>) {
            __int128 dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                dot += static_cast<__int128>(q[i]) * acols[j * r + i];
            return dot < 0;
        } else {
            Scalar dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += q[i] * acols[j * r + i];
            return dot < 0;
        }
    }

    void run() {
        Gen gen;
        Scalar gen_sum = 1;  // every vector in `gen` has this coordinate sum
        refresh_active(gen_sum);
        // initial frontier: unit vectors inside the box
        for (std::size_t j = 0; j < k; ++j) {
            if (!box.empty() && box[j] < Scalar(1)) continue;
            std::vector<Scalar> t(k, Scalar(0));
            t[j] = Scalar(1);
            if (dominated(t.data())) continue;
            gen.vec.insert(gen.vec.end(), t.begin(), t.end());
            for (std::size_t i = 0; i < r; ++i)
                gen.res.push_back(acols[j * r + i]);
            ++gen.count;
        }

        while (gen.count) {
            max_width = std::max(max_width, gen.count);
            expansions += gen.count;
            if (expansions > budget)
                throw ResourceLimitError(expansions, budget);

            // solutions of this generation join the basis before any
            // candidate of the next generation is filtered, so the filter
            // sees a frozen basis regardless of thread count
            for (std::size_t idx = 0; idx < gen.count; ++idx) {
                const Scalar* q = gen.res.data() + idx * r;
                if (residual_zero(q)) {
                    const Scalar* t = gen.vec.data() + idx * k;
                    push_basis(std::vector<Scalar>(t, t + k));
                }
            }

            Gen next = expand(gen);
            gen_sum += 1;
            refresh_active(gen_sum);
            dedup_and_filter(next);
            gen = std::move(next);
        }
    }

    // Extend every non-solution of the generation along its descent
    // directions.  Chunked across threads; chunks are concatenated in chunk
    // order, so the merged candidate list does not depend on thread count.
    Gen expand(const Gen& gen) {
        const unsigned nthreads =
            std::min<unsigned>(std::max(1u, threads),
                               static_cast<unsigned>(gen.count));
        std::vector<Gen> parts(nthreads);
        auto work = [&](unsigned part) {
            Gen& out = parts[part];
            const std::size_t lo = gen.count * part / nthreads;
            const std::size_t hi = gen.count * (part + 1) / nthreads;
            for (std::size_t idx = lo; idx < hi; ++idx) {
                const Scalar* t = gen.vec.data() + idx * k;
                const Scalar* q = gen.res.data() + idx * r;
                if (residual_zero(q)) continue;
                for (std::size_t j = 0; j < k; ++j) {
                    if (!box.empty() && t[j] + Scalar(1) > box[j]) continue;
                    if (!descends(q, j)) continue;
                    const std::size_t base = out.vec.size();
                    out.vec.insert(out.vec.end(), t, t + k);
                    out.vec[base + j] += Scalar(1);
                    const std::size_t rbase = out.res.size();
                    out.res.insert(out.res.end(), q, q + r);
                    for (std::size_t i = 0; i < r; ++i)
                        out.res[rbase + i] += acols[j * r + i];
                    ++out.count;
                }
            }
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (unsigned p = 0; p < nthreads; ++p) pool.emplace_back(work, p);
            for (auto& th : pool) th.join();
        }
        Gen merged;
        std::size_t total = 0;
        for (const Gen& p : parts) total += p.count;
        merged.vec.reserve(total * k);
        merged.res.reserve(total * r);
        for (Gen& p : parts) {
            merged.vec.insert(merged.vec.end(), p.vec.begin(), p.vec.end());
            merged.res.insert(merged.res.end(), p.res.begin(), p.res.end());
            merged.count += p.count;
        }
        return merged;
    }

    // Sort candidates lexicographically, drop duplicates and anything
    // dominated by the basis.  Sorting by content keeps the result
    // independent of the order candidates were produced in.
    void dedup_and_filter(Gen& g) {
        std::vector<std::size_t> order(g.count);
        for (std::size_t i = 0; i < g.count; ++i) order[i] = i;
        const Scalar* vecs = g.vec.data();
        const std::size_t kk = k;
        std::sort(order.begin(), order.end(),
                  [vecs, kk](std::size_t x, std::size_t y) {
                      const Scalar* px = vecs + x * kk;
                      const Scalar* py = vecs + y * kk;
                      return std::lexicographical_compare(px, px + kk, py,
                                                          py + kk);
                  });
        Gen out;
        out.vec.reserve(g.vec.size());
        out.res.reserve(g.res.size());
        const Scalar* prev = nullptr;
        for (std::size_t oi : order) {
            const Scalar* t = g.vec.data() + oi * k;
            if (prev && std::equal(t, t + k, prev)) continue;
            prev = t;
            if (dominated(t)) continue;
            out.vec.insert(out.vec.end(), t, t + k);
            const Scalar* q = g.res.data() + oi * r;
            out.res.insert(out.res.end(), q, q + r);
            ++out.count;
        }
        g = std::move(out);
    }
};

inline IntVector to_mpz_vector(const std::vector<std::int64_t>& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Int(static_cast<long>(v[i]));
    return out;
}

// Every nonzero v <= box with A v = 0, by depth-first search.  The box caps
// each later coordinate, so per-row suffix capacities are constants of the
// depth; at depth j the feasible interval of v_j is their exact
// intersection.  `expansions` counts visited cells (one per value tried).
inline std::vector<IntVector> solutions_within_box(const KernelProblem& p,
                                                   const IntVector& box,
                                                   unsigned long long budget,
                                                   unsigned long long& expansions) {
    const std::size_t r = p.r(), k = p.k();
    // capacity of columns > j: lo = most negative, hi = most positive
    std::vector<std::vector<Int>> lo(r, std::vector<Int>(k + 1, 0));
    std::vector<std::vector<Int>> hi(r, std::vector<Int>(k + 1, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = k; j-- > 0;) {
            const Int& a = p.A(i, j);
            lo[i][j] = lo[i][j + 1] + (a < 0 ? Int(a * box[j]) : Int(0));
            hi[i][j] = hi[i][j + 1] + (a > 0 ? Int(a * box[j]) : Int(0));
        }

    auto floor_div = [](const Int& a, const Int& b) {
        Int q_;
        mpz_fdiv_q(q_.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q_;
    };
    auto ceil_div = [](const Int& a, const Int& b) {
        Int q_;
        mpz_cdiv_q(q_.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q_;
    };

    std::vector<IntVector> out;
    IntVector v(k, 0), q(r, 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t j) {
        if (j == k) {
            for (std::size_t i = 0; i < r; ++i)
                if (q[i] != 0) return;
            for (const Int& x : v)
                if (x != 0) { out.push_back(v); return; }
            return;
        }
        Int clo = 0, chi = box[j];
        for (std::size_t i = 0; i < r && clo <= chi; ++i) {
            const Int& a = p.A(i, j);
            // need lo_i <= -q_i - c*a <= hi_i for the row to stay closable
            if (a > 0) {
                chi = std::min(chi, floor_div(-q[i] - lo[i][j + 1], a));
                clo = std::max(clo, ceil_div(-q[i] - hi[i][j + 1], a));
            } else if (a < 0) {
                clo = std::max(clo, ceil_div(-q[i] - lo[i][j + 1], a));
                chi = std::min(chi, floor_div(-q[i] - hi[i][j + 1], a));
            } else if (-q[i] < lo[i][j + 1] || -q[i] > hi[i][j + 1]) {
                return;
            }
        }
        if (clo > chi) return;
        for (std::size_t i = 0; i < r; ++i) q[i] += clo * p.A(i, j);
        for (Int c = clo; c <= chi; ++c) {
            if (++expansions > budget)
                throw ResourceLimitError(expansions, budget);
            v[j] = c;
            dfs(j + 1);
            for (std::size_t i = 0; i < r; ++i) q[i] += p.A(i, j);
        }
        for (std::size_t i = 0; i < r; ++i) q[i] -= (chi + 1) * p.A(i, j);
        v[j] = 0;
    };
    dfs(0);
    return out;
}

}  // namespace detail

// Unique minimal generating set of {v in N^k : A v = 0}, canonical order.
inline HilbertBasis hilbert_basis(const KernelProblem& p,
                                  const EngineOptions& options = {}) {
    if (p.r() < 1 || p.k() < 1)
        throw DimensionMismatchError("kernel problem needs r >= 1, k >= 1");
    const std::size_t r = p.r(), k = p.k();

    if (options.coordinate_bound && options.coordinate_bound->size() != k)
        throw DimensionMismatchError("coordinate bound has wrong length");
    for (const IntVector& s : options.seeds) {
        if (s.size() != k)
            throw DimensionMismatchError("seed has wrong length");
        IntVector residual = p.A.apply(s);
        for (const Int& q : residual)
            if (q != 0) throw NotASolutionError();
    }

    // Certified-complete box: enumerate solutions inside it and sweep for
    // the componentwise-minimal ones (ascending order guarantees every
    // dominator is seen first; seeds join the sweep as ordinary candidates,
    // so a non-minimal seed is filtered rather than trusted).
    if (options.box_complete) {
        if (!options.coordinate_bound)
            throw InvalidParamsError(
                "box_complete requires a coordinate_bound");
        unsigned long long expansions = 0;
        std::vector<IntVector> cands = detail::solutions_within_box(
            p, *options.coordinate_bound, options.node_budget, expansions);
        for (const IntVector& s : options.seeds) cands.push_back(s);
        std::sort(cands.begin(), cands.end(), canonical_less);
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        const std::size_t n_cands = cands.size();
        std::vector<IntVector> atoms;
        for (IntVector& s : cands) {
            bool dominated = false;
            for (const IntVector& a : atoms) {
                bool le = true;
                for (std::size_t j = 0; j < k; ++j)
                    if (a[j] > s[j]) { le = false; break; }
                if (le) { dominated = true; break; }
            }
            if (!dominated) atoms.push_back(std::move(s));
        }
        HilbertBasis hb{p, {}};
        hb.elements.reserve(atoms.size());
        for (IntVector& a : atoms) hb.elements.push_back({std::move(a)});
        if (options.stats) {
            options.stats->node_expansions = expansions;
            options.stats->max_frontier_width = n_cands;
            options.stats->threads = 1;
        }
        return hb;
    }

    // int64 path is safe when every |entry|, every box coordinate and the
    // node budget stay far from overflow: coordinates grow by one per
    // expansion step, so they are bounded by the box sum (or the budget),
    // residuals by max|A| * that, and dot products run through __int128.
    bool fits64 = true;
    const std::int64_t kLimit = std::int64_t(1) << 30;
    Int amax = 0;
    for (std::size_t i = 0; i < r && fits64; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Int v = abs(p.A(i, j));
            if (v > amax) amax = v;
        }
    if (amax > kLimit) fits64 = false;
    if (options.coordinate_bound)
        for (const Int& b : *options.coordinate_bound)
            if (b > kLimit) fits64 = false;
    if (options.node_budget > static_cast<unsigned long long>(kLimit))
        fits64 = false;

    std::vector<IntVector> basis_mpz;
    unsigned long long expansions = 0;
    std::size_t max_width = 0;

    auto run_typed = [&](auto scalar_tag) {
        using Scalar = decltype(scalar_tag);
        detail::Completion<Scalar> c;
        c.r = r;
        c.k = k;
        c.budget = options.node_budget;
        c.threads = std::max(1u, options.threads);
        c.a.resize(r * k);
        c.acols.resize(k * r);
        auto cast = [](const Int& v) {
            if constexpr (std::is_same_v<Scalar, std::int64_t>)
                return static_cast<std::int64_t>(v.get_si());
            else
                return v;
        };
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                c.a[i * k + j] = cast(p.A(i, j));
                c.acols[j * r + i] = cast(p.A(i, j));
            }
        if (options.coordinate_bound) {
            c.box.resize(k);
            for (std::size_t j = 0; j < k; ++j)
                c.box[j] = cast((*options.coordinate_bound)[j]);
        }
        for (const IntVector& s : options.seeds) {
            std::vector<Scalar> sv(k);
            for (std::size_t j = 0; j < k; ++j) sv[j] = cast(s[j]);
            c.push_basis(std::move(sv));
        }
        c.run();
        for (const auto& b : c.basis) {
            IntVector out(k);
            for (std::size_t j = 0; j < k; ++j) {
                if constexpr (std::is_same_v<Scalar, std::int64_t>)
                    out[j] = Int(static_cast<long>(b[j]));
                else
                    out[j] = b[j];
            }
            basis_mpz.push_back(std::move(out));
        }
        expansions = c.expansions;
        max_width = c.max_width;
    };

    if (fits64)
        run_typed(std::int64_t{});
    else
        run_typed(Int{});

    std::sort(basis_mpz.begin(), basis_mpz.end(), canonical_less);

    HilbertBasis hb{p, {}};
    hb.elements.reserve(basis_mpz.size());
    for (IntVector& v : basis_mpz) hb.elements.push_back({std::move(v)});

    if (options.stats) {
        options.stats->node_expansions = expansions;
        options.stats->max_frontier_width = max_width;
        options.stats->threads = std::max(1u, options.threads);
    }
    return hb;
}

// Exhaustive oracle: enumerate every v with coordinate sum <= bound and
// A v = 0, return the componentwise-minimal nonzero ones.  Agrees with
// hilbert_basis whenever bound covers every true basis element.  Depth-first
// over coordinates; before descending into coordinate j the per-row interval
// relaxation is solved exactly for the feasible range of v_j: with c = v_j,
// rem' = rem - c units left for columns > j, row i can still be cancelled
// only if -q_i - c*A_ij lies in [rem'*minneg_i, rem'*maxpos_i], a pair of
// linear inequalities in c.  Values outside the intersection of these
// ranges cannot be part of any solution within the sum budget.
inline HilbertBasis brute_force_basis(const KernelProblem& p, const Int& bound) {
    if (bound < 1) throw InvalidParamsError("bound must be >= 1");
    const std::size_t r = p.r(), k = p.k();

    // suffix extrema over columns > j: the most any future unit can push a
    // row down (minneg <= 0) or up (maxpos >= 0)
    std::vector<std::vector<Int>> minneg(r, std::vector<Int>(k + 1));
    std::vector<std::vector<Int>> maxpos(r, std::vector<Int>(k + 1));
    for (std::size_t i = 0; i < r; ++i) {
        minneg[i][k] = 0;
        maxpos[i][k] = 0;
        for (std::size_t j = k; j-- > 0;) {
            minneg[i][j] = std::min(minneg[i][j + 1], p.A(i, j));
            if (minneg[i][j] > 0) minneg[i][j] = 0;
            maxpos[i][j] = std::max(maxpos[i][j + 1], p.A(i, j));
            if (maxpos[i][j] < 0) maxpos[i][j] = 0;
        }
    }

    auto floor_div = [](const Int& a, const Int& b) {
        Int q_;
        mpz_fdiv_q(q_.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q_;
    };
    auto ceil_div = [](const Int& a, const Int& b) {
        Int q_;
        mpz_cdiv_q(q_.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q_;
    };

    std::vector<IntVector> solutions;
    IntVector v(k, 0), q(r, 0);

    std::function<void(std::size_t, Int)> dfs = [&](std::size_t j, Int rem) {
        if (j == k) {
            for (std::size_t i = 0; i < r; ++i)
                if (q[i] != 0) return;
            bool zero = true;
            for (const Int& x : v)
                if (x != 0) { zero = false; break; }
            if (!zero) solutions.push_back(v);
            return;
        }
        Int clo = 0, chi = rem;
        for (std::size_t i = 0; i < r && clo <= chi; ++i) {
            const Int& a = p.A(i, j);
            const Int& mn = minneg[i][j + 1];
            const Int& mx = maxpos[i][j + 1];
            // (rem-c)*mn <= -q_i - c*a  <=>  c*(a - mn) <= -q_i - rem*mn
            Int coef = a - mn;
            Int rhs = -q[i] - rem * mn;
            if (coef > 0) chi = std::min(chi, floor_div(rhs, coef));
            else if (coef < 0) clo = std::max(clo, ceil_div(rhs, coef));
            else if (rhs < 0) return;
            // -q_i - c*a <= (rem-c)*mx  <=>  c*(a - mx) >= -q_i - rem*mx
            coef = a - mx;
            rhs = -q[i] - rem * mx;
            if (coef > 0) clo = std::max(clo, ceil_div(rhs, coef));
            else if (coef < 0) chi = std::min(chi, floor_div(rhs, coef));
            else if (rhs > 0) return;
        }
        if (clo > chi) return;
        for (std::size_t i = 0; i < r; ++i) q[i] += clo * p.A(i, j);
        for (Int c = clo; c <= chi; ++c) {
            v[j] = c;
            dfs(j + 1, rem - c);
            for (std::size_t i = 0; i < r; ++i) q[i] += p.A(i, j);
        }
        for (std::size_t i = 0; i < r; ++i) q[i] -= (chi + 1) * p.A(i, j);
        v[j] = 0;
    };
    dfs(0, bound);

    std::sort(solutions.begin(), solutions.end(), canonical_less);
    // componentwise-minimal filter; sum order means minimal elements appear
    // before anything they dominate
    std::vector<IntVector> minimal;
    for (const IntVector& s : solutions) {
        bool dominated = false;
        for (const IntVector& b : minimal) {
            bool le = true;
            for (std::size_t j = 0; j < k; ++j)
                if (b[j] > s[j]) { le = false; break; }
            if (le) { dominated = true; break; }
        }
        if (!dominated) minimal.push_back(s);
    }

    HilbertBasis hb{p, {}};
    for (IntVector& m : minimal) hb.elements.push_back({std::move(m)});
    return hb;
}

// Is v an N-combination of basis elements?  Exhaustive bounded subtraction:
// every subtraction strictly lowers the coordinate sum, so the search
// terminates; failures are memoized.
inline bool is_member(const HilbertBasis& b, const SolutionVector& v) {
    {
        IntVector residual = b.problem.A.apply(v.v);
        for (const Int& q : residual)
            if (q != 0) throw NotASolutionError();
    }
    std::set<IntVector> dead;  // memoized failures
    std::function<bool(IntVector&)> search = [&](IntVector& cur) -> bool {
        bool zero = true;
        for (const Int& x : cur)
            if (x != 0) { zero = false; break; }
        if (zero) return true;
        if (dead.count(cur)) return false;
        for (const SolutionVector& e : b.elements) {
            bool le = true;
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (e.v[j] > cur[j]) { le = false; break; }
            if (!le) continue;
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] -= e.v[j];
            const bool ok = search(cur);
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] += e.v[j];
            if (ok) return true;
        }
        dead.insert(cur);
        return false;
    };
    IntVector cur = v.v;
    return search(cur);
}

}  // namespace lipman
