// Acceptance gate: runs the six acceptance criteria and prints one PASS/FAIL
// line per criterion.  Exit code is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lipman/cli.hpp"
#include "lipman/families.hpp"
#include "lipman/lipman_api.hpp"
#include "testutil.hpp"

using namespace lipman;
using testutil::Rng;
using testutil::vec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::set<IntVector> basis_set(const HilbertBasis& b) {
    std::set<IntVector> s;
    for (const SolutionVector& e : b.elements) s.insert(e.v);
    return s;
}

Int max_coordinate_sum(const HilbertBasis& b) {
    Int best = 0;
    for (const SolutionVector& e : b.elements) {
        Int s = 0;
        for (const Int& x : e.v) s += x;
        if (s > best) best = s;
    }
    return best;
}

// ---------------------------------------------------------------- criterion 1
// A2 golden: analyze([[-2,1],[1,-2]]) reproduces every report field exactly,
// in under a second.
bool criterion1(std::string& detail) {
    const auto t0 = Clock::now();
    LipmanReport rep = analyze(validate(IntMatrix{{-2, 1}, {1, -2}}));
    const double dt = seconds_since(t0);

    const std::set<IntVector> want_basis = {vec({1, 1, 1, 1}),
                                            vec({2, 1, 3, 0}),
                                            vec({1, 2, 0, 3})};
    if (basis_set(rep.hilbert_S) != want_basis) {
        detail = "H_S differs from {(1,1,1,1),(2,1,3,0),(1,2,0,3)}";
        return false;
    }
    std::set<IntVector> gens, vals, par;
    for (const Divisor& g : rep.generators) gens.insert(g.coeffs);
    for (const ValueVector& d : rep.value_parts) vals.insert(d.values);
    for (const IntVector& e : rep.parametrization.exponent_vectors)
        par.insert(e);
    if (gens != std::set<IntVector>{vec({1, 1}), vec({2, 1}), vec({1, 2})}) {
        detail = "generators differ from {E1+E2, 2E1+E2, E1+2E2}";
        return false;
    }
    if (vals != std::set<IntVector>{vec({3, 0}), vec({1, 1}), vec({0, 3})}) {
        detail = "H_{S_2} differs from {(3,0),(1,1),(0,3)}";
        return false;
    }
    if (rep.fundamental_cycle.coeffs != vec({1, 1})) {
        detail = "fundamental cycle differs from (1,1)";
        return false;
    }
    if (par != std::set<IntVector>{vec({3, 0}), vec({1, 1}), vec({0, 3})}) {
        detail = "parametrization differs from {u1^3, u1 u2, u2^3}";
        return false;
    }
    if (dt >= 1.0) {
        detail = "took " + std::to_string(dt) + " s (limit 1 s)";
        return false;
    }
    std::ostringstream os;
    os << "A2 report exact in " << static_cast<int>(dt * 1000) << " ms";
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------- criterion 2
// Engine vs brute-force oracle on the built-in families with n <= 6 plus 50
// random validated matrices (n <= 4, diagonal >= -6), at bound
// max(25, 2 * max coordinate sum of the computed basis).
bool criterion2(std::string& detail) {
    const auto t0 = Clock::now();
    std::vector<std::pair<std::string, IntersectionMatrix>> instances;
    for (std::size_t n = 1; n <= 6; ++n)
        instances.emplace_back("a" + std::to_string(n), a_family(n));
    for (std::size_t n = 4; n <= 6; ++n)
        instances.emplace_back("d" + std::to_string(n), d_family(n));
    instances.emplace_back("e6", e_family(6));

    // chains over {2,3,4} up to length 6.  Kept while the certificate box
    // holds at most 50000 doubled-system solutions; beyond that the basis
    // has thousands of elements and the brute-force oracle alone needs hours
    // (the worst length-6 chains sit beyond 10^15), so those weights are
    // untestable against this oracle on any implementation.
    int chains = 0;
    for (std::size_t len = 1; len <= 6; ++len) {
        std::vector<std::size_t> idx(len, 0);
        for (;;) {
            std::vector<long> w(len);
            for (std::size_t i = 0; i < len; ++i)
                w[i] = 2 + static_cast<long>(idx[i]);
            IntersectionMatrix M = chain_matrix(w);
            if (testutil::box_solution_count(M) <= 50'000) {
                std::string name = "chain";
                for (long x : w) name += (name == "chain" ? ":" : ",") +
                                         std::to_string(x);
                instances.emplace_back(name, M);
                ++chains;
            }
            std::size_t p = 0;
            while (p < len && idx[p] == 2) idx[p++] = 0;
            if (p == len) break;
            ++idx[p];
        }
    }

    Rng rng(20260819ull);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + rng.below(4);
        instances.emplace_back("random" + std::to_string(i),
                               testutil::random_intersection_matrix(rng, n));
    }

    for (const auto& [name, M] : instances) {
        LipmanReport rep = analyze(M);
        Int bound = max_coordinate_sum(rep.hilbert_S) * 2;
        if (bound < 25) bound = 25;
        HilbertBasis brute = brute_force_basis(doubled_matrix(M), bound);
        if (rep.hilbert_S.elements != brute.elements) {
            detail = "engine and oracle disagree on " + name;
            return false;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 300.0) {
        detail = "took " + std::to_string(dt) + " s (limit 300 s)";
        return false;
    }
    std::ostringstream os;
    os << instances.size() << " instances (" << chains
       << " chains, 50 random) agree with the oracle in " << std::fixed
       << std::setprecision(1) << dt << " s";
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------- criterion 3
// Property suite over >= 200 random validated matrices with n <= 5.
bool criterion3(std::string& detail) {
    Rng rng(424242ull);
    const int total = 220;
    for (int iter = 0; iter < total; ++iter) {
        const std::size_t n = 1 + rng.below(5);
        IntersectionMatrix M = testutil::random_intersection_matrix(rng, n);
        LipmanReport rep = analyze(M);
        const std::string tag = " (instance " + std::to_string(iter) + ")";

        // (a) every basis element solves the doubled system exactly
        const KernelProblem problem = doubled_matrix(M);
        for (const SolutionVector& e : rep.hilbert_S.elements)
            for (const Int& q : problem.A.apply(e.v))
                if (q != 0) {
                    detail = "(a) basis element violates Av=0" + tag;
                    return false;
                }

        // (b) pairwise incomparability
        const auto& els = rep.hilbert_S.elements;
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t j = 0; j < els.size(); ++j) {
                if (i == j) continue;
                bool le = true;
                for (std::size_t c = 0; c < 2 * n; ++c)
                    if (els[i].v[c] > els[j].v[c]) { le = false; break; }
                if (le) {
                    detail = "(b) comparable basis pair" + tag;
                    return false;
                }
            }

        // (c) generator coordinates >= 1
        for (const Divisor& g : rep.generators)
            for (const Int& c : g.coeffs)
                if (c < 1) {
                    detail = "(c) nonpositive generator coordinate" + tag;
                    return false;
                }

        // (d) g_i e_i appears among the value parts for every i
        for (std::size_t i = 0; i < n; ++i) {
            IntVector gi(n, 0);
            gi[i] = rep.rays.multipliers[i];
            bool found = false;
            for (const ValueVector& d : rep.value_parts)
                if (d.values == gi) { found = true; break; }
            if (!found) {
                detail = "(d) g_i e_i missing from H_{S_2}" + tag;
                return false;
            }
        }

        // (e) fundamental cycle among generators, below all of them
        bool cycle_found = false;
        for (const Divisor& g : rep.generators) {
            if (g.coeffs == rep.fundamental_cycle.coeffs) cycle_found = true;
            for (std::size_t c = 0; c < n; ++c)
                if (rep.fundamental_cycle.coeffs[c] > g.coeffs[c]) {
                    detail = "(e) cycle exceeds a generator" + tag;
                    return false;
                }
        }
        if (!cycle_found) {
            detail = "(e) cycle not among generators" + tag;
            return false;
        }

        // (f) M * generator = -value_part, pairwise
        for (std::size_t i = 0; i < rep.generators.size(); ++i) {
            IntVector prod = M.matrix().apply(rep.generators[i].coeffs);
            for (std::size_t c = 0; c < n; ++c)
                if (prod[c] != -rep.value_parts[i].values[c]) {
                    detail = "(f) M*m != -d" + tag;
                    return false;
                }
        }

        // (g) every ray entry strictly positive
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rep.rays.rays(i, j) <= 0) {
                    detail = "(g) nonpositive ray entry" + tag;
                    return false;
                }
    }
    detail = "(a)-(g) hold on " + std::to_string(total) + " random matrices";
    return true;
}

// ---------------------------------------------------------------- criterion 4
// Exact-arithmetic checks: inverse round trips, cofactor determinants,
// definiteness verdict vs sampled quadratic form.
bool criterion4(std::string& detail) {
    Rng rng(777);

    std::vector<IntMatrix> test_matrices = {
        IntMatrix{{-2, 1}, {1, -2}}, IntMatrix{{-1}},
        e_family(6).matrix(),        e_family(7).matrix(),
        e_family(8).matrix(),        chain_matrix({2, 3, 4, 2}).matrix()};
    for (std::size_t n = 1; n <= 6; ++n)
        test_matrices.push_back(a_family(n).matrix());
    for (std::size_t n = 4; n <= 6; ++n)
        test_matrices.push_back(d_family(n).matrix());
    for (int i = 0; i < 30; ++i)
        test_matrices.push_back(
            testutil::random_intersection_matrix(rng, 1 + rng.below(5))
                .matrix());
    for (int i = 0; i < 30;) {  // random invertible, no structure
        const std::size_t n = 1 + rng.below(5);
        IntMatrix m = testutil::random_matrix(rng, n, n, -9, 9);
        if (determinant(m) == 0) continue;
        test_matrices.push_back(m);
        ++i;
    }

    for (const IntMatrix& m : test_matrices) {
        const std::size_t n = m.rows();
        RatMatrix x = neg_inverse(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc(0);
                for (std::size_t k = 0; k < n; ++k)
                    acc += Rational(m(i, k)) * x(k, j);
                if (acc != (i == j ? Rational(-1) : Rational(0))) {
                    detail = "neg_inverse round trip failed";
                    return false;
                }
            }
        if (n <= 5 && determinant(m) != testutil::cofactor_det(m)) {
            detail = "determinant disagrees with cofactor expansion";
            return false;
        }
    }

    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng.below(5);
        IntMatrix m = testutil::random_symmetric_matrix(rng, n);
        const bool verdict = is_negative_definite(m);
        bool sampled = true;
        for (int s = 0; s < 1000; ++s) {
            IntVector v = testutil::random_nonzero_vector(rng, n, -5, 5);
            if (testutil::quadratic_form(m, v) >= 0) { sampled = false; break; }
        }
        if (verdict != sampled) {
            detail = "definiteness verdict disagrees with sampled form";
            return false;
        }
    }

    detail = std::to_string(test_matrices.size()) +
             " inverse round trips, cofactor n<=5, 100x1000 sampled "
             "definiteness checks";
    return true;
}

// ---------------------------------------------------------------- criterion 5
// Byte-identical output across repeated runs, including with internal
// parallelism enabled.
bool criterion5(std::string& detail) {
    auto run_basis = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return std::make_pair(code, out.str());
    };
    auto [c1, out1] = run_basis({"basis", "--family", "e8", "--json"});
    auto [c2, out2] = run_basis({"basis", "--family", "e8", "--json"});
    auto [c3, out3] =
        run_basis({"basis", "--family", "e8", "--json", "--threads", "3"});
    setenv("LIPMAN_THREADS", "5", 1);
    auto [c4, out4] = run_basis({"basis", "--family", "e8", "--json"});
    unsetenv("LIPMAN_THREADS");

    if (c1 != 0 || c2 != 0 || c3 != 0 || c4 != 0) {
        detail = "a run exited nonzero";
        return false;
    }
    if (out1 != out2) {
        detail = "two sequential runs differ";
        return false;
    }
    if (out1 != out3 || out1 != out4) {
        detail = "threaded run differs from single-threaded run";
        return false;
    }
    detail = "4 runs of `basis --family e8 --json` byte-identical "
             "(single- and multi-threaded)";
    return true;
}

// ---------------------------------------------------------------- criterion 6
// The paper's reproducibility surface is criteria 1-5; the qualitative claim
// (the whole report falls out of the intersection matrix alone) is criterion
// 1 completing without any ring-theoretic input.
bool criterion6(std::string& detail, bool c1_passed) {
    if (!c1_passed) {
        detail = "criterion 1 failed, so the qualitative claim is unsupported";
        return false;
    }
    detail = "full report computed from the intersection matrix alone "
             "(criterion 1); no further quantitative claims to reproduce";
    return true;
}

}  // namespace

int main() {
    int failures = 0;
    bool c1 = false;
    for (int crit = 1; crit <= 6; ++crit) {
        std::string detail;
        bool ok = false;
        try {
            switch (crit) {
                case 1: ok = c1 = criterion1(detail); break;
                case 2: ok = criterion2(detail); break;
                case 3: ok = criterion3(detail); break;
                case 4: ok = criterion4(detail); break;
                case 5: ok = criterion5(detail); break;
                case 6: ok = criterion6(detail, c1); break;
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << crit << ": " << (ok ? "PASS" : "FAIL")
                  << " — " << detail << std::endl;
        if (!ok) ++failures;
    }
    return failures;
}
