#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lipman/hilbert_engine.hpp"
#include "testutil.hpp"

using namespace lipman;
using testutil::Rng;
using testutil::vec;

namespace {

std::vector<IntVector> elements_of(const HilbertBasis& b) {
    std::vector<IntVector> out;
    for (const SolutionVector& e : b.elements) out.push_back(e.v);
    return out;
}

// full odometer enumeration of {v != 0, sum(v) <= bound, A v = 0}
std::vector<IntVector> all_solutions_up_to(const KernelProblem& p, long bound) {
    const std::size_t k = p.k();
    std::vector<IntVector> sols;
    IntVector v(k, 0);
    auto rec = [&](auto&& self, std::size_t j, long left) -> void {
        if (j == k) {
            bool zero = true;
            for (const Int& x : v)
                if (x != 0) { zero = false; break; }
            if (zero) return;
            for (const Int& q : p.A.apply(v))
                if (q != 0) return;
            sols.push_back(v);
            return;
        }
        for (long c = 0; c <= left; ++c) {
            v[j] = c;
            self(self, j + 1, left - c);
        }
        v[j] = 0;
    };
    rec(rec, 0, bound);
    return sols;
}

// componentwise-minimal elements of a solution set
std::vector<IntVector> minimal_of(std::vector<IntVector> sols) {
    std::vector<IntVector> mins;
    for (const IntVector& v : sols) {
        bool dominated = false;
        for (const IntVector& u : sols) {
            if (u == v) continue;
            bool le = true;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (u[j] > v[j]) { le = false; break; }
            if (le) { dominated = true; break; }
        }
        if (!dominated) mins.push_back(v);
    }
    std::sort(mins.begin(), mins.end(), canonical_less);
    return mins;
}

IntVector componentwise_max(const std::vector<IntVector>& vs, std::size_t k) {
    IntVector box(k, 0);
    for (const IntVector& v : vs)
        for (std::size_t j = 0; j < k; ++j)
            if (v[j] > box[j]) box[j] = v[j];
    return box;
}

const KernelProblem kDoubledA2{IntMatrix{{-2, 1, 1, 0}, {1, -2, 0, 1}}};

}  // namespace

TEST_CASE("Hilbert basis of the doubled A2 system", "[engine]") {
    HilbertBasis b = hilbert_basis(kDoubledA2);
    REQUIRE(elements_of(b) == std::vector<IntVector>{vec({1, 1, 1, 1}),
                                                     vec({1, 2, 0, 3}),
                                                     vec({2, 1, 3, 0})});
}

TEST_CASE("Hilbert basis golden one-row systems", "[engine]") {
    REQUIRE(elements_of(hilbert_basis({IntMatrix{{1, -1}}})) ==
            std::vector<IntVector>{vec({1, 1})});
    REQUIRE(elements_of(hilbert_basis({IntMatrix{{-2, 1}}})) ==
            std::vector<IntVector>{vec({1, 2})});
    // only the zero vector solves v1 + v2 = 0
    REQUIRE(hilbert_basis({IntMatrix{{1, 1}}}).elements.empty());
    // the zero matrix constrains nothing: unit vectors generate
    REQUIRE(elements_of(hilbert_basis({IntMatrix{{0, 0}}})) ==
            std::vector<IntVector>{vec({0, 1}), vec({1, 0})});
    REQUIRE_THROWS_AS(hilbert_basis({IntMatrix(0, 0)}),
                      DimensionMismatchError);
}

TEST_CASE("Brute force bound sensitivity", "[engine]") {
    // (1,2) has coordinate sum 3: invisible at bound 2, found at bound 3
    KernelProblem p{IntMatrix{{-2, 1}}};
    REQUIRE(brute_force_basis(p, 2).elements.empty());
    REQUIRE(elements_of(brute_force_basis(p, 3)) ==
            std::vector<IntVector>{vec({1, 2})});
    REQUIRE(elements_of(brute_force_basis(p, 25)) ==
            std::vector<IntVector>{vec({1, 2})});
    REQUIRE_THROWS_AS(brute_force_basis(p, 0), InvalidParamsError);
}

TEST_CASE("Brute force on the doubled A2 system", "[engine]") {
    REQUIRE(elements_of(brute_force_basis(kDoubledA2, 10)) ==
            std::vector<IntVector>{vec({1, 1, 1, 1}), vec({1, 2, 0, 3}),
                                   vec({2, 1, 3, 0})});
    REQUIRE(brute_force_basis({IntMatrix{{1, 1}}}, 20).elements.empty());
}

TEST_CASE("Completion agrees with exhaustive enumeration", "[engine]") {
    // on random small systems, the basis truncated at sum <= 8 must equal
    // the minimal elements of the full solution list up to 8, and the brute
    // oracle must reproduce both
    Rng rng(3001);
    int nontrivial = 0;
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t r = 1 + rng.below(2);
        const std::size_t k = 2 + rng.below(3);
        KernelProblem p{testutil::random_matrix(rng, r, k, -3, 3)};
        std::vector<IntVector> expected = minimal_of(all_solutions_up_to(p, 8));

        HilbertBasis engine = hilbert_basis(p);
        std::vector<IntVector> engine_within;
        for (const SolutionVector& e : engine.elements) {
            Int s = 0;
            for (const Int& x : e.v) s += x;
            if (s <= 8) engine_within.push_back(e.v);
        }
        REQUIRE(engine_within == expected);
        REQUIRE(elements_of(brute_force_basis(p, 8)) == expected);
        if (!expected.empty()) ++nontrivial;
    }
    REQUIRE(nontrivial >= 10);
}

TEST_CASE("Engine output is sound and minimal", "[engine]") {
    Rng rng(3002);
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t r = 1 + rng.below(2);
        const std::size_t k = 2 + rng.below(3);
        KernelProblem p{testutil::random_matrix(rng, r, k, -3, 3)};
        HilbertBasis b = hilbert_basis(p);
        for (const SolutionVector& e : b.elements)
            for (const Int& q : p.A.apply(e.v)) REQUIRE(q == 0);
        for (std::size_t i = 0; i < b.elements.size(); ++i)
            for (std::size_t j = 0; j < b.elements.size(); ++j) {
                if (i == j) continue;
                bool le = true;
                for (std::size_t c = 0; c < k; ++c)
                    if (b.elements[i].v[c] > b.elements[j].v[c]) {
                        le = false;
                        break;
                    }
                REQUIRE_FALSE(le);
            }
    }
}

TEST_CASE("Every bounded solution is generated by the basis", "[engine]") {
    HilbertBasis b = hilbert_basis(kDoubledA2);
    for (const IntVector& v : all_solutions_up_to(kDoubledA2, 25))
        REQUIRE(is_member(b, SolutionVector{v}));
}

TEST_CASE("is_member", "[engine]") {
    HilbertBasis b = hilbert_basis(kDoubledA2);
    REQUIRE(is_member(b, SolutionVector{vec({3, 3, 3, 3})}));
    REQUIRE(is_member(b, SolutionVector{vec({0, 0, 0, 0})}));
    REQUIRE(is_member(b, SolutionVector{vec({2, 1, 3, 0})}));
    REQUIRE_THROWS_AS(is_member(b, SolutionVector{vec({1, 1, 2, 1})}),
                      NotASolutionError);

    // with (1,1,1,1) removed from the basis it is no longer reachable
    HilbertBasis crippled{kDoubledA2,
                          {SolutionVector{vec({1, 2, 0, 3})},
                           SolutionVector{vec({2, 1, 3, 0})}}};
    REQUIRE_FALSE(is_member(crippled, SolutionVector{vec({1, 1, 1, 1})}));
    REQUIRE(is_member(crippled, SolutionVector{vec({3, 3, 3, 3})}));
}

TEST_CASE("Seeds are honored and verified", "[engine]") {
    EngineOptions with_seeds;
    with_seeds.seeds = {vec({1, 1, 1, 1}), vec({2, 1, 3, 0})};
    REQUIRE(elements_of(hilbert_basis(kDoubledA2, with_seeds)) ==
            elements_of(hilbert_basis(kDoubledA2)));

    EngineOptions bad_seed;
    bad_seed.seeds = {vec({1, 1, 1, 2})};
    REQUIRE_THROWS_AS(hilbert_basis(kDoubledA2, bad_seed), NotASolutionError);

    EngineOptions short_seed;
    short_seed.seeds = {vec({1, 1})};
    REQUIRE_THROWS_AS(hilbert_basis(kDoubledA2, short_seed),
                      DimensionMismatchError);
}

TEST_CASE("A certified coordinate box does not change the answer",
          "[engine]") {
    Rng rng(3003);
    for (int iter = 0; iter < 15; ++iter) {
        const std::size_t r = 1 + rng.below(2);
        const std::size_t k = 2 + rng.below(3);
        KernelProblem p{testutil::random_matrix(rng, r, k, -3, 3)};
        HilbertBasis plain = hilbert_basis(p);
        // the componentwise max of the true basis is a valid certificate
        EngineOptions boxed;
        boxed.coordinate_bound = componentwise_max(elements_of(plain), k);
        REQUIRE(elements_of(hilbert_basis(p, boxed)) == elements_of(plain));

        // ... and a complete one: direct box enumeration agrees too
        EngineOptions complete;
        complete.coordinate_bound = boxed.coordinate_bound;
        complete.box_complete = true;
        REQUIRE(elements_of(hilbert_basis(p, complete)) == elements_of(plain));
    }
}

TEST_CASE("box_complete requires a coordinate bound", "[engine]") {
    EngineOptions options;
    options.box_complete = true;
    REQUIRE_THROWS_AS(hilbert_basis(kDoubledA2, options), InvalidParamsError);
}

TEST_CASE("Wrong-length coordinate bound is rejected", "[engine]") {
    EngineOptions options;
    options.coordinate_bound = vec({1, 1});
    REQUIRE_THROWS_AS(hilbert_basis(kDoubledA2, options),
                      DimensionMismatchError);
}

TEST_CASE("Node budget is enforced", "[engine]") {
    KernelProblem p{IntMatrix{{-3, 1, 1, 0, 0},
                              {1, -3, 0, 1, 0},
                              {0, 1, -3, 0, 1}}};
    EngineOptions tiny;
    tiny.node_budget = 10;
    try {
        hilbert_basis(p, tiny);
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError& e) {
        REQUIRE(e.budget == 10);
        REQUIRE(e.expansions > e.budget);
    }
}

TEST_CASE("Thread count does not affect the result", "[engine]") {
    KernelProblem p{IntMatrix{{-2, 1, 0, 1, 0, 0},
                              {1, -2, 1, 0, 1, 0},
                              {0, 1, -2, 0, 0, 1}}};
    EngineOptions t1, t2, t5;
    t1.threads = 1;
    t2.threads = 2;
    t5.threads = 5;
    std::vector<IntVector> base = elements_of(hilbert_basis(p, t1));
    REQUIRE(elements_of(hilbert_basis(p, t2)) == base);
    REQUIRE(elements_of(hilbert_basis(p, t5)) == base);
    REQUIRE_FALSE(base.empty());
}

TEST_CASE("Machine-word and bignum paths agree", "[engine]") {
    // a budget above 2^30 forces the engine off the int64 fast path
    Rng rng(3004);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t r = 1 + rng.below(2);
        const std::size_t k = 2 + rng.below(3);
        KernelProblem p{testutil::random_matrix(rng, r, k, -3, 3)};
        EngineOptions fast, big;
        fast.node_budget = 1'000'000;
        big.node_budget = (1ull << 31);
        REQUIRE(elements_of(hilbert_basis(p, fast)) ==
                elements_of(hilbert_basis(p, big)));
    }
}

TEST_CASE("Entries beyond the machine-word range work", "[engine]") {
    const long big = 1L << 31;
    KernelProblem p{IntMatrix{{big, -big}}};
    REQUIRE(elements_of(hilbert_basis(p)) ==
            std::vector<IntVector>{vec({1, 1})});
}

TEST_CASE("Engine statistics are reported", "[engine]") {
    EngineStats stats;
    EngineOptions options;
    options.threads = 2;
    options.stats = &stats;
    hilbert_basis(kDoubledA2, options);
    REQUIRE(stats.node_expansions > 0);
    REQUIRE(stats.max_frontier_width >= 1);
    REQUIRE(stats.threads == 2);
}

TEST_CASE("Determinism: repeated runs give identical output", "[engine]") {
    KernelProblem p{IntMatrix{{-2, 1, 1, 0, 0, 0},
                              {1, -2, 0, 1, 0, 1},
                              {1, 0, -3, 0, 1, 0}}};
    HilbertBasis a = hilbert_basis(p);
    HilbertBasis b = hilbert_basis(p);
    REQUIRE(elements_of(a) == elements_of(b));
}
