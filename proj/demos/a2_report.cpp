// Worked example: the cyclic quotient singularity of type A2.
//
// Builds the intersection matrix of two (-2)-curves meeting once, runs the
// full pipeline, and prints every intermediate object: the doubled system,
// its Hilbert basis, the semigroup generators, the cone rays, the
// fundamental cycle, and the resulting monomial parametrization.

#include <iostream>

#include "lipman/lipman_api.hpp"

using namespace lipman;

namespace {

void print_vector(const IntVector& v) {
    std::cout << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << v[i].get_str();
    }
    std::cout << ")";
}

}  // namespace

int main() {
    IntersectionMatrix M = validate(IntMatrix{{-2, 1}, {1, -2}});
    std::cout << "intersection matrix:  [[-2, 1], [1, -2]]\n\n";

    KernelProblem doubled = doubled_matrix(M);
    std::cout << "doubled system A = [M | I]:\n";
    for (std::size_t i = 0; i < doubled.r(); ++i) {
        std::cout << "  ";
        for (std::size_t j = 0; j < doubled.k(); ++j)
            std::cout << doubled.A(i, j).get_str() << (j + 1 < doubled.k() ? " " : "\n");
    }

    LipmanReport rep = analyze(M);

    std::cout << "\nhilbert basis of ker(A) in N^4, split as (m | d):\n";
    for (const SolutionVector& e : rep.hilbert_S.elements) {
        std::cout << "  ";
        print_vector(e.v);
        std::cout << "\n";
    }

    std::cout << "\nlipman semigroup generators (coefficients of E_1, E_2):\n";
    for (const Divisor& g : rep.generators) {
        std::cout << "  ";
        print_vector(g.coeffs);
        std::cout << "\n";
    }

    std::cout << "\ncone rays with minimal integer multiples:\n";
    for (std::size_t i = 0; i < M.n(); ++i) {
        std::cout << "  F_" << i + 1 << " = (";
        for (std::size_t j = 0; j < M.n(); ++j) {
            if (j) std::cout << ", ";
            const Rational& r = rep.rays.rays(j, i);
            std::cout << r.get_num().get_str();
            if (r.get_den() != 1) std::cout << "/" << r.get_den().get_str();
        }
        std::cout << "),  g_" << i + 1 << " = "
                  << rep.rays.multipliers[i].get_str() << ",  g*F = ";
        print_vector(rep.rays.integer_rays[i].coeffs);
        std::cout << "\n";
    }

    std::cout << "\nfundamental cycle: ";
    print_vector(rep.fundamental_cycle.coeffs);

    std::cout << "\n\nmonomial parametrization of the toric variety:\n";
    for (const IntVector& e : rep.parametrization.exponent_vectors) {
        std::cout << "  ";
        bool first = true;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!first) std::cout << " * ";
            std::cout << "u" << j + 1;
            if (e[j] != 1) std::cout << "^" << e[j].get_str();
            first = false;
        }
        if (first) std::cout << "1";
        std::cout << "\n";
    }
    std::cout << "\nthe three monomials satisfy x*y = z^3: the A2 cone.\n";
    return 0;
}
