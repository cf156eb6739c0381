// Prints the criterion and the h*-vector for prisms over small cycles.

#include <iostream>

#include "gorenstein/gorenstein.hpp"

using namespace gorenstein;

int main(int argc, char** argv) {
  const int n_max = argc > 1 ? std::stoi(argv[1]) : 5;
  for (int n = 3; n <= n_max; ++n) {
    const auto g = edge::prism_graph(n);
    const auto r = edge::gorenstein_edge(g);
    const auto facets = r.branch == Branch::odd ? edge::edge_polytope_facets(g)
                                                : lattice::facets_bruteforce(edge::edge_polytope(g));
    const auto hv = ehrhart::h_star(facets);
    std::cout << "n=" << n << " branch=" << to_string(r.branch) << " gorenstein=" << (r.verdict.value_or(false) ? "yes" : "no")
              << " d=" << hv.d << " h*=";
    for (std::size_t i = 0; i < hv.coefficients.size(); ++i) std::cout << (i ? "," : "") << hv.coefficients[i];
    if (n % 2 == 1) std::cout << (hv == edge::prism_hvector_formula(n) ? " (binomial)" : " (differs from binomial)");
    std::cout << "\n";
  }
}
