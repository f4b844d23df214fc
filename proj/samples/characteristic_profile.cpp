// Prints how the Cohen-Macaulay verdict of the bundled 11-vertex graph
// changes with the characteristic of the coefficient field.

#include <iostream>

#include "cmgraph/cmgraph.hpp"

int main() {
  using namespace cmgraph;
  const Graph g = fixtures::fig1();
  const SimplicialComplex delta = independence_complex(g);
  std::cout << "facets: " << delta.facets().size() << ", dimension " << delta.dimension() << '\n';
  for (long long p : {0, 2, 3, 5}) {
    const FieldSpec field = FieldSpec::characteristic(p);
    const CMReport report = cm_graph(g, field);
    std::cout << "char " << p << ": betti " << to_json(reduced_betti(delta, field)).dump()
              << (report.is_cm ? "  Cohen-Macaulay" : "  not Cohen-Macaulay");
    if (report.witness) {
      std::cout << " (link of " << report.witness->face.to_string() << " has homology in degree "
                << report.witness->index << ")";
    }
    std::cout << '\n';
  }
}
