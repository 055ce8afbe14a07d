// Weight multiplicities of an A2 shape, read off the LS-path crystal and
// compared with Freudenthal's formula.

#include <iostream>
#include <map>

#include "hpl/hpl.hpp"

int main() {
  using namespace hpl;
  auto rs = RootSystem::from_gcm(cartan::A2());
  VectorV lambda{2, 1};
  auto g = generate_ls_paths(rs, lambda, 200, 20);
  std::map<VectorV, long> count;
  for (const auto& p : g.nodes) ++count[p.end()];
  std::cout << g.nodes.size() << " LS paths of shape " << lambda << "\n";
  for (const auto& [mu, n] : count)
    std::cout << "  " << mu << "  " << n << "  (Freudenthal " << freudenthal_multiplicity(rs, lambda, mu) << ")\n";
}
