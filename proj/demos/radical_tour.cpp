// Radicals and reduced parts of Z/nZ for a few n, then a nil sum check.
#include <iostream>

#include "nilmod/nilmod.hpp"

using namespace nilmod;

namespace {

std::string show(const FiniteModule& m, const ElementSet& s) {
  std::string out = "{";
  for (auto i : s.to_vector()) out += (out.size() > 1 ? "," : "") + m.name({i});
  return out + "}";
}

}  // namespace

int main() {
  for (long long n : {4, 6, 12, 30, 72}) {
    auto m = module_regular(ring_zmod(n));
    auto r = radical_report(m);
    std::cout << "Z/" << n << ": R(M) = " << show(m, reduced_part(m)) << ", beta = " << show(m, r.beta)
              << ", beta_co = " << show(m, r.beta_co) << ", <E(0)> = " << show(m, r.envelope_span)
              << (is_reduced(m) ? ", reduced" : "") << "\n";
  }

  auto q = ring_path_algebra({2, {{"a", 2, 1}}}, 2);
  auto rep = module_quiver(q, 2, 2, {{"e1", {{1, 0}, {0, 0}}}, {"e2", {{0, 0}, {0, 1}}}, {"a", {{0, 1}, {0, 0}}}},
                           {"x", "y"});
  auto cmp = explore_unil_vs_nilsum(rep);
  std::cout << "quiver rep: U(M) = " << show(rep, cmp.upper_nil) << ", sum of nil submodules = "
            << show(rep, cmp.nil_sum) << " (" << to_string(cmp.relation) << ")\n";
  std::cout << "Koethe-analogue findings: " << explore_kothe(rep).size() << "\n";
}
