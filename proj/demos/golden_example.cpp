// Walks through M = M_2(Z/2Z) over M_2(Z) and its row-sum-zero submodule N.
#include <iostream>

#include "nilmod/nilmod.hpp"

using namespace nilmod;

int main() {
  auto g = module_golden(2, 2);
  const auto& m = g.module;
  auto n = submodule_as_module(g.part);

  std::cout << "|M| = " << m.size() << ", |N| = " << n.size() << "\n";
  std::cout << "N simple: " << is_simple(n) << ", prime: " << is_prime_module(n)
            << ", completely prime: " << is_completely_prime_module(n) << ", nil: " << is_nil(n) << "\n";
  if (auto w = completely_prime_violation(n, n.zero_set()))
    std::cout << "  a = " << n.ring().name(w->a) << " kills m = " << n.name(w->m) << " without killing N\n";

  auto rad = radical_report(m);
  std::cout << "beta(M) has " << rad.beta.size() << " element(s), beta_co(M) has " << rad.beta_co.size() << "\n";
  std::cout << "<E_M(0)> = M: " << rad.envelope_span.is_full() << ", N(M) = M: " << is_nil(m) << "\n";
  std::cout << "complete radical formula at 0: " << rad.satisfies_crf_zero
            << ", radical formula at 0: " << rad.satisfies_rf_zero << "\n";
  if (auto e = regular_embedding_witness(m)) std::cout << "embedding witness: " << m.name(*e) << "\n";
  std::cout << "N has an embedding witness: " << regular_embedding_witness(n).has_value() << "\n";
}
