#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace nilmod {

/// Size caps shared by every constructor and enumeration.
struct Limits {
  std::size_t module_cap = 65536;      ///< largest module cardinality
  std::size_t ring_cap = 1u << 20;     ///< largest rule-based ring
  std::size_t dense_ring_cap = 4096;   ///< largest ring stored as Cayley tables
  std::size_t lattice_cap = 100000;    ///< most submodules/ideals enumerated
  std::size_t axiom_check_cap = 1u << 26;  ///< most triples in an exhaustive axiom check
};

namespace detail {
inline std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}
}  // namespace detail

/// Defaults, overridable through NILMOD_MODULE_CAP and NILMOD_LATTICE_CAP.
inline const Limits& default_limits() {
  static const Limits limits = [] {
    Limits l;
    l.module_cap = detail::env_size("NILMOD_MODULE_CAP", l.module_cap);
    l.lattice_cap = detail::env_size("NILMOD_LATTICE_CAP", l.lattice_cap);
    return l;
  }();
  return limits;
}

}  // namespace nilmod
