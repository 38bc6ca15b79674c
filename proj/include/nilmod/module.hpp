#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "nilmod/element_set.hpp"
#include "nilmod/errors.hpp"
#include "nilmod/limits.hpp"
#include "nilmod/ring.hpp"

namespace nilmod {

namespace detail {

class ModuleBackend {
 public:
  virtual ~ModuleBackend() = default;
  virtual std::uint32_t add(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t neg(std::uint32_t a) const = 0;
  virtual std::uint32_t act(std::uint32_t r, std::uint32_t m) const = 0;
  virtual std::string name(std::uint32_t m) const { return std::to_string(m); }
};

template <class Add, class Neg, class Act, class Name>
class LambdaModuleBackend final : public ModuleBackend {
 public:
  LambdaModuleBackend(Add add, Neg neg, Act act, Name name)
      : add_(std::move(add)), neg_(std::move(neg)), act_(std::move(act)), name_(std::move(name)) {}
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return add_(a, b); }
  std::uint32_t neg(std::uint32_t a) const override { return neg_(a); }
  std::uint32_t act(std::uint32_t r, std::uint32_t m) const override { return act_(r, m); }
  std::string name(std::uint32_t m) const override { return name_(m); }
 private:
  Add add_; Neg neg_; Act act_; Name name_;
};

template <class Add, class Neg, class Act, class Name>
std::unique_ptr<ModuleBackend> module_backend(Add add, Neg neg, Act act, Name name) {
  return std::make_unique<LambdaModuleBackend<Add, Neg, Act, Name>>(
      std::move(add), std::move(neg), std::move(act), std::move(name));
}

// Dense caches are built when they stay below these entry counts.
inline constexpr std::size_t act_table_cap = std::size_t{1} << 23;
inline constexpr std::size_t add_table_cap = std::size_t{1} << 22;

struct ModuleData {
  FiniteRing ring;
  std::size_t size = 0;
  std::uint32_t zero = 0;
  std::string provenance;
  std::unique_ptr<ModuleBackend> backend;
  std::vector<std::uint32_t> act_table;  // ring.size() x size, row = ring element
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> neg_table;

  mutable std::once_flag cyclic_once;
  mutable std::vector<ElementSet> cyclic;  // S*m for every m

  mutable std::recursive_mutex memo_mutex;
  mutable std::map<std::string, std::shared_ptr<const void>, std::less<>> memo;
};

}  // namespace detail

/// Finite unital left module over a FiniteRing (the acting ring, which for
/// modules over infinite rings is always the finite image ring). Immutable.
class FiniteModule {
 public:
  FiniteModule() = default;
  explicit FiniteModule(std::shared_ptr<const detail::ModuleData> d) : d_(std::move(d)) {}

  const FiniteRing& ring() const noexcept { return d_->ring; }
  std::size_t size() const noexcept { return d_->size; }
  ModElem zero() const noexcept { return {d_->zero}; }
  const std::string& provenance() const noexcept { return d_->provenance; }

  ModElem add(ModElem a, ModElem b) const {
    if (!d_->add_table.empty()) return {d_->add_table[a.index * d_->size + b.index]};
    return {d_->backend->add(a.index, b.index)};
  }
  ModElem neg(ModElem a) const { return {d_->neg_table[a.index]}; }
  ModElem sub(ModElem a, ModElem b) const { return add(a, neg(b)); }
  ModElem act(RingElem r, ModElem m) const {
    if (!d_->act_table.empty()) return {d_->act_table[r.index * d_->size + m.index]};
    return {d_->backend->act(r.index, m.index)};
  }

  std::string name(ModElem m) const { return d_->backend->name(m.index); }
  IndexRange<ModElem> elements() const { return IndexRange<ModElem>(size()); }

  std::optional<ModElem> find(std::string_view name) const {
    for (auto m : elements())
      if (this->name(m) == name) return m;
    return std::nullopt;
  }

  /// The cyclic submodule S*m. S is unital, so this image set is already
  /// closed under addition and the action.
  const ElementSet& cyclic(ModElem m) const {
    std::call_once(d_->cyclic_once, [this] {
      std::vector<ElementSet> out;
      out.reserve(size());
      for (auto x : elements()) {
        ElementSet s(size());
        for (auto r : ring().elements()) s.insert(act(r, x).index);
        out.push_back(std::move(s));
      }
      d_->cyclic = std::move(out);
    });
    return d_->cyclic[m.index];
  }

  /// Per-module memo for derived data (lattice, nilpotency scan). `compute`
  /// runs at most once per key on success; exceptions are not cached.
  template <class T, class F>
  std::shared_ptr<const T> memo(std::string_view key, F&& compute) const {
    std::lock_guard lock(d_->memo_mutex);
    if (auto it = d_->memo.find(key); it != d_->memo.end())
      return std::static_pointer_cast<const T>(it->second);
    auto value = std::make_shared<const T>(compute());
    d_->memo.emplace(std::string(key), value);
    return value;
  }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet zero_set() const {
    ElementSet s(size());
    s.insert(d_->zero);
    return s;
  }
  ElementSet full_set() const { return ElementSet::full(size()); }

  std::string describe(const ElementSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::uint32_t i) {
      out += first ? "" : ", ";
      first = false;
      out += name({i});
    });
    return out + "}";
  }

  bool same_as(const FiniteModule& o) const noexcept { return d_ == o.d_; }
  explicit operator bool() const noexcept { return static_cast<bool>(d_); }

 private:
  std::shared_ptr<const detail::ModuleData> d_;
};

/// Subset of a module closed under addition, negation and the action.
struct Submodule {
  FiniteModule parent;
  ElementSet elements;

  std::size_t size() const { return elements.size(); }
  bool contains(ModElem m) const { return elements.contains(m.index); }
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.parent.same_as(b.parent) && a.elements == b.elements;
  }
};

namespace detail {

inline FiniteModule make_module(FiniteRing ring, std::size_t size, std::uint32_t zero,
                                std::string provenance, std::unique_ptr<ModuleBackend> backend,
                                const Limits& limits) {
  if (size > limits.module_cap)
    throw CapacityError("module_cap", limits.module_cap,
                        "module of cardinality " + std::to_string(size));
  auto d = std::make_shared<ModuleData>();
  d->ring = std::move(ring);
  d->size = size;
  d->zero = zero;
  d->provenance = std::move(provenance);
  d->backend = std::move(backend);
  const std::size_t rs = d->ring.size();
  d->neg_table.resize(size);
  for (std::uint32_t m = 0; m < size; ++m) d->neg_table[m] = d->backend->neg(m);
  if (size * size <= add_table_cap) {
    d->add_table.resize(size * size);
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = 0; b < size; ++b) d->add_table[a * size + b] = d->backend->add(a, b);
  }
  if (rs * size <= act_table_cap) {
    d->act_table.resize(rs * size);
    for (std::uint32_t r = 0; r < rs; ++r)
      for (std::uint32_t m = 0; m < size; ++m) d->act_table[r * size + m] = d->backend->act(r, m);
  }
  return FiniteModule(std::move(d));
}

inline std::string linear_name(std::vector<std::uint32_t> digits,
                               const std::vector<std::string>& basis) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (digits[i] != 1) out += std::to_string(digits[i]);
    out += basis[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Axioms

/// Exhaustive check of the abelian-group and unital-module axioms. Skipped
/// (exhaustive == false) when |S|^2|M| + |S||M|^2 exceeds the axiom cap.
inline AxiomCheck check_module_axioms(const FiniteModule& m, const Limits& limits = default_limits()) {
  AxiomCheck out;
  const FiniteRing& s = m.ring();
  const std::size_t ns = s.size(), nm = m.size();
  const double work = double(ns) * ns * nm + double(ns) * nm * nm + double(nm) * nm * nm;
  if (work > double(limits.axiom_check_cap)) return out;
  out.exhaustive = true;
  auto rn = [&](RingElem r) { return s.name(r); };
  auto mn = [&](ModElem x) { return m.name(x); };
  for (auto x : m.elements()) {
    if (m.add(x, m.zero()) != x) { out.violation = "zero is not additive identity at " + mn(x); return out; }
    if (m.add(x, m.neg(x)) != m.zero()) { out.violation = "neg fails at " + mn(x); return out; }
    if (m.act(s.one(), x) != x) { out.violation = "unitality fails: 1*m != m at m=" + mn(x); return out; }
    for (auto y : m.elements()) {
      if (m.add(x, y) != m.add(y, x)) { out.violation = "addition not commutative at (" + mn(x) + "," + mn(y) + ")"; return out; }
      for (auto z : m.elements())
        if (m.add(m.add(x, y), z) != m.add(x, m.add(y, z))) {
          out.violation = "addition not associative at (" + mn(x) + "," + mn(y) + "," + mn(z) + ")";
          return out;
        }
    }
  }
  for (auto r : s.elements())
    for (auto x : m.elements())
      for (auto y : m.elements())
        if (m.act(r, m.add(x, y)) != m.add(m.act(r, x), m.act(r, y))) {
          out.violation = "r(m+n) != rm+rn at (r,m,n)=(" + rn(r) + "," + mn(x) + "," + mn(y) + ")";
          return out;
        }
  for (auto r : s.elements())
    for (auto t : s.elements())
      for (auto x : m.elements()) {
        if (m.act(s.add(r, t), x) != m.add(m.act(r, x), m.act(t, x))) {
          out.violation = "(r+s)m != rm+sm at (r,s,m)=(" + rn(r) + "," + rn(t) + "," + mn(x) + ")";
          return out;
        }
        if (m.act(s.mul(r, t), x) != m.act(r, m.act(t, x))) {
          out.violation = "(rs)m != r(sm) at (r,s,m)=(" + rn(r) + "," + rn(t) + "," + mn(x) + ")";
          return out;
        }
      }
  return out;
}

namespace detail {
inline void require_module_axioms(const FiniteModule& m, const std::string& who,
                                  const Limits& limits) {
  auto check = check_module_axioms(m, limits);
  if (!check.exhaustive)
    throw CapacityError("axiom_check_cap", limits.axiom_check_cap, who + ": cannot verify axioms");
  if (!check.ok()) {
    const auto& v = *check.violation;
    auto at = v.find(" at ");
    throw InvalidAction(who + ": " + v.substr(0, at), at == std::string::npos ? v : v.substr(at + 4));
  }
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors

/// R acting on itself by left multiplication.
inline FiniteModule module_regular(const FiniteRing& r, const Limits& limits = default_limits()) {
  auto backend = detail::module_backend(
      [r](std::uint32_t a, std::uint32_t b) { return r.add({a}, {b}).index; },
      [r](std::uint32_t a) { return r.neg({a}).index; },
      [r](std::uint32_t s, std::uint32_t a) { return r.mul({s}, {a}).index; },
      [r](std::uint32_t a) { return r.name({a}); });
  return detail::make_module(r, r.size(), r.zero().index, "regular module of " + r.presentation(),
                             std::move(backend), limits);
}

namespace detail {
inline FiniteModule with_provenance(const FiniteModule& m, std::string provenance,
                                    const Limits& limits) {
  const FiniteRing& r = m.ring();
  auto backend = module_backend(
      [m](std::uint32_t a, std::uint32_t b) { return m.add({a}, {b}).index; },
      [m](std::uint32_t a) { return m.neg({a}).index; },
      [m](std::uint32_t s, std::uint32_t a) { return m.act({s}, {a}).index; },
      [m](std::uint32_t a) { return m.name({a}); });
  return make_module(r, m.size(), m.zero().index, std::move(provenance), std::move(backend), limits);
}
}  // namespace detail

struct GoldenPair {
  FiniteModule module;  ///< M = M_n(Z/kZ)
  Submodule part;       ///< N = matrices whose rows each sum to 0 mod k
};

/// M = M_n(Z/kZ) over the image ring M_n(Z/kZ) of M_n(Z) (the kernel of the
/// reduction is M_n(kZ) = ann(M)), with N the row-sum-zero submodule.
inline GoldenPair module_golden(long long n, long long k, const Limits& limits = default_limits()) {
  if (n < 2) throw InvalidParameter("module_golden: n must be >= 2");
  if (k < 2) throw InvalidParameter("module_golden: k must be >= 2");
  auto base = ring_zmod(k, limits);
  auto s = ring_matrix(base, n, limits);
  if (s.size() > limits.module_cap)
    throw CapacityError("module_cap", limits.module_cap, "module_golden: k^(n^2)");
  auto m = detail::with_provenance(
      module_regular(s, limits),
      "M_" + std::to_string(n) + "(Z/" + std::to_string(k) + "Z) as a module over M_" +
          std::to_string(n) + "(Z), acting through M_" + std::to_string(n) + "(Z/" +
          std::to_string(k) + "Z)",
      limits);
  ElementSet part(m.size());
  const auto uk = static_cast<std::uint32_t>(k);
  const auto un = static_cast<std::size_t>(n);
  for (auto x : m.elements()) {
    // Row-major digits, entry (0,0) most significant.
    std::vector<std::uint32_t> entries(un * un);
    std::uint32_t v = x.index;
    for (std::size_t i = entries.size(); i-- > 0;) { entries[i] = v % uk; v /= uk; }
    bool ok = true;
    for (std::size_t i = 0; i < un && ok; ++i) {
      std::uint32_t sum = 0;
      for (std::size_t j = 0; j < un; ++j) sum += entries[i * un + j];
      ok = sum % uk == 0;
    }
    if (ok) part.insert(x.index);
  }
  return {m, Submodule{m, std::move(part)}};
}

/// Z/nZ as a Z-module, acting through the image ring Z/nZ.
inline FiniteModule module_cyclic_int(long long n, const Limits& limits = default_limits()) {
  if (n < 2) throw InvalidParameter("module_cyclic_int: n must be >= 2");
  return detail::with_provenance(module_regular(ring_zmod(n, limits), limits),
                                 "Z/" + std::to_string(n) + "Z as a Z-module, acting through Z/" +
                                     std::to_string(n) + "Z",
                                 limits);
}

/// M_n(Z/kZ) as a Z-module (scalar action), acting through Z/kZ.
inline FiniteModule module_scalar_matrices(long long n, long long k,
                                           const Limits& limits = default_limits()) {
  if (n < 1) throw InvalidParameter("module_scalar_matrices: n must be >= 1");
  auto base = ring_zmod(k, limits);
  auto mat = ring_matrix(base, n, limits);
  if (mat.size() > limits.module_cap)
    throw CapacityError("module_cap", limits.module_cap, "module_scalar_matrices: k^(n^2)");
  const auto uk = static_cast<std::uint32_t>(k);
  const std::size_t cells = static_cast<std::size_t>(n * n);
  auto backend = detail::module_backend(
      [mat](std::uint32_t a, std::uint32_t b) { return mat.add({a}, {b}).index; },
      [mat](std::uint32_t a) { return mat.neg({a}).index; },
      [uk, cells](std::uint32_t c, std::uint32_t a) {
        std::uint32_t r = 0, place = 1;
        for (std::size_t i = 0; i < cells; ++i) {
          r += ((a % uk) * c % uk) * place;
          a /= uk;
          place *= uk;
        }
        return r;
      },
      [mat](std::uint32_t a) { return mat.name({a}); });
  return detail::make_module(base, mat.size(), mat.zero().index,
                             "M_" + std::to_string(n) + "(Z/" + std::to_string(k) +
                                 "Z) as a Z-module, acting through Z/" + std::to_string(k) + "Z",
                             std::move(backend), limits);
}

/// How each basis element of a path algebra acts on F_p^dim: column j of the
/// matrix is the image of basis vector j. Only vertices and arrows are needed;
/// longer paths are derived from products.
using ActionMatrix = std::vector<std::vector<std::uint32_t>>;  // [row][col]

inline FiniteModule module_quiver(const FiniteRing& algebra, long long p, std::size_t dim,
                                  const std::map<std::string, ActionMatrix>& action,
                                  std::vector<std::string> basis_names = {},
                                  const Limits& limits = default_limits()) {
  if (!detail::is_prime_number(static_cast<std::uint64_t>(std::max(p, 0LL))))
    throw InvalidParameter("module_quiver: p must be prime");
  if (dim == 0) throw InvalidParameter("module_quiver: dim must be >= 1");
  const auto up = static_cast<std::uint32_t>(p);
  std::size_t alg_dim = 0;
  for (std::size_t s = 1; s < algebra.size(); s *= up) ++alg_dim;
  if (detail::checked_power(up, alg_dim, limits.ring_cap, "algebra") != algebra.size())
    throw InvalidParameter("module_quiver: ring size is not a power of p");
  const std::size_t size = detail::checked_power(up, dim, limits.module_cap, "module_quiver: p^dim");
  if (basis_names.empty())
    for (std::size_t i = 0; i < dim; ++i) basis_names.push_back("v" + std::to_string(i + 1));
  if (basis_names.size() != dim) throw InvalidParameter("module_quiver: wrong number of basis names");

  std::vector<std::optional<ActionMatrix>> mats(alg_dim);
  std::vector<std::uint32_t> basis_elems(alg_dim);
  for (std::size_t i = 0; i < alg_dim; ++i) basis_elems[i] = detail::basis_index(up, i);
  for (const auto& [label, mat] : action) {
    std::optional<std::size_t> which;
    for (std::size_t i = 0; i < alg_dim; ++i)
      if (algebra.name({basis_elems[i]}) == label) which = i;
    if (!which) throw InvalidParameter("module_quiver: '" + label + "' is not a basis path");
    if (mat.size() != dim) throw InvalidParameter("module_quiver: matrix for " + label + " has wrong size");
    ActionMatrix reduced(dim, std::vector<std::uint32_t>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
      if (mat[r].size() != dim) throw InvalidParameter("module_quiver: matrix for " + label + " has wrong size");
      for (std::size_t c = 0; c < dim; ++c) reduced[r][c] = mat[r][c] % up;
    }
    mats[*which] = reduced;
  }
  auto product = [&](const ActionMatrix& a, const ActionMatrix& b) {
    ActionMatrix c(dim, std::vector<std::uint32_t>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < dim; ++t) acc += std::uint64_t{a[i][t]} * b[t][j];
        c[i][j] = static_cast<std::uint32_t>(acc % up);
      }
    return c;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t < alg_dim; ++t) {
      if (mats[t]) continue;
      for (std::size_t i = 0; i < alg_dim && !mats[t]; ++i)
        for (std::size_t j = 0; j < alg_dim && !mats[t]; ++j)
          if (mats[i] && mats[j] && algebra.mul({basis_elems[i]}, {basis_elems[j]}).index == basis_elems[t]) {
            mats[t] = product(*mats[i], *mats[j]);
            changed = true;
          }
    }
  }
  for (std::size_t t = 0; t < alg_dim; ++t)
    if (!mats[t])
      throw InvalidParameter("module_quiver: no action given or derivable for " +
                             algebra.name({basis_elems[t]}));
  std::vector<ActionMatrix> ops;
  for (auto& m : mats) ops.push_back(*m);
  auto digits = [up](std::uint32_t x, std::size_t n) {
    std::vector<std::uint32_t> d(n);
    for (std::size_t i = 0; i < n; ++i) { d[i] = x % up; x /= up; }
    return d;
  };
  auto encode = [up](const std::vector<std::uint32_t>& d) {
    std::uint32_t r = 0, place = 1;
    for (auto c : d) { r += c * place; place *= up; }
    return r;
  };
  auto backend = detail::module_backend(
      [=](std::uint32_t a, std::uint32_t b) {
        auto x = digits(a, dim), y = digits(b, dim);
        for (std::size_t i = 0; i < dim; ++i) x[i] = (x[i] + y[i]) % up;
        return encode(x);
      },
      [=](std::uint32_t a) {
        auto x = digits(a, dim);
        for (auto& c : x) c = (up - c) % up;
        return encode(x);
      },
      [=](std::uint32_t r, std::uint32_t a) {
        auto coeff = digits(r, alg_dim);
        auto x = digits(a, dim);
        std::vector<std::uint64_t> acc(dim, 0);
        for (std::size_t t = 0; t < alg_dim; ++t) {
          if (!coeff[t]) continue;
          for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) acc[i] += std::uint64_t{coeff[t]} * ops[t][i][j] * x[j];
        }
        std::vector<std::uint32_t> y(dim);
        for (std::size_t i = 0; i < dim; ++i) y[i] = static_cast<std::uint32_t>(acc[i] % up);
        return encode(y);
      },
      [=](std::uint32_t a) { return detail::linear_name(digits(a, dim), basis_names); });
  auto m = detail::make_module(algebra, size, 0,
                               std::to_string(dim) + "-dimensional representation of " +
                                   algebra.presentation(),
                               std::move(backend), limits);
  detail::require_module_axioms(m, "module_quiver", limits);
  return m;
}

/// F_p[x,y]/(x^4, xy^2, x^3y, y^4) acted on by its own (finite) image ring.
inline FiniteModule module_monomial_staircase(long long p, const Limits& limits = default_limits()) {
  auto ring = ring_monomial_quotient(p, {"x", "y"}, {{4, 0}, {1, 2}, {3, 1}, {0, 4}}, limits);
  if (ring.size() > limits.module_cap)
    throw CapacityError("module_cap", limits.module_cap, "module_monomial_staircase: p^9");
  return detail::with_provenance(module_regular(ring, limits),
                                 "F_" + std::to_string(p) +
                                     "[x,y]-module F_" + std::to_string(p) +
                                     "[x,y]/(x^4,xy^2,x^3y,y^4), acting through its image ring",
                                 limits);
}

/// Explicit tables: add[m][n] over module indices (zero located from the
/// table), act[r][m] over ring indices. Axioms are verified.
inline FiniteModule module_from_action(const FiniteRing& r,
                                       const std::vector<std::vector<std::uint32_t>>& add,
                                       const std::vector<std::vector<std::uint32_t>>& act,
                                       std::vector<std::string> names = {},
                                       const Limits& limits = default_limits()) {
  const std::size_t n = add.size();
  if (n == 0) throw InvalidArgument("module_from_action: empty add table");
  if (n > limits.module_cap) throw CapacityError("module_cap", limits.module_cap, "module_from_action");
  if (act.size() != r.size()) throw InvalidArgument("module_from_action: act table needs one row per ring element");
  for (const auto& row : add) {
    if (row.size() != n) throw InvalidArgument("module_from_action: add table is not square");
    for (auto e : row) if (e >= n) throw InvalidArgument("module_from_action: add entry out of range");
  }
  for (const auto& row : act) {
    if (row.size() != n) throw InvalidArgument("module_from_action: act row has wrong length");
    for (auto e : row) if (e >= n) throw InvalidArgument("module_from_action: act entry out of range");
  }
  std::optional<std::uint32_t> zero;
  for (std::uint32_t i = 0; i < n && !zero; ++i) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = add[i][x] == x;
    if (ok) zero = i;
  }
  if (!zero) throw InvalidArgument("module_from_action: no additive identity");
  std::vector<std::uint32_t> negs(n, UINT32_MAX);
  for (std::size_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (add[x][y] == *zero) { negs[x] = y; break; }
  for (std::size_t x = 0; x < n; ++x)
    if (negs[x] == UINT32_MAX)
      throw InvalidArgument("module_from_action: element " + std::to_string(x) + " has no negative");
  if (names.size() != n) {
    names.clear();
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  auto backend = detail::module_backend(
      [add](std::uint32_t a, std::uint32_t b) { return add[a][b]; },
      [negs](std::uint32_t a) { return negs[a]; },
      [act](std::uint32_t s, std::uint32_t a) { return act[s][a]; },
      [names](std::uint32_t a) { return names[a]; });
  auto m = detail::make_module(r, n, *zero, "tables over " + r.presentation(), std::move(backend), limits);
  detail::require_module_axioms(m, "module_from_action", limits);
  return m;
}

/// M1 (+) M2 over a shared ring; index = i1 * |M2| + i2.
inline FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b,
                               const Limits& limits = default_limits()) {
  if (!a.ring().same_as(b.ring()))
    throw InvalidArgument("direct_sum: summands must be modules over the same ring instance");
  const auto nb = static_cast<std::uint32_t>(b.size());
  if (a.size() > limits.module_cap / nb) throw CapacityError("module_cap", limits.module_cap, "direct_sum");
  auto backend = detail::module_backend(
      [=](std::uint32_t x, std::uint32_t y) {
        return a.add({x / nb}, {y / nb}).index * nb + b.add({x % nb}, {y % nb}).index;
      },
      [=](std::uint32_t x) { return a.neg({x / nb}).index * nb + b.neg({x % nb}).index; },
      [=](std::uint32_t r, std::uint32_t x) {
        return a.act({r}, {x / nb}).index * nb + b.act({r}, {x % nb}).index;
      },
      [=](std::uint32_t x) { return "(" + a.name({x / nb}) + "," + b.name({x % nb}) + ")"; });
  return detail::make_module(a.ring(), a.size() * nb, a.zero().index * nb + b.zero().index,
                             "(" + a.provenance() + ") (+) (" + b.provenance() + ")",
                             std::move(backend), limits);
}

/// M/N with each coset represented by its minimum-index member; quotient
/// indices follow the order of those representatives.
inline FiniteModule quotient_module(const FiniteModule& m, const Submodule& n,
                                    const Limits& limits = default_limits()) {
  const std::size_t size = m.size();
  std::vector<std::uint32_t> class_of(size, UINT32_MAX), reps;
  for (auto x : m.elements()) {
    if (class_of[x.index] != UINT32_MAX) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x.index);
    n.elements.for_each([&](std::uint32_t i) { class_of[m.add(x, {i}).index] = c; });
  }
  auto backend = detail::module_backend(
      [=](std::uint32_t a, std::uint32_t b) { return class_of[m.add({reps[a]}, {reps[b]}).index]; },
      [=](std::uint32_t a) { return class_of[m.neg({reps[a]}).index]; },
      [=](std::uint32_t r, std::uint32_t a) { return class_of[m.act({r}, {reps[a]}).index]; },
      [=](std::uint32_t a) { return "[" + m.name({reps[a]}) + "]"; });
  return detail::make_module(m.ring(), reps.size(), class_of[m.zero().index],
                             "(" + m.provenance() + ") / N", std::move(backend), limits);
}

/// A submodule viewed as a module in its own right; elements keep their
/// parent names and ascending parent order.
inline FiniteModule submodule_as_module(const Submodule& n, const Limits& limits = default_limits()) {
  const FiniteModule& m = n.parent;
  auto members = n.elements.to_vector();
  std::vector<std::uint32_t> pos(m.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
  auto backend = detail::module_backend(
      [=](std::uint32_t a, std::uint32_t b) { return pos[m.add({members[a]}, {members[b]}).index]; },
      [=](std::uint32_t a) { return pos[m.neg({members[a]}).index]; },
      [=](std::uint32_t r, std::uint32_t a) { return pos[m.act({r}, {members[a]}).index]; },
      [=](std::uint32_t a) { return m.name({members[a]}); });
  return detail::make_module(m.ring(), members.size(), pos[m.zero().index],
                             "submodule of " + m.provenance(), std::move(backend), limits);
}

inline FiniteModule submodule_as_module(const FiniteModule& parent, const ElementSet& elements,
                                        const Limits& limits = default_limits()) {
  return submodule_as_module(Submodule{parent, elements}, limits);
}

/// ann_S(M) = {a : aM = 0}, a two-sided ideal of S.
inline ElementSet module_annihilator(const FiniteModule& m) {
  const FiniteRing& s = m.ring();
  ElementSet out(s.size());
  for (auto a : s.elements()) {
    bool kills = true;
    for (auto x : m.elements())
      if (m.act(a, x) != m.zero()) { kills = false; break; }
    if (kills) out.insert(a.index);
  }
  return out;
}

/// The image ring S/ann_S(M).
inline FiniteRing image_ring(const FiniteModule& m, const Limits& limits = default_limits()) {
  auto ann = module_annihilator(m);
  if (ann.size() == 1) return m.ring();
  return quotient_ring(m.ring(), ann, limits);
}

/// The same module re-expressed over its image ring S/ann_S(M), which then
/// acts faithfully. Elements keep their indices.
inline FiniteModule module_over_image_ring(const FiniteModule& m, const Limits& limits = default_limits()) {
  auto ann = module_annihilator(m);
  if (ann.size() == 1) return m;
  auto t = quotient_ring(m.ring(), ann, limits);
  // Representatives: the minimum-index member of each coset, ascending.
  const FiniteRing& s = m.ring();
  std::vector<std::uint32_t> class_of(s.size(), UINT32_MAX), reps;
  for (auto x : s.elements()) {
    if (class_of[x.index] != UINT32_MAX) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x.index);
    ann.for_each([&](std::uint32_t i) { class_of[s.add(x, {i}).index] = c; });
  }
  auto backend = detail::module_backend(
      [m](std::uint32_t a, std::uint32_t b) { return m.add({a}, {b}).index; },
      [m](std::uint32_t a) { return m.neg({a}).index; },
      [m, reps](std::uint32_t r, std::uint32_t a) { return m.act({reps[r]}, {a}).index; },
      [m](std::uint32_t a) { return m.name({a}); });
  return detail::make_module(t, m.size(), m.zero().index, m.provenance() + " (over its image ring)",
                             std::move(backend), limits);
}

}  // namespace nilmod
