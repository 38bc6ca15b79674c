#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilmod/element_set.hpp"
#include "nilmod/errors.hpp"
#include "nilmod/limits.hpp"

namespace nilmod {

/// Element of a FiniteRing, identified by its canonical index.
struct RingElem {
  std::uint32_t index = 0;
  friend auto operator<=>(RingElem, RingElem) = default;
};

/// Element of a FiniteModule, identified by its canonical index.
struct ModElem {
  std::uint32_t index = 0;
  friend auto operator<=>(ModElem, ModElem) = default;
};

/// Ascending range of strongly typed indices [0, n).
template <class Elem>
class IndexRange {
 public:
  class iterator {
   public:
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint32_t i) : i_(i) {}
    Elem operator*() const { return Elem{i_}; }
    iterator& operator++() { ++i_; return *this; }
    iterator operator++(int) { auto t = *this; ++i_; return t; }
    friend bool operator==(iterator, iterator) = default;
   private:
    std::uint32_t i_ = 0;
  };
  explicit IndexRange(std::size_t n) : n_(static_cast<std::uint32_t>(n)) {}
  iterator begin() const { return iterator(0); }
  iterator end() const { return iterator(n_); }
  std::size_t size() const { return n_; }
 private:
  std::uint32_t n_;
};

namespace detail {

class RingBackend {
 public:
  virtual ~RingBackend() = default;
  virtual std::uint32_t add(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t mul(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t neg(std::uint32_t a) const = 0;
  virtual std::string name(std::uint32_t a) const { return std::to_string(a); }
  virtual bool dense() const { return false; }
};

/// Cayley tables. Indices fit in 16 bits because dense rings are capped at 4096.
class DenseRingBackend final : public RingBackend {
 public:
  DenseRingBackend(std::size_t n, std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul,
                   std::vector<std::uint16_t> neg, std::vector<std::string> names)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)), neg_(std::move(neg)),
        names_(std::move(names)) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return add_[a * n_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override { return mul_[a * n_ + b]; }
  std::uint32_t neg(std::uint32_t a) const override { return neg_[a]; }
  std::string name(std::uint32_t a) const override {
    return names_.empty() ? std::to_string(a) : names_[a];
  }
  bool dense() const override { return true; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> add_, mul_, neg_;
  std::vector<std::string> names_;
};

struct RingData {
  std::size_t size = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::string presentation;
  std::unique_ptr<RingBackend> backend;
};

}  // namespace detail

/// Finite unital associative ring. Immutable; copies share the same tables.
class FiniteRing {
 public:
  FiniteRing() = default;
  explicit FiniteRing(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}

  std::size_t size() const noexcept { return d_->size; }
  RingElem zero() const noexcept { return {d_->zero}; }
  RingElem one() const noexcept { return {d_->one}; }

  RingElem add(RingElem a, RingElem b) const { return {d_->backend->add(a.index, b.index)}; }
  RingElem mul(RingElem a, RingElem b) const { return {d_->backend->mul(a.index, b.index)}; }
  RingElem neg(RingElem a) const { return {d_->backend->neg(a.index)}; }
  RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

  RingElem pow(RingElem a, std::uint64_t k) const {
    RingElem r = one();
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::string name(RingElem a) const { return d_->backend->name(a.index); }
  const std::string& presentation() const noexcept { return d_->presentation; }
  bool is_dense() const { return d_->backend->dense(); }
  IndexRange<RingElem> elements() const { return IndexRange<RingElem>(size()); }

  std::optional<RingElem> find(std::string_view name) const {
    for (auto a : elements())
      if (this->name(a) == name) return a;
    return std::nullopt;
  }

  bool same_as(const FiniteRing& o) const noexcept { return d_ == o.d_; }
  explicit operator bool() const noexcept { return static_cast<bool>(d_); }

 private:
  std::shared_ptr<const detail::RingData> d_;
};

namespace detail {

inline FiniteRing make_ring(std::size_t size, std::uint32_t zero, std::uint32_t one,
                            std::string presentation, std::unique_ptr<RingBackend> backend) {
  if (zero == one)
    throw InvalidParameter("trivial ring rejected: zero equals one in " + presentation);
  auto d = std::make_shared<RingData>();
  d->size = size;
  d->zero = zero;
  d->one = one;
  d->presentation = std::move(presentation);
  d->backend = std::move(backend);
  return FiniteRing(std::move(d));
}

/// Copies any ring into Cayley tables.
inline FiniteRing materialize(const FiniteRing& r) {
  const std::size_t n = r.size();
  std::vector<std::uint16_t> add(n * n), mul(n * n), neg(n);
  std::vector<std::string> names(n);
  for (auto a : r.elements()) {
    neg[a.index] = static_cast<std::uint16_t>(r.neg(a).index);
    names[a.index] = r.name(a);
    for (auto b : r.elements()) {
      add[a.index * n + b.index] = static_cast<std::uint16_t>(r.add(a, b).index);
      mul[a.index * n + b.index] = static_cast<std::uint16_t>(r.mul(a, b).index);
    }
  }
  return make_ring(n, r.zero().index, r.one().index, r.presentation(),
                   std::make_unique<DenseRingBackend>(n, std::move(add), std::move(mul),
                                                      std::move(neg), std::move(names)));
}

inline FiniteRing maybe_materialize(FiniteRing r, const Limits& limits) {
  if (r.size() <= limits.dense_ring_cap && !r.is_dense()) return materialize(r);
  return r;
}

inline bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap,
                                 const std::string& what) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) throw CapacityError("ring_cap", cap, what + " is too large");
    r *= base;
  }
  if (r > cap) throw CapacityError("ring_cap", cap, what + " is too large");
  return r;
}

class ZmodBackend final : public RingBackend {
 public:
  explicit ZmodBackend(std::uint32_t k) : k_(k) {}
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return (a + b) % k_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % k_);
  }
  std::uint32_t neg(std::uint32_t a) const override { return a == 0 ? 0 : k_ - a; }
 private:
  std::uint32_t k_;
};

/// Finite-dimensional algebra over F_p given by structure constants on a
/// basis. Element index = sum_i c_i p^i (coefficient of basis i is digit i).
class AlgebraBackend final : public RingBackend {
 public:
  AlgebraBackend(std::uint32_t p, std::vector<std::string> basis_names,
                 std::vector<std::vector<std::uint32_t>> products)
      : p_(p), dim_(basis_names.size()), basis_names_(std::move(basis_names)),
        products_(std::move(products)) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    std::uint32_t r = 0, place = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_; b /= p_; place *= p_;
    }
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const override {
    std::uint32_t r = 0, place = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      r += ((p_ - a % p_) % p_) * place;
      a /= p_; place *= p_;
    }
    return r;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    auto ca = digits(a), cb = digits(b);
    std::vector<std::uint64_t> acc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ca[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (cb[j] == 0) continue;
        const auto& prod = products_[i * dim_ + j];
        std::uint64_t c = std::uint64_t{ca[i]} * cb[j];
        for (std::size_t t = 0; t < dim_; ++t)
          if (prod[t]) acc[t] += c * prod[t];
      }
    }
    std::uint32_t r = 0, place = 1;
    for (std::size_t t = 0; t < dim_; ++t) {
      r += static_cast<std::uint32_t>(acc[t] % p_) * place;
      place *= p_;
    }
    return r;
  }
  std::string name(std::uint32_t a) const override {
    if (a == 0) return "0";
    std::string out;
    auto c = digits(a);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      const auto& b = basis_names_[i];
      if (c[i] != 1) out += std::to_string(c[i]) + (b == "1" ? "" : b);
      else out += b;
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
  }

  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::string> basis_names_;
  std::vector<std::vector<std::uint32_t>> products_;  // dim x dim -> coefficient vector
};

inline std::uint32_t basis_index(std::uint32_t p, std::size_t i) {
  std::uint32_t r = 1;
  for (std::size_t t = 0; t < i; ++t) r *= p;
  return r;
}

/// n x n matrices over a base ring; row-major, entry (0,0) is the most
/// significant base-|base| digit of the index.
class MatrixBackend final : public RingBackend {
 public:
  MatrixBackend(FiniteRing base, std::size_t n) : base_(std::move(base)), n_(n), q_(base_.size()) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_.add({x[i]}, {y[i]}).index;
    return encode(x);
  }
  std::uint32_t neg(std::uint32_t a) const override {
    auto x = decode(a);
    for (auto& e : x) e = base_.neg({e}).index;
    return encode(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    auto x = decode(a), y = decode(b);
    std::vector<std::uint32_t> z(n_ * n_, base_.zero().index);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        RingElem acc = base_.zero();
        for (std::size_t t = 0; t < n_; ++t)
          acc = base_.add(acc, base_.mul({x[i * n_ + t]}, {y[t * n_ + j]}));
        z[i * n_ + j] = acc.index;
      }
    return encode(z);
  }
  std::string name(std::uint32_t a) const override {
    auto x = decode(a);
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) out += ",";
        out += base_.name({x[i * n_ + j]});
      }
      out += "]";
    }
    return out + "]";
  }

  std::vector<std::uint32_t> decode(std::uint32_t a) const {
    std::vector<std::uint32_t> x(n_ * n_);
    for (std::size_t i = x.size(); i-- > 0;) {
      x[i] = static_cast<std::uint32_t>(a % q_);
      a = static_cast<std::uint32_t>(a / q_);
    }
    return x;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& x) const {
    std::uint64_t r = 0;
    for (auto e : x) r = r * q_ + e;
    return static_cast<std::uint32_t>(r);
  }

 private:
  FiniteRing base_;
  std::size_t n_;
  std::size_t q_;
};

/// Arbitrary operations given as callables; used for products, Dorroh
/// extensions and quotients before they are materialized.
template <class Add, class Mul, class Neg, class Name>
class LambdaRingBackend final : public RingBackend {
 public:
  LambdaRingBackend(Add add, Mul mul, Neg neg, Name name)
      : add_(std::move(add)), mul_(std::move(mul)), neg_(std::move(neg)), name_(std::move(name)) {}
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return add_(a, b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override { return mul_(a, b); }
  std::uint32_t neg(std::uint32_t a) const override { return neg_(a); }
  std::string name(std::uint32_t a) const override { return name_(a); }
 private:
  Add add_; Mul mul_; Neg neg_; Name name_;
};

template <class Add, class Mul, class Neg, class Name>
std::unique_ptr<RingBackend> lambda_backend(Add add, Mul mul, Neg neg, Name name) {
  return std::make_unique<LambdaRingBackend<Add, Mul, Neg, Name>>(
      std::move(add), std::move(mul), std::move(neg), std::move(name));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors

inline FiniteRing ring_zmod(long long k, const Limits& limits = default_limits()) {
  if (k < 2) throw InvalidParameter("ring_zmod: modulus must be >= 2, got " + std::to_string(k));
  if (static_cast<std::size_t>(k) > limits.ring_cap)
    throw CapacityError("ring_cap", limits.ring_cap, "ring_zmod: modulus too large");
  auto r = detail::make_ring(static_cast<std::size_t>(k), 0, 1, "Z/" + std::to_string(k) + "Z",
                             std::make_unique<detail::ZmodBackend>(static_cast<std::uint32_t>(k)));
  return detail::maybe_materialize(r, limits);
}

/// M_n(base). Rule-based: products are computed on demand, never tabulated.
inline FiniteRing ring_matrix(const FiniteRing& base, long long n,
                              const Limits& limits = default_limits()) {
  if (n < 1) throw InvalidParameter("ring_matrix: n must be >= 1");
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t size = detail::checked_power(base.size(), nn * nn, limits.ring_cap,
                                                 "ring_matrix: |base|^(n^2)");
  auto backend = std::make_unique<detail::MatrixBackend>(base, nn);
  std::vector<std::uint32_t> zero(nn * nn, base.zero().index), one = zero;
  for (std::size_t i = 0; i < nn; ++i) one[i * nn + i] = base.one().index;
  auto z = backend->encode(zero), o = backend->encode(one);
  return detail::make_ring(size, z, o,
                           "M_" + std::to_string(n) + "(" + base.presentation() + ")",
                           std::move(backend));
}

namespace detail {
inline std::string poly_presentation(std::uint32_t p, const std::vector<long long>& f) {
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    auto c = static_cast<std::uint32_t>(((f[i] % p) + p) % p);
    if (c == 0) continue;
    std::string mono = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
    std::string term = (c == 1) ? mono : std::to_string(c) + (i == 0 ? "" : mono);
    if (!s.empty()) s += "+";
    s += term;
  }
  return "F_" + std::to_string(p) + "[x]/(" + s + ")";
}
}  // namespace detail

/// F_p[x]/(f) with basis 1, x, ..., x^(d-1); `f` lists coefficients from the
/// constant term upward and must be monic.
inline FiniteRing ring_poly_quotient(long long p, const std::vector<long long>& f,
                                     const Limits& limits = default_limits()) {
  if (!detail::is_prime_number(static_cast<std::uint64_t>(std::max(p, 0LL))))
    throw InvalidParameter("ring_poly_quotient: p must be prime, got " + std::to_string(p));
  const auto up = static_cast<std::uint32_t>(p);
  std::vector<std::uint32_t> coeffs;
  for (auto c : f) coeffs.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2) throw InvalidParameter("ring_poly_quotient: deg f must be >= 1");
  if (coeffs.back() != 1) throw InvalidParameter("ring_poly_quotient: f must be monic");
  const std::size_t d = coeffs.size() - 1;
  detail::checked_power(up, d, limits.ring_cap, "ring_poly_quotient: p^deg f");

  // x^(i+j) reduced modulo f, for 0 <= i, j < d.
  std::vector<std::vector<std::uint32_t>> powers;  // x^t for t < 2d-1
  for (std::size_t t = 0; t + 1 < 2 * d || t < d; ++t) {
    std::vector<std::uint32_t> v(d, 0);
    if (t < d) {
      v[t] = 1;
    } else {
      // x^t = x * x^(t-1); x^d = -(c_0 + ... + c_{d-1} x^{d-1})
      const auto& prev = powers[t - 1];
      std::uint32_t top = prev[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) v[i] = prev[i - 1];
      v[0] = 0;
      for (std::size_t i = 0; i < d; ++i)
        v[i] = (v[i] + up * up - (top * coeffs[i]) % up) % up;
    }
    powers.push_back(v);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  std::vector<std::vector<std::uint32_t>> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i * d + j] = powers[i + j];
  std::size_t size = detail::checked_power(up, d, limits.ring_cap, "ring_poly_quotient");
  auto r = detail::make_ring(size, 0, 1, detail::poly_presentation(up, f),
                             std::make_unique<detail::AlgebraBackend>(up, std::move(names),
                                                                      std::move(products)));
  return detail::maybe_materialize(r, limits);
}

/// Quotient of F_p[x_1..x_v] by a monomial ideal, with the standard monomials
/// as basis (graded, then lexicographically descending exponents). Every
/// variable must have a pure power among the generators so the quotient is
/// finite.
inline FiniteRing ring_monomial_quotient(long long p, const std::vector<std::string>& variables,
                                         const std::vector<std::vector<int>>& generators,
                                         const Limits& limits = default_limits()) {
  if (!detail::is_prime_number(static_cast<std::uint64_t>(std::max(p, 0LL))))
    throw InvalidParameter("ring_monomial_quotient: p must be prime");
  const std::size_t nv = variables.size();
  if (nv == 0) throw InvalidParameter("ring_monomial_quotient: need at least one variable");
  std::vector<int> bound(nv, -1);
  for (const auto& g : generators) {
    if (g.size() != nv) throw InvalidParameter("ring_monomial_quotient: generator arity mismatch");
    int nonzero = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      if (g[i] < 0) throw InvalidParameter("ring_monomial_quotient: negative exponent");
      if (g[i] > 0) { ++nonzero; which = i; }
    }
    if (nonzero == 0) throw InvalidParameter("ring_monomial_quotient: unit ideal gives the trivial ring");
    if (nonzero == 1 && (bound[which] < 0 || g[which] < bound[which])) bound[which] = g[which];
  }
  for (std::size_t i = 0; i < nv; ++i)
    if (bound[i] < 0)
      throw InvalidParameter("ring_monomial_quotient: quotient is infinite (no pure power of " +
                             variables[i] + ")");
  auto in_ideal = [&](const std::vector<int>& e) {
    for (const auto& g : generators) {
      bool divides = true;
      for (std::size_t i = 0; i < nv && divides; ++i) divides = g[i] <= e[i];
      if (divides) return true;
    }
    return false;
  };
  std::vector<std::vector<int>> basis;
  std::vector<int> e(nv, 0);
  while (true) {
    if (!in_ideal(e)) basis.push_back(e);
    std::size_t i = 0;
    while (i < nv) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == nv) break;
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
  });
  const std::size_t d = basis.size();
  const auto up = static_cast<std::uint32_t>(p);
  std::size_t size = detail::checked_power(up, d, limits.ring_cap, "ring_monomial_quotient");
  std::vector<std::string> names;
  for (const auto& m : basis) {
    std::string s;
    for (std::size_t i = 0; i < nv; ++i) {
      if (m[i] == 0) continue;
      s += variables[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    names.push_back(s.empty() ? "1" : s);
  }
  std::vector<std::vector<std::uint32_t>> products(d * d, std::vector<std::uint32_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<int> s(nv);
      for (std::size_t t = 0; t < nv; ++t) s[t] = basis[i][t] + basis[j][t];
      if (in_ideal(s)) continue;
      auto it = std::find(basis.begin(), basis.end(), s);
      products[i * d + j][static_cast<std::size_t>(it - basis.begin())] = 1;
    }
  std::string pres = "F_" + std::to_string(p) + "[";
  for (std::size_t i = 0; i < nv; ++i) pres += (i ? "," : "") + variables[i];
  pres += "]/(";
  for (std::size_t g = 0; g < generators.size(); ++g) {
    std::string s;
    for (std::size_t i = 0; i < nv; ++i) {
      if (generators[g][i] == 0) continue;
      s += variables[i];
      if (generators[g][i] > 1) s += "^" + std::to_string(generators[g][i]);
    }
    pres += (g ? "," : "") + s;
  }
  pres += ")";
  auto r = detail::make_ring(size, 0, 1, pres,
                             std::make_unique<detail::AlgebraBackend>(up, std::move(names),
                                                                      std::move(products)));
  return detail::maybe_materialize(r, limits);
}

struct Arrow {
  std::string name;
  int source = 1;  ///< vertices are numbered from 1
  int target = 1;
};

/// Arrows compose like functions: the product b*a of paths is "a, then b"
/// and is nonzero only when source(b) == target(a). So e_t * a = a = a * e_s
/// for an arrow a: s -> t.
struct Quiver {
  int vertices = 1;
  std::vector<Arrow> arrows;
};

namespace detail {
struct Path {
  int source, target;
  std::vector<std::size_t> arrows;  // in traversal order
  bool operator==(const Path&) const = default;
};
}  // namespace detail

/// Path algebra F_p Q of an acyclic quiver, with basis e_1..e_V, then the
/// arrows, then longer paths by length. Rule-based.
inline FiniteRing ring_path_algebra(const Quiver& q, long long p,
                                    const Limits& limits = default_limits()) {
  if (!detail::is_prime_number(static_cast<std::uint64_t>(std::max(p, 0LL))))
    throw InvalidParameter("ring_path_algebra: p must be prime");
  if (q.vertices < 1) throw InvalidParameter("ring_path_algebra: need at least one vertex");
  for (const auto& a : q.arrows)
    if (a.source < 1 || a.source > q.vertices || a.target < 1 || a.target > q.vertices)
      throw InvalidParameter("ring_path_algebra: arrow " + a.name + " has an unknown vertex");
  std::vector<detail::Path> paths;
  for (int v = 1; v <= q.vertices; ++v) paths.push_back({v, v, {}});
  std::vector<detail::Path> frontier;
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    frontier.push_back({q.arrows[i].source, q.arrows[i].target, {i}});
  const std::size_t max_len = static_cast<std::size_t>(q.vertices);
  while (!frontier.empty()) {
    if (frontier.front().arrows.size() > max_len)
      throw UnsupportedPredicate("ring_path_algebra: quiver has an oriented cycle (infinite dimension)");
    for (auto& f : frontier) paths.push_back(f);
    std::vector<detail::Path> next;
    for (const auto& f : frontier)
      for (std::size_t i = 0; i < q.arrows.size(); ++i)
        if (q.arrows[i].source == f.target) {
          auto g = f;
          g.arrows.push_back(i);
          g.target = q.arrows[i].target;
          next.push_back(g);
        }
    frontier = std::move(next);
  }
  const std::size_t d = paths.size();
  const auto up = static_cast<std::uint32_t>(p);
  std::size_t size = detail::checked_power(up, d, limits.ring_cap, "ring_path_algebra: p^dim");
  std::vector<std::string> names;
  for (const auto& path : paths) {
    if (path.arrows.empty()) { names.push_back("e" + std::to_string(path.source)); continue; }
    std::string s;
    for (std::size_t i = path.arrows.size(); i-- > 0;) {
      s += q.arrows[path.arrows[i]].name;
      if (i) s += "*";
    }
    names.push_back(s);
  }
  std::vector<std::vector<std::uint32_t>> products(d * d, std::vector<std::uint32_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& left = paths[i];   // applied second
      const auto& right = paths[j];  // applied first
      if (left.source != right.target) continue;
      detail::Path prod{right.source, left.target, right.arrows};
      prod.arrows.insert(prod.arrows.end(), left.arrows.begin(), left.arrows.end());
      auto it = std::find(paths.begin(), paths.end(), prod);
      products[i * d + j][static_cast<std::size_t>(it - paths.begin())] = 1;
    }
  std::uint32_t one = 0;
  for (int v = 0; v < q.vertices; ++v) one += detail::basis_index(up, static_cast<std::size_t>(v));
  std::string pres = "F_" + std::to_string(p) + "Q(" + std::to_string(q.vertices) + " vertices";
  for (const auto& a : q.arrows)
    pres += ", " + a.name + ":" + std::to_string(a.source) + "->" + std::to_string(a.target);
  pres += ")";
  return detail::make_ring(size, 0, one, pres,
                           std::make_unique<detail::AlgebraBackend>(up, std::move(names),
                                                                    std::move(products)));
}

/// Componentwise product; index = i_A * |B| + i_B.
inline FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b,
                               const Limits& limits = default_limits()) {
  const std::size_t nb = b.size();
  if (a.size() > limits.ring_cap / nb)
    throw CapacityError("ring_cap", limits.ring_cap, "ring_product too large");
  const auto n = static_cast<std::uint32_t>(nb);
  auto split = [n](std::uint32_t x) { return std::pair<std::uint32_t, std::uint32_t>{x / n, x % n}; };
  auto backend = detail::lambda_backend(
      [=](std::uint32_t x, std::uint32_t y) {
        auto [x1, x2] = split(x); auto [y1, y2] = split(y);
        return a.add({x1}, {y1}).index * n + b.add({x2}, {y2}).index;
      },
      [=](std::uint32_t x, std::uint32_t y) {
        auto [x1, x2] = split(x); auto [y1, y2] = split(y);
        return a.mul({x1}, {y1}).index * n + b.mul({x2}, {y2}).index;
      },
      [=](std::uint32_t x) {
        auto [x1, x2] = split(x);
        return a.neg({x1}).index * n + b.neg({x2}).index;
      },
      [=](std::uint32_t x) {
        auto [x1, x2] = split(x);
        return "(" + a.name({x1}) + "," + b.name({x2}) + ")";
      });
  auto r = detail::make_ring(a.size() * nb, a.zero().index * n + b.zero().index,
                             a.one().index * n + b.one().index,
                             "(" + a.presentation() + ")x(" + b.presentation() + ")",
                             std::move(backend));
  return detail::maybe_materialize(r, limits);
}

/// A finite ring without identity, given by Cayley tables over indices
/// 0..n-1 (zero must be index 0).
struct NonUnitalRingData {
  std::vector<std::vector<std::uint32_t>> add;
  std::vector<std::vector<std::uint32_t>> mul;
  std::vector<std::string> names;  ///< optional
};

namespace detail {
inline std::optional<std::string> non_unital_violation(const NonUnitalRingData& a) {
  const std::size_t n = a.add.size();
  if (n == 0) return "empty table";
  if (a.mul.size() != n) return "mul table has wrong size";
  for (std::size_t i = 0; i < n; ++i) {
    if (a.add[i].size() != n || a.mul[i].size() != n) return "table row " + std::to_string(i) + " has wrong length";
    for (std::size_t j = 0; j < n; ++j)
      if (a.add[i][j] >= n || a.mul[i][j] >= n) return "entry out of range";
  }
  for (std::size_t x = 0; x < n; ++x)
    if (a.add[0][x] != x || a.add[x][0] != x) return "index 0 is not the additive identity";
  for (std::size_t x = 0; x < n; ++x) {
    bool has_neg = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (a.add[x][y] != a.add[y][x]) return "addition not commutative";
      if (a.add[x][y] == 0) has_neg = true;
    }
    if (!has_neg) return "element " + std::to_string(x) + " has no additive inverse";
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (a.add[a.add[x][y]][z] != a.add[x][a.add[y][z]]) return "addition not associative";
        if (a.mul[a.mul[x][y]][z] != a.mul[x][a.mul[y][z]]) return "multiplication not associative";
        if (a.mul[x][a.add[y][z]] != a.add[a.mul[x][y]][a.mul[x][z]]) return "left distributivity fails";
        if (a.mul[a.add[x][y]][z] != a.add[a.mul[x][z]][a.mul[y][z]]) return "right distributivity fails";
      }
  return std::nullopt;
}
}  // namespace detail

/// Dorroh extension A x Z/mZ with (a,n)(b,k) = (ab + ak + nb, nk). The
/// integer action needs m*A = 0 to be well defined. Index = a*m + n.
inline FiniteRing ring_dorroh(const NonUnitalRingData& a, long long m,
                              const Limits& limits = default_limits()) {
  if (m < 2) throw InvalidParameter("ring_dorroh: modulus must be >= 2");
  if (auto bad = detail::non_unital_violation(a)) throw InvalidArgument("ring_dorroh: " + *bad);
  const std::size_t n = a.add.size();
  const auto um = static_cast<std::uint32_t>(m);
  if (n > limits.ring_cap / um) throw CapacityError("ring_cap", limits.ring_cap, "ring_dorroh too large");
  // scalar[t][x] = t*x in (A,+)
  std::vector<std::vector<std::uint32_t>> scalar(um, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t t = 1; t < um; ++t)
    for (std::size_t x = 0; x < n; ++x) scalar[t][x] = a.add[scalar[t - 1][x]][x];
  for (std::size_t x = 0; x < n; ++x)
    if (a.add[scalar[um - 1][x]][x] != 0)
      throw InvalidArgument("ring_dorroh: m*A != 0, so Z/" + std::to_string(m) +
                            "Z does not act on A (element " + std::to_string(x) + ")");
  std::vector<std::uint32_t> negs(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a.add[x][y] == 0) negs[x] = static_cast<std::uint32_t>(y);
  auto names = a.names;
  if (names.size() != n) {
    names.clear();
    for (std::size_t x = 0; x < n; ++x) names.push_back(std::to_string(x));
  }
  auto add = a.add; auto mul = a.mul;
  auto backend = detail::lambda_backend(
      [=](std::uint32_t x, std::uint32_t y) {
        return add[x / um][y / um] * um + (x % um + y % um) % um;
      },
      [=](std::uint32_t x, std::uint32_t y) {
        std::uint32_t xa = x / um, xn = x % um, ya = y / um, yn = y % um;
        std::uint32_t first = add[add[mul[xa][ya]][scalar[yn][xa]]][scalar[xn][ya]];
        return first * um + (xn * yn) % um;
      },
      [=](std::uint32_t x) { return negs[x / um] * um + (um - x % um) % um; },
      [=](std::uint32_t x) { return "(" + names[x / um] + "," + std::to_string(x % um) + ")"; });
  auto r = detail::make_ring(n * um, 0, 1, "Dorroh(A," + std::to_string(m) + ")", std::move(backend));
  return detail::maybe_materialize(r, limits);
}

/// Explicit Cayley tables (JSON input). Zero and one are located from the
/// tables; axioms are checked exhaustively.
inline FiniteRing ring_from_tables(const std::vector<std::vector<std::uint32_t>>& add,
                            const std::vector<std::vector<std::uint32_t>>& mul,
                            const std::vector<std::string>& names = {},
                            const Limits& limits = default_limits());

/// S/I for a two-sided ideal I given as an element set. Cosets are
/// represented by their minimum-index member, in ascending order.
inline FiniteRing quotient_ring(const FiniteRing& s, const ElementSet& ideal,
                                const Limits& limits = default_limits()) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> class_of(n, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (auto x : s.elements()) {
    if (class_of[x.index] != UINT32_MAX) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x.index);
    ideal.for_each([&](std::uint32_t i) { class_of[s.add(x, {i}).index] = c; });
  }
  if (reps.size() < 2)
    throw InvalidParameter("quotient_ring: the ideal is the whole ring (trivial quotient)");
  auto backend = detail::lambda_backend(
      [=](std::uint32_t a, std::uint32_t b) { return class_of[s.add({reps[a]}, {reps[b]}).index]; },
      [=](std::uint32_t a, std::uint32_t b) { return class_of[s.mul({reps[a]}, {reps[b]}).index]; },
      [=](std::uint32_t a) { return class_of[s.neg({reps[a]}).index]; },
      [=](std::uint32_t a) { return "[" + s.name({reps[a]}) + "]"; });
  auto r = detail::make_ring(reps.size(), class_of[s.zero().index], class_of[s.one().index],
                             s.presentation() + "/I", std::move(backend));
  return detail::maybe_materialize(r, limits);
}

// ---------------------------------------------------------------------------
// Axioms and elementary predicates

struct AxiomCheck {
  bool exhaustive = false;                ///< false when the triple count exceeded the cap
  std::optional<std::string> violation;   ///< description with witness
  bool ok() const { return !violation.has_value(); }
};

inline AxiomCheck check_ring_axioms(const FiniteRing& r, const Limits& limits = default_limits()) {
  AxiomCheck out;
  const std::size_t n = r.size();
  if (n * n > limits.axiom_check_cap / n) return out;
  out.exhaustive = true;
  auto nm = [&](RingElem e) { return r.name(e); };
  for (auto a : r.elements()) {
    if (r.add(a, r.zero()) != a) { out.violation = "zero is not additive identity at " + nm(a); return out; }
    if (r.add(a, r.neg(a)) != r.zero()) { out.violation = "neg fails at " + nm(a); return out; }
    if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) { out.violation = "one is not an identity at " + nm(a); return out; }
    for (auto b : r.elements()) {
      if (r.add(a, b) != r.add(b, a)) { out.violation = "addition not commutative at (" + nm(a) + "," + nm(b) + ")"; return out; }
      for (auto c : r.elements()) {
        auto w = "(" + nm(a) + "," + nm(b) + "," + nm(c) + ")";
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) { out.violation = "addition not associative at " + w; return out; }
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) { out.violation = "multiplication not associative at " + w; return out; }
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) { out.violation = "left distributivity fails at " + w; return out; }
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) { out.violation = "right distributivity fails at " + w; return out; }
      }
    }
  }
  return out;
}

inline FiniteRing ring_from_tables(const std::vector<std::vector<std::uint32_t>>& add,
                                   const std::vector<std::vector<std::uint32_t>>& mul,
                                   const std::vector<std::string>& names, const Limits& limits) {
  const std::size_t n = add.size();
  if (n < 2) throw InvalidArgument("ring_from_tables: need at least two elements");
  if (n > limits.dense_ring_cap)
    throw CapacityError("dense_ring_cap", limits.dense_ring_cap, "ring_from_tables");
  if (mul.size() != n) throw InvalidArgument("ring_from_tables: mul table has wrong size");
  std::vector<std::uint16_t> a(n * n), m(n * n), ng(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw InvalidArgument("ring_from_tables: row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (add[i][j] >= n || mul[i][j] >= n) throw InvalidArgument("ring_from_tables: entry out of range");
      a[i * n + j] = static_cast<std::uint16_t>(add[i][j]);
      m[i * n + j] = static_cast<std::uint16_t>(mul[i][j]);
    }
  }
  std::optional<std::uint32_t> zero, one;
  for (std::uint32_t i = 0; i < n && !zero; ++i) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = add[i][x] == x && add[x][i] == x;
    if (ok) zero = i;
  }
  for (std::uint32_t i = 0; i < n && !one; ++i) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mul[i][x] == x && mul[x][i] == x;
    if (ok) one = i;
  }
  if (!zero) throw InvalidArgument("ring_from_tables: no additive identity");
  if (!one) throw InvalidArgument("ring_from_tables: no multiplicative identity (rings must be unital)");
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      if (add[x][y] == *zero) { ng[x] = static_cast<std::uint16_t>(y); found = true; }
    if (!found) throw InvalidArgument("ring_from_tables: element " + std::to_string(x) + " has no negative");
  }
  auto r = detail::make_ring(n, *zero, *one, "tables(" + std::to_string(n) + ")",
                             std::make_unique<detail::DenseRingBackend>(n, std::move(a), std::move(m),
                                                                        std::move(ng), names));
  auto check = check_ring_axioms(r, limits);
  if (!check.ok()) throw InvalidArgument("ring_from_tables: " + *check.violation);
  return r;
}

inline bool is_commutative(const FiniteRing& r) {
  for (auto a : r.elements())
    for (auto b : r.elements())
      if (b.index > a.index && r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

/// u is a unit iff left multiplication by u is bijective; on a finite set
/// that is surjectivity, i.e. 1 lies in uR.
inline ElementSet ring_units(const FiniteRing& r) {
  ElementSet units(r.size());
  for (auto u : r.elements()) {
    if (units.contains(u.index)) continue;
    for (auto x : r.elements())
      if (r.mul(u, x) == r.one()) {
        units.insert(u.index);
        units.insert(x.index);
        break;
      }
  }
  return units;
}

/// Smallest k >= 1 with a^k = 0, if any. Powers are walked until they repeat.
inline std::optional<std::uint32_t> ring_nilpotency_index(const FiniteRing& r, RingElem a) {
  RingElem x = a;
  for (std::uint32_t k = 1; k <= r.size(); ++k) {
    if (x == r.zero()) return k;
    x = r.mul(x, a);
  }
  return std::nullopt;
}

enum class Sidedness { left, two_sided };

/// A left or two-sided ideal as a set of ring indices.
struct Ideal {
  FiniteRing ring;
  ElementSet elements;
  Sidedness sidedness = Sidedness::left;

  std::size_t size() const { return elements.size(); }
  bool contains(RingElem a) const { return elements.contains(a.index); }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring.same_as(b.ring) && a.elements == b.elements && a.sidedness == b.sidedness;
  }
};

}  // namespace nilmod
