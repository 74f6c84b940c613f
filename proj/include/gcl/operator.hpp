#pragma once

// Dense d x d operators with exact cyclotomic entries. An antiunitary is
// stored as (M, true) and acts as v -> M conj(v).

#include <complex>
#include <cstddef>
#include <vector>

#include "gcl/cyclo.hpp"

namespace gcl {

using Vector = std::vector<CycloScalar>;

class Operator {
 public:
  Operator(const CycloRing& r, std::size_t dim, bool antiunitary = false)
      : ring_(&r), dim_(dim), anti_(antiunitary), e_(dim * dim, CycloScalar(r)) {}

  static Operator identity(const CycloRing& r, std::size_t dim) {
    Operator op(r, dim);
    for (std::size_t i = 0; i < dim; ++i) op.set(i, i, CycloScalar(r, Integer(1)));
    return op;
  }

  const CycloRing& ring() const { return *ring_; }
  std::size_t dim() const { return dim_; }
  bool antiunitary() const { return anti_; }
  void set_antiunitary(bool f) { anti_ = f; }

  const CycloScalar& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, CycloScalar v) { e_[i * dim_ + j] = std::move(v); }

  /// Composition (M1, f1)(M2, f2) = (M1 conj^{f1}(M2), f1 xor f2).
  friend Operator compose(const Operator& x, const Operator& y) {
    if (x.dim_ != y.dim_) throw DomainError("operator dimension mismatch");
    if (x.ring_ != y.ring_) throw DomainError("operators over different rings");
    const std::size_t n = x.dim_;
    const Operator yc = x.anti_ ? y.conj_entries() : Operator();
    const Operator& rhs = x.anti_ ? yc : y;
    // nonzero pattern of each row of the right factor
    std::vector<std::vector<std::size_t>> nz(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!rhs.at(k, j).is_zero()) nz[k].push_back(j);
    Operator out(*x.ring_, n, x.anti_ != y.anti_);
    std::vector<CycloAccumulator> acc;
    for (std::size_t i = 0; i < n; ++i) {
      acc.assign(n, CycloAccumulator(*x.ring_));
      for (std::size_t k = 0; k < n; ++k) {
        const CycloScalar& a = x.at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j : nz[k]) acc[j].add_product(a, rhs.at(k, j));
      }
      for (std::size_t j = 0; j < n; ++j) out.set(i, j, acc[j].result());
    }
    return out;
  }
  friend Operator operator*(const Operator& x, const Operator& y) { return compose(x, y); }

  /// Inverse for (anti)unitaries: (M, 0) -> (M^dagger, 0); (M, 1) -> (M^T, 1).
  Operator adjoint() const {
    Operator out(*ring_, dim_, anti_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out.set(j, i, anti_ ? at(i, j) : at(i, j).conj());
    return out;
  }

  /// Scalar multiple c * U (c applied after U).
  Operator scaled(const CycloScalar& c) const {
    Operator out = *this;
    for (auto& v : out.e_)
      if (!v.is_zero()) v = c * v;
    return out;
  }

  friend Operator operator+(const Operator& x, const Operator& y) {
    if (x.dim_ != y.dim_ || x.anti_ != y.anti_) throw DomainError("cannot add these operators");
    Operator out = x;
    for (std::size_t k = 0; k < out.e_.size(); ++k) out.e_[k] += y.e_[k];
    return out;
  }

  CycloScalar trace() const {
    if (anti_) throw DomainError("trace of an antilinear operator");
    CycloScalar t(*ring_);
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != dim_) throw DomainError("vector dimension mismatch");
    Vector out(dim_, CycloScalar(*ring_));
    for (std::size_t i = 0; i < dim_; ++i) {
      CycloAccumulator acc(*ring_);
      for (std::size_t j = 0; j < dim_; ++j) acc.add_product(at(i, j), anti_ ? v[j].conj() : v[j]);
      out[i] = acc.result();
    }
    return out;
  }

  bool is_identity() const {
    if (anti_) return false;
    const CycloScalar one(*ring_, Integer(1));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (i == j ? !(at(i, j) == one) : !at(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const Operator& x, const Operator& y) {
    return x.dim_ == y.dim_ && x.anti_ == y.anti_ && x.ring_ == y.ring_ && x.e_ == y.e_;
  }

  /// Entry-wise complex conjugate of the matrix part (flag unchanged).
  Operator conj_entries() const {
    Operator out = *this;
    for (auto& v : out.e_)
      if (!v.is_zero()) v = v.conj();
    return out;
  }

 private:
  Operator() = default;

  const CycloRing* ring_ = nullptr;
  std::size_t dim_ = 0;
  bool anti_ = false;
  std::vector<CycloScalar> e_;
};

/// Inner product <a|b> (conjugate-linear in a).
inline CycloScalar inner(const Vector& a, const Vector& b) {
  if (a.empty()) throw DomainError("empty vector");
  CycloAccumulator acc(a.front().ring());
  for (std::size_t k = 0; k < a.size(); ++k) acc.add_product(a[k].conj(), b[k]);
  return acc.result();
}

/// Float rendering of the matrix part, row-major.
inline std::vector<std::complex<double>> to_complex_matrix(const Operator& op) {
  std::vector<std::complex<double>> out;
  out.reserve(op.dim() * op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i)
    for (std::size_t j = 0; j < op.dim(); ++j) out.push_back(op.at(i, j).to_complex());
  return out;
}

}  // namespace gcl
