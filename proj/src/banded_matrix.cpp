#include "qf/banded_matrix.hpp"

#include <set>
#include <sstream>

#include "qf/error.hpp"

namespace qf {

IndexPoly::IndexPoly(unsigned m, std::vector<TruncPoly> coefficients) : m_(m), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (c.order() != m_) throw DomainError("IndexPoly: coefficient order mismatch");
  normalize();
}

IndexPoly IndexPoly::constant(const TruncPoly& c) { return IndexPoly(c.order(), {c}); }

IndexPoly IndexPoly::linear(unsigned m, const Scalar& a, const TruncPoly& b) {
  return IndexPoly(m, {b, TruncPoly::constant(m, a)});
}

IndexPoly IndexPoly::compose(const Polynomial& f, const IndexPoly& inner) {
  IndexPoly out(inner.m_);
  const auto& c = f.coefficients();
  for (std::size_t n = c.size(); n-- > 0;)
    out = out * inner + IndexPoly::constant(TruncPoly::constant(inner.m_, c[n]));
  return out;
}

void IndexPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TruncPoly IndexPoly::eval(const Scalar& j) const {
  TruncPoly acc(m_);
  for (std::size_t n = coeffs_.size(); n-- > 0;) acc = acc * j + coeffs_[n];
  return acc;
}

IndexPoly IndexPoly::shift(const Scalar& a) const {
  IndexPoly out(m_);
  const IndexPoly lin = linear(m_, 1, TruncPoly::constant(m_, a));
  for (std::size_t n = coeffs_.size(); n-- > 0;) out = out * lin + constant(coeffs_[n]);
  return out;
}

IndexPoly& IndexPoly::operator+=(const IndexPoly& o) {
  if (o.m_ != m_) throw DomainError("IndexPoly: order mismatch");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), TruncPoly(m_));
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  normalize();
  return *this;
}

IndexPoly& IndexPoly::operator-=(const IndexPoly& o) { return *this += -o; }

IndexPoly IndexPoly::operator-() const {
  IndexPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IndexPoly operator*(const IndexPoly& a, const IndexPoly& b) {
  if (a.m_ != b.m_) throw DomainError("IndexPoly: order mismatch");
  if (a.is_zero() || b.is_zero()) return IndexPoly(a.m_);
  std::vector<TruncPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1, TruncPoly(a.m_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IndexPoly(a.m_, std::move(c));
}

IndexPoly operator*(const IndexPoly& a, const TruncPoly& c) { return a * IndexPoly::constant(c); }

std::string IndexPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n].is_zero()) continue;
    if (out.tellp() > 0) out << " + ";
    out << "[" << coeffs_[n].str() << "]";
    if (n > 0) out << "*j^" << n;
  }
  return out.str();
}

BandedMatrix::BandedMatrix(unsigned m) : m_(m), central_(m) {}

BandedMatrix BandedMatrix::diagonal(long k, const IndexPoly& p) {
  BandedMatrix a(p.order());
  a.add_diagonal(k, p);
  return a;
}

BandedMatrix BandedMatrix::unit(long i, long j, const TruncPoly& f) {
  BandedMatrix a(f.order());
  a.add_entry(i, j, f);
  return a;
}

BandedMatrix BandedMatrix::central_element(const TruncPoly& c) {
  BandedMatrix a(c.order());
  a.central_ = c;
  return a;
}

BandedMatrix BandedMatrix::noncentral() const {
  BandedMatrix a = *this;
  a.central_ = TruncPoly(m_);
  return a;
}

void BandedMatrix::check_order(const BandedMatrix& o) const {
  if (o.m_ != m_)
    throw DomainError("BandedMatrix: truncation orders differ (" + std::to_string(m_) + " vs " +
                      std::to_string(o.m_) + ")");
}

void BandedMatrix::add_diagonal(long k, const IndexPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = diagonals_.emplace(k, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) diagonals_.erase(it);
  }
}

void BandedMatrix::add_entry(long i, long j, const TruncPoly& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = overlay_.emplace(Index{i, j}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) overlay_.erase(it);
  }
}

TruncPoly BandedMatrix::entry(long i, long j) const {
  TruncPoly v(m_);
  if (auto it = diagonals_.find(j - i); it != diagonals_.end()) v += it->second.eval(j);
  if (auto it = overlay_.find({i, j}); it != overlay_.end()) v += it->second;
  return v;
}

std::vector<long> BandedMatrix::weights() const {
  std::set<long> w;
  for (const auto& [k, p] : diagonals_) w.insert(k);
  for (const auto& [ij, v] : overlay_) w.insert(ij.second - ij.first);
  return {w.begin(), w.end()};
}

BandedMatrix& BandedMatrix::operator+=(const BandedMatrix& o) {
  check_order(o);
  for (const auto& [k, p] : o.diagonals_) add_diagonal(k, p);
  for (const auto& [ij, v] : o.overlay_) add_entry(ij.first, ij.second, v);
  central_ += o.central_;
  return *this;
}

BandedMatrix& BandedMatrix::operator-=(const BandedMatrix& o) {
  BandedMatrix neg = o;
  neg *= TruncPoly::constant(m_, -1);
  return *this += neg;
}

BandedMatrix& BandedMatrix::operator*=(const TruncPoly& c) {
  BandedMatrix out(m_);
  for (const auto& [k, p] : diagonals_) out.add_diagonal(k, p * c);
  for (const auto& [ij, v] : overlay_) out.add_entry(ij.first, ij.second, v * c);
  out.central_ = central_ * c;
  return *this = std::move(out);
}

BandedMatrix operator*(const BandedMatrix& a, const BandedMatrix& b) {
  a.check_order(b);
  BandedMatrix out(a.m_);
  // (j-k, j) x (j, j+l) -> (j-k, j+l); new column index J = j + l.
  for (const auto& [k, p] : a.diagonals_)
    for (const auto& [l, q] : b.diagonals_) out.add_diagonal(k + l, p.shift(-Scalar(l)) * q);
  for (const auto& [k, p] : a.diagonals_)
    for (const auto& [ij, v] : b.overlay_) out.add_entry(ij.first - k, ij.second, p.eval(ij.first) * v);
  for (const auto& [ij, v] : a.overlay_)
    for (const auto& [l, q] : b.diagonals_) out.add_entry(ij.first, ij.second + l, v * q.eval(ij.second + l));
  for (const auto& [ij, v] : a.overlay_)
    for (const auto& [kl, w] : b.overlay_)
      if (ij.second == kl.first) out.add_entry(ij.first, kl.second, v * w);
  return out;
}

std::string BandedMatrix::str() const {
  std::ostringstream out;
  for (const auto& [k, p] : diagonals_) out << "diag " << k << ": " << p.str() << "\n";
  for (const auto& [ij, v] : overlay_) out << "E(" << ij.first << "," << ij.second << "): " << v.str() << "\n";
  out << "central: " << central_.str();
  return out.str();
}

TruncPoly cocycle_C(const BandedMatrix& a, const BandedMatrix& b) {
  if (a.order() != b.order()) throw DomainError("cocycle_C: truncation orders differ");
  TruncPoly sum(a.order());
  for (long k : a.weights()) {
    if (k > 0) {
      for (long i = 1 - k; i <= 0; ++i) sum += a.entry(i, i + k) * b.entry(i + k, i);
    } else if (k < 0) {
      for (long i = 1; i <= -k; ++i) sum -= a.entry(i, i + k) * b.entry(i + k, i);
    }
  }
  return sum;
}

BandedMatrix sb_bracket_hat(const BandedMatrix& a, const BandedMatrix& b) {
  BandedMatrix out = a * b - b * a;
  return out + BandedMatrix::central_element(cocycle_C(a, b));
}

BandedMatrix nu_shift(const BandedMatrix& a, long r) {
  BandedMatrix out = BandedMatrix::central_element(a.central());
  for (const auto& [k, p] : a.diagonals()) out += BandedMatrix::diagonal(k, p.shift(-Scalar(r)));
  for (const auto& [ij, v] : a.overlay()) out += BandedMatrix::unit(ij.first + r, ij.second + r, v);
  return out;
}

}  // namespace qf
