#pragma once

#include <map>
#include <string>
#include <vector>

#include "qf/polynomial.hpp"
#include "qf/scalar.hpp"

namespace qf {

/// Element sum_k t^k f_k(D) + central*C of the (centrally extended)
/// algebra of regular differential operators on the circle, D = t d/dt.
class DiffOp {
 public:
  using TermMap = std::map<long, Polynomial>;

  DiffOp() = default;
  explicit DiffOp(TermMap terms, Scalar central = 0);

  /// t^k f(D)
  static DiffOp term(long k, const Polynomial& f);
  static DiffOp central_element(const Scalar& c = 1);
  /// L_k^l = -t^k D^l
  static DiffOp L(long k, unsigned l);
  /// J_k^l = -t^{k+l} d_t^l = -t^k D(D-1)...(D-l+1)
  static DiffOp J(long k, unsigned l);

  const TermMap& terms() const noexcept { return terms_; }
  const Scalar& central() const noexcept { return central_; }
  /// Cofactor at weight k (zero when absent).
  Polynomial part(long k) const;
  std::vector<long> weights() const;
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }
  /// Same element with the central coefficient dropped.
  DiffOp noncentral() const { return DiffOp(terms_); }

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Scalar& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Scalar& c) { return a *= c; }
  friend DiffOp operator*(const Scalar& c, DiffOp a) { return a *= c; }
  DiffOp operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  std::string str() const;

 private:
  void add_term(long k, const Polynomial& f);
  TermMap terms_;
  Scalar central_;
};

/// Associative product; t^r f(D) t^s g(D) = t^{r+s} f(D+s) g(D).
/// Throws DomainError when either factor has a central part.
DiffOp compose(const DiffOp& a, const DiffOp& b);

/// Commutator of the non-central parts; the result has zero central part.
DiffOp bracket(const DiffOp& a, const DiffOp& b);

/// Psi(t^r f, t^{-r} g) = sum_{m=-r}^{-1} f(m) g(m+r) for r > 0, extended
/// bilinearly and antisymmetrically.
Scalar psi_cocycle(const DiffOp& a, const DiffOp& b);

/// bracket(a, b) + psi_cocycle(a, b) C
DiffOp bracket_hat(const DiffOp& a, const DiffOp& b);

/// The unique weight of a homogeneous element; C and 0 have weight 0.
/// Throws DomainError listing the weights present otherwise.
long weight_of(const DiffOp& a);

}  // namespace qf
