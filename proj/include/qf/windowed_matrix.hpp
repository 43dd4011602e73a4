#pragma once

#include <string>
#include <vector>

#include "qf/banded_matrix.hpp"
#include "qf/trunc_poly.hpp"

namespace qf {

/// Dense block of a matrix over R_m on the indices [-W, W+1].
class WindowedMatrix {
 public:
  WindowedMatrix(unsigned m, unsigned half_width);

  static WindowedMatrix from_banded(const BandedMatrix& a, unsigned half_width);

  unsigned order() const noexcept { return m_; }
  unsigned half_width() const noexcept { return w_; }
  long lo() const { return -static_cast<long>(w_); }
  long hi() const { return static_cast<long>(w_) + 1; }
  bool contains(long i, long j) const { return i >= lo() && i <= hi() && j >= lo() && j <= hi(); }

  const TruncPoly& at(long i, long j) const;
  TruncPoly& at(long i, long j);
  /// Entry, or zero when (i, j) lies outside the window.
  TruncPoly get(long i, long j) const;
  bool is_zero() const;
  /// Nonzero entries in the first or last row or column.
  bool touches_boundary() const;
  /// Copy with every entry outside [-W+trim, W+1-trim] zeroed.
  WindowedMatrix trimmed(unsigned trim) const;

  WindowedMatrix& operator+=(const WindowedMatrix& o);
  WindowedMatrix& operator-=(const WindowedMatrix& o);
  friend WindowedMatrix operator+(WindowedMatrix a, const WindowedMatrix& b) { return a += b; }
  friend WindowedMatrix operator-(WindowedMatrix a, const WindowedMatrix& b) { return a -= b; }
  /// Product of the window blocks; only exact away from the edges.
  friend WindowedMatrix operator*(const WindowedMatrix& a, const WindowedMatrix& b);
  friend bool operator==(const WindowedMatrix&, const WindowedMatrix&) = default;

  std::string str() const;

 private:
  std::size_t slot(long i, long j) const;
  unsigned m_;
  unsigned w_;
  std::vector<TruncPoly> entries_;
};

WindowedMatrix window(const BandedMatrix& a, unsigned half_width);

/// AB - BA on the window (exact on the inner window shrunk by the bandwidth).
WindowedMatrix window_bracket(const WindowedMatrix& a, const WindowedMatrix& b);

enum class TVariant { Half, Integer };
enum class TDirection { Forward, Inverse };

/// Entrywise E_{ij} -> (d(j)/d(i)) E_{ij}, d the cumulative product of
/// (u - (k+1/2)) (half) or (u - k), k != 0 (integer).
WindowedMatrix t_conjugate(const WindowedMatrix& a, TVariant variant, TDirection direction);

enum class WindowInvolution { WPlus, WMinus, RhoPlus, RhoMinus };

/// rho(f E_ij) = (-/+1)^{i+j} f(-u) E_{1-j,1-i};
/// w(f E_ij) = (+/-1)^{i+j} (-u+1/2-i)(-u+1/2-j)^{-1} f(-u) E_{1-j,1-i}.
WindowedMatrix involution_apply(const WindowedMatrix& a, WindowInvolution which);

enum class AlgebraTag { Gl, C, D, LPlus, LMinus };

std::string tag_name(AlgebraTag tag);
AlgebraTag parse_tag(const std::string& name);

struct MembershipOptions {
  /// Refuse to decide when nonzero entries touch the window boundary.
  bool strict = true;
  /// Only pairs inside [-W+trim, W+1-trim] are compared.
  unsigned trim = 0;
};

struct MembershipResult {
  bool member = true;
  /// First violated identity, empty when member.
  std::string violation;
};

/// Checks the defining identities of the subalgebra pairwise on the window.
/// Throws DomainError (inconclusive) in strict mode when the support
/// reaches the boundary.
MembershipResult classical_membership(const WindowedMatrix& a, AlgebraTag tag,
                                      const MembershipOptions& options = {});

}  // namespace qf
