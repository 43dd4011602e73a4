#include "qf/windowed_matrix.hpp"

#include <sstream>

#include "qf/error.hpp"

namespace qf {

WindowedMatrix::WindowedMatrix(unsigned m, unsigned half_width)
    : m_(m), w_(half_width), entries_(static_cast<std::size_t>(2 * half_width + 2) * (2 * half_width + 2), TruncPoly(m)) {}

std::size_t WindowedMatrix::slot(long i, long j) const {
  if (!contains(i, j))
    throw DomainError("WindowedMatrix: index (" + std::to_string(i) + "," + std::to_string(j) + ") outside window");
  const std::size_t n = 2 * w_ + 2;
  return static_cast<std::size_t>(i - lo()) * n + static_cast<std::size_t>(j - lo());
}

const TruncPoly& WindowedMatrix::at(long i, long j) const { return entries_[slot(i, j)]; }
TruncPoly& WindowedMatrix::at(long i, long j) { return entries_[slot(i, j)]; }

TruncPoly WindowedMatrix::get(long i, long j) const { return contains(i, j) ? at(i, j) : TruncPoly(m_); }

WindowedMatrix WindowedMatrix::from_banded(const BandedMatrix& a, unsigned half_width) {
  WindowedMatrix out(a.order(), half_width);
  for (long i = out.lo(); i <= out.hi(); ++i)
    for (long j = out.lo(); j <= out.hi(); ++j) out.at(i, j) = a.entry(i, j);
  return out;
}

WindowedMatrix window(const BandedMatrix& a, unsigned half_width) { return WindowedMatrix::from_banded(a, half_width); }

bool WindowedMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool WindowedMatrix::touches_boundary() const {
  for (long t = lo(); t <= hi(); ++t)
    if (!at(lo(), t).is_zero() || !at(hi(), t).is_zero() || !at(t, lo()).is_zero() || !at(t, hi()).is_zero())
      return true;
  return false;
}

WindowedMatrix WindowedMatrix::trimmed(unsigned trim) const {
  WindowedMatrix out = *this;
  const long a = lo() + static_cast<long>(trim), b = hi() - static_cast<long>(trim);
  for (long i = lo(); i <= hi(); ++i)
    for (long j = lo(); j <= hi(); ++j)
      if (i < a || i > b || j < a || j > b) out.at(i, j) = TruncPoly(m_);
  return out;
}

WindowedMatrix& WindowedMatrix::operator+=(const WindowedMatrix& o) {
  if (o.m_ != m_ || o.w_ != w_) throw DomainError("WindowedMatrix: shape mismatch");
  for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] += o.entries_[n];
  return *this;
}

WindowedMatrix& WindowedMatrix::operator-=(const WindowedMatrix& o) {
  if (o.m_ != m_ || o.w_ != w_) throw DomainError("WindowedMatrix: shape mismatch");
  for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] -= o.entries_[n];
  return *this;
}

WindowedMatrix operator*(const WindowedMatrix& a, const WindowedMatrix& b) {
  if (a.m_ != b.m_ || a.w_ != b.w_) throw DomainError("WindowedMatrix: shape mismatch");
  WindowedMatrix out(a.m_, a.w_);
  for (long i = a.lo(); i <= a.hi(); ++i)
    for (long l = a.lo(); l <= a.hi(); ++l) {
      const TruncPoly& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (long j = a.lo(); j <= a.hi(); ++j) {
        const TruncPoly& y = b.at(l, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  return out;
}

WindowedMatrix window_bracket(const WindowedMatrix& a, const WindowedMatrix& b) { return a * b - b * a; }

std::string WindowedMatrix::str() const {
  std::ostringstream out;
  for (long i = lo(); i <= hi(); ++i)
    for (long j = lo(); j <= hi(); ++j)
      if (!at(i, j).is_zero()) out << "E(" << i << "," << j << "): " << at(i, j).str() << "\n";
  return out.str();
}

namespace {

// Single factor of the cumulative product at index k.
TruncPoly t_factor(unsigned m, long k, TVariant variant) {
  const Scalar shift = variant == TVariant::Half ? Scalar(k) + Scalar(1, 2) : Scalar(k);
  return TruncPoly::shifted_u(m, -shift);
}

// d(n) with d(0) = 1 and d(j)/d(i) the product over k = i..j-1 of the
// factors (factor at k = 0 skipped for the integer variant).
TruncPoly t_cumulative(unsigned m, long n, TVariant variant) {
  TruncPoly d = TruncPoly::constant(m, 1);
  auto skip = [&](long k) { return variant == TVariant::Integer && k == 0; };
  if (n > 0) {
    for (long k = 0; k < n; ++k)
      if (!skip(k)) d *= t_factor(m, k, variant);
  } else {
    for (long k = n; k < 0; ++k)
      if (!skip(k)) d *= t_factor(m, k, variant);
    d = rm_invert(d);
  }
  return d;
}

int sign_power(int base, long e) { return (base == -1 && (e % 2 != 0)) ? -1 : 1; }

}  // namespace

WindowedMatrix t_conjugate(const WindowedMatrix& a, TVariant variant, TDirection direction) {
  const unsigned m = a.order();
  std::vector<TruncPoly> d, d_inv;
  for (long n = a.lo(); n <= a.hi(); ++n) {
    d.push_back(t_cumulative(m, n, variant));
    d_inv.push_back(rm_invert(d.back()));
  }
  auto idx = [&](long n) { return static_cast<std::size_t>(n - a.lo()); };
  WindowedMatrix out(m, a.half_width());
  for (long i = a.lo(); i <= a.hi(); ++i)
    for (long j = a.lo(); j <= a.hi(); ++j) {
      const TruncPoly& e = a.at(i, j);
      if (e.is_zero()) continue;
      out.at(i, j) = direction == TDirection::Forward ? e * d[idx(j)] * d_inv[idx(i)]
                                                      : e * d[idx(i)] * d_inv[idx(j)];
    }
  return out;
}

WindowedMatrix involution_apply(const WindowedMatrix& a, WindowInvolution which) {
  const unsigned m = a.order();
  WindowedMatrix out(m, a.half_width());
  for (long i = a.lo(); i <= a.hi(); ++i)
    for (long j = a.lo(); j <= a.hi(); ++j) {
      const TruncPoly& f = a.at(i, j);
      if (f.is_zero()) continue;
      TruncPoly v = f.reflect();
      const long e = i + j;
      switch (which) {
        case WindowInvolution::RhoPlus: v *= Scalar(sign_power(-1, e)); break;
        case WindowInvolution::RhoMinus: break;
        case WindowInvolution::WPlus:
        case WindowInvolution::WMinus: {
          if (which == WindowInvolution::WMinus) v *= Scalar(sign_power(-1, e));
          const Scalar half(1, 2);
          TruncPoly num = TruncPoly::shifted_u(m, half - Scalar(i)).reflect();
          TruncPoly den = TruncPoly::shifted_u(m, half - Scalar(j)).reflect();
          v = num * rm_invert(den) * v;
          break;
        }
      }
      out.at(1 - j, 1 - i) += v;
    }
  return out;
}

std::string tag_name(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::Gl: return "gl";
    case AlgebraTag::C: return "c";
    case AlgebraTag::D: return "d";
    case AlgebraTag::LPlus: return "L+";
    case AlgebraTag::LMinus: return "L-";
  }
  return "?";
}

AlgebraTag parse_tag(const std::string& name) {
  if (name == "gl") return AlgebraTag::Gl;
  if (name == "c") return AlgebraTag::C;
  if (name == "d") return AlgebraTag::D;
  if (name == "L+") return AlgebraTag::LPlus;
  if (name == "L-") return AlgebraTag::LMinus;
  throw SchemaError("tag", "unknown algebra tag '" + name + "'");
}

MembershipResult classical_membership(const WindowedMatrix& a, AlgebraTag tag, const MembershipOptions& options) {
  if (options.strict && a.touches_boundary())
    throw DomainError("classical_membership: inconclusive, support reaches the window boundary");
  if (tag == AlgebraTag::Gl) return {};
  const long lo = a.lo() + static_cast<long>(options.trim);
  const long hi = a.hi() - static_cast<long>(options.trim);
  auto inside = [&](long i, long j) { return i >= lo && i <= hi && j >= lo && j <= hi; };
  const TruncPoly u = TruncPoly::u(a.order());

  auto fail = [](long i, long j, const std::string& rule) {
    return MembershipResult{false, "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + rule};
  };

  for (long i = lo; i <= hi; ++i)
    for (long j = lo; j <= hi; ++j) {
      const TruncPoly& x = a.at(i, j);
      if (tag == AlgebraTag::C || tag == AlgebraTag::D) {
        if (!inside(1 - j, 1 - i)) continue;
        TruncPoly mirror = a.at(1 - j, 1 - i).reflect();
        Scalar sign = tag == AlgebraTag::C ? Scalar(sign_power(-1, i + j + 1)) : Scalar(-1);
        if (!(x == mirror * sign))
          return fail(i, j, tag == AlgebraTag::C ? "A_ij(u) != (-1)^{i+j+1} A_{1-j,1-i}(-u)"
                                                 : "A_ij(u) != -A_{1-j,1-i}(-u)");
        continue;
      }
      // L+ uses base -1, L- uses base +1.
      const int base = tag == AlgebraTag::LPlus ? -1 : 1;
      if (j == 0 && i != 0) {
        // i < 0: A_{i,0} = (-/+1)^{|i|} u A_{0,-i}(-u); i > 0: the same with a minus sign.
        if (!inside(0, -i)) continue;
        const int s = i < 0 ? sign_power(base, -i) : -sign_power(base, i);
        TruncPoly rhs = u * a.at(0, -i).reflect() * Scalar(s);
        if (!(x == rhs)) return fail(i, j, "column-0 entry does not match u times the mirrored row-0 entry");
        continue;
      }
      // Row-0 entries off the diagonal are tied to column 0 above.
      if (i == 0 && j != 0) continue;
      if (!inside(-j, -i)) continue;
      TruncPoly mirror = a.at(-j, -i).reflect();
      const int s = sign_power(base, i + j);
      const bool same_side = (i * j > 0) || (i == 0 && j == 0);
      TruncPoly rhs = mirror * Scalar(same_side ? -s : s);
      if (!(x == rhs))
        return fail(i, j, same_side ? "A_ij(u) != -(-/+1)^{i+j} A_{-j,-i}(-u)" : "A_ij(u) != (-/+1)^{i+j} A_{-j,-i}(-u)");
    }
  return {};
}

}  // namespace qf
