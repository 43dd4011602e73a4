#include "qf/diffop.hpp"

#include <sstream>

#include "qf/error.hpp"

namespace qf {

DiffOp::DiffOp(TermMap terms, Scalar central) : central_(std::move(central)) {
  for (auto& [k, f] : terms) add_term(k, f);
}

DiffOp DiffOp::term(long k, const Polynomial& f) {
  DiffOp d;
  d.add_term(k, f);
  return d;
}

DiffOp DiffOp::central_element(const Scalar& c) { return DiffOp({}, c); }

DiffOp DiffOp::L(long k, unsigned l) { return term(k, Polynomial::monomial(l, -1)); }

DiffOp DiffOp::J(long k, unsigned l) { return term(k, -Polynomial::falling_factorial(l)); }

Polynomial DiffOp::part(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Polynomial() : it->second;
}

std::vector<long> DiffOp::weights() const {
  std::vector<long> out;
  for (const auto& [k, f] : terms_) out.push_back(k);
  return out;
}

void DiffOp::add_term(long k, const Polynomial& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, f] : o.terms_) add_term(k, f);
  central_ += o.central_;
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

DiffOp& DiffOp::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    central_ = 0;
    return *this;
  }
  for (auto& [k, f] : terms_) f *= c;
  central_ *= c;
  return *this;
}

std::string DiffOp::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, f] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "t^" << k << "*[" << f.str('D') << "]";
  }
  if (!central_.is_zero()) out << (first ? "" : " + ") << "(" << central_.str() << ")C";
  return out.str();
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (!a.central().is_zero() || !b.central().is_zero())
    throw DomainError("compose: central element has no associative product");
  DiffOp out;
  for (const auto& [r, f] : a.terms())
    for (const auto& [s, g] : b.terms()) out += DiffOp::term(r + s, f.shift(s) * g);
  return out;
}

DiffOp bracket(const DiffOp& a, const DiffOp& b) {
  DiffOp out;
  for (const auto& [r, f] : a.terms())
    for (const auto& [s, g] : b.terms()) out += DiffOp::term(r + s, f.shift(s) * g - f * g.shift(r));
  return out;
}

namespace {

Scalar psi_term(long r, const Polynomial& f, long s, const Polynomial& g) {
  if (r + s != 0 || r == 0) return 0;
  if (r < 0) return -psi_term(s, g, r, f);
  Scalar sum;
  for (long m = -r; m <= -1; ++m) sum += f.eval(m) * g.eval(m + r);
  return sum;
}

}  // namespace

Scalar psi_cocycle(const DiffOp& a, const DiffOp& b) {
  Scalar sum;
  for (const auto& [r, f] : a.terms()) {
    auto it = b.terms().find(-r);
    if (it != b.terms().end()) sum += psi_term(r, f, -r, it->second);
  }
  return sum;
}

DiffOp bracket_hat(const DiffOp& a, const DiffOp& b) {
  return bracket(a, b) + DiffOp::central_element(psi_cocycle(a, b));
}

long weight_of(const DiffOp& a) {
  const auto& t = a.terms();
  if (t.empty()) return 0;
  if (t.size() == 1 && (a.central().is_zero() || t.begin()->first == 0)) return t.begin()->first;
  std::string list;
  for (long k : a.weights()) list += (list.empty() ? "" : ", ") + std::to_string(k);
  if (!a.central().is_zero()) list += ", 0 (central)";
  throw DomainError("weight_of: element is not homogeneous, weights {" + list + "}");
}

}  // namespace qf
