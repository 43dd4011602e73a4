#include "qf/scalar.hpp"

#include <cctype>

#include "qf/error.hpp"

namespace qf {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw SchemaError("scalar", "malformed rational '" + std::string(whole) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw SchemaError("scalar", "zero denominator in '" + std::string(whole) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

Scalar::Scalar(long num, long den) : re_(num, den) {
  if (den == 0) throw DomainError("Scalar: zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  std::string_view s = compact;
  if (s.empty()) throw SchemaError("scalar", "empty scalar string");

  if (s.back() != 'i') return Scalar(parse_rational(s, text));

  // Imaginary part present. Split at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
  im_part.remove_suffix(1);  // 'i'
  if (!im_part.empty() && im_part.back() == '*') im_part.remove_suffix(1);
  mpq_class im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part, text);
  mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
  return Scalar(re, im);
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_str = (sgn(im_) < 0 ? mpq_class(-im_) : im_).get_str() + "*i";
  if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + im_str : im_str;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im_str;
}

bool Scalar::is_integer() const { return sgn(im_) == 0 && re_.get_den() == 1; }

bool Scalar::is_half_integer() const { return sgn(im_) == 0 && re_.get_den() == 2; }

mpz_class Scalar::floor() const {
  if (!is_real()) throw DomainError("Scalar::floor of non-real value " + str());
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), re_.get_num_mpz_t(), re_.get_den_mpz_t());
  return q;
}

long Scalar::to_long() const {
  if (!is_integer() || !re_.get_num().fits_slong_p())
    throw DomainError("Scalar::to_long of non-integer " + str());
  return re_.get_num().get_si();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NonInvertibleError("division by zero scalar");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw NonInvertibleError("division by zero scalar");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Scalar factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(mpq_class(f));
}

Scalar binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Scalar(mpq_class(b));
}

}  // namespace qf
