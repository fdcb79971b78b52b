#pragma once

// Exact Gaussian rationals a + b*i with a, b arbitrary-precision rationals.
//
// mpq_class results are canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from a raw numerator/denominator
// pair are canonicalized on construction.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "assocalg/errors.hpp"

namespace assocalg {

using rational = mpq_class;

namespace detail {

inline rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw division_by_zero("zero denominator");
  rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const rational& q) { return q.get_str(); }

// Parses `p` or `p/q` with an optional leading sign.
inline std::optional<rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from, std::size_t& to) {
    to = from;
    while (to < s.size() && std::isdigit(static_cast<unsigned char>(s[to]))) ++to;
    return to > from;
  };
  std::size_t end = 0;
  if (!digits(pos, end)) return std::nullopt;
  mpz_class num(std::string(s.substr(pos, end - pos)), 10);
  mpz_class den = 1;
  if (end < s.size()) {
    if (s[end] != '/') return std::nullopt;
    std::size_t dend = 0;
    if (!digits(end + 1, dend) || dend != s.size()) return std::nullopt;
    den = mpz_class(std::string(s.substr(end + 1, dend - end - 1)), 10);
    if (den == 0) return std::nullopt;
  }
  if (neg) num = -num;
  return make_rational(num, den);
}

// Exact k-th root of a non-negative rational, if it exists.
inline std::optional<rational> exact_nonneg_root(const rational& q, unsigned k) {
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), q.get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), k) == 0) return std::nullopt;
  return make_rational(rn, rd);
}

}  // namespace detail

/// An element of Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(rational re, rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar fraction(long num, long den) {
    return Scalar(detail::make_rational(num, den));
  }
  static Scalar imaginary_unit() { return Scalar(rational(0), rational(1)); }

  const rational& re() const { return re_; }
  const rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    rational r = re_ * o.re_ - im_ * o.im_;
    rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw division_by_zero("division by zero scalar");
    if (o.im_ == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    rational n = o.norm();
    rational r = (re_ * o.re_ + im_ * o.im_) / n;
    rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Integer power; negative exponents invert (and throw on zero).
  Scalar pow(long e) const {
    if (e < 0) return (Scalar(1) / *this).pow(-e);
    Scalar result(1), base(*this);
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Text form: `p`, `p/q`, `i`, `-1/2*i`, `1+i`, `1+1/2*i`.
  std::string to_string() const {
    auto imag = [](const rational& v) {
      if (v == 1) return std::string("i");
      if (v == -1) return std::string("-i");
      return v.get_str() + "*i";
    };
    if (im_ == 0) return re_.get_str();
    if (re_ == 0) return imag(im_);
    std::string s = re_.get_str();
    std::string t = imag(im_);
    if (t[0] != '-') s += '+';
    return s + t;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  rational re_{0};
  rational im_{0};
};

/// Parses the scalar text syntax (`p/q`, `p`, `p/q+r/s*i`, `i`, `-i`, ...).
/// Returns nullopt on malformed input.
inline std::optional<Scalar> try_parse_scalar(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    auto r = detail::parse_rational(s);
    if (!r) return std::nullopt;
    return Scalar(*r);
  }
  // Imaginary part is the trailing signed term; find the split sign.
  std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part, im_part;
  if (split == std::string_view::npos) {
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  rational re(0);
  if (!re_part.empty()) {
    auto r = detail::parse_rational(re_part);
    if (!r) return std::nullopt;
    re = *r;
  }
  rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    if (im_part.back() != '*') return std::nullopt;
    auto r = detail::parse_rational(im_part.substr(0, im_part.size() - 1));
    if (!r) return std::nullopt;
    im = *r;
  }
  return Scalar(re, im);
}

inline Scalar parse_scalar(std::string_view s) {
  auto v = try_parse_scalar(s);
  if (!v) throw parse_error("malformed scalar '" + std::string(s) + "'");
  return *v;
}

/// Exact k-th root within Q(i). Real inputs only, except square roots of
/// negative reals, which land on the imaginary axis.
inline std::optional<Scalar> exact_root(const Scalar& x, unsigned k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return x;
  if (!x.is_real()) return std::nullopt;
  const rational& v = x.re();
  if (v >= 0) {
    auto r = detail::exact_nonneg_root(v, k);
    if (!r) return std::nullopt;
    return Scalar(*r);
  }
  auto r = detail::exact_nonneg_root(-v, k);
  if (!r) return std::nullopt;
  if (k % 2 == 1) return Scalar(-*r);
  if (k == 2) return Scalar(rational(0), *r);
  return std::nullopt;
}

}  // namespace assocalg
