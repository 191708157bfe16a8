#pragma once

// Exact scalar types used throughout: arbitrary-precision rationals and a
// prime field with runtime modulus.  Both plug into Eigen dense matrices as
// custom scalars (containers, products, blocks only -- all elimination-style
// algorithms live in matrix.hpp and never rely on Eigen decompositions).
//
// The rational is a thin wrapper over boost::multiprecision rather than the
// boost type itself: boost's backend constructor templates are not SFINAE-
// safe against Eigen's expression types, so the wrapper exposes exactly the
// constructors a matrix scalar needs and nothing else.

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ortho_hecke {

using Int = boost::multiprecision::cpp_int;
namespace mp_detail {
// expression templates off: every operator yields a plain value
using boost_rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
}  // namespace mp_detail

struct Rat {
  mp_detail::boost_rational v;

  Rat() = default;
  Rat(int x) : v(x) {}
  Rat(long x) : v(x) {}
  Rat(long long x) : v(x) {}
  Rat(const Int& x) : v(x) {}
  explicit Rat(const std::string& s) : v(s) {}
  explicit Rat(mp_detail::boost_rational x) : v(std::move(x)) {}

  std::string str() const { return v.str(); }
  Int numerator() const { return boost::multiprecision::numerator(v); }
  Int denominator() const { return boost::multiprecision::denominator(v); }
  bool is_integer() const { return denominator() == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v + b.v); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v - b.v); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v * b.v); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(a.v / b.v);
  }
  Rat operator-() const { return Rat(-v); }
  Rat& operator+=(const Rat& o) { v += o.v; return *this; }
  Rat& operator-=(const Rat& o) { v -= o.v; return *this; }
  Rat& operator*=(const Rat& o) { v *= o.v; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v < b.v; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v > b.v; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v <= b.v; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v >= b.v; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.v; }
};

inline Rat abs(const Rat& a) { return a < Rat(0) ? -a : a; }

// ---------------------------------------------------------------------------
// F_p with runtime modulus.
//
// Generic code (Eigen included) constructs scalars from bare integer
// literals, so a value may exist before any modulus is known.  Such values
// carry p == 0 and behave as plain integers until they meet a bound value,
// at which point the modulus is adopted.  Mixing two distinct nonzero moduli
// is a program error and throws.
// ---------------------------------------------------------------------------
struct Fp {
  std::int64_t v = 0;  // canonical: 0 <= v < p when p > 0
  std::int64_t p = 0;  // 0 = modulus not yet bound

  constexpr Fp() = default;
  constexpr Fp(std::int64_t value) : v(value), p(0) {}
  constexpr Fp(int value) : v(value), p(0) {}
  Fp(std::int64_t value, std::int64_t modulus) : v(value), p(modulus) {
    if (modulus < 0) throw std::invalid_argument("Fp: negative modulus");
    reduce();
  }

  void reduce() {
    if (p > 0) {
      v %= p;
      if (v < 0) v += p;
    }
  }

  static std::int64_t merge_modulus(const Fp& a, const Fp& b) {
    if (a.p != 0 && b.p != 0 && a.p != b.p)
      throw std::invalid_argument("Fp: mixing elements of different prime fields");
    return a.p != 0 ? a.p : b.p;
  }

  Fp bound_to(std::int64_t modulus) const { return Fp(v, modulus); }

  bool is_zero() const { return p > 0 ? v % p == 0 : v == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    const std::int64_t m = merge_modulus(a, b);
    if (m == 0) return Fp(a.v + b.v);
    return Fp(static_cast<std::int64_t>(
                  (static_cast<__int128>(a.bound_to(m).v) + b.bound_to(m).v) % m),
              m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    const std::int64_t m = merge_modulus(a, b);
    if (m == 0) return Fp(a.v - b.v);
    return Fp(static_cast<std::int64_t>(
                  (static_cast<__int128>(a.bound_to(m).v) - b.bound_to(m).v + m) % m),
              m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    const std::int64_t m = merge_modulus(a, b);
    if (m == 0) return Fp(a.v * b.v);
    return Fp(static_cast<std::int64_t>(
                  (static_cast<__int128>(a.bound_to(m).v) * b.bound_to(m).v) % m),
              m);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return p == 0 ? Fp(-v) : Fp(p - v, p); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp inverse() const {
    if (p == 0) {
      if (v == 1 || v == -1) return *this;
      throw std::domain_error("Fp: inverse of unbound non-unit");
    }
    if (v == 0) throw std::domain_error("Fp: division by zero");
    // extended Euclid: find x with v*x = 1 (mod p)
    std::int64_t a = v, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
      const std::int64_t q = a / b;
      a -= q * b;
      std::swap(a, b);
      x0 -= q * x1;
      std::swap(x0, x1);
    }
    if (a != 1) throw std::domain_error("Fp: modulus not prime or zero divisor hit");
    return Fp(x0, p);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    const std::int64_t m = merge_modulus(a, b);
    if (m == 0) return a.v == b.v;
    return a.bound_to(m).v == b.bound_to(m).v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  // Total order on canonical representatives; used for canonical sorting only.
  friend bool operator<(const Fp& a, const Fp& b) {
    const std::int64_t m = merge_modulus(a, b);
    if (m == 0) return a.v < b.v;
    return a.bound_to(m).v < b.bound_to(m).v;
  }
  friend bool operator>(const Fp& a, const Fp& b) { return b < a; }
  friend bool operator<=(const Fp& a, const Fp& b) { return !(b < a); }
  friend bool operator>=(const Fp& a, const Fp& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v; }
};

inline Fp abs(const Fp& a) { return a; }  // Eigen's generic paths want this name to exist

// ---------------------------------------------------------------------------
// Runtime field tag: rationals, or F_p for an odd prime p.
// ---------------------------------------------------------------------------
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::int64_t p = 0;

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field: modulus must be prime");
    if (p == 2) throw std::invalid_argument("field: characteristic 2 not supported");
    return FieldSpec{Kind::prime, p};
  }

  // Accepts "q" for the rationals and "fp:<p>" for prime fields.
  static FieldSpec parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("fp:", 0) == 0) {
      std::size_t pos = 0;
      const std::string digits = s.substr(3);
      const long long p = std::stoll(digits, &pos);
      if (pos != digits.size()) throw std::invalid_argument("field: malformed 'fp:<p>'");
      return prime(p);
    }
    throw std::invalid_argument("field: expected 'q' or 'fp:<p>', got '" + s + "'");
  }

  std::string to_string() const {
    return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p);
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

// Scalar <-> string, the entry format of the JSON matrix literal.
inline Rat parse_scalar_rat(const std::string& s) { return Rat(s); }
inline Fp parse_scalar_fp(const std::string& s, std::int64_t p) {
  std::size_t pos = 0;
  const long long value = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("Fp: malformed integer '" + s + "'");
  return Fp(value, p);
}

inline std::string scalar_to_string(const Rat& a) { return a.str(); }
inline std::string scalar_to_string(const Fp& a) { return std::to_string(a.v); }

template <class S>
S scalar_one(const FieldSpec&);
template <>
inline Rat scalar_one<Rat>(const FieldSpec&) { return Rat(1); }
template <>
inline Fp scalar_one<Fp>(const FieldSpec& f) { return Fp(1, f.p); }

template <class S>
struct field_traits;
template <>
struct field_traits<Rat> {
  static constexpr bool finite = false;
  static FieldSpec spec_of(const Rat&) { return FieldSpec::rationals(); }
};
template <>
struct field_traits<Fp> {
  static constexpr bool finite = true;
  static FieldSpec spec_of(const Fp& a) { return FieldSpec{FieldSpec::Kind::prime, a.p}; }
};

}  // namespace ortho_hecke

namespace Eigen {
template <>
struct NumTraits<ortho_hecke::Rat> {
  using Self = ortho_hecke::Rat;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 20,
  };
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<ortho_hecke::Fp> {
  using Self = ortho_hecke::Fp;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 9,
  };
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static int digits10() { return 18; }
};
}  // namespace Eigen
