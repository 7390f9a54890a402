#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superorbit {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  std::optional<long> as_integer() const;
  Rational inv() const;
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

// Dense univariate polynomial over Q, coefficient i multiplies a^i.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial variable();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const;
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Polynomial monic() const;
  Rational eval(const Rational& x) const;

  // Euclidean division: *this = q*d + r.
  void divmod(const Polynomial& d, Polynomial& q, Polynomial& r) const;
  static Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero

  std::string str(const char* var = "a") const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Element of Q(a): num/den with gcd 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Rational& r) : num_(r), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction alpha();
  static RationalFunction parse(std::string_view text);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.degree() == 0 && den_.degree() == 0 && num_.leading().is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  std::optional<long> as_integer() const;
  std::optional<Rational> as_rational() const;
  RationalFunction inv() const;
  std::string str() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

// Uniform free-function interface used by the generic modules.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const RationalFunction& x) { return x.str(); }
inline std::optional<long> as_integer(const Rational& x) { return x.as_integer(); }
inline std::optional<long> as_integer(const RationalFunction& x) { return x.as_integer(); }

template <class S>
struct FieldInfo;
template <>
struct FieldInfo<Rational> {
  static constexpr const char* name = "Q";
  static Rational parse(std::string_view t) { return Rational::parse(t); }
};
template <>
struct FieldInfo<RationalFunction> {
  static constexpr const char* name = "Q(a)";
  static RationalFunction parse(std::string_view t) { return RationalFunction::parse(t); }
};

}  // namespace superorbit
