#pragma once

// Matrices of multiplication by alpha*a + 1 in the basis 1, a, ..., a^{n-1}
// of a simple extension K(a), f(a) = 0 with
//   f = X^n - b_{n-1} X^{n-1} - ... - b_0,
// together with the closed-form inverse and the entry M_{m-1,m} of
// M = (alpha a + 1)^{-1} (beta a + 1), m = n - 1.
//
// Scalars are exact: Rational, or BivariatePoly in the indeterminates
// alpha, beta over the rationals. Everything that does not divide is generic
// over the scalar; division by h^{-1} = 1 + alpha q_m is only offered for
// Rational, and the polynomial side works with numerators instead.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/traits/is_byte_container.hpp>

#include <cstdint>
#include <iterator>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

// Eigen 3.4 expressions declare `const_iterator = void`. Boost 1.74 probes
// iterator_traits<const_iterator> without SFINAE whenever Eigen asks whether
// an expression converts to a Rational, which is a hard error. This probe
// answers false for such types and agrees with Boost everywhere else.
namespace boost::multiprecision::detail {
template <class C>
struct is_byte_container_imp<C, true> {
  template <class I, class V = std::remove_cv_t<typename std::iterator_traits<I>::value_type>>
  static constexpr bool probe(int) {
    return std::is_integral_v<V> && sizeof(V) == 1;
  }
  template <class>
  static constexpr bool probe(...) {
    return false;
  }
  static const bool value = probe<typename C::const_iterator>(0);
};
}  // namespace boost::multiprecision::detail

namespace hnn::field {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

struct SingularDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

/// f = X^n - b_{n-1} X^{n-1} - ... - b_0; b.size() == n >= 2.
struct ExtFieldSpec {
  int n = 2;
  std::vector<Rational> b;

  int m() const { return n - 1; }
  void validate() const;
};

/// Polynomial in alpha, beta with rational coefficients; zero terms are
/// never stored.
class BivariatePoly {
 public:
  using Exponents = std::pair<int, int>;  // (deg alpha, deg beta)

  BivariatePoly() = default;
  BivariatePoly(int c) : BivariatePoly(Rational(c)) {}  // NOLINT: scalar literal
  BivariatePoly(const Rational& c);                     // NOLINT

  static BivariatePoly alpha();
  static BivariatePoly beta();

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational evaluate(const Rational& alpha, const Rational& beta) const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }
  friend BivariatePoly operator-(BivariatePoly a);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  void add_term(Exponents e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

std::string to_string(const BivariatePoly& p);

}  // namespace hnn::field

namespace Eigen {

template <>
struct NumTraits<hnn::field::BivariatePoly> : GenericNumTraits<hnn::field::BivariatePoly> {
  using Real = hnn::field::BivariatePoly;
  using NonInteger = hnn::field::BivariatePoly;
  using Literal = hnn::field::BivariatePoly;
  using Nested = hnn::field::BivariatePoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32,
  };
};

}  // namespace Eigen

namespace hnn::field {

/// Scalar power with x^0 = 1.
template <class Scalar>
Scalar ipow(const Scalar& x, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

/// Matrix of x -> a x: ones on the subdiagonal, b in the last column.
template <class Scalar>
Matrix<Scalar> companion(const ExtFieldSpec& spec) {
  Matrix<Scalar> c = Matrix<Scalar>::Zero(spec.n, spec.n);
  for (int i = 0; i + 1 < spec.n; ++i) c(i + 1, i) = Scalar(1);
  for (int i = 0; i < spec.n; ++i) c(i, spec.n - 1) = Scalar(spec.b[static_cast<std::size_t>(i)]);
  return c;
}

template <class Scalar>
Matrix<Scalar> mul_matrix(const Scalar& alpha, const ExtFieldSpec& spec) {
  return Matrix<Scalar>::Identity(spec.n, spec.n) + alpha * companion<Scalar>(spec);
}

/// q_j = sum_{i<=j} (-alpha)^{j-i} b_i, j = 0..m.
template <class Scalar>
std::vector<Scalar> q_values(const Scalar& alpha, const ExtFieldSpec& spec) {
  const Scalar neg = Scalar(0) - alpha;
  std::vector<Scalar> q;
  for (int j = 0; j < spec.n; ++j) {
    Scalar s(0);
    for (int i = 0; i <= j; ++i) s = s + ipow(neg, j - i) * Scalar(spec.b[static_cast<std::size_t>(i)]);
    q.push_back(s);
  }
  return q;
}

/// h^{-1} = 1 + alpha q_m
template <class Scalar>
Scalar inverse_denominator(const Scalar& alpha, const ExtFieldSpec& spec) {
  return Scalar(1) + alpha * q_values(alpha, spec).back();
}

/// h^{-1} (alpha a + 1)^{-1}; entry (i, j) is
///   (-alpha)^{i-j} [i >= j] h^{-1} + (-alpha)^{m+1-j} q_i.
template <class Scalar>
Matrix<Scalar> inverse_numerator(const Scalar& alpha, const ExtFieldSpec& spec) {
  const int m = spec.m();
  const Scalar neg = Scalar(0) - alpha;
  const auto q = q_values(alpha, spec);
  const Scalar d = Scalar(1) + alpha * q.back();
  Matrix<Scalar> out(spec.n, spec.n);
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j) {
      Scalar e = ipow(neg, m + 1 - j) * q[static_cast<std::size_t>(i)];
      if (i >= j) e = e + ipow(neg, i - j) * d;
      out(i, j) = e;
    }
  return out;
}

/// h^{-1} M_{m-1,m} from the closed form
///   sum_{i<m} beta b_i ((-alpha)^{m-1-i} + (-alpha)^{m+1-i} q_{m-1} h) - (1 + beta b_m) alpha q_{m-1} h.
template <class Scalar>
Scalar m_entry_numerator(const Scalar& alpha, const Scalar& beta, const ExtFieldSpec& spec) {
  const int m = spec.m();
  const Scalar neg = Scalar(0) - alpha;
  const auto q = q_values(alpha, spec);
  const Scalar d = Scalar(1) + alpha * q.back();
  const Scalar& qm1 = q[static_cast<std::size_t>(m - 1)];
  auto b = [&](int i) { return Scalar(spec.b[static_cast<std::size_t>(i)]); };
  Scalar s(0);
  for (int i = 0; i < m; ++i) s = s + beta * b(i) * (ipow(neg, m - 1 - i) * d + ipow(neg, m + 1 - i) * qm1);
  return s - (Scalar(1) + beta * b(m)) * alpha * qm1;
}

/// Throws SingularDenominator when 1 + alpha q_m = 0.
Matrix<Rational> explicit_inverse(const Rational& alpha, const ExtFieldSpec& spec);
Matrix<Rational> m_matrix(const Rational& alpha, const Rational& beta, const ExtFieldSpec& spec);
Rational m_entry_formula(const Rational& alpha, const Rational& beta, const ExtFieldSpec& spec);

/// Instance generator for batch checks: b_i uniform in -5..5 with b_0 != 0.
ExtFieldSpec random_spec(std::mt19937_64& rng, int n);

struct BatchResult {
  int n = 0;
  int instances = 0;
  int inverse_ok = 0;  // explicit_inverse * mul_matrix == I
  int entry_ok = 0;    // m_entry_formula == m_matrix(m-1, m)
  int rejected = 0;    // draws with 1 + alpha q_m = 0

  bool pass() const { return inverse_ok == instances && entry_ok == instances; }
};

/// `instances` accepted draws of (b, alpha, beta), alpha and beta uniform in
/// -9..9. Singular draws are counted and redrawn.
BatchResult random_batch(int n, int instances, std::uint64_t seed);

struct SymbolicResult {
  ExtFieldSpec spec;
  bool inverse_identity = false;  // numerator * (I + alpha C) == (1 + alpha q_m) I
  bool entry_matches = false;     // closed form == product entry (m-1, m)
  BivariatePoly entry;            // (1 + alpha q_m) M_{m-1,m}

  bool pass() const { return inverse_identity && entry_matches && !entry.is_zero(); }
};

/// Checks the inverse and the entry formula with alpha, beta indeterminate.
SymbolicResult symbolic_check(const ExtFieldSpec& spec);

/// "n=<int> b=<c0,c1,...>"
ExtFieldSpec parse_spec(std::string_view text);
/// "p", "-p" or "p/q"
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);
/// Rows on separate lines, entries separated by spaces.
std::string format_matrix(const Matrix<Rational>& m);

}  // namespace hnn::field
