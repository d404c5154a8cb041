#include "hnn/field.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace hnn::field {

void ExtFieldSpec::validate() const {
  if (n < 2) throw std::invalid_argument("extension degree must be at least 2");
  if (b.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected " + std::to_string(n) + " coefficients b_0..b_" + std::to_string(n - 1));
}

BivariatePoly::BivariatePoly(const Rational& c) { add_term({0, 0}, c); }

BivariatePoly BivariatePoly::alpha() {
  BivariatePoly p;
  p.add_term({1, 0}, Rational(1));
  return p;
}

BivariatePoly BivariatePoly::beta() {
  BivariatePoly p;
  p.add_term({0, 1}, Rational(1));
  return p;
}

void BivariatePoly::add_term(Exponents e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational BivariatePoly::evaluate(const Rational& alpha, const Rational& beta) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c * ipow(alpha, e.first) * ipow(beta, e.second);
  return s;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
  BivariatePoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

BivariatePoly operator-(BivariatePoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string to_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += format_rational(c);
    if (e.first) out += " a^" + std::to_string(e.first);
    if (e.second) out += " b^" + std::to_string(e.second);
  }
  return out;
}

Matrix<Rational> explicit_inverse(const Rational& alpha, const ExtFieldSpec& spec) {
  spec.validate();
  const Rational d = inverse_denominator(alpha, spec);
  if (d == 0) throw SingularDenominator("1 + alpha q_m vanishes at alpha = " + format_rational(alpha));
  return inverse_numerator(alpha, spec) / d;
}

Matrix<Rational> m_matrix(const Rational& alpha, const Rational& beta, const ExtFieldSpec& spec) {
  return explicit_inverse(alpha, spec) * mul_matrix(beta, spec);
}

Rational m_entry_formula(const Rational& alpha, const Rational& beta, const ExtFieldSpec& spec) {
  spec.validate();
  const Rational d = inverse_denominator(alpha, spec);
  if (d == 0) throw SingularDenominator("1 + alpha q_m vanishes at alpha = " + format_rational(alpha));
  return m_entry_numerator(alpha, beta, spec) / d;
}

ExtFieldSpec random_spec(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coef(-5, 5);
  ExtFieldSpec spec{n, {}};
  for (int i = 0; i < n; ++i) {
    int c = coef(rng);
    while (i == 0 && c == 0) c = coef(rng);
    spec.b.emplace_back(c);
  }
  return spec;
}

BatchResult random_batch(int n, int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<int> scalar(-9, 9);
  BatchResult out{n, instances, 0, 0, 0};
  const Matrix<Rational> id = Matrix<Rational>::Identity(n, n);
  for (int done = 0; done < instances;) {
    const ExtFieldSpec spec = random_spec(rng, n);
    const Rational alpha(scalar(rng)), beta(scalar(rng));
    if (inverse_denominator(alpha, spec) == 0) {
      ++out.rejected;
      continue;
    }
    const Matrix<Rational> inv = explicit_inverse(alpha, spec);
    if (inv * mul_matrix(alpha, spec) == id) ++out.inverse_ok;
    const Matrix<Rational> m = inv * mul_matrix(beta, spec);
    if (m_entry_formula(alpha, beta, spec) == m(n - 2, n - 1)) ++out.entry_ok;
    ++done;
  }
  return out;
}

SymbolicResult symbolic_check(const ExtFieldSpec& spec) {
  spec.validate();
  using P = BivariatePoly;
  const P a = P::alpha(), b = P::beta();
  const int n = spec.n;
  SymbolicResult out;
  out.spec = spec;
  const Matrix<P> numer = inverse_numerator(a, spec);
  const P d = inverse_denominator(a, spec);
  const Matrix<P> lhs = numer * mul_matrix(a, spec);
  out.inverse_identity = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.inverse_identity &= lhs(i, j) == (i == j ? d : P(0));
  const Matrix<P> m = numer * mul_matrix(b, spec);
  out.entry = m_entry_numerator(a, b, spec);
  out.entry_matches = m(n - 2, n - 1) == out.entry;
  return out;
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed fraction '" + std::string(text) + "'"); };
  const auto slash = text.find('/');
  auto integer = [&](std::string_view s) {
    if (s.empty() || s == "-" || s == "+") throw bad();
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!(std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && (s[i] == '-' || s[i] == '+')))) throw bad();
    if (s.front() == '+') s.remove_prefix(1);
    return boost::multiprecision::cpp_int(std::string(s));
  };
  if (slash == std::string_view::npos) return Rational(integer(text));
  auto num = integer(text.substr(0, slash));
  auto den = integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  // the rational backend wants a positive denominator
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string format_matrix(const Matrix<Rational>& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_rational(m(i, j));
    }
    out += '\n';
  }
  return out;
}

ExtFieldSpec parse_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  ExtFieldSpec spec;
  bool have_n = false, have_b = false;
  while (in >> tok) {
    if (tok.rfind("n=", 0) == 0) {
      const auto v = std::string_view(tok).substr(2);
      int n = 0;
      const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
      if (ec != std::errc{} || p != v.data() + v.size()) throw std::invalid_argument("malformed degree '" + tok + "'");
      spec.n = n;
      have_n = true;
    } else if (tok.rfind("b=", 0) == 0) {
      std::string_view v = std::string_view(tok).substr(2);
      spec.b.clear();
      while (true) {
        const auto comma = v.find(',');
        spec.b.push_back(parse_rational(v.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        v.remove_prefix(comma + 1);
      }
      have_b = true;
    } else {
      throw std::invalid_argument("unexpected token '" + tok + "' in extension description");
    }
  }
  if (!have_n || !have_b) throw std::invalid_argument("extension description needs n=<int> and b=<c0,...>");
  spec.validate();
  return spec;
}

}  // namespace hnn::field
