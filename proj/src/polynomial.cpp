#include "altruns/polynomial.hpp"

#include <sstream>

#include "altruns/error.hpp"

namespace altruns {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t exponent, const BigInt& count) {
  IntPolynomial f;
  f.add_term(exponent, count);
  return f;
}

BigInt IntPolynomial::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
}

int IntPolynomial::lowest_degree() const noexcept {
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) return static_cast<int>(e);
  return -1;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::add_term(std::size_t exponent, const BigInt& count) {
  if (count == 0) return *this;
  if (coeffs_.size() <= exponent) coeffs_.resize(exponent + 1);
  coeffs_[exponent] += count;
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] += other.coeffs_[e];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] -= other.coeffs_[e];
  trim();
  return *this;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }

IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g) { return f + g; }

IntPolynomial add_term(IntPolynomial f, std::size_t exponent, const BigInt& count) {
  f.add_term(exponent, count);
  return f;
}

IntPolynomial one_plus_t_power(unsigned m) { return times_one_plus_t_power(IntPolynomial{1}, m); }

IntPolynomial times_one_plus_t_power(const IntPolynomial& f, unsigned e) {
  std::vector<BigInt> c = f.coeffs();
  if (c.empty()) return {};
  for (unsigned pass = 0; pass < e; ++pass) {
    c.emplace_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] += c[i - 1];
  }
  return IntPolynomial(std::move(c));
}

DivisionResult synthetic_divide(const IntPolynomial& f, const BigInt& root) {
  const auto& c = f.coeffs();
  if (c.empty()) return {};
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    carry = carry * root + c[i];
    if (i > 0) q[i - 1] = carry;
  }
  return {IntPolynomial(std::move(q)), carry};
}

OnePlusTFactorization factor_one_plus_t(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "(1+t)-order of the zero polynomial");
  OnePlusTFactorization out{0, f};
  while (true) {
    auto step = synthetic_divide(out.quotient, BigInt(-1));
    if (step.remainder != 0) return out;
    out.quotient = std::move(step.quotient);
    ++out.order;
  }
}

unsigned one_plus_t_order(const IntPolynomial& f) { return factor_one_plus_t(f).order; }

MomentSums moment_sums(const IntPolynomial& f, unsigned k) {
  MomentSums sums{0, 0};
  const auto& c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    BigInt weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(i), k);
    (i % 2 ? sums.odd_side : sums.even_side) += weight * c[i];
  }
  return sums;
}

std::string to_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    BigInt magnitude = abs(c[e]);
    if (first) {
      if (c[e] < 0) out << '-';
    } else {
      out << (c[e] < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || magnitude != 1) out << magnitude.get_str();
    if (e >= 1) out << 't';
    if (e >= 2) out << '^' << e;
  }
  return out.str();
}

}  // namespace altruns
