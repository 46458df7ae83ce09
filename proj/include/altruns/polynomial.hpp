#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <initializer_list>
#include <string>
#include <vector>

namespace altruns {

using BigInt = mpz_class;

/// Dense polynomial in t with exact integer coefficients; coeffs()[e] is the
/// coefficient of t^e. Never stores a trailing zero, so the zero polynomial
/// has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t exponent, const BigInt& count = 1);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t exponent) const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient, -1 for zero.
  int lowest_degree() const noexcept;

  IntPolynomial& add_term(std::size_t exponent, const BigInt& count);
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);

  BigInt evaluate(const BigInt& x) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs);
IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs);
IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial add_term(IntPolynomial f, std::size_t exponent, const BigInt& count);

/// Binomial expansion of (1+t)^m.
IntPolynomial one_plus_t_power(unsigned m);

/// f * (1+t)^e, by e repeated shift-and-add passes.
IntPolynomial times_one_plus_t_power(const IntPolynomial& f, unsigned e);

struct DivisionResult {
  IntPolynomial quotient;
  BigInt remainder;
};

/// Synthetic division of f by (t - root).
DivisionResult synthetic_divide(const IntPolynomial& f, const BigInt& root);

struct OnePlusTFactorization {
  unsigned order = 0;
  IntPolynomial quotient;  // f = quotient * (1+t)^order, quotient(-1) != 0
};

/// Repeatedly divides by (t+1) while the remainder f(-1) vanishes.
/// Throws Error{zero_polynomial}.
OnePlusTFactorization factor_one_plus_t(const IntPolynomial& f);
unsigned one_plus_t_order(const IntPolynomial& f);

struct MomentSums {
  BigInt odd_side;   // 1^k f_1 + 3^k f_3 + ...
  BigInt even_side;  // 2^k f_2 + 4^k f_4 + ...
  bool holds() const { return odd_side == even_side; }
};

MomentSums moment_sums(const IntPolynomial& f, unsigned k);
inline bool moment_identity_holds(const IntPolynomial& f, unsigned k) {
  return moment_sums(f, k).holds();
}

/// Human-readable form, e.g. "2t + 6t^2"; "0" for the zero polynomial.
std::string to_string(const IntPolynomial& f);

}  // namespace altruns
