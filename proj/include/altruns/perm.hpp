#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace altruns {

/// Read-only view of a window pi_1..pi_n (0-based storage).
using Window = std::span<const int>;

/// A signed permutation of [n], stored as its window. The absolute values
/// of the entries are a permutation of 1..n and no entry is zero.
class SignedPermutation {
 public:
  /// Validates `values`; throws Error{zero_entry | duplicate_magnitude |
  /// magnitude_out_of_range | empty_window}.
  static SignedPermutation make_checked(std::vector<int> values);
  static SignedPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// 1-based access, matching the usual pi_i notation.
  int at(int position) const;
  int operator[](std::size_t index) const noexcept { return values_[index]; }

  Window window() const noexcept { return values_; }
  operator Window() const noexcept { return values_; }
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  explicit SignedPermutation(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

/// Throws the same errors as make_checked without constructing anything.
void validate_window(Window values);

int negs_count(Window pi) noexcept;

enum class Group { B, D, BminusD };
enum class FirstSign { positive, negative, any };
enum class LengthParity { even, odd, any };

/// Names one of the refined classes of signed permutations. Length parity
/// is the parity of inv_B for group B and of inv_D for D and B-D.
struct ClassSelector {
  Group group = Group::B;
  FirstSign first_sign = FirstSign::any;
  LengthParity length_parity = LengthParity::any;

  friend bool operator==(const ClassSelector&, const ClassSelector&) = default;
  friend auto operator<=>(const ClassSelector&, const ClassSelector&) = default;
};

bool in_class(Window pi, ClassSelector selector) noexcept;

/// Compact token such as "D:pos:even" or "B-D:neg:any".
std::string to_token(ClassSelector selector);
ClassSelector parse_selector(std::string_view token);

/// {B, D, B-D} x {pos, neg} x {even, odd}.
std::vector<ClassSelector> refined_selectors();
/// {B, D, B-D} x {pos, neg} with no parity constraint.
std::vector<ClassSelector> unrefined_selectors();
/// refined followed by unrefined (18 selectors).
std::vector<ClassSelector> standard_selectors();

/// Ordinary permutations counted by altruns_A.
struct TypeA {
  friend bool operator==(const TypeA&, const TypeA&) = default;
};
using Family = std::variant<TypeA, ClassSelector>;

/// Accepts "A" or a selector token.
Family parse_family(std::string_view token);
std::string to_token(const Family& family);

/// "5,1,-4" style text; surrounding whitespace around entries is accepted.
SignedPermutation parse_window(std::string_view text);
std::string format_window(Window pi);

}  // namespace altruns
