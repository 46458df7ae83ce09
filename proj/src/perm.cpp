#include "altruns/perm.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "altruns/error.hpp"
#include "altruns/statistics.hpp"

namespace altruns {

void validate_window(Window values) {
  if (values.empty()) throw Error(Errc::empty_window, "window must have at least one entry");
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v == 0) throw Error(Errc::zero_entry, "window entries must be nonzero");
    const int magnitude = std::abs(v);
    if (magnitude > n) {
      throw Error(Errc::magnitude_out_of_range,
                  "|" + std::to_string(v) + "| exceeds n = " + std::to_string(n));
    }
    if (seen[magnitude]) {
      throw Error(Errc::duplicate_magnitude, "magnitude " + std::to_string(magnitude) + " repeats");
    }
    seen[magnitude] = true;
  }
}

SignedPermutation SignedPermutation::make_checked(std::vector<int> values) {
  validate_window(values);
  return SignedPermutation(std::move(values));
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw Error(Errc::empty_window, "identity needs n >= 1");
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[i] = i + 1;
  return SignedPermutation(std::move(values));
}

int SignedPermutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw Error(Errc::index_out_of_range, "position " + std::to_string(position));
  }
  return values_[static_cast<std::size_t>(position - 1)];
}

int negs_count(Window pi) noexcept {
  int count = 0;
  for (int v : pi) count += v < 0;
  return count;
}

bool in_class(Window pi, ClassSelector selector) noexcept {
  switch (selector.first_sign) {
    case FirstSign::positive:
      if (pi[0] < 0) return false;
      break;
    case FirstSign::negative:
      if (pi[0] > 0) return false;
      break;
    case FirstSign::any: break;
  }
  const bool odd_negs = negs_count(pi) % 2 != 0;
  if (selector.group == Group::D && odd_negs) return false;
  if (selector.group == Group::BminusD && !odd_negs) return false;
  if (selector.length_parity != LengthParity::any) {
    const int length = selector.group == Group::B ? inv_b(pi) : inv_d(pi);
    const bool even = length % 2 == 0;
    if (even != (selector.length_parity == LengthParity::even)) return false;
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string to_token(ClassSelector selector) {
  std::string token;
  switch (selector.group) {
    case Group::B: token = "B"; break;
    case Group::D: token = "D"; break;
    case Group::BminusD: token = "B-D"; break;
  }
  switch (selector.first_sign) {
    case FirstSign::positive: token += ":pos"; break;
    case FirstSign::negative: token += ":neg"; break;
    case FirstSign::any: token += ":any"; break;
  }
  switch (selector.length_parity) {
    case LengthParity::even: token += ":even"; break;
    case LengthParity::odd: token += ":odd"; break;
    case LengthParity::any: token += ":any"; break;
  }
  return token;
}

ClassSelector parse_selector(std::string_view token) {
  const auto parts = split(trim(token), ':');
  if (parts.size() != 3) {
    throw Error(Errc::parse_error, "selector must be group:sign:parity, got '" + std::string(token) + "'");
  }
  ClassSelector selector;
  if (parts[0] == "B") selector.group = Group::B;
  else if (parts[0] == "D") selector.group = Group::D;
  else if (parts[0] == "B-D") selector.group = Group::BminusD;
  else throw Error(Errc::parse_error, "unknown group '" + std::string(parts[0]) + "'");

  if (parts[1] == "pos") selector.first_sign = FirstSign::positive;
  else if (parts[1] == "neg") selector.first_sign = FirstSign::negative;
  else if (parts[1] == "any") selector.first_sign = FirstSign::any;
  else throw Error(Errc::parse_error, "unknown first sign '" + std::string(parts[1]) + "'");

  if (parts[2] == "even") selector.length_parity = LengthParity::even;
  else if (parts[2] == "odd") selector.length_parity = LengthParity::odd;
  else if (parts[2] == "any") selector.length_parity = LengthParity::any;
  else throw Error(Errc::parse_error, "unknown parity '" + std::string(parts[2]) + "'");
  return selector;
}

std::vector<ClassSelector> refined_selectors() {
  std::vector<ClassSelector> out;
  for (Group g : {Group::B, Group::D, Group::BminusD})
    for (FirstSign s : {FirstSign::positive, FirstSign::negative})
      for (LengthParity p : {LengthParity::even, LengthParity::odd}) out.push_back({g, s, p});
  return out;
}

std::vector<ClassSelector> unrefined_selectors() {
  std::vector<ClassSelector> out;
  for (Group g : {Group::B, Group::D, Group::BminusD})
    for (FirstSign s : {FirstSign::positive, FirstSign::negative})
      out.push_back({g, s, LengthParity::any});
  return out;
}

std::vector<ClassSelector> standard_selectors() {
  auto out = refined_selectors();
  for (auto s : unrefined_selectors()) out.push_back(s);
  return out;
}

Family parse_family(std::string_view token) {
  if (trim(token) == "A") return TypeA{};
  return parse_selector(token);
}

std::string to_token(const Family& family) {
  if (std::holds_alternative<TypeA>(family)) return "A";
  return to_token(std::get<ClassSelector>(family));
}

SignedPermutation parse_window(std::string_view text) {
  std::vector<int> values;
  for (std::string_view part : split(text, ',')) {
    part = trim(part);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
      throw Error(Errc::parse_error, "bad window entry '" + std::string(part) + "'");
    }
    values.push_back(value);
  }
  return SignedPermutation::make_checked(std::move(values));
}

std::string format_window(Window pi) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out << ',';
    out << pi[i];
  }
  return out.str();
}

}  // namespace altruns
