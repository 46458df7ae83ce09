#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace altruns {

enum class Errc {
  empty_window,
  zero_entry,
  duplicate_magnitude,
  magnitude_out_of_range,
  parse_error,
  negative_entry,
  index_out_of_range,
  not_canonical,
  zero_polynomial,
  selector_not_orbit_closed,
  resource_cap,
  bad_shard_spec,
  precondition_violated,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace altruns
