#include "altruns/error.hpp"

namespace altruns {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_window: return "EmptyWindow";
    case Errc::zero_entry: return "ZeroEntry";
    case Errc::duplicate_magnitude: return "DuplicateMagnitude";
    case Errc::magnitude_out_of_range: return "MagnitudeOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_canonical: return "NotCanonical";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::selector_not_orbit_closed: return "SelectorNotOrbitClosed";
    case Errc::resource_cap: return "ResourceCap";
    case Errc::bad_shard_spec: return "BadShardSpec";
    case Errc::precondition_violated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace altruns
