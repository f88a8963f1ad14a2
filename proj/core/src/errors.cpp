#include "clsfront/errors.hpp"

namespace clsfront {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::invalid_utf8: return "InvalidUtf8";
    case Errc::unknown_codepoint: return "UnknownCodepoint";
    case Errc::misplaced_sign: return "MisplacedSign";
    case Errc::empty_word: return "EmptyWord";
    case Errc::unknown_rule_pack: return "UnknownRulePack";
    case Errc::malformed_profile: return "MalformedProfile";
    case Errc::malformed_data: return "MalformedData";
    case Errc::invalid_inventory: return "InvalidInventory";
    case Errc::no_candidates: return "NoCandidates";
    case Errc::empty_target_inventory: return "EmptyTargetInventory";
    case Errc::not_wav: return "NotWav";
    case Errc::unsupported_encoding: return "UnsupportedEncoding";
    case Errc::truncated_file: return "TruncatedFile";
    case Errc::too_short: return "TooShort";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::sample_rate_mismatch: return "SampleRateMismatch";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      offset_(offset) {}

}  // namespace clsfront
