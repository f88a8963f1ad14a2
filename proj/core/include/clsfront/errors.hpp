#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clsfront {

enum class Errc {
  unknown_label,
  invalid_utf8,
  unknown_codepoint,
  misplaced_sign,
  empty_word,
  unknown_rule_pack,
  malformed_profile,
  malformed_data,
  invalid_inventory,
  no_candidates,
  empty_target_inventory,
  not_wav,
  unsupported_encoding,
  truncated_file,
  too_short,
  dimension_mismatch,
  sample_rate_mismatch,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library. `offset` is a byte offset into the
// input text when the error concerns a specific position.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  Errc code_;
  std::optional<std::size_t> offset_;
};

}  // namespace clsfront
