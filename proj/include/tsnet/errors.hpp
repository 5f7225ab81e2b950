#ifndef TSNET_ERRORS_HPP
#define TSNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsnet {

/// Error categories carried by every tsnet::Error. The CLI maps these onto
/// process exit codes (usage / input / internal).
enum class errc {
  invalid_parameter,
  missing_file,
  parse_failure,
  empty_column,
  non_finite_value,
  segmentation_mismatch,
  format_mismatch,
  internal_invariant,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_parameter:     return "invalid_parameter";
    case errc::missing_file:          return "missing_file";
    case errc::parse_failure:         return "parse_failure";
    case errc::empty_column:          return "empty_column";
    case errc::non_finite_value:      return "non_finite_value";
    case errc::segmentation_mismatch: return "segmentation_mismatch";
    case errc::format_mismatch:       return "format_mismatch";
    case errc::internal_invariant:    return "internal_invariant";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  errc code() const noexcept { return code_; }

  /// The message without the errc prefix, for rewrapping with context.
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tsnet

#endif  // TSNET_ERRORS_HPP
