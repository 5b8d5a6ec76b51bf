#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace penner {

enum class ErrorCode {
  invalid_parameter,
  not_nonnegative,
  no_real_root,
  no_real_solution,
  not_bipartite,
  not_affine,
  index_out_of_range,
  invalid_word,
  too_large,
  invalid_map,
  invalid_genus,
  invalid_document,
  unclassified_survivor,
  internal_inconsistency,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` is the machine-readable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures that indicate a bug rather than bad input.
  bool is_internal() const noexcept {
    return code_ == ErrorCode::unclassified_survivor ||
           code_ == ErrorCode::internal_inconsistency;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace penner
