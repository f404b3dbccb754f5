#pragma once

#include <stdexcept>
#include <string>

namespace sr {

enum class errc {
  invalid_order,
  center_mismatch,
  singular_division,
  order_exceeded,
  invalid_instance,
  infeasible,
  missing_data,
  rigid_case,
  not_a_self_map,
  invalid_derivative,
  degenerate_frame,
  solver_bracket_failure,
  convexity_violation,
  invalid_argument,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sr
