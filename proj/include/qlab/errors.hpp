#ifndef QLAB_ERRORS_HPP
#define QLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlab {

enum class errc {
  incompatible_offset,
  non_unit_constant_term,
  offset_not_integral,
  modulus_present,
  cusp_not_on_level,
  hypothesis_violated,
  not_in_span,
  non_integral_coefficient,
  identity_violated,
  support_violation,
  cross_check_failed,
  bound_violated,
  counterexample_found,
  budget_exceeded,
  even_modulus,
  unknown_name,
  bad_input,
  io_error,
};

/// Library-wide exception; `code()` identifies the failed contract.
class error : public std::runtime_error {
public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace qlab

#endif
