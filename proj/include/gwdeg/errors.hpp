// Typed error conditions shared by the whole library. Every throwing
// operation raises Error with a specific Errc so callers (and the CLI)
// can dispatch without string matching.
#pragma once

#include <stdexcept>
#include <string>

namespace gwdeg {

enum class Errc {
  division_by_zero,
  descriptor_mismatch,
  unsupported_field,
  zero_input,
  not_an_extension,
  degenerate_form,
  unsupported_n,
  not_zero_dimensional,
  unit_ideal,
  not_a_zero,
  char_divides_dim,
  zero_jacobian_class,
  degenerate_result,
  not_etale,
  inseparable_residue_field,
  unsupported_fiber_point,
  grade_mismatch,
  zero_symbol,
  rewrite_limit_exceeded,
  zero_functional,
  parse_error,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::descriptor_mismatch: return "DescriptorMismatch";
    case Errc::unsupported_field: return "UnsupportedField";
    case Errc::zero_input: return "ZeroInput";
    case Errc::not_an_extension: return "NotAnExtension";
    case Errc::degenerate_form: return "DegenerateForm";
    case Errc::unsupported_n: return "UnsupportedN";
    case Errc::not_zero_dimensional: return "NotZeroDimensional";
    case Errc::unit_ideal: return "UnitIdeal";
    case Errc::not_a_zero: return "NotAZero";
    case Errc::char_divides_dim: return "CharDividesDim";
    case Errc::zero_jacobian_class: return "ZeroJacobianClass";
    case Errc::degenerate_result: return "DegenerateResult";
    case Errc::not_etale: return "NotEtale";
    case Errc::inseparable_residue_field: return "InseparableResidueField";
    case Errc::unsupported_fiber_point: return "UnsupportedFiberPoint";
    case Errc::grade_mismatch: return "GradeMismatch";
    case Errc::zero_symbol: return "ZeroSymbol";
    case Errc::rewrite_limit_exceeded: return "RewriteLimitExceeded";
    case Errc::zero_functional: return "ZeroFunctional";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gwdeg
