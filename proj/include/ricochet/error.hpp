#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ricochet {

/// Error categories raised by the library. The CLI maps them onto exit codes.
enum class Errc {
  malformed_scalar,
  divide_by_zero,
  domain_mismatch,
  evaluation_pole,
  transvectant_range,
  degree_mismatch,
  zero_form,
  malformed_point,
  degenerate_join,
  degenerate_meet,
  degenerate_cross_ratio,
  no_unique_map,
  degenerate_involution,
  singular_map,
  invalid_array,
  degenerate_pascal,
  invalid_sextuple,
  degenerate_involutive,
  degenerate_rico,
  theorem_violation,
  degenerate_sigma,
  derivation_failure,
  invalid_quadruple,
  genericity_violation,
  rendering_chart,
  malformed_document,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::malformed_scalar: return "malformed-scalar";
    case Errc::divide_by_zero: return "divide-by-zero";
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::evaluation_pole: return "evaluation-pole";
    case Errc::transvectant_range: return "transvectant-range";
    case Errc::degree_mismatch: return "degree-mismatch";
    case Errc::zero_form: return "zero-form";
    case Errc::malformed_point: return "malformed-point";
    case Errc::degenerate_join: return "degenerate-join";
    case Errc::degenerate_meet: return "degenerate-meet";
    case Errc::degenerate_cross_ratio: return "degenerate-cross-ratio";
    case Errc::no_unique_map: return "no-unique-map";
    case Errc::degenerate_involution: return "degenerate-involution";
    case Errc::singular_map: return "singular-map";
    case Errc::invalid_array: return "invalid-array";
    case Errc::degenerate_pascal: return "degenerate-pascal";
    case Errc::invalid_sextuple: return "invalid-sextuple";
    case Errc::degenerate_involutive: return "degenerate-involutive";
    case Errc::degenerate_rico: return "degenerate-rico";
    case Errc::theorem_violation: return "theorem-violation";
    case Errc::degenerate_sigma: return "degenerate-sigma";
    case Errc::derivation_failure: return "derivation-failure";
    case Errc::invalid_quadruple: return "invalid-quadruple";
    case Errc::genericity_violation: return "genericity-violation";
    case Errc::rendering_chart: return "rendering-chart";
    case Errc::malformed_document: return "malformed-document";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ricochet
