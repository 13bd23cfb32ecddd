#ifndef EUCGRAPH_ERRORS_HPP
#define EUCGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eucgraph {

enum class errc {
  not_prime,
  even_characteristic,
  reducible_modulus,
  division_by_zero,
  field_mismatch,
  dimension_mismatch,
  index_out_of_range,
  non_real_eigenvalue,
  too_large,
  pattern_too_large,
  color_zero,
  subset_out_of_range,
  config_error,
  file_format_error,
  internal_error,
};

// Stable machine-readable tag, used verbatim in CLI error objects.
const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::non_real_eigenvalue: return "NonRealEigenvalue";
    case errc::too_large: return "TooLarge";
    case errc::pattern_too_large: return "PatternTooLarge";
    case errc::color_zero: return "ColorZero";
    case errc::subset_out_of_range: return "SubsetOutOfRange";
    case errc::config_error: return "ConfigError";
    case errc::file_format_error: return "FileFormatError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace eucgraph

#endif
