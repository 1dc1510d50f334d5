#pragma once

#include <stdexcept>
#include <string>

namespace qg {

enum class errc {
  not_prime,
  reducible_modulus,
  no_generator,
  division_by_zero,
  zero_element,
  bad_shape,
  row_not_permutation,
  col_not_permutation,
  not_permutation,
  empty_set,
  wrong_order,
  equal_pair,
  not_coprime,
  cross_check_mismatch,
  invalid_params,
  no_valid_m,
  q_too_small,
  zero_gamma,
  no_suitable_c,
  out_of_range,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime:            return "NotPrime";
    case errc::reducible_modulus:    return "ReducibleModulus";
    case errc::no_generator:         return "NoGenerator";
    case errc::division_by_zero:     return "DivisionByZero";
    case errc::zero_element:         return "ZeroElement";
    case errc::bad_shape:            return "BadShape";
    case errc::row_not_permutation:  return "RowNotPermutation";
    case errc::col_not_permutation:  return "ColNotPermutation";
    case errc::not_permutation:      return "NotPermutation";
    case errc::empty_set:            return "EmptySet";
    case errc::wrong_order:          return "WrongOrder";
    case errc::equal_pair:           return "EqualPair";
    case errc::not_coprime:          return "NotCoprime";
    case errc::cross_check_mismatch: return "CrossCheckMismatch";
    case errc::invalid_params:       return "InvalidParams";
    case errc::no_valid_m:           return "NoValidM";
    case errc::q_too_small:          return "QTooSmall";
    case errc::zero_gamma:           return "ZeroGamma";
    case errc::no_suitable_c:        return "NoSuitableC";
    case errc::out_of_range:         return "OutOfRange";
    case errc::parse_error:          return "ParseError";
  }
  return "UnknownError";
}

/// Library-wide exception. `index()` carries the offending row/column/element
/// where that is meaningful (-1 otherwise).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, long index = -1)
      : std::runtime_error(std::string(errc_name(code)) +
                           (what.empty() ? "" : ": " + what)),
        code_(code),
        index_(index) {}

  errc code() const noexcept { return code_; }
  long index() const noexcept { return index_; }

 private:
  errc code_;
  long index_;
};

[[noreturn]] inline void fail(errc code, const std::string& what = "",
                              long index = -1) {
  throw error(code, what, index);
}

}  // namespace qg
