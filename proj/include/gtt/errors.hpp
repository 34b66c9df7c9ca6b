#pragma once

#include <stdexcept>
#include <string>

namespace gtt {

// Domain error categories. The CLI maps any Error to exit code 1 and prints
// the category name plus the message on stderr.
enum class Errc {
  not_a_tree,
  index_out_of_range,
  not_in_set,
  no_total_dominating_set,
  too_large_for_oracle,
  is_star,
  too_small,
  not_a_gamma_t_set,
  precondition_violated,
  size_mismatch,
  oracle_cap_exceeded,
  bad_format,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_a_tree: return "NotATree";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_in_set: return "NotInSet";
    case Errc::no_total_dominating_set: return "NoTotalDominatingSet";
    case Errc::too_large_for_oracle: return "TooLargeForOracle";
    case Errc::is_star: return "IsStar";
    case Errc::too_small: return "TooSmall";
    case Errc::not_a_gamma_t_set: return "NotAGammaTSet";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::oracle_cap_exceeded: return "OracleCapExceeded";
    case Errc::bad_format: return "BadFormat";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gtt
