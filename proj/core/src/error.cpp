#include "dyck/error.hpp"

namespace dyck {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_char:
      return "InvalidChar";
    case Errc::prefix_violation:
      return "PrefixViolation";
    case Errc::unbalanced:
      return "Unbalanced";
    case Errc::empty_word:
      return "EmptyWord";
    case Errc::not_rectangular:
      return "NotRectangular";
    case Errc::not_binary:
      return "NotBinary";
    case Errc::m1_violation:
      return "M1Violation";
    case Errc::m2_violation:
      return "M2Violation";
    case Errc::out_of_range:
      return "OutOfRange";
    case Errc::not_in_family:
      return "NotInFamily";
  }
  return "UnknownError";
}

std::string_view m2_clause_name(M2Clause clause) {
  switch (clause) {
    case M2Clause::exists:
      return "M2";
    case M2Clause::copy:
      return "M2.1";
    case M2Clause::zero_mid:
      return "M2.2";
    case M2Clause::one_block:
      return "M2.3";
    case M2Clause::zero_tail:
      return "M2.4";
  }
  return "M2";
}

}  // namespace dyck
