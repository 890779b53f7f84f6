#include "rathom/error.hpp"

namespace rathom {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "E_PARSE";
    case ErrorCode::invalid_argument: return "E_INVALID";
    case ErrorCode::capacity: return "E_CAPACITY";
    case ErrorCode::range: return "E_RANGE";
    case ErrorCode::factorization: return "E_FACTOR";
    case ErrorCode::io: return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace rathom
