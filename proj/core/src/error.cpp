#include "thetalab/error.hpp"

namespace thetalab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::RankMismatch: return "RANK_MISMATCH";
    case ErrorCode::NotInModule: return "NOT_IN_MODULE";
    case ErrorCode::NotAFactorization: return "NOT_A_FACTORIZATION";
    case ErrorCode::FreeModule: return "FREE_MODULE";
    case ErrorCode::NonIsolated: return "NONISOLATED";
    case ErrorCode::InfiniteLength: return "INFINITE_LENGTH";
    case ErrorCode::NotProper: return "NOT_PROPER";
    case ErrorCode::Parity: return "PARITY";
    case ErrorCode::NotQuasiHomogeneous: return "NOT_QUASIHOMOGENEOUS";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
  }
  return "UNKNOWN";
}

}  // namespace thetalab
