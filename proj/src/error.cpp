#include "emcg/error.hpp"

namespace emcg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::UnsupportedSize: return "unsupported-size";
    case ErrorKind::NotSymplectic: return "not-symplectic";
    case ErrorKind::InvalidMatrix: return "invalid-matrix";
    case ErrorKind::NotMember: return "not-member";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::InvalidAction: return "invalid-action";
    case ErrorKind::InvalidSubgroup: return "invalid-subgroup";
    case ErrorKind::NotBlockStructured: return "not-block-structured";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::UnsupportedFamily: return "unsupported-family";
    case ErrorKind::InvalidTable: return "invalid-table";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace emcg
