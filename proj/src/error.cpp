#include "penner/error.hpp"

namespace penner {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameter: return "InvalidParameter";
    case ErrorCode::not_nonnegative: return "NotNonnegative";
    case ErrorCode::no_real_root: return "NoRealRoot";
    case ErrorCode::no_real_solution: return "NoRealSolution";
    case ErrorCode::not_bipartite: return "NotBipartite";
    case ErrorCode::not_affine: return "NotAffine";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::invalid_word: return "InvalidWord";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::invalid_map: return "InvalidMap";
    case ErrorCode::invalid_genus: return "InvalidGenus";
    case ErrorCode::invalid_document: return "InvalidDocument";
    case ErrorCode::unclassified_survivor: return "UnclassifiedSurvivor";
    case ErrorCode::internal_inconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace penner
