#include "catalyxis/error.hpp"

namespace catalyxis {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::NotIncomparable: return "NotIncomparable";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace catalyxis
