#include "hcns/error.hpp"

namespace hcns {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::ExactnessMismatch: return "ExactnessMismatch";
    case Errc::NonNumeric: return "NonNumeric";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::MixedBasis: return "MixedBasis";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::NoUnit: return "NoUnit";
    case Errc::NotUnique: return "NotUnique";
    case Errc::UnitNotFirstBasis: return "UnitNotFirstBasis";
    case Errc::NonScalarConjProduct: return "NonScalarConjProduct";
    case Errc::SingularDivisor: return "SingularDivisor";
    case Errc::NoRootFound: return "NoRootFound";
    case Errc::SingularTransform: return "SingularTransform";
    case Errc::ParamClash: return "ParamClash";
    case Errc::UnsupportedDoubling: return "UnsupportedDoubling";
    case Errc::NotFound: return "NotFound";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::BuiltinProtected: return "BuiltinProtected";
    case Errc::CorruptFile: return "CorruptFile";
    case Errc::ZeroAxis: return "ZeroAxis";
    case Errc::ZeroQuaternion: return "ZeroQuaternion";
    case Errc::IoError: return "IoError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(Errc::ParseError, what + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

NotFoundError::NotFoundError(const std::string& name, std::vector<std::string> suggestions)
    : Error(Errc::NotFound,
            [&] {
                std::string msg = "no hypercomplex system named '" + name + "'";
                if (!suggestions.empty()) {
                    msg += "; did you mean";
                    for (std::size_t i = 0; i < suggestions.size(); ++i)
                        msg += (i == 0 ? " '" : ", '") + suggestions[i] + "'";
                    msg += "?";
                }
                return msg;
            }()),
      suggestions_(std::move(suggestions)) {}

}  // namespace hcns
