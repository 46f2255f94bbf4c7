#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcns {

/// Error categories raised by the library. The names are stable and are
/// printed by the CLI.
enum class Errc {
    ParseError,
    ExactnessMismatch,
    NonNumeric,
    DivisionByZero,
    BasisMismatch,
    MixedBasis,
    IndexOutOfRange,
    DimMismatch,
    NoUnit,
    NotUnique,
    UnitNotFirstBasis,
    NonScalarConjProduct,
    SingularDivisor,
    NoRootFound,
    SingularTransform,
    ParamClash,
    UnsupportedDoubling,
    NotFound,
    DuplicateName,
    ValidationFailed,
    BuiltinProtected,
    CorruptFile,
    ZeroAxis,
    ZeroQuaternion,
    IoError,
    InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position);

    /// Zero-based character offset into the parsed text.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class NotFoundError : public Error {
public:
    NotFoundError(const std::string& name, std::vector<std::string> suggestions);

    const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

private:
    std::vector<std::string> suggestions_;
};

}  // namespace hcns
