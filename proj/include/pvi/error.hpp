#pragma once

#include <stdexcept>
#include <string>

namespace pvi {

enum class ErrorKind {
    DegenerateInput,
    NoSolution,
    UnsupportedField,
    NormalFormDegenerate,
    SpecialParameters,
    NotSimple,
    SpecialWeights,
    NoFiniteIntersection,
    ParseError,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& what)
        : std::runtime_error(std::string(error_name(k)) + ": " + what), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pvi
