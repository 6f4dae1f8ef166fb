#pragma once

#include <stdexcept>
#include <string>

namespace hg {

enum class ErrorKind {
    Parse,
    DenominatorVanishes,
    SingularMatrix,
    DegreeTooLarge,
    NotConfluent,
    NotAST,
    NotPlusMinusOne,
    NotACocycle,
    CongruenceWitnessInvalid,
    SimilarityWitnessInvalid,
    NotStabilized,
    NotConnected,
    NotYD,
    NotABimodule,
    NoCharacter,
    Precondition,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace hg
