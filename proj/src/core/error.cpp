#include "hg/core/error.hpp"

namespace hg {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::NotConfluent: return "NotConfluent";
        case ErrorKind::NotAST: return "NotAST";
        case ErrorKind::NotPlusMinusOne: return "NotPlusMinusOne";
        case ErrorKind::NotACocycle: return "NotACocycle";
        case ErrorKind::CongruenceWitnessInvalid: return "CongruenceWitnessInvalid";
        case ErrorKind::SimilarityWitnessInvalid: return "SimilarityWitnessInvalid";
        case ErrorKind::NotStabilized: return "NotStabilized";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::NotYD: return "NotYD";
        case ErrorKind::NotABimodule: return "NotABimodule";
        case ErrorKind::NoCharacter: return "NoCharacter";
        case ErrorKind::Precondition: return "PreconditionViolated";
    }
    return "Error";
}

}  // namespace hg
