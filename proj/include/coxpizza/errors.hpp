#ifndef COXPIZZA_ERRORS_HPP
#define COXPIZZA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxpizza {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct RankError : Error { using Error::Error; };
struct UnsupportedType : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct IncompatibleConductor : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct InvalidChoice : Error { using Error::Error; };
struct FaceNotBelow : Error { using Error::Error; };
struct NotDominant : Error { using Error::Error; };
struct NonSimplicial : Error { using Error::Error; };
struct MixedContext : Error { using Error::Error; };

} // namespace coxpizza

#endif
