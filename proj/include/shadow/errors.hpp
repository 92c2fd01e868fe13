#pragma once

#include <stdexcept>
#include <string>

namespace shadow {

// Base for everything the library throws on bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define SHADOW_ERROR(Name)                                              \
    struct Name : Error {                                               \
        using Error::Error;                                             \
        const char* kind() const noexcept override { return #Name; }    \
    }

SHADOW_ERROR(DomainError);
SHADOW_ERROR(NonHomogeneous);
SHADOW_ERROR(NonIntegerGenus);
SHADOW_ERROR(EmptyDiagram);
SHADOW_ERROR(DisconnectedGraph);
SHADOW_ERROR(NoValidTree);
SHADOW_ERROR(MissingGenerator);
SHADOW_ERROR(WidthLimit);
SHADOW_ERROR(EmptyBlockSpace);

#undef SHADOW_ERROR

// Text parse failure; pos is a 0-based character offset into the input.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : Error(msg + " at position " + std::to_string(p)), pos(p) {}
    const char* kind() const noexcept override { return "ParseError"; }
};

} // namespace shadow
