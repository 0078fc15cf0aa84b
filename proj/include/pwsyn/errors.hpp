#pragma once

#include <stdexcept>
#include <string>

namespace pwsyn {

// Every library failure derives from pwsyn::error so callers can catch the
// whole family at once; the concrete type names the violated precondition.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PWSYN_DEFINE_ERROR(name)                                             \
    class name : public error {                                              \
    public:                                                                  \
        explicit name(const std::string& what) : error(#name ": " + what) {} \
    }

PWSYN_DEFINE_ERROR(EmptySet);
PWSYN_DEFINE_ERROR(BadBound);
PWSYN_DEFINE_ERROR(NoRow);
PWSYN_DEFINE_ERROR(NotPartition);
PWSYN_DEFINE_ERROR(NotVanishing);
PWSYN_DEFINE_ERROR(NotIntegral);
PWSYN_DEFINE_ERROR(DegreeTooLow);
PWSYN_DEFINE_ERROR(WindowExhausted);
PWSYN_DEFINE_ERROR(BadEpsilon);
PWSYN_DEFINE_ERROR(NotSpade);
PWSYN_DEFINE_ERROR(RadiusExhausted);
PWSYN_DEFINE_ERROR(ParseError);
PWSYN_DEFINE_ERROR(Mismatch);
PWSYN_DEFINE_ERROR(Infeasible);

#undef PWSYN_DEFINE_ERROR

} // namespace pwsyn
