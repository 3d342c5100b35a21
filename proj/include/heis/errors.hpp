#pragma once

#include <stdexcept>
#include <string>

namespace heis {

// Base for all domain errors thrown by the library. kind() is a stable
// machine-readable tag; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HEIS_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& detail)                  \
            : Error(#Name, detail) {}                             \
    };

HEIS_DEFINE_ERROR(OrientationError)
HEIS_DEFINE_ERROR(AtInfinity)
HEIS_DEFINE_ERROR(SingularMatrix)
HEIS_DEFINE_ERROR(OutsideDomain)
HEIS_DEFINE_ERROR(AntipodalAmbiguity)
HEIS_DEFINE_ERROR(DegenerateSegment)
HEIS_DEFINE_ERROR(LengthMismatch)
HEIS_DEFINE_ERROR(SideMismatch)
HEIS_DEFINE_ERROR(IncompleteHolonomy)
HEIS_DEFINE_ERROR(NotTranslation)
HEIS_DEFINE_ERROR(NotShear)
HEIS_DEFINE_ERROR(NotExtendable)
HEIS_DEFINE_ERROR(InvarianceViolation)
HEIS_DEFINE_ERROR(EmptySchedule)
HEIS_DEFINE_ERROR(NotClosed)

#undef HEIS_DEFINE_ERROR

} // namespace heis
