#pragma once

#include <stdexcept>
#include <string>

namespace torembed {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI and the Python bindings.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TOREMBED_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

TOREMBED_DEFINE_ERROR(NotUnimodular);
TOREMBED_DEFINE_ERROR(MalformedFan);
TOREMBED_DEFINE_ERROR(NotComplete);
TOREMBED_DEFINE_ERROR(ConeNotInFan);
TOREMBED_DEFINE_ERROR(UnknownPreset);
TOREMBED_DEFINE_ERROR(NotProjective);
TOREMBED_DEFINE_ERROR(NotAmple);
TOREMBED_DEFINE_ERROR(NoPositiveKernel);
TOREMBED_DEFINE_ERROR(NotDegreeZero);
TOREMBED_DEFINE_ERROR(XiMismatch);
TOREMBED_DEFINE_ERROR(DegreeOverflow);
TOREMBED_DEFINE_ERROR(FormatError);

#undef TOREMBED_DEFINE_ERROR

}  // namespace torembed
