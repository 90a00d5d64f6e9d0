#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

/* Base class for every domain error raised by the library.  `code()` is a
 * stable machine-readable identifier; `what()` carries the human-readable
 * detail (offending vertex/arrow/letter index and so on). */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define GENTLE_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}         \
    }

GENTLE_DEFINE_ERROR(NonComposableRelation);
GENTLE_DEFINE_ERROR(FanOutExceeded);
GENTLE_DEFINE_ERROR(GentlenessViolation);
GENTLE_DEFINE_ERROR(InfiniteDimensional);
GENTLE_DEFINE_ERROR(EndpointMismatch);
GENTLE_DEFINE_ERROR(UnknownArrow);
GENTLE_DEFINE_ERROR(IllegalJunction);
GENTLE_DEFINE_ERROR(NotABand);
GENTLE_DEFINE_ERROR(IrrationalRoot);
GENTLE_DEFINE_ERROR(OrderMismatch);
GENTLE_DEFINE_ERROR(NotAChainMap);
GENTLE_DEFINE_ERROR(CaseNotApplicable);
GENTLE_DEFINE_ERROR(ParseError);
GENTLE_DEFINE_ERROR(Overflow);
GENTLE_DEFINE_ERROR(Internal);

#undef GENTLE_DEFINE_ERROR

/* One violated gentleness condition; validate_gentle reports all of them at
 * once so a bad presentation can be fixed in a single pass. */
struct Violation {
    std::string code;     // one of the error-class names above
    std::string message;  // names the offending vertex / arrow / relation
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error("ValidationError", join(violations)), violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<Violation>& vs) {
        std::string out;
        for (const auto& v : vs) {
            if (!out.empty()) out += "; ";
            out += v.code + ": " + v.message;
        }
        return out;
    }
    std::vector<Violation> violations_;
};

}  // namespace gentle
