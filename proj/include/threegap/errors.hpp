#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace threegap {

// Base of every failure the library reports. `where` carries the offending
// N (predictor/oracle) or step index (induction) when one applies.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what, std::optional<std::int64_t> where = std::nullopt)
        : std::runtime_error(what), where_(where) {}

    const std::optional<std::int64_t>& where() const noexcept { return where_; }
    virtual const char* kind() const noexcept { return "Error"; }

private:
    std::optional<std::int64_t> where_;
};

#define THREEGAP_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        using Error::Error;                                           \
        const char* kind() const noexcept override { return #Name; }  \
    }

THREEGAP_DEFINE_ERROR(DomainError);
THREEGAP_DEFINE_ERROR(ParseError);
THREEGAP_DEFINE_ERROR(DepthError);
THREEGAP_DEFINE_ERROR(InsufficientDepth);
THREEGAP_DEFINE_ERROR(RepresentationError);
THREEGAP_DEFINE_ERROR(CollisionError);
THREEGAP_DEFINE_ERROR(KeaneViolation);
THREEGAP_DEFINE_ERROR(TilingError);

#undef THREEGAP_DEFINE_ERROR

}  // namespace threegap
