#ifndef CHERED_ERRORS_HPP
#define CHERED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chered {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct DomainMismatch : std::runtime_error {
    explicit DomainMismatch(const std::string& what) : std::runtime_error(what) {}
};

// the denominator of a rational function vanishes at the requested point
struct SpecializationPole : std::runtime_error {
    explicit SpecializationPole(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// a mathematically guaranteed identity failed; indicates an implementation bug
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct LemmaViolation : std::runtime_error {
    int order;
    LemmaViolation(const std::string& what, int l) : std::runtime_error(what), order(l) {}
};

struct RelationViolation : std::runtime_error {
    explicit RelationViolation(const std::string& what) : std::runtime_error(what) {}
};

struct CIFailure : std::runtime_error {
    int degree;
    CIFailure(const std::string& what, int d) : std::runtime_error(what), degree(d) {}
};

struct ContainmentFailure : std::runtime_error {
    explicit ContainmentFailure(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionGap : std::runtime_error {
    explicit DimensionGap(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chered

#endif
