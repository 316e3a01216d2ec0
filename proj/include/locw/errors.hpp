#ifndef LOCW_ERRORS_HPP
#define LOCW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace locw {

// Input could not be parsed (text formats, certificates).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation precondition does not hold (non-condensed input, disconnected
// graph, odd degree, parity violation, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A certificate does not fit its instance (not a permutation of the alphabet,
// not a permutation of the vertices, invalid path decomposition).
struct invalid_certificate_error : std::runtime_error {
    explicit invalid_certificate_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact solver was asked for an instance above its configured cap.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A bound that is guaranteed by one of the translation lemmas was missed.
// This never fires on correct code; it is a bug sentinel, not an input error.
struct contract_violation_error : std::logic_error {
    explicit contract_violation_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace locw

#endif  // LOCW_ERRORS_HPP
