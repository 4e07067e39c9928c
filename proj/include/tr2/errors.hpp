#ifndef TR2_ERRORS_HPP
#define TR2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tr2 {

// Malformed input text (edge lists, graph6, partition files). Messages name
// the offending line where one exists.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated operation precondition (odd m, non-maximal decomposition, ...).
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Search budget exhausted before an exact answer was established.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A supplied certificate does not meet the hypotheses it claims to.
struct certificate_error : std::runtime_error {
    explicit certificate_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction this library produced failed its own validation; a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace tr2

#endif
