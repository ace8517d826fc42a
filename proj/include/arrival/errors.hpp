#ifndef ARRIVAL_ERRORS_HPP
#define ARRIVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arrival {

// Numerical failure distinct from precondition violations: a quantization
// root could not be bracketed. The CLI maps this to exit code 3
// (std::domain_error maps to exit code 2).
class bracket_error : public std::runtime_error {
public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace arrival

#endif
