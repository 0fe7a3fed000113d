#ifndef DYNPROP_ERRORS_HPP
#define DYNPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynprop {

// Precondition / malformed-input violations. CLI maps these to exit code 2.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured cap was exceeded. Carries the cap's name and limit so reports
// can say exactly which knob to raise. CLI maps these to exit code 3.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& cap_name, long long limit, const std::string& detail)
        : std::runtime_error(detail + " (cap '" + cap_name + "' = " + std::to_string(limit) + ")"),
          cap_name_(cap_name),
          limit_(limit) {}

    const std::string& cap_name() const { return cap_name_; }
    long long limit() const { return limit_; }

private:
    std::string cap_name_;
    long long limit_;
};

// An internal identity that the construction guarantees failed to hold.
// Signals a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace dynprop

#endif
