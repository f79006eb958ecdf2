// Exception types and the warning channel shared by all modules.
#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace est {

// Raised when an argument sits on (or within the guard radius of) a pole.
class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, std::complex<double> where)
        : std::domain_error(what), where_(where) {}
    std::complex<double> where() const { return where_; }

private:
    std::complex<double> where_;
};

// Raised when a numerical procedure cannot reach its requested accuracy.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using WarningHandler = std::function<void(const std::string&)>;

// Installs a handler for precision warnings; the default writes to stderr.
// Passing an empty function restores the default.
void set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace est
