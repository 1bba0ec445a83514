#ifndef PARTASYM_ERRORS_HPP
#define PARTASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace partasym {

// Query outside a model's validity region (e.g. E below the minimum energy
// N(N+1)/2).  The message names the violated bound.
class feasibility_error : public std::runtime_error {
public:
    explicit feasibility_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A saddle exists but the Gaussian prefactor degenerates there (radicand or
// Hessian determinant not positive).
class validity_error : public std::runtime_error {
public:
    explicit validity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Root bracketing or another numerical step failed; message carries
// diagnostics.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed sweep spec or config file; message names the offending field.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace partasym

#endif
