#ifndef EFGROWTH_ERRORS_HPP
#define EFGROWTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace efgrowth {

// Malformed or schema-violating input. The CLI maps this to exit code 2.
class schema_error : public std::runtime_error {
public:
    schema_error(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Numeric failure (singular quadrature node, non-convergent subdivision,
// overflow). Carries the name of the failing operation; CLI exit code 3.
class numeric_error : public std::runtime_error {
public:
    numeric_error(std::string op, const std::string& what)
        : std::runtime_error(op + ": " + what), op_(std::move(op)) {}
    const std::string& op() const noexcept { return op_; }

private:
    std::string op_;
};

} // namespace efgrowth

#endif
