#pragma once

#include <stdexcept>
#include <string>

namespace pvx {

// Inputs that violate an operation's precondition. The CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ring_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// p divides a denominator, so the value has no image in Z/p^a.
class non_integral_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Inversion of a non-unit in Z/p^s.
class non_unit_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class undefined_valuation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A reduced rational function still has a pole at t = 0.
class pole_at_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Laurent-degree caps of the residue expansion did not stabilize.
class not_stabilized : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug rather than bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pvx
