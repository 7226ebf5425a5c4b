#pragma once

#include <stdexcept>
#include <string>

namespace netident {

/// Invalid caller-supplied data (vertex ids out of range, malformed documents).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated operation precondition (e.g. non-square input to a square-only check).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by a zero rational function.
class division_by_zero_error : public std::runtime_error {
public:
    explicit division_by_zero_error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix inversion requested for a matrix with identically zero determinant.
class singular_matrix_error : public std::runtime_error {
public:
    explicit singular_matrix_error(const std::string& what) : std::runtime_error(what) {}
};

/// Constrained-path subset enumeration would exceed the configured budget.
class budget_exceeded_error : public std::runtime_error {
public:
    explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

/// Counterexample construction exhausted its resampling budget.
class construction_failed_error : public std::runtime_error {
public:
    explicit construction_failed_error(const std::string& what) : std::runtime_error(what) {}
};

/// A postcondition the library guarantees internally was violated; indicates a bug.
class internal_consistency_error : public std::logic_error {
public:
    explicit internal_consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace netident
