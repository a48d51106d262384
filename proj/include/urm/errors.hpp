#pragma once

#include <stdexcept>
#include <string>

namespace urm {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid input: bad indices, empty components, malformed
/// documents, arguments outside their mathematical domain.
class malformed_input_error : public error {
public:
    explicit malformed_input_error(const std::string& what) : error(what) {}
};

/// Parameters outside the range where an operation is defined
/// (construction regimes, bound preconditions).
class regime_error : public error {
public:
    explicit regime_error(const std::string& what) : error(what) {}
};

/// Input exceeds a configured size cap.
class capacity_error : public error {
public:
    explicit capacity_error(const std::string& what) : error(what) {}
};

/// A puzzle whose rules force two values of the same category onto one person.
class inconsistent_puzzle_error : public error {
public:
    explicit inconsistent_puzzle_error(const std::string& what) : error(what) {}
};

} // namespace urm
