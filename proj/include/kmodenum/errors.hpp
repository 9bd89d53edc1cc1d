#ifndef KMODENUM_ERRORS_HPP
#define KMODENUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kmodenum {

class EmptyPolyhedron : public std::runtime_error {
public:
    EmptyPolyhedron() : std::runtime_error("empty polyhedron") {}
};

class UnboundedPolyhedron : public std::runtime_error {
public:
    explicit UnboundedPolyhedron(const std::string& column)
        : std::runtime_error("unbounded polyhedron (column '" + column + "' has no finite upper bound)") {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A brute-force or exhaustive routine was asked to exceed its size cap.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace kmodenum

#endif  // KMODENUM_ERRORS_HPP
