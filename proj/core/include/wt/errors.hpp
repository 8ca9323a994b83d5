#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptySequence : public Error {
public:
    EmptySequence() : Error("degree sequence must have at least one term") {}
};

class NegativeTerm : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class RowOverflow : public Error {
public:
    using Error::Error;
};

class NotGraphic : public Error {
public:
    using Error::Error;
};

/// An input exceeds an exhaustive-search or representation bound.
class SizeLimit : public Error {
public:
    SizeLimit(const std::string& what, std::size_t bound)
        : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}

    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class InvalidTransformation : public Error {
public:
    using Error::Error;
};

/// A build operation whose skip/attach vertex is not valid for the graph it is applied to.
class InvalidOperation : public Error {
public:
    explicit InvalidOperation(const std::string& what, std::ptrdiff_t op_index = -1)
        : Error(op_index < 0 ? what : "op " + std::to_string(op_index) + ": " + what),
          op_index_(op_index) {}

    /// Position of the offending op inside a script, or -1 when not applied from a script.
    std::ptrdiff_t op_index() const noexcept { return op_index_; }

private:
    std::ptrdiff_t op_index_;
};

class NotWeaklyThreshold : public Error {
public:
    using Error::Error;
};

class NotExpandable : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace wt
