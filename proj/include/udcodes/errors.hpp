#ifndef UDCODES_ERRORS_HPP
#define UDCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace udc {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two values built over different alphabets were combined.
class AlphabetMismatchError : public Error {
  public:
    explicit AlphabetMismatchError(const std::string& msg) : Error(msg) {}
};

/// Invalid construction of a domain value (empty codeword, duplicate, bad symbol).
class InvalidValueError : public Error {
  public:
    explicit InvalidValueError(const std::string& msg) : Error(msg) {}
};

/// A configured enumeration / term-count / degree bound was exceeded.
class BoundExceededError : public Error {
  public:
    BoundExceededError(const std::string& msg, unsigned long long found_so_far = 0)
        : Error(msg), found(found_so_far) {}
    unsigned long long found;
};

/// A multiset of lengths violates the Kraft inequality.
class KraftViolationError : public Error {
  public:
    KraftViolationError(const std::string& msg, std::string exact_sum_)
        : Error(msg), exact_sum(std::move(exact_sum_)) {}
    std::string exact_sum; // "num/den"
};

/// A caller-checked precondition did not hold.
class PreconditionError : public Error {
  public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Two factorizations were found where the preconditions promised one.
class InternalInconsistencyError : public Error {
  public:
    explicit InternalInconsistencyError(const std::string& msg) : Error(msg) {}
};

/// Malformed code file; carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, int line_) : Error(msg), line(line_) {}
    int line;
};

/// Generator could not satisfy its bounds.
class UnsatisfiableBoundsError : public Error {
  public:
    explicit UnsatisfiableBoundsError(const std::string& msg) : Error(msg) {}
};

} // namespace udc

#endif
