#ifndef QALG_ERRORS_HPP
#define QALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qalg {

/* Base class for everything thrown by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Operands belong to different rings. */
class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& msg) : Error(msg) {}
};

/* Polynomial or JSON text failed to parse; position is a 0-based offset. */
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/* A substitution, map or differential does not preserve the grading. */
class DegreeMismatch : public Error {
public:
    explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

/* An operation that requires weighted-homogeneous input got mixed degrees. */
class NonHomogeneous : public Error {
public:
    explicit NonHomogeneous(const std::string& msg) : Error(msg) {}
};

/* Buchberger processed more critical pairs than the configured cap. */
class PairCapExceeded : public Error {
public:
    explicit PairCapExceeded(const std::string& msg) : Error(msg) {}
};

/* Group closure grew past the configured cap. */
class ClosureCapExceeded : public Error {
public:
    explicit ClosureCapExceeded(const std::string& msg) : Error(msg) {}
};

/* The ideal is not stable under the group action. */
class UnstableIdeal : public Error {
public:
    explicit UnstableIdeal(const std::string& msg) : Error(msg) {}
};

/* Monomial-wise invariant enumeration needs every element to fix each
   variable up to sign. */
class NotMonomialDiagonal : public Error {
public:
    explicit NotMonomialDiagonal(const std::string& msg) : Error(msg) {}
};

/* Fiber algebra structure constants violate an axiom. */
class FiberError : public Error {
public:
    explicit FiberError(const std::string& msg) : Error(msg) {}
};

/* Spectral sequence bookkeeping failure (d after d nonzero, lost tensor
   basis, bidegree mismatch, undeterminable differential). */
class SpecseqError : public Error {
public:
    explicit SpecseqError(const std::string& msg) : Error(msg) {}
};

/* The truncation window is too small for the requested report. */
class TruncationTooSmall : public Error {
public:
    explicit TruncationTooSmall(const std::string& msg) : Error(msg) {}
};

/* Input file violates the expected schema. */
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

} // namespace qalg

#endif
