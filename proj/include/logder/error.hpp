#ifndef LOGDER_ERROR_HPP
#define LOGDER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logder {

/// Base class of every domain error raised by the library.
///
/// `name()` is a stable machine-readable identifier; the command line front
/// end prints it and maps every `Error` to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed or inconsistent arguments (dimension mismatch, bad index, ...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("InputError", message) {}

 protected:
  InputError(std::string name, const std::string& message)
      : Error(std::move(name), message) {}
};

class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& message) : InputError("ParseError", message) {}
};

class DuplicateHyperplane : public InputError {
 public:
  DuplicateHyperplane(std::size_t first, std::size_t second);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class NonEssential : public InputError {
 public:
  NonEssential(std::size_t rank, std::size_t ell);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t deficit() const noexcept { return ell_ - rank_; }

 private:
  std::size_t rank_;
  std::size_t ell_;
};

/// Raised when alpha_i does not divide theta(alpha_i). `index()` is 0-based;
/// the message reports the 1-based hyperplane number.
class NotLogarithmic : public Error {
 public:
  explicit NotLogarithmic(std::size_t index);

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A documented precondition of an operation does not hold.
class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& message)
      : Error("PreconditionFailed", message) {}
};

}  // namespace logder

#endif  // LOGDER_ERROR_HPP
