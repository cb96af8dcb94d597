#ifndef HOPF_ERROR_HPP
#define HOPF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tree, forest, word or BBR text. offset is a byte offset into the
// input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Input outside the domain of an operation (unlabeled vertex passed to pi,
// zero pairing passed to tau_star, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopf

#endif
