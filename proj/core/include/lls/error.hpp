#ifndef LLS_ERROR_HPP_
#define LLS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lls {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Input exceeds a configured search or enumeration bound.
struct SizeError : Error {
  using Error::Error;
};

//! A documented precondition fails (non-associative table, not an ideal,
//! not left legal, ...). The message names a witness.
struct PreconditionError : Error {
  using Error::Error;
};

//! Malformed table or word text.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept {
    return line_;
  }

 private:
  int line_;
};

}  // namespace lls

#endif  // LLS_ERROR_HPP_
