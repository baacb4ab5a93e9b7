#ifndef LWO_ERROR_HPP
#define LWO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lwo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 1-based position inside a parsed text.
struct SourceSpan {
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
              ": " + message),
        span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

/// Raised when an ontology or constraint set violates a structural rule
/// (ill-formed inclusion, undeclared name, concept/role kind clash, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lwo

#endif  // LWO_ERROR_HPP
