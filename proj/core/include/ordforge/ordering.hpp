#pragma once

#include <stdexcept>
#include <string>

namespace ordforge {

enum class Ord { Less, Equal, Greater };

inline Ord flip(Ord o) {
  switch (o) {
    case Ord::Less: return Ord::Greater;
    case Ord::Greater: return Ord::Less;
    default: return Ord::Equal;
  }
}

inline const char* to_string(Ord o) {
  switch (o) {
    case Ord::Less: return "LT";
    case Ord::Equal: return "EQ";
    default: return "GT";
  }
}

// Raised when a term or order violates a formation invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on malformed textual input; carries a 1-based column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int column)
      : std::runtime_error(msg + " at column " + std::to_string(column)),
        column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

}  // namespace ordforge
