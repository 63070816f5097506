#pragma once

#include <stdexcept>
#include <string>

namespace latcc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixed lengths or mismatched block structure.
struct DimensionError : Error {
  using Error::Error;
};

// A word list that does not enumerate a linear code exactly.
struct NotLinearError : Error {
  NotLinearError(std::string message, std::string word)
      : Error(std::move(message)), offending_word(std::move(word)) {}
  std::string offending_word;
};

// A code family that is not an ascending chain.
struct NotNestedError : Error {
  using Error::Error;
};

// Explicit enumeration would exceed the configured cap.
struct EnumerationCapError : Error {
  using Error::Error;
};

// An operation that needs a different constellation mode or code shape.
struct StructureError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

}  // namespace latcc
