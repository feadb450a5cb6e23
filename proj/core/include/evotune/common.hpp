#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace evotune {

// Base for all operational errors thrown by the library. Domain outcomes that
// are expected in normal operation (extraction failures, execution statuses)
// are values, not exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed line in a record log; carries the 1-based line number.
class LogParseError : public IoError {
 public:
  LogParseError(std::string message, std::size_t line)
      : IoError(std::move(message)), line_number(line) {}
  std::size_t line_number;
};

class RegistrationError : public Error {
 public:
  using Error::Error;
};

// Remote backend unreachable / failed after retries.
class TransportError : public Error {
 public:
  using Error::Error;
};

// Backend answered but returned fewer outputs than requested.
class IncompleteBatchError : public TransportError {
 public:
  IncompleteBatchError(std::size_t expected_n, std::size_t got_n)
      : TransportError("incomplete generation batch: expected " +
                       std::to_string(expected_n) + " outputs, got " +
                       std::to_string(got_n)),
        expected(expected_n),
        got(got_n) {}
  std::size_t expected;
  std::size_t got;
};

class TrainerError : public Error {
 public:
  using Error::Error;
};

}  // namespace evotune
