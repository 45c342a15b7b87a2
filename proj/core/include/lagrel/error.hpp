#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagrel {

enum class Errc {
  mixed_fields,
  division_by_zero,
  dimension_mismatch,
  arity_mismatch,
  unknown_generator,
  index_out_of_range,
  equal_indices,
  field_not_prime,
  not_lagrangian,
  rank_deficient,
  euler_identity_failed,
  even_or_non_prime,
  circuit_too_large,
  non_stabilizer_gate,
  state_not_stabilizer,
  correspondence_violation,
  negative_value,
  dangling_node,
  parse_error,
  io_error,
  invalid_argument,
};

const char* errc_name(Errc c);

// Single exception type for the whole library.  The code is the stable,
// machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Parse failures additionally carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : Error(Errc::parse_error,
              msg + " at line " + std::to_string(line) + ", column " +
                  std::to_string(col)),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

}  // namespace lagrel
