#ifndef PLUMBING_ERRORS_HPP
#define PLUMBING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plumbing {

/// Base class for all library errors.  The `kind` partitions errors into the
/// classes surfaced as distinct CLI exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind { io, parse, precondition, cap, internal };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// File or stream failure (missing file, unreadable path, ...).
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Kind::io, what) {}
};

/// Malformed textual input; carries a 1-based line and column when known
/// (0 = not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(Kind::parse, format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    std::string s = what + " (line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ")";
  }
  int line_;
  int column_;
};

/// A mathematical precondition failed.  `code` distinguishes the failure
/// classes that callers branch on; `where` names the offending vertex or
/// object when there is one.
class MathError : public Error {
 public:
  enum class Code {
    invalid_pair,          // not coprime / out of range p,q
    non_coprime,           // gcd(q,p) != 1 where required
    not_negative_definite,
    singular_matrix,
    zero_euler_number,     // Schur complement / e(Y) denominator vanishes
    euler_not_negative,    // e(Y) >= 0 where e(Y) < 0 required
    central_weight_range,  // e0 > -1 where e0 <= -1 required
    nonpositive_denominator,  // a_v - sum(alpha_children) <= 0 in the recursion
    not_minimal,
    invalid_rotation,
    dimension_mismatch,
    domain,                // other argument-domain failure
  };

  MathError(Code code, const std::string& what, std::string where = {})
      : Error(Kind::precondition, what), code_(code), where_(std::move(where)) {}

  Code code() const { return code_; }
  const std::string& where() const { return where_; }

 private:
  Code code_;
  std::string where_;
};

/// An enumeration exceeded its configured cap.
class CapError : public Error {
 public:
  explicit CapError(const std::string& what) : Error(Kind::cap, what) {}
};

}  // namespace plumbing

#endif
