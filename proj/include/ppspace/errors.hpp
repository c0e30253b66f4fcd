#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppspace {

/// A structure document failed to parse. Line/column are 1-based.
class ParseError : public std::runtime_error {
public:
  enum class Kind { format, shape, content };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Line construction produced pencils that violate a Line invariant (possible
/// only when the underlying structure does not satisfy the axioms). Carries
/// the defining pair and the name of the violated invariant.
class MalformedLineError : public std::runtime_error {
public:
  MalformedLineError(std::uint32_t a, std::uint32_t b, bool from_planes,
                     const std::string& invariant)
      : std::runtime_error("malformed line through " +
                           std::string(from_planes ? "planes" : "points") + " (" +
                           std::to_string(a) + "," + std::to_string(b) +
                           "): " + invariant),
        a_(a), b_(b), from_planes_(from_planes), invariant_(invariant) {}

  std::uint32_t first_index() const { return a_; }
  std::uint32_t second_index() const { return b_; }
  bool from_planes() const { return from_planes_; }
  const std::string& invariant() const { return invariant_; }

private:
  std::uint32_t a_;
  std::uint32_t b_;
  bool from_planes_;
  std::string invariant_;
};

/// Two well-formed lines whose pencil intersections disagree: they share a
/// point but no plane (or vice versa), or share more than one of either.
/// Such lines witness an inconsistency of the structure itself.
class StructureInconsistencyError : public std::runtime_error {
public:
  explicit StructureInconsistencyError(const std::string& message)
      : std::runtime_error(message) {}
};

/// An exhaustive operation refused to run above its configured size bound.
class SizeBoundError : public std::runtime_error {
public:
  explicit SizeBoundError(const std::string& message) : std::runtime_error(message) {}
};

/// A checker that requires a verified structure was invoked on one that
/// failed verification, without the force flag.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace ppspace
