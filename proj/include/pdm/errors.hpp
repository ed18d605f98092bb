#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdm {

// Malformed textual input (graph6 or edge list). Carries the byte offset of
// the first offending character so callers can point at it.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A caller violated an operation precondition: edge outside the parent
// graph, a non-matching passed where a matching is required, a graph with
// isolated vertices fed to an analysis that assumes none, and so on.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a hard size envelope (graph6 short form, brute-force guard).
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pdm
