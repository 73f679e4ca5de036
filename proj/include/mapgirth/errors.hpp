#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mapgirth {

/// Input text could not be decoded as a graph.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Maximal-clique enumeration aborted: the count exceeded the caller's cap.
struct CapExceeded : std::runtime_error {
  std::size_t cap;
  explicit CapExceeded(std::size_t cap_value)
      : std::runtime_error("maximal clique count exceeds cap of " + std::to_string(cap_value)),
        cap(cap_value) {}
};

/// Exhaustive enumeration was asked for an instance beyond its hard size limit.
struct LimitExceeded : std::runtime_error {
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Recognition girth bounds are even: witnesses are bipartite, so every cycle
/// in them has even length. An odd request is a caller error, not rounded.
struct OddGirthParameter : std::invalid_argument {
  explicit OddGirthParameter(int value)
      : std::invalid_argument("girth parameter must be even, got " + std::to_string(value)) {}
};

/// Girth bounds below 8 are rejected; use the exhaustive witness search for
/// per-instance answers at girth 6.
struct GirthParameterTooSmall : std::invalid_argument {
  explicit GirthParameterTooSmall(int value)
      : std::invalid_argument("girth parameter must be at least 8, got " + std::to_string(value) +
                              " (the oracle search handles smaller bounds per instance)") {}
};

}  // namespace mapgirth
