#pragma once

#include <stdexcept>
#include <string>

namespace sgb {

/// Rejected input: unknown group names, malformed permutations, bad labels.
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string &what) : std::invalid_argument(what) {}
};

/// A group grew past the materialization bound.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string &what) : std::runtime_error(what) {}
};

/// Representation of a rank the decomposition code does not handle.
class UnsupportedRank : public std::runtime_error {
public:
  explicit UnsupportedRank(const std::string &what) : std::runtime_error(what) {}
};

/// Inconsistent block data, e.g. a toral profile on a non-torus.
class ClassificationError : public std::runtime_error {
public:
  explicit ClassificationError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace sgb
