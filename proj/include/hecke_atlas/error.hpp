#pragma once

#include <stdexcept>
#include <string>

namespace hecke_atlas {

/// Malformed input: bad JSON, unknown labels, violated preconditions on
/// user-supplied data. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A structural invariant failed on data the library built itself.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hecke_atlas
