#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bundles {

/// Bad arguments to an in-process call (invalid node id, out-of-range L, ...).
class input_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed or contract-violating input file; the message names the
/// offending record.
class schema_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Geometric degeneracy the predicates cannot resolve (exactly cocircular
/// quadruple, collinear input, point on a hull edge). The fix is to perturb
/// the input coordinates.
class degeneracy_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic exceeded the widest supported type.
class overflow_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded the caller-supplied cap. `found()` reports how
/// many items were produced before stopping.
class capacity_error : public std::runtime_error {
 public:
  capacity_error(const std::string& what, std::uint64_t found)
      : std::runtime_error(what), found_(found) {}

  std::uint64_t found() const noexcept { return found_; }

 private:
  std::uint64_t found_;
};

}  // namespace bundles
