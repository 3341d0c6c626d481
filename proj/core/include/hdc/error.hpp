#pragma once

#include <stdexcept>
#include <string>

namespace hdc {

/// Malformed input: bad facets, out-of-range parameters, dimension mismatch.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed a configured cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap_name, std::string what)
      : std::runtime_error(std::move(what)), cap_(std::move(cap_name)) {}

  /// Name of the violated cap, e.g. "partition-cap".
  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

}  // namespace hdc
