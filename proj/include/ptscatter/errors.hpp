#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptscatter {

enum class ErrorKind {
  BandEdge,        ///< |omega| too close to 2, sin k -> 0
  NonFinite,       ///< NaN or infinite model input
  LaserPole,       ///< Gamma (equivalently m22) vanishes: self-lasing pole
  SingularSystem,  ///< oracle matching system is rank deficient
  InvalidConfig,   ///< CLI configuration rejected
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ptscatter
