#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace ncopt {

// Constraint families that can make an instance unsolvable.
enum class InfeasibleKind { Multicast, Rate, Backhaul };

const char* to_string(InfeasibleKind kind) noexcept;

// Thrown by solver-path operations when a QoS constraint cannot be met.
// `value` carries the offending quantity (a negative power bound, the
// required minimum SNR, ...) so callers can report it without recomputing.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(InfeasibleKind kind, const std::string& message,
                  double value = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(message), kind_(kind), value_(value) {}

  InfeasibleKind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }

 private:
  InfeasibleKind kind_;
  double value_;
};

}  // namespace ncopt
