#include "ncopt/errors.hpp"

namespace ncopt {

const char* to_string(InfeasibleKind kind) noexcept {
  switch (kind) {
    case InfeasibleKind::Multicast: return "multicast_infeasible";
    case InfeasibleKind::Rate: return "rate_infeasible";
    case InfeasibleKind::Backhaul: return "backhaul_infeasible";
  }
  return "unknown";
}

}  // namespace ncopt
