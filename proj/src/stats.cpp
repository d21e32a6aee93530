// SPDX-License-Identifier: Apache-2.0
#include "kroots/stats.hpp"

namespace kroots {

RunStats& stats() {
  static RunStats s;
  return s;
}

}  // namespace kroots
