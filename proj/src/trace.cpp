// SPDX-License-Identifier: Apache-2.0
//
// secee: secure energy-efficiency optimization for RIS-aided multicast
// Copyright (C) 2026 The secee authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "secee/trace.hpp"

#include <cstdio>

namespace secee {

void write_trace_rows(std::ostream& out, const Trace& trace, const std::string& prefix) {
  char buf[96];
  for (const auto& r : trace) {
    out << prefix << r.solver << ',' << r.subproblem << ',' << r.am_round << ',' << r.t << ',' << r.l << ',' << r.i;
    std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%.17g\n", r.objective, r.step, r.grad_norm);
    out << buf;
  }
}

}  // namespace secee
