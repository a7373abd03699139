// Copyright 2026 The netdesign Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETDESIGN_TOOLS_REPRODUCE_HPP_
#define NETDESIGN_TOOLS_REPRODUCE_HPP_

#include <cstdint>
#include <ostream>
#include <string>

namespace netdesign::cli {

struct ReproduceOptions {
  std::string table;  // t1, t2 or t4
  std::string fixture_dir;
  unsigned workers = 0;
  std::uint64_t seed = 0;
  int restarts = 100;
  // Include the rows that take hours (4x4 row-column with 4 treatments).
  bool full = false;
};

// Writes the table as CSV, one row per experiment, with the published
// figures and their differences alongside.
void reproduce_table(const ReproduceOptions& options, std::ostream& out,
                     std::ostream& log);

}  // namespace netdesign::cli

#endif  // NETDESIGN_TOOLS_REPRODUCE_HPP_
