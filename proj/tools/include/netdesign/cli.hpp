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

#ifndef NETDESIGN_CLI_HPP_
#define NETDESIGN_CLI_HPP_

#include <ostream>
#include <string>

#include "netdesign/search.hpp"

namespace netdesign::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;

// Entry point shared by the binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Report renderings used by `search --format`.
std::string report_json(const SearchReport& report);
std::string report_text(const SearchReport& report);
std::string report_csv(const SearchReport& report);

}  // namespace netdesign::cli

#endif  // NETDESIGN_CLI_HPP_
