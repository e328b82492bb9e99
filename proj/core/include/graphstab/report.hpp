// Copyright 2026 The graphstab Authors. All Rights Reserved.
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

#ifndef GRAPHSTAB_REPORT_HPP_
#define GRAPHSTAB_REPORT_HPP_

#include <string>

#include <nlohmann/json.hpp>

namespace graphstab {

/// Outcome of one verification step, printable as text or as
/// {"check": name, "pass": bool, "details": ...}.
struct CheckReport {
  std::string check;
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace graphstab

#endif  // GRAPHSTAB_REPORT_HPP_
