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

#include "graphstab/report.hpp"

namespace graphstab {

nlohmann::json CheckReport::to_json() const {
  return {{"check", check}, {"pass", pass}, {"details", details}};
}

std::string CheckReport::to_text() const {
  std::string out = check + ": " + (pass ? "PASS" : "FAIL");
  if (details.is_object()) {
    for (const auto& [key, value] : details.items()) {
      if (value.is_primitive()) out += "\n  " + key + " = " + value.dump();
    }
  }
  return out;
}

}  // namespace graphstab
