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

#ifndef GRAPHSTAB_CODE_SIM_INL_HPP_
#define GRAPHSTAB_CODE_SIM_INL_HPP_

#include <vector>

namespace graphstab {

template <typename Visit>
void for_each_weyl_label(const Field& field, std::size_t n, std::size_t w, Visit&& visit) {
  if (w > n) return;
  const std::size_t choices = std::size_t{field.p()} * field.p() - 1;
  std::vector<std::size_t> support(w);
  for (std::size_t i = 0; i < w; ++i) support[i] = i;
  while (true) {
    std::vector<std::size_t> digit(w, 0);
    while (true) {
      SymplecticVector label = SymplecticVector::zero(n);
      for (std::size_t i = 0; i < w; ++i) {
        const std::size_t code = digit[i] + 1;  // skip the (0, 0) pair
        label.phase[support[i]] = static_cast<Elem>(code / field.p());
        label.shift[support[i]] = static_cast<Elem>(code % field.p());
      }
      visit(label);
      std::size_t i = w;
      while (i > 0 && ++digit[i - 1] == choices) digit[--i] = 0;
      if (i == 0) break;
    }
    // next combination
    std::size_t i = w;
    while (i > 0 && support[i - 1] == n - w + i - 1) --i;
    if (i == 0) return;
    ++support[i - 1];
    for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
  }
}

}  // namespace graphstab

#endif  // GRAPHSTAB_CODE_SIM_INL_HPP_
