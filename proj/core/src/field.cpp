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

#include "graphstab/field.hpp"

#include <string>

#include "graphstab/errors.hpp"

namespace graphstab {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p > kMaxModulus) {
    throw UsageError("field modulus " + std::to_string(p) + " exceeds " +
                     std::to_string(kMaxModulus));
  }
  if (!is_prime(p)) {
    throw UsageError("field modulus " + std::to_string(p) + " is not prime");
  }
}

Elem Field::pow(Elem base, std::uint64_t exp) const noexcept {
  Elem result = 1 % p_;
  while (exp > 0) {
    if (exp & 1u) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1u;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a % p_ == 0) throw DivisionByZero();
  // Fermat: a^(p-2) = a^-1.
  return pow(a, p_ - 2);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw UsageError("scalars from GF(" + std::to_string(field_.p()) + ") and GF(" +
                     std::to_string(o.field_.p()) + ") cannot be combined");
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  return Scalar(field_, field_.add(value_, o.value_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  return Scalar(field_, field_.sub(value_, o.value_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  return Scalar(field_, field_.mul(value_, o.value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.value(); }

}  // namespace graphstab
