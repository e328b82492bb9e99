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

#ifndef GRAPHSTAB_FIELD_HPP_
#define GRAPHSTAB_FIELD_HPP_

#include <cstdint>
#include <ostream>

namespace graphstab {

/// Raw residue in [0, p). Containers store these; the owning Field gives them meaning.
using Elem = std::uint32_t;

/// The prime field GF(p). Primality is checked on construction.
class Field {
 public:
  /// Largest supported modulus; keeps products inside 64 bits.
  static constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

  explicit Field(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem reduce(std::int64_t value) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = value % m;
    return static_cast<Elem>(r < 0 ? r + m : r);
  }

  Elem add(Elem a, Elem b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  Elem pow(Elem base, std::uint64_t exp) const noexcept;

  /// Multiplicative inverse; throws DivisionByZero for 0.
  Elem inv(Elem a) const;

  bool operator==(const Field&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// A field element that carries its field. Mixing fields throws UsageError.
class Scalar {
 public:
  Scalar(Field field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

  const Field& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const { return Scalar(field_, field_.neg(value_)); }
  Scalar inv() const { return Scalar(field_, field_.inv(value_)); }
  Scalar pow(std::uint64_t exp) const { return Scalar(field_, field_.pow(value_, exp)); }

  bool operator==(const Scalar&) const = default;

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  Elem value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace graphstab

#endif  // GRAPHSTAB_FIELD_HPP_
