// Copyright 2026 The Authors.
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

#ifndef DETGB_FIELD_HPP_
#define DETGB_FIELD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace detgb {

// A field element. Prime-field elements are canonical residues in [0, p);
// rational elements are GMP rationals. Which alternative is active is decided
// by the Field that produced the value.
class Scalar {
 public:
  Scalar() : value_(std::int64_t{0}) {}
  explicit Scalar(std::int64_t residue) : value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_residue() const { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }

 private:
  std::variant<std::int64_t, mpq_class> value_;
};

// Coefficient field: the rationals or a prime field F_p with p odd and below
// 2^31 so products of residues fit in 64 bits.
class Field {
 public:
  enum class Kind { kRationals, kPrime };

  static Field rationals() { return Field(Kind::kRationals, 0); }
  static Field prime(std::int64_t p);
  // "q" or "fp:<p>".
  static Field parse(std::string_view spec);
  static Field default_field() { return prime(32003); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::kPrime; }
  std::int64_t characteristic() const { return characteristic_; }
  std::string spec() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // Prime-field residues print in the symmetric range (-p/2, p/2].
  std::string to_string(const Scalar& a) const;
  // True when to_string(a) starts with '-'.
  bool is_negative(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.characteristic_ == b.characteristic_;
  }

 private:
  Field(Kind kind, std::int64_t characteristic)
      : kind_(kind), characteristic_(characteristic) {}

  std::int64_t reduce(std::int64_t v) const;

  Kind kind_;
  std::int64_t characteristic_;
};

bool is_prime_number(std::int64_t n);

}  // namespace detgb

#endif  // DETGB_FIELD_HPP_
