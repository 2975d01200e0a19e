// Copyright 2026 The Ree Workbench Authors
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

#ifndef REE_FIELD_HPP_
#define REE_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ree {

// Polynomial coefficients over a prime field, least-degree first.
using Coefficients = std::vector<std::uint32_t>;

namespace detail {
struct FieldData;
}

class FieldElement;

enum class ElementFormat { kPower, kPolynomial };

// Returns a monic factor of degree 1..deg/2 of `poly` over GF(p), or nullopt
// when `poly` is irreducible. `poly` must be monic.
std::optional<Coefficients> find_factor(std::uint32_t p, const Coefficients& poly);

// The finite field GF(p^e) = GF(p)[X] / (modulus).
//
// Elements are coefficient vectors over GF(p). Internally a vector is packed
// into an integer code c0 + c1*p + ... + c_{e-1}*p^(e-1); the fast arithmetic
// below works on codes. Multiplication goes through log/antilog tables that
// are built from (and tested against) the reference polynomial product.
//
// Field is a cheap, immutable handle; copies share the same tables.
class Field {
 public:
  using Code = std::uint32_t;

  // Validates the modulus by trial division. Throws InvalidArgument naming a
  // factor if the modulus is reducible.
  static Field make(std::uint32_t p, std::uint32_t e, Coefficients modulus);
  // Parses `GF(p^e; c0,c1,...,ce)`.
  static Field parse(std::string_view text);
  // GF(8) presented by X^3+X+1.
  static Field gf8();
  // GF(p) presented by X-1, so that its generator is 1.
  static Field prime(std::uint32_t p);
  // GF(q) by the lexicographically least monic irreducible modulus, except
  // that q = 8 yields gf8().
  static Field standard(std::uint32_t q);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  const Coefficients& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  // The residue class of X.
  FieldElement generator() const;
  FieldElement element(Code code) const;
  FieldElement from_coefficients(const Coefficients& c) const;
  FieldElement from_int(long long n) const;
  // All elements in code order.
  std::vector<FieldElement> elements() const;

  // `GF(p^e; c0,...,ce)`
  std::string to_string() const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t k) const;
  // a^(p^k)
  Code frobenius(Code a, std::uint32_t k) const;
  Code from_int_code(long long n) const;

  // Schoolbook product of coefficient vectors reduced by the modulus.
  Code mul_reference(Code a, Code b) const;
  Coefficients coefficients(Code a) const;
  Code encode(const Coefficients& c) const;
  // Lexicographic on coefficient vectors, least-degree coefficient first.
  bool less(Code a, Code b) const;
  // Discrete logarithm to base generator(), when the generator is primitive.
  std::optional<std::uint32_t> generator_log(Code a) const;
  std::string format(Code a, ElementFormat fmt = ElementFormat::kPower) const;

  // Same characteristic, degree and modulus.
  bool operator==(const Field& other) const;

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data)
      : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
 public:
  FieldElement(Field field, Field::Code code) : field_(std::move(field)), code_(code) {}

  const Field& field() const { return field_; }
  Field::Code code() const { return code_; }
  Coefficients coefficients() const { return field_.coefficients(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t k) const;

  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }
  bool operator<(const FieldElement& b) const;

  std::string to_string(ElementFormat fmt = ElementFormat::kPower) const {
    return field_.format(code_, fmt);
  }

 private:
  void check_same(const FieldElement& b) const;
  Field field_;
  Field::Code code_;
};

// Absolute trace x + x^p + ... + x^(p^(e-1)), returned as an element of GF(p).
FieldElement trace(const FieldElement& x);

// An injective homomorphism sub -> sup.
class FieldEmbedding {
 public:
  FieldEmbedding(Field sub, Field sup, std::vector<Field::Code> image)
      : sub_(std::move(sub)), sup_(std::move(sup)), image_(std::move(image)) {}
  const Field& source() const { return sub_; }
  const Field& target() const { return sup_; }
  Field::Code map(Field::Code a) const { return image_.at(a); }
  FieldElement operator()(const FieldElement& a) const;
  // True iff `b` lies in the image of the embedding.
  bool in_image(Field::Code b) const;

 private:
  Field sub_;
  Field sup_;
  std::vector<Field::Code> image_;
};

// Embeds `sub` into `sup` when deg(sub) divides deg(sup), sending the
// generator of `sub` to the least root (in Field::less order) of sub's modulus.
// Throws InvalidArgument when the characteristics differ.
std::optional<FieldEmbedding> subfield_embed(const Field& sub, const Field& sup);

}  // namespace ree

#endif  // REE_FIELD_HPP_
