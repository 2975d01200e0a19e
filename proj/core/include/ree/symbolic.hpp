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

#ifndef REE_SYMBOLIC_HPP_
#define REE_SYMBOLIC_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ree/field.hpp"

namespace ree {

// A polynomial in u and v with arbitrary-precision integer coefficients,
// stored sparsely with no zero terms.
class MultiPoly {
 public:
  using Coeff = boost::multiprecision::cpp_int;
  using Monomial = std::pair<std::uint32_t, std::uint32_t>;  // u^first v^second

  MultiPoly() = default;
  static MultiPoly constant(const Coeff& c);
  static MultiPoly monomial(std::uint32_t i, std::uint32_t j, const Coeff& c = 1);
  static MultiPoly u() { return monomial(1, 0); }
  static MultiPoly v() { return monomial(0, 1); }

  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t total_degree() const;

  MultiPoly operator+(const MultiPoly& b) const;
  MultiPoly operator-(const MultiPoly& b) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& b) const;
  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);
  MultiPoly pow(std::uint32_t k) const;
  bool operator==(const MultiPoly& b) const { return terms_ == b.terms_; }

  // Coefficients reduced into [0, p).
  MultiPoly reduce_mod(std::uint32_t p) const;
  // Simultaneous substitution u <- u_value, v <- v_value.
  MultiPoly substitute(const MultiPoly& u_value, const MultiPoly& v_value) const;

  // Descending monomial order, e.g. "u^2*v - 2*u + 1"; "0" when zero.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Coeff& c);
  std::map<Monomial, Coeff> terms_;
};

MultiPoly operator+(const MultiPoly::Coeff& c, const MultiPoly& p);
MultiPoly operator*(const MultiPoly::Coeff& c, const MultiPoly& p);

using PolyVector3 = std::array<MultiPoly, 3>;
using PolyMatrix3 = std::array<PolyVector3, 3>;

MultiPoly det3(const PolyMatrix3& m);
PolyVector3 cross(const PolyVector3& a, const PolyVector3& b);
// The cross product vanishes, optionally after reduction mod p.
bool proportional(const PolyVector3& a, const PolyVector3& b, std::optional<std::uint32_t> modulus = std::nullopt);
std::string to_string(const PolyVector3& v);

// Integer coefficients reduce mod the characteristic.
FieldElement eval(const MultiPoly& p, const FieldElement& u0, const FieldElement& v0);

struct IdentityCheck {
  std::string id;
  std::string claim;
  // lhs - rhs after the stated reduction; "0" when the identity holds.
  std::string residual;
  bool ok = false;
};

// The determinant identities behind the order-8 uniqueness argument,
// checked as exact polynomial identities (over Z, then mod 2), plus the
// irreducibility of v^3 + v^2 + 1 over GF(2).
std::vector<IdentityCheck> verify_thm1_identities();

// D1234 with third coordinate v^2 - uv instead of uv - v^2: passes iff the
// first factorization then fails over Z but holds mod 2.
IdentityCheck printed_entry_check();

// The D-points and a n c4 recomputed as cross products from the frame
// c1 = [1:1:1], c2 = [1:0:0], c3 = [0:1:0], c4 = [0:0:1], a = [u:v:1],
// compared with the stated coordinates.
struct FrameDerivation {
  std::string name;
  PolyVector3 derived;
  PolyVector3 stated;
  // Stated only for u = v + 1 over GF(2); no comparison over Z is made.
  bool char2_only = false;
  bool proportional_over_z = false;
  bool proportional_mod2 = false;
};
std::vector<FrameDerivation> derive_frame_points();

}  // namespace ree

#endif  // REE_SYMBOLIC_HPP_
