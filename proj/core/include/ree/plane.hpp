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

#ifndef REE_PLANE_HPP_
#define REE_PLANE_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ree/field.hpp"

namespace ree {

using Code3 = std::array<Field::Code, 3>;

enum class TripleKind { kPoint, kLine };

// A normalized homogeneous triple over a finite field: the last nonzero
// coordinate is 1. Points print as (x:y:z), lines as [a:b:c]; the line [a:b:c]
// is the set of points with ax + by + cz = 0.
template <TripleKind Kind>
class Homogeneous {
 public:
  Homogeneous(const FieldElement& a, const FieldElement& b, const FieldElement& c);
  // Normalizes `codes`; throws InvalidArgument when all three vanish.
  Homogeneous(Field field, const Code3& codes);

  const Field& field() const { return field_; }
  const Code3& codes() const { return codes_; }
  FieldElement operator[](std::size_t i) const { return field_.element(codes_.at(i)); }

  bool operator==(const Homogeneous& other) const {
    return field_ == other.field_ && codes_ == other.codes_;
  }
  bool operator!=(const Homogeneous& other) const { return !(*this == other); }

  std::string to_string(ElementFormat fmt = ElementFormat::kPower) const;

 private:
  Field field_;
  Code3 codes_;
};

using ProjPoint = Homogeneous<TripleKind::kPoint>;
using ProjLine = Homogeneous<TripleKind::kLine>;

// Y = mX + bZ, stored as the normalized form of [m : -1 : b].
ProjLine line_y_equals(const FieldElement& m, const FieldElement& b);
// (m, b) with the line equal to Y = mX + bZ, when the Y coefficient is nonzero.
std::optional<std::pair<FieldElement, FieldElement>> slope_intercept(const ProjLine& l);

bool incident(const ProjPoint& p, const ProjLine& l);
// Throws InvalidArgument when the arguments coincide.
ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);
// Determinant of the matrix whose rows are the given triples.
FieldElement det3(const Code3& r0, const Code3& r1, const Code3& r2, const Field& f);
// True iff all points lie on one common line (at least three required).
bool collinear(std::span<const ProjPoint> points);
// True iff all lines pass through one common point (at least three required).
bool concurrent(std::span<const ProjLine> lines);

// 3x3 matrices over a field, row-major, as element codes.
using Mat3 = std::array<Field::Code, 9>;

namespace mat3 {
Mat3 identity();
Mat3 mul(const Field& f, const Mat3& a, const Mat3& b);
Field::Code det(const Field& f, const Mat3& a);
// Throws InvalidArgument for singular input.
Mat3 inverse(const Field& f, const Mat3& a);
Mat3 frobenius(const Field& f, const Mat3& a, std::uint32_t k);
Code3 apply(const Field& f, const Mat3& a, const Code3& v);
}  // namespace mat3

// A semilinear map P -> M * P^(p^frob) of PG(2, p^e).
//
// The matrix is kept with its first nonzero row-major entry equal to 1, so
// two collineations are equal iff they act identically. Composition follows
// function notation: (g * h)(P) = g(h(P)).
class Collineation {
 public:
  Collineation(Field field, const Mat3& matrix, std::uint32_t frob = 0);

  static Collineation identity(Field field);
  // tau_c : (x, y, z) -> (x + cz, y + c^2 z, z)
  static Collineation tau(const FieldElement& c);
  // Coordinatewise x -> x^p.
  static Collineation frobenius(Field field);

  const Field& field() const { return field_; }
  const Mat3& matrix() const { return matrix_; }
  std::uint32_t frob() const { return frob_; }
  FieldElement entry(int r, int c) const { return field_.element(matrix_[3 * r + c]); }

  Collineation operator*(const Collineation& h) const;
  Collineation inverse() const;
  bool operator==(const Collineation& other) const {
    return frob_ == other.frob_ && matrix_ == other.matrix_ && field_ == other.field_;
  }

  Code3 apply_point(const Code3& p) const;
  Code3 apply_line(const Code3& l) const;
  ProjPoint apply(const ProjPoint& p) const;
  ProjLine apply(const ProjLine& l) const;

  std::string to_string(ElementFormat fmt = ElementFormat::kPower) const;

 private:
  Field field_;
  Mat3 matrix_;
  Mat3 inverse_;
  std::uint32_t frob_;
};

// The collineation x -> M * x^(p^frob) carrying from[i] to to[i] for i < 4.
// Returns nullopt unless both quadruples are in general position.
std::optional<Collineation> frame_map(const std::array<ProjPoint, 4>& from,
                                      const std::array<ProjPoint, 4>& to, std::uint32_t frob);

// PG(2, q) with points and lines as dense indices.
//
// Index order: (1:0:0), then (x:1:0), then (x:y:1), with coordinates
// ordered by element code. Lines use the same order on their coefficient
// triples. Incidence tables are built for q <= 64; join/meet tables for
// q <= 32. Larger planes compute from coordinates.
class Plane {
 public:
  using Index = std::uint32_t;

  explicit Plane(Field field);

  const Field& field() const { return field_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t size() const { return n_; }
  bool has_tables() const { return !points_on_.empty(); }

  Code3 codes(Index i) const;
  ProjPoint point(Index i) const { return ProjPoint(field_, codes(i)); }
  ProjLine line(Index i) const { return ProjLine(field_, codes(i)); }
  Index index_of(const Code3& normalized) const;
  Index index_of(const ProjPoint& p) const;
  Index index_of(const ProjLine& l) const;

  bool incident(Index point, Index line) const;
  Index join(Index a, Index b) const;
  Index meet(Index l, Index m) const;
  // Require tables.
  const std::vector<Index>& points_on(Index line) const;
  const std::vector<Index>& lines_through(Index point) const;

  std::vector<Index> point_permutation(const Collineation& g) const;
  std::vector<Index> line_permutation(const Collineation& g) const;

 private:
  Code3 cross(const Code3& a, const Code3& b) const;
  Code3 normalize(Code3 v) const;

  Field field_;
  std::uint32_t q_;
  std::uint32_t n_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> incidence_;
  std::vector<std::vector<Index>> points_on_;
  std::vector<std::vector<Index>> lines_through_;
  std::vector<Index> join_;
};

// All points and all lines of PG(2, q) in index order.
std::pair<std::vector<ProjPoint>, std::vector<ProjLine>> enumerate(const Field& field);

}  // namespace ree

#endif  // REE_PLANE_HPP_
