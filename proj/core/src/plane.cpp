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

#include "ree/plane.hpp"

#include <algorithm>
#include <sstream>

#include "ree/error.hpp"

namespace ree {

namespace {

Code3 normalize_codes(const Field& f, Code3 v) {
  int last = 2;
  while (last >= 0 && v[last] == 0) --last;
  if (last < 0) throw InvalidArgument("homogeneous triple with all coordinates zero");
  const auto s = f.inv(v[last]);
  for (auto& x : v) x = f.mul(x, s);
  return v;
}

Code3 cross_codes(const Field& f, const Code3& a, const Code3& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
          f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

Field::Code dot_codes(const Field& f, const Code3& a, const Code3& b) {
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

bool is_zero(const Code3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

void check_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw InvalidArgument("geometric objects over different fields");
}

}  // namespace

template <TripleKind Kind>
Homogeneous<Kind>::Homogeneous(const FieldElement& a, const FieldElement& b, const FieldElement& c)
    : field_(a.field()) {
  check_same_field(field_, b.field());
  check_same_field(field_, c.field());
  codes_ = normalize_codes(field_, {a.code(), b.code(), c.code()});
}

template <TripleKind Kind>
Homogeneous<Kind>::Homogeneous(Field field, const Code3& codes)
    : field_(std::move(field)), codes_(normalize_codes(field_, codes)) {}

template <TripleKind Kind>
std::string Homogeneous<Kind>::to_string(ElementFormat fmt) const {
  std::ostringstream os;
  os << (Kind == TripleKind::kPoint ? '(' : '[');
  for (int i = 0; i < 3; ++i) {
    if (i) os << ':';
    os << field_.format(codes_[i], fmt);
  }
  os << (Kind == TripleKind::kPoint ? ')' : ']');
  return os.str();
}

template class Homogeneous<TripleKind::kPoint>;
template class Homogeneous<TripleKind::kLine>;

ProjLine line_y_equals(const FieldElement& m, const FieldElement& b) {
  return ProjLine(m, -m.field().one(), b);
}

std::optional<std::pair<FieldElement, FieldElement>> slope_intercept(const ProjLine& l) {
  const Field& f = l.field();
  const auto& c = l.codes();
  if (c[1] == 0) return std::nullopt;
  const auto s = f.neg(f.inv(c[1]));
  return std::make_pair(f.element(f.mul(c[0], s)), f.element(f.mul(c[2], s)));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  check_same_field(p.field(), l.field());
  return dot_codes(p.field(), p.codes(), l.codes()) == 0;
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  check_same_field(p.field(), q.field());
  if (p == q) throw InvalidArgument("join of a point with itself");
  return ProjLine(p.field(), cross_codes(p.field(), p.codes(), q.codes()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  check_same_field(l.field(), m.field());
  if (l == m) throw InvalidArgument("meet of a line with itself");
  return ProjPoint(l.field(), cross_codes(l.field(), l.codes(), m.codes()));
}

FieldElement det3(const Code3& r0, const Code3& r1, const Code3& r2, const Field& f) {
  return f.element(dot_codes(f, r0, cross_codes(f, r1, r2)));
}

namespace {

template <typename T>
bool all_on_common(std::span<const T> items) {
  if (items.size() < 3) throw InvalidArgument("at least three arguments required");
  const Field& f = items[0].field();
  for (const auto& it : items) check_same_field(f, it.field());
  // Find two distinct items; the common object is their cross product.
  std::size_t j = 1;
  while (j < items.size() && items[j] == items[0]) ++j;
  if (j == items.size()) return true;
  const Code3 common = cross_codes(f, items[0].codes(), items[j].codes());
  return std::all_of(items.begin(), items.end(),
                     [&](const T& t) { return dot_codes(f, t.codes(), common) == 0; });
}

}  // namespace

bool collinear(std::span<const ProjPoint> points) { return all_on_common(points); }
bool concurrent(std::span<const ProjLine> lines) { return all_on_common(lines); }

namespace mat3 {

Mat3 identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

Mat3 mul(const Field& f, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Field::Code acc = 0;
      for (int k = 0; k < 3; ++k) acc = f.add(acc, f.mul(a[3 * i + k], b[3 * k + j]));
      r[3 * i + j] = acc;
    }
  }
  return r;
}

Field::Code det(const Field& f, const Mat3& a) {
  return dot_codes(f, {a[0], a[1], a[2]}, cross_codes(f, {a[3], a[4], a[5]}, {a[6], a[7], a[8]}));
}

Mat3 inverse(const Field& f, const Mat3& a) {
  const auto d = det(f, a);
  if (d == 0) throw InvalidArgument("singular matrix");
  const auto s = f.inv(d);
  // Columns of the adjugate are cross products of rows.
  const Code3 r0{a[0], a[1], a[2]}, r1{a[3], a[4], a[5]}, r2{a[6], a[7], a[8]};
  const Code3 c0 = cross_codes(f, r1, r2), c1 = cross_codes(f, r2, r0), c2 = cross_codes(f, r0, r1);
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    r[3 * i + 0] = f.mul(c0[i], s);
    r[3 * i + 1] = f.mul(c1[i], s);
    r[3 * i + 2] = f.mul(c2[i], s);
  }
  return r;
}

Mat3 frobenius(const Field& f, const Mat3& a, std::uint32_t k) {
  Mat3 r{};
  for (int i = 0; i < 9; ++i) r[i] = f.frobenius(a[i], k);
  return r;
}

Code3 apply(const Field& f, const Mat3& a, const Code3& v) {
  return {dot_codes(f, {a[0], a[1], a[2]}, v), dot_codes(f, {a[3], a[4], a[5]}, v),
          dot_codes(f, {a[6], a[7], a[8]}, v)};
}

}  // namespace mat3

Collineation::Collineation(Field field, const Mat3& matrix, std::uint32_t frob)
    : field_(std::move(field)), matrix_(matrix), frob_(frob % field_.degree()) {
  if (mat3::det(field_, matrix_) == 0) throw InvalidArgument("collineation matrix is singular");
  const auto lead = *std::find_if(matrix_.begin(), matrix_.end(), [](auto x) { return x != 0; });
  const auto s = field_.inv(lead);
  for (auto& x : matrix_) x = field_.mul(x, s);
  inverse_ = mat3::inverse(field_, matrix_);
}

Collineation Collineation::identity(Field field) {
  return Collineation(std::move(field), mat3::identity(), 0);
}

Collineation Collineation::tau(const FieldElement& c) {
  const Field& f = c.field();
  return Collineation(f, {1, 0, c.code(), 0, 1, f.mul(c.code(), c.code()), 0, 0, 1}, 0);
}

Collineation Collineation::frobenius(Field field) {
  return Collineation(std::move(field), mat3::identity(), 1);
}

Collineation Collineation::operator*(const Collineation& h) const {
  check_same_field(field_, h.field_);
  return Collineation(field_, mat3::mul(field_, matrix_, mat3::frobenius(field_, h.matrix_, frob_)),
                      frob_ + h.frob_);
}

Collineation Collineation::inverse() const {
  const std::uint32_t e = field_.degree();
  const std::uint32_t back = (e - frob_) % e;
  return Collineation(field_, mat3::frobenius(field_, inverse_, back), back);
}

Code3 Collineation::apply_point(const Code3& p) const {
  const Code3 s{field_.frobenius(p[0], frob_), field_.frobenius(p[1], frob_),
                field_.frobenius(p[2], frob_)};
  return normalize_codes(field_, mat3::apply(field_, matrix_, s));
}

Code3 Collineation::apply_line(const Code3& l) const {
  const Code3 s{field_.frobenius(l[0], frob_), field_.frobenius(l[1], frob_),
                field_.frobenius(l[2], frob_)};
  // Row vector s^T * M^-1.
  Code3 r{};
  for (int j = 0; j < 3; ++j) {
    Field::Code acc = 0;
    for (int i = 0; i < 3; ++i) acc = field_.add(acc, field_.mul(s[i], inverse_[3 * i + j]));
    r[j] = acc;
  }
  return normalize_codes(field_, r);
}

ProjPoint Collineation::apply(const ProjPoint& p) const {
  check_same_field(field_, p.field());
  return ProjPoint(field_, apply_point(p.codes()));
}

ProjLine Collineation::apply(const ProjLine& l) const {
  check_same_field(field_, l.field());
  return ProjLine(field_, apply_line(l.codes()));
}

std::string Collineation::to_string(ElementFormat fmt) const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < 3; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < 3; ++c) {
      if (c) os << ' ';
      os << field_.format(matrix_[3 * r + c], fmt);
    }
  }
  os << "] frob=" << frob_;
  return os.str();
}

namespace {

// Matrix with columns lambda_i * v_i such that e_i -> v_i and (1,1,1) -> v_3.
std::optional<Mat3> frame_matrix(const Field& f, const std::array<Code3, 4>& v) {
  Mat3 cols{};
  for (int i = 0; i < 3; ++i) {
    for (int r = 0; r < 3; ++r) cols[3 * r + i] = v[i][r];
  }
  if (mat3::det(f, cols) == 0) return std::nullopt;
  const Code3 lambda = mat3::apply(f, mat3::inverse(f, cols), v[3]);
  for (auto x : lambda) {
    if (x == 0) return std::nullopt;
  }
  for (int i = 0; i < 3; ++i) {
    for (int r = 0; r < 3; ++r) cols[3 * r + i] = f.mul(cols[3 * r + i], lambda[i]);
  }
  return cols;
}

}  // namespace

std::optional<Collineation> frame_map(const std::array<ProjPoint, 4>& from,
                                      const std::array<ProjPoint, 4>& to, std::uint32_t frob) {
  const Field& f = from[0].field();
  std::array<Code3, 4> src{}, dst{};
  for (int i = 0; i < 4; ++i) {
    check_same_field(f, from[i].field());
    check_same_field(f, to[i].field());
    for (int k = 0; k < 3; ++k) src[i][k] = f.frobenius(from[i].codes()[k], frob);
    dst[i] = to[i].codes();
  }
  const auto a = frame_matrix(f, src);
  const auto b = frame_matrix(f, dst);
  if (!a || !b) return std::nullopt;
  Collineation g(f, mat3::mul(f, *b, mat3::inverse(f, *a)), frob);
  for (int i = 0; i < 4; ++i) {
    if (g.apply(from[i]) != to[i]) throw InternalError("frame map does not carry the frame");
  }
  return g;
}

Plane::Plane(Field field) : field_(std::move(field)) {
  q_ = field_.order();
  n_ = q_ * q_ + q_ + 1;
  if (q_ > 64) return;
  words_ = (n_ + 63) / 64;
  incidence_.assign(static_cast<std::size_t>(n_) * words_, 0);
  points_on_.resize(n_);
  lines_through_.resize(n_);
  const std::array<Code3, 3> axes{Code3{1, 0, 0}, Code3{0, 1, 0}, Code3{0, 0, 1}};
  for (Index l = 0; l < n_; ++l) {
    const Code3 lc = codes(l);
    std::vector<Code3> base;
    for (const auto& ax : axes) {
      const auto c = cross_codes(field_, lc, ax);
      if (is_zero(c)) continue;
      const auto nc = normalize_codes(field_, c);
      if (base.empty() || base[0] != nc) base.push_back(nc);
      if (base.size() == 2) break;
    }
    auto& on = points_on_[l];
    on.push_back(index_of(base[0]));
    for (Field::Code t = 0; t < q_; ++t) {
      Code3 v{};
      for (int k = 0; k < 3; ++k) v[k] = field_.add(base[1][k], field_.mul(t, base[0][k]));
      on.push_back(index_of(normalize_codes(field_, v)));
    }
    std::sort(on.begin(), on.end());
    for (Index p : on) {
      incidence_[static_cast<std::size_t>(p) * words_ + l / 64] |= std::uint64_t{1} << (l % 64);
      lines_through_[p].push_back(l);
    }
  }
  if (q_ > 32) return;
  join_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (Index l = 0; l < n_; ++l) {
    const auto& on = points_on_[l];
    for (Index a : on) {
      for (Index b : on) join_[static_cast<std::size_t>(a) * n_ + b] = l;
    }
  }
}

Code3 Plane::codes(Index i) const {
  if (i >= n_) throw InvalidArgument("plane index out of range");
  if (i == 0) return {1, 0, 0};
  if (i <= q_) return {i - 1, 1, 0};
  const Index j = i - 1 - q_;
  return {j % q_, j / q_, 1};
}

Code3 Plane::normalize(Code3 v) const { return normalize_codes(field_, v); }
Code3 Plane::cross(const Code3& a, const Code3& b) const { return cross_codes(field_, a, b); }

Plane::Index Plane::index_of(const Code3& v) const {
  if (v[2] == 1) return 1 + q_ + v[1] * q_ + v[0];
  if (v[2] == 0 && v[1] == 1) return 1 + v[0];
  if (v == Code3{1, 0, 0}) return 0;
  throw InvalidArgument("triple is not normalized");
}

Plane::Index Plane::index_of(const ProjPoint& p) const {
  check_same_field(field_, p.field());
  return index_of(p.codes());
}

Plane::Index Plane::index_of(const ProjLine& l) const {
  check_same_field(field_, l.field());
  return index_of(l.codes());
}

bool Plane::incident(Index point, Index line) const {
  if (!incidence_.empty()) {
    return (incidence_[static_cast<std::size_t>(point) * words_ + line / 64] >> (line % 64)) & 1;
  }
  return dot_codes(field_, codes(point), codes(line)) == 0;
}

Plane::Index Plane::join(Index a, Index b) const {
  if (a == b) throw InvalidArgument("join/meet of an element with itself");
  if (!join_.empty()) return join_[static_cast<std::size_t>(a) * n_ + b];
  return index_of(normalize(cross(codes(a), codes(b))));
}

Plane::Index Plane::meet(Index l, Index m) const { return join(l, m); }

const std::vector<Plane::Index>& Plane::points_on(Index line) const {
  if (points_on_.empty()) throw InvalidArgument("incidence tables not built for this plane order");
  return points_on_.at(line);
}

const std::vector<Plane::Index>& Plane::lines_through(Index point) const {
  if (lines_through_.empty()) throw InvalidArgument("incidence tables not built for this plane order");
  return lines_through_.at(point);
}

std::vector<Plane::Index> Plane::point_permutation(const Collineation& g) const {
  check_same_field(field_, g.field());
  std::vector<Index> out(n_);
  for (Index i = 0; i < n_; ++i) out[i] = index_of(g.apply_point(codes(i)));
  return out;
}

std::vector<Plane::Index> Plane::line_permutation(const Collineation& g) const {
  check_same_field(field_, g.field());
  std::vector<Index> out(n_);
  for (Index i = 0; i < n_; ++i) out[i] = index_of(g.apply_line(codes(i)));
  return out;
}

std::pair<std::vector<ProjPoint>, std::vector<ProjLine>> enumerate(const Field& field) {
  if (field.order() > 1024) throw InvalidArgument("plane order above 1024 is out of scope");
  const Plane plane(field);
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
  points.reserve(plane.size());
  lines.reserve(plane.size());
  for (Plane::Index i = 0; i < plane.size(); ++i) {
    points.push_back(plane.point(i));
    lines.push_back(plane.line(i));
  }
  return {std::move(points), std::move(lines)};
}

}  // namespace ree
