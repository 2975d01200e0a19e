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

#include "ree/symbolic.hpp"

#include <sstream>

#include "ree/error.hpp"

namespace ree {

MultiPoly MultiPoly::constant(const Coeff& c) { return monomial(0, 0, c); }

MultiPoly MultiPoly::monomial(std::uint32_t i, std::uint32_t j, const Coeff& c) {
  MultiPoly p;
  p.add_term({i, j}, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly::Coeff MultiPoly::coefficient(std::uint32_t i, std::uint32_t j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Coeff(0) : it->second;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& b) const {
  MultiPoly r = *this;
  return r += b;
}

MultiPoly MultiPoly::operator-(const MultiPoly& b) const {
  MultiPoly r = *this;
  return r -= b;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  return r -= *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& b) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  }
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
  MultiPoly r = constant(1);
  for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::reduce_mod(std::uint32_t p) const {
  if (p == 0) throw InvalidArgument("modulus must be positive");
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Coeff x = c % p;
    if (x < 0) x += p;
    r.add_term(m, x);
  }
  return r;
}

MultiPoly MultiPoly::substitute(const MultiPoly& u_value, const MultiPoly& v_value) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r += c * (u_value.pow(m.first) * v_value.pow(m.second));
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    Coeff c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string mono;
    if (i) mono += i == 1 ? "u" : "u^" + std::to_string(i);
    if (j) mono += std::string(mono.empty() ? "" : "*") + (j == 1 ? "v" : "v^" + std::to_string(j));
    if (mono.empty()) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << mono;
    }
  }
  return os.str();
}

MultiPoly operator+(const MultiPoly::Coeff& c, const MultiPoly& p) { return MultiPoly::constant(c) + p; }
MultiPoly operator*(const MultiPoly::Coeff& c, const MultiPoly& p) { return MultiPoly::constant(c) * p; }

MultiPoly det3(const PolyMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

PolyVector3 cross(const PolyVector3& a, const PolyVector3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool proportional(const PolyVector3& a, const PolyVector3& b, std::optional<std::uint32_t> modulus) {
  for (auto c : cross(a, b)) {
    if (modulus) c = c.reduce_mod(*modulus);
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string to_string(const PolyVector3& v) {
  return "(" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + ")";
}

FieldElement eval(const MultiPoly& p, const FieldElement& u0, const FieldElement& v0) {
  const Field& f = u0.field();
  if (!(f == v0.field())) throw InvalidArgument("evaluation points come from different fields");
  const std::uint32_t ch = f.characteristic();
  FieldElement sum = f.zero();
  for (const auto& [m, c] : p.terms()) {
    MultiPoly::Coeff r = c % ch;
    if (r < 0) r += ch;
    sum = sum + f.from_int(static_cast<long long>(r)) * u0.pow(m.first) * v0.pow(m.second);
  }
  return sum;
}

namespace {

const MultiPoly U = MultiPoly::u();
const MultiPoly V = MultiPoly::v();
MultiPoly k(long c) { return MultiPoly::constant(c); }

MultiPoly common_factor() { return U * (U - k(1)) * V * (V - k(1)); }

// The third entry as produced by the frame construction; the variant with
// v^2 - uv agrees with it only mod 2.
PolyVector3 d1234() { return {V * V - V, V - U, U * V - V * V}; }
PolyVector3 d1234_printed() { return {V * V - V, V - U, V * V - U * V}; }
PolyVector3 d2143() { return {U - U * V, U - k(1), V - U}; }
PolyVector3 d3412() { return {V, U * V - U, -(U * V)}; }
PolyVector3 d4321() { return {V - U, U * U - U, U - U * V}; }

IdentityCheck identity(std::string id, std::string claim, const MultiPoly& residual) {
  return IdentityCheck{std::move(id), std::move(claim), residual.to_string(), residual.is_zero()};
}

}  // namespace

std::vector<IdentityCheck> verify_thm1_identities() {
  std::vector<IdentityCheck> out;
  const MultiPoly det1 = det3({d1234(), d2143(), d3412()});
  const MultiPoly det2 = det3({d1234(), d2143(), d4321()});
  const MultiPoly f1 = V * V - U * V + k(2) * U - k(3) * V;
  const MultiPoly f2 = U * V - U * U + k(2) * U - k(3) * V + k(1);

  out.push_back(identity("a1", "det[D1234; D2143; D3412] = u(u-1)v(v-1)(v^2-uv+2u-3v) over Z",
                         det1 - common_factor() * f1));
  out.push_back(identity("a2", "det[D1234; D2143; D4321] = u(u-1)v(v-1)(uv-u^2+2u-3v+1) over Z",
                         det2 - common_factor() * f2));
  out.push_back(identity("b", "difference of the two determinants = u(u-1)v(v-1)((u-v)^2-1) over Z",
                         (det1 - det2) - common_factor() * ((U - V).pow(2) - k(1))));
  out.push_back(identity("b-plus", "v^2-uv+2u-3v becomes 2-2v at u = v+1",
                         f1.substitute(V + k(1), V) - (k(2) - k(2) * V)));
  out.push_back(identity("b-minus", "v^2-uv+2u-3v becomes -2 at u = v-1", f1.substitute(V - k(1), V) + k(2)));
  const MultiPoly u_sub = V + k(1);
  out.push_back(identity("c1", "first determinant vanishes mod 2 at u = v+1",
                         det1.substitute(u_sub, V).reduce_mod(2)));
  out.push_back(identity("c2", "second determinant vanishes mod 2 at u = v+1",
                         det2.substitute(u_sub, V).reduce_mod(2)));
  const PolyMatrix3 third{PolyVector3{V, V + k(1), k(0)}, PolyVector3{V * V + V, k(1), V},
                          PolyVector3{V + k(1), k(1), V * V}};
  out.push_back(identity("d", "det[(v,v+1,0); (v^2+v,1,v); (v+1,1,v^2)] = v(v+1)(v^3+v^2+1) mod 2",
                         (det3(third) - V * (V + k(1)) * (V.pow(3) + V * V + k(1))).reduce_mod(2)));
  bool rows_match = true;
  for (const auto& f : derive_frame_points()) {
    rows_match = rows_match && (f.char2_only ? f.proportional_mod2 : f.proportional_over_z);
  }
  out.push_back(IdentityCheck{"rows", "each determinant row is proportional to the point built from the frame",
                              rows_match ? "0" : "mismatch", rows_match});
  const bool irreducible = !find_factor(2, Coefficients{1, 0, 1, 1}).has_value();
  out.push_back(IdentityCheck{"irreducible", "v^3+v^2+1 is irreducible over GF(2)",
                              irreducible ? "0" : "has a factor", irreducible});
  return out;
}

IdentityCheck printed_entry_check() {
  const MultiPoly residual =
      det3({d1234_printed(), d2143(), d3412()}) - common_factor() * (V * V - U * V + k(2) * U - k(3) * V);
  IdentityCheck c;
  c.id = "printed-entry";
  c.claim = "with third entry v^2-uv in D1234 the first factorization holds mod 2 but not over Z";
  c.residual = residual.to_string();
  c.ok = !residual.is_zero() && residual.reduce_mod(2).is_zero();
  return c;
}

std::vector<FrameDerivation> derive_frame_points() {
  const PolyVector3 c[4] = {{k(1), k(1), k(1)}, {k(1), k(0), k(0)}, {k(0), k(1), k(0)}, {k(0), k(0), k(1)}};
  const PolyVector3 a{U, V, k(1)};
  auto d_point = [&](int i, int j, int kk, int l) {
    const PolyVector3 first = cross(cross(a, c[i]), cross(c[j], c[l]));
    const PolyVector3 second = cross(cross(a, c[j]), cross(c[kk], c[l]));
    return cross(first, second);
  };
  std::vector<FrameDerivation> out;
  auto add = [&](std::string name, PolyVector3 derived, PolyVector3 stated, bool char2_only) {
    FrameDerivation f{std::move(name), std::move(derived), std::move(stated), char2_only, false, false};
    if (char2_only) {
      PolyVector3 sub;
      for (int t = 0; t < 3; ++t) sub[t] = f.derived[t].substitute(V + k(1), V);
      f.proportional_mod2 = proportional(sub, f.stated, 2);
    } else {
      f.proportional_over_z = proportional(f.derived, f.stated);
      f.proportional_mod2 = proportional(f.derived, f.stated, 2);
    }
    out.push_back(std::move(f));
  };
  add("D1234", d_point(0, 1, 2, 3), d1234(), false);
  add("D2143", d_point(1, 0, 3, 2), d2143(), false);
  add("D3412", d_point(2, 3, 0, 1), d3412(), false);
  add("D4321", d_point(3, 2, 1, 0), d4321(), false);
  add("a^c4", cross(a, c[3]), {V, V + k(1), k(0)}, true);
  add("D3241", d_point(2, 1, 3, 0), {V + k(1), k(1), V * V}, true);
  return out;
}

}  // namespace ree
