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

#include "ree/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ree/error.hpp"

namespace ree {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  Coefficients modulus;
  std::vector<std::uint32_t> place;  // p^i
  std::uint32_t primitive = 1;
  std::vector<std::uint32_t> exp;  // primitive^i, i in [0, q-1)
  std::vector<std::uint32_t> log;  // inverse of exp; log[0] unused
  // Discrete log to base X when X is primitive, empty otherwise.
  std::vector<std::uint32_t> generator_log;
};

}  // namespace detail

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 20;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(Coefficients& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by the monic polynomial m over GF(p).
Coefficients poly_mod(Coefficients a, const Coefficients& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

std::string poly_to_string(const Coefficients& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 'X';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

std::optional<Coefficients> find_factor(std::uint32_t p, const Coefficients& poly) {
  const std::size_t deg = poly.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic polynomial of degree d, lower coefficients enumerated as a
    // base-p counter.
    Coefficients f(d + 1, 0);
    f[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t r = n;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      if (poly_mod(poly, f, p).empty()) return f;
    }
  }
  return std::nullopt;
}

Field Field::make(std::uint32_t p, std::uint32_t e, Coefficients modulus) {
  if (!is_prime(p)) {
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (e == 0) throw InvalidArgument("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InvalidArgument("field order exceeds 2^20");
    }
  }
  if (modulus.size() != e + 1 || modulus.back() != 1) {
    throw InvalidArgument("modulus must be monic of degree " + std::to_string(e));
  }
  for (auto c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficients must be reduced mod p");
  }
  if (auto factor = find_factor(p, modulus)) {
    throw InvalidArgument("modulus " + poly_to_string(modulus) + " is reducible over GF(" +
                          std::to_string(p) + "): divisible by " + poly_to_string(*factor));
  }

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->e = e;
  data->q = static_cast<std::uint32_t>(q);
  data->modulus = std::move(modulus);
  data->place.resize(e);
  std::uint32_t w = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    data->place[i] = w;
    w *= p;
  }
  Field f(data);

  auto ref_pow = [&f](Code a, std::uint64_t k) {
    Code r = 1;
    while (k) {
      if (k & 1) r = f.mul_reference(r, a);
      a = f.mul_reference(a, a);
      k >>= 1;
    }
    return r;
  };
  const std::uint32_t n = data->q - 1;
  const auto factors = prime_factors(n);
  auto is_primitive = [&](Code a) {
    if (a == 0) return false;
    for (auto r : factors) {
      if (ref_pow(a, n / r) == 1) return false;
    }
    return true;
  };
  const Code gen = f.generator().code();
  Code prim = 0;
  if (is_primitive(gen)) {
    prim = gen;
  } else {
    for (Code a = 1; a < data->q; ++a) {
      if (is_primitive(a)) {
        prim = a;
        break;
      }
    }
  }
  data->primitive = prim;
  data->exp.resize(n);
  data->log.assign(data->q, 0);
  Code x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    data->exp[i] = x;
    data->log[x] = i;
    x = f.mul_reference(x, prim);
  }
  if (prim == gen) data->generator_log = data->log;
  return f;
}

Field Field::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto fail = [&]() -> Field {
    throw InvalidArgument("cannot parse field '" + std::string(text) +
                          "'; expected GF(p^e; c0,...,ce)");
  };
  if (s.rfind("GF(", 0) != 0 || s.back() != ')') return fail();
  const auto caret = s.find('^');
  const auto semi = s.find(';');
  if (caret == std::string::npos || semi == std::string::npos || caret > semi) return fail();
  try {
    const auto p = static_cast<std::uint32_t>(std::stoul(s.substr(3, caret - 3)));
    const auto e = static_cast<std::uint32_t>(std::stoul(s.substr(caret + 1, semi - caret - 1)));
    Coefficients mod;
    std::stringstream list(s.substr(semi + 1, s.size() - semi - 2));
    std::string item;
    while (std::getline(list, item, ',')) mod.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return make(p, e, std::move(mod));
  } catch (const std::logic_error&) {
    return fail();
  }
}

Field Field::gf8() { return make(2, 3, {1, 1, 0, 1}); }

Field Field::prime(std::uint32_t p) { return make(p, 1, {p - 1, 1}); }

Field Field::standard(std::uint32_t q) {
  if (q == 8) return gf8();
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) throw InvalidArgument("field order must be at least 2");
  std::uint32_t e = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (e == 1) return prime(p);
  // Lower coefficients enumerated with c0 most significant.
  const std::uint64_t count = q;
  Coefficients mod(e + 1, 0);
  mod[e] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t t = n;
    for (std::uint32_t i = e; i-- > 0;) {
      mod[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (!find_factor(p, mod)) return make(p, e, mod);
  }
  throw InternalError("no irreducible polynomial found");
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->e; }
std::uint32_t Field::order() const { return data_->q; }
const Coefficients& Field::modulus() const { return data_->modulus; }

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement Field::generator() const {
  if (data_->e == 1) {
    // X = -c0 in GF(p)[X]/(X + c0).
    return FieldElement(*this, (data_->p - data_->modulus[0]) % data_->p);
  }
  return FieldElement(*this, data_->place[1]);
}

FieldElement Field::element(Code code) const {
  if (code >= data_->q) throw InvalidArgument("element code out of range");
  return FieldElement(*this, code);
}

FieldElement Field::from_coefficients(const Coefficients& c) const {
  return FieldElement(*this, encode(c));
}

FieldElement Field::from_int(long long n) const { return FieldElement(*this, from_int_code(n)); }

Field::Code Field::from_int_code(long long n) const {
  const long long p = data_->p;
  return static_cast<Code>(((n % p) + p) % p);
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(data_->q);
  for (Code a = 0; a < data_->q; ++a) out.emplace_back(*this, a);
  return out;
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "GF(" << data_->p << '^' << data_->e << "; ";
  for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
    if (i) os << ',';
    os << data_->modulus[i];
  }
  os << ')';
  return os.str();
}

Field::Code Field::add(Code a, Code b) const {
  if (data_->p == 2) return a ^ b;
  const std::uint32_t p = data_->p;
  Code r = 0;
  for (std::uint32_t w = 1; a || b; w *= p) {
    r += ((a % p + b % p) % p) * w;
    a /= p;
    b /= p;
  }
  return r;
}

Field::Code Field::neg(Code a) const {
  if (data_->p == 2) return a;
  const std::uint32_t p = data_->p;
  Code r = 0;
  for (std::uint32_t w = 1; a; w *= p) {
    r += ((p - a % p) % p) * w;
    a /= p;
  }
  return r;
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t n = data_->q - 1;
  std::uint32_t k = data_->log[a] + data_->log[b];
  if (k >= n) k -= n;
  return data_->exp[k];
}

Field::Code Field::inv(Code a) const {
  if (a == 0) throw InvalidArgument("inversion of zero in " + to_string());
  const std::uint32_t n = data_->q - 1;
  return data_->exp[(n - data_->log[a]) % n];
}

Field::Code Field::pow(Code a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = data_->q - 1;
  return data_->exp[(static_cast<std::uint64_t>(data_->log[a]) * (k % n)) % n];
}

Field::Code Field::frobenius(Code a, std::uint32_t k) const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < k % data_->e; ++i) e *= data_->p;
  return pow(a, e);
}

Coefficients Field::coefficients(Code a) const {
  Coefficients c(data_->e, 0);
  for (std::uint32_t i = 0; i < data_->e; ++i) {
    c[i] = a % data_->p;
    a /= data_->p;
  }
  return c;
}

Field::Code Field::encode(const Coefficients& c) const {
  if (c.size() > data_->e) throw InvalidArgument("too many coefficients for " + to_string());
  Code r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= data_->p) throw InvalidArgument("coefficient not reduced mod p");
    r += c[i] * data_->place[i];
  }
  return r;
}

Field::Code Field::mul_reference(Code a, Code b) const {
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  const std::uint32_t p = data_->p;
  Coefficients prod(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < cb.size(); ++j) {
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    }
  }
  return encode(poly_mod(std::move(prod), data_->modulus, p));
}

bool Field::less(Code a, Code b) const {
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::optional<std::uint32_t> Field::generator_log(Code a) const {
  if (a == 0 || data_->generator_log.empty()) return std::nullopt;
  return data_->generator_log[a];
}

std::string Field::format(Code a, ElementFormat fmt) const {
  if (a == 0) return "0";
  if (fmt == ElementFormat::kPower && data_->e > 1) {
    if (auto k = generator_log(a)) {
      if (*k == 0) return "1";
      if (*k == 1) return "γ";
      return "γ^" + std::to_string(*k);
    }
  }
  const auto c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "γ";
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  return data_->p == other.data_->p && data_->e == other.data_->e &&
         data_->modulus == other.data_->modulus;
}

void FieldElement::check_same(const FieldElement& b) const {
  if (!(field_ == b.field_)) {
    throw InvalidArgument("operands from different fields: " + field_.to_string() + " and " +
                          b.field_.to_string());
  }
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  check_same(b);
  return FieldElement(field_, field_.add(code_, b.code_));
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  check_same(b);
  return FieldElement(field_, field_.sub(code_, b.code_));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(code_)); }

FieldElement FieldElement::operator*(const FieldElement& b) const {
  check_same(b);
  return FieldElement(field_, field_.mul(code_, b.code_));
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
  check_same(b);
  return FieldElement(field_, field_.div(code_, b.code_));
}

FieldElement FieldElement::inv() const { return FieldElement(field_, field_.inv(code_)); }

FieldElement FieldElement::pow(std::uint64_t k) const {
  return FieldElement(field_, field_.pow(code_, k));
}

bool FieldElement::operator==(const FieldElement& b) const {
  return code_ == b.code_ && field_ == b.field_;
}

bool FieldElement::operator<(const FieldElement& b) const {
  check_same(b);
  return field_.less(code_, b.code_);
}

FieldElement trace(const FieldElement& x) {
  const Field& f = x.field();
  Field::Code acc = 0;
  for (std::uint32_t i = 0; i < f.degree(); ++i) acc = f.add(acc, f.frobenius(x.code(), i));
  if (acc >= f.characteristic()) throw InternalError("trace left the prime field");
  return Field::prime(f.characteristic()).element(acc);
}

FieldElement FieldEmbedding::operator()(const FieldElement& a) const {
  if (!(a.field() == sub_)) throw InvalidArgument("element is not in the embedded subfield");
  return FieldElement(sup_, map(a.code()));
}

bool FieldEmbedding::in_image(Field::Code b) const {
  return std::find(image_.begin(), image_.end(), b) != image_.end();
}

std::optional<FieldEmbedding> subfield_embed(const Field& sub, const Field& sup) {
  if (sub.characteristic() != sup.characteristic()) {
    throw InvalidArgument("subfield_embed needs equal characteristic");
  }
  if (sup.degree() % sub.degree() != 0) return std::nullopt;
  if (sub == sup) {
    std::vector<Field::Code> image(sub.order());
    for (Field::Code a = 0; a < sub.order(); ++a) image[a] = a;
    return FieldEmbedding(sub, sup, std::move(image));
  }
  const auto& mod = sub.modulus();
  std::optional<Field::Code> root;
  for (Field::Code x = 0; x < sup.order(); ++x) {
    Field::Code acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = sup.add(sup.mul(acc, x), sup.from_int_code(mod[i]));
    }
    if (acc == 0 && (!root || sup.less(x, *root))) root = x;
  }
  if (!root) throw InternalError("no root of the subfield modulus in the extension");
  std::vector<Field::Code> image(sub.order());
  for (Field::Code a = 0; a < sub.order(); ++a) {
    const auto c = sub.coefficients(a);
    Field::Code acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = sup.add(sup.mul(acc, *root), sup.from_int_code(c[i]));
    }
    image[a] = acc;
  }
  return FieldEmbedding(sub, sup, std::move(image));
}

}  // namespace ree
