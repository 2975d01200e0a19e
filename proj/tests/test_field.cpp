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

#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "ree/error.hpp"
#include "ree/field.hpp"
#include "ree/plane.hpp"

namespace {

using ree::Field;
using ree::FieldElement;

const std::vector<std::uint32_t> kOrders{2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128};

TEST(Field, Gf8MatchesBitOracle) {
  const Field f = Field::gf8();
  ASSERT_EQ(f.modulus(), (ree::Coefficients{1, 1, 0, 1}));
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      EXPECT_EQ(f.mul(a, b), oracle::gf8_mul(a, b)) << a << "*" << b;
      EXPECT_EQ(f.add(a, b), a ^ b);
      EXPECT_EQ(f.mul(a, b), f.mul_reference(a, b));
    }
  }
}

TEST(Field, TablesMatchPolynomialOracleInEveryOrder) {
  for (auto q : kOrders) {
    const Field f = Field::standard(q);
    ASSERT_EQ(f.order(), q);
    const auto p = f.characteristic();
    oracle::Gen gen(q);
    const std::uint32_t samples = std::min<std::uint32_t>(q * q, 4000);
    for (std::uint32_t s = 0; s < samples; ++s) {
      const auto a = gen.below(q), b = gen.below(q);
      EXPECT_EQ(f.mul(a, b), oracle::poly_mul(p, f.modulus(), a, b)) << f.to_string();
      EXPECT_EQ(f.add(a, b), oracle::poly_add(p, f.degree(), a, b)) << f.to_string();
    }
  }
}

TEST(Field, AxiomsHoldOnRandomTriples) {
  for (auto q : kOrders) {
    const Field f = Field::standard(q);
    oracle::Gen gen(1000 + q);
    for (int s = 0; s < 300; ++s) {
      const auto a = f.element(gen.below(q)), b = f.element(gen.below(q)), c = f.element(gen.below(q));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, f.zero());
      EXPECT_EQ(a + (-a), f.zero());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inv(), f.one());
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(Field, FermatAndGeneratorOrder) {
  for (auto q : kOrders) {
    const Field f = Field::standard(q);
    std::uint32_t order = 1;
    while (f.generator().pow(order) != f.one()) ++order;
    EXPECT_EQ((q - 1) % order, 0u) << f.to_string();
    std::set<Field::Code> powers;
    for (std::uint32_t k = 0; k + 1 < q; ++k) powers.insert(f.generator().pow(k).code());
    EXPECT_EQ(powers.size(), order) << f.to_string();
    EXPECT_EQ(f.generator_log(f.generator().code()).has_value(), order == q - 1) << f.to_string();
    for (const auto& a : f.elements()) {
      if (!a.is_zero()) {
        EXPECT_EQ(a.pow(q - 1), f.one());
      }
    }
  }
}

TEST(Field, StandardModuliAreLexLeastIrreducible) {
  EXPECT_EQ(Field::standard(9).modulus(), (ree::Coefficients{1, 0, 1}));
  EXPECT_EQ(Field::standard(64).modulus(), (ree::Coefficients{1, 0, 0, 0, 0, 1, 1}));
  EXPECT_EQ(Field::standard(16).modulus(), (ree::Coefficients{1, 0, 0, 1, 1}));
  EXPECT_EQ(Field::standard(121).modulus(), (ree::Coefficients{1, 0, 1}));
  EXPECT_EQ(Field::standard(125).modulus(), (ree::Coefficients{1, 0, 1, 1}));
  EXPECT_EQ(Field::standard(4).modulus(), (ree::Coefficients{1, 1, 1}));
}

TEST(Field, GammaPowerTable) {
  const Field f = Field::gf8();
  const auto g = f.generator();
  ASSERT_EQ(g.coefficients(), (ree::Coefficients{0, 1, 0}));
  auto poly = [&](std::uint32_t c0, std::uint32_t c1, std::uint32_t c2) { return f.from_coefficients({c0, c1, c2}); };
  EXPECT_EQ(g.pow(3), g + f.one());
  EXPECT_EQ(g.pow(4), poly(0, 1, 1));
  EXPECT_EQ(g.pow(5), poly(1, 1, 1));
  EXPECT_EQ(g.pow(6), poly(1, 0, 1));
  EXPECT_EQ(g.pow(7), f.one());
  EXPECT_EQ(g.pow(6).to_string(), "γ^6");
  EXPECT_EQ(f.one().to_string(), "1");
  EXPECT_EQ(f.zero().to_string(), "0");
}

TEST(Field, TraceOnGf8) {
  const Field f = Field::gf8();
  std::size_t ones = 0;
  for (const auto& x : f.elements()) {
    const auto t = ree::trace(x);
    EXPECT_EQ(t.code(), oracle::gf8_trace(x.code()));
    EXPECT_EQ(ree::trace(x * x), t);
    for (const auto& y : f.elements()) EXPECT_EQ(ree::trace(x + y), ree::trace(x) + ree::trace(y));
    ones += t.code() == 1;
  }
  EXPECT_EQ(ones, 4u);
  EXPECT_EQ(ree::trace(f.generator().pow(6)).code(), 1u);
  EXPECT_EQ(ree::trace(f.zero()).code(), 0u);
}

TEST(Field, TraceInOddCharacteristicLandsInPrimeField) {
  for (auto q : {9u, 25u, 27u, 81u}) {
    const Field f = Field::standard(q);
    std::vector<std::size_t> hits(f.characteristic(), 0);
    for (const auto& x : f.elements()) {
      const auto t = ree::trace(x);
      ASSERT_LT(t.code(), f.characteristic());
      ++hits[t.code()];
    }
    for (auto h : hits) EXPECT_EQ(h, q / f.characteristic());
  }
}

TEST(Field, ExternalLineCriterionCountsTwentyEight) {
  const Field f = Field::gf8();
  std::size_t count = 0;
  for (std::uint32_t m = 1; m < 8; ++m) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      const auto m2inv = f.inv(oracle::gf8_mul(m, m));
      count += oracle::gf8_trace(oracle::gf8_mul(b, m2inv)) == 1;
    }
  }
  EXPECT_EQ(count, 28u);
}

TEST(Field, ParseAndPrintRoundTrip) {
  for (auto q : kOrders) {
    const Field f = Field::standard(q);
    EXPECT_EQ(Field::parse(f.to_string()), f);
  }
  EXPECT_EQ(Field::gf8().to_string(), "GF(2^3; 1,1,0,1)");
  EXPECT_EQ(Field::parse(" GF(2^3;1, 1, 0, 1) "), Field::gf8());
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(Field::standard(6), ree::InvalidArgument);
  EXPECT_THROW(Field::standard(1), ree::InvalidArgument);
  EXPECT_THROW(Field::parse("GF(2^2; 1,0,1)"), ree::InvalidArgument);  // (X+1)^2
  EXPECT_THROW(Field::parse("GF(4^1; 0,1)"), ree::InvalidArgument);
  EXPECT_THROW(Field::parse("GF(2^3; 1,1,0)"), ree::InvalidArgument);
  EXPECT_THROW(Field::parse("nonsense"), ree::InvalidArgument);
  const Field f8 = Field::gf8();
  const Field f9 = Field::standard(9);
  EXPECT_THROW(f8.one() + f9.one(), ree::InvalidArgument);
  EXPECT_THROW(f8.zero().inv(), ree::InvalidArgument);
}

TEST(Field, FindFactor) {
  EXPECT_FALSE(ree::find_factor(2, {1, 1, 0, 1}).has_value());
  EXPECT_FALSE(ree::find_factor(2, {1, 0, 1, 1}).has_value());
  const auto f = ree::find_factor(2, {1, 0, 1});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, (ree::Coefficients{1, 1}));
  EXPECT_TRUE(ree::find_factor(3, {2, 0, 1}).has_value());  // X^2 - 1
}

TEST(SubfieldEmbed, Gf8IntoGf64IsAHomomorphismOntoARootOfTheModulus) {
  const Field f8 = Field::gf8();
  const Field f64 = Field::standard(64);
  const auto emb = ree::subfield_embed(f8, f64);
  ASSERT_TRUE(emb.has_value());
  std::set<Field::Code> image;
  for (const auto& a : f8.elements()) {
    image.insert(emb->map(a.code()));
    for (const auto& b : f8.elements()) {
      EXPECT_EQ((*emb)(a * b), (*emb)(a) * (*emb)(b));
      EXPECT_EQ((*emb)(a + b), (*emb)(a) + (*emb)(b));
    }
  }
  EXPECT_EQ(image.size(), 8u);
  EXPECT_EQ(emb->map(1), 1u);
  // Roots of X^3+X+1 in GF(64) by the bit oracle for X^6+X^5+1.
  std::vector<std::uint32_t> roots;
  for (std::uint32_t x = 0; x < 64; ++x) {
    const auto x3 = oracle::gf2m_mul(oracle::gf2m_mul(x, x, 0b1100001, 6), x, 0b1100001, 6);
    if ((x3 ^ x ^ 1) == 0) roots.push_back(x);
  }
  EXPECT_EQ(roots.size(), 3u);
  const auto g = emb->map(f8.generator().code());
  EXPECT_NE(std::find(roots.begin(), roots.end(), g), roots.end());
  for (auto r : roots) EXPECT_FALSE(f64.less(r, g));
  for (std::uint32_t b = 0; b < 64; ++b) EXPECT_EQ(emb->in_image(b), image.count(b) == 1);
}

TEST(SubfieldEmbed, AbsentOrRejected) {
  EXPECT_FALSE(ree::subfield_embed(Field::gf8(), Field::standard(16)).has_value());
  EXPECT_TRUE(ree::subfield_embed(Field::standard(4), Field::standard(16)).has_value());
  EXPECT_TRUE(ree::subfield_embed(Field::standard(3), Field::standard(27)).has_value());
  EXPECT_THROW(ree::subfield_embed(Field::gf8(), Field::standard(9)), ree::InvalidArgument);
}

TEST(SubfieldEmbed, FieldIntoItselfIsTheIdentity) {
  for (auto q : {8u, 9u, 64u}) {
    const Field f = Field::standard(q);
    const auto emb = ree::subfield_embed(f, f);
    ASSERT_TRUE(emb.has_value());
    for (std::uint32_t a = 0; a < q; ++a) EXPECT_EQ(emb->map(a), a);
  }
}

}  // namespace
