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

// Objects that several tests need and that cost more than a few ms to build.

#ifndef REE_TESTS_SHARED_HPP_
#define REE_TESTS_SHARED_HPP_

#include "ree/conic.hpp"
#include "ree/design.hpp"
#include "ree/embed.hpp"
#include "ree/groups.hpp"
#include "ree/pentagons.hpp"

namespace shared {

inline const ree::HyperovalContext& ctx() {
  static const auto c = ree::build_context();
  return c;
}
inline const ree::CollineationGroup& G() {
  static const auto g = ree::hyperoval_stabilizer(ctx());
  return g;
}
inline const ree::IncidenceDesign& r3() {
  static const auto d = ree::build_ree_unital(ctx());
  return d;
}
inline const ree::PermGroup& aut() {
  static const auto a = ree::automorphism_group(r3());
  return a;
}
inline const std::vector<ree::Pentagon>& pentagons() {
  static const auto p = ree::classify_pentagons(ctx(), G());
  return p;
}

}  // namespace shared

#endif  // REE_TESTS_SHARED_HPP_
