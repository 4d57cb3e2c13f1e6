// Copyright 2026 The fracmom Authors
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

#include <doctest.h>

#include "fracmom/error.hpp"
#include "fracmom/identities.hpp"

using namespace fracmom;

TEST_CASE("identity suites pass exactly up to m = 40") {
  for (const auto& id : identity_suite_ids()) {
    const long m = id == "lemma-6.2" ? 20 : id == "legendre" ? 15 : 40;
    const IdentityReport r = identity_suite(id, m);
    INFO(id);
    CHECK(r.ok());
    CHECK(r.checks > 0);
    CHECK(r.id == id);
  }
}

TEST_CASE("small cases of the identity suites") {
  CHECK(identity_suite("lemma-6.1", 1).ok());
  CHECK(identity_suite("lemma-5.2", 1).ok());
  CHECK(identity_suite("lemma-6.3", 2).ok());
}

TEST_CASE("identity reports are reproducible") {
  const IdentityReport a = identity_suite("lemma-6.3", 12);
  const IdentityReport b = identity_suite("lemma-6.3", 12);
  CHECK(a.checks == b.checks);
  CHECK(a.range == b.range);
}

TEST_CASE("unknown suites and bad ranges are rejected") {
  CHECK_THROWS_AS(identity_suite("lemma-9.9", 3), Error);
  CHECK_THROWS_AS(identity_suite("lemma-6.1", 0), Error);
}
