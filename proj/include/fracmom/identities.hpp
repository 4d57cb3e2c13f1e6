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

#pragma once

// Exact-arithmetic checks of the combinatorial identities behind the
// closed forms. Failures are reported, never thrown.

#include <optional>
#include <string>
#include <vector>

namespace fracmom {

struct IdentityFailure {
  std::string params;  // e.g. "m=3 k=7"
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  std::string range;
  long checks = 0;
  std::optional<IdentityFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Every known suite id, in a fixed order.
const std::vector<std::string>& identity_suite_ids();

/// Runs one suite. Ids: "lemma-5.2", "lemma-6.1", "lemma-6.3", "lemma-6.2",
/// "legendre", "binomial-sum", "power-to-bernoulli", "derivatives". For
/// "lemma-6.2" and "legendre" m_max caps the degree directly.
IdentityReport identity_suite(const std::string& which, long m_max);

}  // namespace fracmom
