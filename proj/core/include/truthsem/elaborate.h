// Copyright 2026 The truthsem Authors.
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

#ifndef TRUTHSEM_ELABORATE_H_
#define TRUTHSEM_ELABORATE_H_

#include <string_view>
#include <vector>

#include "truthsem/dsl.h"
#include "truthsem/system.h"

namespace truthsem {

// Lowers surface sugar into a closed core system:
//   atmost/atleast k of S   -> conjunction/disjunction over subsets of S
//   forall/exists x in S    -> conjunction/disjunction over the members of S
//   F(n)                    -> T(neg_n),  neg_n := not T(n)
//   U(n)                    -> not T(n) and not F(n)
//   T(<phi>)                -> T(q),      q := phi   (identical quotes share q)
// `all` ranges over the user-declared sentences. Bare sentence names are
// rejected; external atoms are referenced bare.
//
// Throws Error{kUnknownName, kDuplicateName, kEmptySystem,
// kBareSentenceReference, kUnknownFlag}.
SentenceSystem elaborate_system(const dsl::RawSystem& raw);

// parse_system followed by elaborate_system.
SentenceSystem load_system(std::string_view text);

// Expect directives in declaration order.
std::vector<dsl::ExpectDecl> expectations(const dsl::RawSystem& raw);

// Re-expresses a core system as raw declarations (every sentence becomes
// user-declared). Elaborating the result reproduces names and bodies.
dsl::RawSystem to_raw(const SentenceSystem& system);

}  // namespace truthsem

#endif  // TRUTHSEM_ELABORATE_H_
