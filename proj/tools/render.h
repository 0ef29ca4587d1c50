// Copyright 2026 The zkToken Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZKTOKEN_TOOLS_RENDER_H_
#define ZKTOKEN_TOOLS_RENDER_H_

// Human-readable JSON views of wire objects. Debug output only; nothing reads
// these back.

#include "json.hpp"
#include "zktoken/protocol.h"
#include "zktoken/registry.h"

namespace zktoken::cli {

nlohmann::json render(const Credential& vc);
nlohmann::json render(const Presentation& vp);
nlohmann::json render(const Blacklist& bl);
nlohmann::json render(const IssuerPublicParams& p);
nlohmann::json render(const RegistryRecord& rec);
nlohmann::json render(const IssuerState& st);

}  // namespace zktoken::cli

#endif  // ZKTOKEN_TOOLS_RENDER_H_
