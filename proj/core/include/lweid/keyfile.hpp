// Copyright 2026 The lweid Authors.
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

#ifndef LWEID_KEYFILE_HPP
#define LWEID_KEYFILE_HPP

#include <filesystem>
#include <optional>
#include <variant>

#include "lweid/cve.hpp"
#include "lweid/stern.hpp"
#include "lweid/wire.hpp"

namespace lweid {

/// On-disk identity: magic "LWID", version, scheme id, params block, then
/// key material. Secret-bearing files are flagged; loaders refuse to use a
/// public-only file as a prover identity.
struct KeyFile {
  SchemeId scheme = SchemeId::Stern;
  Params params;
  std::variant<SternPublicKey, CvePublicKey> pk;
  std::optional<SecretKey> secret;

  bool has_secret() const { return secret.has_value(); }
  const SternPublicKey& stern_pk() const { return std::get<SternPublicKey>(pk); }
  const CvePublicKey& cve_pk() const { return std::get<CvePublicKey>(pk); }

  static KeyFile from_stern(const Params& params, const SternKeyPair& kp, bool with_secret);
  static KeyFile from_cve(const Params& params, const CveKeyPair& kp, bool with_secret);
};

std::vector<uint8_t> serialize_keyfile(const KeyFile& kf);
/// Throws FileFormatError on malformed bytes or key material that violates
/// the scheme invariants (b = As+e, Aperp A = 0, y = Aperp b, weight p).
KeyFile deserialize_keyfile(std::span<const uint8_t> bytes);

void save_keyfile(const std::filesystem::path& path, const KeyFile& kf);
KeyFile load_keyfile(const std::filesystem::path& path);

}  // namespace lweid

#endif  // LWEID_KEYFILE_HPP
