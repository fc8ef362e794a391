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

#include "lweid/keyfile.hpp"

#include <cstring>
#include <fstream>

#include "lweid/linalg.hpp"

namespace lweid {

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

bool take_vector(std::span<const uint8_t> in, size_t& off, size_t len, uint16_t q, FqVector& out) {
  if (in.size() - off < 2 * len) return false;
  if (!FqVector::from_bytes(in.subspan(off, 2 * len), len, q, out)) return false;
  off += 2 * len;
  return true;
}

bool take_matrix(std::span<const uint8_t> in, size_t& off, size_t rows, size_t cols, uint16_t q,
                 FqMatrix& out) {
  if (in.size() - off < 2 * rows * cols) return false;
  if (!FqMatrix::from_bytes(in.subspan(off, 2 * rows * cols), rows, cols, q, out)) return false;
  off += 2 * rows * cols;
  return true;
}

bool is_zero_matrix(const FqMatrix& m) {
  for (Fq e : m.entries())
    if (e != 0) return false;
  return true;
}

void validate_material(const KeyFile& kf) {
  const Params& p = kf.params;
  auto fail = [](const char* what) { throw FileFormatError(std::string("key file: ") + what); };

  const FqVector* b = nullptr;
  uint16_t weight = 0;
  if (kf.scheme == SchemeId::Stern) {
    const auto& pk = kf.stern_pk();
    if (pk.A.rows() != p.n || pk.A.cols() != p.m || pk.b.size() != p.n) fail("dimension mismatch");
    b = &pk.b;
    weight = pk.p;
  } else {
    const auto& pk = kf.cve_pk();
    if (pk.A.rows() != p.n || pk.A.cols() != p.m || pk.b.size() != p.n ||
        pk.Aperp.rows() != size_t(p.n - p.m) || pk.Aperp.cols() != p.n ||
        pk.y.size() != size_t(p.n - p.m))
      fail("dimension mismatch");
    if (!is_zero_matrix(mat_mul(pk.Aperp, pk.A))) fail("annihilator does not annihilate A");
    if (!(mat_vec_mul(pk.Aperp, pk.b) == pk.y)) fail("syndrome does not match b");
    b = &pk.b;
    weight = pk.p;
  }
  if (weight == 0 || weight >= p.n) fail("degenerate error weight");

  if (kf.secret) {
    const SecretKey& sk = *kf.secret;
    if (sk.s.size() != p.m || sk.e.size() != p.n) fail("secret dimension mismatch");
    if (sk.e.weight() != weight) fail("secret weight does not match p");
    const FqMatrix& A =
        kf.scheme == SchemeId::Stern ? kf.stern_pk().A : kf.cve_pk().A;
    if (!(mat_vec_mul(A, sk.s).add(sk.e) == *b)) fail("secret does not match public key");
  }
}

}  // namespace

KeyFile KeyFile::from_stern(const Params& params, const SternKeyPair& kp, bool with_secret) {
  KeyFile kf;
  kf.scheme = SchemeId::Stern;
  kf.params = params;
  kf.pk = kp.pk;
  if (with_secret) kf.secret = kp.sk;
  return kf;
}

KeyFile KeyFile::from_cve(const Params& params, const CveKeyPair& kp, bool with_secret) {
  KeyFile kf;
  kf.scheme = SchemeId::Cve;
  kf.params = params;
  kf.pk = kp.pk;
  if (with_secret) kf.secret = kp.sk;
  return kf;
}

std::vector<uint8_t> serialize_keyfile(const KeyFile& kf) {
  std::vector<uint8_t> out = {'L', 'W', 'I', 'D', kFileVersion};
  out.push_back(static_cast<uint8_t>(kf.scheme));
  append_params_block(out, kf.params);
  out.push_back(kf.secret ? 1 : 0);
  if (kf.scheme == SchemeId::Stern) {
    const auto& pk = kf.stern_pk();
    pk.A.append_bytes(out);
    pk.b.append_bytes(out);
    put_u16(out, pk.p);
  } else {
    const auto& pk = kf.cve_pk();
    pk.A.append_bytes(out);
    pk.Aperp.append_bytes(out);
    pk.y.append_bytes(out);
    pk.b.append_bytes(out);
    put_u16(out, pk.p);
  }
  if (kf.secret) {
    kf.secret->s.append_bytes(out);
    kf.secret->e.append_bytes(out);
  }
  return out;
}

KeyFile deserialize_keyfile(std::span<const uint8_t> bytes) {
  if (bytes.size() < 5 || std::memcmp(bytes.data(), "LWID", 4) != 0)
    throw FileFormatError("key file: bad magic");
  if (bytes[4] != kFileVersion) throw FileFormatError("key file: unsupported version");
  size_t off = 5;
  if (bytes.size() - off < 1) throw FileFormatError("key file: truncated");
  uint8_t scheme = bytes[off++];
  if (scheme != static_cast<uint8_t>(SchemeId::Stern) &&
      scheme != static_cast<uint8_t>(SchemeId::Cve))
    throw FileFormatError("key file: unknown scheme id");

  KeyFile kf;
  kf.scheme = static_cast<SchemeId>(scheme);
  if (!read_params_block(bytes, off, kf.params)) throw FileFormatError("key file: truncated");
  try {
    kf.params.validate();
  } catch (const std::invalid_argument& e) {
    throw FileFormatError(std::string("key file: ") + e.what());
  }
  if (bytes.size() - off < 1) throw FileFormatError("key file: truncated");
  uint8_t flag = bytes[off++];
  if (flag > 1) throw FileFormatError("key file: bad secret flag");

  const Params& p = kf.params;
  auto need_u16 = [&](uint16_t& v) {
    if (bytes.size() - off < 2) throw FileFormatError("key file: truncated");
    v = uint16_t(bytes[off]) | uint16_t(bytes[off + 1]) << 8;
    off += 2;
  };

  if (kf.scheme == SchemeId::Stern) {
    SternPublicKey pk;
    if (!take_matrix(bytes, off, p.n, p.m, p.q, pk.A) ||
        !take_vector(bytes, off, p.n, p.q, pk.b))
      throw FileFormatError("key file: truncated or out-of-range material");
    need_u16(pk.p);
    kf.pk = std::move(pk);
  } else {
    CvePublicKey pk;
    if (!take_matrix(bytes, off, p.n, p.m, p.q, pk.A) ||
        !take_matrix(bytes, off, size_t(p.n) - p.m, p.n, p.q, pk.Aperp) ||
        !take_vector(bytes, off, size_t(p.n) - p.m, p.q, pk.y) ||
        !take_vector(bytes, off, p.n, p.q, pk.b))
      throw FileFormatError("key file: truncated or out-of-range material");
    need_u16(pk.p);
    kf.pk = std::move(pk);
  }
  if (flag) {
    SecretKey sk;
    if (!take_vector(bytes, off, p.m, p.q, sk.s) || !take_vector(bytes, off, p.n, p.q, sk.e))
      throw FileFormatError("key file: truncated or out-of-range material");
    kf.secret = std::move(sk);
  }
  if (off != bytes.size()) throw FileFormatError("key file: trailing bytes");
  validate_material(kf);
  return kf;
}

void save_keyfile(const std::filesystem::path& path, const KeyFile& kf) {
  auto bytes = serialize_keyfile(kf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileFormatError("key file: cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!out) throw FileFormatError("key file: write failed: " + path.string());
}

KeyFile load_keyfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("key file: cannot open: " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_keyfile(bytes);
}

}  // namespace lweid
