#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "zkscholar/bytes.hpp"
#include "zkscholar/errors.hpp"

namespace zks {

inline constexpr std::size_t kDigestSize = 32;
inline constexpr std::size_t kPublicKeySize = 33;  // compressed SEC1
inline constexpr std::size_t kSecretKeySize = 32;
inline constexpr std::size_t kSignatureSize = 64;  // compact r || s

inline constexpr int kMaxWeightPercent = 100;
inline constexpr int kMaxRawScore = 100;
inline constexpr int kMaxWeightedScore = 10000;

// Hash contexts. One byte is prefixed to every payload so digests from
// different contexts can never collide (Merkle second-preimage hardening).
enum class DomainTag : std::uint8_t {
  kLeaf = 0x00,
  kNode = 0x01,
  kTupleHash = 0x02,
  kClaim = 0x03,
  kCredential = 0x04,
};

struct Digest {
  std::array<std::uint8_t, kDigestSize> bytes{};

  std::string hex() const;
  static Digest from_hex(std::string_view hex);
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
  auto operator<=>(const Digest&) const = default;
};

struct PublicKey {
  std::array<std::uint8_t, kPublicKeySize> bytes{};

  std::string hex() const;
  static PublicKey from_hex(std::string_view hex);
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
  auto operator<=>(const PublicKey&) const = default;
};

struct SecretKey {
  std::array<std::uint8_t, kSecretKeySize> bytes{};

  std::string hex() const;
  static SecretKey from_hex(std::string_view hex);
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
};

struct Signature {
  std::array<std::uint8_t, kSignatureSize> bytes{};

  std::string hex() const;
  static Signature from_hex(std::string_view hex);
  ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
  auto operator<=>(const Signature&) const = default;
};

struct KeyPair {
  SecretKey secret;
  PublicKey public_key;
};

Digest sha256(ByteView data);

/// SHA-256 over the one-byte tag followed by the payload.
Digest hash_tagged(DomainTag tag, ByteView payload);

/// Fixed-width injective encoding of a (weight, weighted score) pair:
/// 2-byte big-endian weight, 4-byte big-endian weighted score.
Bytes encode_weighted(int weight, int weighted_score);

/// Deterministic secp256k1 keypair from exactly 32 bytes of entropy.
KeyPair keygen(ByteView seed);

/// ECDSA over secp256k1 with RFC 6979 nonces and low-s normalization; the
/// same (key, digest) always yields the same signature bytes.
Signature sign(const SecretKey& secret, const Digest& digest);

/// Never throws on malformed input; anything that does not parse is invalid.
bool verify(const PublicKey& public_key, const Digest& digest, const Signature& sig);

// Memoizes verify() results keyed by (key, digest, signature). Verification
// is a pure function, so a hit is exactly equivalent to re-running it; this
// is what keeps repeated aggregate verification near-constant time.
class SignatureCache {
 public:
  bool verify(const PublicKey& public_key, const Digest& digest, const Signature& sig) const;

 private:
  static constexpr std::size_t kMaxEntries = 1 << 17;

  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, bool> cache_;
};

}  // namespace zks
