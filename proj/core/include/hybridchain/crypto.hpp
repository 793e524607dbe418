// Copyright 2026 The hybridchain Authors
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

#include "hybridchain/bytes.hpp"

#include <optional>

// Thin value-type wrappers over libsodium. Everything here is deterministic
// given its inputs; randomness (seeds, nonces) is always supplied by the caller
// so simulation runs stay reproducible.
namespace hybridchain::crypto
{
   struct PublicKeyTag;
   struct SecretSeedTag;
   struct SymmetricKeyTag;
   struct AeadNonceTag;
   struct BoxPublicKeyTag;
   struct BoxNonceTag;

   using PublicKey    = FixedBytes<32, PublicKeyTag>;
   using Seed         = FixedBytes<32, SecretSeedTag>;
   using SymmetricKey = FixedBytes<32, SymmetricKeyTag>;
   using AeadNonce    = FixedBytes<12, AeadNonceTag>;
   using BoxPublicKey = FixedBytes<32, BoxPublicKeyTag>;
   using BoxNonce     = FixedBytes<24, BoxNonceTag>;

   /// Ed25519 public key followed by the 64-byte detached signature.
   inline constexpr std::size_t signature_blob_size = 96;

   void ensure_initialized();

   Hash sha256(ByteView data);

   /// Incremental SHA-256 for multi-part preimages.
   class Sha256
   {
     public:
      Sha256();
      Sha256& update(ByteView data);
      Hash    finish();

     private:
      alignas(16) std::uint8_t state_[128];
      bool finished_ = false;
   };

   /// Last 20 bytes of SHA-256 over the public key.
   Address address_of(const PublicKey& key);

   class SigningKey
   {
     public:
      static SigningKey from_seed(const Seed& seed);

      const PublicKey& public_key() const { return public_; }
      Address          address() const { return address_of(public_); }

      /// Returns the 96-byte blob: public key || signature.
      Bytes sign(ByteView message) const;

     private:
      PublicKey                     public_;
      std::array<std::uint8_t, 64> secret_{};
   };

   /// Checks that the blob verifies `message` and that its embedded key hashes
   /// to `signer`.
   bool verify(const Address& signer, ByteView message, ByteView signature_blob);

   /// Extracts the embedded public key, if the blob is well formed.
   std::optional<PublicKey> signer_key(ByteView signature_blob);

   /// ChaCha20-Poly1305 (IETF) with 16-byte tag appended to the ciphertext.
   Bytes                aead_seal(const SymmetricKey& key, const AeadNonce& nonce, ByteView plaintext,
                                  ByteView associated = {});
   std::optional<Bytes> aead_open(const SymmetricKey& key, const AeadNonce& nonce,
                                  ByteView ciphertext, ByteView associated = {});

   /// X25519 + XSalsa20-Poly1305 identity used for enclave-to-enclave key delivery.
   class BoxKeyPair
   {
     public:
      static BoxKeyPair from_seed(const Seed& seed);

      const BoxPublicKey& public_key() const { return public_; }

      Bytes                seal_to(const BoxPublicKey& recipient, const BoxNonce& nonce,
                                   ByteView message) const;
      std::optional<Bytes> open_from(const BoxPublicKey& sender, const BoxNonce& nonce,
                                     ByteView ciphertext) const;

      /// Raw secret, only exposed so isolation tests can scan for it.
      ByteView secret_view() const { return {secret_.data(), secret_.size()}; }

     private:
      BoxPublicKey                 public_;
      std::array<std::uint8_t, 32> secret_{};
   };
}  // namespace hybridchain::crypto
