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

#include "hybridchain/crypto.hpp"

#include <sodium.h>

#include <cstring>
#include <mutex>

namespace hybridchain::crypto
{
   static_assert(sizeof(crypto_hash_sha256_state) <= 128);
   static_assert(crypto_sign_PUBLICKEYBYTES == 32 && crypto_sign_BYTES == 64);
   static_assert(crypto_aead_chacha20poly1305_ietf_NPUBBYTES == 12);
   static_assert(crypto_box_NONCEBYTES == 24);

   void ensure_initialized()
   {
      static std::once_flag once;
      std::call_once(once, [] {
         if (sodium_init() < 0)
            throw std::runtime_error("libsodium initialization failed");
      });
   }

   Hash sha256(ByteView data)
   {
      Hash out;
      crypto_hash_sha256(out.data(), data.data(), data.size());
      return out;
   }

   Sha256::Sha256()
   {
      crypto_hash_sha256_init(reinterpret_cast<crypto_hash_sha256_state*>(state_));
   }

   Sha256& Sha256::update(ByteView data)
   {
      if (finished_)
         throw std::logic_error("Sha256::update after finish");
      crypto_hash_sha256_update(reinterpret_cast<crypto_hash_sha256_state*>(state_), data.data(),
                                data.size());
      return *this;
   }

   Hash Sha256::finish()
   {
      Hash out;
      crypto_hash_sha256_final(reinterpret_cast<crypto_hash_sha256_state*>(state_), out.data());
      finished_ = true;
      return out;
   }

   Address address_of(const PublicKey& key)
   {
      auto digest = sha256(key.view());
      return Address::from_span(digest.view().subspan(32 - 20));
   }

   SigningKey SigningKey::from_seed(const Seed& seed)
   {
      ensure_initialized();
      SigningKey k;
      crypto_sign_seed_keypair(k.public_.data(), k.secret_.data(), seed.data());
      return k;
   }

   Bytes SigningKey::sign(ByteView message) const
   {
      Bytes out(signature_blob_size);
      std::memcpy(out.data(), public_.data(), 32);
      crypto_sign_detached(out.data() + 32, nullptr, message.data(), message.size(),
                           secret_.data());
      return out;
   }

   std::optional<PublicKey> signer_key(ByteView signature_blob)
   {
      if (signature_blob.size() != signature_blob_size)
         return std::nullopt;
      return PublicKey::from_span(signature_blob.first(32));
   }

   bool verify(const Address& signer, ByteView message, ByteView signature_blob)
   {
      auto key = signer_key(signature_blob);
      if (!key || address_of(*key) != signer)
         return false;
      return crypto_sign_verify_detached(signature_blob.data() + 32, message.data(),
                                         message.size(), key->data()) == 0;
   }

   Bytes aead_seal(const SymmetricKey& key, const AeadNonce& nonce, ByteView plaintext,
                   ByteView associated)
   {
      Bytes              out(plaintext.size() + crypto_aead_chacha20poly1305_ietf_ABYTES);
      unsigned long long written = 0;
      crypto_aead_chacha20poly1305_ietf_encrypt(out.data(), &written, plaintext.data(),
                                                plaintext.size(), associated.data(),
                                                associated.size(), nullptr, nonce.data(),
                                                key.data());
      out.resize(written);
      return out;
   }

   std::optional<Bytes> aead_open(const SymmetricKey& key, const AeadNonce& nonce,
                                  ByteView ciphertext, ByteView associated)
   {
      if (ciphertext.size() < crypto_aead_chacha20poly1305_ietf_ABYTES)
         return std::nullopt;
      Bytes              out(ciphertext.size());
      unsigned long long written = 0;
      if (crypto_aead_chacha20poly1305_ietf_decrypt(out.data(), &written, nullptr,
                                                    ciphertext.data(), ciphertext.size(),
                                                    associated.data(), associated.size(),
                                                    nonce.data(), key.data()) != 0)
         return std::nullopt;
      out.resize(written);
      return out;
   }

   BoxKeyPair BoxKeyPair::from_seed(const Seed& seed)
   {
      ensure_initialized();
      BoxKeyPair k;
      crypto_box_seed_keypair(k.public_.data(), k.secret_.data(), seed.data());
      return k;
   }

   Bytes BoxKeyPair::seal_to(const BoxPublicKey& recipient, const BoxNonce& nonce,
                             ByteView message) const
   {
      Bytes out(message.size() + crypto_box_MACBYTES);
      if (crypto_box_easy(out.data(), message.data(), message.size(), nonce.data(),
                          recipient.data(), secret_.data()) != 0)
         throw std::runtime_error("crypto_box_easy failed");
      return out;
   }

   std::optional<Bytes> BoxKeyPair::open_from(const BoxPublicKey& sender, const BoxNonce& nonce,
                                              ByteView ciphertext) const
   {
      if (ciphertext.size() < crypto_box_MACBYTES)
         return std::nullopt;
      Bytes out(ciphertext.size() - crypto_box_MACBYTES);
      if (crypto_box_open_easy(out.data(), ciphertext.data(), ciphertext.size(), nonce.data(),
                               sender.data(), secret_.data()) != 0)
         return std::nullopt;
      return out;
   }
}  // namespace hybridchain::crypto
