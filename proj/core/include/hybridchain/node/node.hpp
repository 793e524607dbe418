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

#include "hybridchain/consensus/byzantine.hpp"
#include "hybridchain/consensus/follower.hpp"
#include "hybridchain/consensus/ibft.hpp"
#include "hybridchain/contracts/group_state.hpp"
#include "hybridchain/contracts/public_state.hpp"
#include "hybridchain/ledger/tx_pool.hpp"
#include "hybridchain/node/contract_manager.hpp"
#include "hybridchain/node/credential.hpp"
#include "hybridchain/node/rpc.hpp"
#include "hybridchain/privacy/enclave.hpp"
#include "hybridchain/sim/network.hpp"

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>

namespace hybridchain::node
{
   enum class NodeKind
   {
      Validator,
      Member,
   };

   /// When a private transaction's marker enters the public pool.
   enum class MarkerMode
   {
      /// After every other member acknowledged the payload.
      AfterDistribution,
      /// Together with the start of distribution.
      Parallel,
   };

   std::string_view to_string(MarkerMode mode);

   struct PrivacySettings
   {
      double     tamperRate   = 0.15;
      Millis     processing   = 300;
      MarkerMode markerMode   = MarkerMode::AfterDistribution;
      Millis     deferTimeout = 60'000;
   };

   /// Static topology of a run, known to every node.
   struct Directory
   {
      std::vector<NodeId>                    validators;  // validator-set order
      std::vector<NodeId>                    members;
      std::map<Address, NodeId>              hostOf;     // domain address to hosting node
      std::map<NodeId, crypto::BoxPublicKey> enclaveOf;  // enclave-capable nodes

      std::vector<NodeId> all() const;
      std::optional<NodeId> node_of_enclave(const crypto::BoxPublicKey& key) const;
   };

   struct NodeConfig
   {
      NodeId                       id   = 0;
      NodeKind                     kind = NodeKind::Member;
      /// Consensus identity (validators).
      std::optional<crypto::Seed>  validatorSeed;
      /// Enclave identity (members).
      std::optional<crypto::Seed>  enclaveSeed;
      consensus::IbftParams        ibft;
      consensus::ByzantineBehavior byzantine;
      PrivacySettings              privacy;
      /// Run seed; private draws are keyed streams derived from it.
      std::uint64_t                seed = 0;
   };

   /// Resolution of one accepted request.
   struct Receipt
   {
      Hash                                     txId;
      std::string                              method;
      Millis                                   submittedAt = 0;
      Millis                                   finalAt     = 0;
      std::optional<Millis>                    enclaveMs;
      std::optional<std::uint64_t>             blockHeight;
      std::optional<Hash>                      groupId;
      std::optional<contracts::ContractErrorCode> error;
   };

   using ReceiptCallback = std::function<void(const Receipt&)>;

   /// Identifies an accepted request before it resolves. Private requests
   /// have a payload hash at once and a transaction id once the marker exists.
   struct RpcHandle
   {
      std::optional<Hash> txId;
      std::optional<Hash> payloadHash;
   };

   struct NodeHooks
   {
      std::function<void(NodeId, const ledger::Block&, const Hash&, Millis)> finalized;
      std::function<void(NodeId, const consensus::SafetyViolation&, Millis)> safetyViolation;
      std::function<void(NodeId, const Hash& groupId, const std::string& why, Millis)> divergence;
      /// At the consumer's node once every member holds the group key.
      std::function<void(NodeId, const privacy::PrivacyGroup&, const contracts::PrivacyGroupRequested&, Millis)>
          groupReady;
      std::function<void(NodeId, const consensus::Transition&, Millis)> transition;
   };

   struct NodeCounters
   {
      std::uint64_t txAdmitted       = 0;
      std::uint64_t txRejectedGossip = 0;
      std::uint64_t txDropped        = 0;
      std::uint64_t authFailures     = 0;
      std::uint64_t refetches        = 0;
      std::uint64_t deferred         = 0;
      std::uint64_t privateExecuted  = 0;
      std::uint64_t privateFailed    = 0;
      std::uint64_t groupsHalted     = 0;
      std::uint64_t groupErrors      = 0;
   };

   /// One executed private transaction, in execution order.
   struct PrivateExecution
   {
      Hash                                        groupId;
      Hash                                        markerTx;
      Hash                                        payloadHash;
      std::uint64_t                               blockHeight = 0;
      std::optional<contracts::ContractErrorCode> error;
   };

   /// One simulated node: chain, pool, public state and consensus participant,
   /// plus credential, RPC and contract managers and, on member nodes, an
   /// enclave with per-group private state.
   class Node
   {
     public:
      Node(NodeConfig config, consensus::ValidatorSet validators, const ledger::Block& genesis,
           const Directory& directory, sim::Network& network, NodeHooks hooks);

      Node(const Node&)            = delete;
      Node& operator=(const Node&) = delete;

      /// Attaches to the network and starts consensus at the chain head.
      void start();

      NodeId   id() const { return config_.id; }
      NodeKind kind() const { return config_.kind; }

      CredentialManager&       credentials() { return credentials_; }
      const CredentialManager& credentials() const { return credentials_; }
      const ContractManager&   contract_manager() const { return contracts_; }

      /// Throws NodeError for requests the RPC manager rejects, and
      /// PrivacyError when the payload cannot be sealed.
      RpcHandle rpc_submit(const RpcRequest& request, ReceiptCallback onReceipt);
      /// Canonical encoding of the result. Throws NodeError or ContractError.
      Bytes rpc_query(const RpcRequest& request) const;

      /// Throws PrivacyError(NotGroupMember) for groups this node is not in.
      const contracts::GroupState& read_private_state(const Hash& groupId) const;
      std::vector<Hash>            private_groups() const;
      bool                         group_halted(const Hash& groupId) const { return halted_.contains(groupId); }

      const ledger::ChainStore&        chain() const { return chain_; }
      const ledger::TxPool&            pool() const { return pool_; }
      const contracts::PublicState&    state() const { return state_; }
      const privacy::Enclave*          enclave() const { return enclave_.get(); }
      const consensus::Participant&    participant() const { return *participant_; }
      const NodeCounters&              counters() const { return counters_; }
      const std::vector<PrivateExecution>& private_log() const { return privateLog_; }
      /// Markers finalized but not yet executed, per group.
      std::size_t deferred_count() const;

      /// Every byte string the node keeps, for isolation scans.
      std::vector<Bytes> stored_bytes() const;

     private:
      struct PendingPublic
      {
         Receipt         receipt;
         ReceiptCallback callback;
      };

      struct PendingPrivate
      {
         RpcRequest                    request;
         Hash                          groupId;
         privacy::EnclavePayload       payload;
         privacy::DistributionPlan     plan;
         Millis                        start = 0;
         std::set<crypto::BoxPublicKey> acked;
         std::optional<Millis>         enclaveMs;
         std::optional<Hash>           summaryHash;
         std::optional<Hash>           txId;
         ReceiptCallback               callback;
         bool                          executed = false;
         std::optional<std::uint64_t>  executedHeight;
         std::optional<contracts::ContractErrorCode> executionError;
         bool                          resolved = false;
      };

      struct FormingGroup
      {
         contracts::PrivacyGroupRequested request;
         std::set<NodeId>                 waiting;
      };

      struct DeferredMarker
      {
         Hash          txId;
         Address       sender;
         ledger::PrivacyMarker marker;
         std::uint64_t blockHeight = 0;
      };

      RpcContext rpc_context() const;
      void       on_envelope(const sim::Envelope& env);
      void on_consensus(const Bytes& payload);
      void on_gossip_tx(const Bytes& payload);
      void on_enclave(NodeId from, const Bytes& payload);

      void run_step(consensus::Step step);
      void on_finalized(std::uint64_t height, const Hash& hash);
      void broadcast_tx(const ledger::Transaction& tx);
      bool admit(const ledger::Transaction& tx);
      void schedule(Millis at, std::function<void()> action);

      ledger::Block build(const ledger::BlockTemplate& tmpl);
      bool          check(const ledger::Block& block) const;
      std::uint64_t expected_gas(const ledger::Transaction& tx) const;

      Hash submit_public(const RpcRequest& request, const contracts::AbiOperation& op, ReceiptCallback cb);
      Hash submit_private(const RpcRequest& request, const contracts::AbiOperation& op, ReceiptCallback cb);
      void submit_marker(PendingPrivate& p);
      void push_payload(const Hash& payloadHash, const privacy::HopPlan& hop, bool resend);
      void on_payload_acked(const Hash& payloadHash, const crypto::BoxPublicKey& from);
      void distribution_complete(PendingPrivate& p);
      /// Breach reports resolve at group confirmation; deployments and
      /// batches once the marker executed here and distribution completed.
      void maybe_resolve(PendingPrivate& p);

      void form_group(const contracts::PrivacyGroupRequested& req);
      void enqueue_marker(const DeferredMarker& m);
      void drain(const Hash& groupId);
      void execute(const DeferredMarker& m, const privacy::EnclavePayload& payload);
      void halt_group(const Hash& groupId, const std::string& why);

      NodeConfig                    config_;
      consensus::ValidatorSet       validators_;
      const Directory&              directory_;
      sim::Network&                 net_;
      NodeHooks                     hooks_;
      const contracts::Abi&         abi_;

      ledger::ChainStore            chain_;
      ledger::TxPool                pool_;
      contracts::PublicState        state_;
      CredentialManager             credentials_;
      ContractManager               contracts_;
      std::unique_ptr<consensus::Participant> participant_;
      std::unique_ptr<privacy::Enclave>       enclave_;

      std::map<Hash, contracts::GroupState>          groupStates_;
      std::map<Hash, FormingGroup>                   formingGroups_;
      std::set<Hash>                                 refetched_;
      std::map<Hash, std::deque<DeferredMarker>>     deferred_;
      std::set<std::pair<Hash, Hash>>                deferTimers_;
      std::set<Hash>                                 halted_;
      std::map<Hash, std::uint64_t>                  payloadSeq_;
      std::map<Hash, PendingPublic>                  pendingPublic_;
      std::map<Hash, PendingPrivate>                 pendingPrivate_;  // by payload hash
      std::map<Hash, Hash>                           markerPayload_;   // marker tx id to payload hash
      std::vector<PrivateExecution>                  privateLog_;
      NodeCounters                                   counters_;
   };
}  // namespace hybridchain::node
