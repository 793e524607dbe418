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

#include "hybridchain/node/node.hpp"

#include <type_traits>

namespace hybridchain::node
{
   std::string_view to_string(MarkerMode mode)
   {
      return mode == MarkerMode::Parallel ? "parallel" : "after_distribution";
   }

   std::vector<NodeId> Directory::all() const
   {
      std::vector<NodeId> out = validators;
      out.insert(out.end(), members.begin(), members.end());
      return out;
   }

   std::optional<NodeId> Directory::node_of_enclave(const crypto::BoxPublicKey& key) const
   {
      for (const auto& [n, k] : enclaveOf)
         if (k == key)
            return n;
      return std::nullopt;
   }

   Node::Node(NodeConfig config, consensus::ValidatorSet validators, const ledger::Block& genesis,
              const Directory& directory, sim::Network& network, NodeHooks hooks)
       : config_(std::move(config)),
         validators_(std::move(validators)),
         directory_(directory),
         net_(network),
         hooks_(std::move(hooks)),
         abi_(contracts::Abi::builtin()),
         chain_(genesis),
         contracts_(abi_)
   {
      contracts_.deploy_genesis();
      if (config_.enclaveSeed)
         enclave_ = std::make_unique<privacy::Enclave>(crypto::BoxKeyPair::from_seed(*config_.enclaveSeed));

      if (config_.kind == NodeKind::Member)
      {
         participant_ = std::make_unique<consensus::Follower>(validators_, chain_);
         return;
      }
      if (!config_.validatorSeed)
         throw std::invalid_argument("validator node " + std::to_string(config_.id) + " has no signing seed");
      auto engine = std::make_unique<consensus::IbftEngine>(
          validators_, crypto::SigningKey::from_seed(*config_.validatorSeed), chain_, config_.ibft,
          [this](const ledger::BlockTemplate& t) { return build(t); },
          [this](const ledger::Block& b) { return check(b); });
      if (!config_.byzantine.any())
      {
         participant_ = std::move(engine);
         return;
      }
      std::vector<NodeId> peers;
      for (auto v : directory_.validators)
         if (v != config_.id)
            peers.push_back(v);
      participant_ = std::make_unique<consensus::ByzantineEngine>(std::move(engine), config_.byzantine, peers,
                                                                  directory_.members);
   }

   void Node::start()
   {
      net_.attach(config_.id, [this](const sim::Envelope& env) { on_envelope(env); });
      run_step(participant_->start(net_.queue().now()));
   }

   void Node::schedule(Millis at, std::function<void()> action)
   {
      auto& q = net_.queue();
      q.schedule_at(std::max(at, q.now()), [this, action = std::move(action)] {
         if (!net_.crashed(config_.id))
            action();
      });
   }

   // Consensus plumbing

   void Node::run_step(consensus::Step step)
   {
      auto now = net_.queue().now();
      for (auto& action : step.actions)
      {
         std::visit(
             [&](auto& a) {
                using A = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<A, consensus::Send>)
                {
                   auto bytes   = consensus::encode(a.msg);
                   auto targets = a.to.empty() ? directory_.all() : a.to;
                   bool traced  = net_.trace() && net_.trace()->enabled();
                   auto detail  = traced ? consensus::describe(a.msg) : std::string();
                   for (auto t : targets)
                      if (t != config_.id)
                         net_.send(config_.id, t, sim::LinkClass::Consensus, "consensus", bytes, detail);
                }
                else if constexpr (std::is_same_v<A, consensus::ScheduleProposal>)
                {
                   auto h = a.height, r = a.round;
                   schedule(a.at, [this, h, r] { run_step(participant_->on_propose_due(h, r, net_.queue().now())); });
                }
                else if constexpr (std::is_same_v<A, consensus::ArmTimer>)
                {
                   auto h = a.height, r = a.round;
                   schedule(a.at, [this, h, r] { run_step(participant_->on_round_timeout(h, r, net_.queue().now())); });
                }
                else if constexpr (std::is_same_v<A, consensus::Finalized>)
                   on_finalized(a.height, a.hash);
                else if constexpr (std::is_same_v<A, consensus::Transition>)
                {
                   if (hooks_.transition)
                      hooks_.transition(config_.id, a, now);
                }
                else if constexpr (std::is_same_v<A, consensus::SafetyViolation>)
                {
                   if (net_.trace())
                      net_.trace()->record(now, "safety-violation", sim::node_name(config_.id), "-",
                                           "height=" + std::to_string(a.height));
                   if (hooks_.safetyViolation)
                      hooks_.safetyViolation(config_.id, a, now);
                }
             },
             action);
      }
   }

   void Node::on_envelope(const sim::Envelope& env)
   {
      try
      {
         if (env.kind == "consensus")
            on_consensus(env.payload);
         else if (env.kind == "tx")
            on_gossip_tx(env.payload);
         else if (env.kind == "enclave")
            on_enclave(env.from, env.payload);
      }
      catch (const DecodeError&)
      {
         ++counters_.txRejectedGossip;
      }
   }

   void Node::on_consensus(const Bytes& payload)
   {
      auto msg = consensus::decode_consensus_message(payload);
      run_step(participant_->on_message(msg, net_.queue().now()));
   }

   void Node::on_gossip_tx(const Bytes& payload)
   {
      Decoder d(payload);
      auto    tx = ledger::decode_transaction(d);
      d.expect_done();
      admit(tx);
   }

   bool Node::admit(const ledger::Transaction& tx)
   {
      if (pool_.contains(tx.txId) || chain_.find_tx(tx.txId))
         return false;
      if (!ledger::verify_transaction(tx) || tx.gasLimit != expected_gas(tx) ||
          tx.nonce < state_.next_nonce(tx.sender))
      {
         ++counters_.txRejectedGossip;
         return false;
      }
      pool_.add(tx, net_.queue().now());
      ++counters_.txAdmitted;
      return true;
   }

   void Node::broadcast_tx(const ledger::Transaction& tx)
   {
      auto bytes = ledger::encode(tx);
      for (auto v : directory_.validators)
         if (v != config_.id)
            net_.send(config_.id, v, sim::LinkClass::Consensus, "tx", bytes);
   }

   std::uint64_t Node::expected_gas(const ledger::Transaction& tx) const
   {
      if (const auto* m = tx.marker())
         return abi_.marker_gas(m->summaryHash.has_value());
      const auto* call = tx.call();
      const auto* op   = abi_.find(call->operation);
      if (!op || op->query || op->visibility != contracts::Visibility::Public || op->contract != call->contract)
         return 0;
      return abi_.static_gas(*op);
   }

   ledger::Block Node::build(const ledger::BlockTemplate& tmpl)
   {
      auto block = ledger::build_block(pool_, tmpl, [this](const Address& a) { return state_.next_nonce(a); });
      counters_.txDropped += pool_.take_dropped().size();
      return block;
   }

   bool Node::check(const ledger::Block& block) const
   {
      std::uint64_t                    gas = 0;
      std::map<Address, std::uint64_t> next;
      for (const auto& tx : block.transactions)
      {
         if (!ledger::verify_transaction(tx))
            return false;
         auto expected = expected_gas(tx);
         if (expected == 0 || tx.gasLimit != expected)
            return false;
         auto it    = next.find(tx.sender);
         auto nonce = it != next.end() ? it->second : state_.next_nonce(tx.sender);
         if (tx.nonce != nonce)
            return false;
         next[tx.sender] = nonce + 1;
         gas += tx.gasLimit;
      }
      return gas == block.gasUsed && gas <= config_.ibft.gasLimit;
   }

   void Node::on_finalized(std::uint64_t height, const Hash& hash)
   {
      auto        now   = net_.queue().now();
      const auto& block = chain_.at(height);
      if (net_.trace() && net_.trace()->enabled())
         net_.trace()->record(now, "finalize", sim::node_name(config_.id), "-",
                              "height=" + std::to_string(height) + " hash=" + hash.str() +
                                  " txs=" + std::to_string(block.transactions.size()));
      pool_.remove_included(block);

      for (const auto& tx : block.transactions)
      {
         auto result = state_.apply(tx, block.timestamp, abi_);
         if (const auto* m = tx.marker())
         {
            if (enclave_ && enclave_->is_member(m->groupId))
               enqueue_marker(DeferredMarker{tx.txId, tx.sender, *m, height});
            continue;
         }
         if (auto it = pendingPublic_.find(tx.txId); it != pendingPublic_.end())
         {
            auto pending                = std::move(it->second);
            pendingPublic_.erase(it);
            pending.receipt.finalAt     = now;
            pending.receipt.blockHeight = height;
            pending.receipt.error       = result.error;
            if (pending.callback)
               pending.callback(pending.receipt);
         }
         if (result.groupRequest && credentials_.holds(result.groupRequest->consumer))
            form_group(*result.groupRequest);
      }
      if (hooks_.finalized)
         hooks_.finalized(config_.id, block, hash, now);
   }

   // RPC

   RpcContext Node::rpc_context() const
   {
      return RpcContext{
          abi_, credentials_, contracts_,
          [this](const Hash& g) { return enclave_ && enclave_->is_member(g) && !halted_.contains(g); },
          [this](const Hash& g, const Address& a) { return enclave_ && enclave_->group(g).has_party(a); }};
   }

   RpcHandle Node::rpc_submit(const RpcRequest& request, ReceiptCallback onReceipt)
   {
      auto        ctx = rpc_context();
      const auto& op  = validate_submit(request, ctx);
      if (op.name == "register")
         credentials_.bind_role(request.sender, contracts::decode_register_args(request.params).role);
      if (op.visibility == contracts::Visibility::Public)
         return RpcHandle{submit_public(request, op, std::move(onReceipt)), std::nullopt};
      return RpcHandle{std::nullopt, submit_private(request, op, std::move(onReceipt))};
   }

   Hash Node::submit_public(const RpcRequest& request, const contracts::AbiOperation& op, ReceiptCallback cb)
   {
      ledger::Transaction tx;
      tx.sender   = request.sender;
      tx.nonce    = credentials_.allocate_nonce(request.sender, state_.next_nonce(request.sender));
      tx.kind     = ledger::PublicCall{op.contract, op.name, request.params};
      tx.gasLimit = abi_.static_gas(op);
      tx.gasPrice = 0;
      tx          = credentials_.sign_transaction(std::move(tx));

      admit(tx);
      broadcast_tx(tx);
      Receipt r;
      r.txId        = tx.txId;
      r.method      = op.name;
      r.submittedAt = request.submittedAt;
      pendingPublic_.emplace(tx.txId, PendingPublic{r, std::move(cb)});
      return tx.txId;
   }

   Hash Node::submit_private(const RpcRequest& request, const contracts::AbiOperation& op, ReceiptCallback cb)
   {
      auto now     = net_.queue().now();
      auto groupId = *request.groupId;
      auto seq     = payloadSeq_[groupId]++;

      privacy::PrivateCall call{request.sender, op.name, request.params};
      auto                 dist = privacy::distribute_payload(*enclave_, groupId, privacy::encode(call), config_.seed,
                                                              seq, net_.latency().enclave, config_.privacy.tamperRate,
                                                              config_.privacy.processing);
      auto hash = dist.payload.payload_hash();
      enclave_->store(dist.payload);

      PendingPrivate p;
      p.request  = request;
      p.groupId  = groupId;
      p.payload  = std::move(dist.payload);
      p.plan     = std::move(dist.plan);
      p.start    = now;
      p.callback = std::move(cb);
      if (op.name == "commit_breach_batch")
         p.summaryHash =
             contracts::batch_summary_hash(request.sender, contracts::decode_batch_args(request.params).entries);
      auto& ref = pendingPrivate_.insert_or_assign(hash, std::move(p)).first->second;

      schedule(now + config_.privacy.processing, [this, hash] {
         auto& pending = pendingPrivate_.at(hash);
         for (const auto& hop : pending.plan.hops)
            push_payload(hash, hop, false);
         if (pending.plan.hops.empty())
            distribution_complete(pending);
      });
      if (config_.privacy.markerMode == MarkerMode::Parallel)
         submit_marker(ref);
      return hash;
   }

   void Node::submit_marker(PendingPrivate& p)
   {
      if (p.txId)
         return;
      ledger::Transaction tx;
      tx.sender   = p.request.sender;
      tx.nonce    = credentials_.allocate_nonce(tx.sender, state_.next_nonce(tx.sender));
      tx.kind     = ledger::PrivacyMarker{p.groupId, p.payload.payload_hash(), p.summaryHash};
      tx.gasLimit = abi_.marker_gas(p.summaryHash.has_value());
      tx.gasPrice = 0;
      tx          = credentials_.sign_transaction(std::move(tx));
      admit(tx);
      broadcast_tx(tx);
      p.txId = tx.txId;
      markerPayload_.emplace(tx.txId, p.payload.payload_hash());
   }

   void Node::push_payload(const Hash& payloadHash, const privacy::HopPlan& hop, bool resend)
   {
      auto target = directory_.node_of_enclave(hop.recipient);
      if (!target)
         return;
      const auto&          p = pendingPrivate_.at(payloadHash);
      privacy::PayloadPush push{p.payload, payloadHash};
      // A tampered first delivery models corruption in transit: one flipped
      // ciphertext byte, which the receiver's AEAD check rejects.
      if (!resend && hop.tampered)
         push.payload.ciphertext.front() ^= 0x01;
      net_.send_after(config_.id, *target, sim::LinkClass::Enclave, resend ? hop.resend : hop.firstHop, "enclave",
                      privacy::encode(privacy::EnclaveMessage{std::move(push)}),
                      resend ? "resend" : (hop.tampered ? "push tampered" : "push"));
   }

   void Node::on_payload_acked(const Hash& payloadHash, const crypto::BoxPublicKey& from)
   {
      auto it = pendingPrivate_.find(payloadHash);
      if (it == pendingPrivate_.end())
         return;
      auto& p = it->second;
      p.acked.insert(from);
      if (!p.enclaveMs && p.acked.size() >= p.plan.hops.size())
         distribution_complete(p);
   }

   void Node::distribution_complete(PendingPrivate& p)
   {
      p.enclaveMs = net_.queue().now() - p.start;
      if (config_.privacy.markerMode == MarkerMode::AfterDistribution)
         submit_marker(p);
      maybe_resolve(p);
   }

   void Node::maybe_resolve(PendingPrivate& p)
   {
      if (p.resolved || !p.enclaveMs || !p.txId)
         return;
      bool groupConfirmed = p.request.method == "register_breach";
      if (!groupConfirmed && !p.executed)
         return;
      p.resolved = true;
      Receipt r;
      r.txId        = *p.txId;
      r.method      = p.request.method;
      r.submittedAt = p.request.submittedAt;
      r.finalAt     = net_.queue().now();
      r.enclaveMs   = p.enclaveMs;
      r.groupId     = p.groupId;
      if (!groupConfirmed)
      {
         r.blockHeight = p.executedHeight;
         r.error       = p.executionError;
      }
      if (p.callback)
         p.callback(r);
   }

   // Enclave messages

   void Node::on_enclave(NodeId from, const Bytes& payload)
   {
      auto msg = privacy::decode_enclave_message(payload);
      auto now = net_.queue().now();
      std::visit(
          [&](auto& m) {
             using M = std::decay_t<decltype(m)>;
             if constexpr (std::is_same_v<M, privacy::PayloadPush>)
             {
                const auto& gid = m.payload.groupId;
                if (!enclave_ || !enclave_->is_member(gid))
                   return;
                bool authentic = m.payload.payload_hash() == m.payloadHash && enclave_->open(m.payload).has_value();
                if (!authentic)
                {
                   ++counters_.authFailures;
                   // One refetch per payload; a second bad copy is left to the
                   // deferred-execution timeout.
                   if (!refetched_.insert(m.payloadHash).second)
                      return;
                   auto rng = privacy::hop_rng(config_.seed, m.payloadHash, enclave_->public_key());
                   auto hop = privacy::draw_hop(rng, enclave_->public_key(), net_.latency().enclave,
                                                config_.privacy.tamperRate);
                   net_.send_after(config_.id, from, sim::LinkClass::Enclave, hop.refetchRequest, "enclave",
                                   privacy::encode(privacy::EnclaveMessage{privacy::PayloadRefetch{gid, m.payloadHash}}),
                                   "refetch");
                   return;
                }
                if (!enclave_->find(m.payloadHash))
                   enclave_->store(m.payload);
                net_.send_after(config_.id, from, sim::LinkClass::Enclave, 0, "enclave",
                                privacy::encode(privacy::EnclaveMessage{privacy::PayloadAck{gid, m.payloadHash}}), "ack");
                drain(gid);
             }
             else if constexpr (std::is_same_v<M, privacy::PayloadAck>)
             {
                auto key = directory_.enclaveOf.find(from);
                if (key != directory_.enclaveOf.end())
                   on_payload_acked(m.payloadHash, key->second);
             }
             else if constexpr (std::is_same_v<M, privacy::PayloadRefetch>)
             {
                auto it  = pendingPrivate_.find(m.payloadHash);
                auto key = directory_.enclaveOf.find(from);
                if (it == pendingPrivate_.end() || key == directory_.enclaveOf.end())
                   return;
                ++counters_.refetches;
                for (const auto& hop : it->second.plan.hops)
                   if (hop.recipient == key->second)
                      push_payload(m.payloadHash, hop, true);
             }
             else if constexpr (std::is_same_v<M, privacy::KeyDelivery>)
             {
                if (!enclave_)
                   return;
                try
                {
                   const auto& g = enclave_->accept_key(m);
                   groupStates_.try_emplace(g.groupId, g.groupId, g.parties);
                }
                catch (const privacy::PrivacyError&)
                {
                   ++counters_.groupErrors;
                   return;
                }
                net_.send_after(config_.id, from, sim::LinkClass::Enclave, 0, "enclave",
                                privacy::encode(privacy::EnclaveMessage{privacy::KeyAck{m.groupId}}), "key-ack");
                drain(m.groupId);
             }
             else if constexpr (std::is_same_v<M, privacy::KeyAck>)
             {
                auto it = formingGroups_.find(m.groupId);
                if (it == formingGroups_.end())
                   return;
                it->second.waiting.erase(from);
                if (!it->second.waiting.empty())
                   return;
                auto req = it->second.request;
                formingGroups_.erase(it);
                if (hooks_.groupReady)
                   hooks_.groupReady(config_.id, enclave_->group(m.groupId), req, now);
             }
          },
          msg);
   }

   void Node::form_group(const contracts::PrivacyGroupRequested& req)
   {
      if (!enclave_)
         return;
      auto now  = net_.queue().now();
      auto host = directory_.hostOf.find(req.provider);
      if (host == directory_.hostOf.end() || !directory_.enclaveOf.contains(host->second))
      {
         ++counters_.groupErrors;
         return;
      }
      std::vector<crypto::BoxPublicKey> members{enclave_->public_key(), directory_.enclaveOf.at(host->second)};
      auto                              salt = privacy::pair_salt(req.consumer, req.provider);
      auto                              gid  = privacy::derive_group_id(members, salt);

      if (enclave_->is_member(gid))
      {
         // Reused group for a pair that already has one.
         if (!formingGroups_.contains(gid) && hooks_.groupReady)
            hooks_.groupReady(config_.id, enclave_->group(gid), req, now);
         return;
      }

      privacy::PrivacyGroup group;
      try
      {
         group = privacy::create_privacy_group(
             members, salt, {req.consumer, req.provider}, now,
             [this](const crypto::BoxPublicKey& k) { return directory_.node_of_enclave(k).has_value(); });
      }
      catch (const privacy::PrivacyError&)
      {
         ++counters_.groupErrors;
         return;
      }
      enclave_->install_group(group, privacy::derive_group_key(config_.seed, gid));
      groupStates_.try_emplace(gid, gid, group.parties);

      auto         rng   = derive_rng(config_.seed, "privacy/group-setup", gid.view());
      auto         delay = net_.latency().enclave.sample(rng);
      auto         nonce = rng.fill<24, crypto::BoxNonceTag>();
      FormingGroup forming{req, {}};
      for (const auto& m : group.members)
      {
         if (m == enclave_->public_key())
            continue;
         auto target = directory_.node_of_enclave(m);
         forming.waiting.insert(*target);
         net_.send_after(config_.id, *target, sim::LinkClass::Enclave, delay, "enclave",
                         privacy::encode(privacy::EnclaveMessage{enclave_->deliver_key(gid, m, nonce)}), "group-key");
      }
      formingGroups_.insert_or_assign(gid, std::move(forming));
   }

   // Private execution

   void Node::enqueue_marker(const DeferredMarker& m)
   {
      if (halted_.contains(m.marker.groupId))
         return;
      deferred_[m.marker.groupId].push_back(m);
      drain(m.marker.groupId);
   }

   void Node::drain(const Hash& groupId)
   {
      if (halted_.contains(groupId))
         return;
      auto it = deferred_.find(groupId);
      if (it == deferred_.end())
         return;
      auto& queue = it->second;
      while (!queue.empty())
      {
         const auto& head    = queue.front();
         const auto* payload = enclave_->find(head.marker.payloadHash);
         if (!payload)
         {
            auto ph = head.marker.payloadHash;
            if (deferTimers_.insert({groupId, ph}).second)
            {
               ++counters_.deferred;
               schedule(net_.queue().now() + config_.privacy.deferTimeout, [this, groupId, ph] {
                  auto q = deferred_.find(groupId);
                  if (q == deferred_.end() || q->second.empty() || q->second.front().marker.payloadHash != ph)
                     return;
                  halt_group(groupId, "PayloadNeverArrives: payload " + ph.str());
               });
            }
            return;
         }
         auto m = head;
         queue.pop_front();
         execute(m, *payload);
      }
   }

   void Node::execute(const DeferredMarker& m, const privacy::EnclavePayload& payload)
   {
      const auto&      gid = m.marker.groupId;
      auto&            gs  = groupStates_.at(gid);
      PrivateExecution rec{gid, m.txId, m.marker.payloadHash, m.blockHeight, std::nullopt};
      try
      {
         auto plain = enclave_->open(payload);
         if (!plain)
            throw contracts::ContractError(contracts::ContractErrorCode::InvalidArgument, "payload did not open");
         auto call = privacy::decode_private_call(*plain);
         if (call.sender != m.sender)
            throw contracts::ContractError(contracts::ContractErrorCode::InvalidArgument,
                                           "marker signer differs from private call sender");
         const auto* op = abi_.find(call.operation);
         if (!op || op->query || op->visibility != contracts::Visibility::Private)
            throw contracts::ContractError(contracts::ContractErrorCode::UnknownOperation, call.operation);

         if (op->name == "deploy_register_breach")
         {
            gs.deploy_register_breach(call.sender);
            contracts_.deploy(op->contract, contracts::Visibility::Private, gid);
         }
         else if (op->name == "register_breach")
            gs.register_breach(call.sender, contracts::decode_breach_args(call.args));
         else if (op->name == "commit_breach_batch")
         {
            auto batch = contracts::decode_batch_args(call.args);
            if (!m.marker.summaryHash || *m.marker.summaryHash != contracts::batch_summary_hash(call.sender, batch.entries))
               throw contracts::ContractError(contracts::ContractErrorCode::InvalidArgument,
                                              "marker summary hash does not match the batch");
            gs.commit_breach_batch(call.sender, batch);
         }
         else
            throw contracts::ContractError(contracts::ContractErrorCode::UnknownOperation, op->name);
      }
      catch (const contracts::ContractError& e)
      {
         rec.error = e.code;
      }
      catch (const DecodeError&)
      {
         rec.error = contracts::ContractErrorCode::InvalidArgument;
      }
      gs.mark_executed();
      ++(rec.error ? counters_.privateFailed : counters_.privateExecuted);
      privateLog_.push_back(rec);

      if (auto it = markerPayload_.find(m.txId); it != markerPayload_.end())
      {
         auto& p          = pendingPrivate_.at(it->second);
         p.executed       = true;
         p.executedHeight = m.blockHeight;
         p.executionError = rec.error;
         maybe_resolve(p);
      }
   }

   void Node::halt_group(const Hash& groupId, const std::string& why)
   {
      halted_.insert(groupId);
      ++counters_.groupsHalted;
      deferred_[groupId].clear();
      if (net_.trace())
         net_.trace()->record(net_.queue().now(), "group-halted", sim::node_name(config_.id), "-", why);
      if (hooks_.divergence)
         hooks_.divergence(config_.id, groupId, why, net_.queue().now());
   }

   // Reads

   Bytes Node::rpc_query(const RpcRequest& request) const
   {
      auto        ctx = rpc_context();
      const auto& op  = validate_query(request, ctx);
      Encoder     e;
      if (op.name == "get_domain")
      {
         Decoder d(request.params);
         auto    a   = d.fixed<Address>();
         const auto* rec = state_.domain(a);
         if (!rec)
            throw contracts::ContractError(contracts::ContractErrorCode::NotRegistered, a.str());
         contracts::encode(e, *rec);
      }
      else if (op.name == "list_domains")
      {
         e.u32(static_cast<std::uint32_t>(state_.domains().size()));
         for (const auto& r : state_.domains())
            contracts::encode(e, r);
      }
      else if (op.name == "list_services")
      {
         e.u32(static_cast<std::uint32_t>(state_.services().size()));
         for (const auto& r : state_.services())
            contracts::encode(e, r);
      }
      else if (op.name == "list_selections")
      {
         e.u32(static_cast<std::uint32_t>(state_.selections().size()));
         for (const auto& r : state_.selections())
            contracts::encode(e, r);
      }
      else if (op.name == "view_breaches")
      {
         const auto& records = read_private_state(*request.groupId).view_breaches(request.sender);
         e.u32(static_cast<std::uint32_t>(records.size()));
         for (const auto& r : records)
            contracts::encode(e, r);
      }
      else
         throw NodeError(NodeErrorCode::UnknownMethod, op.name);
      return std::move(e).take();
   }

   const contracts::GroupState& Node::read_private_state(const Hash& groupId) const
   {
      auto it = groupStates_.find(groupId);
      if (it == groupStates_.end())
         throw privacy::PrivacyError(privacy::PrivacyErrorCode::NotGroupMember,
                                     "node " + std::to_string(config_.id) + " is not in group " + groupId.str());
      return it->second;
   }

   std::vector<Hash> Node::private_groups() const
   {
      std::vector<Hash> out;
      for (const auto& [g, _] : groupStates_)
         out.push_back(g);
      return out;
   }

   std::size_t Node::deferred_count() const
   {
      std::size_t n = 0;
      for (const auto& [_, q] : deferred_)
         n += q.size();
      return n;
   }

   std::vector<Bytes> Node::stored_bytes() const
   {
      std::vector<Bytes> out;
      for (const auto& b : chain_.blocks())
         out.push_back(ledger::encode(b));
      for (const auto& tx : pool_.snapshot())
         out.push_back(ledger::encode(tx));
      out.push_back(state_.encode());
      if (enclave_)
         for (auto& b : enclave_->stored_bytes())
            out.push_back(std::move(b));
      for (const auto& [_, gs] : groupStates_)
         out.push_back(gs.encode());
      for (const auto& [_, p] : pendingPrivate_)
      {
         out.push_back(p.request.params);
         out.push_back(privacy::encode_payload(p.payload));
      }
      return out;
   }
}  // namespace hybridchain::node
