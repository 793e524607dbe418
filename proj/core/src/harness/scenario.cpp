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

#include "hybridchain/harness/scenario.hpp"

#include "hybridchain/harness/report.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace hybridchain::harness
{
   namespace
   {
      Bytes be64(std::uint64_t v)
      {
         Encoder e;
         e.u64(v);
         return std::move(e).take();
      }

      crypto::Seed identity_seed(std::uint64_t master, std::string_view label, std::uint64_t index)
      {
         auto rng = derive_rng(master, label, be64(index));
         return rng.fill<32, crypto::SecretSeedTag>();
      }

      Millis jitter(Rng& rng, Millis hi) { return hi <= 0 ? 0 : rng.uniform_int(0, hi); }

      using Next = std::function<void(const node::Receipt*)>;
   }  // namespace

   struct Simulation::Impl
   {
      struct Domain
      {
         Address                    address;
         NodeId                     host = 0;
         contracts::Role            role = contracts::Role::Consumer;
         Rng                        rng{0};
         std::vector<std::uint64_t> serviceIds;
      };

      /// One consumer's selection and everything that follows it.
      struct Agreement
      {
         std::size_t           index    = 0;
         std::size_t           consumer = 0;  // domain index
         std::size_t           provider = 0;  // domain index
         Rng                   rng{0};
         std::string           slaText;
         std::optional<Millis> deployAt;
         std::optional<Hash>   groupId;
         std::optional<Millis> readyAt;
         bool                  deployIssued = false;
      };

      struct PrivateSubmission
      {
         Hash   groupId;
         NodeId host = 0;
         Hash   payloadHash;
      };

      ScenarioConfig cfg;
      RunOptions     opt;

      sim::Trace                    trace;
      sim::ConsensusTrace           consensusTrace;
      sim::EventQueue               queue;
      std::unique_ptr<sim::Network> net;
      node::Directory               dir;
      std::vector<Address>          validatorAddresses;
      std::unique_ptr<consensus::ValidatorSet> vset;
      std::vector<std::unique_ptr<node::Node>> nodes;
      std::vector<FinalizedObserver>           observers;

      std::vector<Domain>          domains;
      std::vector<Address>         domainAddresses;
      std::vector<Agreement>       agreements;
      std::map<Address, std::size_t> agreementOf;  // consumer address to agreement
      std::size_t                  publicPhaseDone = 0;
      std::uint64_t                planned         = 0;
      std::uint64_t                resolved        = 0;
      bool                         stopped         = false;

      std::vector<LatencySample>      samples;
      std::vector<RpcRejection>       rejections;
      std::uint64_t                   contractErrors = 0;
      std::map<std::uint64_t, std::pair<Hash, NodeId>> firstFinalized;
      std::vector<SafetyIncident>     safety;
      std::vector<DivergenceIncident> divergence;

      std::vector<Needle>            secretNeedles;  // never on any wire or non-member store
      std::vector<PrivateSubmission> privateSubmissions;
      std::set<Hash>                 wireSeen;
      std::vector<Bytes>             wirePayloads;

      Impl(ScenarioConfig config, RunOptions options)
          : cfg(std::move(config)),
            opt(options),
            trace(options.trace),
            consensusTrace(options.trace),
            queue(options.eventCap)
      {
         validate(cfg);
         build_topology();
      }

      bool honest(NodeId id) const { return !cfg.byzantine.contains(id); }
      Millis now() const { return queue.now(); }
      Millis draw(Rng& rng) const { return jitter(rng, cfg.jitter()); }

      void build_topology()
      {
         auto V = static_cast<NodeId>(cfg.validators);
         auto M = static_cast<NodeId>(cfg.members);
         std::map<NodeId, crypto::Seed> validatorSeeds, enclaveSeeds;
         for (NodeId i = 0; i < V; ++i)
         {
            validatorSeeds[i] = identity_seed(cfg.seed, "identity/validator", i);
            validatorAddresses.push_back(crypto::SigningKey::from_seed(validatorSeeds[i]).address());
            dir.validators.push_back(i);
         }
         for (NodeId j = 0; j < M; ++j)
         {
            NodeId id        = V + j;
            enclaveSeeds[id] = identity_seed(cfg.seed, "identity/enclave", j);
            dir.members.push_back(id);
            dir.enclaveOf[id] = crypto::BoxKeyPair::from_seed(enclaveSeeds[id]).public_key();
         }
         vset = std::make_unique<consensus::ValidatorSet>(validatorAddresses);

         sim::FaultPlan faults{cfg.crashes, cfg.partitions, {}};
         for (const auto& [n, _] : cfg.byzantine)
            faults.byzantine.insert(n);
         net = std::make_unique<sim::Network>(queue, cfg.latency, cfg.seed, std::move(faults), &trace);

         std::vector<crypto::Seed> domainSeeds;
         for (std::size_t d = 0; d < cfg.workload.domains; ++d)
         {
            Domain dom;
            domainSeeds.push_back(identity_seed(cfg.seed, "identity/domain", d));
            dom.address = node::make_credential(domainSeeds.back()).address;
            dom.host    = dir.members.at(d % M);
            dom.role    = d < cfg.workload.providers ? contracts::Role::Provider : contracts::Role::Consumer;
            dom.rng     = derive_rng(cfg.seed, "workload/domain", be64(d));
            dir.hostOf[dom.address] = dom.host;
            domainAddresses.push_back(dom.address);
            domains.push_back(std::move(dom));
         }

         node::NodeHooks hooks;
         hooks.finalized = [this](NodeId id, const ledger::Block& b, const Hash& h, Millis t) {
            on_finalized(id, b, h, t);
         };
         hooks.safetyViolation = [this](NodeId id, const consensus::SafetyViolation& v, Millis t) {
            if (honest(id))
               safety.push_back({id, v.height, t,
                                 "sealed block " + v.conflicting.str() + " conflicts with finalized " + v.finalized.str()});
         };
         hooks.divergence = [this](NodeId id, const Hash& gid, const std::string& why, Millis) {
            divergence.push_back({gid, sim::node_name(id) + ": " + why});
         };
         hooks.groupReady = [this](NodeId, const privacy::PrivacyGroup& g, const contracts::PrivacyGroupRequested& req,
                                   Millis t) { on_group_ready(g, req, t); };
         hooks.transition = [this](NodeId id, const consensus::Transition& tr, Millis t) {
            consensusTrace.record(t, id, tr.height, tr.round, tr.phase, tr.trigger);
         };

         auto genesis = ledger::make_genesis(*vset, 0);
         for (NodeId id = 0; id < V + M; ++id)
         {
            node::NodeConfig nc;
            nc.id   = id;
            nc.kind = id < V ? node::NodeKind::Validator : node::NodeKind::Member;
            if (id < V)
               nc.validatorSeed = validatorSeeds[id];
            else
               nc.enclaveSeed = enclaveSeeds[id];
            nc.ibft    = cfg.ibft;
            nc.privacy = cfg.privacy;
            nc.seed    = cfg.seed;
            if (auto it = cfg.byzantine.find(id); it != cfg.byzantine.end())
               nc.byzantine = it->second;
            nodes.push_back(std::make_unique<node::Node>(nc, *vset, genesis, dir, *net, hooks));
         }
         for (std::size_t d = 0; d < domains.size(); ++d)
            nodes.at(domains[d].host)->credentials().add(domainSeeds[d]);

         if (opt.isolationScan)
            net->add_wiretap([this](const sim::Envelope& env) {
               if (wireSeen.insert(crypto::sha256(env.payload)).second)
                  wirePayloads.push_back(env.payload);
            });

         const auto& w = cfg.workload;
         planned       = w.domains + w.providers * w.publishPerProvider + w.selects +
                   w.deploys * (1 + w.breachesPerGroup) + w.batches;
      }

      // Consensus observation and the stop rule

      void on_finalized(NodeId id, const ledger::Block& block, const Hash& hash, Millis t)
      {
         if (honest(id))
         {
            auto [it, fresh] = firstFinalized.try_emplace(block.height, hash, id);
            if (!fresh && it->second.first != hash)
               safety.push_back({id, block.height, t,
                                 "finalized " + hash.str() + " but " + sim::node_name(it->second.second) +
                                     " finalized " + it->second.first.str()});
         }
         for (const auto& o : observers)
            o(id, block, hash, t);
         check_settled();
      }

      bool workload_done() const { return !cfg.workload.empty() && resolved == planned; }

      void check_settled()
      {
         if (stopped || !workload_done())
            return;
         std::optional<std::uint64_t> height;
         for (const auto& n : nodes)
         {
            if (!honest(n->id()) || net->crashed(n->id()))
               continue;
            if (!n->pool().empty() || n->deferred_count() > 0)
               return;
            auto h = n->chain().head_height();
            if (height && *height != h)
               return;
            height = h;
         }
         stopped = true;
         queue.halt();
      }

      // Workload

      void submit(NodeId host, node::RpcRequest req, Millis at, Next next)
      {
         queue.schedule_at(std::max(at, now()), [this, host, req = std::move(req), next = std::move(next)]() mutable {
            req.submittedAt = now();
            auto delay      = net->sample(sim::LinkClass::Rpc);
            queue.schedule(delay, [this, host, req = std::move(req), next = std::move(next)] {
               deliver(host, req, next);
            });
         });
      }

      void deliver(NodeId host, const node::RpcRequest& req, const Next& next)
      {
         if (net->crashed(host))
         {
            reject(req, "node " + std::to_string(host) + " is down");
            next(nullptr);
            return;
         }
         try
         {
            auto handle = nodes.at(host)->rpc_submit(req, [this, next](const node::Receipt& r) {
               on_receipt(r);
               next(&r);
               check_settled();
            });
            if (handle.payloadHash)
               on_private_accepted(host, req, *handle.payloadHash);
         }
         catch (const node::NodeError& e)
         {
            reject(req, e.what());
            next(nullptr);
         }
         catch (const privacy::PrivacyError& e)
         {
            reject(req, e.what());
            next(nullptr);
         }
      }

      void reject(const node::RpcRequest& req, const std::string& why)
      {
         ++resolved;
         rejections.push_back({now(), req.method, req.sender, why});
         trace.record(now(), "rpc-reject", req.sender.str(), "-", req.method + ": " + why);
      }

      void on_receipt(const node::Receipt& r)
      {
         ++resolved;
         auto kind = kind_from_method(r.method);
         if (!kind)
            return;
         LatencySample s;
         s.txId        = r.txId;
         s.kind        = *kind;
         s.submitMs    = r.submittedAt;
         s.finalMs     = r.finalAt;
         s.enclaveMs   = r.enclaveMs;
         s.blockHeight = r.blockHeight;
         s.groupId     = r.groupId;
         samples.push_back(s);
         if (r.error)
         {
            ++contractErrors;
            trace.record(now(), "contract-error", r.txId.str(), "-", std::string(contracts::to_string(*r.error)));
         }
         trace.record(now(), "receipt", r.txId.str(), "-",
                      std::string(to_string(*kind)) + " latency=" + std::to_string(s.latency()));
      }

      static bool ok(const node::Receipt* r) { return r && !r->error; }

      void start_workload()
      {
         for (std::size_t d = 0; d < domains.size(); ++d)
         {
            auto& dom = domains[d];
            auto  at  = draw(dom.rng);
            submit(dom.host,
                   node::RpcRequest{"register", contracts::encode(contracts::RegisterArgs{dom.role}), dom.address,
                                    std::nullopt, 0},
                   at, [this, d](const node::Receipt* r) {
                      if (ok(r) && domains[d].role == contracts::Role::Provider && cfg.workload.publishPerProvider > 0)
                         publish(d, 0);
                      else
                         public_phase_step();
                   });
         }
      }

      contracts::PublishArgs publish_args(std::size_t d, std::size_t i) const
      {
         contracts::PublishArgs a;
         a.price        = 1000 + 10 * d + i;
         a.quality      = "tier-" + std::to_string(i) + " bandwidth>=" + std::to_string(100 * (i + 1)) +
                     "Mbps latency<=" + std::to_string(20 + d % 30) + "ms";
         a.availability = true;
         return a;
      }

      void publish(std::size_t d, std::size_t i)
      {
         auto& dom  = domains[d];
         auto  args = publish_args(d, i);
         submit(dom.host, node::RpcRequest{"publish_service", contracts::encode(args), dom.address, std::nullopt, 0},
                now() + draw(dom.rng), [this, d, i, args](const node::Receipt* r) {
                   auto& dom = domains[d];
                   if (ok(r))
                      for (const auto& s : nodes.at(dom.host)->state().services())
                         if (s.provider == dom.address && s.price == args.price && s.qualityConstraint == args.quality)
                            dom.serviceIds.push_back(s.serviceId);
                   if (ok(r) && i + 1 < cfg.workload.publishPerProvider)
                      publish(d, i + 1);
                   else
                      public_phase_step();
                });
      }

      /// Selections start once every domain has registered and every provider
      /// has published.
      void public_phase_step()
      {
         if (++publicPhaseDone == domains.size())
            start_selects();
      }

      std::size_t provider_for(std::size_t k) const
      {
         const auto& w        = cfg.workload;
         auto        consumer = w.providers + k;
         auto        p        = k % w.providers;
         for (std::size_t tries = 0; tries < w.providers; ++tries)
         {
            if (domains[p].host != domains[consumer].host)
               return p;
            p = (p + 1) % w.providers;
         }
         return k % w.providers;
      }

      void start_selects()
      {
         const auto& w = cfg.workload;
         for (std::size_t k = 0; k < w.selects; ++k)
         {
            Agreement a;
            a.index    = k;
            a.consumer = w.providers + k;
            a.provider = provider_for(k);
            a.rng      = derive_rng(cfg.seed, "workload/group", be64(k));
            a.slaText  = "SLA " + domains[a.consumer].address.str() + " <- " + domains[a.provider].address.str() +
                        ": availability 99.95%, latency <= 20 ms, restoration <= 4 h, agreement " + std::to_string(k);
            agreementOf[domains[a.consumer].address] = k;
            agreements.push_back(std::move(a));
         }
         for (std::size_t k = 0; k < w.selects; ++k)
         {
            auto& a        = agreements[k];
            auto& consumer = domains[a.consumer];
            auto& provider = domains[a.provider];
            auto  at       = now() + draw(a.rng);
            if (provider.serviceIds.empty())
            {
               reject(node::RpcRequest{"select_service", {}, consumer.address, std::nullopt, at},
                      "provider published no service");
               continue;
            }
            auto serviceId = provider.serviceIds[(k / w.providers) % provider.serviceIds.size()];
            submit(consumer.host,
                   node::RpcRequest{"select_service", contracts::encode(contracts::SelectArgs{serviceId}),
                                    consumer.address, std::nullopt, 0},
                   at, [this, k](const node::Receipt* r) {
                      auto& a = agreements[k];
                      if (!ok(r) || k >= cfg.workload.deploys)
                         return;
                      a.deployAt = now() + draw(a.rng);
                      try_deploy(a);
                   });
         }
      }

      void on_group_ready(const privacy::PrivacyGroup& g, const contracts::PrivacyGroupRequested& req, Millis t)
      {
         auto it = agreementOf.find(req.consumer);
         if (it == agreementOf.end())
            return;
         auto& a = agreements[it->second];
         if (a.groupId)
            return;
         a.groupId = g.groupId;
         a.readyAt = t;
         if (opt.isolationScan)
         {
            auto key = privacy::derive_group_key(cfg.seed, g.groupId);
            secretNeedles.push_back({g.groupId, "group key", Bytes(key.view().begin(), key.view().end())});
            secretNeedles.push_back({g.groupId, "sla text", Bytes(a.slaText.begin(), a.slaText.end())});
            auto slaHash = crypto::sha256(as_bytes(a.slaText));
            secretNeedles.push_back({g.groupId, "sla hash", Bytes(slaHash.view().begin(), slaHash.view().end())});
         }
         try_deploy(a);
      }

      void try_deploy(Agreement& a)
      {
         if (a.deployIssued || !a.deployAt || !a.groupId)
            return;
         a.deployIssued = true;
         auto  at       = std::max(*a.deployAt, *a.readyAt);
         auto& consumer = domains[a.consumer];
         auto  k        = a.index;
         submit(consumer.host, node::RpcRequest{"deploy_register_breach", {}, consumer.address, a.groupId, 0}, at,
                [this, k](const node::Receipt* r) {
                   if (ok(r))
                      after_breach(k, 0);
                });
      }

      std::string details_text(const Agreement& a, std::size_t j) const
      {
         return "breach " + std::to_string(a.index) + "." + std::to_string(j) + ": measured availability " +
                std::to_string(9900 - static_cast<int>(j % 50)) + "/10000 against agreed 9995/10000";
      }

      /// Observation time of a breach. It is part of the workload, not the
      /// submission time, so private payload bytes do not depend on block timing.
      Millis observed_at(const Agreement& a, std::size_t j) const
      {
         Bytes extra = be64(a.index);
         append(extra, be64(j));
         auto rng = derive_rng(cfg.seed, "workload/observation", extra);
         return static_cast<Millis>(j + 1) * 60'000 + rng.uniform_int(0, 59'999);
      }

      contracts::BreachArgs breach_args(const Agreement& a, std::size_t j)
      {
         auto                  details = details_text(a, j);
         contracts::BreachArgs b;
         b.slaTermsHash = crypto::sha256(as_bytes(a.slaText));
         b.detailsHash  = crypto::sha256(as_bytes(details));
         b.severity     = static_cast<contracts::Severity>(j % 3);
         b.reportedAt   = observed_at(a, j);
         if (opt.isolationScan)
         {
            secretNeedles.push_back({*a.groupId, "details text", Bytes(details.begin(), details.end())});
            secretNeedles.push_back(
                {*a.groupId, "details hash", Bytes(b.detailsHash.view().begin(), b.detailsHash.view().end())});
         }
         return b;
      }

      /// Continues an agreement after its deployment (j = 0) or its j-th
      /// breach report.
      void after_breach(std::size_t k, std::size_t j)
      {
         const auto& w = cfg.workload;
         if (j < w.breachesPerGroup)
            breach(k, j);
         else if (k < w.batches)
            batch(k);
      }

      void breach(std::size_t k, std::size_t j)
      {
         auto& a        = agreements[k];
         auto& reporter = domains[j % 2 == 0 ? a.consumer : a.provider];
         auto  args     = breach_args(a, j);
         submit(reporter.host,
                node::RpcRequest{"register_breach", contracts::encode(args), reporter.address, a.groupId, 0},
                now() + draw(a.rng), [this, k, j](const node::Receipt* r) {
                   if (ok(r))
                      after_breach(k, j + 1);
                });
      }

      void batch(std::size_t k)
      {
         auto&                a        = agreements[k];
         auto&                reporter = domains[a.consumer];
         contracts::BatchArgs args;
         for (std::size_t e = 0; e < cfg.workload.batchSize; ++e)
            args.entries.push_back(breach_args(a, cfg.workload.breachesPerGroup + e));
         submit(reporter.host,
                node::RpcRequest{"commit_breach_batch", contracts::encode(args), reporter.address, a.groupId, 0},
                now() + draw(a.rng), [](const node::Receipt*) {});
      }

      void on_private_accepted(NodeId host, const node::RpcRequest& req, const Hash& payloadHash)
      {
         if (!opt.isolationScan)
            return;
         privateSubmissions.push_back({*req.groupId, host, payloadHash});
         auto plain = privacy::encode(privacy::PrivateCall{req.sender, req.method, req.params});
         secretNeedles.push_back({*req.groupId, "plaintext " + req.method, std::move(plain)});
      }

      // Run-end checks

      const node::Node& reference_node() const
      {
         const node::Node* best = nullptr;
         for (const auto& n : nodes)
         {
            if (!honest(n->id()) || net->crashed(n->id()))
               continue;
            if (!best || n->chain().head_height() > best->chain().head_height())
               best = n.get();
         }
         return best ? *best : *nodes.front();
      }

      void check_private_states()
      {
         std::map<Hash, std::vector<const node::Node*>> holders;
         for (const auto& n : nodes)
            for (const auto& g : n->private_groups())
               holders[g].push_back(n.get());
         for (const auto& [gid, list] : holders)
         {
            for (std::size_t i = 0; i < list.size(); ++i)
               for (std::size_t j = i + 1; j < list.size(); ++j)
               {
                  const auto* a = list[i];
                  const auto* b = list[j];
                  if (a->deferred_count() > 0 || b->deferred_count() > 0 ||
                      a->chain().head_height() != b->chain().head_height())
                     continue;
                  if (a->read_private_state(gid).encode() != b->read_private_state(gid).encode())
                     divergence.push_back({gid, "private state differs between " + sim::node_name(a->id()) +
                                                    " and " + sim::node_name(b->id())});
               }
         }
      }

      IsolationReport scan_isolation() const
      {
         IsolationReport report;
         std::vector<Needle> storeNeedles = secretNeedles;
         for (const auto& s : privateSubmissions)
            if (const auto* enc = nodes.at(s.host)->enclave())
               if (const auto* p = enc->find(s.payloadHash))
                  storeNeedles.push_back({s.groupId, "ciphertext", p->ciphertext});
         report.needles = storeNeedles.size();

         auto record = [&](const NeedleIndex& index, ByteView hay, const std::string& where) {
            report.bytesScanned += hay.size();
            for (auto i : index.find_all(hay))
               report.hits.push_back({index.at(i).groupId, index.at(i).label, where});
         };

         NeedleIndex wire;
         for (const auto& n : secretNeedles)
            wire.add(n);
         for (const auto& p : wirePayloads)
         {
            ++report.messagesScanned;
            record(wire, p, "network message");
         }

         for (const auto& n : nodes)
         {
            NeedleIndex index;
            const auto* enc = n->enclave();
            for (const auto& needle : storeNeedles)
               if (!enc || !enc->is_member(needle.groupId))
                  index.add(needle);
            if (index.size() == 0)
               continue;
            for (const auto& b : n->stored_bytes())
            {
               ++report.storesScanned;
               record(index, b, sim::node_name(n->id()) + " store");
            }
         }
         return report;
      }

      RunResult finish(Millis end)
      {
         RunResult r;
         r.endTime          = end;
         r.plannedRequests  = planned;
         r.workloadComplete = resolved == planned;

         const auto& ref = reference_node();
         for (auto& s : samples)
            if (!s.blockHeight)
               if (auto loc = ref.chain().find_tx(s.txId))
                  s.blockHeight = loc->height;
         sort_samples(samples);

         r.report      = summarize(samples);
         auto& rep     = r.report;
         auto  height  = ref.chain().head_height();
         rep.blocks    = height;
         if (height > 0)
            rep.meanBlockInterval =
                static_cast<double>(ref.chain().at(height).timestamp - ref.chain().at(0).timestamp) /
                static_cast<double>(height);
         rep.network        = net->counters();
         rep.rpcRejected    = rejections.size();
         rep.contractErrors = contractErrors;
         for (const auto& n : nodes)
         {
            const auto& c = n->counters();
            rep.txDropped += c.txDropped;
            rep.authFailures += c.authFailures;
            rep.refetches += c.refetches;
            rep.groupsHalted += c.groupsHalted;
            if (n->kind() == node::NodeKind::Validator)
               rep.roundChanges = std::max(rep.roundChanges, n->participant().counters().roundChanges);
         }

         check_private_states();
         if (opt.isolationScan)
            r.isolation = scan_isolation();

         if (opt.trace)
         {
            std::ostringstream t, c;
            trace.write(t);
            consensusTrace.write(c);
            r.trace          = t.str();
            r.consensusTrace = c.str();
         }
         r.samples    = samples;
         r.rejections = rejections;
         r.safety     = safety;
         r.divergence = divergence;
         return r;
      }
   };

   Simulation::Simulation(ScenarioConfig config, RunOptions options)
       : impl_(std::make_unique<Impl>(std::move(config), options))
   {
   }

   Simulation::~Simulation() = default;

   RunResult Simulation::run()
   {
      for (auto& n : impl_->nodes)
         n->start();
      impl_->start_workload();
      auto end = impl_->queue.run_until(impl_->cfg.runDurationMs);
      return impl_->finish(end);
   }

   const ScenarioConfig&          Simulation::config() const { return impl_->cfg; }
   sim::Network&                  Simulation::network() { return *impl_->net; }
   sim::EventQueue&               Simulation::queue() { return impl_->queue; }
   node::Node&                    Simulation::node(NodeId id) { return *impl_->nodes.at(id); }
   std::size_t                    Simulation::node_count() const { return impl_->nodes.size(); }
   const node::Directory&         Simulation::directory() const { return impl_->dir; }
   const consensus::ValidatorSet& Simulation::validator_set() const { return *impl_->vset; }
   const std::vector<Address>&    Simulation::domains() const { return impl_->domainAddresses; }
   bool                           Simulation::honest(NodeId id) const { return impl_->honest(id); }

   void Simulation::observe_finalized(FinalizedObserver observer) { impl_->observers.push_back(std::move(observer)); }

   RunResult run_scenario(const ScenarioConfig& config, const RunOptions& options)
   {
      Simulation sim(config, options);
      return sim.run();
   }

   Hash enclave_multiset_digest(const std::vector<LatencySample>& samples)
   {
      auto values = enclave_components(samples);
      std::sort(values.begin(), values.end());
      Encoder e;
      e.u64(values.size());
      for (auto v : values)
         e.i64(v);
      return crypto::sha256(e.data());
   }

   bool SweepReport::violated() const
   {
      return std::any_of(points.begin(), points.end(), [](const SweepPoint& p) { return p.result.violated(); });
   }

   std::string SweepReport::text() const
   {
      std::ostringstream o;
      o << "parameter = " << parameter << "\n";
      for (const auto& p : points)
      {
         const auto& r = p.result.report;
         o << "\n[point." << p.value << "]\n"
           << "value = " << p.value << "\n"
           << "blocks = " << r.blocks << "\n"
           << "mean_block_interval_ms = " << format_ms(r.meanBlockInterval) << "\n"
           << "public_count = " << r.publicAll.count << "\n"
           << "public_mean_ms = " << format_ms(r.publicAll.mean) << "\n";
         for (auto k : all_kinds)
            o << to_string(k) << "_mean_ms = " << format_ms(r.perKind.at(k).mean) << "\n";
         auto enclave = enclave_components(p.result.samples);
         auto ek      = compute_stats(enclave);
         o << "enclave_count = " << ek.count << "\n"
           << "enclave_mean_ms = " << format_ms(ek.mean) << "\n"
           << "enclave_min_ms = " << ek.min << "\n"
           << "enclave_max_ms = " << ek.max << "\n"
           << "enclave_digest = " << p.enclaveDigest.str() << "\n"
           << "violated = " << (p.result.violated() ? "true" : "false") << "\n";
      }
      return o.str();
   }

   SweepReport sweep(const ScenarioConfig& config, std::string_view parameter, const std::vector<Millis>& values,
                     const RunOptions& options)
   {
      if (parameter != "block-interval")
         throw ValidationError("unsupported sweep parameter '" + std::string(parameter) + "'");
      if (values.empty())
         throw ValidationError("sweep needs at least one value");

      std::vector<ScenarioConfig> configs;
      for (auto v : values)
      {
         auto c              = config;
         c.ibft.blockInterval = v;
         validate(c);
         configs.push_back(std::move(c));
      }

      std::vector<std::future<RunResult>> runs;
      for (const auto& c : configs)
         runs.push_back(std::async(std::launch::async, [c, options] { return run_scenario(c, options); }));

      SweepReport report;
      report.parameter = std::string(parameter);
      for (std::size_t i = 0; i < values.size(); ++i)
      {
         SweepPoint p;
         p.value         = values[i];
         p.result        = runs[i].get();
         p.enclaveDigest = enclave_multiset_digest(p.result.samples);
         report.points.push_back(std::move(p));
      }
      return report;
   }
}  // namespace hybridchain::harness
