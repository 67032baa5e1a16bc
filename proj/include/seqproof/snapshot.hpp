/* Copyright 2026 The seqproof Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// JSON form of a proof session. The same document is the service's session
// body and the on-disk snapshot.
//
//   {"premises": "[...]", "premise_count": 2, "basis": "0x...",
//    "lines": [{"label": 1, "statement": "...", "connection": null,
//               "annotation": "c=(a+b)"}, ...]}

#ifndef SEQPROOF_SNAPSHOT_HPP_
#define SEQPROOF_SNAPSHOT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "seqproof/axiom_store.hpp"
#include "seqproof/proof.hpp"

namespace seqproof {

nlohmann::json to_json(const ProofState& state);
nlohmann::json to_json(const DerivationOption& option);
nlohmann::json to_json(const ExtractionResult& result);
nlohmann::json to_json(const ReplayReport& report);
nlohmann::json to_json(const StoreEntry& entry);

std::string basis_text(std::uint64_t basis);

// Rebuilds a session by replaying the snapshot's lines against `store`.
// Throws ProofError (replay failure) or SyntaxError / ValidationError
// (malformed document).
ProofState state_from_json(const nlohmann::json& doc, const AxiomStore& store,
                           const MachineConfig& cfg = {});

void save_snapshot(const std::filesystem::path& path, const ProofState& state);
ProofState load_snapshot(const std::filesystem::path& path, const AxiomStore& store,
                         const MachineConfig& cfg = {});

}  // namespace seqproof

#endif  // SEQPROOF_SNAPSHOT_HPP_
