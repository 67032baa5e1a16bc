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

// Local JSON service over proof sessions.
//
//   POST /sessions                 {"premises": "[...]"} or {"snapshot": {...}}
//   GET  /sessions/{id}
//   GET  /sessions/{id}/options
//   POST /sessions/{id}/apply      {"option": k, "basis": "0x..."}
//   POST /sessions/{id}/undo
//   POST /sessions/{id}/extract    {"append": false}
//   GET  /axioms
//   GET  /health
//
// Status codes: 400 malformed request, 404 unknown session or route, 409 the
// session is not in a state that allows the request, 422 well-formed input
// that does not parse or validate.

#ifndef SEQPROOF_SERVICE_HPP_
#define SEQPROOF_SERVICE_HPP_

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "json.hpp"
#include "seqproof/axiom_store.hpp"
#include "seqproof/proof.hpp"

namespace seqproof {

struct Response {
  int status = 200;
  nlohmann::json body;
};

class SessionRegistry {
 public:
  explicit SessionRegistry(AxiomStore store, MachineConfig cfg = {});

  Response create(const nlohmann::json& request);
  Response get(const std::string& id);
  Response options(const std::string& id);
  Response apply(const std::string& id, const nlohmann::json& request);
  Response undo(const std::string& id);
  Response extract(const std::string& id, const nlohmann::json& request);
  Response axioms();
  Response health();

  // Routes a request by method and path. Bodies that are not JSON get 400.
  Response dispatch(std::string_view method, std::string_view path, std::string_view body);

  std::size_t size() const;

 private:
  struct Session {
    std::mutex mutex;
    ProofState state;
    std::chrono::system_clock::time_point created;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  nlohmann::json session_body(const std::string& id, const ProofState& state) const;

  mutable std::mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;

  mutable std::shared_mutex store_mutex_;
  AxiomStore store_;
  MachineConfig cfg_;
};

// HTTP front end for a registry.
class HttpServer {
 public:
  explicit HttpServer(SessionRegistry& registry);
  ~HttpServer();

  // Port 0 picks a free port. Returns the bound port, or -1 when the address
  // cannot be bound.
  int bind(const std::string& host, int port);
  // Serves until stop() is called from another thread.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace seqproof

#endif  // SEQPROOF_SERVICE_HPP_
