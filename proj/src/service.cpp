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

#include "seqproof/service.hpp"

#include <vector>

#include "httplib.h"
#include "seqproof/error.hpp"
#include "seqproof/snapshot.hpp"

namespace seqproof {

using nlohmann::json;

namespace {

Response error(int status, const std::string& message) {
  return {status, {{"error", message}}};
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    const std::size_t slash = path.find('/');
    parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash);
  }
  return parts;
}

}  // namespace

SessionRegistry::SessionRegistry(AxiomStore store, MachineConfig cfg)
    : store_(std::move(store)), cfg_(cfg) {}

std::size_t SessionRegistry::size() const {
  std::lock_guard lock(registry_mutex_);
  return sessions_.size();
}

std::shared_ptr<SessionRegistry::Session> SessionRegistry::find(const std::string& id) const {
  std::lock_guard lock(registry_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

json SessionRegistry::session_body(const std::string& id, const ProofState& state) const {
  json body = to_json(state);
  body["id"] = id;
  return body;
}

Response SessionRegistry::create(const json& request) {
  if (!request.is_object()) return error(400, "request body must be a JSON object");
  ProofState state;
  try {
    if (request.contains("snapshot")) {
      std::shared_lock store_lock(store_mutex_);
      state = state_from_json(request["snapshot"], store_, cfg_);
    } else if (request.contains("premises") && request["premises"].is_string()) {
      state = new_session(parse_program(request["premises"].get<std::string>(), cfg_), cfg_);
    } else {
      return error(400, "expected \"premises\" (program text) or \"snapshot\"");
    }
  } catch (const Error& e) {
    return error(422, e.what());
  }
  auto session = std::make_shared<Session>();
  session->state = std::move(state);
  session->created = std::chrono::system_clock::now();
  std::string id;
  {
    std::lock_guard lock(registry_mutex_);
    id = "s" + std::to_string(next_id_++);
    sessions_.emplace(id, session);
  }
  std::lock_guard lock(session->mutex);
  return {201, session_body(id, session->state)};
}

Response SessionRegistry::get(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "no session " + id);
  std::lock_guard lock(session->mutex);
  return {200, session_body(id, session->state)};
}

Response SessionRegistry::options(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "no session " + id);
  std::lock_guard lock(session->mutex);
  std::shared_lock store_lock(store_mutex_);
  json list = json::array();
  for (const DerivationOption& o : enumerate_options(session->state, store_)) {
    list.push_back(to_json(o));
  }
  return {200, {{"id", id}, {"basis", basis_text(session->state.fingerprint())}, {"options", list}}};
}

Response SessionRegistry::apply(const std::string& id, const json& request) {
  auto session = find(id);
  if (!session) return error(404, "no session " + id);
  if (!request.is_object() || !request.contains("option") ||
      !request["option"].is_number_unsigned()) {
    return error(400, "expected {\"option\": index}");
  }
  const auto index = request["option"].get<std::size_t>();
  std::lock_guard lock(session->mutex);
  const std::string current = basis_text(session->state.fingerprint());
  if (request.contains("basis") && request["basis"] != current) {
    return error(409, "stale option: the session changed since the options were listed");
  }
  std::shared_lock store_lock(store_mutex_);
  const std::vector<DerivationOption> opts = enumerate_options(session->state, store_);
  if (index >= opts.size()) {
    return error(422, "no option " + std::to_string(index) + "; " + std::to_string(opts.size()) +
                          " available");
  }
  try {
    session->state = apply_option(session->state, store_, opts[index]);
  } catch (const ProofError& e) {
    return error(409, e.what());
  } catch (const Error& e) {
    return error(422, e.what());
  }
  return {200, session_body(id, session->state)};
}

Response SessionRegistry::undo(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "no session " + id);
  std::lock_guard lock(session->mutex);
  if (session->state.derived_count() == 0) return error(409, "nothing to undo");
  session->state = seqproof::undo(session->state);
  return {200, session_body(id, session->state)};
}

Response SessionRegistry::extract(const std::string& id, const json& request) {
  auto session = find(id);
  if (!session) return error(404, "no session " + id);
  bool append = false;
  if (request.is_object() && request.contains("append")) {
    if (!request["append"].is_boolean()) return error(400, "\"append\" must be a boolean");
    append = request["append"].get<bool>();
  }
  std::lock_guard lock(session->mutex);
  if (session->state.derived_count() == 0) return error(409, "the proof has no derived lines");
  ExtractionResult result = extract_theorem(session->state);
  json body = to_json(result);
  body["id"] = id;
  if (append) {
    std::unique_lock store_lock(store_mutex_);
    try {
      body["label"] = store_.add_theorem(result.premise, ProgramList({result.conclusion}));
    } catch (const Error& e) {
      return error(422, e.what());
    }
  }
  return {200, body};
}

Response SessionRegistry::axioms() {
  std::shared_lock store_lock(store_mutex_);
  json entries = json::array();
  for (const StoreEntry& e : store_.entries()) entries.push_back(to_json(e));
  return {200, {{"integer_programs", store_.integer_programs()}, {"entries", entries}}};
}

Response SessionRegistry::health() { return {200, {{"status", "ok"}}}; }

Response SessionRegistry::dispatch(std::string_view method, std::string_view path,
                                   std::string_view body) {
  json request = json::object();
  if (method == "POST" && !body.empty()) {
    request = json::parse(body, nullptr, false);
    if (request.is_discarded()) return error(400, "request body is not JSON");
  }
  const auto parts = split_path(path);
  if (method == "GET" && parts.size() == 1 && parts[0] == "health") return health();
  if (method == "GET" && parts.size() == 1 && parts[0] == "axioms") return axioms();
  if (parts.empty() || parts[0] != "sessions") return error(404, "no route " + std::string(path));
  if (parts.size() == 1 && method == "POST") return create(request);
  if (parts.size() < 2) return error(404, "no route " + std::string(path));
  const std::string id(parts[1]);
  if (parts.size() == 2 && method == "GET") return get(id);
  if (parts.size() == 3) {
    if (method == "GET" && parts[2] == "options") return options(id);
    if (method == "POST" && parts[2] == "apply") return apply(id, request);
    if (method == "POST" && parts[2] == "undo") return undo(id);
    if (method == "POST" && parts[2] == "extract") return extract(id, request);
  }
  return error(404, "no route " + std::string(method) + " " + std::string(path));
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(SessionRegistry& registry) : impl_(std::make_unique<Impl>()) {
  auto handler = [&registry](const httplib::Request& req, httplib::Response& res) {
    Response r = registry.dispatch(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace seqproof
