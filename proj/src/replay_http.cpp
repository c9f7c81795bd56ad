/* Copyright 2026 The qrep Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// HTTP plumbing around the replay core: the replay service, the recording
// proxy and the simulated vendor backend all share the small server shell
// defined here.

#include <atomic>
#include <thread>
#include <unordered_map>

#include "httplib.h"
#include "json.hpp"
#include "qrep/error.hpp"
#include "qrep/replay.hpp"
#include "qrep/sha256.hpp"

namespace qrep {

namespace {

using nlohmann::json;

// The wire target (path + query) if present, else the parsed path.
std::string request_target(const httplib::Request& req) {
  return req.target.empty() ? req.path : req.target;
}

BackendRequest to_backend_request(const httplib::Request& req) {
  BackendRequest out;
  out.method = req.method;
  out.path = request_target(req);
  for (const auto& [name, value] : req.headers) out.headers.push_back({name, value});
  out.body = req.body;
  out.content_type = req.get_header_value("Content-Type");
  return out;
}

void set_response(httplib::Response& res, int status, const std::string& body,
                  const std::string& content_type) {
  res.status = status;
  res.set_content(body, content_type.empty() ? "application/octet-stream"
                                             : content_type.c_str());
}

// Owns an httplib server running on a background thread. Route setup happens
// in the subclass constructor before start().
class ServerShell {
 public:
  explicit ServerShell(std::string host) : host_(std::move(host)) {}

  ~ServerShell() { stop_server(); }

  int start_server(int port) {
    if (port == 0) {
      port_ = server_.bind_to_any_port(host_);
      if (port_ < 0) throw Error(ErrorCode::BindFailure, "no free port on " + host_);
    } else {
      if (!server_.bind_to_port(host_, port))
        throw Error(ErrorCode::BindFailure,
                    host_ + ":" + std::to_string(port) + " not bindable");
      port_ = port;
    }
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    running_ = true;
    return port_;
  }

  void stop_server() {
    if (running_.exchange(false)) {
      server_.stop();
      if (thread_.joinable()) thread_.join();
    }
  }

  std::string server_url() const {
    return "http://" + host_ + ":" + std::to_string(port_);
  }

  httplib::Server& server() { return server_; }

 private:
  std::string host_;
  httplib::Server server_;
  std::thread thread_;
  std::atomic<bool> running_{false};
  int port_ = -1;
};

// Registers one handler for every method httplib can route.
void route_all_methods(httplib::Server& server, httplib::Server::Handler handler) {
  const std::string any = ".*";
  server.Get(any, handler);
  server.Post(any, handler);
  server.Put(any, handler);
  server.Patch(any, handler);
  server.Delete(any, handler);
  server.Options(any, handler);
}

}  // namespace

bool backend_reachable(const std::string& base_url) {
  httplib::Client client(base_url);
  client.set_connection_timeout(3, 0);
  client.set_read_timeout(5, 0);
  auto result = client.Get("/");
  return static_cast<bool>(result);
}

/* ------------------------------- ReplayServer ------------------------------ */

struct ReplayServer::Impl : ServerShell {
  Impl(const InteractionTranscript& transcript, std::string host)
      : ServerShell(std::move(host)), session(transcript) {
    route_all_methods(server(), [this](const httplib::Request& req,
                                       httplib::Response& res) {
      try {
        const BackendResponse stored = session.lookup(to_backend_request(req));
        set_response(res, stored.status, stored.body, stored.content_type);
      } catch (const Error& e) {
        // Unknown digest or exhausted recordings: the reproduction has
        // diverged from the recorded experiment. Be loud about it.
        set_response(res, 410,
                     json{{"error", "replay miss"}, {"detail", e.what()}}.dump(),
                     "application/json");
      }
    });
  }

  ReplaySession session;
};

ReplayServer::ReplayServer(const InteractionTranscript& transcript, std::string host)
    : impl_(std::make_unique<Impl>(transcript, std::move(host))) {}

ReplayServer::~ReplayServer() = default;

int ReplayServer::start(int port) { return impl_->start_server(port); }
void ReplayServer::stop() { impl_->stop_server(); }
std::string ReplayServer::url() const { return impl_->server_url(); }

/* ------------------------------ RecordingProxy ----------------------------- */

struct RecordingProxy::Impl : ServerShell {
  Impl(InteractionTranscript& transcript, std::string upstream_url,
       std::vector<std::string> credential_values, std::string host)
      : ServerShell(std::move(host)),
        transcript(transcript),
        upstream(std::move(upstream_url)),
        credentials(std::move(credential_values)) {
    upstream.set_read_timeout(60, 0);
    route_all_methods(server(), [this](const httplib::Request& req,
                                       httplib::Response& res) {
      handle(req, res);
    });
  }

  void handle(const httplib::Request& req, httplib::Response& res) {
    // One exchange at a time: appends stay totally ordered and the upstream
    // client is never shared across threads.
    std::lock_guard<std::mutex> lock(mutex);

    const std::string target = request_target(req);
    const std::string content_type = req.get_header_value("Content-Type");
    httplib::Result result;
    if (req.method == "GET")
      result = upstream.Get(target);
    else if (req.method == "POST")
      result = upstream.Post(target, req.body, content_type);
    else if (req.method == "PUT")
      result = upstream.Put(target, req.body, content_type);
    else if (req.method == "PATCH")
      result = upstream.Patch(target, req.body, content_type);
    else if (req.method == "DELETE")
      result = upstream.Delete(target);
    else {
      set_response(res, 501, "method not supported by recorder", "text/plain");
      return;
    }

    if (!result) {
      set_response(res, 502, "upstream backend unreachable", "text/plain");
      return;
    }

    BackendResponse response{result->status, result->body,
                             result->get_header_value("Content-Type")};
    transcript.record(to_backend_request(req), response, credentials);
    set_response(res, response.status, response.body, response.content_type);
  }

  InteractionTranscript& transcript;
  httplib::Client upstream;
  std::vector<std::string> credentials;
  std::mutex mutex;
};

RecordingProxy::RecordingProxy(InteractionTranscript& transcript,
                               std::string upstream_url,
                               std::vector<std::string> credential_values,
                               std::string host)
    : impl_(std::make_unique<Impl>(transcript, std::move(upstream_url),
                                   std::move(credential_values), std::move(host))) {}

RecordingProxy::~RecordingProxy() = default;

int RecordingProxy::start(int port) { return impl_->start_server(port); }
void RecordingProxy::stop() { impl_->stop_server(); }
std::string RecordingProxy::url() const { return impl_->server_url(); }

/* -------------------------- SimulatedBackendServer ------------------------- */

struct SimulatedBackendServer::Impl : ServerShell {
  Impl(std::uint64_t seed, std::string host)
      : ServerShell(std::move(host)), seed(seed) {
    server().Get("/", [](const httplib::Request&, httplib::Response& res) {
      set_response(res, 200,
                   json{{"backend", "simulated"}, {"status", "ready"}}.dump(),
                   "application/json");
    });

    server().Post("/jobs", [this](const httplib::Request& req,
                                  httplib::Response& res) {
      json body = json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.is_object()) {
        set_response(res, 400, json{{"error", "body must be a JSON object"}}.dump(),
                     "application/json");
        return;
      }
      if (!body.contains("token") || !body["token"].is_string() ||
          body["token"].get<std::string>().empty()) {
        set_response(res, 401, json{{"error", "missing token"}}.dump(),
                     "application/json");
        return;
      }
      json job = body;
      job.erase("token");  // credentials never influence results
      const std::string job_id = "job-" + sha256_hex(job.dump()).substr(0, 12);
      {
        std::lock_guard<std::mutex> lock(mutex);
        jobs[job_id] = job.dump();
      }
      // Vendor-style echo of the submission, token included; the recorder
      // must scrub it from the stored transcript.
      set_response(
          res, 200,
          json{{"id", job_id}, {"status", "queued"}, {"received", body}}.dump(),
          "application/json");
    });

    server().Get(R"(/jobs/([A-Za-z0-9-]+)/result)",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   std::string job;
                   {
                     std::lock_guard<std::mutex> lock(mutex);
                     auto it = jobs.find(req.matches[1]);
                     if (it != jobs.end()) job = it->second;
                   }
                   if (job.empty()) {
                     set_response(res, 404,
                                  json{{"error", "unknown job"}}.dump(),
                                  "application/json");
                     return;
                   }
                   set_response(res, 200, simulate_backend(job, seed),
                                "application/json");
                 });
  }

  std::uint64_t seed;
  std::unordered_map<std::string, std::string> jobs;
  std::mutex mutex;
};

SimulatedBackendServer::SimulatedBackendServer(std::uint64_t seed, std::string host)
    : impl_(std::make_unique<Impl>(seed, std::move(host))) {}

SimulatedBackendServer::~SimulatedBackendServer() = default;

int SimulatedBackendServer::start(int port) { return impl_->start_server(port); }
void SimulatedBackendServer::stop() { impl_->stop_server(); }
std::string SimulatedBackendServer::url() const { return impl_->server_url(); }

}  // namespace qrep
