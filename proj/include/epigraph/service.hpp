#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "epigraph/dialogue.hpp"
#include "epigraph/json_io.hpp"

namespace epigraph {

struct ServiceResponse {
  int status = 200;
  Json body;
};

// Request routing over one immutable graph. Each session has its own lock,
// so requests on different sessions run in parallel.
class Service {
 public:
  // defaults: query fields ("pi", "cap") applied when a request omits them
  Service(EpistemicGraph g, Json defaults = Json::object());

  ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);
  const EpistemicGraph& graph() const { return g_; }

 private:
  struct Slot {
    std::mutex mu;
    std::unique_ptr<DialogueSession> session;
  };
  std::shared_ptr<Slot> find(const std::string& id);
  ServiceResponse new_session(const Json& body);
  ServiceResponse session_call(const std::string& id, const std::string& method, const std::string& rest, const Json& body);
  Json merged(Json body) const;

  const EpistemicGraph g_;
  const Json defaults_;
  std::shared_ptr<const DialogueEngine> engine_;
  std::mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t next_id_ = 1;
};

// HTTP front end for a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& s);
  ~HttpServer();
  // port 0 picks a free port; returns the bound port or -1.
  int bind(const std::string& host, int port);
  void run();  // blocks until stop()
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace epigraph
