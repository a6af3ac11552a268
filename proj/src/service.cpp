#include "epigraph/service.hpp"

#include "epigraph/queries.hpp"
#include "httplib.h"

namespace epigraph {

namespace {

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path.substr(0, path.find('?'))) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

ServiceResponse error(int status, const std::string& msg) { return {status, Json{{"error", msg}}}; }

}  // namespace

Service::Service(EpistemicGraph g, Json defaults) : g_(std::move(g)), defaults_(std::move(defaults)) {
  engine_ = std::make_shared<DialogueEngine>(g_, query_regime(defaults_, g_));
}

Json Service::merged(Json body) const {
  for (const auto& [k, v] : defaults_.items())
    if (!body.contains(k)) body[k] = v;
  return body;
}

std::shared_ptr<Service::Slot> Service::find(const std::string& id) {
  std::lock_guard lock(sessions_mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ServiceResponse Service::new_session(const Json& body) {
  Belief goal{0, Comparator::Gt, Rational(1, 2)};
  if (body.contains("goal")) goal = parse_belief(body["goal"], g_);
  auto slot = std::make_shared<Slot>();
  slot->session = std::make_unique<DialogueSession>(engine_, goal);
  if (body.contains("asserted"))
    for (const auto& b : body["asserted"]) slot->session->assert_belief(parse_belief(b, g_));
  std::string id;
  {
    std::lock_guard lock(sessions_mu_);
    id = "s" + std::to_string(next_id_++);
    sessions_[id] = slot;
  }
  std::lock_guard lock(slot->mu);
  Json j = {{"id", id}};
  j["state"] = session_state_json(slot->session->state(), goal, g_.names);
  return {201, j};
}

ServiceResponse Service::session_call(const std::string& id, const std::string& method, const std::string& rest,
                                      const Json& body) {
  auto slot = find(id);
  if (!slot) return error(404, "no session " + id);
  std::lock_guard lock(slot->mu);
  DialogueSession& s = *slot->session;
  auto state = [&] { return session_state_json(s.state(), s.goal(), g_.names); };
  if (method == "GET" && rest == "state") return {200, state()};
  if (method == "GET" && rest == "moves") {
    SessionState st = s.state();
    if (!st.consistent) {
      Json j = error(422, "session is inconsistent").body;
      j["state"] = session_state_json(st, s.goal(), g_.names);
      return {422, j};
    }
    return {200, Json{{"goal", belief_json(s.goal(), g_.names)}, {"moves", moves_json(s.suggest_moves(), g_.names)}}};
  }
  if (method == "POST" && rest == "assert") {
    s.assert_belief(parse_belief(body, g_));
    return {200, state()};
  }
  if (method == "POST" && rest == "play") {
    if (!body.contains("arg") || !body["arg"].is_string()) return error(400, "play needs \"arg\"");
    s.play(g_.require(body["arg"].get<std::string>()));
    return {200, state()};
  }
  if (method == "DELETE" && rest.rfind("assert/", 0) == 0) {
    int a = g_.require(rest.substr(7));
    if (!s.retract(a)) return error(404, "nothing asserted on " + g_.names[a]);
    return {200, state()};
  }
  return error(404, "unknown session route " + method + " " + rest);
}

ServiceResponse Service::handle(const std::string& method, const std::string& path, const std::string& raw) {
  try {
    Json body = Json::object();
    if (!raw.empty()) {
      try {
        body = Json::parse(raw);
      } catch (const nlohmann::json::exception& e) {
        return error(400, std::string("malformed JSON: ") + e.what());
      }
      if (!body.is_object()) return error(400, "request body must be a JSON object");
    }
    auto parts = split_path(path);
    if (method == "GET" && parts == std::vector<std::string>{"graph"}) return {200, graph_json(g_)};
    if (parts.size() == 2 && parts[0] == "query") {
      if (method != "POST") return error(405, "queries are POST");
      if (!known_query(parts[1]) || parts[1] == "dialogue") return error(404, "unknown query " + parts[1]);
      return {200, run_query(parts[1], merged(body), g_)};
    }
    if (!parts.empty() && parts[0] == "session") {
      if (parts.size() == 1) {
        if (method != "POST") return error(405, "use POST /session");
        return new_session(body);
      }
      std::string rest;
      for (std::size_t i = 2; i < parts.size(); ++i) rest += (i > 2 ? "/" : "") + parts[i];
      return session_call(parts[1], method, rest, body);
    }
    return error(404, "no route for " + method + " " + path);
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const nlohmann::json::exception& e) {
    return error(400, e.what());
  } catch (const LimitError& e) {
    return error(422, e.what());
  } catch (const PreconditionError& e) {
    return error(422, e.what());
  } catch (const Error& e) {
    return error(400, e.what());
  }
}

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
      ServiceResponse r = service.handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body.dump(), "application/json; charset=utf-8");
    };
    server.Get(".*", route);
    server.Post(".*", route);
    server.Delete(".*", route);
  }
};

HttpServer::HttpServer(Service& s) : impl_(std::make_unique<Impl>(s)) {}
HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }
void HttpServer::stop() { impl_->server.stop(); }

}  // namespace epigraph
