#include "service.hpp"

#include "render.hpp"

#include <httplib.h>

#include <functional>
#include <random>

namespace brauer::service {

using render::Json;

std::shared_ptr<Session> SessionStore::create() {
  static thread_local std::mt19937_64 rng(std::random_device{}());
  std::unique_lock guard(lock_);
  char tag[17];
  std::snprintf(tag, sizeof tag, "%016llx", static_cast<unsigned long long>(rng()));
  auto s = std::make_shared<Session>();
  s->id = "s" + std::to_string(++counter_) + "-" + std::string(tag, 8);
  sessions_[s->id] = s;
  return s;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::shared_lock guard(lock_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() const {
  std::shared_lock guard(lock_);
  return sessions_.size();
}

namespace {

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", "application/json");
}

void fail(httplib::Response& res, int status, const std::string& kind, const std::string& msg,
          const std::string& where = "") {
  reply(res, status, render::error(kind, msg, where));
}

// Runs f with the session, translating module errors into structured payloads.
void with_session(SessionStore& store, const httplib::Request& req, httplib::Response& res,
                  const std::function<void(Session&)>& f) {
  auto s = store.find(req.matches[1]);
  if (!s) return fail(res, 404, "not_found", "no session '" + std::string(req.matches[1]) + "'");
  try {
    f(*s);
  } catch (const GraphError& e) {
    fail(res, 422, "graph", e.message(), e.where());
  } catch (const MutationError& e) {
    fail(res, 422, "mutation", e.what());
  } catch (const ClassifyError& e) {
    fail(res, 422, "classify", e.what());
  } catch (const std::exception& e) {
    fail(res, 500, "internal", e.what());
  }
}

// Cached read of a rendered view of the current graph.
void read_view(SessionStore& store, const httplib::Request& req, httplib::Response& res, const std::string& key,
               const std::function<Json(const BrauerGraph&)>& view) {
  with_session(store, req, res, [&](Session& s) {
    std::shared_lock guard(s.lock);
    if (!s.graph) return fail(res, 409, "no_graph", "session has no graph loaded");
    {
      std::lock_guard c(s.cache_lock);
      if (auto it = s.cache.find(key); it != s.cache.end()) {
        res.status = 200;
        res.set_content(it->second, "application/json");
        return;
      }
    }
    std::string body = view(*s.graph).dump(2) + "\n";
    {
      std::lock_guard c(s.cache_lock);
      s.cache[key] = body;
    }
    res.status = 200;
    res.set_content(body, "application/json");
  });
}

void invalidate(Session& s) {
  std::lock_guard c(s.cache_lock);
  s.cache.clear();
}

std::optional<Json> parse_body(const httplib::Request& req, httplib::Response& res) {
  try {
    auto j = Json::parse(req.body);
    if (!j.is_object()) {
      fail(res, 400, "malformed_body", "request body must be a JSON object");
      return std::nullopt;
    }
    return j;
  } catch (const Json::parse_error& e) {
    fail(res, 400, "malformed_body", e.what(), "byte " + std::to_string(e.byte));
    return std::nullopt;
  }
}

} // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
  server.Post("/session", [&](const httplib::Request&, httplib::Response& res) {
    auto s = store.create();
    reply(res, 201, {{"sessionId", s->id}});
  });

  server.Post(R"(/session/([^/]+)/graph)", [&](const httplib::Request& req, httplib::Response& res) {
    auto s = store.find(req.matches[1]);
    if (!s) return fail(res, 404, "not_found", "no session '" + std::string(req.matches[1]) + "'");
    BrauerGraph g;
    try {
      g = parse_graph(req.body);
    } catch (const GraphError& e) {
      return fail(res, 400, "invalid_graph", e.message(), e.where());
    }
    std::unique_lock guard(s->lock);
    s->graph = g;
    s->history.clear();
    invalidate(*s);
    reply(res, 200,
          {{"sessionId", s->id}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"genus", faces(g).genus}});
  });

  server.Get(R"(/session/([^/]+)/graph)", [&](const httplib::Request& req, httplib::Response& res) {
    with_session(store, req, res, [&](Session& s) {
      std::shared_lock guard(s.lock);
      if (!s.graph) return fail(res, 409, "no_graph", "session has no graph loaded");
      res.status = 200;
      res.set_content(serialize_graph(*s.graph), "application/json");
    });
  });

  server.Get(R"(/session/([^/]+)/quiver)", [&](const httplib::Request& req, httplib::Response& res) {
    read_view(store, req, res, "quiver", [](const BrauerGraph& g) { return render::presentation(presentation(g)); });
  });

  server.Get(R"(/session/([^/]+)/walks)", [&](const httplib::Request& req, httplib::Response& res) {
    bool dbl = req.has_param("double") && req.get_param_value("double") != "false" && req.get_param_value("double") != "0";
    read_view(store, req, res, dbl ? "walks-double" : "walks", [dbl](const BrauerGraph& g) {
      return render::walks(dbl ? double_stepped_walks(g) : all_green_walks(g));
    });
  });

  server.Get(R"(/session/([^/]+)/classify)", [&](const httplib::Request& req, httplib::Response& res) {
    read_view(store, req, res, "classify", [](const BrauerGraph& g) { return render::classification(g); });
  });

  server.Get(R"(/session/([^/]+)/projectives)", [&](const httplib::Request& req, httplib::Response& res) {
    read_view(store, req, res, "projectives", [](const BrauerGraph& g) { return render::projectives(projectives(g)); });
  });

  server.Post(R"(/session/([^/]+)/mutate)", [&](const httplib::Request& req, httplib::Response& res) {
    if (!store.find(req.matches[1]))
      return fail(res, 404, "not_found", "no session '" + std::string(req.matches[1]) + "'");
    auto body = parse_body(req, res);
    if (!body) return;
    if (!body->contains("edge") || !((*body)["edge"].is_string() || (*body)["edge"].is_number_integer()))
      return fail(res, 400, "malformed_body", "field 'edge' (string) is required", "edge");
    std::string edge = (*body)["edge"].is_string() ? (*body)["edge"].get<std::string>()
                                                   : std::to_string((*body)["edge"].get<long long>());
    Direction dir = Direction::Plus;
    if (body->contains("direction")) {
      if (!(*body)["direction"].is_string())
        return fail(res, 400, "malformed_body", "field 'direction' must be a string", "direction");
      try {
        dir = parse_direction((*body)["direction"].get<std::string>());
      } catch (const MutationError& e) {
        return fail(res, 400, "malformed_body", e.what(), "direction");
      }
    }
    with_session(store, req, res, [&](Session& s) {
      std::unique_lock guard(s.lock);
      if (!s.graph) return fail(res, 409, "no_graph", "session has no graph loaded");
      auto mv = kauer_move_report(*s.graph, edge, dir);
      s.history.push_back({mv, *s.graph});
      s.graph = mv.result;
      invalidate(s);
      reply(res, 200,
            {{"move", render::move(mv)}, {"graph", render::graph(*s.graph)}, {"history", s.history.size()}});
    });
  });

  server.Post(R"(/session/([^/]+)/undo)", [&](const httplib::Request& req, httplib::Response& res) {
    with_session(store, req, res, [&](Session& s) {
      std::unique_lock guard(s.lock);
      if (s.history.empty()) return fail(res, 409, "empty_history", "nothing to undo");
      s.graph = s.history.back().prior;
      Json undone = render::move(s.history.back().move);
      s.history.pop_back();
      invalidate(s);
      reply(res, 200, {{"undone", undone}, {"graph", render::graph(*s.graph)}, {"history", s.history.size()}});
    });
  });
}

} // namespace brauer::service
