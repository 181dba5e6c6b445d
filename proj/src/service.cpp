#include "flood/service.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "flood/error.hpp"
#include "flood/generators.hpp"
#include "flood/io.hpp"
#include "httplib.h"
#include "json.hpp"

namespace flood {

using nlohmann::json;

namespace {

Response error(int status, const std::string& message) { return {status, json{{"error", message}}.dump()}; }

std::uint64_t seed_from_device() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

GenSpec parse_genspec(const json& j) {
  if (!j.is_object()) throw InvalidInput("generate: expected an object");
  GenSpec spec;
  spec.family = parse_family(j.at("family").get<std::string>());
  spec.n = j.value("n", std::size_t{0});
  spec.rows = j.value("rows", std::size_t{0});
  spec.cols = j.value("cols", std::size_t{0});
  spec.colors = j.value("colors", std::size_t{2});
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.proper = j.value("proper", false);
  return spec;
}

}  // namespace

GameService::GameService(ServiceOptions options) : options_(std::move(options)), id_state_(seed_from_device()) {
  restore();
}

std::string GameService::new_id() {
  std::lock_guard lock(id_mutex_);
  for (;;) {
    SplitMix64 rng(id_state_++);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng.next()));
    std::shared_lock map_lock(map_mutex_);
    if (!sessions_.contains(buf)) return buf;
  }
}

std::size_t GameService::session_count() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::optional<std::size_t> GameService::remaining_for(const GameState& state) const {
  if (state.finished()) return 0;
  try {
    return hint(state, options_.solve, options_.oracle).remaining;
  } catch (const InfeasibleSpec&) {
    return std::nullopt;
  }
}

std::string GameService::snapshot(const Session& s) const {
  const ColoredGraph& g = *s.graph;
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json j{{"id", s.id},
         {"vertices", g.n()},
         {"colors", g.colors()},
         {"edges", std::move(edges)},
         {"source", s.state.source()},
         {"territory", s.state.territory().to_vector()},
         {"current_color", s.state.current_color()},
         {"moves", s.state.moves()},
         {"finished", s.state.finished()},
         {"optimal_remaining", nullptr}};
  if (s.optimal_remaining) j["optimal_remaining"] = *s.optimal_remaining;
  return j.dump();
}

Response GameService::create_game(const std::string& body) {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object()) return error(400, "body must be an object");
  if (req.contains("graph") == req.contains("generate")) return error(400, "give exactly one of graph, generate");

  std::shared_ptr<const ColoredGraph> graph;
  Vertex source = 0;
  try {
    if (req.contains("source")) {
      if (!req["source"].is_number_unsigned()) return error(400, "source: expected a non-negative integer");
      source = req["source"].get<Vertex>();
    }
    if (req.contains("graph")) {
      InstanceFile inst = parse_json(req["graph"].dump());
      if (!req.contains("source") && inst.source) source = *inst.source;
      if (source >= inst.graph.n()) return error(400, "source: vertex out of range");
      if (!is_connected(inst.graph)) return error(400, "graph: not connected");
      graph = std::make_shared<const ColoredGraph>(std::move(inst.graph));
    } else {
      GenSpec spec;
      try {
        spec = parse_genspec(req["generate"]);
      } catch (const json::exception& e) {
        return error(400, std::string("generate: ") + e.what());
      }
      const ColoredGraph g = generate(spec);
      if (source >= g.n()) return error(400, "source: vertex out of range");
      Instance inst = restrict_to_component(g, source);
      source = inst.source;
      graph = std::make_shared<const ColoredGraph>(std::move(inst.graph));
    }
  } catch (const InfeasibleSpec& e) {
    return error(422, e.what());
  } catch (const InvalidInput& e) {
    return error(400, e.what());
  }

  auto session = std::make_shared<Session>(new_id(), graph, source);
  session->optimal_remaining = remaining_for(session->state);
  std::string snap = snapshot(*session);
  {
    std::unique_lock lock(map_mutex_);
    sessions_.emplace(session->id, session);
  }
  persist();
  return {201, std::move(snap)};
}

Response GameService::get_game(const std::string& id) const {
  auto s = find(id);
  if (!s) return error(404, "no game " + id);
  std::lock_guard lock(s->mutex);
  return {200, snapshot(*s)};
}

Response GameService::play_move(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return error(404, "no game " + id);
  json req;
  try {
    req = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object() || !req.contains("color") || !req["color"].is_number_unsigned())
    return error(400, "body must be {\"color\": int}");
  const auto color = req["color"].get<std::uint64_t>();

  std::string snap;
  {
    std::lock_guard lock(s->mutex);
    if (color >= s->graph->k()) return error(400, "color out of range 0.." + std::to_string(s->graph->k() - 1));
    if (s->state.finished()) return error(409, "game is finished");
    if (color == s->state.current_color()) return error(409, "idle move: color equals the territory's color");
    s->state = s->state.apply_move(static_cast<Color>(color));
    s->optimal_remaining = remaining_for(s->state);
    snap = snapshot(*s);
  }
  persist();
  return {200, std::move(snap)};
}

Response GameService::get_hint(const std::string& id) const {
  auto s = find(id);
  if (!s) return error(404, "no game " + id);
  std::lock_guard lock(s->mutex);
  if (s->state.finished()) return error(409, "game is finished");
  try {
    const Hint h = hint(s->state, options_.solve, options_.oracle);
    return {200, json{{"color", h.color}, {"optimal_remaining", h.remaining}, {"method", to_string(h.method)}}.dump()};
  } catch (const InfeasibleSpec& e) {
    return error(422, e.what());
  }
}

Response GameService::delete_game(const std::string& id) {
  {
    std::unique_lock lock(map_mutex_);
    if (sessions_.erase(id) == 0) return error(404, "no game " + id);
  }
  persist();
  return {204, ""};
}

void GameService::persist() const {
  if (!options_.state_file) return;
  std::lock_guard plock(persist_mutex_);
  json all = json::array();
  {
    std::shared_lock lock(map_mutex_);
    for (const auto& [id, s] : sessions_) {
      std::lock_guard slock(s->mutex);
      all.push_back({{"id", id},
                     {"graph", json::parse(emit_json(*s->graph))},
                     {"source", s->state.source()},
                     {"moves", s->state.moves()}});
    }
  }
  const std::string& path = *options_.state_file;
  const std::string tmp = path + ".tmp";
  write_text_file(tmp, json{{"sessions", std::move(all)}}.dump());
  std::filesystem::rename(tmp, path);
}

void GameService::restore() {
  if (!options_.state_file || !std::filesystem::exists(*options_.state_file)) return;
  std::ifstream f(*options_.state_file);
  json doc;
  try {
    doc = json::parse(f);
    for (const json& e : doc.at("sessions")) {
      auto g = std::make_shared<const ColoredGraph>(parse_json(e.at("graph").dump()).graph);
      auto s = std::make_shared<Session>(e.at("id").get<std::string>(), g, e.at("source").get<Vertex>());
      for (Color c : e.at("moves").get<std::vector<Color>>()) s->state = s->state.apply_move(c);
      s->optimal_remaining = remaining_for(s->state);
      sessions_.emplace(s->id, std::move(s));
    }
  } catch (const json::exception& e) {
    throw InvalidInput("state file " + *options_.state_file + ": " + e.what());
  }
}

struct ServiceHost::Impl {
  explicit Impl(GameService& svc) : service(svc) {}
  GameService& service;
  httplib::Server server;
};

ServiceHost::ServiceHost(GameService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& svc = impl_->service;
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    if (!r.body.empty()) res.set_content(r.body, "application/json");
  };
  auto& srv = impl_->server;
  srv.Post("/games", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.create_game(req.body));
  });
  srv.Get(R"(/games/([0-9a-zA-Z]+))", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.get_game(req.matches[1]));
  });
  srv.Post(R"(/games/([0-9a-zA-Z]+)/moves)", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.play_move(req.matches[1], req.body));
  });
  srv.Get(R"(/games/([0-9a-zA-Z]+)/hint)", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.get_hint(req.matches[1]));
  });
  srv.Delete(R"(/games/([0-9a-zA-Z]+))", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.delete_game(req.matches[1]));
  });
  srv.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(json{{"error", what}}.dump(), "application/json");
  });
}

ServiceHost::~ServiceHost() { stop(); }

int ServiceHost::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void ServiceHost::listen() { impl_->server.listen_after_bind(); }

void ServiceHost::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace flood
