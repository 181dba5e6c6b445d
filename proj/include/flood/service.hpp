#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "flood/game.hpp"
#include "flood/oracle.hpp"
#include "flood/solver.hpp"

namespace flood {

struct ServiceOptions {
  std::optional<std::string> state_file;
  SolveOptions solve;
  OracleLimits oracle;
};

struct Response {
  int status = 200;
  std::string body;  // JSON, empty for 204
};

// Game sessions behind a JSON API. Routing-free so it can be driven directly;
// ServiceHost puts it on HTTP. Lookups share the map lock, create/delete take
// it exclusively, and each session serializes its own mutations.
class GameService {
 public:
  explicit GameService(ServiceOptions options = {});

  Response create_game(const std::string& body);
  Response get_game(const std::string& id) const;
  Response play_move(const std::string& id, const std::string& body);
  Response get_hint(const std::string& id) const;
  Response delete_game(const std::string& id);

  std::size_t session_count() const;

 private:
  struct Session {
    std::string id;
    std::shared_ptr<const ColoredGraph> graph;
    GameState state;
    std::optional<std::size_t> optimal_remaining;
    mutable std::mutex mutex;

    Session(std::string id_, std::shared_ptr<const ColoredGraph> g, Vertex source)
        : id(std::move(id_)), graph(g), state(std::move(g), source) {}
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  std::optional<std::size_t> remaining_for(const GameState& state) const;
  std::string snapshot(const Session& s) const;
  std::string new_id();
  void persist() const;
  void restore();

  ServiceOptions options_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  mutable std::mutex persist_mutex_;
  std::mutex id_mutex_;
  std::uint64_t id_state_;
};

// HTTP front end: POST /games, GET /games/{id}, POST /games/{id}/moves,
// GET /games/{id}/hint, DELETE /games/{id}.
class ServiceHost {
 public:
  explicit ServiceHost(GameService& service);
  ~ServiceHost();
  ServiceHost(const ServiceHost&) = delete;
  ServiceHost& operator=(const ServiceHost&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws Error on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace flood
