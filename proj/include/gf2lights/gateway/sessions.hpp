#pragma once

// In-memory game sessions with LRU eviction. Each session carries its own
// mutex; callers hold it while reading or mutating the board.

#include <chrono>
#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

#include "gf2lights/lightsout.hpp"

namespace gf2lights::gateway {

struct Session {
  std::string id;
  std::chrono::system_clock::time_point created_at;
  std::mutex mutex;

  // Finite boards.
  std::optional<Graph> graph;
  std::optional<std::size_t> grid_rows;
  std::optional<std::size_t> grid_cols;
  BoardState state;

  // Infinite boards: the lit vertices (1-based, always finitely many) and
  // the width of the strip shown to clients.
  std::optional<InfiniteGraph> infinite;
  std::set<std::size_t> lit;
  std::size_t window = 0;

  bool is_infinite() const noexcept { return infinite.has_value(); }
};

class SessionStore {
 public:
  static constexpr std::size_t kDefaultCapacity = 1024;

  explicit SessionStore(std::size_t capacity = kDefaultCapacity);

  // Assigns an id, registers the session and evicts the least recently used
  // one when over capacity.
  std::shared_ptr<Session> insert(std::shared_ptr<Session> session);
  // Marks the session as most recently used; nullptr when unknown or evicted.
  std::shared_ptr<Session> find(const std::string& id);

  std::size_t size() const;
  std::size_t capacity() const noexcept { return capacity_; }

 private:
  struct Entry {
    std::shared_ptr<Session> session;
    std::list<std::string>::iterator position;
  };

  mutable std::mutex mutex_;
  std::size_t capacity_;
  std::size_t next_id_ = 1;
  std::list<std::string> recency_;  // front = most recent
  std::unordered_map<std::string, Entry> entries_;
};

}  // namespace gf2lights::gateway
