#include "gf2lights/gateway/sessions.hpp"

#include <stdexcept>

namespace gf2lights::gateway {

SessionStore::SessionStore(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw std::invalid_argument("session capacity must be positive");
}

std::shared_ptr<Session> SessionStore::insert(std::shared_ptr<Session> session) {
  std::lock_guard lock(mutex_);
  session->id = "b" + std::to_string(next_id_++);
  session->created_at = std::chrono::system_clock::now();
  recency_.push_front(session->id);
  entries_.emplace(session->id, Entry{session, recency_.begin()});
  while (entries_.size() > capacity_) {
    entries_.erase(recency_.back());
    recency_.pop_back();
  }
  return session;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(id);
  if (it == entries_.end()) return nullptr;
  recency_.splice(recency_.begin(), recency_, it->second.position);
  return it->second.session;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace gf2lights::gateway
