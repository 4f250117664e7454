#pragma once

#include "brauer/mutation.hpp"
#include "brauer/ribbon.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace httplib {
class Server;
}

namespace brauer::service {

struct HistoryEntry {
  KauerMove move;
  BrauerGraph prior;
};

// Mutations take the lock exclusively; reads share it.
struct Session {
  std::string id;
  mutable std::shared_mutex lock;
  std::optional<BrauerGraph> graph;
  std::vector<HistoryEntry> history;

  mutable std::mutex cache_lock;
  mutable std::map<std::string, std::string> cache; // rendered reads, cleared on every change
};

class SessionStore {
public:
  std::shared_ptr<Session> create();
  std::shared_ptr<Session> find(const std::string& id) const;
  std::size_t size() const;

private:
  mutable std::shared_mutex lock_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long counter_ = 0;
};

void install_routes(httplib::Server& server, SessionStore& store);

} // namespace brauer::service
