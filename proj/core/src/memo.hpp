#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dtqft/bimodule.hpp"

namespace dtqft::detail {

// Keys use object identity. Cached entries hold the words they were built
// from, which keeps the referenced modules and algebras alive, so an
// address in a key is never reused by another object.
inline std::string identity_key(const OneMorWord& w) {
  std::ostringstream os;
  os << w.source().get() << '|' << w.target().get();
  for (const auto& l : w.letters()) os << '|' << l.module.get() << (l.sign == Sign::plus ? '+' : '-');
  return os.str();
}

template <class Value>
class Memo {
 public:
  template <class Make>
  std::shared_ptr<const Value> get(const std::string& key, const std::vector<OneMorWord>& keep, Make make) {
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return it->second.second;
    }
    // Built outside the lock: construction may recurse into the same memo.
    auto value = std::make_shared<const Value>(make());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::make_pair(keep, value));
    return it->second.second;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, std::pair<std::vector<OneMorWord>, std::shared_ptr<const Value>>> entries_;
};

}  // namespace dtqft::detail
