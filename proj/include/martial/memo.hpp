#pragma once

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace martial {

// Thread-safe memo table. References returned by get() stay valid for the
// lifetime of the cache (node-based storage). The compute callback runs
// outside the lock so it may recurse into the same cache.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

  void insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    map_.try_emplace(key, std::move(value));
  }

  template <class Visit>
  void forEach(Visit&& visit) const {
    std::shared_lock lock(mutex_);
    for (const auto& [key, value] : map_) visit(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace martial
