#ifndef HOPF_SRC_CACHE_HPP
#define HOPF_SRC_CACHE_HPP

#include <map>
#include <mutex>

namespace hopf::detail {

// Memo table safe for concurrent callers. compute() runs unlocked, so it may
// recurse into the same cache.
template <class K, class V>
class SyncCache {
 public:
  template <class F>
  V get(const K& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<K, V> map_;
};

}  // namespace hopf::detail

#endif
