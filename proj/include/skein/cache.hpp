#ifndef SKEIN_CACHE_HPP
#define SKEIN_CACHE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "skein/invariants.hpp"
#include "skein/laurent.hpp"

namespace skein {

inline constexpr const char* kEngineVersion = "skein/1";

struct CacheVersionMismatch : std::runtime_error {
  explicit CacheVersionMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

std::string laurent_to_json(const LaurentQA& f);
LaurentQA laurent_from_json(const std::string& text);

// persistent map from invariant keys to exact values; values round-trip
// bit-identically through the JSON file. Writes are serialized; reads of a
// loaded cache are safe to share.
class InvariantCache {
 public:
  static std::string make_key(const FramedKnot& k, const Partition& lambda,
                              const Partition& mu, const std::string& flavor);

  std::optional<LaurentQA> lookup(const std::string& key) const;
  void store(const std::string& key, const LaurentQA& value);
  std::size_t size() const { return entries_.size(); }

  void save(const std::string& path) const;
  // throws CacheVersionMismatch when the file's engine tag differs
  void load(const std::string& path);

 private:
  std::map<std::string, LaurentQA> entries_;
  mutable std::mutex mu_;
};

}  // namespace skein

#endif
