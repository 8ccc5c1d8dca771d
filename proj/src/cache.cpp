#include "skein/cache.hpp"

#include <fstream>

#include <json.hpp>

namespace skein {

using nlohmann::json;

namespace {

json laurent_json(const LaurentQA& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({e.qnum, e.aexp, rational_to_string(c)});
  return json{{"lden", f.lattice()}, {"terms", std::move(terms)}};
}

LaurentQA laurent_parse(const json& j) {
  const std::int64_t lden = j.at("lden").get<std::int64_t>();
  LaurentQA f;
  for (const auto& t : j.at("terms"))
    f.insert_term(t.at(0).get<std::int64_t>(), lden,
                  t.at(1).get<std::int64_t>(),
                  rational_from_string(t.at(2).get<std::string>()));
  return f;
}

}  // namespace

std::string laurent_to_json(const LaurentQA& f) { return laurent_json(f).dump(); }

LaurentQA laurent_from_json(const std::string& text) {
  return laurent_parse(json::parse(text));
}

std::string InvariantCache::make_key(const FramedKnot& k,
                                     const Partition& lambda,
                                     const Partition& mu,
                                     const std::string& flavor) {
  return k.to_string() + "|" + lambda.to_string() + "|" + mu.to_string() +
         "|" + flavor;
}

std::optional<LaurentQA> InvariantCache::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void InvariantCache::store(const std::string& key, const LaurentQA& value) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_[key] = value;
}

void InvariantCache::save(const std::string& path) const {
  std::lock_guard<std::mutex> lock(mu_);
  json entries = json::object();
  for (const auto& [k, v] : entries_) entries[k] = laurent_json(v);
  json doc{{"engine", kEngineVersion}, {"entries", std::move(entries)}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file: " + path);
  out << doc.dump(2) << "\n";
}

void InvariantCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file: " + path);
  json doc = json::parse(in);
  const std::string engine = doc.at("engine").get<std::string>();
  if (engine != kEngineVersion)
    throw CacheVersionMismatch("cache written by engine " + engine +
                               ", this is " + kEngineVersion);
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& [k, v] : doc.at("entries").items())
    entries_[k] = laurent_parse(v);
}

}  // namespace skein
