// Command line surface over the skein library: invariant values, LMOV
// extraction, colored Alexander slices, named verification suites, and the
// persistent value cache.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skein/cache.hpp"
#include "skein/invariants.hpp"
#include "skein/lmov.hpp"
#include "skein/partition.hpp"
#include "skein/special.hpp"
#include "skein/suites.hpp"

using nlohmann::json;
using namespace skein;

namespace {

struct Usage : std::runtime_error {
  explicit Usage(const std::string& what) : std::runtime_error(what) {}
};

Partition parse_color(const std::string& text) {
  if (text.empty()) return Partition();
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Usage("bad color part '" + tok + "' in '" + text + "'");
    }
  }
  try {
    return Partition(parts);
  } catch (const std::exception& e) {
    throw Usage("bad color '" + text + "': " + e.what());
  }
}

// grammar: "unknot" or "torus:r,s"; framing defaults to 0 or, when
// diagram_framing is set, to the torus diagram writhe
FramedKnot parse_knot(const std::string& text, bool has_framing,
                      long long framing, bool diagram_framing) {
  if (text == "unknot") return FramedKnot::unknot(has_framing ? framing : 0);
  if (text.rfind("torus:", 0) == 0) {
    int r = 0, s = 0;
    char comma = 0;
    std::stringstream ss(text.substr(6));
    if (!(ss >> r >> comma >> s) || comma != ',' || !ss.eof())
      throw Usage("bad torus spec '" + text + "', expected torus:r,s");
    try {
      FramedKnot k = FramedKnot::torus_knot(r, s);
      if (has_framing)
        k.tau = framing;
      else if (!diagram_framing)
        k.tau = 0;
      return k;
    } catch (const std::exception& e) {
      throw Usage("bad torus spec '" + text + "': " + e.what());
    }
  }
  throw Usage("unknown knot '" + text + "', expected unknot or torus:r,s");
}

json laurent_json(const LaurentQA& f) { return json::parse(laurent_to_json(f)); }

json fraction_json(const BracketFrac& f) {
  json den = json::object();
  for (const auto& [k, pow] : f.denominator_brackets())
    den[std::to_string(k)] = pow;
  return {{"numerator", laurent_json(f.numerator())},
          {"denominator_brackets", den}};
}

json table_json(const ZARewrite& rw) {
  json rows = json::array();
  for (const auto& [gq, n] : rw.coefficients)
    rows.push_back({{"g", gq.first}, {"Q", gq.second}, {"N", n.get_str()}});
  return rows;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Report {
  std::string command;
  json results = json::array();
  bool any_fail = false;

  void add_verdict(const std::string& cell, const Verdict& v) {
    json rec{{"cell", cell}, {"pass", v.pass}};
    if (!v.detail.empty()) rec["detail"] = v.detail;
    if (v.rewrite) rec["table"] = table_json(*v.rewrite);
    results.push_back(std::move(rec));
    if (!v.pass) any_fail = true;
  }

  void emit(const std::string& format, double wall_ms) const {
    if (format == "json") {
      json doc{{"engine", kEngineVersion},
               {"command", command},
               {"wall_ms", wall_ms},
               {"results", results}};
      std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
      // verdict rows flatten as cell,pass,detail; integer tables flatten
      // as cell,g,Q,N rows
      std::cout << "cell,field1,field2,field3\n";
      for (const auto& rec : results) {
        const std::string cell = rec.value("cell", "");
        if (rec.contains("table")) {
          for (const auto& row : rec["table"])
            std::cout << csv_escape(cell) << "," << row["g"] << ","
                      << row["Q"] << "," << row["N"].get<std::string>()
                      << "\n";
        }
        if (rec.contains("pass"))
          std::cout << csv_escape(cell) << ","
                    << (rec["pass"].get<bool>() ? "pass" : "fail") << ","
                    << csv_escape(rec.value("detail", "")) << ",\n";
        else if (rec.contains("value"))
          std::cout << csv_escape(cell) << ",value,"
                    << csv_escape(rec["value"].dump()) << ",\n";
      }
    } else {  // pretty
      for (const auto& rec : results) {
        std::cout << rec.value("cell", "?");
        if (rec.contains("pass"))
          std::cout << ": " << (rec["pass"].get<bool>() ? "pass" : "FAIL");
        if (rec.contains("detail"))
          std::cout << "  [" << rec.value("detail", "") << "]";
        if (rec.contains("value")) std::cout << " = " << rec["value"].dump();
        std::cout << "\n";
      }
      std::cout << (any_fail ? "FAIL" : "ok") << " (" << results.size()
                << " records, " << wall_ms << " ms)\n";
    }
  }
};

std::string default_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SKEIN_CACHE")) return env;
  return "skein-cache.json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact colored knot invariant engine"};
  app.require_subcommand(1);

  std::string knot_spec = "unknot";
  std::string color_spec;
  std::string reverse_spec;
  long long framing = 0;
  bool normalized = false;
  std::string format = "json";
  int max_weight = 0;
  int max_n = 0;
  int p_opt = 0;
  long long tau_opt = 0;
  int jobs = 1;
  bool inject_fail = false;
  std::string cache_path;
  std::vector<std::string> suite_args;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
  };
  auto add_knot_color = [&](CLI::App* cmd) {
    cmd->add_option("--knot", knot_spec, "unknot or torus:r,s");
    cmd->add_option("--color", color_spec, "partition, e.g. 2,1");
    cmd->add_option("--reverse", reverse_spec,
                    "reversed orientation color partition");
  };

  auto* inv = app.add_subcommand("invariant", "compute a colored invariant");
  add_knot_color(inv);
  auto* inv_framing = inv->add_option("--framing", framing, "framing tau");
  inv->add_flag("--normalized", normalized,
                "divide by the matching unknot value");
  add_common(inv);

  auto* lm = app.add_subcommand(
      "lmov", "extract reformulated LMOV data with integer tables");
  lm->add_option("--knot", knot_spec, "unknot or torus:r,s");
  auto* lm_framing = lm->add_option("--framing", framing, "framing tau");
  lm->add_option("--max-weight", max_weight, "truncation weight")
      ->check(CLI::Range(1, kDefaultTruncation));
  add_common(lm);

  auto* alx = app.add_subcommand("alexander",
                                 "colored Alexander polynomial (a = 1 slice)");
  add_knot_color(alx);
  add_common(alx);

  auto* ver = app.add_subcommand("verify", "run named verification suites");
  ver->add_option("suite", suite_args, "suite names, or all")->required();
  ver->add_option("--max-weight", max_weight, "partition weight cap");
  ver->add_option("--n", max_n, "strand cap");
  ver->add_option("--p", p_opt, "single prime");
  auto* ver_tau = ver->add_option("--tau", tau_opt, "single framing");
  ver->add_option("--jobs", jobs, "worker count")->check(CLI::Range(1, 64));
  ver->add_flag("--inject-fail", inject_fail,
                "append an always-failing verdict (exit code testing)");
  add_common(ver);

  auto* ca = app.add_subcommand("cache", "persistent value cache");
  add_knot_color(ca);
  auto* ca_framing = ca->add_option("--framing", framing, "framing tau");
  ca->add_option("--path", cache_path,
                 "cache file (default $SKEIN_CACHE or skein-cache.json)");
  bool cache_info = false;
  ca->add_flag("--info", cache_info, "report cache size only");
  add_common(ca);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  Report report;
  for (int i = 0; i < argc; ++i) {
    if (i) report.command += ' ';
    report.command += argv[i];
  }
  const auto t0 = std::chrono::steady_clock::now();

  try {
    if (inv->parsed()) {
      const FramedKnot k =
          parse_knot(knot_spec, !inv_framing->empty(), framing, false);
      const Partition lam = parse_color(color_spec);
      const Partition mu = parse_color(reverse_spec);
      json rec{{"cell", (normalized ? "normalized " : "framed ") +
                            k.to_string() + " [" + lam.to_string() + "," +
                            mu.to_string() + "]"}};
      if (normalized)
        rec["value"] = laurent_json(normalized_P(k, lam, mu));
      else
        rec["value"] = fraction_json(framed_H(k, lam, mu));
      report.results.push_back(std::move(rec));
    } else if (lm->parsed()) {
      const FramedKnot k =
          parse_knot(knot_spec, !lm_framing->empty(), framing, true);
      const int cap = max_weight > 0 ? max_weight : 4;
      for (int w = 1; w <= cap; ++w)
        for (const auto& mu : partitions_of(w))
          report.add_verdict("g-tilde " + k.to_string() + " mu=" +
                                 mu.to_string(),
                             check_refined_lmov(k, mu));
    } else if (alx->parsed()) {
      const FramedKnot k = parse_knot(knot_spec, false, 0, false);
      const Partition lam = parse_color(color_spec);
      json rec{{"cell", "alexander " + k.to_string() + " lambda=" +
                            lam.to_string()},
               {"value", laurent_json(colored_alexander(k, lam))}};
      report.results.push_back(std::move(rec));
    } else if (ver->parsed()) {
      SuiteOptions opt;
      opt.max_weight = max_weight;
      opt.max_n = max_n;
      opt.p = p_opt;
      opt.tau = tau_opt;
      opt.has_tau = !ver_tau->empty();
      opt.jobs = jobs;
      std::vector<std::string> suites = suite_args;
      if (suites.size() == 1 && suites[0] == "all") suites = suite_names();
      for (const auto& s : suites)
        for (const auto& r : run_suite(s, opt))
          report.add_verdict(s + ": " + r.cell, r.verdict);
      if (inject_fail)
        report.add_verdict("injected failure",
                           Verdict::fail("injected by --inject-fail"));
    } else if (ca->parsed()) {
      const std::string path = default_cache_path(cache_path);
      InvariantCache cache;
      if (std::filesystem::exists(path)) cache.load(path);
      if (cache_info) {
        report.results.push_back(
            {{"cell", "cache " + path},
             {"value", {{"entries", cache.size()}}}});
      } else {
        const FramedKnot k =
            parse_knot(knot_spec, !ca_framing->empty(), framing, false);
        const Partition lam = parse_color(color_spec);
        const Partition mu = parse_color(reverse_spec);
        const std::string key = InvariantCache::make_key(k, lam, mu, "normalized");
        const LaurentQA fresh = normalized_P(k, lam, mu);
        const auto hit = cache.lookup(key);
        if (hit) {
          // cache hits must reproduce recomputation bit for bit
          report.add_verdict(
              "cache hit " + key,
              *hit == fresh ? Verdict::ok()
                            : Verdict::fail("stored value drifted"));
        } else {
          cache.store(key, fresh);
          cache.save(path);
          report.results.push_back(
              {{"cell", "cache store " + key}, {"value", laurent_json(fresh)}});
        }
      }
    }
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSuite& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  report.emit(format, wall_ms);
  return report.any_fail ? 1 : 0;
}
