#pragma once

// Command-line front end. `run` executes one parsed command; `main` parses
// argv first. Both write to caller-supplied streams so they can be tested
// in-process.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smoothwords/cache.hpp"
#include "smoothwords/calculus.hpp"
#include "smoothwords/census.hpp"
#include "smoothwords/concat.hpp"
#include "smoothwords/report.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

enum class Format { text, json, csv };

struct CliConfig {
  Alphabet alphabet{1, 2};
  std::string command;
  std::optional<std::string> word;
  std::optional<unsigned> exponent;   // -n (length for enumerate/kolakoski)
  std::optional<std::size_t> bound;   // -L
  std::size_t depth = 1;              // -k
  std::optional<Letter> alpha;        // --alpha, defaults to a
  std::size_t family_size = 3;        // -K
  std::size_t x_bound = 4;            // --x-bound, with --explore
  bool explore = false;
  Format format = Format::text;
  std::optional<std::string> cache_dir;
  bool use_cache = true;
  unsigned jobs = 0;
};

class usage_error : public error {
 public:
  using error::error;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "derive",  "rho",    "chain",          "closure",      "delta",       "lift",
      "lift-family", "enumerate", "kolakoski", "dsigma", "certify-concat", "power-decomp",
      "scan-powers", "gamma", "indices"};
  return names;
}

inline Alphabet parse_alphabet(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw usage_error("alphabet must look like a,b");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string lhs = text.substr(0, comma);
    const std::string rhs = text.substr(comma + 1);
    const unsigned long a = std::stoul(lhs, &used_a);
    const unsigned long b = std::stoul(rhs, &used_b);
    if (used_a != lhs.size() || used_b != rhs.size() || a > UINT32_MAX || b > UINT32_MAX) {
      throw usage_error("alphabet must look like a,b");
    }
    return Alphabet(static_cast<Letter>(a), static_cast<Letter>(b));
  } catch (const std::logic_error&) {
    throw usage_error("alphabet must look like a,b");
  } catch (const invalid_argument& e) {
    throw usage_error(e.what());
  }
}

namespace detail {

struct Context {
  const CliConfig& cfg;
  std::ostream& out;
  std::unique_ptr<DirectoryCache> cache;

  EnumerationOptions enumeration() const {
    return EnumerationOptions{cfg.jobs, cache.get()};
  }
  const Alphabet& ab() const { return cfg.alphabet; }

  Word word() const {
    if (!cfg.word) throw usage_error(cfg.command + " needs --word");
    return parse_word_text(*cfg.word);
  }
  unsigned exponent() const {
    if (!cfg.exponent) throw usage_error(cfg.command + " needs -n");
    return *cfg.exponent;
  }
  Letter alpha() const { return cfg.alpha.value_or(cfg.alphabet.a()); }

  void require_format(std::initializer_list<Format> allowed) const {
    for (Format f : allowed) {
      if (f == cfg.format) return;
    }
    throw usage_error("format not supported by " + cfg.command);
  }

  // Plain word result of a unary operator.
  int emit_word(const Word& input, const Word& result) const {
    require_format({Format::text, Format::json});
    if (cfg.format == Format::json) {
      nlohmann::json j;
      j["schema_version"] = kSchemaVersion;
      j["alphabet"] = smoothwords::detail::alphabet_pair(ab());
      j["command"] = cfg.command;
      j["input"] = to_text(input);
      j["result"] = to_text(result);
      out << j.dump(2) << '\n';
    } else {
      out << smoothwords::detail::show(result) << '\n';
    }
    return kExitOk;
  }

  int emit_words(const std::vector<Word>& words, const nlohmann::json& extra) const {
    if (cfg.format == Format::json) {
      nlohmann::json j = extra;
      j["schema_version"] = kSchemaVersion;
      j["alphabet"] = smoothwords::detail::alphabet_pair(ab());
      j["command"] = cfg.command;
      j["count"] = words.size();
      j["words"] = smoothwords::detail::word_list(words);
      out << j.dump(2) << '\n';
    } else if (cfg.format == Format::csv) {
      out << "word,length\n";
      for (const Word& w : words) {
        out << smoothwords::detail::csv_field(to_text(w)) << ',' << w.size() << '\n';
      }
    } else {
      for (const Word& w : words) out << smoothwords::detail::show(w) << '\n';
    }
    return kExitOk;
  }

  int emit_census(const CensusReport& r) const {
    if (cfg.format == Format::json) {
      out << to_json(r).dump(2) << '\n';
    } else if (cfg.format == Format::csv) {
      write_csv(out, r);
    } else {
      write_text(out, r);
    }
    return kExitOk;
  }
};

inline std::size_t default_scan_bound(const Alphabet& ab, unsigned exponent) {
  return exponent == 2 && ab == Alphabet(1, 2) ? 60 : 30;
}

}  // namespace detail

/// Executes one command. Library errors on bad input map to kExitUsage.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::Context ctx{cfg, out, nullptr};
  if (cfg.use_cache) {
    ctx.cache = std::make_unique<DirectoryCache>(resolve_cache_dir(cfg.cache_dir));
  }
  const Alphabet& ab = cfg.alphabet;

  using Handler = std::function<int()>;
  const std::map<std::string, Handler> handlers{
      {"derive", [&] { auto w = ctx.word(); return ctx.emit_word(w, derivative(w, ab)); }},
      {"rho", [&] { auto w = ctx.word(); return ctx.emit_word(w, rho(w, ab)); }},
      {"closure", [&] { auto w = ctx.word(); return ctx.emit_word(w, closure(w, ab)); }},
      {"delta", [&] { auto w = ctx.word(); return ctx.emit_word(w, delta(w)); }},
      {"lift",
       [&] {
         auto w = ctx.word();
         return ctx.emit_word(w, lift(w, ctx.alpha(), cfg.depth, ab));
       }},
      {"chain",
       [&] {
         ctx.require_format({Format::text, Format::json});
         auto chain = smooth_chain(ctx.word(), ab);
         if (cfg.format == Format::json) {
           out << to_json(chain, ab).dump(2) << '\n';
         } else {
           write_text(out, chain);
         }
         return kExitOk;
       }},
      {"lift-family",
       [&] {
         ctx.require_format({Format::text, Format::json, Format::csv});
         auto fam = lift_family(ctx.word(), ctx.exponent(), ctx.alpha(), cfg.family_size, ab);
         return ctx.emit_words(fam, {{"exponent", ctx.exponent()}, {"alpha", ctx.alpha()}});
       }},
      {"enumerate",
       [&] {
         auto words = enumerate_smooth(ab, ctx.exponent(), ctx.enumeration());
         return ctx.emit_words(words, {{"length", ctx.exponent()}});
       }},
      {"kolakoski",
       [&] {
         return ctx.emit_word(Word{}, kolakoski_prefix(ab, ctx.alpha(), ctx.exponent()));
       }},
      {"dsigma",
       [&] { return ctx.emit_words(dsigma_table(ab).words(), nlohmann::json::object()); }},
      {"indices",
       [&] {
         ctx.require_format({Format::text, Format::json});
         const IndexPair hd = h_delta(ab);
         if (cfg.format == Format::json) {
           nlohmann::json j{{"schema_version", kSchemaVersion},
                            {"alphabet", smoothwords::detail::alphabet_pair(ab)},
                            {"h", hd.h},
                            {"delta", hd.delta}};
           out << j.dump(2) << '\n';
         } else {
           out << "h " << hd.h << "\ndelta " << hd.delta << '\n';
         }
         return kExitOk;
       }},
      {"certify-concat",
       [&] {
         ctx.require_format({Format::text, Format::json});
         const std::size_t bound = cfg.bound.value_or(8);
         auto cert = cfg.explore ? explore_concat(ab, bound, cfg.x_bound, ctx.enumeration())
                                 : certify_concat(ab, bound, ctx.enumeration());
         if (cfg.format == Format::json) {
           auto j = to_json(cert);
           j["mode"] = cfg.explore ? "explore" : "certify";
           out << j.dump(2) << '\n';
         } else {
           write_text(out, cert);
         }
         if (cfg.explore) return kExitOk;
         return cert.certified() ? kExitOk : kExitViolation;
       }},
      {"power-decomp",
       [&] {
         ctx.require_format({Format::text, Format::json});
         auto pd = power_decomposition(ctx.word(), ctx.exponent(), ab);
         if (cfg.format == Format::json) {
           out << to_json(pd, ab).dump(2) << '\n';
         } else {
           write_text(out, pd);
         }
         return kExitOk;
       }},
      {"scan-powers",
       [&] {
         const unsigned n = ctx.exponent();
         const std::size_t bound = cfg.bound.value_or(detail::default_scan_bound(ab, n));
         return ctx.emit_census(scan_powers(ab, n, bound, ctx.enumeration()));
       }},
      {"gamma",
       [&] {
         const unsigned n = ctx.exponent();
         const std::size_t bound = cfg.bound.value_or(detail::default_scan_bound(ab, n));
         return ctx.emit_census(gamma(ab, n, bound, ctx.enumeration()));
       }},
  };

  const auto it = handlers.find(cfg.command);
  if (it == handlers.end()) {
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  }
  try {
    return it->second();
  } catch (const certification_failure& e) {
    err << "certification failure: " << e.what() << '\n';
    return kExitViolation;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

/// Parses argv into a CliConfig and runs it.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smooth words over two-letter alphabets"};
  app.set_help_flag("-h,--help", "Print help");

  CliConfig cfg;
  std::string command;
  std::string alphabet;
  std::string format = "text";
  std::optional<std::string> word;
  std::optional<unsigned> exponent;
  std::optional<std::size_t> bound;
  std::optional<Letter> alpha;
  std::optional<std::string> cache_dir;
  bool no_cache = false;

  std::string command_help = "Command:";
  for (const auto& c : commands()) command_help += " " + c;
  app.add_option("command", command, command_help)->required();
  app.add_option("--alphabet", alphabet, "Alphabet a,b with 1 <= a < b")->required();
  app.add_option("-w,--word", word, "Input word (31113 or 3,1,1,1,3)");
  app.add_option("-n", exponent, "Exponent; length for enumerate and kolakoski");
  app.add_option("-L", bound, "Length bound");
  app.add_option("-k", cfg.depth, "Lift depth");
  app.add_option("-K,--family-size", cfg.family_size, "Lift family size");
  app.add_option("--alpha", alpha, "Start letter (default a)");
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", cache_dir, "Enumeration cache directory");
  app.add_flag("--no-cache", no_cache, "Do not read or write the enumeration cache");
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
  app.add_flag("--explore", cfg.explore, "certify-concat: let x range over smooth words");
  app.add_option("--x-bound", cfg.x_bound, "certify-concat --explore: max |x|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    cfg.alphabet = parse_alphabet(alphabet);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.command = command;
  cfg.word = word;
  cfg.exponent = exponent;
  cfg.bound = bound;
  cfg.alpha = alpha;
  cfg.cache_dir = cache_dir;
  cfg.use_cache = !no_cache;
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  return run(cfg, out, err);
}

}  // namespace smoothwords::cli
