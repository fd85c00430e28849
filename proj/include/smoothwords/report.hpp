#pragma once

// JSON, CSV and plain-text renderings of chains, certificates and census
// reports. Every JSON document carries "schema_version": "1".

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "smoothwords/calculus.hpp"
#include "smoothwords/census.hpp"
#include "smoothwords/concat.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

inline constexpr const char* kSchemaVersion = "1";

namespace detail {

inline nlohmann::json alphabet_pair(const Alphabet& ab) {
  return nlohmann::json::array({ab.a(), ab.b()});
}

inline nlohmann::json word_list(const std::vector<Word>& words) {
  auto arr = nlohmann::json::array();
  for (const Word& w : words) arr.push_back(to_text(w));
  return arr;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// Human-readable word: the empty word prints as ε.
inline std::string show(const Word& w) { return w.empty() ? "ε" : to_text(w); }

}  // namespace detail

inline nlohmann::json to_json(const DerivativeChain& chain, const Alphabet& ab) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["alphabet"] = detail::alphabet_pair(ab);
  j["word"] = to_text(chain.levels.front());
  j["levels"] = detail::word_list(chain.levels);
  j["steps"] = chain.levels.size() - 1;
  j["verdict"] = chain.smooth ? "smooth" : "not-smooth";
  if (chain.failure) {
    j["failure"] = {{"level", chain.failure->level},
                    {"reason", std::string(to_string(chain.failure->reason))},
                    {"run_index", chain.failure->run_index}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

inline nlohmann::json to_json(const ConcatCertificate& cert) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["alphabet"] = detail::alphabet_pair(cert.alphabet);
  j["bound"] = cert.bound;
  j["tested"] = cert.tested;
  j["certified"] = cert.certified();
  auto viol = nlohmann::json::array();
  for (const auto& v : cert.violations) {
    viol.push_back({{"u", to_text(v.u)},
                    {"x", to_text(v.x)},
                    {"v", to_text(v.v)},
                    {"reason", std::string(to_string(v.reason))},
                    {"middle", v.middle ? nlohmann::json(to_text(*v.middle)) : nlohmann::json()}});
  }
  j["violations"] = std::move(viol);
  j["empirical_middles"] = detail::word_list(cert.empirical_middles);
  j["table"] = detail::word_list(dsigma_table(cert.alphabet).words());
  return j;
}

inline nlohmann::json to_json(const PowerDecomposition& pd, const Alphabet& ab) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["alphabet"] = detail::alphabet_pair(ab);
  j["base"] = to_text(pd.base);
  j["exponent"] = pd.exponent;
  auto levels = nlohmann::json::array();
  for (const auto& l : pd.levels) {
    levels.push_back({{"j", l.level},
                      {"base_derivative", to_text(l.base_derivative)},
                      {"power_derivative", to_text(l.power_derivative)},
                      {"witness", to_text(l.witness)}});
  }
  j["levels"] = std::move(levels);
  return j;
}

inline nlohmann::json to_json(const CensusReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["alphabet"] = r.alphabet.text();
  j["exponent"] = r.exponent;
  j["bound"] = r.bound;
  j["count"] = r.count;
  j["stable"] = r.stable;
  j["stable_from"] = r.stable_from;
  j["last_new_base_length"] = r.last_new_base_length;
  j["note"] = r.note;
  auto wits = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    wits.push_back({{"base", to_text(w.base)},
                    {"base_length", w.base.size()},
                    {"power_length", w.power.size()},
                    {"primitive_base", to_text(w.primitive_base)}});
  }
  j["witnesses"] = std::move(wits);
  return j;
}

/// Columns base, base_length, power_length; the last line is "count,<n>".
inline void write_csv(std::ostream& os, const CensusReport& r) {
  os << "base,base_length,power_length\n";
  for (const auto& w : r.witnesses) {
    os << detail::csv_field(to_text(w.base)) << ',' << w.base.size() << ','
       << w.power.size() << '\n';
  }
  os << "count," << r.count << '\n';
}

inline void write_text(std::ostream& os, const CensusReport& r) {
  os << "alphabet " << r.alphabet.text() << ", exponent " << r.exponent << ", bound "
     << r.bound << '\n';
  for (const auto& w : r.witnesses) {
    os << "  (" << to_text(w.base) << ")^" << r.exponent << "  base_length "
       << w.base.size();
    if (w.primitive_base != w.base) os << "  primitive " << to_text(w.primitive_base);
    os << '\n';
  }
  if (r.exponent >= 2) os << r.witnesses.size() << " witnesses\n";
  os << "count " << r.count << " (" << r.note << ")\n";
}

inline void write_text(std::ostream& os, const DerivativeChain& chain) {
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    os << "  " << i << ": " << detail::show(chain.levels[i]) << '\n';
  }
  if (chain.smooth) {
    os << "smooth\n";
  } else {
    os << "not smooth: " << to_string(chain.failure->reason) << " at level "
       << chain.failure->level << ", run " << chain.failure->run_index << '\n';
  }
}

inline void write_text(std::ostream& os, const ConcatCertificate& cert) {
  os << "alphabet " << cert.alphabet.text() << ", bound " << cert.bound << ", "
     << cert.tested << " smooth triples tested\n";
  os << "empirical middles:";
  for (const Word& w : cert.empirical_middles) os << ' ' << detail::show(w);
  os << '\n';
  for (const auto& v : cert.violations) {
    os << "  violation u=" << detail::show(v.u) << " x=" << detail::show(v.x)
       << " v=" << detail::show(v.v) << ": " << to_string(v.reason);
    if (v.middle) os << " (middle " << detail::show(*v.middle) << ')';
    os << '\n';
  }
  os << (cert.certified() ? "certified" : std::to_string(cert.violations.size()) + " violations")
     << '\n';
}

inline void write_text(std::ostream& os, const PowerDecomposition& pd) {
  os << "(" << to_text(pd.base) << ")^" << pd.exponent << '\n';
  if (pd.levels.empty()) os << "  no levels (base has a single run)\n";
  for (const auto& l : pd.levels) {
    os << "  j=" << l.level << "  D^j(u)=" << detail::show(l.base_derivative)
       << "  w=" << detail::show(l.witness) << '\n';
  }
}

}  // namespace smoothwords
