#pragma once

#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "l2lab/lfunctions.hpp"
#include "l2lab/numerics/format.hpp"

namespace l2lab {

// Splits "PI2*L(-7)" into canonical atoms {"PI2", "L(-7)"}. Atoms: PI, PI2,
// ZETA2, ZETA3, ZETA4, G (= L(-4)), K (= L(-3)), L(d) for a discriminant d.
inline std::vector<std::string> parse_constant_expression(std::string_view text) {
  std::vector<std::string> atoms;
  size_t pos = 0;
  auto bad = [&](const std::string& msg) -> void {
    throw ParseError("constant '" + std::string(text) + "': " + msg);
  };
  while (true) {
    size_t star = text.find('*', pos);
    std::string atom(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    atom.erase(0, atom.find_first_not_of(' '));
    atom.erase(atom.find_last_not_of(' ') + 1);
    if (atom == "PI" || atom == "PI2" || atom == "ZETA2" || atom == "ZETA3" || atom == "ZETA4") {
      atoms.push_back(atom);
    } else if (atom == "G") {
      atoms.push_back("L(-4)");
    } else if (atom == "K") {
      atoms.push_back("L(-3)");
    } else if (atom.size() > 3 && atom.rfind("L(", 0) == 0 && atom.back() == ')') {
      std::string num = atom.substr(2, atom.size() - 3);
      size_t used = 0;
      long long d = 0;
      try {
        d = std::stoll(num, &used);
      } catch (const std::exception&) {
        bad("bad discriminant in " + atom);
      }
      if (used != num.size()) bad("bad discriminant in " + atom);
      if (!is_valid_discriminant(d)) bad(std::to_string(d) + " is not a discriminant");
      atoms.push_back("L(" + std::to_string(d) + ")");
    } else {
      bad("unknown constant '" + atom + "'");
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return atoms;
}

inline Real evaluate_constant_atom(const std::string& atom, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (atom == "PI") return pi();
  if (atom == "PI2") return square(pi());
  if (atom == "ZETA2") return zeta_int(2, ctx);
  if (atom == "ZETA3") return zeta_int(3, ctx);
  if (atom == "ZETA4") return zeta_int(4, ctx);
  if (atom.rfind("L(", 0) == 0) return dirichlet_l2(std::stoll(atom.substr(2)), ctx);
  throw ParseError("unknown constant '" + atom + "'");
}

// (atom, digits) -> decimal string. Reads may run concurrently; inserts and
// saving are serialized. Entries for other digit counts are kept but never used.
class ConstantCache {
 public:
  ConstantCache() = default;
  explicit ConstantCache(std::string path) : path_(std::move(path)) { load(); }

  Real atom(const std::string& atom, const PrecisionContext& ctx) {
    const std::string key = atom + "@" + std::to_string(ctx.digits);
    {
      std::shared_lock lock(mu_);
      auto it = entries_.find(key);
      if (it != entries_.end()) {
        PrecisionScope scope(ctx);
        return Real(it->second);
      }
    }
    Real v = evaluate_constant_atom(atom, ctx);
    std::unique_lock lock(mu_);
    entries_.emplace(key, to_fixed(v, ctx.working_digits() + 5));
    dirty_ = true;
    return v;
  }

  Real evaluate(std::string_view expr, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    Real v(1);
    for (const auto& a : parse_constant_expression(expr)) v *= atom(a, ctx);
    return v;
  }

  size_t size() const {
    std::shared_lock lock(mu_);
    return entries_.size();
  }

  // Writes the cache file if a path was given and something changed.
  void save() {
    std::unique_lock lock(mu_);
    if (path_.empty() || !dirty_) return;
    nlohmann::json j(entries_);
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    if (!out) throw CorpusError("cannot write constants cache '" + path_ + "'");
    out << j.dump(2) << "\n";
    dirty_ = false;
  }

 private:
  void load() {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;  // first run
    std::ostringstream ss;
    ss << in.rdbuf();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::parse_error&) {
      throw CorpusError("constants cache '" + path_ + "' is not valid JSON");
    }
    if (!j.is_object()) throw CorpusError("constants cache '" + path_ + "' must hold an object");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.value().is_string()) entries_[it.key()] = it.value().get<std::string>();
  }

  std::string path_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::string> entries_;
  bool dirty_ = false;
};

}  // namespace l2lab
