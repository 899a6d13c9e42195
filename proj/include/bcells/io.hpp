#pragma once

// JSON forms of the library's values and the Kazhdan-Lusztig basis cache.

#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bcells/cells.hpp"
#include "bcells/cycles.hpp"
#include "bcells/hecke.hpp"
#include "bcells/tableau.hpp"

namespace bcells {

using Json = nlohmann::json;

inline Json to_json(const SignedPermutation& w) { return Json(w.entries()); }

// Accepts [4,1,-3,-2] or "4 1 -3 -2".
inline SignedPermutation permutation_from_json(const Json& j) {
  if (j.is_string()) return SignedPermutation::parse(j.get<std::string>());
  if (!j.is_array()) throw std::invalid_argument("permutation must be an array or a string");
  return SignedPermutation(j.get<std::vector<int>>());
}

inline Json to_json(const Shape& s) { return {{"rows", s.rows()}}; }

inline Json to_json(const DominoTableau& t) { return {{"rank", t.rank()}, {"rows", t.rows()}}; }

inline DominoTableau tableau_from_json(const Json& j) {
  return DominoTableau(j.at("rank").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
}

inline Json to_json(const TableauPair& p) { return {{"left", to_json(p.left)}, {"right", to_json(p.right)}}; }

inline TableauPair pair_from_json(const Json& j) {
  return {tableau_from_json(j.at("left")), tableau_from_json(j.at("right"))};
}

inline Json to_json(const Cycle& c) { return {{"labels", c.labels}, {"kind", to_string(c.kind)}}; }

inline Json to_json(const CycleSet& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

inline Json to_json(const DescentSet& d) {
  Json simple = Json::array(), extended = Json::array();
  for (int i : d.simple) simple.push_back(simple_generator(i).name());
  for (int k : d.extended) extended.push_back("t_" + std::to_string(k));
  return {{"simple", simple}, {"extended", extended}};
}

inline Json to_json(const CellPartition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks()) {
    Json block = Json::array();
    for (const auto& w : b) block.push_back(to_json(w));
    blocks.push_back(std::move(block));
  }
  return {{"n", p.n()}, {"label", p.label()}, {"blocks", std::move(blocks)}};
}

inline CellPartition partition_from_json(const Json& j) {
  std::vector<std::vector<SignedPermutation>> blocks;
  for (const auto& b : j.at("blocks")) {
    std::vector<SignedPermutation> block;
    for (const auto& w : b) block.push_back(permutation_from_json(w));
    blocks.push_back(std::move(block));
  }
  return CellPartition(j.at("n").get<int>(), j.at("label").get<std::string>(), std::move(blocks));
}

inline Json to_json(const LaurentPolynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      out[std::to_string(e)] = static_cast<std::int64_t>(c);
    } else {
      out[std::to_string(e)] = c.str();
    }
  }
  return out;
}

inline LaurentPolynomial polynomial_from_json(const Json& j) {
  LaurentPolynomial p;
  for (const auto& [key, value] : j.items()) {
    const Integer c = value.is_string() ? Integer(value.get<std::string>()) : Integer(value.get<std::int64_t>());
    p.add_term(std::stoi(key), c);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Kazhdan-Lusztig basis cache: one JSON-lines file per (n, a, b). The first
// line is a header; each further line holds one basis element.

inline constexpr int kCacheVersion = 1;

inline std::filesystem::path kl_cache_path(const std::filesystem::path& dir, int n, const WeightFunction& L) {
  return dir / ("kl_n" + std::to_string(n) + "_a" + std::to_string(L.a) + "_b" + std::to_string(L.b) + ".jsonl");
}

inline void save_kl_basis(const HeckeAlgebra& algebra, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto path = kl_cache_path(dir, algebra.n(), algebra.weights());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << Json{{"version", kCacheVersion},
                {"n", algebra.n()},
                {"a", algebra.weights().a},
                {"b", algebra.weights().b},
                {"elements", algebra.size()}}
               .dump()
        << '\n';
    const auto& basis = algebra.kl_basis();
    for (int w = 0; w < algebra.size(); ++w) {
      Json coeffs = Json::array();
      for (const auto& [y, p] : basis[static_cast<std::size_t>(w)]) {
        coeffs.push_back({{"y", to_json(algebra.element(y))}, {"poly", to_json(p)}});
      }
      out << Json{{"w", to_json(algebra.element(w))}, {"coeffs", std::move(coeffs)}}.dump() << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

/// Loads a cached basis into `algebra`. Returns false when no usable cache
/// exists; throws on a corrupt file.
inline bool load_kl_basis(HeckeAlgebra& algebra, const std::filesystem::path& dir) {
  const auto path = kl_cache_path(dir, algebra.n(), algebra.weights());
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line)) return false;
  const Json header = Json::parse(line);
  if (header.value("version", 0) != kCacheVersion || header.value("n", 0) != algebra.n() ||
      header.value("a", 0) != algebra.weights().a || header.value("b", 0) != algebra.weights().b ||
      header.value("elements", 0) != algebra.size()) {
    return false;
  }
  std::vector<HeckeElement> basis(static_cast<std::size_t>(algebra.size()));
  std::vector<bool> seen(basis.size(), false);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json rec = Json::parse(line);
    const int w = algebra.index_of(permutation_from_json(rec.at("w")));
    HeckeElement h;
    for (const auto& term : rec.at("coeffs")) {
      h.emplace(algebra.index_of(permutation_from_json(term.at("y"))), polynomial_from_json(term.at("poly")));
    }
    const auto top = h.find(w);
    if (top == h.end() || !(top->second == LaurentPolynomial(1)) || std::prev(h.end())->first != w) {
      throw std::runtime_error("corrupt cache entry for " + algebra.element(w).to_string() + " in " + path.string());
    }
    basis[static_cast<std::size_t>(w)] = std::move(h);
    seen[static_cast<std::size_t>(w)] = true;
  }
  for (bool s : seen)
    if (!s) return false;
  algebra.set_basis(std::move(basis));
  return true;
}

/// Loads the basis from `dir` if cached, otherwise computes and stores it.
inline void prepare_kl_basis(HeckeAlgebra& algebra, const std::optional<std::filesystem::path>& dir) {
  if (!dir) {
    algebra.kl_basis();
    return;
  }
  if (load_kl_basis(algebra, *dir)) return;
  algebra.kl_basis();
  save_kl_basis(algebra, *dir);
}

}  // namespace bcells
