// Command-line front end: insertion, cell partitions and verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcells/bcells.hpp"

namespace {

using bcells::Json;

void emit(const Json& j, const std::string& json_path) {
  std::cout << j.dump(2) << '\n';
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << j.dump(2) << '\n';
  }
}

std::vector<int> ratios_from(const std::string& arg, int n) {
  if (arg == "all") {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) out.push_back(k);
    return out;
  }
  const int k = std::stoi(arg);
  if (k < 1) throw std::invalid_argument("--ratio must be a positive integer or 'all'");
  return {k};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domino insertion, cycles and cells for type B"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  int n = 0;
  std::optional<int> rank;
  std::string ratio_arg = "all";
  std::string cache_dir;
  std::string json_path;
  bool verbose = false;
  verify->add_option("suite", suite, "insertion | tau | classes | conjecture | intermediate | split | properties")
      ->required()
      ->check(CLI::IsMember({"insertion", "tau", "classes", "conjecture", "intermediate", "split", "properties"}));
  verify->add_option("--n", n, "Rank of W_n")->check(CLI::Range(1, 8));
  verify->add_option("--rank", rank, "Tableau rank (largest rank for insertion)");
  verify->add_option("--ratio", ratio_arg, "Weight ratio b/a, or 'all'");
  verify->add_option("--cache", cache_dir, "Directory for the Kazhdan-Lusztig basis cache");
  verify->add_option("--json", json_path, "Also write the report(s) to this file");
  verify->add_flag("--verbose", verbose, "Keep every counterexample");

  // cells
  auto* cells = app.add_subcommand("cells", "Print a cell partition of W_n");
  int cells_n = 0;
  std::optional<int> cells_rank, cells_ratio;
  std::string side = "L", kind = "comb", cells_cache, cells_json;
  cells->add_option("--n", cells_n, "Rank of W_n")->required()->check(CLI::Range(1, 8));
  cells->add_option("--rank", cells_rank, "Tableau rank r (comb)");
  cells->add_option("--side", side, "L, R or LR")->check(CLI::IsMember({"L", "R", "LR"}));
  cells->add_option("--kind", kind, "comb or kl")->check(CLI::IsMember({"comb", "kl"}));
  cells->add_option("--ratio", cells_ratio, "Weight ratio b/a (kl); defaults to rank + 1");
  cells->add_option("--cache", cells_cache, "Directory for the Kazhdan-Lusztig basis cache");
  cells->add_option("--json", cells_json, "Also write the partition to this file");

  // insert
  auto* ins = app.add_subcommand("insert", "Domino insertion of one signed permutation");
  int ins_n = 0, ins_rank = 0;
  std::string perm;
  bool steps = false, pretty = false;
  ins->add_option("--n", ins_n, "Rank of W_n")->required();
  ins->add_option("--perm", perm, "One-line notation, e.g. \"4 1 -3 -2\"")->required();
  ins->add_option("--rank", ins_rank, "Tableau rank r")->required()->check(CLI::NonNegativeNumber);
  ins->add_flag("--steps", steps, "Include every partial insertion");
  ins->add_flag("--pretty", pretty, "Draw the tableaux instead of printing JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (suite != "properties" && n == 0) throw CLI::RequiredError("--n");
      bcells::VerifyOptions opt;
      if (verbose) opt.max_counterexamples = static_cast<std::size_t>(-1);
      if (!cache_dir.empty()) opt.cache_dir = cache_dir;
      std::vector<bcells::Report> reports;
      if (suite == "insertion") {
        reports.push_back(bcells::verify_insertion(n, rank.value_or(n), opt));
      } else if (suite == "tau") {
        reports.push_back(bcells::verify_tau(n, opt));
      } else if (suite == "properties") {
        reports.push_back(bcells::verify_properties(20240101, opt));
      } else if (suite == "split") {
        reports.push_back(bcells::verify_split_stratification(n, opt));
      } else if (suite == "classes") {
        if (rank) {
          reports.push_back(bcells::verify_class_decomposition(n, *rank, opt));
        } else {
          for (int r = 0; r <= n; ++r) reports.push_back(bcells::verify_class_decomposition(n, r, opt));
        }
      } else if (suite == "conjecture") {
        for (int k : ratios_from(ratio_arg, n)) reports.push_back(bcells::verify_conjecture(n, k, opt));
      } else {
        reports.push_back(bcells::verify_intermediate_structure(n, opt));
      }
      bool ok = true;
      Json out = Json::array();
      for (const auto& r : reports) {
        ok &= r.pass;
        out.push_back(bcells::to_json(r));
      }
      emit(out.size() == 1 ? out[0] : out, json_path);
      return ok ? 0 : 1;
    }

    if (*cells) {
      const bcells::Side s = bcells::parse_side(side);
      if (kind == "comb") {
        const int r = cells_rank ? *cells_rank : cells_ratio.value_or(1) - 1;
        emit(bcells::to_json(bcells::combinatorial_cells(cells_n, r, s)), cells_json);
      } else {
        const int k = cells_ratio ? *cells_ratio : cells_rank.value_or(0) + 1;
        bcells::HeckeAlgebra algebra(cells_n, {1, k});
        std::optional<std::filesystem::path> dir;
        if (!cells_cache.empty()) dir = cells_cache;
        bcells::prepare_kl_basis(algebra, dir);
        emit(bcells::to_json(bcells::kl_cells(algebra, s)), cells_json);
      }
      return 0;
    }

    if (*ins) {
      const auto w = perm.find('[') != std::string::npos ? bcells::permutation_from_json(Json::parse(perm))
                                                          : bcells::SignedPermutation::parse(perm);
      if (w.size() != ins_n) throw std::invalid_argument("--perm has " + std::to_string(w.size()) + " entries, --n is " +
                                                         std::to_string(ins_n));
      if (pretty) {
        const auto states = bcells::insertion_states(w, ins_rank);
        for (const auto& st : states) {
          if (!steps && st.step != ins_n) continue;
          std::cout << "step " << st.step << "\nP:\n"
                    << bcells::to_box_string(st.pair.left) << "Q:\n"
                    << bcells::to_box_string(st.pair.right);
        }
        return 0;
      }
      Json out = {{"perm", bcells::to_json(w)}, {"rank", ins_rank}, {"pair", bcells::to_json(bcells::insert(w, ins_rank))}};
      if (steps) {
        Json st = Json::array();
        for (const auto& s : bcells::insertion_states(w, ins_rank))
          st.push_back({{"step", s.step}, {"pair", bcells::to_json(s.pair)}});
        out["steps"] = std::move(st);
      }
      emit(out, "");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
