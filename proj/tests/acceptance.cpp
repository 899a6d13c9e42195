// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--only N] [--cache DIR] [--with-n5]

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bcells/bcells.hpp"

using namespace bcells;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void absorb(const Report& r) {
    if (r.pass) return;
    pass = false;
    std::string line = r.check;
    for (const auto& [k, v] : r.params) line += " " + k + "=" + std::to_string(v);
    notes.push_back(line + ": " + std::to_string(r.failures) + " failure(s), first: " +
                    (r.counterexamples.empty() ? "?" : r.counterexamples.front()));
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

using Blocks = std::vector<std::vector<int>>;

Blocks labels_of(const CycleSet& cs) {
  Blocks out;
  for (const auto& c : cs) out.push_back(c.labels);
  return out;
}

std::string text(const Blocks& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    out += i ? ",{" : "{";
    for (std::size_t j = 0; j < b[i].size(); ++j) out += (j ? "," : "") + std::to_string(b[i][j]);
    out += "}";
  }
  return out + "}";
}

// Exchanges two labels, re-sorting every block.
Blocks swap_labels(Blocks b, int x, int y) {
  for (auto& block : b) {
    for (int& k : block) k = k == x ? y : k == y ? x : k;
    std::sort(block.begin(), block.end());
  }
  std::sort(b.begin(), b.end());
  return b;
}

const SignedPermutation kW = SignedPermutation::parse("4 1 -3 -2");

// Worked-example pair at rank 2 and the five-domino pair. The second pair's
// right tableau is printed with labels 2 and 3 exchanged (non-standard as
// printed); the standard version is used and printed values are compared
// after the same exchange.
const DominoTableau kS(2, {{0, 0, 1, 1}, {0, 3, 4}, {2, 3, 4}, {2}});
const DominoTableau kT(2, {{0, 0, 1, 1}, {0, 2, 2}, {3, 4, 4}, {3}});
const DominoTableau kS5(2, {{0, 0, 1, 1, 4, 4}, {0, 3, 3, 5, 5}, {2}, {2}});
const DominoTableau kT5Printed(2, {{0, 0, 3, 3, 4, 4}, {0, 2, 2, 5, 5}, {1}, {1}});
const DominoTableau kT5(2, {{0, 0, 2, 2, 4, 4}, {0, 3, 3, 5, 5}, {1}, {1}});

Outcome golden_fixtures() {
  Outcome o;
  const std::vector<TableauPair> expected = {
      {DominoTableau(0, {{1, 1, 4}, {2, 3, 4}, {2, 3}}), DominoTableau(0, {{1, 1, 4}, {2, 2, 4}, {3, 3}})},
      {DominoTableau(1, {{0, 1, 1}, {2, 3, 4}, {2, 3, 4}}), DominoTableau(1, {{0, 1, 1}, {2, 2, 4}, {3, 3, 4}})},
      {kS, kT},
      {DominoTableau(3, {{0, 0, 0, 1, 1}, {0, 0, 4, 4}, {0, 3}, {2, 3}, {2}}),
       DominoTableau(3, {{0, 0, 0, 1, 1}, {0, 0, 2, 2}, {0, 4}, {3, 4}, {3}})},
  };
  for (int r = 0; r < 4; ++r) {
    const auto got = insert(kW, r);
    o.check(got == expected[r], "r=" + std::to_string(r) + ": got " + got.left.to_string() + " / " +
                                    got.right.to_string());
  }
  // The rank-3 recording tableau as printed repeats label 2; the corrected
  // one must also be the image of the rank-2 pair.
  const DominoTableau printed_q3(3, {{0, 0, 0, 1, 1}, {0, 0, 2, 2}, {0, 4}, {2, 4}, {2}});
  o.check(!validate(printed_q3), "printed rank-3 recording tableau unexpectedly valid");
  o.check(raise_pair_rank(expected[2]) == expected[3], "rank-2 pair does not raise to the rank-3 pair");
  return o;
}

Outcome cycle_fixtures() {
  Outcome o;
  auto expect_blocks = [&](const std::string& what, const Blocks& got, const Blocks& want) {
    o.check(got == want, what + ": got " + text(got) + ", printed " + text(want));
  };
  expect_blocks("regular cycles of S", labels_of(cycle_partition(kS)), {{1}, {2}, {3}, {4}});
  expect_blocks("regular cycles of T", labels_of(cycle_partition(kT)), {{1}, {2}, {3}, {4}});
  expect_blocks("core cycles of S", labels_of(core_cycles(kS)), {{1}, {2}, {3}});
  expect_blocks("core cycles of T", labels_of(core_cycles(kT)), {{1}, {2}, {3}});
  expect_blocks("opposite cycles of S", labels_of(cycle_partition(kS, Convention::opposite)), {{1}, {2}, {3, 4}});
  expect_blocks("opposite cycles of T", labels_of(cycle_partition(kT, Convention::opposite)), {{1}, {2, 4}, {3}});

  const auto up = move_through(kS, core_cycles(kS));
  o.check(up == DominoTableau(3, {{0, 0, 0, 1, 1}, {0, 0, 4}, {0, 3, 4}, {2, 3}, {2}}),
          "MT(S, cc(S)) = " + up.to_string());
  auto gamma = label_union(core_cycles(kS));
  gamma.insert(4);
  const auto up4 = move_through(kS, gamma);
  o.check(up4 == DominoTableau(3, {{0, 0, 0, 1, 1}, {0, 0, 4, 4}, {0, 3}, {2, 3}, {2}}),
          "MT(S, cc(S) u {4}) = " + up4.to_string());
  const auto ext = extended_cycles(kS, kT);
  expect_blocks("extended cycles of S", labels_of(ext.in_left), {{1}, {2}, {3}, {4}});
  expect_blocks("extended cycles of T", labels_of(ext.in_right), {{1}, {2}, {3}, {4}});

  o.check(!validate(kT5Printed), "five-domino right tableau as printed is unexpectedly standard");
  const auto ext5 = extended_cycles(kS5, kT5);
  expect_blocks("extended cycles of S (five dominos)", labels_of(ext5.in_left), {{1, 4}, {2}, {3, 5}});
  expect_blocks("extended cycles of T (five dominos, labels 2<->3 as printed)", swap_labels(labels_of(ext5.in_right), 2, 3),
                {{1}, {2, 5}, {3, 4}});
  const auto raised = raise_pair_rank({kS5, kT5});
  o.check(raised.left == DominoTableau(3, {{0, 0, 0, 1, 1, 4, 4}, {0, 0, 3, 3, 5, 5}, {0}, {2}, {2}}),
          "raised left tableau " + raised.left.to_string());
  // Printed right image, with labels 2 and 3 exchanged back.
  o.check(raised.right == DominoTableau(3, {{0, 0, 0, 2, 2, 4, 4}, {0, 0, 3, 3, 5, 5}, {0}, {1}, {1}}),
          "raised right tableau " + raised.right.to_string());
  o.check(lower_pair_rank(raised) == TableauPair{kS5, kT5}, "lowering the raised five-domino pair");
  o.check(raise_pair_rank({kS, kT}) == insert(kW, 3), "raising the rank-2 worked-example pair");
  o.check(lower_pair_rank(insert(kW, 3)) == TableauPair{kS, kT}, "lowering the rank-3 worked-example pair");
  return o;
}

Outcome rank_raising() {
  Outcome o;
  std::int64_t checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& w : enumerate(n)) {
        const auto p = insert(w, r), q = insert(w, r + 1);
        ++checked;
        if (!(raise_pair_rank(p) == q)) {
          o.check(false, "w=" + w.to_string() + " r=" + std::to_string(r));
          if (o.notes.size() >= 5) return o;
        }
      }
    }
  }
  o.notes.push_back(std::to_string(checked) + " (w, r) checked");
  return o;
}

Outcome bijectivity() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) o.absorb(verify_insertion(n, n));
  return o;
}

Outcome tau_suite() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) o.absorb(verify_tau(n));
  const auto q = insert(kW, 2).right;
  o.check(enhanced_tau(kW, 3).to_string() == "{s_1, s_2, t_3}", "xi(w, 3) = " + enhanced_tau(kW, 3).to_string());
  o.check(enhanced_tau_of_tableau(q, 3) == enhanced_tau(kW, 3), "xi of Q_2 = " + enhanced_tau_of_tableau(q, 3).to_string());
  return o;
}

Outcome class_decomposition() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) o.absorb(verify_class_decomposition(n, r));
  // Two classes joined by a non-core move form one left cell.
  auto joined = class_of_tableau(kT);
  const auto other = class_of_tableau(move_through(kT, std::set<int>{4}));
  joined.insert(joined.end(), other.begin(), other.end());
  std::sort(joined.begin(), joined.end());
  o.check(combinatorial_cells(4, 2, Side::left).block_of(kW) == joined, "block of (4 1 -3 -2) at rank 2");
  // A rank-2 tableau without non-core cycles keeps its class under the raise.
  o.check(noncore_cycles(kT5).empty(), "five-domino right tableau has non-core cycles");
  o.check(class_of_tableau(kT5) == class_of_tableau(raise_tableau_rank(kT5)), "C(T) != C(T') for the five-domino tableau");
  return o;
}

Outcome split_stratification() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) o.absorb(verify_split_stratification(n));
  return o;
}

Outcome conjecture(const VerifyOptions& opt, bool with_n5) {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) o.absorb(verify_conjecture(n, k, opt));
  if (with_n5) {
    const auto r = verify_conjecture(5, 4, opt);
    o.absorb(r);
    o.notes.push_back("n=5 ratio=4 " + std::string(r.pass ? "pass" : "fail") + " in " + std::to_string(r.ms / 1000) + " s");
  }
  return o;
}

Outcome intermediate(const VerifyOptions& opt) {
  Outcome o;
  for (int n : {3, 4}) o.absorb(verify_intermediate_structure(n, opt));
  return o;
}

Outcome properties(const VerifyOptions& opt) {
  Outcome o;
  o.absorb(verify_properties(20240101, opt));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  VerifyOptions opt;
  bool with_n5 = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "--cache") && i + 1 < argc) {
      opt.cache_dir = argv[++i];
    } else if (!std::strcmp(argv[i], "--with-n5")) {
      with_n5 = true;
    } else {
      std::cerr << "usage: acceptance [--only N] [--cache DIR] [--with-n5]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "insertion fixtures", 1, golden_fixtures},
      {2, "cycle fixtures", 1, cycle_fixtures},
      {3, "rank raising matches insertion, n <= 5", 60, rank_raising},
      {4, "bijectivity and counting, n <= 5", 60, bijectivity},
      {5, "tau / enhanced tau, n <= 5", 120, tau_suite},
      {6, "class decomposition, n <= 4", 120, class_decomposition},
      {7, "split stratification, n <= 6", 60, split_stratification},
      {8, "combinatorial = KL cells, n <= 4", 600.0 + (with_n5 ? 4 * 3600.0 : 0.0), [&] { return conjecture(opt, with_n5); }},
      {9, "intermediate cell structure, n = 3, 4", 600, [&] { return intermediate(opt); }},
      {10, "property suites", 120, [&] { return properties(opt); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && *only != c.id) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.check(false, "over time budget of " + std::to_string(static_cast<int>(c.budget_s)) + " s");
    all &= o.pass;
    std::printf("%s %2d %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs);
    for (const auto& note : o.notes) std::printf("        %s\n", note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
