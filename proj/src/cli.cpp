#include "weakid/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "weakid/bcs.hpp"
#include "weakid/disc.hpp"
#include "weakid/errors.hpp"
#include "weakid/json_io.hpp"
#include "weakid/weakid.hpp"

namespace weakid {

namespace {

int resolveThreads(int opt) {
  if (opt > 0) return opt;
  if (const char* env = std::getenv("WEAKID_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

TSubgroupGens parseWords(const std::vector<std::string>& texts) {
  return TSubgroupGens::fromStrings(texts);
}

int verdictExit(Verdict::Status s) { return s == Verdict::Status::Unknown ? 3 : 0; }

void printVerdictText(std::ostream& out, const Verdict& v) {
  out << statusName(v.status) << " height=" << v.height << " group=" << v.group_label << "\n";
  if (v.status == Verdict::Status::Fails) {
    out << "failing selection:";
    for (const auto& w : v.failing_selection) out << " " << w;
    out << "\nwitness:\n";
    for (std::size_t c = 0; c < v.witness.size(); ++c) {
      out << "  copy " << c << ":";
      for (const auto& [gen, name] : v.witness[c]) out << " " << gen << " -> " << name;
      out << "\n";
    }
  }
}

struct ReproTable {
  std::ostream& out;
  bool pass = true;

  void row(const std::string& what, const std::string& expected, const std::string& computed) {
    bool ok = expected == computed;
    pass = pass && ok;
    out << (ok ? "  ok   " : "  FAIL ") << what << ": expected " << expected << ", computed "
        << computed << "\n";
  }
};

int reproFreeExampleOnS3(std::ostream& out, const SearchBudget& budget) {
  out << "repro free-example-on-S3: the commutator on sym:3\n";
  ReproTable t{out};
  FiniteGroup g = makeGroup("sym:3");
  TSubgroupGens s = parseWords({"[g1,g2]"});
  t.row("check_weak height 1", "FAILS", statusName(checkWeak(g, s, 1, budget).status));
  t.row("check_weak height 2", "HOLDS", statusName(checkWeak(g, s, 2, budget).status));
  out << (t.pass ? "PASS" : "FAIL") << "\n";
  return t.pass ? 0 : 1;
}

int reproFiniteWid(std::ostream& out, const SearchBudget& budget) {
  out << "repro finite-wid: wId(sym:3) contains F'.F^6\n";
  ReproTable t{out};
  FiniteGroup g = makeGroup("sym:3");
  t.row("g1^6 height 1", "HOLDS", statusName(checkWeak(g, parseWords({"g1^6"}), 1, budget).status));
  for (int k = 1; k <= 5; ++k) {
    std::string w = "g1^" + std::to_string(k);
    t.row(w + " height 6", "FAILS", statusName(checkWeak(g, parseWords({w}), 6, budget).status));
  }
  t.row("[g1,g2] height 2", "HOLDS",
        statusName(checkWeak(g, parseWords({"[g1,g2]"}), 2, budget).status));
  out << (t.pass ? "PASS" : "FAIL") << "\n";
  return t.pass ? 0 : 1;
}

int reproBcsBound(std::ostream& out, const SearchBudget& budget) {
  out << "repro bcs-bound: commutator height <= centralizer chain length\n";
  ReproTable t{out};
  for (const std::string& spec :
       {"sym:3", "q8", "dihedral:4", "alt:4", "sl:2:3", "gl:2:3"}) {
    FiniteGroup g = makeGroup(spec);
    HeightReport r = minHeight(g, parseWords({"[g1,g2]"}), 0, budget);
    int bound = bcsHeightBound(g);
    std::string computed = r.height ? std::to_string(*r.height) : "UNKNOWN";
    bool ok = r.height && *r.height <= bound;
    t.row(spec + " height <= bound " + std::to_string(bound), "true", ok ? "true" : "false");
    out << "       (" << spec << ": height " << computed << ", bound " << bound << ")\n";
  }
  out << (t.pass ? "PASS" : "FAIL") << "\n";
  return t.pass ? 0 : 1;
}

int reproNontransitivityA5(std::ostream& out, const SearchBudget& budget) {
  out << "repro nontransitivity-A5: modulo holds, direct check fails, chain repairs\n";
  ReproTable t{out};
  FiniteGroup g = makeGroup("alt:5");
  t.row("{g1} modulo {[g1,g2]} height 1", "HOLDS",
        statusName(checkWeakModulo(g, parseWords({"g1"}), parseWords({"[g1,g2]"}), 1, budget)
                       .status));
  t.row("{g1} direct height 1", "FAILS",
        statusName(checkWeak(g, parseWords({"g1"}), 1, budget).status));
  ChainReport chain = verifyWeakStarChain(
      g, {parseWords({"g1"}), parseWords({"[g1,g2]"}), parseWords({"()"})}, {1, 6}, budget);
  t.row("weak* chain {g1} > {[g1,g2]} > {1}", "HOLDS", statusName(chain.overall));
  out << (t.pass ? "PASS" : "FAIL") << "\n";
  return t.pass ? 0 : 1;
}

int reproAbelianDisc(std::ostream& out, const SearchBudget&) {
  out << "repro abelian-disc: discrimination and the abelian criterion\n";
  ReproTable t{out};
  t.row("trivial group", "DISCRIMINATING",
        statusName(isDiscriminatingFinite(makeGroup("cyclic:1")).status));
  DiscVerdict c2 = isDiscriminatingFinite(makeGroup("cyclic:2"));
  t.row("cyclic:2", "NOT_DISCRIMINATING", statusName(c2.status));
  t.row("cyclic:2 certificate size", "3", std::to_string(c2.certificate.size()));
  FreeAbelianGroup z2(2);
  t.row("[g1,g2] identity on Z^2", "true",
        abelianWeakEqualsIdentity(parseWord("[g1,g2]"), z2).is_identity ? "true" : "false");
  t.row("g1^2 identity on Z^2", "false",
        abelianWeakEqualsIdentity(parseWord("g1^2"), z2).is_identity ? "true" : "false");
  out << (t.pass ? "PASS" : "FAIL") << "\n";
  return t.pass ? 0 : 1;
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"weakid: decides weak identities in finite groups"};
  app.require_subcommand(1);

  std::string group_spec;
  std::vector<std::string> word_texts;
  std::vector<std::string> mod_texts;
  int height = 1;
  int cutoff = 0;
  int threads_opt = 0;
  std::uint64_t node_cap = SearchBudget{}.node_cap;
  double time_cap = SearchBudget{}.time_cap_seconds;
  bool as_json = false;
  std::uint64_t seed = 0;
  std::string chain_path;
  int chain_cap = 64;
  int endo_cap = 24;
  int rank = 1;
  std::string repro_name;
  SampleBudget sample;

  auto addCommon = [&](CLI::App* cmd, bool with_group) {
    if (with_group) cmd->add_option("--group", group_spec, "group spec")->required();
    cmd->add_option("--threads", threads_opt, "search threads (or WEAKID_THREADS)");
    cmd->add_option("--node-cap", node_cap, "search node budget");
    cmd->add_option("--time-cap", time_cap, "search time budget, seconds");
    cmd->add_flag("--json", as_json, "JSON output");
  };
  // allow_extra_args(false): one value per --word occurrence, which also
  // stops CLI11 from expanding bracketed values like "[g1,g2]" as arrays.
  auto addWords = [&](CLI::App* cmd) {
    cmd->add_option("--word", word_texts, "word (repeatable)")->required()->allow_extra_args(false);
  };

  auto* check = app.add_subcommand("check", "is S a weak identity of height N?");
  addCommon(check, true);
  addWords(check);
  check->add_option("--height", height, "height N")->required();

  auto* height_cmd = app.add_subcommand("height", "least height at which S holds");
  addCommon(height_cmd, true);
  addWords(height_cmd);
  height_cmd->add_option("--cutoff", cutoff, "scan cutoff (0 = ceil(log2 |G|) + 2)");

  auto* check_mod = app.add_subcommand("check-mod", "weak identity modulo a verbal subgroup");
  addCommon(check_mod, true);
  addWords(check_mod);
  check_mod->add_option("--mod", mod_texts, "modulus word (repeatable)")
      ->required()
      ->allow_extra_args(false);
  check_mod->add_option("--height", height, "height N")->required();

  auto* chain_cmd = app.add_subcommand("chain", "verify a weak* chain from a JSON file");
  addCommon(chain_cmd, true);
  chain_cmd->add_option("--file", chain_path, "chain file")->required();

  auto* verbal = app.add_subcommand("verbal", "verbal image H(G)");
  addCommon(verbal, true);
  addWords(verbal);

  auto* quot = app.add_subcommand("quotient", "quotient by the verbal image");
  addCommon(quot, true);
  addWords(quot);

  auto* cen = app.add_subcommand("centralizer-chain", "maximal descending centralizer chain");
  addCommon(cen, true);
  cen->add_option("--cap", chain_cap, "depth cap");

  auto* disc = app.add_subcommand("disc", "is the group discriminating?");
  addCommon(disc, true);
  disc->add_option("--endo-cap", endo_cap, "endomorphism enumeration cap");

  auto* abelian = app.add_subcommand("abelian", "weak = identity criterion on Z^rank");
  abelian->add_option("--word", word_texts, "word")->required()->allow_extra_args(false);
  abelian->add_option("--rank", rank, "free-abelian rank");
  abelian->add_flag("--json", as_json, "JSON output");

  auto* sample_cmd = app.add_subcommand("sample-tsub", "sample elements of the T-subgroup <S>_T");
  sample_cmd->add_option("--word", word_texts, "generating word (repeatable)")
      ->required()
      ->allow_extra_args(false);
  sample_cmd->add_option("--seed", seed, "RNG seed");
  sample_cmd->add_option("--count", sample.count, "samples");
  sample_cmd->add_option("--factors", sample.factors, "max factors per product");
  sample_cmd->add_option("--word-len", sample.word_len, "max letters per image word");
  sample_cmd->add_option("--vars", sample.vars, "image alphabet size");
  sample_cmd->add_flag("--json", as_json, "JSON output");

  auto* repro = app.add_subcommand("repro", "run a scripted reproduction scenario");
  repro->add_option("name", repro_name,
                    "free-example-on-S3 | finite-wid | bcs-bound | nontransitivity-A5 | "
                    "abelian-disc")
      ->required();
  repro->add_option("--threads", threads_opt, "search threads (or WEAKID_THREADS)");

  auto* about = app.add_subcommand("about", "conventions and version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  SearchBudget budget;
  budget.node_cap = node_cap;
  budget.time_cap_seconds = time_cap;
  budget.threads = resolveThreads(threads_opt);

  try {
    if (*check || *height_cmd || *check_mod || *chain_cmd) {
      if (*check) {
        Verdict v = checkWeak(makeGroup(group_spec), parseWords(word_texts), height, budget);
        if (as_json)
          out << verdictToJson(v).dump(2) << "\n";
        else
          printVerdictText(out, v);
        return verdictExit(v.status);
      }
      if (*height_cmd) {
        HeightReport r = minHeight(makeGroup(group_spec), parseWords(word_texts), cutoff, budget);
        if (as_json)
          out << heightReportToJson(r).dump(2) << "\n";
        else if (r.height)
          out << "height " << *r.height << "\n";
        else
          out << (r.unknown ? "UNKNOWN (budget)" : "no height within cutoff") << "\n";
        return r.unknown ? 3 : 0;
      }
      if (*check_mod) {
        Verdict v = checkWeakModulo(makeGroup(group_spec), parseWords(word_texts),
                                    parseWords(mod_texts), height, budget);
        if (as_json)
          out << verdictToJson(v).dump(2) << "\n";
        else
          printVerdictText(out, v);
        return verdictExit(v.status);
      }
      std::ifstream in(chain_path);
      if (!in) throw Error("cannot open chain file: " + chain_path);
      json spec = json::parse(in);
      std::vector<TSubgroupGens> chain;
      for (const auto& entry : spec.at("chain"))
        chain.push_back(parseWords(entry.get<std::vector<std::string>>()));
      std::vector<int> heights = spec.at("heights").get<std::vector<int>>();
      ChainReport r = verifyWeakStarChain(makeGroup(group_spec), chain, heights, budget);
      if (as_json)
        out << chainReportToJson(r).dump(2) << "\n";
      else
        out << "overall " << statusName(r.overall) << " over " << r.steps.size() << " steps\n";
      return r.overall == Verdict::Status::Unknown ? 3 : 0;
    }

    if (*verbal || *quot) {
      FiniteGroup g = makeGroup(group_spec);
      TSubgroupGens s = parseWords(word_texts);
      Subgroup image = verbalImage(g, s.words());
      if (*verbal) {
        if (as_json)
          out << subgroupToJson(image).dump(2) << "\n";
        else
          out << "verbal image order " << image.size() << " of |G| = " << g.order() << "\n";
        return 0;
      }
      QuotientGroup q = quotient(g, image);
      if (as_json) {
        json names = json::array();
        for (int x = 0; x < q.group.order(); ++x) names.push_back(q.group.name(x));
        out << json{{"verbal_subgroup_order", image.size()},
                    {"quotient_order", q.group.order()},
                    {"quotient_elements", std::move(names)}}
                   .dump(2)
            << "\n";
      } else {
        out << "quotient order " << q.group.order() << " (verbal image order " << image.size()
            << ")\n";
      }
      return 0;
    }

    if (*cen) {
      CentralizerChain chain = maxCentralizerChain(makeGroup(group_spec), chain_cap);
      if (as_json)
        out << centralizerChainToJson(chain).dump(2) << "\n";
      else
        out << "chain length " << chain.length() << (chain.complete ? "" : " (truncated)")
            << "\n";
      return chain.complete ? 0 : 3;
    }

    if (*disc) {
      DiscVerdict v = isDiscriminatingFinite(makeGroup(group_spec), endo_cap);
      if (as_json) {
        out << discVerdictToJson(v).dump(2) << "\n";
      } else {
        out << statusName(v.status) << "\n";
        for (const auto& [a, b] : v.certificate) out << "  certificate (" << a << ", " << b << ")\n";
      }
      return v.status == DiscVerdict::Status::Unknown ? 3 : 0;
    }

    if (*abelian) {
      if (word_texts.size() != 1) throw Error("abelian takes exactly one --word");
      AbelianVerdict v = abelianWeakEqualsIdentity(parseWord(word_texts[0]), FreeAbelianGroup(rank));
      if (as_json)
        out << abelianVerdictToJson(v, rank).dump(2) << "\n";
      else
        out << (v.is_identity ? "IDENTITY" : "NOT an identity") << ": " << v.explanation << "\n";
      return 0;
    }

    if (*sample_cmd) {
      auto words = sampleTSubgroup(parseWords(word_texts), sample, seed);
      if (as_json) {
        json arr = json::array();
        for (const auto& w : words) arr.push_back(w.str());
        out << json{{"seed", seed}, {"samples", std::move(arr)}}.dump(2) << "\n";
      } else {
        for (const auto& w : words) out << w.str() << "\n";
      }
      return 0;
    }

    if (*repro) {
      if (repro_name == "free-example-on-S3") return reproFreeExampleOnS3(out, budget);
      if (repro_name == "finite-wid") return reproFiniteWid(out, budget);
      if (repro_name == "bcs-bound") return reproBcsBound(out, budget);
      if (repro_name == "nontransitivity-A5") return reproNontransitivityA5(out, budget);
      if (repro_name == "abelian-disc") return reproAbelianDisc(out, budget);
      throw Error("unknown repro scenario: " + repro_name);
    }

    if (*about) {
      out << "weakid: weak identities in finite groups by pruned exhaustive search\n"
             "conventions:\n"
             "  * words over g1, g2, ...; '*' optional; '^' integer powers;\n"
             "    [x,y] = x*y*x^-1*y^-1; '()' is the empty word\n"
             "  * permutations compose left-to-right: (s*t)(p) = t(s(p))\n"
             "  * element id 0 is always the identity\n"
             "  * permutation groups number even permutations first,\n"
             "    lexicographic by one-line form within each parity class\n"
             "  * results are deterministic for any --threads value\n"
             "    (stats.wall_ms excepted)\n"
             "exit codes: 0 verdict computed, 2 usage error, 3 budget/UNKNOWN\n";
      return 0;
    }
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace weakid
