// nimexact: solver CLI for exact-k and Moore take-away games.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nimexact/core.hpp"
#include "nimexact/degseq.hpp"
#include "nimexact/moore.hpp"
#include "nimexact/oracle.hpp"
#include "nimexact/sg_exact.hpp"
#include "nimexact/tetris.hpp"

namespace {

using nlohmann::ordered_json;
using namespace nimexact;

int exit_code_for(const Error& err) {
  switch (err.code()) {
    case Errc::UnsupportedCase:
    case Errc::TargetOutOfRange:
    case Errc::BudgetExceeded:
    case Errc::NotRealizable:
    case Errc::RangeViolation:
    case Errc::PrePositionError:
      return 2;
    default:
      return 1;
  }
}

Ruleset parse_ruleset(const std::string& name) {
  if (name == "exact") return Ruleset::ExactK;
  if (name == "moore") return Ruleset::MooreAtMostK;
  throw Error(Errc::InvalidSpec, "ruleset must be 'exact' or 'moore'");
}

ordered_json pos_json(const Position& pos) {
  ordered_json arr = ordered_json::array();
  for (Pile v : pos) arr.push_back(v);
  return arr;
}

ordered_json move_json(const Move& mv) {
  ordered_json arr = ordered_json::array();
  for (const auto& [idx, val] : mv.changes)
    arr.push_back(ordered_json{{"pile", idx + 1}, {"new_value", val}});
  return arr;
}

std::string move_text(const Move& mv) {
  std::ostringstream os;
  for (std::size_t i = 0; i < mv.changes.size(); ++i) {
    if (i) os << ' ';
    os << (mv.changes[i].first + 1) << "->" << mv.changes[i].second;
  }
  return os.str();
}

void emit(bool as_json, const ordered_json& record,
          const std::vector<std::string>& lines) {
  if (as_json) {
    std::cout << record.dump(2) << '\n';
  } else {
    for (const std::string& line : lines) std::cout << line << '\n';
  }
}

ordered_json base_record(const std::string& command, ordered_json inputs) {
  return ordered_json{{"command", command}, {"inputs", std::move(inputs)},
                      {"result", ordered_json::object()}};
}

// ---------------------------------------------------------------- sg
int cmd_sg(bool as_json, const std::string& ruleset_name, std::size_t k,
           const std::string& pos_text) {
  const Position pos = parse_position(pos_text);
  const Ruleset ruleset = parse_ruleset(ruleset_name);
  const GameSpec spec{pos.size(), k, ruleset};
  ordered_json record = base_record(
      "sg", {{"ruleset", ruleset_name}, {"k", k}, {"pos", pos_json(pos)}});
  std::vector<std::string> lines;
  if (ruleset == Ruleset::MooreAtMostK) {
    const MooreDigits digits = moore_m(spec, pos);
    const std::string verdict = digits.mvalue == 0   ? "P-position"
                                : digits.mvalue == 1 ? "1-position"
                                                     : "undetermined (M >= 2)";
    record["result"] = {{"m", digits.mvalue}, {"verdict", verdict}};
    lines.push_back("M = " + std::to_string(digits.mvalue));
    lines.push_back("verdict: " + verdict);
  } else {
    const Pile g = sg_value(spec, pos);
    record["result"]["sg"] = g;
    lines.push_back("g = " + std::to_string(g));
    if (spec.n == 2 * spec.k && spec.k >= 2) {
      const SgParams p = sg_params(spec, pos);
      const char* kind = p.kind == SgType::TypeI ? "I" : "II";
      record["result"]["params"] = {{"u", p.u}, {"m", p.m}, {"y", p.y},
                                    {"z", p.z}, {"v", p.v}, {"type", kind}};
      std::ostringstream os;
      os << "params: u=" << p.u << " m=" << p.m << " y=" << p.y << " z=" << p.z
         << " v=" << p.v << " type=" << kind;
      lines.push_back(os.str());
    }
  }
  emit(as_json, record, lines);
  return 0;
}

// ---------------------------------------------------------------- tetris
int cmd_tetris(bool as_json, std::size_t k, const std::string& pos_text) {
  const Position pos = parse_position(pos_text);
  const GameSpec spec{pos.size(), k, Ruleset::ExactK};
  const TetrisProfile profile = tetris_fast(spec, pos);
  ordered_json record =
      base_record("tetris", {{"k", k}, {"pos", pos_json(pos)}});
  record["result"] = {{"tvalue", profile.tvalue},
                      {"xbar", pos_json(profile.xbar)},
                      {"ell", profile.ell},
                      {"alpha", profile.alpha},
                      {"beta", profile.beta}};
  std::vector<std::string> lines;
  lines.push_back("T = " + std::to_string(profile.tvalue));
  lines.push_back("xbar = " + format_position(profile.xbar));
  lines.push_back("ell = " + std::to_string(profile.ell) +
                  ", alpha = " + std::to_string(profile.alpha) +
                  ", beta = " + std::to_string(profile.beta));
  emit(as_json, record, lines);
  return 0;
}

// ---------------------------------------------------------------- move
int cmd_move(bool as_json, const std::string& ruleset_name, std::size_t k,
             const std::string& pos_text, std::optional<Pile> target_sg,
             std::optional<Pile> target_tetris, std::optional<Pile> target_m) {
  const int targets = (target_sg ? 1 : 0) + (target_tetris ? 1 : 0) +
                      (target_m ? 1 : 0);
  if (targets != 1)
    throw CLI::ValidationError(
        "exactly one of --target-sg, --target-tetris, --target-m is required");
  const Position pos = parse_position(pos_text);
  const Ruleset ruleset = parse_ruleset(ruleset_name);
  const GameSpec spec{pos.size(), k, ruleset};

  Move mv;
  std::string target_kind;
  Pile target = 0;
  if (target_m) {
    if (ruleset != Ruleset::MooreAtMostK)
      throw CLI::ValidationError("--target-m requires --ruleset moore");
    if (*target_m > 1)
      throw CLI::ValidationError("--target-m must be 0 or 1");
    mv = *target_m == 0 ? moore_move_to_zero(spec, pos)
                        : moore_move_to_one(spec, pos);
    target_kind = "m";
    target = *target_m;
  } else if (ruleset != Ruleset::ExactK) {
    throw CLI::ValidationError(
        "--target-sg / --target-tetris require --ruleset exact");
  } else if (target_sg) {
    mv = winning_move(spec, pos, *target_sg);
    target_kind = "sg";
    target = *target_sg;
  } else {
    mv = move_to_tetris(spec, pos, *target_tetris);
    target_kind = "tetris";
    target = *target_tetris;
  }

  if (!is_legal_move(spec, pos, mv))
    throw Error(Errc::Internal, "constructed move failed legality recheck");
  const Position succ = apply_move(pos, mv);
  Pile achieved = 0;
  if (target_kind == "sg") achieved = sg_value(spec, succ);
  else if (target_kind == "tetris") achieved = tetris_fast(spec, succ).tvalue;
  else achieved = moore_m(spec, succ).mvalue;
  if (achieved != target)
    throw Error(Errc::Internal, "constructed move missed its target value");

  ordered_json record = base_record(
      "move", {{"ruleset", ruleset_name},
               {"k", k},
               {"pos", pos_json(pos)},
               {"target_" + target_kind, target}});
  record["result"] = {{"move", move_json(mv)},
                      {"successor", pos_json(succ)},
                      {"achieved", achieved}};
  emit(as_json, record,
       {"move: " + move_text(mv), "successor: " + format_position(succ),
        "achieved: " + std::to_string(achieved)});
  return 0;
}

// ---------------------------------------------------------------- verify
struct VerifyOutcome {
  std::size_t positions = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_counterexample;

  void fail(const Position& pos, const std::string& what) {
    if (failures == 0)
      first_counterexample = format_position(pos) + ": " + what;
    ++failures;
  }
};

void verify_sg(const GameSpec& spec, Pile max_pile, VerifyOutcome& out) {
  SgOracle oracle(spec);
  Position pos(spec.n, 0);
  do {
    ++out.positions;
    ++out.checks;
    const Pile expected = oracle.value(pos);
    const Pile got = sg_value(spec, pos);
    if (got != expected)
      out.fail(pos, "sg_value=" + std::to_string(got) + " oracle=" +
                        std::to_string(expected));
  } while (next_sorted(pos, max_pile));
}

void verify_tetris(const GameSpec& spec, Pile max_pile, VerifyOutcome& out) {
  Position pos(spec.n, 0);
  do {
    ++out.positions;
    ++out.checks;
    const Pile fast = tetris_fast(spec, pos).tvalue;
    const Pile slow = tetris_oracle(spec, pos);
    if (fast != slow) {
      out.fail(pos, "tetris_fast=" + std::to_string(fast) + " oracle=" +
                        std::to_string(slow));
    } else if (!tetris_certificate(spec, pos, fast) ||
               tetris_certificate(spec, pos, fast + 1)) {
      out.fail(pos, "certificate inconsistent at T=" + std::to_string(fast));
    }
  } while (next_sorted(pos, max_pile));
}

void verify_corollary3(const GameSpec& spec, Pile max_pile, VerifyOutcome& out) {
  SgOracle oracle(spec);
  Position pos(spec.n, 0);
  do {
    ++out.positions;
    ++out.checks;
    const Pile g = oracle.value(pos);
    if (is_p_position(spec, pos) != (g == 0))
      out.fail(pos, "P-position predicate disagrees with oracle g=" +
                        std::to_string(g));
    else if (is_one_position(spec, pos) != (g == 1))
      out.fail(pos, "1-position predicate disagrees with oracle g=" +
                        std::to_string(g));
  } while (next_sorted(pos, max_pile));
}

void verify_moore01(const GameSpec& spec, Pile max_pile, VerifyOutcome& out) {
  SgOracle oracle(spec);
  Position pos(spec.n, 0);
  do {
    ++out.positions;
    ++out.checks;
    const Pile g = oracle.value(pos);
    const Pile m = moore_m(spec, pos).mvalue;
    if ((g == 0) != (m == 0) || (g == 1) != (m == 1))
      out.fail(pos, "g=" + std::to_string(g) + " M=" + std::to_string(m));
  } while (next_sorted(pos, max_pile));
}

void verify_moves(const GameSpec& spec, Pile max_pile, VerifyOutcome& out) {
  SgOracle oracle(spec);
  Position pos(spec.n, 0);
  do {
    ++out.positions;
    const Pile g = sg_value(spec, pos);
    for (const Position& succ : successors(spec, pos)) {
      ++out.checks;
      if (sg_value(spec, succ) == g) {
        out.fail(pos, "a move preserves the value g=" + std::to_string(g));
        break;
      }
    }
    for (Pile delta = 0; delta < g; ++delta) {
      ++out.checks;
      const Move mv = winning_move(spec, pos, delta);
      if (!is_legal_move(spec, pos, mv)) {
        out.fail(pos, "illegal move for delta=" + std::to_string(delta));
        continue;
      }
      const Position succ = apply_move(pos, mv);
      if (sg_value(spec, succ) != delta || oracle.value(succ) != delta)
        out.fail(pos, "move misses delta=" + std::to_string(delta));
    }
  } while (next_sorted(pos, max_pile));
}

int cmd_verify(bool as_json, const std::string& ruleset_name, std::size_t n,
               std::size_t k, Pile max_pile, const std::string& check) {
  const Ruleset ruleset = parse_ruleset(ruleset_name);
  const GameSpec spec{n, k, ruleset};
  validate(spec, Position(n, 0));
  VerifyOutcome out;
  if (check == "sg") {
    if (ruleset != Ruleset::ExactK)
      throw CLI::ValidationError("--check sg requires --ruleset exact");
    verify_sg(spec, max_pile, out);
  } else if (check == "tetris") {
    verify_tetris(spec, max_pile, out);
  } else if (check == "corollary3") {
    verify_corollary3(spec, max_pile, out);
  } else if (check == "moore01") {
    if (ruleset != Ruleset::MooreAtMostK)
      throw CLI::ValidationError("--check moore01 requires --ruleset moore");
    verify_moore01(spec, max_pile, out);
  } else if (check == "moves") {
    if (ruleset != Ruleset::ExactK)
      throw CLI::ValidationError("--check moves requires --ruleset exact");
    verify_moves(spec, max_pile, out);
  } else {
    throw CLI::ValidationError(
        "--check must be one of sg, moves, moore01, corollary3, tetris");
  }

  ordered_json record = base_record(
      "verify", {{"ruleset", ruleset_name}, {"n", n}, {"k", k},
                 {"max", max_pile}, {"check", check}});
  record["result"] = {{"positions", out.positions},
                      {"checks", out.checks},
                      {"mismatches", out.failures}};
  std::vector<std::string> lines = {
      std::to_string(out.failures) + " mismatches over " +
      std::to_string(out.positions) + " positions (" +
      std::to_string(out.checks) + " checks)"};
  if (out.failures > 0) {
    record["result"]["first_counterexample"] = out.first_counterexample;
    lines.push_back("first counterexample: " + out.first_counterexample);
  }
  emit(as_json, record, lines);
  return out.failures > 0 ? 3 : 0;
}

// ---------------------------------------------------------------- table
int cmd_table(bool as_json, const std::string& ruleset_name, std::size_t n,
              std::size_t k, Pile max_pile, const std::string& out_path,
              const std::string& format) {
  const Ruleset ruleset = parse_ruleset(ruleset_name);
  const GameSpec spec{n, k, ruleset};
  validate(spec, Position(n, 0));
  const bool formula_supported =
      ruleset == Ruleset::ExactK && (k == 1 || 2 * k >= n);
  const std::string source = formula_supported ? "formula" : "oracle";

  std::vector<TableRow> rows;
  if (formula_supported) {
    Position pos(n, 0);
    do {
      rows.push_back({pos, static_cast<unsigned>(sg_value(spec, pos))});
    } while (next_sorted(pos, max_pile));
  } else {
    rows = build_table(spec, max_pile);
  }

  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 1;
  }
  if (format == "csv") {
    file << table_to_csv(rows, source);
  } else if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const TableRow& row : rows)
      arr.push_back(ordered_json{{"pos", pos_json(row.pos)},
                                 {"sg", row.sg},
                                 {"source", source}});
    file << arr.dump(2) << '\n';
  } else {
    throw CLI::ValidationError("--format must be csv or json");
  }
  if (!file.good()) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return 1;
  }

  ordered_json record = base_record(
      "table", {{"ruleset", ruleset_name}, {"n", n}, {"k", k},
                {"max", max_pile}, {"format", format}});
  record["result"] = {{"path", out_path}, {"rows", rows.size()},
                      {"source", source}};
  emit(as_json, record,
       {"wrote " + std::to_string(rows.size()) + " rows (" + source +
        ") to " + out_path});
  return 0;
}

// ---------------------------------------------------------------- degseq
int cmd_degseq(bool as_json, std::size_t k, const std::string& pos_text,
               bool do_realize, bool do_correct) {
  const Position degrees = parse_position(pos_text);
  const bool realizable = is_realizable(degrees, k);
  ordered_json record =
      base_record("degseq", {{"k", k}, {"pos", pos_json(degrees)}});
  record["result"]["realizable"] = realizable;
  std::vector<std::string> lines = {realizable ? "realizable"
                                               : "not realizable"};
  if (do_realize) {
    const Hypergraph edges = realize(degrees, k);
    ordered_json earr = ordered_json::array();
    for (const auto& edge : edges) {
      ordered_json one = ordered_json::array();
      std::ostringstream os;
      for (std::size_t i = 0; i < edge.size(); ++i) {
        if (i) os << ' ';
        os << (edge[i] + 1);
        one.push_back(edge[i] + 1);
      }
      earr.push_back(std::move(one));
      lines.push_back(os.str());
    }
    record["result"]["edges"] = std::move(earr);
  }
  if (do_correct) {
    const Position corrected = minimal_correction(degrees, k);
    record["result"]["corrected"] = pos_json(corrected);
    lines.push_back("corrected: " + format_position(corrected));
  }
  emit(as_json, record, lines);
  return 0;
}

// ---------------------------------------------------------------- play
std::size_t nonzero_count(const Position& pos) {
  std::size_t count = 0;
  for (Pile v : pos) count += v > 0 ? 1 : 0;
  return count;
}

Move slow_move_on_largest(const GameSpec& spec, const Position& pos) {
  const SortedView view = normalize(pos);
  Move mv;
  for (std::size_t i = spec.n - spec.k; i < spec.n; ++i)
    mv.changes.emplace_back(view.perm[i], view.sorted[i] - 1);
  std::sort(mv.changes.begin(), mv.changes.end());
  return mv;
}

std::optional<Move> parse_human_move(const std::string& line) {
  Move mv;
  std::istringstream is(line);
  std::string token;
  while (is >> token) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) return std::nullopt;
    try {
      const unsigned long long idx = std::stoull(token.substr(0, eq));
      const unsigned long long val = std::stoull(token.substr(eq + 1));
      if (idx == 0) return std::nullopt;
      mv.changes.emplace_back(static_cast<std::size_t>(idx - 1),
                              static_cast<Pile>(val));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (mv.changes.empty()) return std::nullopt;
  std::sort(mv.changes.begin(), mv.changes.end());
  return mv;
}

int cmd_play(std::size_t k, const std::string& pos_text, bool engine_first) {
  Position pos = parse_position(pos_text);
  const GameSpec spec{pos.size(), k, Ruleset::ExactK};
  validate(spec, pos);
  if (spec.k != 1 && 2 * spec.k < spec.n)
    throw Error(Errc::UnsupportedCase,
                "play needs a solvable spec: k == 1 or 2k >= n");
  bool engines_turn = engine_first;
  while (true) {
    std::cout << "position: " << format_position(pos) << '\n';
    if (nonzero_count(pos) < spec.k) {
      std::cout << "no legal moves left; "
                << (engines_turn ? "engine" : "you") << " cannot move; "
                << (engines_turn ? "you win" : "engine wins") << '\n';
      return 0;
    }
    if (engines_turn) {
      const Pile g = sg_value(spec, pos);
      const Move mv =
          g > 0 ? winning_move(spec, pos, 0) : slow_move_on_largest(spec, pos);
      std::cout << "engine plays: " << move_text(mv) << '\n';
      pos = apply_move(pos, mv);
    } else {
      std::cout << "your move (" << spec.k << " piles as i=v ...): "
                << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "\nbye\n";
        return 0;
      }
      const std::optional<Move> mv = parse_human_move(line);
      if (!mv || !is_legal_move(spec, pos, *mv)) {
        std::cout << "illegal move; strictly reduce exactly " << spec.k
                  << " distinct piles (1-based), e.g. 1=0 2=0\n";
        continue;
      }
      pos = apply_move(pos, *mv);
    }
    engines_turn = !engines_turn;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solver for exact-k and Moore take-away games"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON object on stdout");

  std::string ruleset = "exact";
  std::size_t n = 0, k = 0;
  std::string pos_text, check = "sg", out_path, format = "csv";
  Pile max_pile = 0;
  std::optional<Pile> target_sg, target_tetris, target_m;
  bool do_realize = false, do_correct = false, engine_first = false;

  CLI::App* sg = app.add_subcommand("sg", "Sprague-Grundy / Moore value");
  sg->add_option("--ruleset", ruleset)->check(CLI::IsMember({"exact", "moore"}));
  sg->add_option("--k", k)->required();
  sg->add_option("--pos", pos_text)->required();

  CLI::App* tetris = app.add_subcommand("tetris", "tetris value and bar shift");
  tetris->add_option("--k", k)->required();
  tetris->add_option("--pos", pos_text)->required();

  CLI::App* move = app.add_subcommand("move", "construct a move to a target value");
  move->add_option("--ruleset", ruleset)->check(CLI::IsMember({"exact", "moore"}));
  move->add_option("--k", k)->required();
  move->add_option("--pos", pos_text)->required();
  move->add_option("--target-sg", target_sg);
  move->add_option("--target-tetris", target_tetris);
  move->add_option("--target-m", target_m);

  CLI::App* verify = app.add_subcommand("verify", "cross-check formulas against the oracle");
  verify->add_option("--ruleset", ruleset)->check(CLI::IsMember({"exact", "moore"}));
  verify->add_option("--n", n)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--max", max_pile)->required();
  verify->add_option("--check", check)
      ->check(CLI::IsMember({"sg", "moves", "moore01", "corollary3", "tetris"}));

  CLI::App* table = app.add_subcommand("table", "export an exhaustive value table");
  table->add_option("--ruleset", ruleset)->check(CLI::IsMember({"exact", "moore"}));
  table->add_option("--n", n)->required();
  table->add_option("--k", k)->required();
  table->add_option("--max", max_pile)->required();
  table->add_option("--out", out_path)->required();
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  CLI::App* play = app.add_subcommand("play", "interactive exact-k match");
  play->add_option("--k", k)->required();
  play->add_option("--pos", pos_text)->required();
  play->add_flag("--engine-first", engine_first);

  CLI::App* degseq = app.add_subcommand("degseq", "degree-sequence realizability");
  degseq->add_option("--k", k)->required();
  degseq->add_option("--pos", pos_text)->required();
  degseq->add_flag("--realize", do_realize);
  degseq->add_flag("--correct", do_correct);

  // let global flags like --json appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(sg)) return cmd_sg(as_json, ruleset, k, pos_text);
    if (app.got_subcommand(tetris)) return cmd_tetris(as_json, k, pos_text);
    if (app.got_subcommand(move))
      return cmd_move(as_json, ruleset, k, pos_text, target_sg, target_tetris,
                      target_m);
    if (app.got_subcommand(verify))
      return cmd_verify(as_json, ruleset, n, k, max_pile, check);
    if (app.got_subcommand(table))
      return cmd_table(as_json, ruleset, n, k, max_pile, out_path, format);
    if (app.got_subcommand(play)) return cmd_play(k, pos_text, engine_first);
    if (app.got_subcommand(degseq))
      return cmd_degseq(as_json, k, pos_text, do_realize, do_correct);
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const Error& err) {
    std::cerr << "error [" << errc_name(err.code()) << "]: " << err.what()
              << '\n';
    return exit_code_for(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 1;
}
