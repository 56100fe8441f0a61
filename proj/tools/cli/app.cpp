// Copyright 2026 The Hypergame Rationaliser Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "hypergame/hypergame.hpp"
#include "report.hpp"

namespace hypergame::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  using Error::Error;
};

// Options shared by every subcommand.
struct CommonOptions {
  std::string path;
  bool json = false;
  std::string out_file;
};

struct SolveOptions {
  bool ordinal = false;
  bool cardinal = false;
};

struct RationaliseFlags {
  std::string target;
  std::string concept_name = "strong";
  int level = 2;
  std::string attitudes_own;
  std::string attitudes_opp;
  bool enumerate_ranks = false;
  bool enumerate_opp_actions = false;
  bool allow_joint = false;
  bool non_strict = false;
  std::string own_actions = "full";
  std::vector<std::string> fix_views;
  std::uint64_t max_candidates = 10'000'000;
  unsigned jobs = 1;
};

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError("cannot read '" + path + "': no such file");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

// Paths given next to an input file may be relative to that file.
std::string resolve_sibling(const std::string& input, const std::string& path) {
  std::error_code ec;
  if (fs::exists(path, ec)) return path;
  fs::path sibling = fs::path(input).parent_path() / path;
  if (!fs::path(path).is_absolute() && fs::exists(sibling, ec)) return sibling.string();
  return path;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

StrategyProfile parse_target(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2 || !is_symbol(parts[0]) || !is_symbol(parts[1])) {
    throw ConfigError("--target expects ROW_ACTION,COLUMN_ACTION, got '" + text + "'");
  }
  return {{parts[0]}, {parts[1]}};
}

std::optional<std::vector<Attitude>> parse_attitudes(const std::string& text,
                                                     const std::string& flag) {
  if (text.empty()) return std::nullopt;
  std::vector<Attitude> out;
  for (const auto& token : split(text, ',')) {
    auto a = parse_attitude(token);
    if (!a) throw ConfigError(flag + ": unknown attitude '" + token + "' (expected so, po, no, jo)");
    if (std::find(out.begin(), out.end(), *a) == out.end()) out.push_back(*a);
  }
  return out;
}

std::string join(const std::vector<Attitude>& attitudes) {
  std::string out;
  for (auto a : attitudes) out += (out.empty() ? "" : ",") + std::string(to_string(a));
  return out;
}

MatrixReport matrix(std::string label, std::string owner, const RankTable& table) {
  return {std::move(label), std::move(owner), table, nash_equilibria(table)};
}

void emit(const Report& report, const CommonOptions& common, std::ostream& out) {
  if (!common.out_file.empty()) {
    std::ofstream file(common.out_file, std::ios::binary);
    if (!file) throw IoError("cannot write '" + common.out_file + "'");
    file << to_json(report).dump(2) << "\n";
    if (!file) throw IoError("error writing '" + common.out_file + "'");
  }
  if (common.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
}

Report base_report(const std::string& command, const std::string& path) {
  Report report;
  report.command = command;
  report.input_path = path;
  return report;
}

void add_warnings(Report& report, const dsl::ProblemSpec& spec) {
  for (const auto& w : spec.warnings) report.warnings.push_back(dsl::format(w, report.input_path));
}

int cmd_validate(const CommonOptions& common, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(common.path);
  Report report = base_report("validate", common.path);
  report.validate.emplace();
  int code = kExitOk;
  try {
    dsl::ProblemSpec spec = dsl::parse(text);
    report.input_canonical = dsl::render(spec);
    add_warnings(report, spec);
    report.validate->valid = true;
  } catch (const dsl::ParseError& e) {
    report.validate->valid = false;
    for (const auto& d : e.diagnostics()) {
      report.validate->diagnostics.push_back(dsl::format(d, common.path));
      err << "error: " << report.validate->diagnostics.back() << "\n";
    }
    code = kExitInputError;
  }
  emit(report, common, out);
  return code;
}

int cmd_render(const CommonOptions& common, std::ostream& out) {
  dsl::ProblemSpec spec = dsl::parse(read_file(common.path));
  out << dsl::render(spec);
  return kExitOk;
}

int cmd_solve(const CommonOptions& common, const SolveOptions& flags, std::ostream& out) {
  dsl::ProblemSpec spec = dsl::parse(read_file(common.path));
  Report report = base_report("solve", common.path);
  report.input_canonical = dsl::render(spec);
  add_warnings(report, spec);

  const bool use_declared =
      flags.ordinal || (!flags.cardinal && !spec.declared_views.empty());
  if (use_declared && spec.declared_views.empty()) {
    throw ConfigError("--ordinal needs utility facts in the input");
  }
  SolveSection section;
  section.mode = use_declared ? "ordinal" : "cardinal";
  if (use_declared) {
    for (const auto& v : spec.declared_views) {
      Role role = spec.base.find_player(v.owner())->role;
      section.views.push_back(
          matrix("utility view of " + std::string(to_string(role)), v.owner().name, v.table()));
    }
  } else {
    section.views.push_back(matrix("base game (ordinal ranks of payoffs)", "",
                                   ordinal_from_cardinal(spec.base)));
  }
  report.configuration.emplace_back("mode", section.mode);
  report.solve = std::move(section);
  emit(report, common, out);
  return kExitOk;
}

std::size_t index_in(const std::vector<SubjectiveGame>& list, const SubjectiveGame& g) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), g) - list.begin());
}

int cmd_rationalise(const CommonOptions& common, const RationaliseFlags& flags, std::ostream& out,
                    std::ostream& err) {
  dsl::ProblemSpec spec = dsl::parse(read_file(common.path));
  const BaseGame& base = spec.base;
  Report report = base_report("rationalise", common.path);
  report.input_canonical = dsl::render(spec);
  add_warnings(report, spec);

  StrategyProfile target;
  if (!flags.target.empty()) {
    target = parse_target(flags.target);
    if (spec.target && *spec.target != target) {
      std::string w = "--target overrides the chosen fact (" + spec.target->row_action.name + ", " +
                      spec.target->col_action.name + ")";
      err << "warning: " << w << "\n";
      report.warnings.push_back(w);
    }
  } else if (spec.target) {
    target = *spec.target;
  } else {
    throw ConfigError("no target profile: pass --target or add a chosen fact");
  }
  if (ValidationReport v = validate_problem(base.describe(), target); !v.ok()) {
    throw ValidationError(std::move(v.violations));
  }

  ConstraintSet constraints;
  if (flags.concept_name == "strong") {
    constraints.solution_concept = SolutionConcept::strong_hne;
  } else if (flags.concept_name == "weak") {
    constraints.solution_concept = SolutionConcept::weak_hne;
  } else {
    throw ConfigError("--concept expects strong or weak");
  }
  constraints.level = flags.level;
  constraints.allow_joint_enumeration = flags.allow_joint;

  auto own_att = parse_attitudes(flags.attitudes_own, "--attitudes-own");
  auto opp_att = parse_attitudes(flags.attitudes_opp, "--attitudes-opp");
  OwnActionPolicy policy;
  if (flags.own_actions == "full") {
    policy = OwnActionPolicy::full_options;
  } else if (flags.own_actions == "contains-target") {
    policy = OwnActionPolicy::contains_own_component;
  } else {
    throw ConfigError("--own-actions expects full or contains-target");
  }

  std::map<PlayerId, SubjectiveGame> fixed;
  std::vector<std::pair<std::string, std::string>> fixed_sources;
  for (const auto& item : flags.fix_views) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ConfigError("--fix-view expects PLAYER=FILE, got '" + item + "'");
    }
    PlayerId player{item.substr(0, eq)};
    const Player* p = base.find_player(player);
    if (!p) throw ConfigError("--fix-view: unknown player '" + player.name + "'");
    const std::string file = resolve_sibling(common.path, item.substr(eq + 1));
    const std::string view_text = read_file(file);
    auto parse_view = [&] {
      try {
        return dsl::parse(view_text);
      } catch (const dsl::ParseError& e) {
        throw ConfigError("--fix-view: " + dsl::format(e.diagnostics().front(), file));
      }
    };
    const dsl::ProblemSpec view_spec = parse_view();
    const SubjectiveGame* view = view_spec.declared_view(p->role);
    if (!view) {
      throw ConfigError("--fix-view: '" + file + "' declares no utility view for role " +
                        std::string(to_string(p->role)));
    }
    if (fixed.contains(player)) throw ConfigError("--fix-view given twice for '" + player.name + "'");
    fixed.emplace(player, SubjectiveGame::create(base, player, view->table()));
    fixed_sources.emplace_back(player.name, file);
  }

  for (const auto& p : base.players()) {
    PlayerConstraints entry;
    entry.player = p.id;
    if (auto it = fixed.find(p.id); it != fixed.end()) {
      entry.fixed_game = it->second;
      constraints.players.push_back(std::move(entry));
      continue;
    }
    entry.enumerate_rank_tables = flags.enumerate_ranks;
    entry.enumerate_believed_opponent_actions = flags.enumerate_opp_actions;
    entry.own_rank_attitudes = own_att;
    entry.believed_opponent_rank_attitudes = opp_att;
    entry.own_action_policy = policy;
    entry.strict_ranks = !flags.non_strict;
    if (const SubjectiveGame* declared = spec.declared_view(p.role); declared && !flags.enumerate_ranks) {
      const RankTable& t = declared->table();
      const bool full = t.rows() == base.row_options() && t.cols() == base.col_options();
      if (full) {
        entry.reference_ranks = t;
      } else if (!flags.enumerate_opp_actions && policy == OwnActionPolicy::full_options) {
        entry.fixed_game = *declared;
      } else {
        throw ConfigError("declared view of '" + p.id.name +
                          "' does not cover the base game and cannot be restricted");
      }
    }
    constraints.players.push_back(std::move(entry));
  }

  report.configuration = {
      {"target", target.row_action.name + "," + target.col_action.name},
      {"concept", std::string(to_string(constraints.solution_concept))},
      {"level", std::to_string(constraints.level)},
      {"enumerate_ranks", flags.enumerate_ranks ? "true" : "false"},
      {"enumerate_opp_actions", flags.enumerate_opp_actions ? "true" : "false"},
      {"attitudes_own", own_att ? join(*own_att) : "any"},
      {"attitudes_opp", opp_att ? join(*opp_att) : "any"},
      {"own_actions", std::string(to_string(policy))},
      {"strict_ranks", flags.non_strict ? "false" : "true"},
      {"max_candidates", std::to_string(flags.max_candidates)},
  };
  for (const auto& [player, file] : fixed_sources) {
    report.configuration.emplace_back("fixed_view." + player, file);
  }

  check_consistency(constraints, base);
  double estimate = 0;
  for (const auto& p : base.players()) {
    estimate += estimate_candidates(base, target, constraints.entry_for(p.id));
  }

  RationaliseOptions options;
  options.max_candidates = flags.max_candidates;
  options.jobs = std::max(1u, flags.jobs);
  RationalisationResult result = rationalise(base, target, constraints, options);

  RationaliseSection section;
  section.target = target;
  section.concept_name = std::string(to_string(result.solution_concept));
  section.level = result.level;
  section.candidate_estimate = estimate;
  for (const auto& p : result.players) {
    PlayerSection ps;
    ps.player = p.player;
    ps.action_spaces = p.action_spaces;
    ps.generated = p.generated;
    ps.admitted = p.admitted.size();
    for (std::size_t i = 0; i < p.retained.size(); ++i) {
      ps.retained.push_back(
          matrix("candidate " + std::to_string(i + 1), p.player.id.name, p.retained[i].table()));
    }
    section.players.push_back(std::move(ps));
  }
  for (const auto& h : result.hypergames) {
    HypergameEntry entry;
    for (std::size_t i = 0; i < h.views().size(); ++i) {
      entry.picks.push_back(index_in(result.players[i].retained, h.views()[i]));
    }
    section.hypergames.push_back(std::move(entry));
  }
  report.rationalise = std::move(section);
  emit(report, common, out);
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("file", common.path, "Hypergame description (.hg)")->required();
  cmd->add_flag("--json", common.json, "Print the machine-readable report");
  cmd->add_option("--out", common.out_file, "Also write the machine-readable report to a file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergame rationalisation for 2-player normal-form games", "hgr"};
  app.require_subcommand(1);

  CommonOptions common;
  SolveOptions solve;
  RationaliseFlags rat;

  auto* validate = app.add_subcommand("validate", "Check a description and report diagnostics");
  add_common(validate, common);

  auto* render = app.add_subcommand("render", "Print the canonical form of a description");
  render->add_option("file", common.path, "Hypergame description (.hg)")->required();

  auto* solve_cmd = app.add_subcommand("solve", "List pure Nash equilibria");
  add_common(solve_cmd, common);
  auto* ordinal = solve_cmd->add_flag("--ordinal", solve.ordinal, "Solve the declared utility views");
  auto* cardinal = solve_cmd->add_flag("--cardinal", solve.cardinal, "Solve the base payoffs");
  ordinal->excludes(cardinal);

  auto* rationalise_cmd =
      app.add_subcommand("rationalise", "Recover hypergames under which a profile is rational");
  rationalise_cmd->alias("rationalize");
  add_common(rationalise_cmd, common);
  rationalise_cmd->add_option("--target", rat.target, "Profile as ROW_ACTION,COLUMN_ACTION");
  rationalise_cmd->add_option("--concept", rat.concept_name, "strong or weak")
      ->check(CLI::IsMember({"strong", "weak"}));
  rationalise_cmd->add_option("--level", rat.level, "Hypergame level (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  rationalise_cmd->add_option("--attitudes-own", rat.attitudes_own,
                              "Allowed own attitudes, e.g. so,po,no,jo");
  rationalise_cmd->add_option("--attitudes-opp", rat.attitudes_opp,
                              "Allowed believed opponent attitudes");
  rationalise_cmd->add_flag("--enumerate-ranks", rat.enumerate_ranks,
                            "Enumerate rank tables");
  rationalise_cmd->add_flag("--enumerate-opp-actions", rat.enumerate_opp_actions,
                            "Enumerate believed opponent action sets");
  rationalise_cmd->add_flag("--allow-joint", rat.allow_joint,
                            "Permit enumerating ranks and opponent actions together");
  rationalise_cmd->add_flag("--non-strict", rat.non_strict, "Allow tied ranks when enumerating");
  rationalise_cmd->add_option("--own-actions", rat.own_actions, "full or contains-target")
      ->check(CLI::IsMember({"full", "contains-target"}));
  rationalise_cmd->add_option("--fix-view", rat.fix_views,
                              "PLAYER=FILE: use FILE's utility view for PLAYER verbatim");
  rationalise_cmd->add_option("--max-candidates", rat.max_candidates,
                              "Refuse runs whose candidate estimate exceeds N");
  rationalise_cmd->add_option("--jobs", rat.jobs, "Worker threads for filtering")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"hgr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(common, out, err);
    if (render->parsed()) return cmd_render(common, out);
    if (solve_cmd->parsed()) return cmd_solve(common, solve, out);
    if (rationalise_cmd->parsed()) return cmd_rationalise(common, rat, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const dsl::ParseError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << dsl::format(d, common.path) << "\n";
    return kExitInputError;
  } catch (const CandidateBudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace hypergame::cli
