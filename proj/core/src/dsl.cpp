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

#include "hypergame/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace hypergame::dsl {

namespace {

enum class TokenKind { identifier, number, lparen, rparen, comma, dot, end };

struct Token {
  TokenKind kind;
  std::string_view text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::end: return "end of input";
    default: return "'" + std::string(t.text) + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    SourcePos pos{line_, column_};
    if (at_ >= text_.size()) return {TokenKind::end, {}, pos};
    const char c = text_[at_];
    const std::size_t start = at_;
    auto single = [&](TokenKind kind) {
      advance();
      return Token{kind, text_.substr(start, 1), pos};
    };
    switch (c) {
      case '(': return single(TokenKind::lparen);
      case ')': return single(TokenKind::rparen);
      case ',': return single(TokenKind::comma);
      case '.': return single(TokenKind::dot);
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      while (at_ < text_.size() && is_ident_char(text_[at_])) advance();
      return {TokenKind::identifier, text_.substr(start, at_ - start), pos};
    }
    if (is_digit(c) || (c == '-' && at_ + 1 < text_.size() && is_digit(text_[at_ + 1]))) {
      advance();
      while (at_ < text_.size() && is_digit(text_[at_])) advance();
      if (at_ + 1 < text_.size() && text_[at_] == '.' && is_digit(text_[at_ + 1])) {
        advance();
        while (at_ < text_.size() && is_digit(text_[at_])) advance();
      }
      if (at_ < text_.size() && is_ident_char(text_[at_])) {
        throw ParseError({{{line_, column_}, "lexical error: malformed number"}});
      }
      return {TokenKind::number, text_.substr(start, at_ - start), pos};
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                            ? "byte 0x" + hex(static_cast<unsigned char>(c))
                            : "'" + std::string(1, c) + "'";
    throw ParseError({{pos, "lexical error: unexpected character " + shown}});
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || is_digit(c) || c == '_' || (c >= 'A' && c <= 'Z');
  }
  static std::string hex(unsigned char c) {
    const char* digits = "0123456789abcdef";
    return {digits[c >> 4], digits[c & 15]};
  }

  void advance() {
    if (text_[at_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++at_;
  }

  void skip_blank() {
    while (at_ < text_.size()) {
      const char c = text_[at_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '%') {
        while (at_ < text_.size() && text_[at_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t at_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class FactParser {
 public:
  explicit FactParser(std::string_view text) : lexer_(text) { shift(); }

  std::vector<Fact> run() {
    std::vector<Fact> facts;
    while (current_.kind != TokenKind::end) facts.push_back(fact());
    return facts;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError({{current_.pos, "syntax error: expected " + expected + ", found " +
                                         describe(current_)}});
  }

  Token expect(TokenKind kind, const std::string& what) {
    if (current_.kind != kind) fail(what);
    Token t = current_;
    shift();
    return t;
  }

  Fact fact() {
    Token name = expect(TokenKind::identifier, "a predicate name");
    Fact f{std::string(name.text), {}, name.pos};
    expect(TokenKind::lparen, "'('");
    f.args.push_back(term());
    while (current_.kind == TokenKind::comma) {
      shift();
      f.args.push_back(term());
    }
    expect(TokenKind::rparen, "',' or ')'");
    expect(TokenKind::dot, "'.' ending the fact");
    return f;
  }

  Term term() {
    Term t;
    t.pos = current_.pos;
    t.text = std::string(current_.text);
    if (current_.kind == TokenKind::identifier) {
      if (!is_symbol(t.text)) {
        throw ParseError({{t.pos, "lexical error: identifiers must match [a-z][a-z0-9_]*, found '" +
                                      t.text + "'"}});
      }
      t.kind = Term::Kind::symbol;
    } else if (current_.kind == TokenKind::number) {
      t.kind = Term::Kind::number;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(t.value)) {
        throw ParseError({{t.pos, "lexical error: number out of range '" + t.text + "'"}});
      }
      t.integral = t.text.find('.') == std::string::npos;
    } else {
      fail("a symbol or number");
    }
    shift();
    return t;
  }

  Lexer lexer_;
  Token current_{TokenKind::end, {}, {}};
};

// Turns checked facts into a problem, accumulating diagnostics.
class Builder {
 public:
  explicit Builder(const std::vector<Fact>& facts) : facts_(facts) {}

  ProblemSpec build() {
    collect_players();
    collect_options();
    collect_payoffs();
    collect_target();
    collect_utilities();
    fail_if_errors();

    ValidationReport report = validate_problem(game_, target_);
    if (!report.ok()) {
      for (auto& v : report.violations) errors_.push_back({{}, std::move(v)});
    }
    fail_if_errors();

    BaseGame base = BaseGame::create(game_);
    std::vector<SubjectiveGame> views = assemble_views(base);
    fail_if_errors();

    ProblemSpec spec{std::move(base), target_, std::move(views), {}, std::move(warnings_)};
    for (const auto& f : facts_) spec.spans.push_back({f.predicate, f.pos});
    return spec;
  }

 private:
  void error(const SourcePos& pos, std::string message) {
    errors_.push_back({pos, std::move(message)});
  }

  void fail_if_errors() {
    if (errors_.empty()) return;
    std::stable_sort(errors_.begin(), errors_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.pos < b.pos; });
    throw ParseError(std::move(errors_));
  }

  template <typename Fn>
  void each(std::string_view predicate, Fn&& fn) {
    for (const auto& f : facts_) {
      if (f.predicate == predicate) fn(f);
    }
  }

  bool symbol_arg(const Term& t, std::string_view what) {
    if (t.kind == Term::Kind::symbol) return true;
    error(t.pos, "expected " + std::string(what) + ", found number '" + t.text + "'");
    return false;
  }

  bool number_arg(const Term& t) {
    if (t.kind == Term::Kind::number) return true;
    error(t.pos, "expected a number, found '" + t.text + "'");
    return false;
  }

  std::optional<Role> role_arg(const Term& t) {
    if (!symbol_arg(t, "a role")) return std::nullopt;
    auto role = parse_role(t.text);
    if (!role) error(t.pos, "unknown role '" + t.text + "' (expected row or column)");
    return role;
  }

  bool declared(Role role, const std::string& name) const {
    const auto& list = role == Role::row ? game_.row_options : game_.col_options;
    return std::find(list.begin(), list.end(), OptionId{name}) != list.end();
  }

  bool option_arg(const Term& t, Role role) {
    if (!symbol_arg(t, "an option")) return false;
    if (declared(role, t.text)) return true;
    error(t.pos, "undeclared option '" + t.text + "' for role " + std::string(to_string(role)));
    return false;
  }

  void collect_players() {
    std::vector<std::pair<PlayerId, SourcePos>> order;
    each("player", [&](const Fact& f) {
      if (!symbol_arg(f.args[0], "a player name")) return;
      PlayerId id{f.args[0].text};
      for (const auto& [seen, pos] : order) {
        if (seen == id) {
          error(f.pos, "duplicate player '" + id.name + "'");
          return;
        }
      }
      order.emplace_back(id, f.pos);
    });

    std::map<PlayerId, std::pair<Role, SourcePos>> roles;
    each("role", [&](const Fact& f) {
      if (!symbol_arg(f.args[0], "a player name")) return;
      auto role = role_arg(f.args[1]);
      if (!role) return;
      PlayerId id{f.args[0].text};
      if (std::none_of(order.begin(), order.end(), [&](const auto& p) { return p.first == id; })) {
        error(f.args[0].pos, "role assigned to undeclared player '" + id.name + "'");
        return;
      }
      auto [it, inserted] = roles.emplace(id, std::make_pair(*role, f.pos));
      if (!inserted && it->second.first != *role) {
        error(f.pos, "conflicting role assignment for player '" + id.name + "'");
      }
    });

    std::map<Role, PlayerId> holders;
    for (const auto& [id, pos] : order) {
      auto it = roles.find(id);
      if (it == roles.end()) {
        error(pos, "player '" + id.name + "' has no role");
        continue;
      }
      auto [h, inserted] = holders.emplace(it->second.first, id);
      if (!inserted) {
        error(it->second.second, "conflicting role assignment: players '" + h->second.name +
                                     "' and '" + id.name + "' both hold role " +
                                     std::string(to_string(it->second.first)));
      }
      game_.players.push_back({id, it->second.first});
    }
  }

  void collect_options() {
    each("option", [&](const Fact& f) {
      auto role = role_arg(f.args[0]);
      if (!role || !symbol_arg(f.args[1], "an option")) return;
      if (declared(*role, f.args[1].text)) {
        error(f.pos, "duplicate option '" + f.args[1].text + "' for role " +
                         std::string(to_string(*role)));
        return;
      }
      (*role == Role::row ? game_.row_options : game_.col_options).push_back({f.args[1].text});
    });
  }

  void collect_payoffs() {
    std::set<std::pair<std::string, std::string>> seen;
    each("payoff", [&](const Fact& f) {
      bool ok = option_arg(f.args[0], Role::row);
      ok = option_arg(f.args[1], Role::column) && ok;
      ok = number_arg(f.args[2]) && ok;
      ok = number_arg(f.args[3]) && ok;
      if (!ok) return;
      if (!seen.emplace(f.args[0].text, f.args[1].text).second) {
        error(f.pos, "duplicate payoff cell (" + f.args[0].text + ", " + f.args[1].text + ")");
        return;
      }
      game_.payoffs.push_back(
          {{{f.args[0].text}, {f.args[1].text}}, {f.args[2].value, f.args[3].value}});
    });
  }

  void collect_target() {
    each("chosen", [&](const Fact& f) {
      bool ok = option_arg(f.args[0], Role::row);
      ok = option_arg(f.args[1], Role::column) && ok;
      if (!ok) return;
      if (target_) {
        error(f.pos, "multiple chosen facts");
        return;
      }
      target_ = StrategyProfile{{f.args[0].text}, {f.args[1].text}};
    });
    each("nash", [&](const Fact& f) {
      warnings_.push_back({f.pos, "nash facts are solver output; ignored"});
    });
  }

  bool rank_arg(const Term& t) {
    if (!number_arg(t)) return false;
    if (!t.integral || t.value < 0 || t.value > 1e9) {
      error(t.pos, "utility ranks must be non-negative integers, found '" + t.text + "'");
      return false;
    }
    return true;
  }

  void collect_utilities() {
    each("utility", [&](const Fact& f) {
      auto role = role_arg(f.args[0]);
      bool ok = role.has_value();
      ok = option_arg(f.args[1], Role::row) && ok;
      ok = option_arg(f.args[2], Role::column) && ok;
      ok = rank_arg(f.args[3]) && ok;
      ok = rank_arg(f.args[4]) && ok;
      if (!ok) return;
      auto& cells = utilities_[*role];
      auto key = std::make_pair(f.args[1].text, f.args[2].text);
      if (cells.contains(key)) {
        error(f.pos, "duplicate utility cell (" + key.first + ", " + key.second + ") for role " +
                         std::string(to_string(*role)));
        return;
      }
      cells[key] = {RankPair{static_cast<int>(f.args[3].value), static_cast<int>(f.args[4].value)},
                    f.pos};
    });

    each("action", [&](const Fact& f) {
      auto role = role_arg(f.args[0]);
      if (!role || !symbol_arg(f.args[1], "an option")) return;
      const std::string& a = f.args[1].text;
      const bool own = declared(*role, a);
      const bool other = declared(opposite(*role), a);
      if (own && other) {
        error(f.args[1].pos, "ambiguous action '" + a + "': declared as an option of both roles");
        return;
      }
      if (!own && !other) {
        error(f.args[1].pos, "undeclared option '" + a + "' in action fact");
        return;
      }
      Role side = own ? *role : opposite(*role);
      auto& set = actions_[*role][side];
      if (std::find(set.begin(), set.end(), a) != set.end()) {
        error(f.pos, "duplicate action fact for '" + a + "'");
        return;
      }
      set.push_back(a);
      action_pos_[*role] = f.pos;
    });
  }

  std::vector<OptionId> ordered_subset(const BaseGame& base, Role side,
                                       const std::set<std::string>& names) const {
    std::vector<OptionId> out;
    for (const auto& o : base.options(side)) {
      if (names.contains(o.name)) out.push_back(o);
    }
    return out;
  }

  std::vector<SubjectiveGame> assemble_views(const BaseGame& base) {
    std::vector<SubjectiveGame> views;
    for (Role role : {Role::row, Role::column}) {
      auto cells_it = utilities_.find(role);
      if (cells_it == utilities_.end()) {
        if (actions_.contains(role)) {
          error(action_pos_[role], "action facts for role " + std::string(to_string(role)) +
                                       " without utility facts");
        }
        continue;
      }
      const auto& cells = cells_it->second;
      std::set<std::string> row_names;
      std::set<std::string> col_names;
      for (const auto& [key, cell] : cells) {
        row_names.insert(key.first);
        col_names.insert(key.second);
      }
      auto rows = ordered_subset(base, Role::row, row_names);
      auto cols = ordered_subset(base, Role::column, col_names);

      std::vector<RankPair> ranks;
      std::vector<std::string> missing;
      for (const auto& r : rows) {
        for (const auto& c : cols) {
          auto it = cells.find({r.name, c.name});
          if (it == cells.end()) {
            missing.push_back("(" + r.name + ", " + c.name + ")");
          } else {
            ranks.push_back(it->second.first);
          }
        }
      }
      SourcePos first = cells.begin()->second.second;
      for (const auto& [key, cell] : cells) first = std::min(first, cell.second);
      if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        error(first, "incomplete utility table for role " + std::string(to_string(role)) +
                         ": missing " + list);
        continue;
      }

      if (auto a = actions_.find(role); a != actions_.end()) {
        for (Role side : {Role::row, Role::column}) {
          auto s = a->second.find(side);
          if (s == a->second.end()) continue;
          std::set<std::string> declared_set(s->second.begin(), s->second.end());
          const auto& domain = side == Role::row ? row_names : col_names;
          if (declared_set != domain) {
            error(action_pos_[role], "action facts for role " + std::string(to_string(role)) +
                                         " disagree with the utility domain on the " +
                                         std::string(to_string(side)) + " side");
          }
        }
      }

      views.push_back(SubjectiveGame::create(
          base, base.player(role).id, RankTable::create(std::move(rows), std::move(cols), std::move(ranks))));
    }
    return views;
  }

  const std::vector<Fact>& facts_;
  GameDescription game_;
  std::optional<StrategyProfile> target_;
  std::vector<Diagnostic> errors_;
  std::vector<Diagnostic> warnings_;
  std::map<Role, std::map<std::pair<std::string, std::string>, std::pair<RankPair, SourcePos>>>
      utilities_;
  std::map<Role, std::map<Role, std::vector<std::string>>> actions_;
  std::map<Role, SourcePos> action_pos_;
};

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += "\n";
    out += format(d);
  }
  return out;
}

}  // namespace

std::string format(const Diagnostic& diagnostic, std::string_view source_name) {
  std::string out(source_name);
  if (diagnostic.pos.line > 0) {
    if (!out.empty()) out += ":";
    out += std::to_string(diagnostic.pos.line) + ":" + std::to_string(diagnostic.pos.column);
  }
  if (!out.empty()) out += ": ";
  return out + diagnostic.message;
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

const std::vector<PredicateInfo>& vocabulary() {
  static const std::vector<PredicateInfo> kVocabulary = {
      {"player", 1}, {"role", 2},    {"option", 2}, {"payoff", 4},
      {"chosen", 2}, {"utility", 5}, {"action", 2}, {"nash", 2},
  };
  return kVocabulary;
}

std::vector<Fact> parse_facts(std::string_view text) {
  std::vector<Fact> facts = FactParser(text).run();
  std::vector<Diagnostic> errors;
  for (const auto& f : facts) {
    const auto& vocab = vocabulary();
    auto it = std::find_if(vocab.begin(), vocab.end(),
                           [&](const PredicateInfo& p) { return p.name == f.predicate; });
    if (it == vocab.end()) {
      errors.push_back({f.pos, "unknown predicate '" + f.predicate + "'"});
    } else if (it->arity != f.args.size()) {
      errors.push_back({f.pos, "arity mismatch: " + f.predicate + "/" +
                                   std::to_string(f.args.size()) + " given, expected " +
                                   f.predicate + "/" + std::to_string(it->arity)});
    }
  }
  if (!errors.empty()) throw ParseError(std::move(errors));
  return facts;
}

ProblemSpec parse(std::string_view text) {
  std::vector<Fact> facts = parse_facts(text);
  return Builder(facts).build();
}

const SubjectiveGame* ProblemSpec::declared_view(Role role) const {
  const PlayerId& owner = base.player(role).id;
  for (const auto& v : declared_views) {
    if (v.owner() == owner) return &v;
  }
  return nullptr;
}

std::string format_number(double value) {
  if (std::nearbyint(value) == value && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  return std::string(buf, ptr);
}

std::string render(const ProblemSpec& spec) {
  std::ostringstream out;
  const BaseGame& base = spec.base;
  for (const auto& p : base.players()) out << "player(" << p.id.name << ").\n";
  for (const auto& p : base.players()) {
    out << "role(" << p.id.name << ", " << to_string(p.role) << ").\n";
  }
  for (Role role : {Role::row, Role::column}) {
    for (const auto& o : base.options(role)) {
      out << "option(" << to_string(role) << ", " << o.name << ").\n";
    }
  }
  for (std::size_t r = 0; r < base.row_options().size(); ++r) {
    for (std::size_t c = 0; c < base.col_options().size(); ++c) {
      const Payoff& p = base.payoff(r, c);
      out << "payoff(" << base.row_options()[r].name << ", " << base.col_options()[c].name << ", "
          << format_number(p.row) << ", " << format_number(p.col) << ").\n";
    }
  }
  if (spec.target) {
    out << "chosen(" << spec.target->row_action.name << ", " << spec.target->col_action.name
        << ").\n";
  }

  std::vector<std::pair<Role, const SubjectiveGame*>> views;
  for (Role role : {Role::row, Role::column}) {
    if (const auto* v = spec.declared_view(role)) views.emplace_back(role, v);
  }
  for (const auto& [role, view] : views) {
    const RankTable& t = view->table();
    for (std::size_t r = 0; r < t.row_count(); ++r) {
      for (std::size_t c = 0; c < t.col_count(); ++c) {
        out << "utility(" << to_string(role) << ", " << t.rows()[r].name << ", "
            << t.cols()[c].name << ", " << t.at(r, c).row << ", " << t.at(r, c).col << ").\n";
      }
    }
  }

  // action facts are only expressible when no token is shared between roles
  bool unambiguous = true;
  for (const auto& o : base.row_options()) {
    if (base.index_of(Role::column, o)) unambiguous = false;
  }
  if (unambiguous) {
    for (const auto& [role, view] : views) {
      for (Role side : {role, opposite(role)}) {
        for (const auto& a : view->believed(side)) {
          out << "action(" << to_string(role) << ", " << a.name << ").\n";
        }
      }
    }
  }
  return out.str();
}

}  // namespace hypergame::dsl
