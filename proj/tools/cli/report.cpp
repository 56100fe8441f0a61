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

#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace hypergame::cli {

namespace {

using nlohmann::ordered_json;

ordered_json profile_json(const StrategyProfile& p) {
  return {{"row", p.row_action.name}, {"col", p.col_action.name}};
}

std::string profile_text(const StrategyProfile& p) {
  return "(" + p.row_action.name + ", " + p.col_action.name + ")";
}

ordered_json matrix_json(const MatrixReport& m) {
  ordered_json j;
  j["label"] = m.label;
  if (!m.owner.empty()) j["owner"] = m.owner;
  ordered_json rows = ordered_json::array();
  ordered_json cols = ordered_json::array();
  for (const auto& r : m.table.rows()) rows.push_back(r.name);
  for (const auto& c : m.table.cols()) cols.push_back(c.name);
  j["rows"] = rows;
  j["cols"] = cols;
  ordered_json cells = ordered_json::array();
  for (std::size_t r = 0; r < m.table.row_count(); ++r) {
    for (std::size_t c = 0; c < m.table.col_count(); ++c) {
      cells.push_back({{"row", m.table.rows()[r].name},
                       {"col", m.table.cols()[c].name},
                       {"r_row", m.table.at(r, c).row},
                       {"r_col", m.table.at(r, c).col}});
    }
  }
  j["cells"] = cells;
  ordered_json eq = ordered_json::array();
  for (const auto& p : m.equilibria) eq.push_back(profile_json(p));
  j["equilibria"] = eq;
  return j;
}

void matrix_text(std::ostream& out, const MatrixReport& m, const std::string& indent) {
  out << indent << m.label;
  if (!m.owner.empty()) out << " [" << m.owner << "]";
  out << "\n";
  std::istringstream lines(render_matrix(m.table));
  for (std::string line; std::getline(lines, line);) out << indent << "  " << line << "\n";
  out << indent << "  NE:";
  if (m.equilibria.empty()) out << " none";
  for (std::size_t i = 0; i < m.equilibria.size(); ++i) {
    out << (i ? ", " : " ") << profile_text(m.equilibria[i]);
  }
  out << "\n";
}

}  // namespace

std::string render_matrix(const RankTable& table) {
  std::vector<std::string> header{""};
  for (const auto& c : table.cols()) header.push_back(c.name);
  std::vector<std::vector<std::string>> grid{header};
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::vector<std::string> line{table.rows()[r].name};
    for (std::size_t c = 0; c < table.col_count(); ++c) {
      line.push_back("(" + std::to_string(table.at(r, c).row) + "," +
                     std::to_string(table.at(r, c).col) + ")");
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      std::string cell = line[i];
      if (i == 0) {
        cell.resize(width[i], ' ');
      } else {
        cell.insert(0, width[i] - cell.size(), ' ');
      }
      text += cell;
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const Report& report) {
  ordered_json j;
  j["command"] = report.command;
  j["input"] = {{"path", report.input_path}, {"canonical", report.input_canonical}};
  ordered_json config = ordered_json::object();
  for (const auto& [k, v] : report.configuration) config[k] = v;
  j["configuration"] = config;
  j["warnings"] = report.warnings;

  ordered_json result = ordered_json::object();
  if (report.validate) {
    result["valid"] = report.validate->valid;
    result["diagnostics"] = report.validate->diagnostics;
  }
  if (report.solve) {
    result["mode"] = report.solve->mode;
    ordered_json views = ordered_json::array();
    for (const auto& v : report.solve->views) views.push_back(matrix_json(v));
    result["views"] = views;
  }
  if (report.rationalise) {
    const auto& r = *report.rationalise;
    result["target"] = profile_json(r.target);
    result["concept"] = r.concept_name;
    result["level"] = r.level;
    result["candidate_estimate"] = r.candidate_estimate;
    ordered_json players = ordered_json::array();
    for (const auto& p : r.players) {
      ordered_json pj;
      pj["player"] = p.player.id.name;
      pj["role"] = std::string(to_string(p.player.role));
      pj["action_spaces"] = p.action_spaces;
      pj["generated"] = p.generated;
      pj["retained_count"] = p.retained.size();
      pj["admitted_count"] = p.admitted;
      ordered_json retained = ordered_json::array();
      for (const auto& m : p.retained) retained.push_back(matrix_json(m));
      pj["retained"] = retained;
      players.push_back(pj);
    }
    result["players"] = players;
    result["hypergame_count"] = r.hypergames.size();
    ordered_json hypergames = ordered_json::array();
    for (const auto& h : r.hypergames) {
      ordered_json views = ordered_json::array();
      for (std::size_t i = 0; i < h.picks.size(); ++i) {
        views.push_back({{"player", r.players[i].player.id.name}, {"candidate", h.picks[i] + 1}});
      }
      hypergames.push_back({{"views", views}});
    }
    result["hypergames"] = hypergames;
  }
  j["result"] = result;
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  out << "input: " << report.input_path << "\n";
  if (!report.configuration.empty()) {
    out << "configuration:\n";
    for (const auto& [k, v] : report.configuration) out << "  " << k << ": " << v << "\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";

  if (report.validate) {
    out << (report.validate->valid ? "valid" : "invalid") << "\n";
    for (const auto& d : report.validate->diagnostics) out << "  " << d << "\n";
  }
  if (report.solve) {
    for (const auto& v : report.solve->views) matrix_text(out, v, "");
  }
  if (report.rationalise) {
    const auto& r = *report.rationalise;
    out << "target: " << profile_text(r.target) << "\n";
    out << "concept: " << r.concept_name << ", level " << r.level << "\n";
    out << "candidate estimate: " << static_cast<long long>(r.candidate_estimate) << "\n";
    for (const auto& p : r.players) {
      out << "player " << p.player.id.name << " (" << to_string(p.player.role) << "): "
          << p.action_spaces << " action space(s), " << p.generated << " generated, "
          << p.retained.size() << " retained, " << p.admitted << " admitted at level " << r.level
          << "\n";
      for (const auto& m : p.retained) matrix_text(out, m, "  ");
    }
    out << "hypergames: " << r.hypergames.size() << "\n";
    if (r.hypergames.empty()) out << "  no rationalising structure exists\n";
    for (std::size_t i = 0; i < r.hypergames.size(); ++i) {
      out << "  H" << i + 1 << ":";
      for (std::size_t k = 0; k < r.hypergames[i].picks.size(); ++k) {
        out << (k ? ", " : " ") << r.players[k].player.id.name << "#"
            << r.hypergames[i].picks[k] + 1;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace hypergame::cli
