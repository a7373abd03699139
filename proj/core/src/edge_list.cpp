// Copyright 2026 The netdesign Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netdesign/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "netdesign/error.hpp"

namespace netdesign {
namespace {

struct Token {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool IsSeparator(char c, bool commas) {
  return (commas && c == ',') || std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Splits on whitespace (and commas unless `commas` is false), remembering
// where each token started.
std::vector<Token> Tokenize(std::string_view text, std::size_t line,
                            std::size_t column, bool commas = true) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (IsSeparator(text[i], commas)) {
      ++column;
      ++i;
      continue;
    }
    Token t{{}, line, column};
    while (i < text.size() && !IsSeparator(text[i], commas)) {
      t.text.push_back(text[i]);
      ++i;
      ++column;
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::optional<long long> ParseInt(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

class EdgeCollector {
 public:
  EdgeCollector(std::size_t n, bool directed) : n_(n), directed_(directed) {}

  void Add(const Token& t) {
    const std::string& s = t.text;
    const std::size_t dash = s.find('-');
    if (dash == std::string::npos) {
      throw ParseError("malformed edge token", t.text, t.line, t.column);
    }
    const bool arrow = dash + 1 < s.size() && s[dash + 1] == '>';
    const auto lhs = ParseInt(std::string_view(s).substr(0, dash));
    const auto rhs =
        ParseInt(std::string_view(s).substr(dash + (arrow ? 2 : 1)));
    if (!lhs || !rhs) {
      throw ParseError("malformed edge token", t.text, t.line, t.column);
    }
    const auto in_range = [&](long long v) {
      return v >= 1 && static_cast<unsigned long long>(v) <= n_;
    };
    if (!in_range(*lhs) || !in_range(*rhs)) {
      throw ParseError("node id out of range 1.." + std::to_string(n_), t.text,
                       t.line, t.column);
    }
    if (*lhs == *rhs) {
      throw ParseError("self-loop", t.text, t.line, t.column);
    }
    if (arrow && !directed_) {
      throw ParseError("directed edge in an undirected network", t.text,
                       t.line, t.column);
    }
    Edge e{static_cast<NodeId>(*lhs - 1), static_cast<NodeId>(*rhs - 1), arrow};
    const bool fresh = claimed_.emplace(e.from, e.to).second &&
                       (e.directed || claimed_.emplace(e.to, e.from).second);
    if (!fresh) throw ParseError("duplicate edge", t.text, t.line, t.column);
    edges_.push_back(e);
  }

  std::vector<Edge> Take() { return std::move(edges_); }

 private:
  std::size_t n_;
  bool directed_;
  std::set<std::pair<NodeId, NodeId>> claimed_;
  std::vector<Edge> edges_;
};

struct RoleLine {
  Token id_token;
  NodeId node = 0;
  int class_id = 0;
  int fixed = 0;
  std::vector<NodeId> units;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::vector<int> ParseIntList(const Token& t, std::string_view list) {
  std::vector<int> out;
  if (list.empty()) return out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string_view item =
        list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    const auto v = ParseInt(item);
    if (!v) throw ParseError("malformed integer list", t.text, t.line, t.column);
    out.push_back(static_cast<int>(*v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Network parse_edge_list(std::string_view text, std::size_t num_nodes,
                        bool directed) {
  EdgeCollector edges(num_nodes, directed);
  for (const Token& t : Tokenize(text, 1, 1)) edges.Add(t);
  return Network(num_nodes, directed, edges.Take());
}

Network parse_network(std::string_view text,
                      const NetworkFileOptions& options) {
  std::optional<std::size_t> n = options.num_nodes;
  std::optional<bool> directed = options.directed;
  bool header_allowed = true;
  std::optional<EdgeCollector> edges;
  std::vector<RoleLine> role_lines;
  std::vector<std::vector<int>> exchangeable;

  const auto need_collector = [&](const Token& where) -> EdgeCollector& {
    if (!edges) {
      if (!n || !directed) {
        throw ParseError("node count and directedness unknown before edges",
                         where.text, where.line, where.column);
      }
      edges.emplace(*n, *directed);
    }
    return *edges;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const std::string_view line = Trim(raw);
    if (line.empty()) continue;
    const std::size_t col0 =
        static_cast<std::size_t>(line.data() - raw.data()) + 1;

    if (StartsWith(line, "n=")) {
      const auto tokens = Tokenize(line, line_no, col0);
      if (!header_allowed) {
        throw ParseError("header must precede edges", tokens.front().text,
                         line_no, col0);
      }
      for (const Token& t : tokens) {
        const std::size_t eq = t.text.find('=');
        const std::string key =
            eq == std::string::npos ? t.text : t.text.substr(0, eq);
        const auto value = eq == std::string::npos
                               ? std::nullopt
                               : ParseInt(std::string_view(t.text).substr(eq + 1));
        if (!value || *value < 0) {
          throw ParseError("malformed header field", t.text, t.line, t.column);
        }
        if (key == "n") {
          const auto count = static_cast<std::size_t>(*value);
          if (options.num_nodes && *options.num_nodes != count) {
            throw ParseError("header node count disagrees with --n", t.text,
                             t.line, t.column);
          }
          n = count;
        } else if (key == "directed" && (*value == 0 || *value == 1)) {
          if (options.directed && *options.directed != (*value == 1)) {
            throw ParseError("header directedness disagrees with caller",
                             t.text, t.line, t.column);
          }
          directed = *value == 1;
        } else {
          throw ParseError("unknown header field", t.text, t.line, t.column);
        }
      }
      header_allowed = false;
      continue;
    }
    header_allowed = false;

    if (StartsWith(line, "exchangeable:")) {
      const auto tokens = Tokenize(line.substr(13), line_no, col0 + 13);
      std::vector<int> group;
      for (const Token& t : tokens) {
        for (int c : ParseIntList(t, t.text)) group.push_back(c);
      }
      exchangeable.push_back(std::move(group));
      continue;
    }

    if (line.size() > 1 && line[0] == 'B' &&
        std::isdigit(static_cast<unsigned char>(line[1])) != 0 &&
        line.find(':') != std::string_view::npos) {
      const std::size_t colon = line.find(':');
      RoleLine role;
      role.id_token = Token{std::string(line.substr(0, colon)), line_no, col0};
      const auto id = ParseInt(line.substr(1, colon - 1));
      if (!id || *id < 1) {
        throw ParseError("malformed block id", role.id_token.text, line_no,
                         col0);
      }
      role.node = static_cast<NodeId>(*id - 1);
      bool has_class = false;
      bool has_fixed = false;
      for (const Token& t :
           Tokenize(line.substr(colon + 1), line_no, col0 + colon + 1, false)) {
        const std::size_t eq = t.text.find('=');
        if (eq == std::string::npos) {
          throw ParseError("expected key=value", t.text, t.line, t.column);
        }
        const std::string key = t.text.substr(0, eq);
        const std::string_view value = std::string_view(t.text).substr(eq + 1);
        if (key == "class" || key == "fixed") {
          const auto v = ParseInt(value);
          if (!v || *v < 1) {
            throw ParseError("expected a positive integer", t.text, t.line,
                             t.column);
          }
          (key == "class" ? role.class_id : role.fixed) = static_cast<int>(*v);
          (key == "class" ? has_class : has_fixed) = true;
        } else if (key == "units") {
          for (int u : ParseIntList(t, value)) role.units.push_back(u - 1);
        } else {
          throw ParseError("unknown role field", t.text, t.line, t.column);
        }
      }
      if (!has_class || !has_fixed) {
        throw ParseError("block line needs class= and fixed=",
                         role.id_token.text, line_no, col0);
      }
      role_lines.push_back(std::move(role));
      continue;
    }

    for (const Token& t : Tokenize(line, line_no, col0)) {
      need_collector(t).Add(t);
    }
  }

  if (!n || !directed) {
    throw ParseError("missing header: node count and directedness unknown", "",
                     line_no, 1);
  }
  if (!edges) edges.emplace(*n, *directed);

  std::vector<NodeRole> roles(*n, NodeRole::Design());
  for (const RoleLine& r : role_lines) {
    if (static_cast<std::size_t>(r.node) >= *n) {
      throw ParseError("block id out of range", r.id_token.text,
                       r.id_token.line, r.id_token.column);
    }
    if (roles[static_cast<std::size_t>(r.node)].is_block()) {
      throw ParseError("block node declared twice", r.id_token.text,
                       r.id_token.line, r.id_token.column);
    }
    roles[static_cast<std::size_t>(r.node)] = NodeRole::Block(r.class_id, r.fixed);
  }

  Network net(*n, *directed, edges->Take(), std::move(roles),
              std::move(exchangeable));

  for (const RoleLine& r : role_lines) {
    std::vector<NodeId> linked;
    for (NodeId u : net.design_nodes()) {
      if (net.adjacent(u, r.node) || net.adjacent(r.node, u)) {
        linked.push_back(u);
      }
    }
    std::vector<NodeId> listed = r.units;
    std::sort(listed.begin(), listed.end());
    if (listed != linked) {
      throw ParseError("units= does not match the block node's edges",
                       r.id_token.text, r.id_token.line, r.id_token.column);
    }
  }
  return net;
}

Network load_network(const std::filesystem::path& path,
                     const NetworkFileOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open network file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str(), options);
}

std::string format_edge_list(const Network& net) {
  std::string out;
  for (const Edge& e : net.edges()) {
    if (!out.empty()) out += ", ";
    out += std::to_string(e.from + 1);
    out += e.directed ? "->" : "-";
    out += std::to_string(e.to + 1);
  }
  return out;
}

std::string format_network(const Network& net) {
  std::ostringstream out;
  out << "n=" << net.num_nodes() << " directed=" << (net.directed() ? 1 : 0)
      << '\n';
  const auto& edges = net.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    out << (e.from + 1) << (e.directed ? "->" : "-") << (e.to + 1);
    const bool last = k + 1 == edges.size();
    out << (last || (k + 1) % 10 == 0 ? (last ? "\n" : ",\n") : ", ");
  }
  for (NodeId b : net.block_nodes()) {
    const NodeRole& r = net.role(b);
    out << 'B' << (b + 1) << ": class=" << r.class_id
        << " fixed=" << r.fixed_treatment << " units=";
    bool first = true;
    for (NodeId u : net.design_nodes()) {
      if (net.adjacent(u, b) || net.adjacent(b, u)) {
        out << (first ? "" : ",") << (u + 1);
        first = false;
      }
    }
    out << '\n';
  }
  for (const auto& group : net.exchangeable_classes()) {
    out << "exchangeable: ";
    for (std::size_t k = 0; k < group.size(); ++k) {
      out << (k ? "," : "") << group[k];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace netdesign
