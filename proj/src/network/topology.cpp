#include <algorithm>
#include <fstream>
#include <sstream>

#include "qmesh/errors.hpp"
#include "qmesh/network.hpp"

namespace qmesh::net {

std::string_view node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Unspecified: return "unspecified";
    case NodeKind::Source: return "source";
    case NodeKind::Destination: return "destination";
    case NodeKind::Route: return "route";
    case NodeKind::EdgeRoute: return "edge-route";
  }
  return "?";
}

void Topology::add_node(std::string id, NodeKind kind) {
  if (id.empty()) throw UsageError("node id is empty");
  if (has_node(id)) throw UsageError("duplicate node '" + id + "'");
  nodes_.push_back({std::move(id), kind});
}

void Topology::add_link(const std::string& a, const std::string& b, bool classical, bool quantum) {
  if (!has_node(a)) throw UsageError("link references unknown node '" + a + "'");
  if (!has_node(b)) throw UsageError("link references unknown node '" + b + "'");
  if (a == b) throw UsageError("self-loop on node '" + a + "'");
  if (find_link(a, b)) throw UsageError("duplicate link " + a + " - " + b);
  if (!classical && !quantum) throw UsageError("link carries no channel");
  links_.push_back({a, b, classical, quantum});
}

Topology Topology::chain(std::size_t hops) {
  if (hops == 0) throw UsageError("a chain needs at least one hop");
  Topology t;
  for (std::size_t i = 0; i <= hops; ++i) {
    const NodeKind kind = i == 0 ? NodeKind::Source : i == hops ? NodeKind::Destination : NodeKind::Route;
    t.add_node("N" + std::to_string(i), kind);
  }
  for (std::size_t i = 0; i < hops; ++i) {
    t.add_link("N" + std::to_string(i), "N" + std::to_string(i + 1), true, true);
  }
  return t;
}

bool Topology::has_node(std::string_view id) const {
  return std::any_of(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.id == id; });
}

const Node& Topology::node(std::string_view id) const {
  for (const auto& n : nodes_) {
    if (n.id == id) return n;
  }
  throw UsageError("unknown node '" + std::string(id) + "'");
}

const Link* Topology::find_link(std::string_view a, std::string_view b) const {
  for (const auto& l : links_) {
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a)) return &l;
  }
  return nullptr;
}

std::vector<std::string> Topology::dual_neighbors(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& l : links_) {
    if (!l.dual()) continue;
    if (l.a == id) out.push_back(l.b);
    if (l.b == id) out.push_back(l.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

NodeKind parse_kind(const std::string& word, std::size_t line) {
  if (word == "source") return NodeKind::Source;
  if (word == "destination") return NodeKind::Destination;
  if (word == "route") return NodeKind::Route;
  if (word == "edge-route") return NodeKind::EdgeRoute;
  throw ParseError("unknown node kind '" + word + "'", line);
}

}  // namespace

Topology parse_topology(std::string_view text) {
  Topology t;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;

    if (w[0] == "node") {
      if (w.size() < 2 || w.size() > 3) throw ParseError("expected: node <id> [kind]", line);
      const NodeKind kind = w.size() == 3 ? parse_kind(w[2], line) : NodeKind::Unspecified;
      if (t.has_node(w[1])) throw ParseError("duplicate node '" + w[1] + "'", line);
      t.add_node(w[1], kind);
    } else if (w[0] == "edge") {
      if (w.size() != 4) throw ParseError("expected: edge <id> <id> <q|c|qc>", line);
      for (std::size_t i = 1; i <= 2; ++i) {
        if (!t.has_node(w[i])) throw ParseError("edge references undeclared node '" + w[i] + "'", line);
      }
      if (w[1] == w[2]) throw ParseError("self-loop on node '" + w[1] + "'", line);
      if (t.find_link(w[1], w[2])) throw ParseError("duplicate link " + w[1] + " - " + w[2], line);
      bool classical = false;
      bool quantum = false;
      if (w[3] == "q") {
        quantum = true;
      } else if (w[3] == "c") {
        classical = true;
      } else if (w[3] == "qc" || w[3] == "cq") {
        classical = quantum = true;
      } else {
        throw ParseError("link flag must be q, c or qc (got '" + w[3] + "')", line);
      }
      t.add_link(w[1], w[2], classical, quantum);
    } else {
      throw ParseError("unknown directive '" + w[0] + "'", line);
    }
  }
  return t;
}

Topology load_topology(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read topology file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_topology(buf.str());
}

std::string Route::text() const {
  std::string out;
  for (std::size_t i = 0; i < hops.size(); ++i) {
    if (i) out += " -> ";
    out += hops[i];
  }
  return out;
}

Route discover_route(const Topology& t, const std::string& src, const std::string& dst) {
  if (!t.has_node(src)) throw UsageError("unknown source node '" + src + "'");
  if (!t.has_node(dst)) throw UsageError("unknown destination node '" + dst + "'");
  if (src == dst) throw UsageError("source and destination coincide");

  const auto& nodes = t.nodes();
  auto idx = [&](const std::string& id) {
    return static_cast<std::size_t>(
        std::find_if(nodes.begin(), nodes.end(), [&](const Node& n) { return n.id == id; }) -
        nodes.begin());
  };
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& nb : t.dual_neighbors(nodes[i].id)) adj[i].push_back(idx(nb));
  }

  // Route request: breadth-first flood from the source.
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(nodes.size(), kUnseen);
  std::vector<std::size_t> frontier{idx(src)};
  level[frontier[0]] = 0;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t u : frontier) {
      for (std::size_t v : adj[u]) {
        if (level[v] == kUnseen) {
          level[v] = level[u] + 1;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  const std::size_t d = idx(dst);
  if (level[d] == kUnseen) {
    throw RouteNotFound("no route from " + src + " to " + dst +
                        " over links with both classical and quantum channels");
  }

  // Route reply: walk back from the destination.
  std::vector<bool> on_path(nodes.size(), false);
  on_path[d] = true;
  std::vector<std::size_t> back{d};
  while (!back.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t v : back) {
      for (std::size_t u : adj[v]) {
        if (level[u] != kUnseen && level[u] + 1 == level[v] && !on_path[u]) {
          on_path[u] = true;
          next.push_back(u);
        }
      }
    }
    back = std::move(next);
  }

  Route r;
  std::size_t cur = idx(src);
  r.hops.push_back(src);
  while (cur != d) {
    // adj lists are sorted by id.
    for (std::size_t v : adj[cur]) {
      if (on_path[v] && level[v] == level[cur] + 1) {
        cur = v;
        break;
      }
    }
    r.hops.push_back(nodes[cur].id);
  }
  return r;
}

}  // namespace qmesh::net
