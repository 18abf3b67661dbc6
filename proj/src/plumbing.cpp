#include "rbd/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "rbd/error.hpp"

namespace rbd {

std::size_t PlumbingGraph::add_vertex(std::string id, std::int64_t weight, std::int64_t genus) {
  if (index_of(id)) throw Error(ErrorCode::DuplicateId, "vertex '" + id + "' declared twice");
  if (genus < 0) throw Error(ErrorCode::BadWeight, "negative genus on vertex '" + id + "'");
  vertices_.push_back({std::move(id), weight, genus});
  adjacency_.emplace_back();
  return vertices_.size() - 1;
}

void PlumbingGraph::add_edge(std::string_view a, std::string_view b) {
  auto ia = index_of(a);
  if (!ia) throw Error(ErrorCode::UnknownId, "edge references unknown vertex '" + std::string(a) + "'");
  auto ib = index_of(b);
  if (!ib) throw Error(ErrorCode::UnknownId, "edge references unknown vertex '" + std::string(b) + "'");
  if (*ia == *ib) throw Error(ErrorCode::InvalidArgument, "self-loop at '" + std::string(a) + "'");
  edges_.emplace_back(*ia, *ib);
  adjacency_[*ia].push_back(*ib);
  adjacency_[*ib].push_back(*ia);
}

PlumbingGraph PlumbingGraph::chain(const HJString& s) {
  PlumbingGraph g;
  const auto& t = s.terms();
  for (std::size_t k = 0; k < t.size(); ++k) {
    g.add_vertex("v" + std::to_string(k + 1), -t[k], 0);
    if (k > 0) g.add_edge(g.vertices_[k - 1].id, g.vertices_[k].id);
  }
  return g;
}

std::optional<std::size_t> PlumbingGraph::index_of(std::string_view id) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (vertices_[k].id == id) return k;
  }
  return std::nullopt;
}

std::size_t PlumbingGraph::edge_count(std::size_t i, std::size_t j) const {
  return static_cast<std::size_t>(std::count(adjacency_[i].begin(), adjacency_[i].end(), j));
}

// ---------------------------------------------------------------------------
// DSL

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) && line[k] != '#') ++k;
    out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::int64_t weight_token(const Token& t, std::size_t line) {
  auto w = parse_int(t.text);
  if (!w) {
    throw SourceError(ErrorCode::BadWeight, line, t.column, "weight '" + std::string(t.text) + "' is not an integer");
  }
  return *w;
}

void expect_arity(const std::vector<Token>& tokens, std::size_t args, bool at_least,
                  std::size_t line) {
  const std::size_t got = tokens.size() - 1;
  if (got == args || (at_least && got > args)) return;
  const std::size_t column = got > args ? tokens[args + 1].column
                                        : tokens.back().column + tokens.back().text.size();
  throw SyntaxError(line, column,
                    "'" + std::string(tokens[0].text) + "' expects " +
                        (at_least ? "at least " : "") + std::to_string(args) + " argument(s)");
}

void expect_id(const Token& t, std::size_t line) {
  if (!valid_id(t.text)) {
    throw SyntaxError(line, t.column, "identifier '" + std::string(t.text) + "' is not alphanumeric");
  }
}

// Re-raise library errors with the source position attached.
template <typename Fn>
void at_line(std::size_t line, const Token& t, Fn&& fn) {
  try {
    fn();
  } catch (const SourceError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw SyntaxError(line, t.column, e.detail());
    throw SourceError(e.code(), line, t.column, e.detail());
  }
}

}  // namespace

PlumbingGraph parse_plumbing(std::string_view text) {
  PlumbingGraph g;
  std::size_t line_no = 0;
  std::size_t chain_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view directive = tokens[0].text;
    if (directive == "vertex") {
      expect_arity(tokens, 3, false, line_no);
      expect_id(tokens[1], line_no);
      const std::int64_t weight = weight_token(tokens[2], line_no);
      auto genus = parse_int(tokens[3].text);
      if (!genus || *genus < 0) {
        throw SourceError(ErrorCode::BadWeight, line_no, tokens[3].column,
                          "genus '" + std::string(tokens[3].text) + "' is not a nonnegative integer");
      }
      at_line(line_no, tokens[1],
              [&] { g.add_vertex(std::string(tokens[1].text), weight, *genus); });
    } else if (directive == "edge") {
      expect_arity(tokens, 2, false, line_no);
      expect_id(tokens[1], line_no);
      expect_id(tokens[2], line_no);
      const bool first_known = g.index_of(tokens[1].text).has_value();
      at_line(line_no, tokens[first_known ? 2 : 1], [&] { g.add_edge(tokens[1].text, tokens[2].text); });
    } else if (directive == "chain") {
      expect_arity(tokens, 1, true, line_no);
      ++chain_no;
      std::string previous;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        const std::int64_t weight = weight_token(tokens[k], line_no);
        std::string id = "c" + std::to_string(chain_no) + "v" + std::to_string(k);
        at_line(line_no, tokens[k], [&] { g.add_vertex(id, weight, 0); });
        if (!previous.empty()) g.add_edge(previous, id);
        previous = std::move(id);
      }
    } else {
      throw SyntaxError(line_no, tokens[0].column,
                        "unknown directive '" + std::string(directive) + "'");
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string print_plumbing(const PlumbingGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) {
    out += "vertex " + v.id + " " + std::to_string(v.weight) + " " + std::to_string(v.genus) + "\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out += "edge " + g.vertices()[a].id + " " + g.vertices()[b].id + "\n";
  }
  return out;
}

bool same_structure(const PlumbingGraph& a, const PlumbingGraph& b) {
  auto vertex_map = [](const PlumbingGraph& g) {
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> m;
    for (const auto& v : g.vertices()) m[v.id] = {v.weight, v.genus};
    return m;
  };
  auto edge_set = [](const PlumbingGraph& g) {
    std::multiset<std::pair<std::string, std::string>> s;
    for (const auto& [i, j] : g.edges()) {
      const auto& x = g.vertices()[i].id;
      const auto& y = g.vertices()[j].id;
      s.emplace(std::min(x, y), std::max(x, y));
    }
    return s;
  };
  return vertex_map(a) == vertex_map(b) && edge_set(a) == edge_set(b);
}

// ---------------------------------------------------------------------------
// Lattice data

SymMatrix intersection_matrix(const PlumbingGraph& g) {
  const std::size_t n = g.vertices().size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(g.vertices()[i].weight));
  for (const auto& [i, j] : g.edges()) m.set(i, j, m(i, j) + Rational(1));
  return m;
}

bool is_negative_definite(const PlumbingGraph& g) {
  const Inertia in = inertia(intersection_matrix(g));
  return in.n_zero == 0 && in.n_plus == 0;
}

HJString chain_string(const PlumbingGraph& g) {
  const std::size_t n = g.vertices().size();
  if (n == 0) throw Error(ErrorCode::NotLinearChain, "empty graph");
  if (g.edges().size() != n - 1) throw Error(ErrorCode::NotLinearChain, "edge count is not n - 1");
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(i) > 2) {
      throw Error(ErrorCode::NotLinearChain, "vertex '" + g.vertices()[i].id + "' has degree " +
                                                 std::to_string(g.degree(i)));
    }
    if (g.degree(i) <= 1 && !start) start = i;
  }
  if (!start) throw Error(ErrorCode::NotLinearChain, "graph is a cycle");

  std::vector<std::size_t> order{*start};
  std::vector<bool> seen(n, false);
  seen[*start] = true;
  while (true) {
    std::optional<std::size_t> next;
    for (std::size_t w : g.neighbors(order.back())) {
      if (!seen[w]) next = w;
    }
    if (!next) break;
    seen[*next] = true;
    order.push_back(*next);
  }
  if (order.size() != n) throw Error(ErrorCode::NotLinearChain, "graph is disconnected");

  std::vector<std::int64_t> terms;
  for (std::size_t i : order) {
    const auto& v = g.vertices()[i];
    if (v.genus != 0) {
      throw Error(ErrorCode::NotAllRational, "vertex '" + v.id + "' has genus " + std::to_string(v.genus));
    }
  }
  for (std::size_t i : order) {
    const auto& v = g.vertices()[i];
    if (v.weight > -2) {
      throw Error(ErrorCode::WeightOutOfRange,
                  "vertex '" + v.id + "' has weight " + std::to_string(v.weight) + " > -2");
    }
    terms.push_back(-v.weight);
  }
  return HJString(std::move(terms));
}

LensSpace boundary_lens(const PlumbingGraph& g) { return lens_of_chain(chain_string(g)); }

// ---------------------------------------------------------------------------
// Configuration search

namespace {

// Directed sphere chains eligible as configurations: every vertex has genus 0
// and weight <= -2, consecutive vertices share exactly one edge, interior
// vertices have degree 2, and no chord joins non-consecutive vertices.
template <typename Visit>
void for_each_chain(const PlumbingGraph& g, Visit&& visit) {
  const auto& vs = g.vertices();
  auto eligible = [&](std::size_t i) { return vs[i].genus == 0 && vs[i].weight <= -2; };
  for (std::size_t s = 0; s < vs.size(); ++s) {
    if (!eligible(s)) continue;
    std::vector<std::size_t> path{s};
    visit(path);
    std::set<std::size_t> first_steps(g.neighbors(s).begin(), g.neighbors(s).end());
    for (std::size_t t : first_steps) {
      if (!eligible(t) || g.edge_count(s, t) != 1) continue;
      path.assign({s, t});
      while (true) {
        visit(path);
        const std::size_t v = path.back();
        if (g.degree(v) != 2) break;
        const std::size_t prev = path[path.size() - 2];
        const std::size_t w = g.neighbors(v)[0] == prev ? g.neighbors(v)[1] : g.neighbors(v)[0];
        if (w == prev || !eligible(w)) break;
        if (std::find(path.begin(), path.end(), w) != path.end()) break;
        // w may only touch v among the chain's vertices.
        bool chord = false;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) chord = chord || g.edge_count(path[k], w) != 0;
        if (chord) break;
        path.push_back(w);
      }
    }
  }
}

bool is_palindrome(const std::vector<std::int64_t>& t) {
  return std::equal(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.rbegin());
}

ConfigurationMatch make_match(const PlumbingGraph& g, std::int64_t p, std::int64_t q,
                              const std::vector<std::size_t>& path) {
  ConfigurationMatch m{p, q, {}};
  for (std::size_t i : path) m.vertex_ids.push_back(g.vertices()[i].id);
  return m;
}

}  // namespace

std::vector<ConfigurationMatch> find_cpq(const PlumbingGraph& g, std::int64_t p, std::int64_t q) {
  const HJString target = cpq_string(p, q);
  const auto& t = target.terms();
  const bool palindrome = is_palindrome(t);
  std::vector<ConfigurationMatch> out;
  for_each_chain(g, [&](const std::vector<std::size_t>& path) {
    if (path.size() != t.size()) return;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (g.vertices()[path[k]].weight != -t[k]) return;
    }
    // A palindromic match is visited from both ends; keep one.
    if (palindrome && path.size() > 1 && path.front() > path.back()) return;
    out.push_back(make_match(g, p, q, path));
  });
  return out;
}

std::vector<ConfigurationMatch> find_all_cpq(const PlumbingGraph& g) {
  std::vector<ConfigurationMatch> out;
  for_each_chain(g, [&](const std::vector<std::size_t>& path) {
    std::vector<std::int64_t> terms;
    for (std::size_t i : path) terms.push_back(-g.vertices()[i].weight);
    if (is_palindrome(terms) && path.size() > 1 && path.front() > path.back()) return;
    const Rational value = hj_value(HJString(terms));
    const Integer& m = value.num();
    const Integer p = boost::multiprecision::sqrt(m);
    if (p * p != m || p < 2) return;
    const Integer qq = value.den() + 1;
    if (qq % p != 0) return;
    const Integer q = qq / p;
    if (q <= 0 || q >= p || boost::multiprecision::gcd(p, q) != 1) return;
    out.push_back(make_match(g, p.convert_to<std::int64_t>(), q.convert_to<std::int64_t>(), path));
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.p, a.q) < std::pair(b.p, b.q);
  });
  return out;
}

}  // namespace rbd
