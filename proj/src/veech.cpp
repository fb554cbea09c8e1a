#include "origami/veech.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace origami {

using json = nlohmann::ordered_json;

namespace {

std::string pair_key(const Origami& o) {
  // Canonical forms compare by image arrays; serialize them into a byte key.
  std::string k;
  k.reserve(static_cast<size_t>(degree(o)) * 8 + 8);
  auto put = [&k](int v) {
    for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put(degree(o));
  for (int v : o.a.images()) put(v);
  for (int v : o.b.images()) put(v);
  return k;
}

Word letter_word(Generator g) {
  switch (g) {
    case Generator::S: return word_s(1);
    case Generator::SInv: return word_s(-1);
    case Generator::T: return word_t(1);
    case Generator::TInv: return word_t(-1);
  }
  throw std::logic_error("letter_word: bad generator");
}

// Walk `count` steps along the permutation defined by `edge`, using the cycle
// of v to reduce huge counts (T-exponents can be astronomically large).
int step_cycle(const std::vector<int>& edge, int v, long long count) {
  std::vector<int> cyc = {v};
  int x = edge[static_cast<size_t>(v)];
  while (x != v) {
    cyc.push_back(x);
    x = edge[static_cast<size_t>(x)];
  }
  const long long len = static_cast<long long>(cyc.size());
  long long r = count % len;
  if (r < 0) r += len;
  return cyc[static_cast<size_t>(r)];
}

}  // namespace

CosetGraph orbit_coset_graph(const Origami& o, const OrbitOptions& opts) {
  CosetGraph g;
  g.convention = opts.convention;
  std::unordered_map<std::string, int> index;

  const Origami base = canonical_form(o);
  g.vertices.push_back(base);
  g.tree_word.emplace_back();
  index.emplace(pair_key(base), 0);

  constexpr Generator kOrder[4] = {Generator::S, Generator::SInv, Generator::T, Generator::TInv};
  for (size_t head = 0; head < g.vertices.size(); ++head) {
    int targets[4];
    for (int gi = 0; gi < 4; ++gi) {
      const Origami img = canonical_form(apply_generator(g.vertices[head], kOrder[gi], opts.convention));
      auto [it, fresh] = index.try_emplace(pair_key(img), static_cast<int>(g.vertices.size()));
      if (fresh) {
        if (g.vertices.size() >= opts.cap) throw OrbitCapExceeded(g.vertices.size());
        g.vertices.push_back(img);
        g.tree_word.push_back(letter_word(kOrder[gi]).concat(g.tree_word[head]));
      }
      targets[gi] = it->second;
    }
    g.s_edge.push_back(targets[0]);
    g.sinv_edge.push_back(targets[1]);
    g.t_edge.push_back(targets[2]);
    g.tinv_edge.push_back(targets[3]);
  }
  return g;
}

long long veech_index(const CosetGraph& g) { return g.size(); }

std::vector<Word> stabilizer_words(const CosetGraph& g) {
  const size_t n = g.vertices.size();
  // An S/T-edge is a tree edge iff BFS discovered one endpoint from the other
  // along it (in either direction).  Everything else yields a Schreier word
  // tree_word[w]^-1 * letter * tree_word[v].
  std::vector<int> parent(n, -1);          // discovered from
  std::vector<Generator> via(n, Generator::S);
  {
    // Reconstruct discovery: replay BFS order (vertices are stored in it).
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    size_t next = 1;
    constexpr Generator kOrder[4] = {Generator::S, Generator::SInv, Generator::T, Generator::TInv};
    for (size_t v = 0; v < n && next < n; ++v) {
      const std::vector<int>* edges[4] = {&g.s_edge, &g.sinv_edge, &g.t_edge, &g.tinv_edge};
      for (int gi = 0; gi < 4; ++gi) {
        const int w = (*edges[gi])[v];
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          parent[static_cast<size_t>(w)] = static_cast<int>(v);
          via[static_cast<size_t>(w)] = kOrder[gi];
          ++next;
        }
      }
    }
  }
  auto is_tree = [&](int v, int w, Generator fwd, Generator bwd) {
    return (parent[static_cast<size_t>(w)] == v && via[static_cast<size_t>(w)] == fwd) ||
           (parent[static_cast<size_t>(v)] == w && via[static_cast<size_t>(v)] == bwd);
  };
  std::vector<Word> words;
  for (size_t v = 0; v < n; ++v) {
    const int sv = g.s_edge[v], tv = g.t_edge[v];
    if (!is_tree(static_cast<int>(v), sv, Generator::S, Generator::SInv)) {
      Word w = g.tree_word[static_cast<size_t>(sv)].inverse().concat(word_s(1)).concat(g.tree_word[v]);
      if (!w.empty()) words.push_back(std::move(w));
    }
    if (!is_tree(static_cast<int>(v), tv, Generator::T, Generator::TInv)) {
      Word w = g.tree_word[static_cast<size_t>(tv)].inverse().concat(word_t(1)).concat(g.tree_word[v]);
      if (!w.empty()) words.push_back(std::move(w));
    }
  }
  return words;
}

std::vector<Mat2> stabilizer_generators(const CosetGraph& g) {
  std::vector<Mat2> out;
  for (const Word& w : stabilizer_words(g)) {
    const Mat2 m = eval_word(w);
    if (m == kIdentity) continue;
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

bool contains_matrix(const CosetGraph& g, const Mat2& m) {
  const Word w = decompose_word(m);
  // Rightmost letter acts first; S^e uses its order-4 cycle, T^e its T-cycle.
  int v = g.base();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->kind == LetterKind::S)
      v = step_cycle(g.s_edge, v, it->exp);
    else
      v = step_cycle(g.t_edge, v, it->exp);
  }
  return v == g.base();
}

bool contains_minus_identity(const CosetGraph& g) { return contains_matrix(g, kMinusIdentity); }

CuspData cusp_data(const CosetGraph& g) {
  CuspData c;
  const size_t n = g.vertices.size();
  std::vector<char> seen(n, 0);
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    size_t x = start;
    do {
      seen[x] = 1;
      x = static_cast<size_t>(g.t_edge[x]);
      ++len;
    } while (x != start);
    c.widths.push_back(len);
  }
  std::sort(c.widths.begin(), c.widths.end());
  c.level = 1;
  for (int w : c.widths) c.level = std::lcm(c.level, static_cast<long long>(w));
  return c;
}

std::string to_dot(const CosetGraph& g) {
  std::string out = "digraph veech {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  0 [peripheries=2];\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  " + std::to_string(v) + " -> " + std::to_string(g.s_edge[v]) +
           " [style=solid, label=\"S\"];\n";
    out += "  " + std::to_string(v) + " -> " + std::to_string(g.t_edge[v]) +
           " [style=dashed, label=\"T\"];\n";
  }
  out += "}\n";
  return out;
}

std::string graph_to_json_text(const CosetGraph& g) {
  json j;
  j["base"] = 0;
  j["convention"] = to_string(g.convention);
  j["vertices"] = json::array();
  for (const Origami& v : g.vertices) j["vertices"].push_back(to_text(v));
  j["s_edges"] = g.s_edge;
  j["t_edges"] = g.t_edge;
  return j.dump(2);
}

}  // namespace origami
