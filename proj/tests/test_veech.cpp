#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "origami/builders.hpp"
#include "origami/veech.hpp"

using namespace origami;

namespace {

Origami two_square() { return make_origami(Perm::from_cycles("(1,2)", 2), Perm(2)); }

Origami l_origami() {
  return make_origami(Perm::from_cycles("(1,2)", 3), Perm::from_cycles("(1,3)", 3));
}

Origami wollmilchsau() {
  return make_origami(Perm::from_cycles("(1,2,3,4)(5,8,7,6)", 8),
                      Perm::from_cycles("(1,5,3,7)(2,6,4,8)", 8));
}

// Oracle 1: decide simultaneous conjugacy directly by backtracking over the
// image of square 0 and propagating along both permutations.  Completely
// independent of canonical_form().
bool simultaneously_conjugate(const Origami& x, const Origami& y) {
  const int d = degree(x);
  if (degree(y) != d) return false;
  for (int c0 = 0; c0 < d; ++c0) {
    std::vector<int> m(static_cast<size_t>(d), -1);
    std::vector<int> todo = {0};
    m[0] = c0;
    bool ok = true;
    while (ok && !todo.empty()) {
      const int v = todo.back();
      todo.pop_back();
      const int force[2][2] = {{x.a(v), y.a(m[static_cast<size_t>(v)])},
                               {x.b(v), y.b(m[static_cast<size_t>(v)])}};
      for (const auto& f : force) {
        if (m[static_cast<size_t>(f[0])] < 0) {
          m[static_cast<size_t>(f[0])] = f[1];
          todo.push_back(f[0]);
        } else if (m[static_cast<size_t>(f[0])] != f[1]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

// Orbit count with oracle 1: breadth-first over the four generator maps,
// identifying vertices by pairwise conjugacy tests.
long long orbit_size_by_conjugacy(const Origami& o) {
  std::vector<Origami> reps = {o};
  for (size_t head = 0; head < reps.size(); ++head) {
    for (Generator g : {Generator::S, Generator::SInv, Generator::T, Generator::TInv}) {
      const Origami img = apply_generator(reps[head], g);
      bool known = false;
      for (const Origami& r : reps) known = known || simultaneously_conjugate(img, r);
      if (!known) reps.push_back(img);
    }
  }
  return static_cast<long long>(reps.size());
}

// Oracle 2: a second canonical labeling that follows the edges in the order
// (b, b^-1, a, a^-1) instead — representatives differ, class counts must not.
std::vector<int> alt_canonical_key(const Origami& o) {
  const int d = degree(o);
  const Perm a_inv = o.a.inverse(), b_inv = o.b.inverse();
  const Perm* edges[4] = {&o.b, &b_inv, &o.a, &a_inv};
  std::vector<int> best, relabel(static_cast<size_t>(d)), order(static_cast<size_t>(d));
  std::vector<int> cand(2 * static_cast<size_t>(d));
  for (int start = 0; start < d; ++start) {
    std::fill(relabel.begin(), relabel.end(), -1);
    relabel[static_cast<size_t>(start)] = 0;
    order[0] = start;
    int found = 1;
    for (int head = 0; head < found; ++head) {
      for (const Perm* e : edges) {
        const int y = (*e)(order[static_cast<size_t>(head)]);
        if (relabel[static_cast<size_t>(y)] < 0) {
          relabel[static_cast<size_t>(y)] = found;
          order[static_cast<size_t>(found++)] = y;
        }
      }
    }
    for (int x = 0; x < d; ++x) {
      const size_t nx = static_cast<size_t>(relabel[static_cast<size_t>(x)]);
      cand[nx] = relabel[static_cast<size_t>(o.a(x))];
      cand[static_cast<size_t>(d) + nx] = relabel[static_cast<size_t>(o.b(x))];
    }
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

long long orbit_size_by_alt_canonical(const Origami& o) {
  std::set<std::vector<int>> seen;
  std::vector<Origami> queue = {o};
  seen.insert(alt_canonical_key(o));
  for (size_t head = 0; head < queue.size(); ++head) {
    for (Generator g : {Generator::S, Generator::SInv, Generator::T, Generator::TInv}) {
      const Origami img = apply_generator(queue[head], g);
      if (seen.insert(alt_canonical_key(img)).second) queue.push_back(img);
    }
  }
  return static_cast<long long>(seen.size());
}

Word random_word(std::mt19937& rng, int length) {
  Word w;
  for (int i = 0; i < length; ++i) {
    const long long exp = static_cast<long long>(rng() % 9) - 4;
    w.letters.push_back(Letter{(rng() % 2) ? LetterKind::S : LetterKind::T, exp});
  }
  w.normalize();
  return w;
}

}  // namespace

TEST_SUITE("veech") {

TEST_CASE("surfaces with the full group") {
  for (const Origami& o : {make_origami(Perm(1), Perm(1)), wollmilchsau()}) {
    const CosetGraph g = orbit_coset_graph(o);
    CHECK(veech_index(g) == 1);
    const CuspData c = cusp_data(g);
    CHECK(c.widths == std::vector<int>{1});
    CHECK(c.level == 1);
    CHECK(contains_minus_identity(g));
    CHECK(contains_matrix(g, kT));
    CHECK(contains_matrix(g, kS));
    CHECK(contains_matrix(g, Mat2{13, 4, 29, 9}));
  }
}

TEST_CASE("two-square orbit") {
  const CosetGraph g = orbit_coset_graph(two_square());
  CHECK(veech_index(g) == 3);
  const CuspData c = cusp_data(g);
  CHECK(c.widths == std::vector<int>{1, 2});
  CHECK(c.level == 2);
  CHECK(contains_minus_identity(g));
  CHECK(!contains_matrix(g, kT));
  CHECK(contains_matrix(g, mat_pow(kT, 2)));
  CHECK(!contains_matrix(g, kS));
  CHECK(contains_matrix(g, kS * kS));
  CHECK(contains_matrix(g, kTPrime));
}

TEST_CASE("three-square L orbit") {
  const CosetGraph g = orbit_coset_graph(l_origami());
  CHECK(veech_index(g) == 3);
  CHECK(cusp_data(g).level == 2);
}

TEST_CASE("one-cylinder orbit data") {
  const CosetGraph g1 = orbit_coset_graph(build_even(2, 1));
  CHECK(veech_index(g1) == 9);
  CHECK(cusp_data(g1).widths == std::vector<int>{2, 3, 4});
  CHECK(cusp_data(g1).level == 12);
  CHECK(contains_minus_identity(g1));

  const CosetGraph g2 = orbit_coset_graph(build_stratum_origami({2}, 2));
  CHECK(veech_index(g2) == 9);
  CHECK(cusp_data(g2).widths == std::vector<int>{1, 3, 5});
  CHECK(cusp_data(g2).level == 15);

  const CosetGraph g3 = orbit_coset_graph(build_odd_pair(1, 1, 1));
  CHECK(veech_index(g3) == 24);
  CHECK(cusp_data(g3).widths == std::vector<int>{2, 3, 4, 4, 5, 6});
  CHECK(cusp_data(g3).level == 60);
}

TEST_CASE("index agrees with the conjugacy-backtracking oracle") {
  for (const Origami& o : {two_square(), l_origami(), build_even(2, 1), build_odd_pair(1, 1, 1)}) {
    CAPTURE(to_text(o));
    CHECK(veech_index(orbit_coset_graph(o)) == orbit_size_by_conjugacy(o));
  }
}

TEST_CASE("index agrees with an independently canonicalized enumeration") {
  for (const Origami& o : {two_square(), l_origami(), build_even(2, 1), build_odd_pair(1, 1, 1),
                           build_stratum_origami({2}, 2), build_odd_pair(1, 1, 6)}) {
    CAPTURE(to_text(o));
    CHECK(veech_index(orbit_coset_graph(o)) == orbit_size_by_alt_canonical(o));
  }
}

TEST_CASE("both rotation conventions enumerate the same orbit") {
  // The cw letter maps are the ccw maps of S^-1/T^-1, so the generated set is
  // identical; only the edge labels move around.
  for (const Origami& o : {two_square(), build_even(2, 1), build_odd_pair(1, 1, 6)}) {
    OrbitOptions cw;
    cw.convention = SConvention::RotateCw;
    const CosetGraph a = orbit_coset_graph(o);
    const CosetGraph b = orbit_coset_graph(o, cw);
    CHECK(veech_index(a) == veech_index(b));
    CHECK(cusp_data(a).widths == cusp_data(b).widths);
  }
}

TEST_CASE("eleven-square one-cylinder surface") {
  const CosetGraph g = orbit_coset_graph(build_odd_pair(1, 1, 6));
  CHECK(veech_index(g) == 240);
  const CuspData c = cusp_data(g);
  CHECK(c.level == 6930);
  CHECK(c.widths.size() == 34);
  CHECK(std::accumulate(c.widths.begin(), c.widths.end(), 0) == 240);
  CHECK(contains_minus_identity(g));

  CHECK(contains_matrix(g, mat_pow(kT, 11)));
  CHECK(contains_matrix(g, kS * mat_pow(kT, 15) * inverse(kS)));
  CHECK(contains_matrix(g, kTPrime * mat_pow(kT, 14) * inverse(kTPrime)));
  for (int e : {1, 2, 5, 10}) {
    CAPTURE(e);
    CHECK(!contains_matrix(g, mat_pow(kT, e)));
  }
}

TEST_CASE("membership through decomposition equals membership through action") {
  std::mt19937 rng(8001);
  for (const Origami& o : {two_square(), build_even(2, 1)}) {
    const CosetGraph g = orbit_coset_graph(o);
    const Origami& base = g.vertices[0];
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_word(rng, 1 + static_cast<int>(rng() % 6));
      const bool direct = canonical_form(apply_word(base, w)) == base;
      CHECK(contains_matrix(g, eval_word(w)) == direct);
    }
  }
}

TEST_CASE("schreier generators stabilize the base") {
  for (const Origami& o : {two_square(), build_even(2, 1), build_odd_pair(1, 1, 1)}) {
    const CosetGraph g = orbit_coset_graph(o);
    const Origami& base = g.vertices[0];
    const std::vector<Word> words = stabilizer_words(g);
    CHECK(!words.empty());
    for (const Word& w : words) {
      CHECK(canonical_form(apply_word(base, w)) == base);
      CHECK(contains_matrix(g, eval_word(w)));
    }
    const std::vector<Mat2> gens = stabilizer_generators(g);
    for (size_t i = 0; i < gens.size(); ++i) {
      CHECK(gens[i] != kIdentity);
      for (size_t j = i + 1; j < gens.size(); ++j) CHECK(gens[i] != gens[j]);
    }
  }
}

TEST_CASE("graph structure invariants") {
  for (const Origami& o : {two_square(), build_even(2, 1), build_odd_pair(1, 1, 1)}) {
    const CosetGraph g = orbit_coset_graph(o);
    const size_t n = g.vertices.size();
    for (const std::vector<int>* edge : {&g.s_edge, &g.sinv_edge, &g.t_edge, &g.tinv_edge}) {
      std::vector<int> sorted = *edge;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> want(n);
      std::iota(want.begin(), want.end(), 0);
      CHECK(sorted == want);  // each edge map is a permutation of the vertices
    }
    for (size_t v = 0; v < n; ++v) {
      CHECK(g.sinv_edge[static_cast<size_t>(g.s_edge[v])] == static_cast<int>(v));
      CHECK(g.tinv_edge[static_cast<size_t>(g.t_edge[v])] == static_cast<int>(v));
      CHECK(canonical_form(apply_word(g.vertices[0], g.tree_word[v])) == g.vertices[v]);
    }
  }
}

TEST_CASE("index is a relabeling invariant") {
  std::mt19937 rng(8002);
  const Origami o = build_odd_pair(1, 1, 1);
  std::vector<int> img(static_cast<size_t>(degree(o)));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  const Perm g = Perm::from_images(std::move(img));
  const Origami conj{g * o.a * g.inverse(), g * o.b * g.inverse()};
  CHECK(veech_index(orbit_coset_graph(conj)) == veech_index(orbit_coset_graph(o)));
  CHECK(cusp_data(orbit_coset_graph(conj)).widths == cusp_data(orbit_coset_graph(o)).widths);
}

TEST_CASE("vertex cap aborts enumeration") {
  OrbitOptions small;
  small.cap = 2;
  CHECK_THROWS_AS(orbit_coset_graph(two_square(), small), OrbitCapExceeded);
  try {
    orbit_coset_graph(build_odd_pair(1, 1, 6), OrbitOptions{100, kDefaultSConvention});
    FAIL("expected OrbitCapExceeded");
  } catch (const OrbitCapExceeded& e) {
    CHECK(e.partial_vertices >= 100);
  }
}

TEST_CASE("graph exports") {
  const CosetGraph g = orbit_coset_graph(two_square());
  const std::string dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 [peripheries=2];") != std::string::npos);
  CHECK(dot.find("label=\"S\"") != std::string::npos);
  CHECK(dot.find("label=\"T\"") != std::string::npos);

  const auto j = nlohmann::json::parse(graph_to_json_text(g));
  CHECK(j.at("base").get<int>() == 0);
  CHECK(j.at("convention").get<std::string>() == "ccw");
  CHECK(j.at("vertices").size() == 3);
  CHECK(j.at("s_edges").size() == 3);
  CHECK(j.at("t_edges").size() == 3);
}

}  // TEST_SUITE
