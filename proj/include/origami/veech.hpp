#pragma once
//
// Veech groups of origamis as finite-index subgroups of SL(2,Z), computed by
// orbit/coset enumeration.
//
// Vertices of the coset graph are canonical forms of the origamis in the
// SL(2,Z)-orbit of the base; edges record the action of S and T.  The
// stabilizer of the base vertex is the Veech group; Schreier generators,
// membership tests (decompose a matrix into a word, walk the graph), cusp
// widths (cycles of the T-edge permutation) and the level (their lcm) all read
// off the graph.
//
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/origami.hpp"
#include "origami/sl2.hpp"

namespace origami {

struct OrbitCapExceeded : std::runtime_error {
  explicit OrbitCapExceeded(size_t partial)
      : std::runtime_error("orbit enumeration exceeded the vertex cap after " +
                           std::to_string(partial) + " vertices"),
        partial_vertices(partial) {}
  size_t partial_vertices;
};

struct CosetGraph {
  std::vector<Origami> vertices;  // canonical forms; vertices[0] is the base
  std::vector<int> s_edge;        // v -> index of canonical(S . v)
  std::vector<int> sinv_edge;
  std::vector<int> t_edge;
  std::vector<int> tinv_edge;
  std::vector<Word> tree_word;    // apply_word(base, tree_word[v]) == vertices[v]
  SConvention convention = kDefaultSConvention;

  int base() const { return 0; }
  long long size() const { return static_cast<long long>(vertices.size()); }
};

struct OrbitOptions {
  size_t cap = 1'000'000;
  SConvention convention = kDefaultSConvention;
};

// BFS over canonical forms; neighbour order S, S^-1, T, T^-1.  Deterministic.
CosetGraph orbit_coset_graph(const Origami& o, const OrbitOptions& opts = {});

// Index of the Veech group = number of vertices.
long long veech_index(const CosetGraph& g);

// Schreier generators of the stabilizer of the base vertex, one per non-tree
// S/T-edge, as words and as exact matrices (identity words dropped, duplicate
// matrices deduplicated; deterministic order).
std::vector<Word> stabilizer_words(const CosetGraph& g);
std::vector<Mat2> stabilizer_generators(const CosetGraph& g);

// True iff m (det 1) lies in the Veech group of the base: decompose into a
// word and walk the graph.  Well defined because the default action satisfies
// the SL(2,Z) relations.
bool contains_matrix(const CosetGraph& g, const Mat2& m);

bool contains_minus_identity(const CosetGraph& g);

struct CuspData {
  std::vector<int> widths;  // cycle lengths of the T-edge permutation, ascending
  long long level = 1;      // lcm of the widths
};

CuspData cusp_data(const CosetGraph& g);

// Graphviz export: S-edges solid, T-edges dashed, base vertex doubled.
std::string to_dot(const CosetGraph& g);

// JSON export of the graph (vertices in text form, edge arrays, base).
std::string graph_to_json_text(const CosetGraph& g);

}  // namespace origami
