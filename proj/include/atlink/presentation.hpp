#pragma once

#include <string>
#include <vector>

#include "atlink/graph.hpp"

namespace atlink {

// One letter of a group word: a named generator with exponent +1 or -1.
struct Letter {
  std::string gen;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word w);
// Free reduction followed by cancellation across the wrap-around.
Word cyclic_reduce(Word w);
// Whether a equals some rotation of b or of b^-1 (as cyclic words).
bool equal_up_to_rotation_and_inversion(const Word& a, const Word& b);

struct Relation {
  Word left;
  Word right;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
};

// One generator per vertex; per edge with label m, the relation equating the
// two alternating products of length m (s t s ... = t s t ...).  Undirected
// input orders each edge's endpoints canonically.
Presentation standard_presentation(const LabeledGraph& g);
Presentation standard_presentation(const DirectedLabeledGraph& dg);

// Rewritten presentation in which every relation is a triangle x = a * b.
//
// Per edge e = (s, t) with label m, writing x for "x[key]" and a_i for
// "alpha[key][i]" (key the canonical edge key):
//   m = 2:   x = s t,  x = t s
//   m >= 3:  x = s t,  x = t a_3,  x = a_i a_{i+1} (3 <= i < m),  x = a_m s
// giving exactly m relations per edge.  Generator order: all vertices, then
// per edge (canonical order) its x followed by its alphas.
struct TriangularPresentation {
  Presentation pres;

  // A relation x = a * b, as generator indices into pres.generators.
  struct Tri {
    int x = 0;
    int a = 0;
    int b = 0;
    int edge = 0;      // edge of the underlying graph
    int position = 0;  // 0-based position within that edge's relation block
  };
  std::vector<Tri> relations;

  std::vector<int> x_of_edge;
  std::vector<std::vector<int>> alpha_of_edge;  // indices of alpha_3..alpha_m
  std::vector<int> first_relation_of_edge;
  int vertex_generator_count = 0;

  int alpha_index(int edge, int i) const { return alpha_of_edge[edge][i - 3]; }
};

TriangularPresentation triangular_presentation(const DirectedLabeledGraph& dg);

// Rewrites a word over the triangular generators as a word over the vertex
// generators, substituting x[e] = s t, alpha[e][3] = t^-1 x[e],
// alpha[e][i+1] = alpha[e][i]^-1 x[e], and freely reducing.
Word expand_to_standard(const Word& w, const DirectedLabeledGraph& dg);

// Checks, for every edge, that the triangular relations present the same
// group as the standard relation: all relations but the last expand to
// trivial words, and the last expands to the alternating relation (as a
// cyclic relator, up to rotation and inversion).
bool verify_triangular_equivalence(const DirectedLabeledGraph& dg);

// JSON with fields {"generators": [...], "relations": [{"left": [...],
// "right": [...]}]}, a letter rendered as {"gen": name, "exp": +-1}.
std::string serialize_presentation(const Presentation& p);

}  // namespace atlink
