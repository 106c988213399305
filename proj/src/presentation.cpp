#include "atlink/presentation.hpp"

#include <algorithm>

#include "json.hpp"

namespace atlink {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (auto& letter : w) {
    if (!out.empty() && out.back().gen == letter.gen && out.back().exp == -letter.exp)
      out.pop_back();
    else
      out.push_back(std::move(letter));
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().exp == -w.back().exp) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

namespace {

bool equal_up_to_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t shift = 0; shift < b.size(); ++shift) {
    bool match = true;
    for (size_t i = 0; i < a.size() && match; ++i)
      match = a[i] == b[(i + shift) % b.size()];
    if (match) return true;
  }
  return false;
}

}  // namespace

bool equal_up_to_rotation_and_inversion(const Word& a, const Word& b) {
  return equal_up_to_rotation(a, b) || equal_up_to_rotation(a, inverse(b));
}

namespace {

// Alternating product g h g h ... of the given length.
Word alternating(const std::string& g, const std::string& h, int length) {
  Word w;
  for (int i = 0; i < length; ++i) w.push_back({i % 2 == 0 ? g : h, 1});
  return w;
}

Presentation standard_from_pairs(const LabeledGraph& g,
                                 const std::vector<std::pair<int, int>>& ends) {
  Presentation p;
  p.generators = g.vertex_names();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [s, t] = ends[e];
    const int m = g.edge(e).label;
    p.relations.push_back({alternating(g.name(s), g.name(t), m),
                           alternating(g.name(t), g.name(s), m)});
  }
  return p;
}

}  // namespace

Presentation standard_presentation(const LabeledGraph& g) {
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges()) ends.emplace_back(e.u, e.v);
  return standard_from_pairs(g, ends);
}

Presentation standard_presentation(const DirectedLabeledGraph& dg) {
  std::vector<std::pair<int, int>> ends;
  for (int e = 0; e < dg.base().edge_count(); ++e)
    ends.emplace_back(dg.source(e), dg.target(e));
  return standard_from_pairs(dg.base(), ends);
}

TriangularPresentation triangular_presentation(const DirectedLabeledGraph& dg) {
  const LabeledGraph& g = dg.base();
  TriangularPresentation tp;
  tp.pres.generators = g.vertex_names();
  tp.vertex_generator_count = g.vertex_count();
  tp.x_of_edge.resize(g.edge_count());
  tp.alpha_of_edge.resize(g.edge_count());
  tp.first_relation_of_edge.resize(g.edge_count());

  for (int e = 0; e < g.edge_count(); ++e) {
    const std::string key = g.edge_key(e);
    tp.x_of_edge[e] = static_cast<int>(tp.pres.generators.size());
    tp.pres.generators.push_back("x[" + key + "]");
    for (int i = 3; i <= g.edge(e).label; ++i) {
      tp.alpha_of_edge[e].push_back(static_cast<int>(tp.pres.generators.size()));
      tp.pres.generators.push_back("alpha[" + key + "][" + std::to_string(i) + "]");
    }
  }

  auto add = [&tp](int x, int a, int b, int edge, int position) {
    tp.relations.push_back({x, a, b, edge, position});
    const auto& names = tp.pres.generators;
    tp.pres.relations.push_back(
        {Word{{names[x], 1}}, Word{{names[a], 1}, {names[b], 1}}});
  };

  for (int e = 0; e < g.edge_count(); ++e) {
    tp.first_relation_of_edge[e] = static_cast<int>(tp.relations.size());
    const int s = dg.source(e), t = dg.target(e), m = g.edge(e).label;
    const int x = tp.x_of_edge[e];
    if (m == 2) {
      add(x, s, t, e, 0);
      add(x, t, s, e, 1);
      continue;
    }
    add(x, s, t, e, 0);
    add(x, t, tp.alpha_index(e, 3), e, 1);
    for (int i = 3; i < m; ++i)
      add(x, tp.alpha_index(e, i), tp.alpha_index(e, i + 1), e, i - 1);
    add(x, tp.alpha_index(e, m), s, e, m - 1);
  }
  return tp;
}

namespace {

// Fully expanded form of every triangular generator, over vertex generators.
std::vector<Word> expansion_table(const TriangularPresentation& tp,
                                  const DirectedLabeledGraph& dg) {
  const LabeledGraph& g = dg.base();
  std::vector<Word> table(tp.pres.generators.size());
  for (int v = 0; v < tp.vertex_generator_count; ++v)
    table[v] = {{tp.pres.generators[v], 1}};
  for (int e = 0; e < g.edge_count(); ++e) {
    const Word& s = table[dg.source(e)];
    const Word& t = table[dg.target(e)];
    Word x = s;
    x.insert(x.end(), t.begin(), t.end());
    table[tp.x_of_edge[e]] = free_reduce(x);
    Word prev;
    for (int i = 3; i <= g.edge(e).label; ++i) {
      // alpha_3 = t^-1 x, alpha_{i+1} = alpha_i^-1 x
      Word w = (i == 3) ? inverse(t) : inverse(prev);
      w.insert(w.end(), table[tp.x_of_edge[e]].begin(), table[tp.x_of_edge[e]].end());
      prev = free_reduce(w);
      table[tp.alpha_index(e, i)] = prev;
    }
  }
  return table;
}

Word expand_with_table(const Word& w, const TriangularPresentation& tp,
                       const std::vector<Word>& table) {
  Word out;
  for (const auto& letter : w) {
    int idx = -1;
    for (size_t i = 0; i < tp.pres.generators.size(); ++i)
      if (tp.pres.generators[i] == letter.gen) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0) throw PreconditionError("unknown generator \"" + letter.gen + "\"");
    const Word piece = letter.exp == 1 ? table[idx] : inverse(table[idx]);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(std::move(out));
}

}  // namespace

Word expand_to_standard(const Word& w, const DirectedLabeledGraph& dg) {
  const auto tp = triangular_presentation(dg);
  return expand_with_table(w, tp, expansion_table(tp, dg));
}

bool verify_triangular_equivalence(const DirectedLabeledGraph& dg) {
  const LabeledGraph& g = dg.base();
  const auto tp = triangular_presentation(dg);
  const auto table = expansion_table(tp, dg);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int m = g.edge(e).label;
    const int first = tp.first_relation_of_edge[e];
    for (int pos = 0; pos < m; ++pos) {
      const auto& tri = tp.relations[first + pos];
      Word lhs = table[tri.x];
      Word rhs = table[tri.a];
      rhs.insert(rhs.end(), table[tri.b].begin(), table[tri.b].end());
      Word relator = lhs;
      const Word rhs_inv = inverse(free_reduce(rhs));
      relator.insert(relator.end(), rhs_inv.begin(), rhs_inv.end());
      relator = free_reduce(relator);
      if (pos < m - 1) {
        // Definitional relations must expand to nothing.
        if (!relator.empty()) return false;
      } else {
        // The closing relation must carry the alternating relation.
        const std::string s = g.name(dg.source(e)), t = g.name(dg.target(e));
        Word braid = alternating(s, t, m);
        const Word braid_inv = inverse(alternating(t, s, m));
        braid.insert(braid.end(), braid_inv.begin(), braid_inv.end());
        if (!equal_up_to_rotation_and_inversion(cyclic_reduce(relator),
                                                cyclic_reduce(free_reduce(braid))))
          return false;
      }
    }
  }
  return true;
}

namespace {

nlohmann::ordered_json word_to_json(const Word& w) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& letter : w) {
    nlohmann::ordered_json l;
    l["gen"] = letter.gen;
    l["exp"] = letter.exp;
    out.push_back(l);
  }
  return out;
}

}  // namespace

std::string serialize_presentation(const Presentation& p) {
  nlohmann::ordered_json out;
  out["generators"] = p.generators;
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : p.relations) {
    nlohmann::ordered_json jr;
    jr["left"] = word_to_json(r.left);
    jr["right"] = word_to_json(r.right);
    rels.push_back(jr);
  }
  out["relations"] = rels;
  return out.dump(2) + "\n";
}

}  // namespace atlink
