#include "gbsn/presentation.hpp"

#include "gbsn/errors.hpp"

namespace gbsn {

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

std::string StandardPresentation::letter_name(const Letter& l) const {
  std::string base;
  if (l.gen.kind == GenRef::Kind::Stable) {
    base = "t[" + pair_ids[l.gen.pair] + "]";
  } else {
    base = vertex_names[l.gen.vertex] + "." + std::to_string(l.gen.coord);
  }
  if (l.exp == 1) return base;
  return base + "^" + std::to_string(l.exp);
}

std::string StandardPresentation::word_name(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += letter_name(w[i]);
  }
  return s;
}

namespace {

// i_e(x_k) as a word in the generators of the initial vertex group: column
// k of the inclusion matrix gives the exponents.
Word inclusion_word(const GLMGraph& g, OrientedEdge e, int k) {
  const MatZ& a = g.inclusion(e);
  const int v = g.initial(e);
  Word w;
  for (int j = 0; j < g.rank(); ++j) {
    const Int& c = a.at(j, k);
    if (c == 0) continue;
    if (!c.fits_slong_p())
      throw Error("inclusion matrix entry " + c.get_str() + " exceeds the exponent range");
    w.push_back({GenRef::vertex_gen(v, j), c.get_si()});
  }
  return w;
}

}  // namespace

StandardPresentation standard_presentation(const GLMGraph& g, const SpanningTree& t) {
  StandardPresentation pres;
  pres.rank = g.rank();
  pres.vertex_names = g.vertices();
  for (const EdgePair& e : g.edges()) pres.pair_ids.push_back(e.id);

  for (int p = 0; p < g.num_edge_pairs(); ++p) {
    const std::string& id = g.edge(p).id;
    for (bool rev : {false, true}) {
      OrientedEdge e{p, rev};
      long s = rev ? -1 : 1;
      for (int k = 0; k < g.rank(); ++k) {
        Word w;
        w.push_back({GenRef::stable(p), s});
        Word inc = inclusion_word(g, e, k);
        w.insert(w.end(), inc.begin(), inc.end());
        w.push_back({GenRef::stable(p), -s});
        Word out = word_inverse(inclusion_word(g, e.reverse(), k));
        w.insert(w.end(), out.begin(), out.end());
        pres.relators.push_back(
            {std::move(w), "edge " + id + (rev ? " rev " : " fwd ") + std::to_string(k)});
      }
    }
    pres.relators.push_back(
        {Word{{GenRef::stable(p), 1}, {GenRef::stable(p), -1}}, "pair " + id});
  }
  for (int p : t.tree_pairs)
    pres.relators.push_back({Word{{GenRef::stable(p), 1}}, "tree " + g.edge(p).id});
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int i = 0; i < g.rank(); ++i)
      for (int j = i + 1; j < g.rank(); ++j) {
        Word w{{GenRef::vertex_gen(v, i), 1},
               {GenRef::vertex_gen(v, j), 1},
               {GenRef::vertex_gen(v, i), -1},
               {GenRef::vertex_gen(v, j), -1}};
        pres.relators.push_back({std::move(w), "commutator " + g.vertex_name(v) + " " +
                                                   std::to_string(i) + "," + std::to_string(j)});
      }
  return pres;
}

}  // namespace gbsn
