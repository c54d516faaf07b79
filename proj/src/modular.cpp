#include "gbsn/modular.hpp"

#include "gbsn/errors.hpp"

namespace gbsn {

AffineElement AffineElement::identity(int n) {
  return {VecQ(n, Rat(0)), MatQ::identity(n)};
}

AffineElement AffineElement::compose(const AffineElement& rhs) const {
  return {vec_add(translation, linear.apply(rhs.translation)), linear * rhs.linear};
}

AffineElement AffineElement::inverse() const {
  MatQ inv = linear.inverse();
  return {vec_neg(inv.apply(translation)), inv};
}

AffineElement AffineElement::power(long k) const {
  AffineElement base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  AffineElement acc = identity(linear.dim());
  while (e > 0) {
    if (e & 1) acc = acc.compose(base);
    e >>= 1;
    if (e > 0) base = base.compose(base);
  }
  return acc;
}

bool AffineElement::is_identity() const {
  return vec_is_zero(translation) && linear.is_identity();
}

std::string AffineElement::to_string() const {
  return "(" + vec_to_string(translation) + ", " + linear.to_string() + ")";
}

std::vector<MatQ> ModularRep::generators() const {
  std::vector<MatQ> out;
  for (int p : nontree_pairs) out.push_back(edge_image_fwd[p]);
  return out;
}

ModularRep modular_generators(const GLMGraph& g, const SpanningTree& t) {
  const int n = g.rank();
  ModularRep rep;
  rep.rank = n;
  rep.base_vertex = t.root;
  rep.transport.assign(g.num_vertices(), MatQ::identity(n));

  // transport along the tree: crossing e from i(e) to i(ebar) composes with
  // A_e * A_ebar^{-1}, which makes every tree edge image the identity
  for (int w : t.bfs_order) {
    if (w == t.root) continue;
    OrientedEdge e = t.edge_to[w];
    MatQ a = MatQ::from_int(g.inclusion(e));
    MatQ b = MatQ::from_int(g.inclusion(e.reverse()));
    rep.transport[w] = rep.transport[t.parent[w]] * a * b.inverse();
  }

  for (int p = 0; p < g.num_edge_pairs(); ++p) {
    OrientedEdge e{p, false};
    MatQ a = MatQ::from_int(g.inclusion(e));
    MatQ b = MatQ::from_int(g.inclusion(e.reverse()));
    MatQ m = rep.transport[g.terminal(e)] * b * a.inverse() *
             rep.transport[g.initial(e)].inverse();
    rep.edge_image_fwd.push_back(m);
    rep.edge_image_rev.push_back(m.inverse());
    if (!t.in_tree(p)) rep.nontree_pairs.push_back(p);
  }
  return rep;
}

AffineElement AffineRep::letter_image(const Letter& l) const {
  AffineElement base;
  if (l.gen.kind == GenRef::Kind::Vertex) {
    if (l.gen.vertex < 0 || l.gen.vertex >= int(transport.size()) || l.gen.coord < 0 ||
        l.gen.coord >= rank)
      throw UnknownGenerator("vertex generator (" + std::to_string(l.gen.vertex) + ", " +
                             std::to_string(l.gen.coord) + ")");
    VecQ tr(rank);
    for (int i = 0; i < rank; ++i) tr[i] = transport[l.gen.vertex].at(i, l.gen.coord);
    base = {std::move(tr), MatQ::identity(rank)};
  } else {
    if (l.gen.pair < 0 || l.gen.pair >= int(stable.size()))
      throw UnknownGenerator("stable letter " + std::to_string(l.gen.pair));
    base = {VecQ(rank, Rat(0)), stable[l.gen.pair]};
  }
  if (l.exp == 1) return base;
  return base.power(l.exp);
}

AffineRep delta_affine(const GLMGraph& g, const SpanningTree& t) {
  ModularRep m = modular_generators(g, t);
  AffineRep rep;
  rep.rank = m.rank;
  rep.transport = m.transport;
  rep.stable = m.edge_image_fwd;
  return rep;
}

AffineElement evaluate_word(const AffineRep& rep, const Word& w) {
  AffineElement acc = AffineElement::identity(rep.rank);
  for (const Letter& l : w) acc = acc.compose(rep.letter_image(l));
  return acc;
}

PresentationCheck verify_presentation(const AffineRep& rep, const StandardPresentation& pres) {
  for (const Relator& r : pres.relators) {
    AffineElement v = evaluate_word(rep, r.word);
    if (!v.is_identity()) return {false, r.label, v};
  }
  return {true, "", AffineElement::identity(rep.rank)};
}

}  // namespace gbsn
