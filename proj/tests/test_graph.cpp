#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "gbsn/errors.hpp"
#include "gbsn/graph_io.hpp"
#include "gbsn/presentation.hpp"
#include "gbsn/random_graph.hpp"
#include "gbsn/tree_ball.hpp"
#include "test_util.hpp"

using namespace gbsn;
using gbsn::test::data_path;
using gbsn::test::mz;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GLMGraph bs(long m, long n) {
  EdgePair e;
  e.id = "e";
  e.from = 0;
  e.to = 0;
  e.matrix_from = mz({{m}});
  e.matrix_to = mz({{n}});
  return GLMGraph(1, {"v"}, {e});
}

}  // namespace

TEST_CASE("parse: valid documents") {
  GLMGraph g = load_graph_file(data_path("bs23.json"));
  CHECK(g.rank() == 1);
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edge_pairs() == 1);
  CHECK(g.edge(0).matrix_from.at(0, 0) == 2);
  CHECK(g.edge(0).matrix_to.at(0, 0) == 3);

  GLMGraph lm = load_graph_file(data_path("rank2_rotation.json"));
  CHECK(lm.rank() == 2);
  CHECK(lm.edge(0).matrix_from == mz({{1, -2}, {2, 1}}));
}

TEST_CASE("parse: malformed and invalid documents") {
  CHECK_THROWS_AS(parse_graph("{"), ParseError);
  CHECK_THROWS_AS(parse_graph("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["v"], "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"rank": 0, "vertices": ["v"], "edges": []})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_graph(R"({"rank": 1, "vertices": [], "edges": []})"), ParseError);
  // wrong matrix shape
  CHECK_THROWS_AS(
      parse_graph(
          R"({"rank": 2, "vertices": ["v"],
              "edges": [{"id":"e","from":"v","to":"v","matrix_from":[[1]],"matrix_to":[[1,0],[0,1]]}]})"),
      ParseError);
  // unknown endpoint
  CHECK_THROWS_AS(
      parse_graph(
          R"({"rank": 1, "vertices": ["v"],
              "edges": [{"id":"e","from":"v","to":"w","matrix_from":[[1]],"matrix_to":[[1]]}]})"),
      ValidationError);
  // singular inclusion matrix, named edge
  try {
    load_graph_file(data_path("singular.json"));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("'e'") != std::string::npos);
    CHECK(std::string(e.what()).find("singular") != std::string::npos);
  }
  CHECK_THROWS_AS(load_graph_file(data_path("disconnected.json")), ValidationError);
  CHECK_THROWS_AS(load_graph_file(data_path("malformed.json")), ParseError);
  // duplicate ids
  CHECK_THROWS_AS(GLMGraph(1, {"v", "v"}, {}), ValidationError);
}

TEST_CASE("parse: truncated documents never crash") {
  std::string full = slurp(data_path("two_vertex_chain.json"));
  for (size_t len = 0; len < full.size(); len += 7) {
    try {
      parse_graph(full.substr(0, len));
    } catch (const Error&) {
      // any library error is acceptable; crashes and foreign exceptions are not
    }
  }
  CHECK(parse_graph(full).num_vertices() == 2);
}

TEST_CASE("serialize round-trip") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    GLMGraph g = random_graph(rng);
    GLMGraph back = parse_graph(serialize_graph(g));
    CHECK(back == g);
  }
  for (const char* name : {"bs23.json", "rank2_rotation.json", "two_vertex_chain.json"}) {
    GLMGraph g = parse_graph(slurp(data_path(name)));
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("oriented edge involution") {
  GLMGraph g = load_graph_file(data_path("two_vertex_chain.json"));
  for (OrientedEdge e : g.oriented_edges()) {
    CHECK(e.reverse().reverse() == e);
    CHECK(g.initial(e.reverse()) == g.terminal(e));
    EdgeClass c = classify_edge(g, e);
    EdgeClass cc = classify_edge(g, e.reverse().reverse());
    CHECK(c.ascending == cc.ascending);
    CHECK(c.strictly_ascending == cc.strictly_ascending);
  }
}

TEST_CASE("spanning tree: deterministic BFS") {
  // single vertex with a loop: empty tree
  GLMGraph loop = load_graph_file(data_path("bs23.json"));
  SpanningTree t0 = spanning_tree(loop);
  CHECK(t0.root == 0);
  CHECK(t0.tree_pairs.empty());

  // path a - b - c: both edges in the tree
  std::vector<EdgePair> edges(2);
  edges[0] = {"e1", 0, 1, MatZ::identity(1), mz({{2}})};
  edges[1] = {"e2", 1, 2, MatZ::identity(1), mz({{3}})};
  GLMGraph path(1, {"a", "b", "c"}, edges);
  SpanningTree t1 = spanning_tree(path);
  CHECK(t1.tree_pairs.size() == 2);
  CHECK(t1.root == 0);

  // triangle: BFS from the lexicographically least vertex takes the two
  // edges incident to it, in listed order
  std::vector<EdgePair> tri(3);
  tri[0] = {"e1", 0, 1, MatZ::identity(1), MatZ::identity(1)};
  tri[1] = {"e2", 1, 2, MatZ::identity(1), MatZ::identity(1)};
  tri[2] = {"e3", 2, 0, MatZ::identity(1), MatZ::identity(1)};
  GLMGraph triangle(1, {"a", "b", "c"}, tri);
  SpanningTree t2 = spanning_tree(triangle);
  CHECK(t2.root == 0);
  CHECK(t2.tree_pairs == std::vector<int>{0, 2});  // e1 attaches b, e3 attaches c

  // root is the lexicographically least id, not the first listed
  GLMGraph named(1, {"z", "a"}, {{"e", 0, 1, MatZ::identity(1), mz({{2}})}});
  CHECK(spanning_tree(named).root == 1);
}

TEST_CASE("classify_edge") {
  GLMGraph bs12 = bs(1, 2);
  EdgeClass fwd = classify_edge(bs12, {0, false});
  CHECK(fwd.ascending);
  CHECK(fwd.strictly_ascending);
  EdgeClass rev = classify_edge(bs12, {0, true});
  CHECK_FALSE(rev.ascending);

  GLMGraph bs23 = bs(2, 3);
  CHECK_FALSE(classify_edge(bs23, {0, false}).ascending);
  CHECK_FALSE(classify_edge(bs23, {0, true}).ascending);

  GLMGraph bs11 = bs(1, 1);
  CHECK(classify_edge(bs11, {0, false}).ascending);
  CHECK(classify_edge(bs11, {0, true}).ascending);
  CHECK_FALSE(classify_edge(bs11, {0, false}).strictly_ascending);
  // |det| = 1 includes negative determinants
  GLMGraph bsm1 = bs(-1, 3);
  CHECK(classify_edge(bsm1, {0, false}).ascending);
  CHECK(classify_edge(bsm1, {0, false}).strictly_ascending);
}

TEST_CASE("collapse_move: frozen example") {
  GLMGraph g = load_graph_file(data_path("two_vertex_chain.json"));
  // edge e: v -> w with A_e = I, A_ebar = diag(2,1); loop f at v
  GLMGraph c = collapse_move(g, {0, false});
  CHECK(c.num_vertices() == 1);
  CHECK(c.vertex_name(0) == "w");
  REQUIRE(c.num_edge_pairs() == 1);
  const EdgePair& f = c.edge(0);
  CHECK(f.id == "f");
  CHECK(f.matrix_from == mz({{2, 2}, {0, 1}}));  // diag(2,1) * [[1,1],[0,1]]
  CHECK(f.matrix_to == mz({{2, 0}, {1, 1}}));    // diag(2,1) * [[1,0],[1,1]]
}

TEST_CASE("collapse_move: a unimodular non-identity inclusion twists the re-attachment") {
  std::vector<EdgePair> edges(2);
  edges[0] = {"e", 0, 1, mz({{0, 1}, {1, 0}}), mz({{2, 0}, {0, 1}})};
  edges[1] = {"f", 0, 0, mz({{1, 1}, {0, 1}}), mz({{1, 0}, {1, 1}})};
  GLMGraph g(2, {"v", "w"}, edges);
  GLMGraph c = collapse_move(g, {0, false});
  // A' = A_ebar * A_e^{-1} * B = diag(2,1) * swap * B
  MatZ d = mz({{2, 0}, {0, 1}}) * mz({{0, 1}, {1, 0}});
  CHECK(c.edge(0).matrix_from == d * mz({{1, 1}, {0, 1}}));
  CHECK(c.edge(0).matrix_to == d * mz({{1, 0}, {1, 1}}));
}

TEST_CASE("collapse_move: precondition violations") {
  GLMGraph loop = bs(1, 2);
  CHECK_THROWS_AS(collapse_move(loop, {0, false}), CollapseError);  // loop
  GLMGraph chain = load_graph_file(data_path("two_vertex_chain.json"));
  CHECK_THROWS_AS(collapse_move(chain, {0, true}), CollapseError);  // not ascending
}

TEST_CASE("reduce") {
  // already reduced: unchanged
  GLMGraph bs23 = load_graph_file(data_path("bs23.json"));
  CHECK(reduce(bs23) == bs23);

  // the two-vertex example collapses to one vertex
  GLMGraph chain = load_graph_file(data_path("two_vertex_chain.json"));
  GLMGraph r = reduce(chain);
  CHECK(r.num_vertices() == 1);
  CHECK(r.num_edge_pairs() == 1);

  // a path of identity edges collapses to a single vertex with no edges
  std::vector<EdgePair> edges(2);
  edges[0] = {"e1", 0, 1, MatZ::identity(2), MatZ::identity(2)};
  edges[1] = {"e2", 1, 2, MatZ::identity(2), MatZ::identity(2)};
  GLMGraph path(2, {"a", "b", "c"}, edges);
  GLMGraph rp = reduce(path);
  CHECK(rp.num_vertices() == 1);
  CHECK(rp.num_edge_pairs() == 0);

  // no non-loop ascending edge remains
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    GLMGraph g = random_graph(rng);
    GLMGraph red = reduce(g);
    for (OrientedEdge e : red.oriented_edges())
      CHECK((red.is_loop(e) || !classify_edge(red, e).ascending));
    CHECK(reduce(red) == red);
  }
}

TEST_CASE("standard presentation: BS(2,3) relators") {
  GLMGraph g = load_graph_file(data_path("bs23.json"));
  SpanningTree t = spanning_tree(g);
  StandardPresentation pres = standard_presentation(g, t);
  // edge relator (forward): t a^2 t^-1 a^-3
  REQUIRE(!pres.relators.empty());
  const Word& w = pres.relators.front().word;
  REQUIRE(w.size() == 4);
  CHECK(w[0].gen.kind == GenRef::Kind::Stable);
  CHECK(w[0].exp == 1);
  CHECK(w[1].gen.kind == GenRef::Kind::Vertex);
  CHECK(w[1].exp == 2);
  CHECK(w[2].gen.kind == GenRef::Kind::Stable);
  CHECK(w[2].exp == -1);
  CHECK(w[3].exp == -3);
  CHECK(pres.word_name(w) == "t[e] v.0^2 t[e]^-1 v.0^-3");

  // pair relator present; no tree relators for a loop-only graph
  bool has_pair = false, has_tree = false;
  for (const Relator& r : pres.relators) {
    if (r.label.rfind("pair", 0) == 0) has_pair = true;
    if (r.label.rfind("tree", 0) == 0) has_tree = true;
  }
  CHECK(has_pair);
  CHECK_FALSE(has_tree);
}

TEST_CASE("standard presentation: rank-2 identity loop and tree letters") {
  std::vector<EdgePair> edges(1);
  edges[0] = {"e", 0, 0, MatZ::identity(2), MatZ::identity(2)};
  GLMGraph g(2, {"v"}, edges);
  StandardPresentation pres = standard_presentation(g, spanning_tree(g));
  // relators t a t^-1 a^-1 and t b t^-1 b^-1 plus the commutator [a, b]
  int conj = 0, comm = 0;
  for (const Relator& r : pres.relators) {
    if (r.label.rfind("edge", 0) == 0) ++conj;
    if (r.label.rfind("commutator", 0) == 0) ++comm;
  }
  CHECK(conj == 4);  // two orientations, two basis vectors
  CHECK(comm == 1);

  // a tree edge contributes the single-letter relator t_e
  GLMGraph chain = load_graph_file(data_path("two_vertex_chain.json"));
  SpanningTree t = spanning_tree(chain);
  StandardPresentation pres2 = standard_presentation(chain, t);
  bool tree_letter = false;
  for (const Relator& r : pres2.relators)
    if (r.label == "tree e" && r.word.size() == 1 &&
        r.word[0].gen.kind == GenRef::Kind::Stable)
      tree_letter = true;
  CHECK(tree_letter);
}

TEST_CASE("tree_ball: frozen degrees") {
  GLMGraph bs23 = load_graph_file(data_path("bs23.json"));
  TreeBall b1 = tree_ball(bs23, 0, 1, 100000);
  CHECK(b1.vertices.front().degree == 5);
  CHECK(b1.vertices.size() == 6);

  GLMGraph bs11 = load_graph_file(data_path("bs11.json"));
  CHECK(tree_ball(bs11, 0, 1, 100000).vertices.front().degree == 2);

  GLMGraph lm = load_graph_file(data_path("rank2_rotation.json"));
  CHECK(tree_ball(lm, 0, 1, 100000).vertices.front().degree == 10);
}

TEST_CASE("tree_ball: radius-2 consistency and degree sums") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    GLMGraph g = random_graph(rng, {1, 2, 2, 1, 2});
    SpanningTree t = spanning_tree(g);
    TreeBall b2 = tree_ball(g, t.root, 2, 200000);
    TreeBall b1 = tree_ball(g, t.root, 1, 200000);
    // the radius-1 ball is a prefix of the radius-2 ball (level order)
    REQUIRE(b1.vertices.size() <= b2.vertices.size());
    for (size_t i = 0; i < b1.vertices.size(); ++i) {
      CHECK(b1.vertices[i].type == b2.vertices[i].type);
      CHECK(b1.vertices[i].depth == b2.vertices[i].depth);
      CHECK(b1.vertices[i].degree == b2.vertices[i].degree);
    }
    // every vertex's stated degree equals sum of |det| over outgoing types
    for (const TreeBallVertex& v : b2.vertices) {
      Int expect(0);
      for (OrientedEdge e : g.oriented_edges())
        if (g.initial(e) == v.type) expect += abs_int(g.inclusion(e).det());
      CHECK(v.degree == expect);
    }
    // interior vertices have all their tree edges inside the ball
    std::vector<Int> ball_degree(b2.vertices.size(), Int(0));
    for (auto [a, c] : b2.edges) {
      ball_degree[a] += 1;
      ball_degree[c] += 1;
    }
    for (size_t i = 0; i < b2.vertices.size(); ++i)
      if (b2.vertices[i].depth < 2) CHECK(ball_degree[i] == b2.vertices[i].degree);
  }
}

TEST_CASE("tree_ball: cap exceedance reports a partial count") {
  GLMGraph bs23 = load_graph_file(data_path("bs23.json"));
  try {
    tree_ball(bs23, 0, 5, 20);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.partial_count == 20);
  }
}
