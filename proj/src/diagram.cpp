#include "legfill/diagram.hpp"

#include <numeric>
#include <stdexcept>

namespace legfill {

namespace {

// Union-find over crossings, for per-piece checks.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LagrangianDiagram::LagrangianDiagram(Ctx ctx, std::vector<ChordInfo> crossings,
                                     std::vector<EdgeRec> edges,
                                     std::vector<Corner> outer_markers)
    : ctx_(std::move(ctx)),
      alpha_(make_alphabet(crossings)),
      crossings_(std::move(crossings)),
      edges_(std::move(edges)) {
  const int V = crossing_count(), E = edge_count();
  if (V == 0) throw std::invalid_argument("diagram needs at least one crossing");

  dart_out_.assign(V, {-1, -1, -1, -1});
  auto claim = [&](int c, int p, int dart) {
    if (c < 0 || c >= V || p < 0 || p > 3)
      throw std::invalid_argument("edge endpoint out of range");
    if (dart_out_[c][p] != -1)
      throw std::invalid_argument("port used twice at crossing " + label(c));
    dart_out_[c][p] = dart;
  };
  for (int e = 0; e < E; ++e) {
    claim(edges_[e].tail_crossing, edges_[e].tail_port, forward_dart(e));
    claim(edges_[e].head_crossing, edges_[e].head_port, reverse_dart(e));
    for (const auto& bp : edges_[e].base_points) {
      if (bp.var < 0 || bp.var >= ctx_->arity())
        throw std::invalid_argument("base point variable out of range");
      if (bp.sign != 1 && bp.sign != -1)
        throw std::invalid_argument("base point sign must be +1 or -1");
    }
  }
  for (int c = 0; c < V; ++c)
    for (int p = 0; p < 4; ++p)
      if (dart_out_[c][p] == -1)
        throw std::invalid_argument("open port at crossing " + label(c));

  trace_faces();
  validate(outer_markers);
}

std::pair<int, int> LagrangianDiagram::dart_arrival(int d) const {
  const EdgeRec& e = edges_[dart_edge(d)];
  if (dart_is_reverse(d)) return {e.tail_crossing, e.tail_port};
  return {e.head_crossing, e.head_port};
}

Corner LagrangianDiagram::corner_of(int d) const {
  auto [c, p] = dart_arrival(d);
  return Corner{c, (p + 3) % 4};
}

int LagrangianDiagram::next_in_face(int d) const {
  auto [c, p] = dart_arrival(d);
  return dart_out_[c][(p + 3) % 4];
}

void LagrangianDiagram::trace_faces() {
  const int D = 2 * edge_count();
  std::vector<char> seen(D, 0);
  for (int start = 0; start < D; ++start) {
    if (seen[start]) continue;
    Face f;
    int d = start;
    do {
      seen[d] = 1;
      f.darts.push_back(d);
      f.corners.push_back(corner_of(d));
      d = next_in_face(d);
    } while (d != start);
    faces_.push_back(std::move(f));
  }
}

void LagrangianDiagram::validate(const std::vector<Corner>& outer_markers) {
  const int V = crossing_count(), E = edge_count();

  // Face corners partition the quadrants: each exactly once.
  face_at_.assign(V, {-1, -1, -1, -1});
  for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi)
    for (const Corner& cr : faces_[fi].corners) {
      if (face_at_[cr.crossing][cr.quadrant] != -1)
        throw std::invalid_argument("quadrant covered by two faces at crossing " +
                                    label(cr.crossing));
      face_at_[cr.crossing][cr.quadrant] = fi;
    }

  // Connected pieces of the underlying 4-valent graph.
  Dsu dsu(V);
  for (const EdgeRec& e : edges_) dsu.unite(e.tail_crossing, e.head_crossing);
  std::vector<int> piece(V);
  int pieces = 0;
  {
    std::vector<int> id(V, -1);
    for (int c = 0; c < V; ++c) {
      int r = dsu.find(c);
      if (id[r] == -1) id[r] = pieces++;
      piece[c] = id[r];
    }
  }

  // Each piece embeds as a disjoint union of disks.
  if (V - E + static_cast<int>(faces_.size()) != 2 * pieces)
    throw std::invalid_argument("diagram is not planar");

  // Orientation runs head-to-tail through every crossing; following strands
  // (ports NW<->SE, NE<->SW) partitions the edges into link components.
  std::vector<int> succ(E);
  for (int e = 0; e < E; ++e) {
    int out = dart_out_[edges_[e].head_crossing][(edges_[e].head_port + 2) % 4];
    if (dart_is_reverse(out))
      throw std::invalid_argument("inconsistent orientation through crossing " +
                                  label(edges_[e].head_crossing));
    succ[e] = dart_edge(out);
  }
  std::vector<int> comp(E, -1);
  components_ = 0;
  for (int e = 0; e < E; ++e) {
    if (comp[e] != -1) continue;
    for (int x = e; comp[x] == -1; x = succ[x]) comp[x] = components_;
    ++components_;
  }

  // Markers flag one unbounded face per connected piece.
  std::vector<int> outer_of_piece(pieces, -1);
  for (const Corner& m : outer_markers) {
    if (m.crossing < 0 || m.crossing >= V || m.quadrant < 0 || m.quadrant > 3)
      throw std::invalid_argument("outer marker out of range");
    int fi = face_at_[m.crossing][m.quadrant];
    int pc = piece[m.crossing];
    if (outer_of_piece[pc] != -1 && outer_of_piece[pc] != fi)
      throw std::invalid_argument("two unbounded faces marked in one piece");
    outer_of_piece[pc] = fi;
    faces_[fi].bounded = false;
  }
  for (int p = 0; p < pieces; ++p)
    if (outer_of_piece[p] == -1)
      throw std::invalid_argument("a connected piece has no outer marker");

  for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi)
    if (faces_[fi].bounded) bounded_faces_.push_back(fi);

  // Every link component needs a base point for H1 coefficients to make sense.
  std::vector<int> bps(components_, 0);
  for (int e = 0; e < E; ++e) bps[comp[e]] += static_cast<int>(edges_[e].base_points.size());
  for (int k = 0; k < components_; ++k)
    if (bps[k] == 0) throw std::invalid_argument("link component without a base point");
}

LagrangianDiagram build_torus_2n(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("(2,n) torus link diagram requires odd n >= 1");

  std::vector<ChordInfo> crossings;
  for (int i = 1; i <= n; ++i) crossings.push_back({"b" + std::to_string(i), 0});
  crossings.push_back({"a1", 1});
  crossings.push_back({"a2", 1});
  const int a1 = n, a2 = n + 1;
  auto b = [](int i) { return i - 1; };  // b_i, 1-based

  Ctx ctx = make_context({"s0"});

  std::vector<EdgeRec> edges;
  edges.push_back({a1, port::NW, b(1), port::NW, {}});
  for (int i = 1; i < n; ++i) edges.push_back({b(i), port::NE, b(i + 1), port::NW, {}});
  for (int i = 1; i < n; ++i) edges.push_back({b(i), port::SE, b(i + 1), port::SW, {}});
  edges.push_back({b(n), port::NE, a1, port::SW, {}});
  edges.push_back({b(n), port::SE, a2, port::NW, {}});
  edges.push_back({a2, port::SW, b(1), port::SW, {}});
  edges.push_back({a1, port::NE, a1, port::SE, {{0, +1}}});  // cap carrying s0
  edges.push_back({a2, port::SE, a2, port::NE, {}});

  return LagrangianDiagram(std::move(ctx), std::move(crossings), std::move(edges),
                           {{b(1), quadrant::W}});
}

LagrangianDiagram build_final_unknot(int n) {
  if (n < 1) throw std::invalid_argument("pinch count must be >= 1");

  std::vector<ChordInfo> crossings = {{"a1", 1}, {"a2", 1}};

  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("s" + std::to_string(i));
  Ctx ctx = make_context(std::move(names));

  std::vector<BasePoint> top, bot;
  for (int i = 1; i <= n; ++i) {
    top.push_back({i, +1});
    bot.push_back({i, -1});
  }

  std::vector<EdgeRec> edges;
  edges.push_back({0, port::NW, 0, port::SW, std::move(top)});
  edges.push_back({0, port::NE, 0, port::SE, {{0, +1}}});
  edges.push_back({1, port::SW, 1, port::NW, std::move(bot)});
  edges.push_back({1, port::SE, 1, port::NE, {}});

  return LagrangianDiagram(std::move(ctx), std::move(crossings), std::move(edges),
                           {{0, quadrant::N}, {1, quadrant::N}});
}

}  // namespace legfill
