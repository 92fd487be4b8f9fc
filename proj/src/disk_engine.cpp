#include "legfill/disk_engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace legfill {

namespace {

// Quadrant sets a disk may cover at one crossing: nothing, one corner, a
// straight pass-through, or the whole crossing in its interior.
bool valid_profile(unsigned p) {
  int pc = std::popcount(p);
  if (pc == 0 || pc == 1 || pc == 4) return true;
  if (pc == 2) return p != 0b0101u && p != 0b1010u;  // opposite quadrants
  return false;
}

struct Enumerator {
  const LagrangianDiagram& dia;
  int m;                               // bounded face count
  std::vector<int> face_of_dart;       // dart -> face index
  std::vector<int> bidx;               // face index -> position in bounded list, or -1
  std::vector<unsigned> edge_sides;    // edge -> bitmask of adjacent bounded faces
  std::vector<std::vector<int>> adjacent;  // bounded-face adjacency via shared edges

  explicit Enumerator(const LagrangianDiagram& d) : dia(d) {
    const auto& bf = dia.bounded_faces();
    m = static_cast<int>(bf.size());
    if (m > 22) throw std::domain_error("too many bounded faces to enumerate disks");

    face_of_dart.assign(2 * dia.edge_count(), -1);
    for (int fi = 0; fi < static_cast<int>(dia.faces().size()); ++fi)
      for (int d : dia.faces()[fi].darts) face_of_dart[d] = fi;

    bidx.assign(dia.faces().size(), -1);
    for (int j = 0; j < m; ++j) bidx[bf[j]] = j;

    edge_sides.assign(dia.edge_count(), 0);
    adjacent.assign(m, {});
    for (int e = 0; e < dia.edge_count(); ++e) {
      int j1 = bidx[face_of_dart[forward_dart(e)]];
      int j2 = bidx[face_of_dart[reverse_dart(e)]];
      if (j1 >= 0) edge_sides[e] |= 1u << j1;
      if (j2 >= 0) edge_sides[e] |= 1u << j2;
      if (j1 >= 0 && j2 >= 0 && j1 != j2) {
        adjacent[j1].push_back(j2);
        adjacent[j2].push_back(j1);
      }
    }
  }

  bool connected(unsigned mask) const {
    int start = std::countr_zero(mask);
    unsigned seen = 1u << start;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      for (int k : adjacent[j])
        if ((mask >> k & 1u) && !(seen >> k & 1u)) {
          seen |= 1u << k;
          stack.push_back(k);
        }
    }
    return seen == mask;
  }

  // Walks the boundary counterclockwise from the positive corner, collecting
  // the negative word and the base-point weight, and checks that the walk
  // closes up over every boundary dart.
  DiskClass walk(unsigned mask, const std::vector<unsigned>& profile, int chord,
                 int positive_q) const {
    DiskClass disk;
    disk.positive_chord = chord;
    std::vector<std::int64_t> exps(dia.ctx()->arity(), 0);

    int boundary_darts = 0;
    for (int d = 0; d < 2 * dia.edge_count(); ++d) {
      int own = bidx[face_of_dart[d]], other = bidx[face_of_dart[d ^ 1]];
      if (own >= 0 && (mask >> own & 1u) && (other < 0 || !(mask >> other & 1u)))
        ++boundary_darts;
    }

    int steps = 0;
    const int start = dia.dart_out(chord, positive_q);
    int d = start;
    do {
      if (++steps > boundary_darts) throw std::logic_error("disk boundary walk does not close");
      for (const BasePoint& bp : dia.edges()[dart_edge(d)].base_points)
        exps[bp.var] = checked_add(exps[bp.var], dart_is_reverse(d) ? -bp.sign : bp.sign);
      auto [c, t] = dia.dart_arrival(d);
      int k = std::popcount(profile[c]);
      if (k == 1 && c != chord) disk.negative_word.push_back(c);
      d = dia.dart_out(c, (t + 4 - k) % 4);
    } while (d != start);
    if (steps != boundary_darts) throw std::logic_error("disk boundary walk misses darts");

    disk.weight = Monomial(std::move(exps));
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1u) disk.faces.push_back(dia.bounded_faces()[j]);
    return disk;
  }

  std::vector<DiskClass> run() const {
    const int V = dia.crossing_count();
    std::vector<DiskClass> out;
    std::vector<unsigned> profile(V);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::fill(profile.begin(), profile.end(), 0u);
      for (int j = 0; j < m; ++j)
        if (mask >> j & 1u)
          for (const Corner& cr : dia.faces()[dia.bounded_faces()[j]].corners)
            profile[cr.crossing] |= 1u << cr.quadrant;

      int positive = -1, positive_q = -1, vertices = 0, defect = 0;
      bool ok = true;
      for (int c = 0; c < V && ok; ++c) {
        unsigned p = profile[c];
        if (p == 0) continue;
        ++vertices;
        if (!valid_profile(p)) {
          ok = false;
        } else if (std::popcount(p) == 1) {
          int q = std::countr_zero(p);
          if (positive_quadrant(q)) {
            if (positive != -1) ok = false;  // a second positive puncture
            positive = c;
            positive_q = q;
          } else {
            defect += dia.grading(c);
          }
        }
      }
      if (!ok || positive == -1) continue;
      // Rigidity: the disk's expected dimension must vanish.
      if (dia.grading(positive) - defect - 1 != 0) continue;
      if (!connected(mask)) continue;

      int edges = 0;
      for (int e = 0; e < dia.edge_count(); ++e)
        if (edge_sides[e] & mask) ++edges;
      if (vertices - edges + std::popcount(mask) != 1) continue;

      out.push_back(walk(mask, profile, positive, positive_q));
    }
    return out;
  }
};

}  // namespace

std::vector<DiskClass> enumerate_rigid_disks(const LagrangianDiagram& dia) {
  return Enumerator(dia).run();
}

std::vector<DiskClass> enumerate_rigid_disks(const LagrangianDiagram& dia, int chord) {
  if (chord < 0 || chord >= dia.crossing_count())
    throw std::invalid_argument("chord index out of range");
  std::vector<DiskClass> out;
  for (auto& d : enumerate_rigid_disks(dia))
    if (d.positive_chord == chord) out.push_back(std::move(d));
  return out;
}

static AlgebraElement sum_disks(const LagrangianDiagram& dia,
                                const std::vector<DiskClass>& disks, int chord) {
  std::vector<AlgebraTerm> terms;
  for (const DiskClass& d : disks)
    if (d.positive_chord == chord) terms.push_back({d.weight, d.negative_word});
  return AlgebraElement::from_terms(dia.ctx(), dia.alphabet(), std::move(terms));
}

AlgebraElement chord_differential(const LagrangianDiagram& dia, int chord) {
  if (chord < 0 || chord >= dia.crossing_count())
    throw std::invalid_argument("chord index out of range");
  return sum_disks(dia, enumerate_rigid_disks(dia), chord);
}

std::string check_dga(const Dga& dga) {
  for (int c = 0; c < dga.alphabet->size(); ++c) {
    if (!homogeneous_of_degree(dga.of(c), dga.alphabet->grading(c) - 1))
      return "d(" + dga.alphabet->label(c) + ") is not homogeneous of degree " +
             std::to_string(dga.alphabet->grading(c) - 1);
    if (!dga.apply(dga.of(c)).is_zero())
      return "d^2(" + dga.alphabet->label(c) + ") != 0";
  }
  return "";
}

Dga differential(const LagrangianDiagram& dia) {
  auto disks = enumerate_rigid_disks(dia);
  Dga dga{dia.ctx(), dia.alphabet(), {}};
  for (int c = 0; c < dia.crossing_count(); ++c)
    dga.images.push_back(sum_disks(dia, disks, c));
  if (std::string err = check_dga(dga); !err.empty())
    throw std::domain_error("differential fails DGA axioms: " + err);
  return dga;
}

}  // namespace legfill
