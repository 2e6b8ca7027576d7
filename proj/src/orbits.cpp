#include "nrcheck/orbits.hpp"

#include <limits>
#include <stdexcept>

#include "nrcheck/spectrum.hpp"

namespace nrcheck {

OrbitPartition vertex_orbits(const std::vector<AutElement>& gens, int m) {
  if (m < 1 || m > kMaxLength) throw std::invalid_argument("orbit length out of range");
  for (const AutElement& g : gens) {
    if (g.length() != m) throw std::invalid_argument("generator length mismatch");
  }
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  const std::uint64_t n = std::uint64_t{1} << m;

  OrbitPartition part;
  part.length = m;
  part.orbit_id.assign(n, kUnseen);
  std::vector<Word> queue;
  // Scanning vertices in ascending order numbers orbits by smallest member.
  for (std::uint64_t start = 0; start < n; ++start) {
    if (part.orbit_id[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(part.orbit_sizes.size());
    queue.clear();
    queue.push_back(static_cast<Word>(start));
    part.orbit_id[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const AutElement& g : gens) {
        const Word next = g.apply(queue[head]);
        if (part.orbit_id[next] == kUnseen) {
          part.orbit_id[next] = id;
          queue.push_back(next);
        }
      }
    }
    part.orbit_sizes.push_back(queue.size());
    part.representatives.push_back(static_cast<Word>(start));
  }
  return part;
}

SphereOrbits orbits_on_sphere(const PermGroup& group, int m, int k) {
  if (group.degree() != m) throw std::invalid_argument("group degree differs from m");
  if (k < 0 || k > m) throw std::invalid_argument("sphere radius out of range");
  std::vector<AutElement> gens;
  for (const Permutation& s : group.generators()) gens.push_back(AutElement::permutation(s));

  std::vector<bool> seen(std::size_t{1} << m, false);
  SphereOrbits out;
  std::vector<Word> queue;
  for_each_weight_k(m, k, [&](Word start) {
    if (seen[start]) return;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const AutElement& g : gens) {
        const Word next = g.apply(queue[head]);
        if (!seen[next]) {
          seen[next] = true;
          queue.push_back(next);
        }
      }
    }
    out.sizes.push_back(queue.size());
  });
  out.count = out.sizes.size();
  return out;
}

TransitivityCertificate verify_complete_transitivity(const Code& code, const std::vector<AutElement>& gens) {
  for (const AutElement& g : gens) {
    if (!stabilizes(g, code)) throw NotAStabilizerError("generator " + g.to_string() + " does not fix the code");
  }
  const DistancePartition partition = distance_partition(code);
  const OrbitPartition orbits = vertex_orbits(gens, code.length());

  TransitivityCertificate cert;
  cert.cell_sizes = partition.cell_sizes;
  cert.orbit_count = orbits.orbit_count();

  // Cells and orbits coincide iff each cell meets exactly one orbit (orbits
  // never straddle cells when every generator fixes C).
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> cell_orbit(partition.cell_sizes.size(), kNone);
  std::vector<Word> cell_first(partition.cell_sizes.size(), 0);
  const std::uint64_t n = std::uint64_t{1} << code.length();
  for (std::uint64_t g = 0; g < n; ++g) {
    const auto cell = static_cast<std::size_t>(partition.distance_to_code[g]);
    const std::uint32_t id = orbits.orbit_id[g];
    if (cell_orbit[cell] == kNone) {
      cell_orbit[cell] = id;
      cell_first[cell] = static_cast<Word>(g);
    } else if (cell_orbit[cell] != id) {
      cert.witness = std::make_pair(Vertex(code.length(), cell_first[cell]), Vertex(code.length(), static_cast<Word>(g)));
      return cert;
    }
  }
  for (std::size_t cell = 0; cell < cell_orbit.size(); ++cell) {
    cert.orbit_sizes.push_back(orbits.orbit_sizes[cell_orbit[cell]]);
  }
  // Same orbit for a whole cell and equal sizes means orbit == cell.
  cert.completely_transitive = cert.orbit_sizes == cert.cell_sizes;
  return cert;
}

}  // namespace nrcheck
