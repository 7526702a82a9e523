#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/degeneracy.hpp"
#include "kempe/torus_graph.hpp"

namespace kempe {

/// Exact Kempe classes of the proper k-colorings of a small graph.
struct ClassReport {
  int k = 0;
  bool quotient = false;
  /// Proper colorings enumerated (canonical ones only in quotient mode).
  long long state_count = 0;
  /// Lexicographically smallest member of each class, classes ordered by it.
  std::vector<Coloring> representatives;
  std::vector<long long> class_sizes;

  int class_count() const noexcept { return static_cast<int>(representatives.size()); }
};

/// Relabels colors in order of first appearance: the lexicographically
/// smallest image of phi under color permutations.
Coloring canonical_relabel(const Coloring& phi);

/// Enumerates every proper k-coloring and flood-fills the reconfiguration
/// graph. In quotient mode colorings are identified up to permuting colors.
/// Throws StateCapExceeded (message carries the partial count) when more
/// than `state_cap` colorings exist.
ClassReport kempe_classes(const Graph& g, int k, bool quotient = false,
                          long long state_cap = 20'000'000);

/// Class membership lookup rebuilt from a report's representatives.
class ClassIndex {
 public:
  ClassIndex(const Graph& g, const ClassReport& report);

  /// Class id of phi, or nullopt if phi is not a proper k-coloring.
  std::optional<int> class_of(const Coloring& phi) const;
  int class_count() const noexcept { return classes_; }

 private:
  bool quotient_;
  int classes_ = 0;
  std::unordered_map<std::string, int> index_;
};

struct NormalizeOptions {
  /// Admit edge-width 6 when the graph is T[6 x b].
  bool six_cycle_augmentation = false;
  int locality_radius = 3;
  int depth_limit = 12;
  /// Colorings examined per search before moving to the next witness.
  long long node_budget = 20'000;
  /// Perturbs the order in which witnesses are tried.
  std::uint64_t seed = 0;
};

struct NormalizeResult {
  Certificate certificate;
  /// Good monochromatic 4-template contained in the final coloring.
  Template good_template;
  Coloring final_coloring;
};

/// Reusable normalize engine; precomputes the good triple extensions of the
/// graph once. Construction checks the edge-width precondition.
class Normalizer {
 public:
  Normalizer(const TorusGraph& g, const NormalizeOptions& options = {});
  ~Normalizer();
  Normalizer(const Normalizer&) = delete;
  Normalizer& operator=(const Normalizer&) = delete;

  NormalizeResult run(const Coloring& phi) const;
  const TorusGraph& graph() const noexcept { return g_; }

 private:
  struct Tables;
  const TorusGraph& g_;
  NormalizeOptions options_;
  std::unique_ptr<Tables> tables_;
};

/// Ladder rank: 4 good 4-template from a triple, 3 triple, 2 parallel or
/// crossing pairs, 1 pair, 0 none.
int ladder_rank(const TorusGraph& g, const Coloring& phi);

/// Kempe moves from a proper 5-coloring to one containing a good
/// monochromatic 4-template. Throws PreconditionViolated when the
/// edge-width is below 7 (6 is admitted for T[6 x b] with augmentation) or
/// phi is not a proper 5-coloring, and SearchExhausted if every search fails.
NormalizeResult normalize(const TorusGraph& g, const Coloring& phi,
                          const NormalizeOptions& options = {});

/// Certificate between two colorings that both contain the good template t.
/// Throws TemplateNotContained or NotGood.
Certificate align_on_template(const Graph& g, const Coloring& phi1, const Coloring& phi2,
                              const Template& t);

/// Moves realizing a color permutation phi -> phi2 (phi2 = pi o phi), or
/// nullopt if phi2 is not a relabeling of phi.
std::optional<std::vector<KempeMove>> permutation_moves(const Graph& g, const Coloring& phi,
                                                        const Coloring& phi2);

enum class Route { Identity, Permutation, FourColoring, Rotation };

std::string_view to_string(Route route);

struct EquivalenceResult {
  Certificate certificate;
  Route route = Route::Identity;
};

/// Certificate between any two proper 5-colorings of a graph within the
/// normalize preconditions: normalize both, then meet at a common 4-coloring
/// or, for C37[1,10,11], at a rotation of the explicit mod-4 coloring.
EquivalenceResult certify_equivalence(const TorusGraph& g, const Coloring& phi1,
                                      const Coloring& phi2, const NormalizeOptions& options = {});

/// As above, reusing a normalizer built for the same graph.
EquivalenceResult certify_equivalence(const Normalizer& normalizer, const Coloring& phi1,
                                      const Coloring& phi2);

/// The t-rotation of the explicit 5-coloring of C37[1,10,11]: vertex v gets
/// ((v - t) mod 37 + 1) mod 4 + 1, except v = t - 1 (mod 37), which gets 5.
Coloring c37_rotation(int t);

}  // namespace kempe
