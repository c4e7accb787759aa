#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freediv/groebner/submodule.hpp"
#include "freediv/logder/divisor.hpp"
#include "freediv/weyl/operator.hpp"
#include "json.hpp"

namespace freediv {

enum class RingKind { commutative, weyl, weyl_with_s };
std::string to_string(RingKind k);

using PolyMatrix = std::vector<std::vector<Polynomial>>;
using OpMatrix = std::vector<std::vector<OperatorWithS>>;

/// 0 -> F_m -> ... -> F_1 -> F_0 with F_k free on the k-subsets of the m generators, listed
/// lexicographically. Elements are row vectors and maps act on the right: v -> v * M.
struct ChainComplex {
  RingKind ring_kind = RingKind::commutative;
  /// Symbol ring for commutative complexes, base ring for Weyl ones.
  VarSet ring;
  /// ranks[k] = C(m, k), k = 0..m.
  std::vector<std::size_t> ranks;
  /// wedge_index[k][r] = the generator indices (ascending) of basis element r of F_k.
  std::vector<std::vector<std::vector<std::size_t>>> wedge_index;
  /// d[k-1] : F_k -> F_(k-1), ranks[k] rows by ranks[k-1] columns. Exactly one of these is filled.
  std::vector<PolyMatrix> commutative;
  std::vector<OpMatrix> weyl;

  std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  /// Matrix entries of d_(-k) as text.
  std::vector<std::vector<std::string>> entry_strings(std::size_t k) const;
};

/// k-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t m, std::size_t k);

/// d(e_{i1} ^ ... ^ e_{ik}) = sum_j (-1)^(j-1) g_{ij} e_{...no ij...}. `ring` is needed only
/// when there are no generators (the complex is then F_0 alone).
ChainComplex build_koszul(const std::vector<Polynomial>& generators, std::optional<VarSet> ring = {});

/// Spencer complex on `fields` (and f as a last generator with `include_f`), over D or D[s].
/// Brackets are rewritten in the generators by module lifting; LieClosureError when impossible.
ChainComplex build_spencer(const DivisorSpec& d, const std::vector<VectorField>& fields, bool include_f,
                           bool over_s = false);

/// Every composite d_(-k) d_(-k-1) vanishes.
bool verify_d2(const ChainComplex& c);

struct PositionVerdict {
  enum class Status { exact_verified, d2_only, failed };
  std::size_t position = 0;
  Status status = Status::d2_only;
  /// For failed: an element of the kernel outside the image.
  std::optional<Vec> witness;
};
std::string to_string(PositionVerdict::Status s);

struct ExactnessReport {
  /// One verdict per position 0..m. Position 0 is the cokernel end and is left at d2_only.
  std::vector<PositionVerdict> positions;
  bool exact_at_positive_positions() const;
};

/// Kernel of each outgoing map (syzygies of its rows) tested against the image of the incoming one.
ExactnessReport verify_exactness_commutative(const ChainComplex& c);

enum class SpencerMode { theta, xi };

struct SpencerReport {
  SpencerMode mode = SpencerMode::theta;
  ChainComplex spencer;
  ChainComplex koszul;
  bool d2 = false;              // (i)
  bool augmentation = false;    // (ii)
  bool graded_matches = false;  // (iii)
  /// (iv): exactness of the Koszul complex. In theta mode position 0 also requires the kernel of
  /// the symbol map xi_i -> d_i f to be generated by the theta symbols.
  ExactnessReport exactness;
  bool graded_exact = false;
  bool certified() const { return d2 && augmentation && graded_matches && graded_exact; }
  /// "resolution certified via graded exactness" or the list of failing checks.
  std::string summary() const;
};

/// `theta_basis` must be n-1 fields killing f that complete with `euler` to a Saito basis.
SpencerReport verify_spencer_resolution(const DivisorSpec& d, const std::vector<VectorField>& theta_basis,
                                        const DiffOperator& euler, SpencerMode mode);

/// {ranks, differentials, ring_kind}.
nlohmann::json complex_to_json(const ChainComplex& c);

}  // namespace freediv
