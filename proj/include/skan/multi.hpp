#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "skan/construct.hpp"
#include "skan/core.hpp"
#include "skan/kan.hpp"

/// Degeneracy synthesis on l-fold multisemisimplicial sets, by double
/// induction on total degree and the lexicographically ordered pair
/// (axis q, index j). The case split adds a cross-axis witness case on top
/// of the single-axis engine:
///   Case 1: x = s_j^q w for some q < r       -> s_k^r x = s_j^q s_k^r w
///   Case 2: else x = s_j^r w for some j < k  -> s_k^r x = s_j^r s_{k-1}^r w
///   Case 3: otherwise                        -> s_k^r x = d_0^r T_k^r x
/// On a 1-fold complex every step degenerates to the single engine, slot for
/// slot, so the two s-tables agree entry-for-entry.
namespace skan {

struct MultiDegeneracyState {
  MultiDegeneracyTable s_table;
  MultiTTable t_table;
  /// value -> (q, j) -> preimage, ascending lex on (q, j); the smallest
  /// witness pair is the first entry.
  std::map<SimplexId, std::map<std::pair<int, int>, SimplexId>> image_index;
  long long fill_count = 0;  // 2 per t_table entry
};

/// Builds T_k^r x (at index n + 2e_r) by the two-stage fill: the y-system
/// (missing slot (r, k+1)) and the z-system (missing slot (r, 0)).
SimplexId build_T_multi(MultiDegeneracyState& state, const MultiSemiSimplicialSet& complex,
                        SimplexId x, int r, int k, const SynthesisOptions& options = {});

SimplexId build_s_multi(MultiDegeneracyState& state, const MultiSemiSimplicialSet& complex,
                        SimplexId x, int r, int k, const SynthesisOptions& options = {});

struct MultiSynthesisResult {
  MultiSimplicialSet simplicial;
  MultiDegeneracyState state;
};

/// Populates s_j^q x for every x of total degree <= horizon and every axis q
/// with 0 <= j <= n_q. Requires total-degree truncation >= horizon + 2.
/// Ordering: ascending total degree, then (q, j) lex, then id.
MultiSynthesisResult synthesize_multi(const MultiSemiSimplicialSet& complex, int horizon,
                                      const SynthesisOptions& options = {});

/// Multi analogue of verify_identities. Same-axis tags match the single
/// verifier (ds-commute-low/ds-cancel/ds-commute-high/ss-swap and the four
/// dt tags, plus s-injective and ss-factor); cross-axis identities add
///   ds-cross          d_i^p s_j^q x = s_j^q d_i^p x      (p != q)
///   ss-cross          s_i^p s_j^q x = s_j^q s_i^p x      (p != q)
///   dt-cross          d_i^p T_j^q x = T_j^q d_i^p x      (p != q)
///   ss-factor-cross   s_j^q w = s_i^p y, p != q implies v = d_j^q y has
///                     s_j^q v = y and s_i^p v = w
/// ss-cross instances are counted per direction (checked keys ss-cross-lo
/// for p < q, ss-cross-hi for p > q); a count mismatch is itself reported
/// as a violation (tag ss-cross-symmetry).
VerificationReport verify_multi(const MultiSemiSimplicialSet& complex,
                                const MultiDegeneracyTable& s, const MultiTTable& t);

VerificationReport verify_multi(const MultiSemiSimplicialSet& complex,
                                const MultiSimplicialSet& result,
                                const MultiDegeneracyState& state);

}  // namespace skan
