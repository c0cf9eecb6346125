#pragma once

#include <map>
#include <string>
#include <vector>

#include "skan/core.hpp"
#include "skan/kan.hpp"

/// Degeneracy synthesis for Kan semisimplicial sets, by double induction on
/// (degree, k). Each level is processed for k = 0..n: first a T-pass
/// constructs the auxiliary T_k on the whole level (two horn fills per
/// element), then an s-pass defines s_k, either from an existing degeneracy
/// witness (Case D, no filling) or as d_0 T_k x (Case T). The T-pass runs on
/// every element — including degenerate ones — because T at the next level
/// consumes T on arbitrary faces.
namespace skan {

/// Failure of a compatibility check that the construction guarantees;
/// reaching this means the implementation (not the input) is wrong.
class InternalCheckError : public std::runtime_error {
 public:
  explicit InternalCheckError(const std::string& what) : std::runtime_error(what) {}
};

/// Memo tables of the synthesis. image_index inverts s_table: for a value v,
/// image_index[v] maps j to the (unique) w with s_j w = v, ascending j, so
/// the smallest degeneracy witness is the first entry.
struct DegeneracyState {
  DegeneracyTable s_table;
  TTable t_table;
  std::map<SimplexId, std::map<int, SimplexId>> image_index;
  long long fill_count = 0;  // horn fills performed (2 per t_table entry)
};

struct SynthesisOptions {
  /// Re-validate the y- and z-systems as horns before filling. The
  /// construction proves these compatible, so a failure throws
  /// InternalCheckError. On by default in the test suite, off for speed in
  /// plain runs.
  bool debug_checks = false;
};

/// Builds T_k x (degree deg(x)+2) by the two-stage fill and records it.
/// Requires every T entry lexicographically below (deg x, k) that the stage
/// systems consult; missing ingredients indicate a violated calling
/// discipline and throw StructuralError. NoFiller escapes with the stage
/// ("y-stage"/"z-stage") tagged.
SimplexId build_T(DegeneracyState& state, const SemiSimplicialSet& complex, SimplexId x, int k,
                  const SynthesisOptions& options = {});

/// Defines s_k x: Case D when x = s_j w for some j < k (smallest j; value
/// s_j s_{k-1} w, no filling), otherwise Case T (value d_0 T_k x, taking
/// T_k x from the table or building it). Records into s_table/image_index.
SimplexId build_s(DegeneracyState& state, const SemiSimplicialSet& complex, SimplexId x, int k,
                  const SynthesisOptions& options = {});

struct SynthesisResult {
  SimplicialSet simplicial;
  DegeneracyState state;
};

/// Populates s_k x for every x of degree <= horizon and 0 <= k <= deg(x).
/// Requires truncation >= horizon + 2 (T lands two degrees up). Ordering:
/// ascending degree, then k, then id; deterministic.
SynthesisResult synthesize(const SemiSimplicialSet& complex, int horizon,
                           const SynthesisOptions& options = {});

struct Violation {
  std::string tag;
  std::string detail;

  [[nodiscard]] std::string line() const { return "VIOLATION " + tag + " " + detail; }
};

/// Exhaustive identity verification. `checked` counts the instances whose
/// every term was available inside the truncated tables, per tag; instances
/// touching entries beyond the horizon are skipped, not failed.
struct VerificationReport {
  std::vector<Violation> violations;
  std::map<std::string, long long> checked;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks, over all table entries:
///   ds-commute-low   d_i s_j x = s_{j-1} d_i x            (i < j)
///   ds-cancel        d_i s_j x = x                        (i = j, j+1)
///   ds-commute-high  d_i s_j x = s_j d_{i-1} x            (i > j+1)
///   ss-swap          s_j s_i x = s_i s_{j-1} x            (i < j)
///   dt-commute-low   d_i T_j x = T_{j-1} d_{i-1} x        (0 < i < j+1)
///   dt-commute-high  d_i T_j x = T_j d_{i-2} x            (i > j+2)
///   t-face-pair      d_{j+1} T_j x = d_{j+2} T_j x
///   t-section        d_0 d_{j+1} T_j x = x
///   s-injective      s_j w = s_j w' implies w = w'
///   ss-factor        s_j w = s_i y, j < i implies v = d_j y has
///                    s_j v = y and s_{i-1} v = w
VerificationReport verify_identities(const SemiSimplicialSet& complex, const DegeneracyTable& s,
                                     const TTable& t);

VerificationReport verify_identities(const SemiSimplicialSet& complex, const SimplicialSet& result,
                                     const DegeneracyState& state);

}  // namespace skan
