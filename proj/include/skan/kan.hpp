#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skan/core.hpp"

/// Horn representation, compatibility validation, brute-force horn filling,
/// and Kan-condition checking. A horn is a compatible all-but-one system of
/// candidate faces; filling scans the target level in ascending id order and
/// returns the first simplex realizing every assigned face, so equal inputs
/// give equal outputs.
namespace skan {

/// Candidate boundary of a degree-`target_degree` simplex with one face slot
/// left open. `faces` assigns a simplex of degree target_degree-1 to every
/// index in 0..target_degree except `missing`.
struct Horn {
  int target_degree = 1;
  int missing = 0;
  std::map<int, SimplexId> faces;

  /// `horn <target-degree> missing <k> ; <i>:<face-id> ...`
  [[nodiscard]] std::string str() const;

  auto operator<=>(const Horn&) const = default;
};

/// Multi analogue: the filler lives at multi-index `target`; the open slot
/// is face k on axis r; `faces` assigns a simplex at target−e_p to every
/// pair (axis p with target_p >= 1, index i in 0..target_p) except (r, k).
struct MultiHorn {
  MultiIndex target;
  int missing_axis = 1;
  int missing = 0;
  std::map<std::pair<int, int>, SimplexId> faces;

  /// `horn <n1> ... <nl> missing <r> <k> ; <p>:<i>:<face-id> ...`
  [[nodiscard]] std::string str() const;

  auto operator<=>(const MultiHorn&) const = default;
};

/// Compatibility violation inside a would-be horn, naming the failing pair
/// of slots. For single horns the axes are 0.
class HornError : public std::runtime_error {
 public:
  HornError(int i, int j, const std::string& what)
      : std::runtime_error(what), p_(0), i_(i), q_(0), j_(j) {}
  HornError(int p, int i, int q, int j, const std::string& what)
      : std::runtime_error(what), p_(p), i_(i), q_(q), j_(j) {}

  [[nodiscard]] int axis_p() const { return p_; }
  [[nodiscard]] int index_i() const { return i_; }
  [[nodiscard]] int axis_q() const { return q_; }
  [[nodiscard]] int index_j() const { return j_; }

 private:
  int p_, i_, q_, j_;
};

/// A horn with no filler in the complex: the input is not Kan at this horn.
/// `stage` is empty for direct fills and names the construction stage
/// ("y-stage" / "z-stage") when raised inside degeneracy synthesis.
class NoFiller : public std::runtime_error {
 public:
  explicit NoFiller(Horn horn, std::string stage = "");

  [[nodiscard]] const Horn& horn() const { return horn_; }
  [[nodiscard]] const std::string& stage() const { return stage_; }

 private:
  Horn horn_;
  std::string stage_;
};

class MultiNoFiller : public std::runtime_error {
 public:
  explicit MultiNoFiller(MultiHorn horn, std::string stage = "");

  [[nodiscard]] const MultiHorn& horn() const { return horn_; }
  [[nodiscard]] const std::string& stage() const { return stage_; }

 private:
  MultiHorn horn_;
  std::string stage_;
};

/// Validates slot degrees and the pairwise compatibility
/// d_i x_j = d_{j-1} x_i (i < j, both != missing); throws HornError naming
/// the first failing pair.
Horn make_horn(const SemiSimplicialSet& complex, int target_degree, int missing,
               const std::map<int, SimplexId>& faces);

MultiHorn make_multi_horn(const MultiSemiSimplicialSet& complex, const MultiIndex& target,
                          int missing_axis, int missing,
                          const std::map<std::pair<int, int>, SimplexId>& faces);

/// Returns the id-minimal filler; throws NoFiller if the level has none.
SimplexId fill_horn(const SemiSimplicialSet& complex, const Horn& horn);
SimplexId fill_multi_horn(const MultiSemiSimplicialSet& complex, const MultiHorn& horn);

/// Exhaustive Kan check up to a target degree: enumerates every compatible
/// horn (backtracking over face slots with incremental compatibility
/// pruning) and collects the unfillable ones, in enumeration order
/// (ascending target degree, missing index, then face ids slot-by-slot).
/// compatible_count is the number of compatible horns seen, for
/// cross-checking the enumeration itself.
struct KanCheckReport {
  std::vector<Horn> unfillable;
  long long compatible_count = 0;

  [[nodiscard]] bool kan() const { return unfillable.empty(); }
};

struct MultiKanCheckReport {
  std::vector<MultiHorn> unfillable;
  long long compatible_count = 0;

  [[nodiscard]] bool kan() const { return unfillable.empty(); }
};

KanCheckReport check_kan(const SemiSimplicialSet& complex, int max_target_degree);
MultiKanCheckReport check_multi_kan(const MultiSemiSimplicialSet& complex, int max_total_degree);

}  // namespace skan
