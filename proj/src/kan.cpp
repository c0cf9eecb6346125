#include "skan/kan.hpp"

#include <algorithm>
#include <sstream>

namespace skan {

std::string Horn::str() const {
  std::ostringstream os;
  os << "horn " << target_degree << " missing " << missing << " ;";
  for (const auto& [i, x] : faces) os << " " << i << ":" << x.value;
  return os.str();
}

std::string MultiHorn::str() const {
  std::ostringstream os;
  os << "horn";
  for (int e : target.entries()) os << " " << e;
  os << " missing " << missing_axis << " " << missing << " ;";
  for (const auto& [slot, x] : faces) os << " " << slot.first << ":" << slot.second << ":" << x.value;
  return os.str();
}

NoFiller::NoFiller(Horn horn, std::string stage)
    : std::runtime_error((stage.empty() ? "no filler for " : "no filler at " + stage + " for ") +
                         horn.str()),
      horn_(std::move(horn)),
      stage_(std::move(stage)) {}

MultiNoFiller::MultiNoFiller(MultiHorn horn, std::string stage)
    : std::runtime_error((stage.empty() ? "no filler for " : "no filler at " + stage + " for ") +
                         horn.str()),
      horn_(std::move(horn)),
      stage_(std::move(stage)) {}

// ---------------------------------------------------------------------------
// make / fill
// ---------------------------------------------------------------------------

Horn make_horn(const SemiSimplicialSet& complex, int target_degree, int missing,
               const std::map<int, SimplexId>& faces) {
  if (target_degree < 1 || target_degree > complex.truncation_degree())
    throw StructuralError("horn target degree " + std::to_string(target_degree) +
                          " outside truncation");
  if (missing < 0 || missing > target_degree)
    throw StructuralError("missing index " + std::to_string(missing) + " out of range");
  for (int i = 0; i <= target_degree; ++i) {
    if (i == missing) {
      if (faces.count(i))
        throw StructuralError("face assigned to the missing slot " + std::to_string(i));
      continue;
    }
    const auto it = faces.find(i);
    if (it == faces.end())
      throw StructuralError("horn lacks face " + std::to_string(i));
    if (complex.degree(it->second) != target_degree - 1)
      throw StructuralError("horn face " + std::to_string(i) + " has degree " +
                            std::to_string(complex.degree(it->second)) + ", expected " +
                            std::to_string(target_degree - 1));
  }
  if (static_cast<int>(faces.size()) != target_degree)
    throw StructuralError("horn has stray face entries");
  for (const auto& [j, xj] : faces) {
    for (const auto& [i, xi] : faces) {
      if (i >= j) break;
      if (complex.face(xj, i) != complex.face(xi, j - 1)) {
        std::ostringstream os;
        os << "incompatible horn faces at pair (" << i << "," << j << "): d_" << i << " of slot "
           << j << " is " << complex.face(xj, i).value << " but d_" << j - 1 << " of slot " << i
           << " is " << complex.face(xi, j - 1).value;
        throw HornError(i, j, os.str());
      }
    }
  }
  return Horn{target_degree, missing, faces};
}

MultiHorn make_multi_horn(const MultiSemiSimplicialSet& complex, const MultiIndex& target,
                          int missing_axis, int missing,
                          const std::map<std::pair<int, int>, SimplexId>& faces) {
  if (target.axes() != complex.axes())
    throw StructuralError("horn target has wrong number of axes");
  if (target.total() < 1 || target.total() > complex.truncation_total())
    throw StructuralError("horn target " + target.str() + " outside truncation");
  if (missing_axis < 1 || missing_axis > complex.axes() || target.entry(missing_axis) < 1)
    throw StructuralError("missing axis " + std::to_string(missing_axis) +
                          " has no face slots at " + target.str());
  if (missing < 0 || missing > target.entry(missing_axis))
    throw StructuralError("missing index " + std::to_string(missing) + " out of range");
  std::size_t expected = 0;
  for (int p = 1; p <= complex.axes(); ++p) {
    const int np = target.entry(p);
    if (np == 0) continue;
    expected += static_cast<std::size_t>(np) + 1;
    for (int i = 0; i <= np; ++i) {
      if (p == missing_axis && i == missing) {
        if (faces.count({p, i}))
          throw StructuralError("face assigned to the missing slot");
        continue;
      }
      const auto it = faces.find({p, i});
      if (it == faces.end())
        throw StructuralError("horn lacks face (axis " + std::to_string(p) + ", index " +
                              std::to_string(i) + ")");
      if (complex.index_of(it->second) != target.minus(p))
        throw StructuralError("horn face (axis " + std::to_string(p) + ", index " +
                              std::to_string(i) + ") lies at " +
                              complex.index_of(it->second).str() + ", expected " +
                              target.minus(p).str());
    }
  }
  if (faces.size() != expected - 1)
    throw StructuralError("horn has stray face entries");
  for (const auto& [slot_j, xj] : faces) {
    const auto& [q, j] = slot_j;
    for (const auto& [slot_i, xi] : faces) {
      if (slot_i >= slot_j) break;
      const auto& [p, i] = slot_i;
      SimplexId lhs, rhs;
      if (p == q) {
        // same axis, i < j: d_i^p x_j = d_{j-1}^p x_i (needs target_p >= 2)
        if (target.entry(p) < 2) continue;
        lhs = complex.face(xj, p, i);
        rhs = complex.face(xi, p, j - 1);
      } else {
        // cross axis: d_i^p x_j^q = d_j^q x_i^p
        lhs = complex.face(xj, p, i);
        rhs = complex.face(xi, q, j);
      }
      if (lhs != rhs) {
        std::ostringstream os;
        os << "incompatible horn faces at pair (" << p << ":" << i << "," << q << ":" << j
           << "): " << lhs.value << " vs " << rhs.value;
        throw HornError(p, i, q, j, os.str());
      }
    }
  }
  return MultiHorn{target, missing_axis, missing, faces};
}

namespace {

bool realizes(const SemiSimplicialSet& complex, SimplexId x, const Horn& horn) {
  for (const auto& [i, f] : horn.faces)
    if (complex.face(x, i) != f) return false;
  return true;
}

bool realizes_multi(const MultiSemiSimplicialSet& complex, SimplexId x, const MultiHorn& horn) {
  for (const auto& [slot, f] : horn.faces)
    if (complex.face(x, slot.first, slot.second) != f) return false;
  return true;
}

}  // namespace

SimplexId fill_horn(const SemiSimplicialSet& complex, const Horn& horn) {
  for (SimplexId x : complex.level(horn.target_degree))
    if (realizes(complex, x, horn)) return x;  // levels ascend by id
  throw NoFiller(horn);
}

SimplexId fill_multi_horn(const MultiSemiSimplicialSet& complex, const MultiHorn& horn) {
  for (SimplexId x : complex.level(horn.target))
    if (realizes_multi(complex, x, horn)) return x;
  throw MultiNoFiller(horn);
}

// ---------------------------------------------------------------------------
// Kan checking
// ---------------------------------------------------------------------------

KanCheckReport check_kan(const SemiSimplicialSet& complex, int max_target_degree) {
  if (max_target_degree < 1 || max_target_degree > complex.truncation_degree())
    throw StructuralError("check depth " + std::to_string(max_target_degree) +
                          " outside truncation");
  KanCheckReport report;
  for (int t = 1; t <= max_target_degree; ++t) {
    const auto source = complex.level(t - 1);
    for (int k = 0; k <= t; ++k) {
      std::vector<int> slots;
      for (int i = 0; i <= t; ++i)
        if (i != k) slots.push_back(i);
      std::vector<SimplexId> chosen(slots.size());
      // assign slots left to right; every new choice is checked against all
      // earlier slots, so dead branches are cut at the first bad pair
      auto extend = [&](auto&& self, std::size_t depth) -> void {
        if (depth == slots.size()) {
          ++report.compatible_count;
          Horn horn;
          horn.target_degree = t;
          horn.missing = k;
          for (std::size_t a = 0; a < slots.size(); ++a) horn.faces[slots[a]] = chosen[a];
          bool filled = false;
          for (SimplexId x : complex.level(t))
            if (realizes(complex, x, horn)) {
              filled = true;
              break;
            }
          if (!filled) report.unfillable.push_back(std::move(horn));
          return;
        }
        const int j = slots[depth];
        for (SimplexId cand : source) {
          bool ok = true;
          for (std::size_t a = 0; a < depth && ok; ++a) {
            const int i = slots[a];  // i < j since slots ascend
            if (t >= 2 && complex.face(cand, i) != complex.face(chosen[a], j - 1)) ok = false;
          }
          if (!ok) continue;
          chosen[depth] = cand;
          self(self, depth + 1);
        }
      };
      extend(extend, 0);
    }
  }
  return report;
}

MultiKanCheckReport check_multi_kan(const MultiSemiSimplicialSet& complex, int max_total_degree) {
  if (max_total_degree < 1 || max_total_degree > complex.truncation_total())
    throw StructuralError("check depth " + std::to_string(max_total_degree) +
                          " outside truncation");
  MultiKanCheckReport report;
  for (int m = 1; m <= max_total_degree; ++m) {
    for (const MultiIndex& n : multi_indices_with_total(complex.axes(), m)) {
      std::vector<std::pair<int, int>> slots;  // (axis, index), lex order
      for (int p = 1; p <= complex.axes(); ++p)
        for (int i = 0; i <= n.entry(p); ++i)
          if (n.entry(p) >= 1) slots.emplace_back(p, i);
      for (int r = 1; r <= complex.axes(); ++r) {
        if (n.entry(r) == 0) continue;
        for (int k = 0; k <= n.entry(r); ++k) {
          std::vector<std::pair<int, int>> open;
          for (const auto& slot : slots)
            if (slot != std::make_pair(r, k)) open.push_back(slot);
          std::vector<SimplexId> chosen(open.size());
          auto extend = [&](auto&& self, std::size_t depth) -> void {
            if (depth == open.size()) {
              ++report.compatible_count;
              MultiHorn horn;
              horn.target = n;
              horn.missing_axis = r;
              horn.missing = k;
              for (std::size_t a = 0; a < open.size(); ++a) horn.faces[open[a]] = chosen[a];
              bool filled = false;
              for (SimplexId x : complex.level(n))
                if (realizes_multi(complex, x, horn)) {
                  filled = true;
                  break;
                }
              if (!filled) report.unfillable.push_back(std::move(horn));
              return;
            }
            const auto& [q, j] = open[depth];
            for (SimplexId cand : complex.level(n.minus(q))) {
              bool ok = true;
              for (std::size_t a = 0; a < depth && ok; ++a) {
                const auto& [p, i] = open[a];  // (p,i) < (q,j) lexicographically
                if (p == q) {
                  if (n.entry(p) >= 2 && complex.face(cand, p, i) != complex.face(chosen[a], p, j - 1))
                    ok = false;
                } else {
                  if (complex.face(cand, p, i) != complex.face(chosen[a], q, j)) ok = false;
                }
              }
              if (!ok) continue;
              chosen[depth] = cand;
              self(self, depth + 1);
            }
          };
          extend(extend, 0);
        }
      }
    }
  }
  return report;
}

}  // namespace skan
