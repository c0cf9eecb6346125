#include "skan/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skan {

std::string ValidationReport::Entry::line() const {
  std::ostringstream os;
  if (cross) {
    os << "VIOLATION face-commute-cross x=" << x.value << " p=" << p << " i=" << i
       << " q=" << q << " j=" << j << " lhs=" << lhs.value << " rhs=" << rhs.value;
  } else if (p == 0 && q == 0) {
    os << "VIOLATION face-commute x=" << x.value << " i=" << i << " j=" << j
       << " lhs=" << lhs.value << " rhs=" << rhs.value;
  } else {
    os << "VIOLATION face-commute x=" << x.value << " p=" << p << " i=" << i
       << " j=" << j << " lhs=" << lhs.value << " rhs=" << rhs.value;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SemiSimplicialSet
// ---------------------------------------------------------------------------

int SemiSimplicialSet::degree(SimplexId x) const {
  if (!contains(x)) throw StructuralError("no simplex with id " + std::to_string(x.value));
  return degree_[x.value];
}

std::span<const SimplexId> SemiSimplicialSet::level(int n) const {
  if (n < 0 || n > truncation_)
    throw StructuralError("level " + std::to_string(n) + " outside truncation");
  return levels_[static_cast<std::size_t>(n)];
}

SimplexId SemiSimplicialSet::face(SimplexId x, int i) const {
  const int n = degree(x);
  if (n == 0) throw StructuralError("face of a 0-simplex");
  if (i < 0 || i > n)
    throw StructuralError("face index " + std::to_string(i) + " out of range for degree " +
                          std::to_string(n));
  return faces_[x.value][static_cast<std::size_t>(i)];
}

SemiSimplicialSetBuilder::SemiSimplicialSetBuilder(int truncation_degree) {
  if (truncation_degree < 0) throw StructuralError("negative truncation degree");
  out_.truncation_ = truncation_degree;
  out_.levels_.resize(static_cast<std::size_t>(truncation_degree) + 1);
}

SimplexId SemiSimplicialSetBuilder::add_simplex(int degree) {
  const SimplexId id{static_cast<std::uint32_t>(out_.degree_.size())};
  add_simplex(id, degree);
  return id;
}

void SemiSimplicialSetBuilder::add_simplex(SimplexId id, int degree) {
  if (!id.valid()) throw StructuralError("invalid simplex id");
  if (degree < 0 || degree > out_.truncation_)
    throw StructuralError("simplex " + std::to_string(id.value) + " has degree " +
                          std::to_string(degree) + " outside truncation " +
                          std::to_string(out_.truncation_));
  if (id.value < out_.degree_.size() && out_.degree_[id.value] >= 0)
    throw StructuralError("duplicate simplex id " + std::to_string(id.value));
  if (id.value >= out_.degree_.size()) {
    out_.degree_.resize(id.value + 1, -1);
    pending_faces_.resize(id.value + 1);
  }
  out_.degree_[id.value] = degree;
  out_.levels_[static_cast<std::size_t>(degree)].push_back(id);
  pending_faces_[id.value].assign(static_cast<std::size_t>(degree) + 1, SimplexId{});
  ++out_.count_;
}

void SemiSimplicialSetBuilder::set_face(SimplexId x, int i, SimplexId target) {
  if (!out_.contains(x)) throw StructuralError("face source " + std::to_string(x.value) + " not declared");
  const int n = out_.degree_[x.value];
  if (n == 0) throw StructuralError("0-simplex " + std::to_string(x.value) + " cannot have faces");
  if (i < 0 || i > n)
    throw StructuralError("face index " + std::to_string(i) + " out of range for simplex " +
                          std::to_string(x.value) + " of degree " + std::to_string(n));
  pending_faces_[x.value][static_cast<std::size_t>(i)] = target;
}

SemiSimplicialSet SemiSimplicialSetBuilder::build() && {
  for (std::uint32_t v = 0; v < out_.degree_.size(); ++v) {
    const int n = out_.degree_[v];
    if (n < 0) continue;
    for (int i = 0; i <= n; ++i) {
      if (n == 0) break;
      const SimplexId t = pending_faces_[v][static_cast<std::size_t>(i)];
      if (!t.valid())
        throw StructuralError("missing face " + std::to_string(i) + " of simplex " +
                              std::to_string(v));
      if (!out_.contains(t))
        throw StructuralError("face " + std::to_string(i) + " of simplex " + std::to_string(v) +
                              " targets unknown id " + std::to_string(t.value));
      if (out_.degree_[t.value] != n - 1)
        throw StructuralError("face " + std::to_string(i) + " of simplex " + std::to_string(v) +
                              " targets degree " + std::to_string(out_.degree_[t.value]) +
                              ", expected " + std::to_string(n - 1));
    }
  }
  for (auto& lv : out_.levels_) std::sort(lv.begin(), lv.end());
  out_.faces_ = std::move(pending_faces_);
  return std::move(out_);
}

ValidationReport validate(const SemiSimplicialSet& complex) {
  ValidationReport report;
  for (int n = 2; n <= complex.truncation_degree(); ++n) {
    for (SimplexId x : complex.level(n)) {
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          const SimplexId lhs = complex.face(complex.face(x, j), i);
          const SimplexId rhs = complex.face(complex.face(x, i), j - 1);
          if (lhs != rhs)
            report.entries.push_back({x, 0, i, 0, j, lhs, rhs, false});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// MultiIndex
// ---------------------------------------------------------------------------

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw StructuralError("multi-index needs at least one axis");
  for (int e : entries_)
    if (e < 0) throw StructuralError("negative multi-index entry");
}

int MultiIndex::entry(int axis) const {
  if (axis < 1 || axis > axes())
    throw StructuralError("axis " + std::to_string(axis) + " out of range");
  return entries_[static_cast<std::size_t>(axis - 1)];
}

int MultiIndex::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::plus(int axis, int amount) const {
  MultiIndex out = *this;
  (void)out.entry(axis);  // range check
  out.entries_[static_cast<std::size_t>(axis - 1)] += amount;
  if (out.entries_[static_cast<std::size_t>(axis - 1)] < 0)
    throw StructuralError("multi-index entry underflow on axis " + std::to_string(axis));
  return out;
}

MultiIndex MultiIndex::minus(int axis) const { return plus(axis, -1); }

std::string MultiIndex::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(entries_[k]);
  }
  return out + ")";
}

std::vector<MultiIndex> multi_indices_with_total(int axes, int total) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(axes), 0);
  // lexicographic enumeration of compositions of `total` into `axes` parts
  auto rec = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == axes) {
      cur[static_cast<std::size_t>(axis - 1)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(axis - 1)] = v;
      self(self, axis + 1, remaining - v);
    }
  };
  if (axes >= 1 && total >= 0) rec(rec, 1, total);
  return out;
}

// ---------------------------------------------------------------------------
// MultiSemiSimplicialSet
// ---------------------------------------------------------------------------

const MultiIndex& MultiSemiSimplicialSet::index_of(SimplexId x) const {
  if (!contains(x)) throw StructuralError("no simplex with id " + std::to_string(x.value));
  return index_[x.value];
}

std::span<const SimplexId> MultiSemiSimplicialSet::level(const MultiIndex& n) const {
  if (n.axes() != axes_) throw StructuralError("multi-index has wrong number of axes");
  if (n.total() > truncation_)
    throw StructuralError("level " + n.str() + " outside truncation");
  const auto it = levels_.find(n);
  if (it == levels_.end()) {
    static const std::vector<SimplexId> empty;
    return empty;
  }
  return it->second;
}

std::span<const SimplexId> MultiSemiSimplicialSet::total_level(int m) const {
  if (m < 0 || m > truncation_)
    throw StructuralError("total degree " + std::to_string(m) + " outside truncation");
  return by_total_[static_cast<std::size_t>(m)];
}

SimplexId MultiSemiSimplicialSet::face(SimplexId x, int axis, int i) const {
  const MultiIndex& n = index_of(x);
  if (axis < 1 || axis > axes_)
    throw StructuralError("axis " + std::to_string(axis) + " out of range");
  const int np = n.entry(axis);
  if (np == 0)
    throw StructuralError("simplex " + std::to_string(x.value) + " has no faces on axis " +
                          std::to_string(axis));
  if (i < 0 || i > np)
    throw StructuralError("face index " + std::to_string(i) + " out of range on axis " +
                          std::to_string(axis));
  return faces_[x.value][static_cast<std::size_t>(axis - 1)][static_cast<std::size_t>(i)];
}

MultiSemiSimplicialSetBuilder::MultiSemiSimplicialSetBuilder(int axes, int truncation_total) {
  if (axes < 1) throw StructuralError("multisemisimplicial set needs at least one axis");
  if (truncation_total < 0) throw StructuralError("negative truncation degree");
  out_.axes_ = axes;
  out_.truncation_ = truncation_total;
  out_.by_total_.resize(static_cast<std::size_t>(truncation_total) + 1);
  for (int m = 0; m <= truncation_total; ++m)
    for (const MultiIndex& n : multi_indices_with_total(axes, m)) out_.levels_[n];
}

SimplexId MultiSemiSimplicialSetBuilder::add_simplex(const MultiIndex& n) {
  const SimplexId id{static_cast<std::uint32_t>(out_.index_.size())};
  add_simplex(id, n);
  return id;
}

void MultiSemiSimplicialSetBuilder::add_simplex(SimplexId id, const MultiIndex& n) {
  if (!id.valid()) throw StructuralError("invalid simplex id");
  if (n.axes() != out_.axes_)
    throw StructuralError("simplex " + std::to_string(id.value) + " has " +
                          std::to_string(n.axes()) + " axes, expected " +
                          std::to_string(out_.axes_));
  if (n.total() > out_.truncation_)
    throw StructuralError("simplex " + std::to_string(id.value) + " at " + n.str() +
                          " outside truncation " + std::to_string(out_.truncation_));
  if (id.value < out_.index_.size() && !out_.index_[id.value].entries().empty())
    throw StructuralError("duplicate simplex id " + std::to_string(id.value));
  if (id.value >= out_.index_.size()) {
    out_.index_.resize(id.value + 1);
    pending_faces_.resize(id.value + 1);
  }
  out_.index_[id.value] = n;
  out_.levels_[n].push_back(id);
  out_.by_total_[static_cast<std::size_t>(n.total())].push_back(id);
  auto& ft = pending_faces_[id.value];
  ft.resize(static_cast<std::size_t>(out_.axes_));
  for (int p = 1; p <= out_.axes_; ++p) {
    const int np = n.entry(p);
    if (np >= 1) ft[static_cast<std::size_t>(p - 1)].assign(static_cast<std::size_t>(np) + 1, SimplexId{});
  }
  ++out_.count_;
}

void MultiSemiSimplicialSetBuilder::set_face(SimplexId x, int axis, int i, SimplexId target) {
  if (!out_.contains(x)) throw StructuralError("face source " + std::to_string(x.value) + " not declared");
  const MultiIndex& n = out_.index_[x.value];
  if (axis < 1 || axis > out_.axes_)
    throw StructuralError("axis " + std::to_string(axis) + " out of range for simplex " +
                          std::to_string(x.value));
  const int np = n.entry(axis);
  if (np == 0)
    throw StructuralError("simplex " + std::to_string(x.value) + " admits no faces on axis " +
                          std::to_string(axis));
  if (i < 0 || i > np)
    throw StructuralError("face index " + std::to_string(i) + " out of range on axis " +
                          std::to_string(axis) + " for simplex " + std::to_string(x.value));
  pending_faces_[x.value][static_cast<std::size_t>(axis - 1)][static_cast<std::size_t>(i)] = target;
}

MultiSemiSimplicialSet MultiSemiSimplicialSetBuilder::build() && {
  for (std::uint32_t v = 0; v < out_.index_.size(); ++v) {
    if (out_.index_[v].entries().empty()) continue;
    const MultiIndex& n = out_.index_[v];
    for (int p = 1; p <= out_.axes_; ++p) {
      const int np = n.entry(p);
      if (np == 0) continue;
      const MultiIndex target_index = n.minus(p);
      for (int i = 0; i <= np; ++i) {
        const SimplexId t = pending_faces_[v][static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(i)];
        if (!t.valid())
          throw StructuralError("missing face (axis " + std::to_string(p) + ", index " +
                                std::to_string(i) + ") of simplex " + std::to_string(v));
        if (!out_.contains(t))
          throw StructuralError("face of simplex " + std::to_string(v) + " targets unknown id " +
                                std::to_string(t.value));
        if (out_.index_[t.value] != target_index)
          throw StructuralError("face (axis " + std::to_string(p) + ", index " + std::to_string(i) +
                                ") of simplex " + std::to_string(v) + " targets level " +
                                out_.index_[t.value].str() + ", expected " + target_index.str());
      }
    }
  }
  for (auto& [n, lv] : out_.levels_) std::sort(lv.begin(), lv.end());
  for (auto& lv : out_.by_total_) std::sort(lv.begin(), lv.end());
  out_.faces_ = std::move(pending_faces_);
  return std::move(out_);
}

ValidationReport validate_multi(const MultiSemiSimplicialSet& complex) {
  ValidationReport report;
  const int l = complex.axes();
  for (int m = 2; m <= complex.truncation_total(); ++m) {
    for (SimplexId x : complex.total_level(m)) {
      const MultiIndex& n = complex.index_of(x);
      // same-axis: d_i^p d_j^p = d_{j-1}^p d_i^p for i < j, needs n_p >= 2
      for (int p = 1; p <= l; ++p) {
        const int np = n.entry(p);
        if (np < 2) continue;
        for (int j = 1; j <= np; ++j) {
          for (int i = 0; i < j; ++i) {
            const SimplexId lhs = complex.face(complex.face(x, p, j), p, i);
            const SimplexId rhs = complex.face(complex.face(x, p, i), p, j - 1);
            if (lhs != rhs) report.entries.push_back({x, p, i, p, j, lhs, rhs, false});
          }
        }
      }
      // cross-axis: d_i^p d_j^q = d_j^q d_i^p for p < q, needs n_p, n_q >= 1
      for (int p = 1; p <= l; ++p) {
        if (n.entry(p) == 0) continue;
        for (int q = p + 1; q <= l; ++q) {
          if (n.entry(q) == 0) continue;
          for (int i = 0; i <= n.entry(p); ++i) {
            for (int j = 0; j <= n.entry(q); ++j) {
              const SimplexId lhs = complex.face(complex.face(x, q, j), p, i);
              const SimplexId rhs = complex.face(complex.face(x, p, i), q, j);
              if (lhs != rhs) report.entries.push_back({x, p, i, q, j, lhs, rhs, true});
            }
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// l=1 conversions
// ---------------------------------------------------------------------------

MultiSemiSimplicialSet as_multi(const SemiSimplicialSet& complex) {
  MultiSemiSimplicialSetBuilder builder(1, complex.truncation_degree());
  for (int n = 0; n <= complex.truncation_degree(); ++n)
    for (SimplexId x : complex.level(n)) builder.add_simplex(x, MultiIndex({n}));
  for (int n = 1; n <= complex.truncation_degree(); ++n)
    for (SimplexId x : complex.level(n))
      for (int i = 0; i <= n; ++i) builder.set_face(x, 1, i, complex.face(x, i));
  return std::move(builder).build();
}

SemiSimplicialSet as_single(const MultiSemiSimplicialSet& complex) {
  if (complex.axes() != 1)
    throw StructuralError("as_single requires a 1-fold complex, got " +
                          std::to_string(complex.axes()) + " axes");
  SemiSimplicialSetBuilder builder(complex.truncation_total());
  for (int n = 0; n <= complex.truncation_total(); ++n)
    for (SimplexId x : complex.total_level(n)) builder.add_simplex(x, n);
  for (int n = 1; n <= complex.truncation_total(); ++n)
    for (SimplexId x : complex.total_level(n))
      for (int i = 0; i <= n; ++i) builder.set_face(x, i, complex.face(x, 1, i));
  return std::move(builder).build();
}

}  // namespace skan
