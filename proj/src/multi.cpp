#include "skan/multi.hpp"

#include <optional>
#include <vector>

namespace skan {
namespace {

SimplexId t_get(const MultiDegeneracyState& state, SimplexId x, int q, int j) {
  const auto it = state.t_table.find({x, q, j});
  if (it == state.t_table.end())
    throw StructuralError("T_" + std::to_string(j) + "^" + std::to_string(q) + " of simplex " +
                          std::to_string(x.value) + " not yet constructed (calling order violated)");
  return it->second;
}

SimplexId s_get(const MultiDegeneracyState& state, SimplexId x, int q, int j) {
  const auto it = state.s_table.find({x, q, j});
  if (it == state.s_table.end())
    throw StructuralError("s_" + std::to_string(j) + "^" + std::to_string(q) + " of simplex " +
                          std::to_string(x.value) + " not yet constructed (calling order violated)");
  return it->second;
}

MultiHorn assemble(const MultiSemiSimplicialSet& complex, const MultiIndex& target,
                   int missing_axis, int missing, std::map<std::pair<int, int>, SimplexId> faces,
                   const SynthesisOptions& options, const char* stage) {
  if (!options.debug_checks) return MultiHorn{target, missing_axis, missing, std::move(faces)};
  try {
    return make_multi_horn(complex, target, missing_axis, missing, faces);
  } catch (const HornError& e) {
    throw InternalCheckError(std::string(stage) + " system incompatible: " + e.what());
  }
}

}  // namespace

SimplexId build_T_multi(MultiDegeneracyState& state, const MultiSemiSimplicialSet& complex,
                        SimplexId x, int r, int k, const SynthesisOptions& options) {
  const MultiIndex& n = complex.index_of(x);
  if (r < 1 || r > complex.axes())
    throw StructuralError("axis " + std::to_string(r) + " out of range");
  if (k < 0 || k > n.entry(r))
    throw StructuralError("T index " + std::to_string(k) + " out of range on axis " +
                          std::to_string(r));
  if (n.total() + 2 > complex.truncation_total())
    throw StructuralError("T at total degree " + std::to_string(n.total()) +
                          " needs truncation >= " + std::to_string(n.total() + 2));
  if (const auto it = state.t_table.find({x, r, k}); it != state.t_table.end()) return it->second;

  // stage 1: y plays the role of d_{k+1}^r T_k^r x, at index n + e_r
  const MultiIndex y_index = n.plus(r);
  std::map<std::pair<int, int>, SimplexId> y_faces;
  for (int q = 1; q <= complex.axes(); ++q) {
    const int nq = y_index.entry(q);
    if (nq == 0) continue;
    for (int j = 0; j <= nq; ++j) {
      if (q == r) {
        if (j == k + 1) continue;  // the open slot
        if (j == 0)
          y_faces[{q, j}] = x;
        else if (j < k + 1)
          y_faces[{q, j}] = complex.face(t_get(state, complex.face(x, r, j - 1), r, k - 1), r, k);
        else
          y_faces[{q, j}] = complex.face(t_get(state, complex.face(x, r, j - 1), r, k), r, k + 1);
      } else {
        y_faces[{q, j}] = complex.face(t_get(state, complex.face(x, q, j), r, k), r, k + 1);
      }
    }
  }
  const MultiHorn y_horn = assemble(complex, y_index, r, k + 1, std::move(y_faces), options, "y-stage");
  SimplexId y;
  try {
    y = fill_multi_horn(complex, y_horn);
  } catch (const MultiNoFiller& e) {
    throw MultiNoFiller(e.horn(), "y-stage");
  }

  // stage 2: all faces of T_k^r x except the open (r, 0) slot
  const MultiIndex z_index = n.plus(r, 2);
  std::map<std::pair<int, int>, SimplexId> z_faces;
  for (int q = 1; q <= complex.axes(); ++q) {
    const int nq = z_index.entry(q);
    if (nq == 0) continue;
    for (int j = 0; j <= nq; ++j) {
      if (q == r) {
        if (j == 0) continue;  // the open slot
        if (j < k + 1)
          z_faces[{q, j}] = t_get(state, complex.face(x, r, j - 1), r, k - 1);
        else if (j == k + 1 || j == k + 2)
          z_faces[{q, j}] = y;
        else
          z_faces[{q, j}] = t_get(state, complex.face(x, r, j - 2), r, k);
      } else {
        z_faces[{q, j}] = t_get(state, complex.face(x, q, j), r, k);
      }
    }
  }
  const MultiHorn z_horn = assemble(complex, z_index, r, 0, std::move(z_faces), options, "z-stage");
  SimplexId value;
  try {
    value = fill_multi_horn(complex, z_horn);
  } catch (const MultiNoFiller& e) {
    throw MultiNoFiller(e.horn(), "z-stage");
  }

  state.fill_count += 2;
  state.t_table[{x, r, k}] = value;
  return value;
}

SimplexId build_s_multi(MultiDegeneracyState& state, const MultiSemiSimplicialSet& complex,
                        SimplexId x, int r, int k, const SynthesisOptions& options) {
  const MultiIndex& n = complex.index_of(x);
  if (r < 1 || r > complex.axes())
    throw StructuralError("axis " + std::to_string(r) + " out of range");
  if (k < 0 || k > n.entry(r))
    throw StructuralError("s index " + std::to_string(k) + " out of range on axis " +
                          std::to_string(r));
  if (const auto it = state.s_table.find({x, r, k}); it != state.s_table.end()) return it->second;

  SimplexId value;
  const auto img = state.image_index.find(x);
  const bool has_witness = img != state.image_index.end() && !img->second.empty();
  if (has_witness && img->second.begin()->first.first < r) {
    // Case 1: x = s_j^q w, smallest (q,j) (necessarily q < r here)
    const auto& [qj, w] = *img->second.begin();
    const auto& [q, j] = qj;
    value = s_get(state, s_get(state, w, r, k), q, j);
  } else if (has_witness && img->second.begin()->first.first == r &&
             img->second.begin()->first.second < k) {
    // Case 2: no q < r witness; x = s_j^r w with smallest j (< k)
    const auto& [qj, w] = *img->second.begin();
    value = s_get(state, s_get(state, w, r, k - 1), r, qj.second);
  } else {
    // Case 3: s_k^r x = d_0^r T_k^r x
    SimplexId t;
    if (const auto it = state.t_table.find({x, r, k}); it != state.t_table.end())
      t = it->second;
    else
      t = build_T_multi(state, complex, x, r, k, options);
    value = complex.face(t, r, 0);
  }
  state.s_table[{x, r, k}] = value;
  state.image_index[value].emplace(std::make_pair(r, k), x);
  return value;
}

MultiSynthesisResult synthesize_multi(const MultiSemiSimplicialSet& complex, int horizon,
                                      const SynthesisOptions& options) {
  if (horizon < 0) throw StructuralError("negative horizon");
  if (horizon + 2 > complex.truncation_total())
    throw StructuralError("horizon " + std::to_string(horizon) + " needs total truncation >= " +
                          std::to_string(horizon + 2) + ", have " +
                          std::to_string(complex.truncation_total()));
  MultiSynthesisResult out;
  for (int m = 0; m <= horizon; ++m) {
    for (int q = 1; q <= complex.axes(); ++q) {
      for (int j = 0; j <= m; ++j) {
        for (SimplexId x : complex.total_level(m))
          if (complex.index_of(x).entry(q) >= j) build_T_multi(out.state, complex, x, q, j, options);
        for (SimplexId x : complex.total_level(m))
          if (complex.index_of(x).entry(q) >= j) build_s_multi(out.state, complex, x, q, j, options);
      }
    }
  }
  out.simplicial.base = complex;
  out.simplicial.degeneracies = out.state.s_table;
  return out;
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

struct MultiChecker {
  const MultiSemiSimplicialSet& complex;
  const MultiDegeneracyTable& s;
  const MultiTTable& t;
  VerificationReport report;

  std::optional<SimplexId> s_look(SimplexId x, int q, int j) const {
    const auto it = s.find({x, q, j});
    if (it == s.end()) return std::nullopt;
    return it->second;
  }
  std::optional<SimplexId> t_look(SimplexId x, int q, int j) const {
    const auto it = t.find({x, q, j});
    if (it == t.end()) return std::nullopt;
    return it->second;
  }

  void check(const char* tag, SimplexId lhs, SimplexId rhs, const std::string& detail) {
    ++report.checked[tag];
    if (lhs != rhs)
      report.violations.push_back(
          {tag, detail + " lhs=" + std::to_string(lhs.value) + " rhs=" + std::to_string(rhs.value)});
  }

  void s_identities(SimplexId x, const MultiIndex& n, int q, int j, SimplexId v) {
    const std::string base =
        "x=" + std::to_string(x.value) + " q=" + std::to_string(q) + " j=" + std::to_string(j);
    const int nq = n.entry(q);
    for (int i = 0; i < j; ++i)
      if (const auto rhs = s_look(complex.face(x, q, i), q, j - 1))
        check("ds-commute-low", complex.face(v, q, i), *rhs, base + " i=" + std::to_string(i));
    check("ds-cancel", complex.face(v, q, j), x, base + " i=" + std::to_string(j));
    check("ds-cancel", complex.face(v, q, j + 1), x, base + " i=" + std::to_string(j + 1));
    for (int i = j + 2; i <= nq + 1; ++i)
      if (const auto rhs = s_look(complex.face(x, q, i - 1), q, j))
        check("ds-commute-high", complex.face(v, q, i), *rhs, base + " i=" + std::to_string(i));
    for (int i = 0; i < j; ++i) {
      const auto si = s_look(x, q, i);
      const auto sj1 = s_look(x, q, j - 1);
      if (!si || !sj1) continue;
      const auto lhs = s_look(*si, q, j);
      const auto rhs = s_look(*sj1, q, i);
      if (lhs && rhs) check("ss-swap", *lhs, *rhs, base + " i=" + std::to_string(i));
    }
    // cross-axis identities against every other axis with faces
    for (int p = 1; p <= complex.axes(); ++p) {
      if (p == q) continue;
      const int np = n.entry(p);
      for (int i = 0; i <= np; ++i) {
        if (np >= 1)
          if (const auto rhs = s_look(complex.face(x, p, i), q, j))
            check("ds-cross", complex.face(v, p, i), *rhs,
                  base + " p=" + std::to_string(p) + " i=" + std::to_string(i));
        const auto sp = s_look(x, p, i);
        if (!sp) continue;
        const auto lhs = s_look(*sp, q, j);   // s_j^q s_i^p x
        const auto rhs = s_look(v, p, i);     // s_i^p s_j^q x
        if (lhs && rhs) {
          check("ss-cross", *lhs, *rhs,
                base + " p=" + std::to_string(p) + " i=" + std::to_string(i));
          ++report.checked[p < q ? "ss-cross-lo" : "ss-cross-hi"];
        }
      }
    }
  }

  void t_identities(SimplexId x, const MultiIndex& n, int q, int j, SimplexId v) {
    const std::string base =
        "x=" + std::to_string(x.value) + " q=" + std::to_string(q) + " j=" + std::to_string(j);
    const int nq = n.entry(q);
    for (int i = 1; i < j + 1; ++i)
      if (const auto rhs = t_look(complex.face(x, q, i - 1), q, j - 1))
        check("dt-commute-low", complex.face(v, q, i), *rhs, base + " i=" + std::to_string(i));
    for (int i = j + 3; i <= nq + 2; ++i)
      if (const auto rhs = t_look(complex.face(x, q, i - 2), q, j))
        check("dt-commute-high", complex.face(v, q, i), *rhs, base + " i=" + std::to_string(i));
    check("t-face-pair", complex.face(v, q, j + 1), complex.face(v, q, j + 2), base);
    check("t-section", complex.face(complex.face(v, q, j + 1), q, 0), x, base);
    for (int p = 1; p <= complex.axes(); ++p) {
      if (p == q || n.entry(p) == 0) continue;
      for (int i = 0; i <= n.entry(p); ++i)
        if (const auto rhs = t_look(complex.face(x, p, i), q, j))
          check("dt-cross", complex.face(v, p, i), *rhs,
                base + " p=" + std::to_string(p) + " i=" + std::to_string(i));
    }
  }

  void run() {
    for (int m = 0; m <= complex.truncation_total(); ++m) {
      for (SimplexId x : complex.total_level(m)) {
        const MultiIndex& n = complex.index_of(x);
        for (int q = 1; q <= complex.axes(); ++q) {
          for (int j = 0; j <= n.entry(q); ++j) {
            if (const auto v = s_look(x, q, j)) s_identities(x, n, q, j, *v);
            if (const auto v = t_look(x, q, j)) t_identities(x, n, q, j, *v);
          }
        }
      }
    }
    const long long lo = report.checked["ss-cross-lo"];
    const long long hi = report.checked["ss-cross-hi"];
    if (lo != hi)
      report.violations.push_back({"ss-cross-symmetry", "p<q count=" + std::to_string(lo) +
                                                            " p>q count=" + std::to_string(hi)});

    std::map<std::tuple<MultiIndex, int, int>, std::map<SimplexId, SimplexId>> images;
    for (const auto& [key, v] : s) {
      const auto& [w, q, j] = key;
      ++report.checked["s-injective"];
      const auto [it, fresh] = images[{complex.index_of(w), q, j}].emplace(v, w);
      if (!fresh)
        report.violations.push_back(
            {"s-injective", "q=" + std::to_string(q) + " j=" + std::to_string(j) +
                                " w=" + std::to_string(it->second.value) +
                                " w2=" + std::to_string(w.value) +
                                " value=" + std::to_string(v.value)});
    }
    // shared-value factorization, same-axis (j < i) and cross-axis (p != q)
    std::map<SimplexId, std::vector<std::tuple<int, int, SimplexId>>> by_value;
    for (const auto& [key, v] : s)
      by_value[v].emplace_back(std::get<1>(key), std::get<2>(key), std::get<0>(key));
    for (const auto& [value, hits] : by_value) {
      for (const auto& [q, j, w] : hits) {
        for (const auto& [p, i, y] : hits) {
          const std::string detail = "value=" + std::to_string(value.value) +
                                     " q=" + std::to_string(q) + " j=" + std::to_string(j) +
                                     " p=" + std::to_string(p) + " i=" + std::to_string(i);
          if (p == q && j < i) {
            const SimplexId vv = complex.face(y, q, j);
            const auto sv = s_look(vv, q, j);
            const auto sw = s_look(vv, q, i - 1);
            if (!sv || !sw) continue;
            check("ss-factor", *sv, y, detail + " v=" + std::to_string(vv.value));
            check("ss-factor", *sw, w, detail + " v=" + std::to_string(vv.value));
          } else if (p != q) {
            const SimplexId vv = complex.face(y, q, j);
            const auto sv = s_look(vv, q, j);
            const auto sw = s_look(vv, p, i);
            if (!sv || !sw) continue;
            check("ss-factor-cross", *sv, y, detail + " v=" + std::to_string(vv.value));
            check("ss-factor-cross", *sw, w, detail + " v=" + std::to_string(vv.value));
          }
        }
      }
    }
  }
};

}  // namespace

VerificationReport verify_multi(const MultiSemiSimplicialSet& complex,
                                const MultiDegeneracyTable& s, const MultiTTable& t) {
  MultiChecker checker{complex, s, t, {}};
  checker.run();
  return std::move(checker.report);
}

VerificationReport verify_multi(const MultiSemiSimplicialSet& complex,
                                const MultiSimplicialSet& result,
                                const MultiDegeneracyState& state) {
  return verify_multi(complex, result.degeneracies, state.t_table);
}

}  // namespace skan
