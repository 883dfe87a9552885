/*
 *   Copyright 2026 The ybe-growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file defect.hpp
 *
 * Defect measure and defect series of a finite group, and the growth series
 * of the structure group of its full conjugation solution.
 *
 * Products of conjugacy classes are handled as class bitmasks: a product of
 * unions of classes is again a union of classes, read off the class product
 * table. Along each coordinate the powers C^k form an eventually periodic
 * sequence of masks, which splits Z into finitely many small values and
 * finitely many residue tails. Summing the defect over all combinations
 * gives the series exactly as polynomial parts over products of (1 - t^p).
 */

#pragma once

#include <ybe/algebra/conjugacy.hpp>
#include <ybe/algebra/group_table.hpp>
#include <ybe/budget.hpp>
#include <ybe/series/polynomial.hpp>
#include <ybe/series/rational_gf.hpp>
#include <ybe/series/truncated_series.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ybe {

struct DefectRecord {
  std::vector<std::int64_t> kbar;
  ClassMask product_mask;
  std::uint64_t product_size;
  std::uint64_t defect;
};

enum class SupportClass { finite, finite_plus_axis_rays, truncated_only };

inline std::string to_string(SupportClass s) {
  switch (s) {
    case SupportClass::finite: return "finite";
    case SupportClass::finite_plus_axis_rays: return "finite-plus-axis-rays";
    case SupportClass::truncated_only: return "truncated-only";
  }
  return "?";
}

/// Everything the defect computations need about one group.
class DefectContext {
 public:
  explicit DefectContext(const FiniteGroupTable& g)
      : dec_(conjugacy_classes(g)), table_(g, dec_), gamma_(commutator_subgroup(g).size()) {}

  DefectContext(ConjugacyDecomposition dec, ClassProductTable table, std::uint64_t gamma)
      : dec_(std::move(dec)), table_(std::move(table)), gamma_(gamma) {}

  [[nodiscard]] const ConjugacyDecomposition& decomposition() const { return dec_; }
  [[nodiscard]] const ClassProductTable& table() const { return table_; }
  [[nodiscard]] std::uint64_t gamma() const { return gamma_; }
  /// Number of non-identity classes, i.e. the lattice dimension.
  [[nodiscard]] std::size_t rank() const { return dec_.count() - 1; }

  /// Mask of C^k, where negative k means the inverse class.
  [[nodiscard]] ClassMask class_power(std::size_t cls, std::int64_t k) const {
    const std::size_t c = k < 0 ? dec_.inverse_class[cls] : cls;
    ClassMask m = 1;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) m = table_.multiply(m, ClassMask{1} << c);
    return m;
  }

  [[nodiscard]] DefectRecord measure(const std::vector<std::int64_t>& kbar) const {
    if (kbar.size() != rank()) throw std::invalid_argument("kbar must have one entry per non-identity class");
    ClassMask m = 1;
    for (std::size_t i = 0; i < kbar.size(); ++i) m = table_.multiply(m, class_power(i + 1, kbar[i]));
    const std::uint64_t size = dec_.mask_size(m);
    if (size > gamma_) throw InternalError("class product larger than the commutator subgroup");
    return {kbar, m, size, gamma_ - size};
  }

 private:
  ConjugacyDecomposition dec_;
  ClassProductTable table_;
  std::uint64_t gamma_;
};

inline DefectRecord defect_measure(const FiniteGroupTable& g, const ConjugacyDecomposition& dec,
                                   const ClassProductTable& table, const std::vector<std::int64_t>& kbar) {
  return DefectContext(dec, table, commutator_subgroup(g).size()).measure(kbar);
}

/// t^{start} / (1 - t^{period}) summed against a numerator, along one class.
struct DefectTail {
  std::size_t cls;         // class index (>= 1)
  std::size_t period;
  Polynomial numerator;    // contribution is numerator / (1 - t^period)
};

struct DefectSeriesResult {
  TruncatedSeries truncated;
  std::optional<RationalGF> closed_form;
  SupportClass classification;
  Polynomial polynomial_part;          // set for finite and axis-ray support
  std::vector<DefectTail> tails;       // axis-ray support only
  std::vector<std::string> diagnostics;
};

namespace detail {

/// Eventually periodic sequence m_k = C^k: m_k = m_{k+period} for k >= preperiod.
struct PowerCycle {
  std::vector<ClassMask> masks;  // m_0 .. m_{preperiod + period - 1}
  std::size_t preperiod;
  std::size_t period;
};

inline PowerCycle power_cycle(const ClassProductTable& table, std::size_t cls) {
  std::vector<ClassMask> masks{1};
  std::unordered_map<ClassMask, std::size_t> first;
  first[1] = 0;
  for (;;) {
    const ClassMask next = table.multiply(masks.back(), ClassMask{1} << cls);
    const auto it = first.find(next);
    if (it != first.end()) return {masks, it->second, masks.size() - it->second};
    first[next] = masks.size();
    masks.push_back(next);
  }
}

/// One admissible value set for a coordinate: a single k, or a residue tail.
struct CoordinateChoice {
  ClassMask mask;
  std::size_t exponent;  // |k| of the single value, or of the first tail value
  std::size_t period;    // 0 for a single value
};

inline std::vector<CoordinateChoice> coordinate_choices(const DefectContext& ctx, std::size_t cls) {
  std::vector<CoordinateChoice> out{{ClassMask{1}, 0, 0}};
  const auto& dec = ctx.decomposition();
  for (const std::size_t side : {cls, dec.inverse_class[cls]}) {
    const PowerCycle pc = power_cycle(ctx.table(), side);
    const std::size_t start = std::max<std::size_t>(pc.preperiod, 1);
    for (std::size_t k = 1; k < start; ++k) out.push_back({pc.masks[k], k, 0});
    for (std::size_t j = start; j < start + pc.period; ++j) {
      const std::size_t idx = j < pc.masks.size() ? j : pc.preperiod + (j - pc.preperiod) % pc.period;
      out.push_back({pc.masks[idx], j, pc.period});
    }
  }
  return out;
}

using TailKey = std::vector<std::size_t>;  // period per coordinate, 0 = single value
using Contributions = std::map<TailKey, std::vector<Integer>>;

inline void add_shifted(std::vector<Integer>& into, const std::vector<Integer>& from, std::size_t shift) {
  if (into.size() < from.size() + shift) into.resize(from.size() + shift);
  for (std::size_t i = 0; i < from.size(); ++i) into[i + shift] += from[i];
}

}  // namespace detail

/// Sum of delta(kbar) t^{|kbar|} over the L1 ball of the given radius, by
/// direct enumeration. Uses the weight 2 per non-zero coordinate when every
/// class is verified to be self-inverse.
inline TruncatedSeries defect_series_truncated(const DefectContext& ctx, std::size_t order,
                                               std::uint64_t budget = kDefaultDefectBudget) {
  const std::size_t r = ctx.rank();
  const bool symmetric = ctx.decomposition().all_self_inverse();
  // powers[i][s][k]: mask of C_{i+1}^{+-k}
  std::vector<std::array<std::vector<ClassMask>, 2>> powers(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (int s = 0; s < 2; ++s) {
      const std::size_t cls = s == 0 ? i + 1 : ctx.decomposition().inverse_class[i + 1];
      powers[i][s].push_back(1);
      for (std::size_t k = 1; k <= order; ++k)
        powers[i][s].push_back(ctx.table().multiply(powers[i][s].back(), ClassMask{1} << cls));
    }
  }
  struct Key {
    std::size_t depth, radius;
    ClassMask mask;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<ClassMask>()(k.mask) ^ (k.depth * 0x9e3779b97f4a7c15ULL) ^ (k.radius << 32);
    }
  };
  std::unordered_map<Key, std::vector<Integer>, KeyHash> memo;
  // coefficient vector (length radius+1) of the sum over the remaining coordinates
  auto rec = [&](auto&& self, std::size_t depth, std::size_t radius, ClassMask m) -> std::vector<Integer> {
    if (depth == r) {
      std::vector<Integer> v(radius + 1);
      v[0] = ctx.gamma() - ctx.decomposition().mask_size(m);
      return v;
    }
    const Key key{depth, radius, m};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (memo.size() >= budget) throw BudgetExceeded("defect enumeration exceeded its state budget");
    std::vector<Integer> acc(radius + 1);
    for (std::size_t k = 0; k <= radius; ++k) {
      const int sides = k == 0 || symmetric ? 1 : 2;
      for (int s = 0; s < sides; ++s) {
        const auto sub = self(self, depth + 1, radius - k, ctx.table().multiply(m, powers[depth][s][k]));
        const Integer weight = (k != 0 && symmetric) ? 2 : 1;
        for (std::size_t i = 0; i < sub.size(); ++i) acc[i + k] += weight * sub[i];
      }
    }
    memo.emplace(key, acc);
    return acc;
  };
  const auto coeffs = rec(rec, 0, order, ClassMask{1});
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = Rational(coeffs[i]);
  return s;
}

/// Defect series with exact closed form when its support is finite or
/// finite plus axis-parallel rays.
inline DefectSeriesResult defect_series(const DefectContext& ctx, std::size_t order,
                                        std::uint64_t budget = kDefaultDefectBudget) {
  DefectSeriesResult result{defect_series_truncated(ctx, order, budget), std::nullopt,
                            SupportClass::truncated_only, {}, {}, {}};
  const std::size_t r = ctx.rank();
  std::vector<std::vector<detail::CoordinateChoice>> choices;
  for (std::size_t i = 0; i < r; ++i) choices.push_back(detail::coordinate_choices(ctx, i + 1));

  std::map<std::pair<std::size_t, ClassMask>, detail::Contributions> memo;
  std::uint64_t states = 0;
  auto rec = [&](auto&& self, std::size_t depth, ClassMask m) -> const detail::Contributions& {
    const auto key = std::make_pair(depth, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++states > budget) throw BudgetExceeded("defect closed form exceeded its state budget");
    detail::Contributions acc;
    if (depth == r) {
      acc[detail::TailKey(r, 0)] = {Integer(ctx.gamma() - ctx.decomposition().mask_size(m))};
    } else {
      for (const auto& ch : choices[depth]) {
        const auto& sub = self(self, depth + 1, ctx.table().multiply(m, ch.mask));
        for (const auto& [tk, coeffs] : sub) {
          detail::TailKey k2 = tk;
          k2[depth] = ch.period;
          detail::add_shifted(acc[k2], coeffs, ch.exponent);
        }
      }
    }
    return memo.emplace(key, std::move(acc)).first->second;
  };

  detail::Contributions total;
  try {
    total = rec(rec, 0, ClassMask{1});
  } catch (const BudgetExceeded& e) {
    result.diagnostics.emplace_back(e.what());
    return result;
  }

  bool axis_only = true;
  RationalGF sum;
  for (const auto& [tk, coeffs] : total) {
    std::vector<Rational> rc(coeffs.begin(), coeffs.end());
    const Polynomial num(std::move(rc));
    if (num.is_zero()) continue;
    Polynomial den = Polynomial::constant(1);
    std::size_t tail_coords = 0, cls = 0, period = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (tk[i] == 0) continue;
      ++tail_coords;
      cls = i + 1;
      period = tk[i];
      den *= one_plus(-1, tk[i]);
    }
    if (tail_coords == 0) {
      result.polynomial_part += num;
    } else if (tail_coords == 1) {
      result.tails.push_back({cls, period, num});
    } else {
      axis_only = false;
    }
    sum += RationalGF(num, den);
  }
  if (sum.expand(order) != result.truncated) {
    throw InternalError("defect closed form disagrees with direct enumeration");
  }
  if (!axis_only) {
    result.polynomial_part = Polynomial();
    result.tails.clear();
    result.diagnostics.emplace_back("defect support extends beyond axis-parallel rays");
    return result;
  }
  result.classification = result.tails.empty() ? SupportClass::finite : SupportClass::finite_plus_axis_rays;
  result.closed_form = sum.reduced();
  return result;
}

inline DefectSeriesResult defect_series(const FiniteGroupTable& g, std::size_t order,
                                        std::uint64_t budget = kDefaultDefectBudget) {
  return defect_series(DefectContext(g), order, budget);
}

struct FullConjugationGrowth {
  TruncatedSeries truncated;
  std::optional<RationalGF> closed_form;
  DefectSeriesResult defect;
  std::uint64_t gamma;
  std::size_t classes;
};

/// gamma ((1+t)/(1-t))^c - (1+t)^2 Delta(t) for a group of commutator length 1.
inline FullConjugationGrowth as_full_conjugation_gf(const FiniteGroupTable& g, std::size_t order,
                                                    std::uint64_t budget = kDefaultDefectBudget) {
  const DefectContext ctx(g);
  if (!has_commutator_length_one(g, ctx.decomposition())) {
    throw std::domain_error("group has commutator length greater than 1; the defect formula does not apply");
  }
  DefectSeriesResult defect = defect_series(ctx, order, budget);
  const auto c = static_cast<unsigned>(ctx.decomposition().count());
  const RationalGF free_part = pow(integers_growth(), c) * Rational(ctx.gamma());
  const Polynomial sq = pow(Polynomial{1, 1}, 2);
  TruncatedSeries trunc = free_part.expand(order) - TruncatedSeries::from_polynomial(sq, order) * defect.truncated;
  std::optional<RationalGF> closed;
  if (defect.closed_form) closed = free_part - RationalGF(sq) * *defect.closed_form;
  return {std::move(trunc), std::move(closed), std::move(defect), ctx.gamma(), c};
}

}  // namespace ybe
