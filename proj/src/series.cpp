#include "deltanil/series.hpp"

#include <algorithm>
#include <sstream>

namespace deltanil {

ExponentMatrix radical_shape(const GroupType& g) {
  const Index s = g.blocks();
  ExpGrid beta(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) beta(i, j) = g.exponent(j) - radical_depth(g, i, j);
  return {g, std::move(beta)};
}

ExponentMatrix zero_ideal(const GroupType& g) {
  const Index s = g.blocks();
  ExpGrid beta(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) beta(i, j) = g.exponent(j);
  return {g, std::move(beta)};
}

ExponentMatrix ideal_product(const ExponentMatrix& a, const ExponentMatrix& b) {
  if (a.g != b.g) throw std::invalid_argument("ideal_product: mixed group types");
  const Index s = a.g.blocks();
  ExpGrid beta(s, s);
  for (Index i = 0; i < s; ++i) {
    for (Index j = 0; j < s; ++j) {
      int best = a.g.exponent(j);
      for (Index k = 0; k < s; ++k) {
        best = std::min(best, a.beta(i, k) + b.beta(k, j));
      }
      beta(i, j) = best;
    }
  }
  return {a.g, std::move(beta)};
}

bool ideal_contains(const ExponentMatrix& outer, const ExponentMatrix& inner) {
  if (outer.g != inner.g) {
    throw std::invalid_argument("ideal_contains: mixed group types");
  }
  return (outer.beta.array() <= inner.beta.array()).all();
}

ExponentMatrix annihilator_step(const GroupType& g, const ExponentMatrix& prev) {
  const ExponentMatrix rad = radical_shape(g);
  if (!ideal_contains(rad, prev)) {
    throw NotContainedInRadical("annihilator_step: prev is not inside the radical");
  }
  const Index s = g.blocks();
  ExpGrid beta(s, s);
  for (Index i = 0; i < s; ++i) {
    for (Index j = 0; j < s; ++j) {
      int need = rad.beta(i, j);
      for (Index m = 0; m < s; ++m) {
        // right multiplication: cell (i,j) * J(j,m) lands in prev(i,m)
        need = std::max(need, prev.beta(i, m) - rad.beta(j, m));
        // left multiplication: J(m,i) * cell (i,j) lands in prev(m,j)
        need = std::max(need, prev.beta(m, j) - rad.beta(m, i));
      }
      beta(i, j) = std::clamp(need, 0, g.exponent(j));
    }
  }
  return {g, std::move(beta)};
}

std::vector<ExponentMatrix> uas_via_alpha(const GroupType& g) {
  AlphaTable table(g);
  const Index s = g.blocks();
  std::vector<ExponentMatrix> seq;
  for (int t = 1; t <= table.saturation_step(); ++t) {
    ExpGrid beta(s, s);
    for (Index i = 0; i < s; ++i)
      for (Index j = 0; j < s; ++j) beta(i, j) = g.exponent(j) - table.value(i, j, t);
    seq.push_back(ExponentMatrix{g, std::move(beta)});
  }
  return seq;
}

std::vector<ExponentMatrix> uas_via_annihilators(const GroupType& g) {
  const ExponentMatrix rad = radical_shape(g);
  std::vector<ExponentMatrix> seq;
  ExponentMatrix cur = zero_ideal(g);
  const int cap = 4 * g.top_exponent() * static_cast<int>(g.blocks()) + 4;
  while (!(cur == rad)) {
    ExponentMatrix next = annihilator_step(g, cur);
    if (next == cur) {
      throw InternalMismatch("annihilator iteration stalled below the radical");
    }
    if (static_cast<int>(seq.size()) > cap) {
      throw InternalMismatch("annihilator iteration failed to saturate");
    }
    seq.push_back(next);
    cur = std::move(next);
  }
  return seq;
}

int uas_length(const GroupType& g) { return AlphaTable(g).saturation_step(); }

int y_of_g(const GroupType& g) {
  AlphaTable table(g);
  const Index s = g.blocks();
  if (s == 1) return table.saturation_step() > 0 ? 1 : 0;
  for (int t = 0; t <= table.saturation_step(); ++t) {
    bool ok = true;
    for (Index i = 0; i < s && ok; ++i) {
      for (Index j = 0; j < s && ok; ++j) {
        if (i == s - 1 && j == s - 1) continue;
        if (table.value(i, j, t) < table.depth()(i, j)) ok = false;
      }
    }
    if (ok) return t;
  }
  return table.saturation_step();
}

NilpotencyClass nilpotency_class(const GroupType& g) {
  NilpotencyClass out;
  out.applicability = classify_applicability(g);
  out.guaranteed = out.applicability.guaranteed();
  out.value = g.ranks.back() >= 2 ? uas_length(g) : y_of_g(g);
  return out;
}

HypercenterDescription hypercenter_description(const GroupType& g, int t) {
  const int cls = nilpotency_class(g).value;
  if (t < 1 || t > cls) {
    std::ostringstream msg;
    msg << "StepOutOfRange: t = " << t << " outside [1, " << cls << "]";
    throw StepOutOfRange(msg.str());
  }
  AlphaTable table(g);
  const Index s = g.blocks();
  HypercenterDescription desc;
  desc.t = t;
  desc.alpha_slice = ExpGrid(s, s);
  desc.cell_exp = ExpGrid(s, s);
  for (Index i = 0; i < s; ++i) {
    for (Index j = 0; j < s; ++j) {
      desc.alpha_slice(i, j) = table.value(i, j, t);
      desc.cell_exp(i, j) = g.exponent(j) - desc.alpha_slice(i, j);
    }
  }
  return desc;
}

bool operator==(const SeriesReport& a, const SeriesReport& b) {
  if (!(a.g == b.g && a.applicability.tag == b.applicability.tag &&
        a.sigma_value == b.sigma_value && a.ell == b.ell &&
        a.length == b.length && a.y == b.y && a.cls == b.cls &&
        a.guaranteed == b.guaranteed && a.uas.size() == b.uas.size() &&
        a.ucs.size() == b.ucs.size())) {
    return false;
  }
  for (size_t k = 0; k < a.uas.size(); ++k) {
    if (!(a.uas[k] == b.uas[k])) return false;
  }
  for (size_t k = 0; k < a.ucs.size(); ++k) {
    if (a.ucs[k].t != b.ucs[k].t ||
        !grids_equal(a.ucs[k].alpha_slice, b.ucs[k].alpha_slice) ||
        !grids_equal(a.ucs[k].cell_exp, b.ucs[k].cell_exp)) {
      return false;
    }
  }
  return true;
}

SeriesReport ucs_report(const GroupType& g) {
  SeriesReport rep;
  rep.g = g;
  rep.applicability = classify_applicability(g);
  rep.sigma_value = sigma(g);
  rep.ell = top_gap_index(g);
  rep.order = delta_order(g);
  rep.uas = uas_via_alpha(g);
  const auto direct = uas_via_annihilators(g);
  if (rep.uas.size() != direct.size()) {
    throw InternalMismatch("uas routes disagree on length");
  }
  for (size_t k = 0; k < direct.size(); ++k) {
    if (!(rep.uas[k] == direct[k])) {
      std::ostringstream msg;
      msg << "InternalMismatch: uas routes disagree at step " << (k + 1);
      throw InternalMismatch(msg.str());
    }
  }
  rep.length = static_cast<int>(rep.uas.size());
  rep.y = y_of_g(g);
  const NilpotencyClass cls = nilpotency_class(g);
  rep.cls = cls.value;
  rep.guaranteed = cls.guaranteed;
  for (int t = 1; t <= rep.cls; ++t) {
    rep.ucs.push_back(hypercenter_description(g, t));
  }
  return rep;
}

}  // namespace deltanil
