#pragma once

#include <string>

#include "deltanil/oracle.hpp"
#include "deltanil/series.hpp"

namespace deltanil {

enum class RenderFormat { kText, kLatex, kJson };

RenderFormat render_format_from_name(const std::string& name);

/// Cell convention shared with the usual hand-written tables: "0" for the
/// zero cell (beta = n_j), "*" for the full cell (beta = 0), "p^k" otherwise
/// ("p" when k = 1). Latex emits an array environment in the same convention;
/// json emits {"beta": [[...]], "n": [...]}.
std::string render_exponent_matrix(const ExponentMatrix& m, RenderFormat fmt);

/// One symbolic hypercenter, in the annotated-matrix style: entries like
/// "p^2c21", diagonal entries like "p^3c22+pc44+1" with the trailing
/// block-s parameter, "0" for pinned entries, bare "c31" for free ones.
std::string render_hypercenter(const GroupType& g,
                               const HypercenterDescription& desc,
                               RenderFormat fmt);

std::string render_alpha_slice(const GroupType& g, const ExpGrid& slice,
                               RenderFormat fmt);

std::string render_report(const SeriesReport& rep, RenderFormat fmt);
std::string render_report(const OracleReport& rep, RenderFormat fmt);

/// The scalar head of a series report (group, sigma, ell, case, order,
/// l, y, class) without the matrices.
std::string render_class_summary(const SeriesReport& rep, RenderFormat fmt);

/// Inverse of render_report(rep, kJson); used by the round-trip checks.
SeriesReport parse_series_report(const std::string& json_text);

}  // namespace deltanil
