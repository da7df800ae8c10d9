#include "deltanil/render.hpp"

#include <json.hpp>
#include <sstream>

namespace deltanil {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string power_token(int e, bool latex) {
  if (e == 0) return "*";
  if (e == 1) return "p";
  std::ostringstream os;
  if (latex) {
    os << "p^{" << e << "}";
  } else {
    os << "p^" << e;
  }
  return os.str();
}

std::string cell_token(int beta, int nj, bool latex) {
  if (beta >= nj) return "0";
  return power_token(beta, latex);
}

ordered_json grid_to_json(const ExpGrid& grid) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < grid.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < grid.cols(); ++j) row.push_back(grid(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExpGrid grid_from_json(const nlohmann::json& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r > 0 ? static_cast<Index>(rows[0].size()) : 0;
  ExpGrid grid(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      grid(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)].get<int>();
  return grid;
}

std::string subscript(std::int64_t a, std::int64_t b, bool latex) {
  std::ostringstream os;
  if (latex) {
    os << "c_{" << (a + 1) << (b + 1) << "}";
  } else {
    os << "c" << (a + 1) << (b + 1);
  }
  return os.str();
}

/// Token for one entry of a symbolic hypercenter matrix.
std::string hypercenter_token(const GroupType& g,
                              const HypercenterDescription& desc,
                              std::int64_t a, std::int64_t b, bool latex) {
  const std::int64_t r = g.total_rank();
  const Index i = g.block_of(a);
  const Index j = g.block_of(b);
  if (a != b) {
    const int e = desc.cell_exp(i, j);
    if (e >= g.exponent(j)) return "0";
    if (e == 0) return subscript(a, b, latex);
    return power_token(e, latex) + subscript(a, b, latex);
  }
  const std::string tie = "p" + subscript(r - 1, r - 1, latex) + "+1";
  if (a == r - 1) return tie;
  const int e = desc.cell_exp(i, i);
  if (e >= g.exponent(i)) return tie;
  if (e == 1) return "p" + subscript(a, a, latex) + "+1";
  return power_token(e, latex) + subscript(a, a, latex) + "+" + tie;
}

std::string join_rows(const std::vector<std::vector<std::string>>& rows,
                      bool latex) {
  std::ostringstream os;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0) os << (latex ? "&" : " ");
      os << rows[i][j];
    }
    if (latex) {
      os << "\\\\";
    }
    if (i + 1 < rows.size()) os << "\n";
  }
  return os.str();
}

std::string latex_array(const std::string& body, Index cols) {
  std::ostringstream os;
  os << "\\left[\\begin{array}{";
  for (Index c = 0; c < cols; ++c) os << "c";
  os << "}\n" << body << "\n\\end{array}\\right]";
  return os.str();
}

std::string group_line(const GroupType& g) {
  std::ostringstream os;
  os << "group: p=" << g.p << " type=(";
  for (size_t k = 0; k < g.exponents.size(); ++k) {
    if (k) os << ",";
    os << g.exponents[k];
  }
  os << ") ranks=(";
  for (size_t k = 0; k < g.ranks.size(); ++k) {
    if (k) os << ",";
    os << g.ranks[k];
  }
  os << ")";
  return os.str();
}

}  // namespace

RenderFormat render_format_from_name(const std::string& name) {
  if (name == "text") return RenderFormat::kText;
  if (name == "latex") return RenderFormat::kLatex;
  if (name == "json") return RenderFormat::kJson;
  throw UsageError("unknown format '" + name + "' (expected text|latex|json)");
}

std::string render_exponent_matrix(const ExponentMatrix& m, RenderFormat fmt) {
  const Index s = m.g.blocks();
  if (fmt == RenderFormat::kJson) {
    ordered_json doc;
    doc["beta"] = grid_to_json(m.beta);
    doc["n"] = m.g.exponents;
    return doc.dump();
  }
  const bool latex = fmt == RenderFormat::kLatex;
  std::vector<std::vector<std::string>> rows(static_cast<size_t>(s));
  for (Index i = 0; i < s; ++i) {
    for (Index j = 0; j < s; ++j) {
      rows[static_cast<size_t>(i)].push_back(
          cell_token(m.beta(i, j), m.g.exponent(j), latex));
    }
  }
  const std::string body = join_rows(rows, latex);
  return latex ? latex_array(body, s) : body;
}

std::string render_hypercenter(const GroupType& g,
                               const HypercenterDescription& desc,
                               RenderFormat fmt) {
  if (fmt == RenderFormat::kJson) {
    ordered_json doc;
    doc["t"] = desc.t;
    doc["alpha"] = grid_to_json(desc.alpha_slice);
    doc["exp"] = grid_to_json(desc.cell_exp);
    return doc.dump();
  }
  const bool latex = fmt == RenderFormat::kLatex;
  const std::int64_t r = g.total_rank();
  std::vector<std::vector<std::string>> rows(static_cast<size_t>(r));
  for (std::int64_t a = 0; a < r; ++a) {
    for (std::int64_t b = 0; b < r; ++b) {
      rows[static_cast<size_t>(a)].push_back(
          hypercenter_token(g, desc, a, b, latex));
    }
  }
  const std::string body = join_rows(rows, latex);
  return latex ? latex_array(body, r) : body;
}

std::string render_alpha_slice(const GroupType& g, const ExpGrid& slice,
                               RenderFormat fmt) {
  if (fmt == RenderFormat::kJson) {
    ordered_json doc;
    doc["alpha"] = grid_to_json(slice);
    return doc.dump();
  }
  const bool latex = fmt == RenderFormat::kLatex;
  std::vector<std::vector<std::string>> rows(static_cast<size_t>(g.blocks()));
  for (Index i = 0; i < g.blocks(); ++i) {
    for (Index j = 0; j < g.blocks(); ++j) {
      rows[static_cast<size_t>(i)].push_back(std::to_string(slice(i, j)));
    }
  }
  const std::string body = join_rows(rows, latex);
  return latex ? latex_array(body, g.blocks()) : body;
}

std::string render_class_summary(const SeriesReport& rep, RenderFormat fmt) {
  if (fmt == RenderFormat::kJson) return render_report(rep, fmt);
  std::ostringstream os;
  const char* pre = fmt == RenderFormat::kLatex ? "% " : "";
  os << pre << group_line(rep.g) << "\n";
  os << pre << "sigma = "
     << (rep.sigma_value ? std::to_string(*rep.sigma_value) : "none") << "\n";
  os << pre << "ell = " << (rep.ell ? std::to_string(*rep.ell + 1) : "none")
     << "\n";
  os << pre << "case = " << guarantee_case_name(rep.applicability.tag) << " ("
     << rep.applicability.notes << ")\n";
  os << pre << "|Delta(G)| = " << rep.order.str() << "\n";
  os << pre << "l(J) = " << rep.length << "\n";
  os << pre << "y(G) = " << rep.y << "\n";
  os << pre << "class = " << rep.cls
     << (rep.guaranteed ? "" : " (predicted, unverified)") << "\n";
  return os.str();
}

std::string render_report(const SeriesReport& rep, RenderFormat fmt) {
  if (fmt == RenderFormat::kJson) {
    ordered_json doc;
    doc["p"] = rep.g.p;
    doc["type"] = rep.g.exponents;
    doc["ranks"] = rep.g.ranks;
    if (rep.sigma_value) {
      doc["sigma"] = *rep.sigma_value;
    } else {
      doc["sigma"] = nullptr;
    }
    doc["case"] = guarantee_case_name(rep.applicability.tag);
    doc["l"] = rep.length;
    doc["y"] = rep.y;
    doc["class"] = rep.cls;
    ordered_json uas = ordered_json::array();
    for (const auto& m : rep.uas) uas.push_back(grid_to_json(m.beta));
    doc["uas"] = std::move(uas);
    ordered_json ucs = ordered_json::array();
    for (const auto& d : rep.ucs) {
      ordered_json step;
      step["t"] = d.t;
      step["alpha"] = grid_to_json(d.alpha_slice);
      step["exp"] = grid_to_json(d.cell_exp);
      ucs.push_back(std::move(step));
    }
    doc["ucs"] = std::move(ucs);
    return doc.dump();
  }

  std::ostringstream os;
  const bool latex = fmt == RenderFormat::kLatex;
  os << render_class_summary(rep, fmt);
  os << (latex ? "% uas:" : "uas:") << "\n";
  for (size_t k = 0; k < rep.uas.size(); ++k) {
    if (latex) {
      os << "\\[ \\mathcal{J}_{" << (k + 1) << "} = "
         << render_exponent_matrix(rep.uas[k], fmt) << " \\]\n";
    } else {
      os << "J_" << (k + 1) << ":\n"
         << render_exponent_matrix(rep.uas[k], fmt) << "\n";
    }
  }
  os << (latex ? "% ucs:" : "ucs:") << "\n";
  for (const auto& d : rep.ucs) {
    if (latex) {
      os << "\\[ \\mathcal{Z}_{" << d.t << "} = \\left\\{ "
         << render_hypercenter(rep.g, d, fmt) << " \\right\\} \\]\n";
    } else {
      os << "Z_" << d.t << ":\n" << render_hypercenter(rep.g, d, fmt) << "\n";
    }
  }
  return os.str();
}

std::string render_report(const OracleReport& rep, RenderFormat fmt) {
  if (fmt == RenderFormat::kJson) {
    ordered_json doc;
    doc["p"] = rep.g.p;
    doc["type"] = rep.g.exponents;
    doc["ranks"] = rep.g.ranks;
    doc["case"] = guarantee_case_name(rep.applicability.tag);
    doc["order"] = rep.order.str();
    doc["oracle_class"] = rep.oracle_class;
    doc["predicted_class"] = rep.predicted_class;
    doc["l"] = rep.uas_len;
    ordered_json steps = ordered_json::array();
    for (const auto& st : rep.steps) {
      ordered_json s;
      s["t"] = st.t;
      s["oracle_size"] = st.oracle_size;
      s["predicted_size"] = st.predicted_size;
      s["equal"] = st.equal;
      steps.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps);
    doc["agreement"] = rep.agreement;
    doc["bound_ok"] = rep.bound_ok;
    doc["abelian"] = rep.abelian;
    return doc.dump();
  }
  std::ostringstream os;
  const char* pre = fmt == RenderFormat::kLatex ? "% " : "";
  os << pre << group_line(rep.g) << "\n";
  os << pre << "case = " << guarantee_case_name(rep.applicability.tag) << " ("
     << rep.applicability.notes << ")\n";
  os << pre << "|Delta(G)| = " << rep.order.str() << "\n";
  os << pre << "oracle class = " << rep.oracle_class << "\n";
  os << pre << "predicted class = " << rep.predicted_class << "\n";
  os << pre << "l(J) = " << rep.uas_len << "\n";
  os << pre << "bound oracle class <= l(J): " << (rep.bound_ok ? "ok" : "VIOLATED")
     << "\n";
  for (const auto& st : rep.steps) {
    os << pre << "Z_" << st.t << ": oracle " << st.oracle_size << ", predicted "
       << st.predicted_size << ", " << (st.equal ? "equal" : "DIFFERENT")
       << "\n";
  }
  os << pre << "abelian: " << (rep.abelian ? "true" : "false") << "\n";
  os << pre << "agreement: " << (rep.agreement ? "true" : "false") << "\n";
  return os.str();
}

SeriesReport parse_series_report(const std::string& json_text) {
  const nlohmann::json doc = nlohmann::json::parse(json_text);
  const GroupType g =
      validate(doc.at("p").get<std::uint64_t>(),
               doc.at("type").get<std::vector<int>>(),
               doc.at("ranks").get<std::vector<std::int64_t>>());
  SeriesReport rep;
  rep.g = g;
  rep.applicability.tag =
      guarantee_case_from_name(doc.at("case").get<std::string>());
  rep.applicability.notes = classify_applicability(g).notes;
  if (doc.at("sigma").is_null()) {
    rep.sigma_value = std::nullopt;
  } else {
    rep.sigma_value = doc.at("sigma").get<int>();
  }
  rep.ell = top_gap_index(g);
  rep.order = delta_order(g);
  rep.length = doc.at("l").get<int>();
  rep.y = doc.at("y").get<int>();
  rep.cls = doc.at("class").get<int>();
  rep.guaranteed = rep.applicability.guaranteed();
  for (const auto& grid : doc.at("uas")) {
    rep.uas.push_back(ExponentMatrix{g, grid_from_json(grid)});
  }
  for (const auto& step : doc.at("ucs")) {
    HypercenterDescription d;
    d.t = step.at("t").get<int>();
    d.alpha_slice = grid_from_json(step.at("alpha"));
    d.cell_exp = grid_from_json(step.at("exp"));
    rep.ucs.push_back(std::move(d));
  }
  return rep;
}

}  // namespace deltanil
