#include "deltanil/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "deltanil/fuzz.hpp"
#include "deltanil/oracle.hpp"

namespace deltanil {

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + " entry '" + item +
                       "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

}  // namespace

CliInvocation parse_args(const std::vector<std::string>& args) {
  CLI::App app{"nilpotency class and upper central series of Delta(G), the "
               "maximal normal p-subgroup of Aut(G), for bounded abelian "
               "p-groups"};
  app.name("deltanil");
  app.require_subcommand(1);

  std::string type_str;
  std::string ranks_str;
  std::string format = "text";
  std::string output;
  std::uint64_t p = 0;
  int step = -1;
  std::uint64_t max_order = 0;
  std::uint64_t seed = 1;
  int count = 200;

  auto add_group_options = [&](CLI::App* sub, bool with_step) {
    sub->add_option("--type", type_str,
                    "exponents n_1,...,n_s (strictly increasing)")
        ->required();
    sub->add_option("-p", p, "the prime p")->required();
    sub->add_option("--ranks", ranks_str, "ranks r_1,...,r_s (default all 1)");
    sub->add_option("--format", format, "text|latex|json");
    sub->add_option("-o,--output", output, "write to a file instead of stdout");
    if (with_step) sub->add_option("-t", step, "single step selector");
  };

  CLI::App* alpha_cmd =
      app.add_subcommand("alpha", "upper annihilating function table");
  add_group_options(alpha_cmd, true);
  CLI::App* uas_cmd =
      app.add_subcommand("uas", "upper annihilating sequence of the radical");
  add_group_options(uas_cmd, false);
  CLI::App* class_cmd =
      app.add_subcommand("class", "nilpotency class of Delta(G)");
  add_group_options(class_cmd, false);
  CLI::App* ucs_cmd =
      app.add_subcommand("ucs", "upper central series descriptions");
  add_group_options(ucs_cmd, true);
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force enumeration diffed against the predictions");
  add_group_options(oracle_cmd, false);
  oracle_cmd->add_option("--max-order", max_order,
                         "largest |Delta(G)| the oracle will enumerate");
  CLI::App* check_cmd =
      app.add_subcommand("check", "fuzzed invariant suite");
  check_cmd->add_option("--seed", seed, "fuzzer seed");
  check_cmd->add_option("--count", count, "types per invariant family");
  check_cmd->add_option("-o,--output", output, "write to a file instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("deltanil");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + " (try --help)");
  }

  CliInvocation inv;
  if (app.got_subcommand(alpha_cmd)) inv.sub = Subcommand::kAlpha;
  if (app.got_subcommand(uas_cmd)) inv.sub = Subcommand::kUas;
  if (app.got_subcommand(class_cmd)) inv.sub = Subcommand::kClass;
  if (app.got_subcommand(ucs_cmd)) inv.sub = Subcommand::kUcs;
  if (app.got_subcommand(oracle_cmd)) inv.sub = Subcommand::kOracle;
  if (app.got_subcommand(check_cmd)) inv.sub = Subcommand::kCheck;

  inv.options.format = render_format_from_name(format);
  if (!output.empty()) inv.options.output_path = output;
  if (step >= 0) inv.options.step = step;
  inv.options.max_order = max_order;
  inv.options.seed = seed;
  inv.options.count = count;

  if (inv.sub != Subcommand::kCheck) {
    std::vector<std::int64_t> ranks;
    if (!ranks_str.empty()) ranks = parse_list<std::int64_t>(ranks_str, "rank");
    try {
      inv.group = validate(p, parse_list<int>(type_str, "exponent"), ranks);
    } catch (const ValidationError& e) {
      throw UsageError(e.what());
    }
  }
  return inv;
}

int run_cli(const CliInvocation& inv, std::ostream& out_stream,
            std::ostream& err) {
  std::ofstream file;
  if (inv.options.output_path) {
    file.open(*inv.options.output_path);
    if (!file) {
      throw UsageError("cannot open output file '" + *inv.options.output_path +
                       "'");
    }
  }
  std::ostream& out = file.is_open() ? file : out_stream;
  const RenderFormat fmt = inv.options.format;

  try {
    switch (inv.sub) {
      case Subcommand::kAlpha: {
        const GroupType& g = *inv.group;
        AlphaTable table(g);
        if (inv.options.step) {
          const int t = *inv.options.step;
          ExpGrid slice(g.blocks(), g.blocks());
          for (Index i = 0; i < g.blocks(); ++i)
            for (Index j = 0; j < g.blocks(); ++j) slice(i, j) = table.value(i, j, t);
          out << render_alpha_slice(g, slice, fmt) << "\n";
        } else if (fmt == RenderFormat::kJson) {
          out << "[";
          for (int t = 0; t <= table.saturation_step(); ++t) {
            if (t) out << ",";
            out << "{\"t\":" << t << ","
                << render_alpha_slice(g, table.slice(t), fmt).substr(1);
          }
          out << "]\n";
        } else {
          for (int t = 0; t <= table.saturation_step(); ++t) {
            out << (fmt == RenderFormat::kLatex ? "% " : "") << "t = " << t
                << ":\n"
                << render_alpha_slice(g, table.slice(t), fmt) << "\n";
          }
        }
        return 0;
      }
      case Subcommand::kUas: {
        const SeriesReport rep = ucs_report(*inv.group);
        if (fmt == RenderFormat::kJson) {
          out << render_report(rep, fmt) << "\n";
        } else {
          out << render_class_summary(rep, fmt);
          for (size_t k = 0; k < rep.uas.size(); ++k) {
            if (fmt == RenderFormat::kLatex) {
              out << "\\[ \\mathcal{J}_{" << (k + 1) << "} = "
                  << render_exponent_matrix(rep.uas[k], fmt) << " \\]\n";
            } else {
              out << "J_" << (k + 1) << ":\n"
                  << render_exponent_matrix(rep.uas[k], fmt) << "\n";
            }
          }
        }
        return 0;
      }
      case Subcommand::kClass: {
        const SeriesReport rep = ucs_report(*inv.group);
        out << render_class_summary(rep, fmt);
        if (fmt == RenderFormat::kJson) out << "\n";
        return 0;
      }
      case Subcommand::kUcs: {
        const GroupType& g = *inv.group;
        if (inv.options.step) {
          const HypercenterDescription desc =
              hypercenter_description(g, *inv.options.step);
          if (fmt == RenderFormat::kJson) {
            out << render_hypercenter(g, desc, fmt) << "\n";
          } else {
            out << (fmt == RenderFormat::kLatex ? "% " : "") << "Z_" << desc.t
                << ":\n"
                << render_hypercenter(g, desc, fmt) << "\n";
          }
          return 0;
        }
        out << render_report(ucs_report(g), fmt);
        if (fmt == RenderFormat::kJson) out << "\n";
        return 0;
      }
      case Subcommand::kOracle: {
        const OracleReport rep = compare_report(*inv.group, inv.options.max_order);
        out << render_report(rep, fmt);
        if (fmt == RenderFormat::kJson) out << "\n";
        if (rep.applicability.guaranteed() && !rep.agreement) {
          err << "error: oracle series disagrees with the prediction on a "
                 "guaranteed instance\n";
          return 1;
        }
        if (!rep.bound_ok) {
          err << "error: oracle class exceeds the annihilating length\n";
          return 1;
        }
        return 0;
      }
      case Subcommand::kCheck: {
        const CheckOutcome o =
            run_check_suite(inv.options.seed, inv.options.count, out);
        out << (o.ok() ? "all invariants hold" : "invariant failures found")
            << " (" << o.checks << " checks, " << o.failures << " failures)\n";
        return o.ok() ? 0 : 1;
      }
    }
  } catch (const StepOutOfRange& e) {
    throw UsageError(e.what());
  } catch (const OrderExceedsGuard& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotExponentShaped& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  try {
    const CliInvocation inv = parse_args(args);
    return run_cli(inv, out, err);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace deltanil
