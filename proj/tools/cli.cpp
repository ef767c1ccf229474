#include "cli.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace kgonal::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_table(const std::vector<IntersectionRecord>& recs, std::ostream& out) {
  const std::array<std::string, 5> header{"i", "n", "m", "value", "a"};
  std::vector<std::array<std::string, 5>> rows;
  rows.reserve(recs.size());
  for (const auto& r : recs) {
    rows.push_back({std::to_string(r.i), r.n.get_str(), r.m.get_str(), r.value.get_str(),
                    r.a.get_str()});
  }
  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto emit = [&](const std::array<std::string, 5>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) {
        out << "  ";
      }
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) {
    emit(row);
  }
}

std::string triple(const CommonValue& v) {
  return "(n=" + v.n.get_str() + ", m=" + v.m.get_str() + ", value=" + v.value.get_str() + ")";
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "jsonl") return OutputFormat::jsonl;
  if (name == "bfile") return OutputFormat::bfile;
  return std::nullopt;
}

std::optional<BigInt> parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') {
    digits.remove_prefix(1);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char ch) { return ch >= '0' && ch <= '9'; })) {
    return std::nullopt;
  }
  return BigInt(std::string(text), 10);
}

std::string to_jsonl(const IntersectionRecord& rec) {
  ordered_json j;
  j["k"] = std::to_string(rec.k);
  j["i"] = std::to_string(rec.i);
  j["value"] = rec.value.get_str();
  j["m"] = rec.m.get_str();
  j["n"] = rec.n.get_str();
  j["a"] = rec.a.get_str();
  return j.dump();
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.k < 3 || opts.count < 1) {
    err << "gen: need --k >= 3 and --count >= 1\n";
    return kExitUsage;
  }
  const PolygonParams params(opts.k);
  const auto recs = stream(params, opts.start_index, opts.count);
  switch (opts.format) {
    case OutputFormat::table:
      write_table(recs, out);
      break;
    case OutputFormat::jsonl:
      for (const auto& r : recs) {
        out << to_jsonl(r) << '\n';
      }
      break;
    case OutputFormat::bfile:
      for (const auto& r : recs) {
        out << (r.i + 1) << ' ' << r.value.get_str() << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.k_min < 3 || opts.k_max < opts.k_min || opts.limit < 1) {
    err << "verify: need 3 <= --kmin <= --kmax and --limit >= 1\n";
    return kExitUsage;
  }
  bool all_agree = true;
  for (long k = opts.k_min; k <= opts.k_max; ++k) {
    const OracleReport report = compare(PolygonParams(k), opts.limit);
    out << "k=" << k << " limit=" << opts.limit.get_str() << " matches=" << report.matches.size()
        << (report.closed_form_agreement ? " agree" : " DIVERGE") << '\n';
    if (!report.closed_form_agreement) {
      const Divergence& d = *report.first_divergence;
      out << "  first divergence at position " << d.index << ": oracle "
          << (d.expected ? triple(*d.expected) : std::string("<none>")) << ", closed form "
          << (d.actual ? triple(*d.actual) : std::string("<none>")) << '\n';
      all_agree = false;
    }
  }
  out << (all_agree ? "PASS" : "FAIL") << '\n';
  return all_agree ? kExitOk : kExitVerifyFailed;
}

int cmd_pell(const PellOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.count < 1) {
    err << "pell: need --count >= 1\n";
    return kExitUsage;
  }
  CFExpansion cf;
  try {
    cf = cf_expand(opts.disc);
  } catch (const DomainError& e) {
    err << "pell: " << e.what() << '\n';
    return kExitUsage;
  }
  out << "D = " << cf.disc.get_str() << '\n';
  out << "sqrt(D) = [" << cf.a0.get_str() << "; (";
  for (std::size_t j = 0; j < cf.period.size(); ++j) {
    out << (j ? ", " : "") << cf.period[j].get_str();
  }
  out << ")]\n";
  for (const auto& sol : pell_solutions(opts.disc, opts.count)) {
    out << "(" << sol.x.get_str() << ", " << sol.y.get_str() << ")\n";
  }
  return kExitOk;
}

int cmd_invert(const InvertOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.k < 3 || opts.value < 1) {
    err << "invert: need --k >= 3 and --value >= 1\n";
    return kExitUsage;
  }
  const PolygonParams params(opts.k);
  const auto n = invert_polygonal(opts.value, params);
  const auto m = invert_centered(opts.value, params);
  ordered_json j = ordered_json::object();
  if (n) {
    j["polygonal_index"] = n->get_str();
  }
  if (m) {
    j["centered_index"] = m->get_str();
  }
  j["both"] = n.has_value() && m.has_value();
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_case2(const Case2Options& opts, std::ostream& out, std::ostream& err) {
  if (opts.k < 3 || opts.count < 1) {
    err << "case2: need --k a perfect square >= 4 and --count >= 1\n";
    return kExitUsage;
  }
  const PolygonParams params(opts.k);
  std::vector<Case2Term> terms;
  try {
    terms = case2_sequence(params, opts.count);
  } catch (const DomainError& e) {
    err << "case2: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto recs = stream(params, 0, opts.count);
  bool agree = recs.size() == terms.size();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    out << "(" << terms[j].m.get_str() << ", " << terms[j].value.get_str() << ")\n";
    if (agree && (terms[j].m != recs[j].m || terms[j].value != recs[j].value)) {
      agree = false;
    }
  }
  out << (agree ? "PASS" : "FAIL") << '\n';
  return agree ? kExitOk : kExitVerifyFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numbers that are both k-gonal and centered k-gonal"};
  app.name("kgonal");
  app.require_subcommand(1);

  GenOptions gen;
  std::string gen_format = "table";
  auto* gen_cmd = app.add_subcommand("gen", "Emit common values with witness indices");
  gen_cmd->add_option("--k", gen.k, "Polygon order (>= 3)")->required();
  gen_cmd->add_option("--count", gen.count, "Number of records (>= 1)")->required();
  gen_cmd->add_option("--start-index", gen.start_index, "First solution index i (>= 0)");
  gen_cmd
      ->add_option("--format", gen_format,
                   "table | jsonl | bfile. bfile lines are \"index value\" with index = i + 1")
      ->check(CLI::IsMember({"table", "jsonl", "bfile"}));

  VerifyOptions verify;
  std::string verify_limit;
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare the closed form with brute-force enumeration");
  verify_cmd->add_option("--kmin", verify.k_min)->required();
  verify_cmd->add_option("--kmax", verify.k_max)->required();
  verify_cmd->add_option("--limit", verify_limit, "Largest value to enumerate")->required();

  PellOptions pell;
  std::string pell_disc;
  auto* pell_cmd =
      app.add_subcommand("pell", "Continued fraction and solutions of x^2 - D y^2 = 1");
  pell_cmd->add_option("--d", pell_disc, "Non-square discriminant >= 2")->required();
  pell_cmd->add_option("--count", pell.count, "Number of solutions")->capture_default_str();

  InvertOptions invert;
  std::string invert_value;
  auto* invert_cmd =
      app.add_subcommand("invert", "Report k-gonal and centered k-gonal membership as JSON");
  invert_cmd->add_option("--k", invert.k)->required();
  invert_cmd->add_option("--value", invert_value)->required();

  Case2Options case2;
  auto* case2_cmd = app.add_subcommand(
      "case2", "Generate via the norm-2 equation for square k and compare with gen");
  case2_cmd->add_option("--k", case2.k, "Perfect-square polygon order")->required();
  case2_cmd->add_option("--count", case2.count)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto bigint_arg = [&](const std::string& name, const std::string& text) {
    auto v = parse_bigint(text);
    if (!v) {
      err << name << ": not an integer: " << text << '\n';
    }
    return v;
  };

  try {
    if (*gen_cmd) {
      gen.format = *parse_format(gen_format);
      return cmd_gen(gen, out, err);
    }
    if (*verify_cmd) {
      auto limit = bigint_arg("--limit", verify_limit);
      if (!limit) return kExitUsage;
      verify.limit = *limit;
      return cmd_verify(verify, out, err);
    }
    if (*pell_cmd) {
      auto d = bigint_arg("--d", pell_disc);
      if (!d) return kExitUsage;
      pell.disc = *d;
      return cmd_pell(pell, out, err);
    }
    if (*invert_cmd) {
      auto v = bigint_arg("--value", invert_value);
      if (!v) return kExitUsage;
      invert.value = *v;
      return cmd_invert(invert, out, err);
    }
    if (*case2_cmd) {
      return cmd_case2(case2, out, err);
    }
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kgonal::cli
