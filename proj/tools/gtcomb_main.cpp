// Command-line surface: exact tables (tangency curve counts, Hurwitz numbers,
// closed-form relative invariants) and the verification suites, in text, CSV,
// or JSON.  Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit hit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtcomb/caporaso_harris.hpp"
#include "gtcomb/divisor.hpp"
#include "gtcomb/gt_series.hpp"
#include "gtcomb/hurwitz.hpp"
#include "gtcomb/mult_index.hpp"
#include "gtcomb/rational.hpp"
#include "gtcomb/rel_invariants.hpp"
#include "gtcomb/series_json.hpp"
#include "gtcomb/verify.hpp"

namespace {

using gtcomb::CaporasoHarrisTable;
using gtcomb::CHKey;
using gtcomb::ContactTuple;
using gtcomb::HurwitzKey;
using gtcomb::HurwitzTable;
using gtcomb::Int;
using gtcomb::MultIndex;
using gtcomb::OracleLimits;
using gtcomb::Rat;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

constexpr int kHardMaxD = 8;
constexpr int kHardMaxGenus = 16;

struct Output {
  std::string format = "text";
  std::string path;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<Json> rows;
};

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Json& row, const std::string& column) {
  if (!row.contains(column)) return "";
  const Json& v = row.at(column);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (size_t c = 0; c < t.columns.size(); ++c)
    os << (c ? "," : "") << csv_escape(t.columns[c]);
  os << '\n';
  for (const Json& row : t.rows) {
    for (size_t c = 0; c < t.columns.size(); ++c)
      os << (c ? "," : "") << csv_escape(cell_text(row, t.columns[c]));
    os << '\n';
  }
  return os.str();
}

std::string render_text(const Table& t, const std::string& trailer) {
  std::vector<size_t> width(t.columns.size());
  for (size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const Json& row : t.rows)
    for (size_t c = 0; c < t.columns.size(); ++c)
      width[c] = std::max(width[c], cell_text(row, t.columns[c]).size());

  std::ostringstream os;
  auto emit_line = [&](const std::function<std::string(size_t)>& cell) {
    std::string line;
    for (size_t c = 0; c < t.columns.size(); ++c) {
      std::string s = cell(c);
      s.resize(width[c], ' ');
      if (c) line += "  ";
      line += s;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  };
  emit_line([&](size_t c) { return t.columns[c]; });
  for (const Json& row : t.rows)
    emit_line([&](size_t c) { return cell_text(row, t.columns[c]); });
  if (!trailer.empty()) os << trailer << '\n';
  return os.str();
}

int write_out(const std::string& rendered, const Output& out) {
  if (out.path.empty()) {
    std::cout << rendered;
    return kExitOk;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file " << out.path << "\n";
    return kExitUsage;
  }
  file << rendered;
  return kExitOk;
}

// Plain table commands: JSON is the bare array of rows.
int emit_table(const Table& t, const Output& out, const std::string& trailer) {
  std::string rendered;
  if (out.format == "json") {
    Json arr = Json::array();
    for (const Json& row : t.rows) arr.push_back(row);
    rendered = arr.dump(2) + "\n";
  } else if (out.format == "csv") {
    rendered = render_csv(t);
  } else {
    rendered = render_text(t, trailer);
  }
  return write_out(rendered, out);
}

// Verification commands: JSON wraps the rows in a summary object.
int emit_report(const Table& t, Json summary, const Output& out,
                const std::string& trailer) {
  std::string rendered;
  if (out.format == "json") {
    summary["rows"] = Json::array();
    for (const Json& row : t.rows) summary["rows"].push_back(row);
    rendered = summary.dump(2) + "\n";
  } else if (out.format == "csv") {
    rendered = render_csv(t);
  } else {
    rendered = render_text(t, trailer);
  }
  return write_out(rendered, out);
}

std::string tuple_repr(const ContactTuple& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::string tensor_repr(const gtcomb::TensorSum& sum) {
  auto word_repr = [](const gtcomb::HomologyWord& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.letters.size(); ++i) {
      if (i) out += ",";
      out += w.basis->cls(w.letters[i]).label;
    }
    return out + "]";
  };
  std::string out;
  for (size_t i = 0; i < sum.size(); ++i) {
    if (i) out += " + ";
    out += gtcomb::rat_repr(sum[i].coeff) + " * " + word_repr(sum[i].s0_side) +
           " (x) " + word_repr(sum[i].sinf_side);
  }
  return out.empty() ? "0" : out;
}

int cmd_ch(int dmax, bool full_profiles, const Output& out) {
  if (dmax < 1 || dmax > kHardMaxD) {
    std::cerr << "error: ch requires 1 <= dmax <= " << kHardMaxD << "\n";
    return kExitUsage;
  }
  CaporasoHarrisTable table;
  Table t;
  t.columns = {"d", "delta", "alpha", "beta", "N"};
  auto add_row = [&](const CHKey& key, const gtcomb::Int& n) {
    Json row;
    row["d"] = key.d;
    row["delta"] = key.delta;
    row["alpha"] = dense_repr(key.alpha);
    row["beta"] = dense_repr(key.beta);
    row["N"] = gtcomb::int_repr(n);
    t.rows.push_back(std::move(row));
  };
  std::string trailer;
  if (full_profiles) {
    const CHKey base{1, 0, MultIndex::unit(1), MultIndex{}};
    add_row(base, table.number(base));
    for (const CHKey& key : gtcomb::admissible_ch_keys(dmax))
      add_row(key, table.number(key));
  } else {
    // The diagonal reports rational (connected) curve counts; the reduced
    // table values for the same keys appear under --full-profiles.
    for (int d = 1; d <= dmax; ++d) {
      const CHKey key = gtcomb::rational_diagonal_key(d);
      add_row(key, table.connected(key));
    }
    trailer = "N counts irreducible rational curves (connected part)";
  }
  return emit_table(t, out, trailer);
}

int cmd_hurwitz(int dmax, int gmax, bool with_oracle, const OracleLimits& limits,
                const Output& out) {
  if (dmax < 1 || dmax > kHardMaxD) {
    std::cerr << "error: hurwitz requires 1 <= dmax <= " << kHardMaxD << "\n";
    return kExitUsage;
  }
  if (gmax < 0 || gmax > kHardMaxGenus) {
    std::cerr << "error: hurwitz requires 0 <= gmax <= " << kHardMaxGenus
              << "\n";
    return kExitUsage;
  }
  HurwitzTable table;
  Table t;
  t.columns = {"d", "g", "alpha", "r", "N"};
  if (with_oracle) {
    t.columns.push_back("oracle");
    t.columns.push_back("match");
  }
  bool any_skipped = false;
  bool any_mismatch = false;
  for (int d = 1; d <= dmax; ++d) {
    for (int g = 0; g <= gmax; ++g) {
      gtcomb::for_each_multindex_of_weight(d, [&](const MultIndex& alpha) {
        HurwitzKey key{d, g, alpha};
        const int r = gtcomb::hurwitz_branch_count(key);
        Rat value = table.number(key);
        Json row;
        row["d"] = d;
        row["g"] = g;
        row["alpha"] = dense_repr(alpha);
        row["r"] = r;
        row["N"] = gtcomb::rat_repr(value);
        if (with_oracle) {
          if (d <= limits.max_d && r <= limits.max_r) {
            Rat oracle = gtcomb::monodromy_oracle(key, limits);
            row["oracle"] = gtcomb::rat_repr(oracle);
            row["match"] = (oracle == value);
            if (oracle != value) any_mismatch = true;
          } else {
            any_skipped = true;
          }
        }
        t.rows.push_back(std::move(row));
      });
    }
  }
  std::string trailer;
  if (with_oracle) {
    trailer = any_mismatch ? "oracle mismatch detected"
              : any_skipped
                  ? "some rows exceed the oracle limits; oracle column partial"
                  : "all rows match the oracle";
  }
  int rc = emit_table(t, out, trailer);
  if (rc != kExitOk) return rc;
  if (any_mismatch) return kExitVerifyFail;
  if (any_skipped) return kExitLimit;
  return kExitOk;
}

int cmd_table(const std::string& target, int max_d, const Output& out) {
  if (max_d < 1 || max_d > kHardMaxD) {
    std::cerr << "error: table requires 1 <= --max-d <= " << kHardMaxD << "\n";
    return kExitUsage;
  }
  Table t;
  if (target == "p1") {
    t.columns = {"d", "g", "s0", "sinf", "dim", "two_point", "branch_point"};
    for (int d = 1; d <= max_d; ++d) {
      std::vector<ContactTuple> tuples;
      gtcomb::for_each_multindex_of_weight(d, [&](const MultIndex& a) {
        tuples.push_back(to_contact_tuple(a));
      });
      for (int g = 0; g <= 3; ++g) {
        for (const ContactTuple& s0 : tuples) {
          for (const ContactTuple& sinf : tuples) {
            Json row;
            row["d"] = d;
            row["g"] = g;
            row["s0"] = tuple_repr(s0);
            row["sinf"] = tuple_repr(sinf);
            row["dim"] = gtcomb::relative_p1_dimension(g, d, s0, sinf);
            row["two_point"] =
                gtcomb::rat_repr(gtcomb::p1_two_point(g, d, s0, sinf));
            row["branch_point"] =
                gtcomb::rat_repr(gtcomb::p1_branch_point(g, d, s0, sinf));
            t.rows.push_back(std::move(row));
          }
        }
      }
    }
  } else if (target == "fn") {
    t.columns = {"n", "a", "b", "g", "s0", "sinf", "kind", "value"};
    for (int n = 0; n <= 2; ++n) {
      for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= max_d; ++b) {
          if (a == 0 && b == 0) continue;
          gtcomb::FnDegree A{n, a, b};
          std::vector<ContactTuple> t0, ti;
          gtcomb::for_each_multindex_of_weight(
              A.dot_s0(),
              [&](const MultIndex& m) { t0.push_back(to_contact_tuple(m)); });
          gtcomb::for_each_multindex_of_weight(
              A.dot_sinf(),
              [&](const MultIndex& m) { ti.push_back(to_contact_tuple(m)); });
          for (int g = 0; g <= 3; ++g) {
            for (const ContactTuple& s0 : t0) {
              for (const ContactTuple& sinf : ti) {
                auto push = [&](const char* kind,
                                const gtcomb::TensorSum& sum) {
                  if (sum.empty()) return;
                  Json row;
                  row["n"] = n;
                  row["a"] = a;
                  row["b"] = b;
                  row["g"] = g;
                  row["s0"] = tuple_repr(s0);
                  row["sinf"] = tuple_repr(sinf);
                  row["kind"] = kind;
                  row["value"] = tensor_repr(sum);
                  t.rows.push_back(std::move(row));
                };
                push("no-constraint",
                     gtcomb::fn_no_constraint(A, g, s0, sinf));
                push("point", gtcomb::fn_point_insertion(A, g, s0, sinf));
              }
            }
          }
        }
      }
    }
  } else {
    std::cerr << "error: unknown table target '" << target
              << "' (expected p1 or fn)\n";
    return kExitUsage;
  }
  return emit_table(t, out, "");
}

int verify_ch_split_cmd(int dmax, const Output& out) {
  CaporasoHarrisTable table;
  Table t;
  t.columns = {"d", "delta", "alpha", "beta", "lhs", "rhs", "configs", "ok"};
  int failures = 0;
  std::string first_failure;
  for (const CHKey& key : gtcomb::admissible_ch_keys(dmax)) {
    gtcomb::CHSplitReport rep = gtcomb::verify_ch_split(table, key);
    Json row;
    row["d"] = key.d;
    row["delta"] = key.delta;
    row["alpha"] = dense_repr(key.alpha);
    row["beta"] = dense_repr(key.beta);
    row["lhs"] = gtcomb::rat_repr(rep.lhs);
    row["rhs"] = gtcomb::rat_repr(rep.rhs);
    row["configs"] = static_cast<int>(rep.rows.size());
    row["ok"] = rep.ok;
    t.rows.push_back(std::move(row));
    if (!rep.ok) {
      ++failures;
      if (first_failure.empty())
        first_failure = rep.first_mismatch.value_or("mismatch");
    }
  }
  Json summary;
  summary["suite"] = "ch-split";
  summary["max_d"] = dmax;
  summary["checks"] = static_cast<int>(t.rows.size());
  summary["failures"] = failures;
  summary["ok"] = (failures == 0);
  if (failures > 0) summary["first_failure"] = first_failure;
  std::string trailer = failures == 0
                            ? "ch-split: all " + std::to_string(t.rows.size()) +
                                  " keys reassemble"
                            : "ch-split FAILED: " + first_failure;
  int rc = emit_report(t, summary, out, trailer);
  if (rc != kExitOk) return rc;
  return failures == 0 ? kExitOk : kExitVerifyFail;
}

int verify_cut_and_join_cmd(const OracleLimits& limits, const Output& out) {
  HurwitzTable table;
  gtcomb::CutJoinReport rep =
      gtcomb::verify_cut_and_join(table, limits.max_d, 2, limits);
  Table t;
  t.columns = {"d",      "g",   "alpha",          "r",          "N",
               "oracle", "cut", "join_connected", "join_split", "ok"};
  int failures = 0;
  for (const gtcomb::CutJoinRow& row : rep.rows) {
    Json j;
    j["d"] = row.key.d;
    j["g"] = row.key.g;
    j["alpha"] = dense_repr(row.key.alpha);
    j["r"] = row.r;
    j["N"] = gtcomb::rat_repr(row.value);
    j["oracle"] = gtcomb::rat_repr(row.oracle);
    j["cut"] = gtcomb::rat_repr(row.parts.cut);
    j["join_connected"] = gtcomb::rat_repr(row.parts.join_connected);
    j["join_split"] = gtcomb::rat_repr(row.parts.join_split);
    j["ok"] = row.ok;
    t.rows.push_back(std::move(j));
    if (!row.ok) ++failures;
  }
  Json summary;
  summary["suite"] = "cut-and-join";
  summary["max_d"] = limits.max_d;
  summary["max_r"] = limits.max_r;
  summary["checks"] = static_cast<int>(rep.rows.size());
  summary["failures"] = failures;
  summary["ok"] = rep.all_ok;
  if (rep.first_mismatch) summary["first_failure"] = *rep.first_mismatch;
  std::string trailer =
      rep.all_ok ? "cut-and-join: recursion matches the monodromy count on all " +
                       std::to_string(rep.rows.size()) + " keys"
                 : "cut-and-join FAILED: " + rep.first_mismatch.value_or("");
  int rc = emit_report(t, summary, out, trailer);
  if (rc != kExitOk) return rc;
  return rep.all_ok ? kExitOk : kExitVerifyFail;
}

int verify_suite_cmd(const gtcomb::SuiteReport& rep, Json extra,
                     const Output& out) {
  Table t;
  t.columns = {"suite", "checks", "failures", "ok", "first_failure"};
  Json row;
  row["suite"] = rep.name;
  row["checks"] = rep.checks;
  row["failures"] = rep.failures;
  row["ok"] = rep.ok();
  if (rep.first_failure) row["first_failure"] = *rep.first_failure;
  t.rows.push_back(row);

  Json summary;
  summary["suite"] = rep.name;
  summary["checks"] = rep.checks;
  summary["failures"] = rep.failures;
  summary["ok"] = rep.ok();
  if (rep.first_failure) summary["first_failure"] = *rep.first_failure;
  for (auto& [k, v] : extra.items()) summary[k] = v;

  std::string trailer =
      rep.ok() ? rep.name + ": all " + std::to_string(rep.checks) +
                     " checks pass"
               : rep.name + " FAILED: " + rep.first_failure.value_or("");
  int rc = emit_report(t, summary, out, trailer);
  if (rc != kExitOk) return rc;
  return rep.ok() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact enumerative tables: tangency curve counts, Hurwitz numbers, "
      "relative invariants, and their cross-verifications"};
  app.require_subcommand(1);

  Output out;
  int max_d_flag = -1;
  int max_r_flag = -1;
  auto add_common = [&](CLI::App* sub, bool with_limits) {
    sub->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out.path, "Write the output to a file");
    if (with_limits) {
      sub->add_option("--max-d", max_d_flag, "Degree bound");
      sub->add_option("--max-r", max_r_flag, "Branch-point bound");
    }
  };

  int ch_dmax = 0;
  bool ch_full = false;
  CLI::App* ch = app.add_subcommand(
      "ch", "Tangency curve counts N^{d,delta}(alpha,beta)");
  ch->add_option("dmax", ch_dmax, "Largest curve degree (<= 8)")->required();
  ch->add_flag("--full-profiles", ch_full,
               "All admissible keys, not only the rational-curve diagonal");
  add_common(ch, false);

  int hw_dmax = 0, hw_gmax = 0;
  bool hw_oracle = false;
  CLI::App* hw =
      app.add_subcommand("hurwitz", "Hurwitz numbers N_{d,g}(alpha)");
  hw->add_option("dmax", hw_dmax, "Largest degree (<= 8)")->required();
  hw->add_option("gmax", hw_gmax, "Largest genus")->required();
  hw->add_flag("--oracle", hw_oracle,
               "Also run the monodromy oracle and compare");
  add_common(hw, true);

  std::string table_target;
  CLI::App* tab = app.add_subcommand(
      "table", "Closed-form relative invariant tables (p1, fn)");
  tab->add_option("target", table_target, "p1 or fn")->required();
  add_common(tab, false);
  tab->add_option("--max-d", max_d_flag, "Degree bound");

  std::string suite;
  CLI::App* ver = app.add_subcommand(
      "verify", "Run a verification suite "
                "(ch-split, cut-and-join, exp-gw, pairing)");
  ver->add_option("suite", suite, "Suite name")->required();
  add_common(ver, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kExitUsage;
  }

  try {
    if (ch->parsed()) return cmd_ch(ch_dmax, ch_full, out);

    if (hw->parsed()) {
      OracleLimits limits;
      if (max_d_flag >= 0) limits.max_d = max_d_flag;
      if (max_r_flag >= 0) limits.max_r = max_r_flag;
      if (limits.max_d < 1 || limits.max_d > gtcomb::kOracleHardMaxD ||
          limits.max_r < 0 || limits.max_r > gtcomb::kOracleHardMaxR) {
        std::cerr << "error: oracle limits capped at d <= "
                  << gtcomb::kOracleHardMaxD << ", r <= "
                  << gtcomb::kOracleHardMaxR << "\n";
        return kExitUsage;
      }
      return cmd_hurwitz(hw_dmax, hw_gmax, hw_oracle, limits, out);
    }

    if (tab->parsed())
      return cmd_table(table_target, max_d_flag >= 0 ? max_d_flag : 6, out);

    if (ver->parsed()) {
      if (suite == "ch-split") {
        int dmax = max_d_flag >= 0 ? max_d_flag : 4;
        if (dmax < 1 || dmax > kHardMaxD) {
          std::cerr << "error: verify ch-split requires 1 <= --max-d <= "
                    << kHardMaxD << "\n";
          return kExitUsage;
        }
        return verify_ch_split_cmd(dmax, out);
      }
      if (suite == "cut-and-join") {
        OracleLimits limits{max_d_flag >= 0 ? max_d_flag : 5,
                            max_r_flag >= 0 ? max_r_flag : 8};
        if (limits.max_d < 1 || limits.max_d > gtcomb::kOracleHardMaxD ||
            limits.max_r < 0 || limits.max_r > gtcomb::kOracleHardMaxR) {
          std::cerr << "error: oracle limits capped at d <= "
                    << gtcomb::kOracleHardMaxD << ", r <= "
                    << gtcomb::kOracleHardMaxR << "\n";
          return kExitUsage;
        }
        return verify_cut_and_join_cmd(limits, out);
      }
      if (suite == "exp-gw") {
        int deg = max_d_flag >= 0 ? max_d_flag : 6;
        if (deg < 1 || deg > kHardMaxD) {
          std::cerr << "error: verify exp-gw requires 1 <= --max-d <= "
                    << kHardMaxD << "\n";
          return kExitUsage;
        }
        gtcomb::SuiteReport rep = gtcomb::verify_exp_gw(deg);
        Json extra;
        extra["max_degree"] = deg;
        extra["series"] = gtcomb::series_to_json(
            gtcomb::exp_truncated(gtcomb::exp_gw_connected(deg)));
        return verify_suite_cmd(rep, extra, out);
      }
      if (suite == "pairing") {
        return verify_suite_cmd(gtcomb::verify_pairing(), Json::object(), out);
      }
      std::cerr << "error: unknown suite '" << suite
                << "' (expected ch-split, cut-and-join, exp-gw, pairing)\n";
      return kExitUsage;
    }
  } catch (const gtcomb::limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
