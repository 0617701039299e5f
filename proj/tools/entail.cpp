// Command-line front end: batch evaluation of forms, nimstring boards
// and top entails heaps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entail/entail.hpp"

namespace {

using nlohmann::json;
using namespace entail;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitOracleMismatch = 3;

struct Options {
  bool json = false;
  bool oracle = false;
  long long max_probe = -1;
};

json set_to_json(const NimberSet& s) {
  if (s.finite()) return json(s.bits());
  json o;
  o["excluded"] = s.bits();
  return o;
}

std::vector<Form> components_of(const notation::Parsed& parsed) {
  if (const auto* f = std::get_if<Form>(&parsed)) return {*f};
  return std::get<SumPosition>(parsed).components;
}

int cmd_eval(const std::string& expr, const Options& opt) {
  const auto parsed = notation::parse(expr);
  const auto comps = components_of(parsed);
  std::vector<Value> vals;
  vals.reserve(comps.size());
  for (Form f : comps) vals.push_back(value(f));
  const Value total = value_of_sum(vals);

  bool oracle_ok = true;
  std::vector<Value> oracle_vals;
  if (opt.oracle) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      oracle_vals.push_back(value_oracle(comps[i]));
      if (!(oracle_vals.back() == vals[i])) oracle_ok = false;
    }
  }

  if (opt.json) {
    json out;
    out["command"] = "eval";
    out["input"] = notation::print(parsed);
    out["value"] = total.to_string();
    out["grundy"] = total.grundy_string();
    json comps_json = json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      json c;
      c["form"] = notation::print(comps[i]);
      c["value"] = vals[i].to_string();
      if (opt.oracle) c["oracle"] = oracle_vals[i].to_string();
      comps_json.push_back(std::move(c));
    }
    out["components"] = std::move(comps_json);
    if (opt.oracle) out["oracle_agrees"] = oracle_ok;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << total.to_string() << "\n";
  }
  if (opt.oracle && !oracle_ok) {
    std::cerr << "oracle mismatch: mex-rule value and probe oracle disagree\n";
    return kExitOracleMismatch;
  }
  return kExitOk;
}

int cmd_outcome(const std::string& expr, const Options& opt) {
  const auto parsed = notation::parse(expr);
  const Outcome o = outcome(parsed);
  if (opt.json) {
    json out;
    out["command"] = "outcome";
    out["input"] = notation::print(parsed);
    out["outcome"] = std::string(1, to_char(o));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_char(o) << "\n";
  }
  return kExitOk;
}

int cmd_compare(const std::string& lhs, const std::string& rhs, const Options& opt) {
  const Form g = notation::parse_form(lhs);
  const Form h = notation::parse_form(rhs);
  const ComparisonResult r = compare_conway(g, h);  // throws NotConwayError
  if (opt.json) {
    json out;
    out["command"] = "compare";
    out["lhs"] = notation::print(g);
    out["rhs"] = notation::print(h);
    out["relation"] = to_string(r);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(r) << "\n";
  }
  return kExitOk;
}

std::vector<nimstring::Board> load_boards(const std::vector<std::string>& files) {
  std::vector<nimstring::Board> boards;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw GameError("cannot read board file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    boards.push_back(nimstring::parse_board(buf.str()));
  }
  return boards;
}

int cmd_nimstring_eval(const std::vector<std::string>& files, const Options& opt) {
  const auto boards = load_boards(files);
  std::vector<Value> vals;
  vals.reserve(boards.size());
  for (const auto& b : boards) vals.push_back(nimstring::value_of_board(b));
  const Value total = value_of_sum(vals);
  const char predicted =
      total == Value::nimber(0) ? 'P' : 'N';

  bool oracle_ok = true;
  char direct = '?';
  if (opt.oracle) {
    direct = to_char(nimstring::direct_outcome(boards));
    oracle_ok = direct == predicted;
  }

  if (opt.json) {
    json out;
    out["command"] = "nimstring-eval";
    json bj = json::array();
    for (std::size_t i = 0; i < boards.size(); ++i) {
      json b;
      b["file"] = files[i];
      b["value"] = vals[i].to_string();
      bj.push_back(std::move(b));
    }
    out["boards"] = std::move(bj);
    out["sum"] = total.to_string();
    out["predicted_outcome"] = std::string(1, predicted);
    if (opt.oracle) {
      out["direct_outcome"] = std::string(1, direct);
      out["oracle_agrees"] = oracle_ok;
    }
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < boards.size(); ++i) {
      std::cout << files[i] << ": " << vals[i].to_string() << "\n";
    }
    std::cout << "sum = " << total.to_string() << "\n";
  }
  if (opt.oracle && !oracle_ok) {
    std::cerr << "oracle mismatch: rules-level search disagrees with the "
                 "value prediction\n";
    return kExitOracleMismatch;
  }
  return kExitOk;
}

int cmd_nimstring_outcome(const std::vector<std::string>& files, const Options& opt) {
  const auto boards = load_boards(files);
  const Outcome o = nimstring::direct_outcome(boards);
  if (opt.json) {
    json out;
    out["command"] = "nimstring-outcome";
    out["files"] = files;
    out["outcome"] = std::string(1, to_char(o));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_char(o) << "\n";
  }
  return kExitOk;
}

int cmd_table(unsigned max_n, const Options& opt) {
  const auto table = topentails::compute_table(max_n);
  if (opt.json) {
    for (const auto& r : table) {
      json row;
      row["n"] = r.n;
      row["S"] = set_to_json(r.s);
      row["P"] = set_to_json(r.p);
      row["value"] = r.value.to_string();
      std::cout << row.dump() << "\n";
    }
  } else {
    std::size_t sw = 1, pw = 1;
    for (const auto& r : table) {
      sw = std::max(sw, r.s.to_string().size());
      pw = std::max(pw, r.p.to_string().size());
    }
    std::printf("%6s  %-*s  %-*s  %s\n", "n", static_cast<int>(sw), "S",
                static_cast<int>(pw), "P", "value");
    for (const auto& r : table) {
      std::printf("%6u  %-*s  %-*s  %s\n", r.n, static_cast<int>(sw),
                  r.s.to_string().c_str(), static_cast<int>(pw),
                  r.p.to_string().c_str(), r.value.grundy_string().c_str());
    }
  }
  if (opt.oracle) {
    const unsigned limit = std::min(max_n, 7u);
    for (unsigned n = 0; n <= limit; ++n) {
      if (!(value(topentails::direct_form(n)) == table[n].value)) {
        std::cerr << "oracle mismatch: literal heap form " << n
                  << " disagrees with the recursion\n";
        return kExitOracleMismatch;
      }
    }
  }
  return kExitOk;
}

int cmd_scan(unsigned max_n, const Options& opt) {
  const auto loony = topentails::scan_loony(max_n);
  if (opt.json) {
    json out;
    out["command"] = "topentails-scan";
    out["max"] = max_n;
    out["loony"] = loony;
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < loony.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << loony[i];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solver for impartial games with entailing moves"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit JSON instead of plain text");
  app.add_flag("--oracle", opt.oracle,
               "cross-check results with the independent oracle; mismatches "
               "exit with status 3");
  app.add_option("--max-probe", opt.max_probe,
                 "override the probe ceiling used for protected-nimber and "
                 "oracle searches")
      ->check(CLI::NonNegativeNumber);

  std::string expr, lhs, rhs;
  std::vector<std::string> files;
  unsigned max_n = 0;

  auto* eval = app.add_subcommand("eval", "Grundy value of a form or sum");
  eval->add_option("expr", expr, "form expression")->required();

  auto* outc = app.add_subcommand("outcome", "perfect-play outcome of a form or sum");
  outc->add_option("expr", expr, "form expression")->required();

  auto* comp = app.add_subcommand(
      "compare", "order a form against a Conway form (second argument)");
  comp->add_option("lhs", lhs, "any form")->required();
  comp->add_option("rhs", rhs, "a Conway form")->required();

  auto* nse = app.add_subcommand("nimstring-eval",
                                 "values of nimstring boards and their sum");
  nse->add_option("files", files, "board files")->required()->expected(-1);

  auto* nso = app.add_subcommand(
      "nimstring-outcome", "rules-level outcome of a sum of nimstring boards");
  nso->add_option("files", files, "board files")->required()->expected(-1);

  auto* tbl = app.add_subcommand("topentails-table",
                                 "S, P and value for heaps 0..N");
  tbl->add_option("N", max_n, "largest heap")->required();

  auto* scn = app.add_subcommand("topentails-scan",
                                 "heap sizes up to N with a loony value");
  scn->add_option("N", max_n, "largest heap")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (opt.max_probe >= 0) {
    set_probe_ceiling_override(static_cast<unsigned>(opt.max_probe));
  }

  try {
    if (eval->parsed()) return cmd_eval(expr, opt);
    if (outc->parsed()) return cmd_outcome(expr, opt);
    if (comp->parsed()) return cmd_compare(lhs, rhs, opt);
    if (nse->parsed()) return cmd_nimstring_eval(files, opt);
    if (nso->parsed()) return cmd_nimstring_outcome(files, opt);
    if (tbl->parsed()) return cmd_table(max_n, opt);
    if (scn->parsed()) return cmd_scan(max_n, opt);
  } catch (const GameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
