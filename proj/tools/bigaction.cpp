// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// bigaction: command-line front end. Every subcommand prints JSON (genus
// prints a bare integer) and is deterministic given its flags and seed.
//
// Exit codes: 0 all checks passed, 1 verification mismatch, 2 usage or
// constraint error.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "bigaction/bounds.hpp"
#include "bigaction/classify.hpp"
#include "bigaction/error.hpp"
#include "bigaction/json.hpp"
#include "bigaction/oracle.hpp"
#include "bigaction/ore.hpp"
#include "bigaction/polyring.hpp"

using namespace bigaction;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

// Inline JSON when the argument starts like JSON, otherwise a file name.
Json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text = arg;
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) fail("InvalidArgument", "cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("InvalidJson", e.what());
  }
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_structured(); });
}

// Indented objects, but coordinate vectors and polynomials stay on one line.
void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << pad << "  " << Json(k).dump() << ": ";
      write(os, v, indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (j.is_array() && !j.empty() && !std::all_of(j.begin(), j.end(), is_flat)) {
    os << "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      os << pad << "  ";
      write(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else {
    os << j.dump();
  }
}

void print(const Json& j) {
  write(std::cout, j, 0);
  std::cout << "\n";
}

const FieldCtx& field_of(uint32_t p, int m) { return ctx_from_json(Json{{"p", p}, {"m", m}}); }

Expected parse_expected(const std::string& s) {
  if (s == "extraspecial") return Expected::kExtraspecial;
  if (s == "special") return Expected::kSpecial;
  if (s == "cyclic-center") return Expected::kCyclicCenter;
  if (s == "none") return Expected::kNone;
  fail("InvalidArgument", "unknown structure '" + s + "' (extraspecial, special, cyclic-center, none)");
}

// A case instance counts when every check passes and it satisfies (*), which
// is the regime the tables classify.
int case_verdict(const CaseReport& rep, uint32_t p, Json& out) {
  if (!rep.ok()) {
    Json bad = Json::array();
    for (const auto& m : rep.mismatches()) bad.push_back(m.name + ": expected " + m.expected + ", got " + m.actual);
    out["explanation"] = bad;
    return kMismatch;
  }
  if (!rep.report.satisfies_star) {
    out["explanation"] = "star=false: |G|/g^2 = " + to_string(rep.report.ratio_g2) + " is below 4/(p^2-1)^2 = " +
                         to_string(star_threshold(p));
    return kMismatch;
  }
  return kOk;
}

Json instance_line(CaseId id, uint32_t p, int ext, const CaseInstance& inst) {
  const auto& r = inst.report;
  return {{"case", to_string(id)},
          {"p", p},
          {"ext", ext},
          {"s", r.s},
          {"params", to_json(inst.params)},
          {"g", to_json(r.report.g)},
          {"order_G", to_json(r.report.order_G)},
          {"ratio_g", to_json(r.report.ratio_g)},
          {"ratio_g2", to_json(r.report.ratio_g2)},
          {"big_action", r.report.is_big_action},
          {"star", r.report.satisfies_star},
          {"table_unverifiable", r.table_unverifiable}};
}

Json failures_json(const EnumerationResult& res) {
  Json f = Json::object();
  for (const auto& [k, n] : res.failures) f[k] = {{"count", n}, {"example", res.failure_example.at(k)}};
  return f;
}

// Smallest admissible prime at which the case satisfies (*) at its default s.
uint32_t census_prime(CaseId id) {
  const auto& info = case_info(id);
  for (uint32_t p = info.min_p; p <= (info.max_p ? info.max_p : 97); ++p)
    if (is_prime(p) && expected_star(id, p, info.default_s)) return p;
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"bigaction: big actions on curves, case tables and bounds"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  std::function<int()> action;

  // reduce / adjoint / rootspace share a field given by p and m.
  uint32_t p = 0;
  int m = 1;
  std::string poly_arg, spec_arg, params_arg, case_arg, M_arg, family_arg, expect_arg = "none", out_arg;
  int s = 0, ext = 2, jobs = 1;
  uint64_t seed = 0, count = 10, attempts = 40;
  bool exhaustive = false, oracle = false;
  std::vector<std::string> case_list;
  std::string case_names;
  for (CaseId id : all_case_ids()) case_names += (case_names.empty() ? "" : " ") + to_string(id);
  std::string V_arg, G2_arg;

  auto field_opts = [&](CLI::App* sc) {
    sc->add_option("--p", p, "characteristic")->required();
    sc->add_option("--m", m, "extension degree of the coefficient field")->capture_default_str();
  };

  auto* reduce = app.add_subcommand("reduce", "reduced representative of f modulo wp(k[X])");
  field_opts(reduce);
  reduce->add_option("--poly", poly_arg, "polynomial JSON (array of element arrays) or file")->required();
  reduce->callback([&] {
    action = [&] {
      const FieldCtx& ctx = field_of(p, m);
      const Poly f = poly_from_json(ctx, read_json_arg(poly_arg));
      print({{"ctx", to_json(ctx)}, {"reduced", to_json(reduce_mod_wp(f))}});
      return kOk;
    };
  });

  auto* adjoint = app.add_subcommand("adjoint", "palindromic polynomial Ad_f of f = X S(X) + cX");
  field_opts(adjoint);
  adjoint->add_option("--poly", poly_arg, "polynomial JSON or file")->required();
  adjoint->callback([&] {
    action = [&] {
      const FieldCtx& ctx = field_of(p, m);
      const Poly f = poly_from_json(ctx, read_json_arg(poly_arg));
      print({{"ctx", to_json(ctx)}, {"Ad", to_json(palindromic(f))}});
      return kOk;
    };
  });

  auto* rootspace = app.add_subcommand("rootspace", "F_p-basis of the roots of an additive polynomial");
  field_opts(rootspace);
  rootspace->add_option("--additive", poly_arg, "additive polynomial JSON (coefficients of F^j) or file")
      ->required();
  rootspace->callback([&] {
    action = [&] {
      const FieldCtx& ctx = field_of(p, m);
      const RootSpace rs = root_space(additive_from_json(ctx, read_json_arg(poly_arg)));
      Json basis = Json::array();
      for (const auto& y : rs.basis) basis.push_back(to_json(y));
      print({{"ctx", to_json(*rs.ctx)}, {"dim", rs.basis.size()}, {"basis", basis}});
      return kOk;
    };
  });

  auto* genus_cmd = app.add_subcommand("genus", "genus of the cover");
  genus_cmd->add_option("--spec", spec_arg, "cover spec JSON or file")->required();
  genus_cmd->callback([&] {
    action = [&] {
      const CoverSpec spec = spec_from_json(read_json_arg(spec_arg));
      validate(spec);
      std::cout << genus(spec) << "\n";
      return kOk;
    };
  });

  auto* report_cmd = app.add_subcommand("report", "big-action report of a cover with translations V");
  report_cmd->add_option("--spec", spec_arg, "cover spec JSON or file")->required();
  report_cmd->add_option("--M", M_arg, "threshold M as num/den (default 4/(p^2-1)^2)");
  report_cmd->add_flag("--oracle", oracle, "also build the group by brute force");
  report_cmd->add_option("--expect", expect_arg, "structure to check with --oracle")->capture_default_str();
  report_cmd->callback([&] {
    action = [&] {
      const CoverSpec spec = spec_from_json(read_json_arg(spec_arg));
      validate(spec);
      const Rational M = M_arg.empty() ? star_threshold(spec.p()) : parse_rational(M_arg);
      const bool embeds = check_embedding(spec);
      Json out = {{"embedding", embeds}};
      if (embeds) out["report"] = to_json(report(spec, M));
      int code = embeds ? kOk : kMismatch;
      if (embeds && oracle) {
        const GroupReport g = AutGroup::of_spec(spec).structure_check(parse_expected(expect_arg));
        out["group"] = to_json(g);
        if (!g.ok()) code = kMismatch;
      }
      print(out);
      return code;
    };
  });

  auto* verify = app.add_subcommand("verify-case", "build a table row from its parameters and re-derive every claim");
  verify->add_option("--case", case_arg, "case id, e.g. P2N.s1")->required();
  verify->add_option("--p", p, "characteristic")->required();
  auto* params_opt = verify->add_option("--params", params_arg, "parameter JSON or file");
  verify->add_option("--spec", spec_arg, "verify a full spec instead of building one")->excludes(params_opt);
  verify->add_flag("--oracle", oracle, "also build the group by brute force");
  verify->add_option("--expect", expect_arg, "structure to check with --oracle")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      const CaseId id = parse_case_id(case_arg);
      CoverSpec spec;
      Json out = {{"case", to_string(id)}, {"p", p}};
      if (!spec_arg.empty()) {
        spec = spec_from_json(read_json_arg(spec_arg));
        if (spec.p() != p) fail("InvalidArgument", "spec is over p = " + std::to_string(spec.p()));
      } else {
        if (params_arg.empty()) fail("InvalidArgument", "verify-case needs --params or --spec");
        const CaseParams params = params_from_json(read_json_arg(params_arg), p);
        spec = build_case(id, params);
        out["params"] = to_json(params);
      }
      const CaseReport rep = verify_case(spec, id);
      out["spec"] = to_json(spec);
      out["verdict"] = to_json(rep);
      int code = case_verdict(rep, p, out);
      if (oracle) {
        const GroupReport g = AutGroup::of_spec(spec).structure_check(parse_expected(expect_arg));
        out["group"] = to_json(g);
        if (!g.ok() && code == kOk) code = kMismatch;
      }
      print(out);
      return code;
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "sample verified instances of a case");
  enumerate->add_option("--case", case_arg, "case id, one of: " + case_names)->required();
  enumerate->add_option("--p", p, "characteristic")->required();
  enumerate->add_option("--ext", ext, "parameters are drawn from GF(p^ext)")->required();
  enumerate->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  enumerate->add_option("--count", count, "number of instances")->capture_default_str();
  enumerate->add_option("--s", s, "s (0: the case default)")->capture_default_str();
  enumerate->add_option("--attempts", attempts, "attempts per instance")->capture_default_str();
  enumerate->add_flag("--exhaustive", exhaustive, "run over the case's primary parameter");
  enumerate->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  enumerate->callback([&] {
    action = [&] {
      const CaseId id = parse_case_id(case_arg);
      Sampling smp;
      smp.seed = seed;
      smp.count = count;
      smp.exhaustive = exhaustive;
      smp.attempts_per_instance = attempts;
      const auto res = enumerate_case(id, p, ext, smp, s, jobs);
      Json inst = Json::array();
      for (const auto& i : res.instances) inst.push_back(instance_line(id, p, ext, i));
      print({{"case", to_string(id)},
             {"p", p},
             {"ext", ext},
             {"seed", seed},
             {"attempts", res.attempts},
             {"verified", res.instances.size()},
             {"failures", failures_json(res)},
             {"instances", inst}});
      return kOk;
    };
  });

  auto* bounds = app.add_subcommand("bounds", "finiteness bounds at threshold M");
  bounds->add_option("--p", p, "characteristic")->required();
  bounds->add_option("--M", M_arg, "M as num/den, 0 < M <= 4p/(p-1)^2")->required();
  bounds->add_option("--V", V_arg, "|V|, for the genus bounds");
  bounds->add_option("--G2", G2_arg, "|G'|, for the genus bound");
  bounds->callback([&] {
    action = [&] {
      if (!is_prime(p)) fail("InvalidArgument", "p must be prime");
      const Rational M = parse_rational(M_arg);
      const auto nt = bounds_nontrivial(M, p);
      const auto tr = bounds_trivial(M, p);
      Json out = {{"p", p},
                  {"M", to_json(M)},
                  {"phi", to_json(phi(M))},
                  {"gprime_bound", to_json(gprime_bound(M, p))},
                  {"max_order_G2", to_json(bound_Gprime(M, p))},
                  {"nontrivial", {{"V", to_json(nt.V)}, {"g", to_json(nt.g)}}},
                  {"trivial", {{"ratio_g2_lower", to_json(tr.ratio_g2_lower)}, {"V_ratio_lower", to_json(tr.V_ratio_lower)}}}};
      if (!V_arg.empty()) {
        const Int V(V_arg);
        out["genus_M"] = to_json(bound_genus_M(M, p, V));
        if (!G2_arg.empty()) out["genus"] = to_json(bound_genus(p, V, Int(G2_arg)));
      }
      print(out);
      return kOk;
    };
  });

  auto* special = app.add_subcommand("special", "Hermitian, Suzuki and Ree curves");
  special->add_option("--family", family_arg, "hermitian, suzuki or ree")->required();
  special->add_option("--s", s, "s >= 1")->required();
  special->add_option("--p", p, "characteristic (Hermitian only)");
  special->callback([&] {
    action = [&] {
      const SpecialFamily f = parse_special_family(family_arg);
      if (f == SpecialFamily::kHermitian && p == 0) fail("InvalidArgument", "the Hermitian family needs --p");
      print(to_json(special_curves_report(f, s, p)));
      return kOk;
    };
  });

  auto* census = app.add_subcommand("census", "JSON lines of verified instances satisfying (*) for every case");
  census->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  census->add_option("--count", count, "instances per case")->capture_default_str();
  census->add_option("--ext", ext, "parameters are drawn from GF(p^ext)")->capture_default_str();
  census->add_option("--case", case_list, "restrict to these cases");
  census->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  census->add_option("--out", out_arg, "write to this file instead of stdout");
  census->callback([&] {
    action = [&] {
      std::vector<CaseId> ids;
      for (const auto& c : case_list) ids.push_back(parse_case_id(c));
      if (ids.empty()) ids = all_case_ids();
      std::ofstream file;
      if (!out_arg.empty()) {
        file.open(out_arg);
        if (!file) fail("InvalidArgument", "cannot write '" + out_arg + "'");
      }
      std::ostream& os = out_arg.empty() ? std::cout : file;
      for (CaseId id : ids) {
        const uint32_t q = census_prime(id);
        if (!q) {
          std::cerr << to_string(id) << ": no admissible prime satisfies (*); skipped\n";
          continue;
        }
        Sampling smp;
        smp.seed = seed;
        smp.count = count;
        const auto res = enumerate_case(id, q, ext, smp, 0, jobs);
        uint64_t kept = 0;
        for (const auto& i : res.instances) {
          if (!i.report.report.satisfies_star) continue;
          os << instance_line(id, q, ext, i).dump() << "\n";
          ++kept;
        }
        std::cerr << to_string(id) << " p=" << q << ": " << kept << " lines, " << res.attempts << " attempts\n";
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    write(std::cerr, Json{{"error", e.kind()}, {"message", e.what()}}, 0);
    std::cerr << "\n";
    return kUsage;
  }
}

int main(int argc, char** argv) { return run(argc, argv); }
