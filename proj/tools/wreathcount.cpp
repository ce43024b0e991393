// Command line front end: group invariants, wreath products, quadratic-field
// counting, tower enumeration, residue series, rank bounds, and the
// verification suite.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrc/acceptance.hpp"
#include "wrc/asymptotics.hpp"
#include "wrc/perm_group.hpp"
#include "wrc/quad_field.hpp"
#include "wrc/towers.hpp"

using nlohmann::json;

namespace {

std::vector<wrc::Permutation> parse_gens(const std::string& spec, int degree) {
  std::vector<wrc::Permutation> out;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t semi = spec.find(';', pos);
    std::string part = semi == std::string::npos ? spec.substr(pos)
                                                 : spec.substr(pos, semi - pos);
    if (!part.empty()) out.push_back(wrc::Permutation::parse(part, degree));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (out.empty()) throw std::invalid_argument("no generators in --gens");
  return out;
}

std::vector<long long> parse_ll_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

// RFC 4180 field quoting
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

struct Output {
  std::string path;  // empty = stdout
  bool header = true;

  void write(const std::string& content, const std::string& header_line) {
    std::string full;
    if (header) full = header_line + "\n";
    full += content;
    if (path.empty()) {
      std::cout << full;
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file " + path);
      f << full;
    }
  }
};

std::string timestamp_header() {
  return "# wreathcount v0.1.0";
}

json invariants_json(const wrc::PermGroup& g) {
  wrc::InvariantReport rep = wrc::invariant_report(g);
  json j;
  j["degree"] = rep.degree;
  j["order"] = rep.order;
  j["ind"] = rep.ind;
  j["a_num"] = rep.a.num;
  j["a_den"] = rep.a.den;
  j["b_q"] = rep.b_q;
  j["primitive"] = rep.primitive;
  j["block_sizes"] = rep.block_sizes;
  return j;
}

json field_json(long long d, double tol) {
  wrc::QuadraticField k(d);
  json j;
  j["d"] = d;
  j["h"] = k.class_number();
  j["w"] = k.roots_of_unity();
  j["r1"] = k.r1();
  j["r2"] = k.r2();
  wrc::Interval reg = k.regulator();
  j["reg_lo"] = reg.lo();
  j["reg_hi"] = reg.hi();
  wrc::Interval res = k.residue_zeta();
  j["res_lo"] = res.lo();
  j["res_hi"] = res.hi();
  wrc::Interval z2 = k.zeta2(tol);
  j["zeta2_lo"] = z2.lo();
  j["zeta2_hi"] = z2.hi();
  wrc::Interval r = k.ext_count_constant(tol);
  j["R_lo"] = r.lo();
  j["R_hi"] = r.hi();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-theoretic invariants and quadratic tower counting"};
  app.require_subcommand(1);

  // --- invariants ---
  auto* inv = app.add_subcommand("invariants",
                                 "a(G), b(Q,G), primitivity of a permutation group");
  int inv_degree = 0;
  std::string inv_gens;
  inv->add_option("--degree", inv_degree, "degree n")->required();
  inv->add_option("--gens", inv_gens, "semicolon-separated cycle strings")
      ->required();

  // --- wreath ---
  auto* wre = app.add_subcommand("wreath", "invariants of a wreath product");
  int we = 0, wd = 0;
  std::string wgens1, wgens2;
  wre->add_option("--degree1", we, "degree of the inner group")->required();
  wre->add_option("--gens1", wgens1, "inner generators")->required();
  wre->add_option("--degree2", wd, "degree of the outer group")->required();
  wre->add_option("--gens2", wgens2, "outer generators")->required();

  // --- count-c2 ---
  auto* cc2 = app.add_subcommand("count-c2",
                                 "count quadratic fields by |discriminant|");
  long long cc2_x = 1000000;
  std::string cc2_csv;
  bool cc2_no_header = false;
  cc2->add_option("--x", cc2_x, "bound");
  cc2->add_option("--csv", cc2_csv, "output CSV path (default stdout)");
  cc2->add_flag("--no-header", cc2_no_header, "suppress the header line");

  // --- count-towers ---
  auto* ct = app.add_subcommand(
      "count-towers", "enumerate quadratic towers over h=1 quadratic fields");
  std::string ct_fields = "-4,-3,5,8,-7,-8,-11,12,13";
  long long ct_x = 1000000;
  std::string ct_mode = "tower";
  std::string ct_csv;
  bool ct_no_header = false;
  unsigned ct_workers = 1;
  ct->add_option("--fields", ct_fields, "fundamental discriminants, comma-separated");
  ct->add_option("--x", ct_x, "bound on N(d_{L/Q})");
  ct->add_option("--mode", ct_mode, "tower|field")
      ->check(CLI::IsMember({"tower", "field"}));
  ct->add_option("--csv", ct_csv, "per-tower dump CSV path");
  ct->add_option("--workers", ct_workers, "worker threads");
  ct->add_flag("--no-header", ct_no_header, "suppress the header line");

  // --- residue ---
  auto* res = app.add_subcommand("residue",
                                 "residue series over fundamental discriminants");
  long long res_d = 100000;
  double res_tol = 1e-2;
  bool res_json = false;
  unsigned res_workers = 1;
  std::string res_fields;
  res->add_option("--D", res_d, "truncation bound on |d|");
  res->add_option("--tol", res_tol, "enclosure tolerance (tail included)");
  res->add_option("--fields", res_fields,
                  "restrict to an explicit field list (no tail)");
  res->add_option("--workers", res_workers, "worker threads");
  res->add_flag("--json", res_json, "JSON output");

  // --- rank-bound ---
  auto* rb = app.add_subcommand("rank-bound",
                                "C_ell extension count bound vs exact count");
  long long rb_ell = 2;
  std::string rb_s;
  rb->add_option("--ell", rb_ell, "prime ell");
  rb->add_option("--S", rb_s, "rational primes, comma-separated")->required();

  // --- verify ---
  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  unsigned ver_workers = 4;
  std::vector<int> ver_only;
  ver->add_option("--workers", ver_workers, "worker threads");
  ver->add_option("--only", ver_only, "criterion ids to run (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage error
  }

  try {
    if (inv->parsed()) {
      auto g = wrc::PermGroup::generate(parse_gens(inv_gens, inv_degree));
      std::cout << invariants_json(g).dump() << "\n";
      return 0;
    }
    if (wre->parsed()) {
      auto h1 = wrc::PermGroup::generate(parse_gens(wgens1, we));
      auto h2 = wrc::PermGroup::generate(parse_gens(wgens2, wd));
      auto w = wrc::wreath_product(h1, h2);
      json j = invariants_json(w);
      j["inner_order"] = h1.order();
      j["outer_order"] = h2.order();
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (cc2->parsed()) {
      std::ostringstream body;
      body << "x_sample,count,ratio,target\n";
      for (long long x = 10; x <= cc2_x; x *= 10) {
        long long c = wrc::count_quadratic_q(x);
        body << x << "," << c << ","
             << static_cast<double>(c) / static_cast<double>(x) << ","
             << 0.607927 << "\n";
      }
      if (cc2_x != 1 && (cc2_x % 10 != 0 || cc2_x < 10)) {
        long long c = wrc::count_quadratic_q(cc2_x);
        body << cc2_x << "," << c << ","
             << static_cast<double>(c) / static_cast<double>(cc2_x) << ","
             << 0.607927 << "\n";
      }
      Output out{cc2_csv, !cc2_no_header};
      out.write(body.str(), timestamp_header());
      return 0;
    }
    if (ct->parsed()) {
      auto fields = parse_ll_list(ct_fields);
      wrc::CountMode mode =
          ct_mode == "field" ? wrc::CountMode::kField : wrc::CountMode::kTower;
      std::vector<long long> samples;
      for (long long s = 1000; s < ct_x; s *= 10) samples.push_back(s);
      wrc::TowerCount tc = wrc::count_towers(fields, ct_x, mode, samples,
                                             ct_workers);
      json j;
      j["x"] = tc.x;
      j["mode"] = ct_mode;
      j["z_tilde"] = tc.z_tilde;
      j["z_d4"] = tc.z_d4;
      j["y"] = tc.y;
      json samples_json = json::array();
      for (auto& s : tc.samples)
        samples_json.push_back(
            {{"x", s.x}, {"z_tilde", s.z_tilde}, {"z_d4", s.z_d4}, {"y", s.y}});
      j["samples"] = samples_json;
      std::cout << j.dump() << "\n";
      if (!ct_csv.empty()) {
        auto dump = wrc::enumerate_tower_set(fields, ct_x, ct_workers);
        std::ostringstream body;
        body << "d_K,delta_a,delta_b,rel_disc_norm,tower_disc,type,witness\n";
        for (auto& c : dump) {
          body << c.d_k << "," << c.delta.a << "," << c.delta.b << ","
               << c.rel_disc_norm << "," << c.tower_disc << ","
               << wrc::to_string(c.type) << ","
               << (c.witness ? std::to_string(*c.witness) : "") << "\n";
        }
        Output out{ct_csv, !ct_no_header};
        out.write(body.str(), timestamp_header());
      }
      return 0;
    }
    if (res->parsed()) {
      if (!res_fields.empty()) {
        auto fields = parse_ll_list(res_fields);
        wrc::Interval sum = wrc::restricted_residue_sum(fields);
        json j;
        j["fields"] = fields;
        j["sum_lo"] = sum.lo();
        j["sum_hi"] = sum.hi();
        std::cout << j.dump() << "\n";
        return 0;
      }
      wrc::ResidueSeries s = wrc::residue_series(res_d, res_tol, res_workers);
      if (res_json) {
        json j;
        j["D"] = s.truncation_d;
        j["terms"] = s.terms;
        j["partial_lo"] = s.partial_sum.lo();
        j["partial_hi"] = s.partial_sum.hi();
        j["tail"] = s.tail;
        j["constant_lo"] = s.partial_sum.lo();
        j["constant_hi"] = s.partial_sum.hi() + s.tail;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "D=" << s.truncation_d << " terms=" << s.terms
                  << " partial=" << s.partial_sum.str(10) << " tail<=" << s.tail
                  << "\n";
      }
      return 0;
    }
    if (rb->parsed()) {
      auto s = parse_ll_list(rb_s);
      wrc::RankBound bound =
          wrc::ell_rank_bound(wrc::RankBoundQuery{std::nullopt, rb_ell, s});
      json j;
      j["s"] = bound.s_exponent;
      j["bound"] = bound.bound;
      if (rb_ell == 2) {
        j["exact"] = wrc::exact_quadratic_ramified_count(s);
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (ver->parsed()) {
      wrc::AcceptanceOptions opt;
      opt.workers = ver_workers;
      opt.only = ver_only;
      auto results = wrc::run_acceptance(opt, &std::cout);
      bool ok = wrc::all_passed(results);
      std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED")
                << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
