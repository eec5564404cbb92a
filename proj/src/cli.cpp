#include "mvcount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvcount/arith.hpp"
#include "mvcount/counting.hpp"
#include "mvcount/error.hpp"
#include "mvcount/euler.hpp"
#include "mvcount/ideals.hpp"
#include "mvcount/parallel.hpp"
#include "mvcount/prototypes.hpp"
#include "mvcount/qforms.hpp"
#include "mvcount/verify.hpp"
#include "mvcount/volume.hpp"
#include "mvcount/zagier.hpp"

namespace mvcount::cli {

using json = nlohmann::json;
using std::uint64_t;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  json result;
  std::optional<Table> table;
  bool ok = true;
};

class Encoder {
 public:
  explicit Encoder(bool as_float) : float_(as_float) {}

  json operator()(const Rational& q) const {
    if (float_) return q.to_double();
    return q.str();
  }
  json operator()(const Integer& z) const {
    if (float_) return z.get_d();
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  }
  json operator()(const PiQuantity& p) const {
    json j = {{"coeff", (*this)(p.coeff)}, {"pi_power", p.pi_power}};
    if (float_) j["value"] = p.to_double();
    return j;
  }
  std::string cell(const Rational& q) const {
    if (!float_) return q.str();
    std::ostringstream os;
    os.precision(17);
    os << q.to_double();
    return os.str();
  }

 private:
  bool float_;
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

euler::Mode square_default(uint64_t D) {
  return arith::is_square(D) ? euler::Mode::main_term : euler::Mode::exact;
}

json record_json(const euler::EulerCharRecord& rec, const Encoder& enc) {
  json j = {{"family", std::string(euler::to_string(rec.family))},
            {"D", rec.D},
            {"mode", std::string(euler::to_string(rec.mode))},
            {"value", enc(rec.value)},
            {"empty", rec.empty},
            {"nonstandard", rec.nonstandard}};
  j["component"] = rec.component ? json(*rec.component) : json(nullptr);
  return j;
}

json cover_json(const counting::CoverCount& c, const Encoder& enc) {
  json list = json::array();
  for (const auto& x : c.contributions) {
    json j = {{"family", std::string(euler::to_string(x.family))},
              {"D", x.D},
              {"count", enc(x.count)}};
    j["component"] = x.component ? json(*x.component) : json(nullptr);
    list.push_back(j);
  }
  return {{"m", c.m}, {"contributions", list}, {"total", enc(c.total)}};
}

Table cover_table(const counting::CoverCount& c, const Encoder& enc) {
  Table t{{"family", "D", "component", "count"}, {}};
  for (const auto& x : c.contributions)
    t.rows.push_back({std::string(euler::to_string(x.family)), std::to_string(x.D),
                      x.component ? std::to_string(*x.component) : "",
                      enc.cell(x.count)});
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      os << (i ? "," : "") << csv_field(cells[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::string scalar_text(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Euler characteristics of arithmetic Teichmueller curves "
               "and lattice-point volume estimates",
               "mvcount"};
  app.require_subcommand(1);
  app.fallthrough();

  bool csv = false, as_float = false;
  unsigned threads = 0;
  std::string out_path;
  app.add_flag("--csv", csv, "Print the series as CSV instead of JSON");
  app.add_flag("--float", as_float, "Render exact values as decimals");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  app.add_option("--out", out_path, "Write the output to FILE");

  json inputs = json::object();
  std::string command;

  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&command, name] { command = name; });
    return s;
  };

  uint64_t D = 0, k = 1, n = 0, d = 0, m = 0, r = 0, j = 0;
  std::string family, mode_text, locus_text, estimator_text = "direct", suite = "all",
                                                convention = "hvHV";
  bool report = false;

  auto* proto = sub("proto", "List the prototypes (a, b, c) of discriminant D");
  proto->add_option("--D", D, "Discriminant")->required();
  proto->add_option("--k", k, "Weight parameter")->capture_default_str();

  auto* e_cmd = sub("e", "Weighted prototype count e(D, k)");
  e_cmd->add_option("--D", D, "Discriminant")->required();
  e_cmd->add_option("--k", k, "Weight parameter")->capture_default_str();

  auto* qexp = sub("qexp", "Coefficients of the product expansion F_k");
  qexp->add_option("--k", k, "Weight parameter")->capture_default_str();
  qexp->add_option("--n", n, "Highest exponent")->required();

  auto* zag = sub("zagier", "ebar1, ebar6 and e(d^2, k) for d <= d-max");
  zag->add_option("--dmax", d, "Largest d")->required();
  zag->add_flag("--report", report, "Emit the windowed error-term report");

  auto* ideal = sub("ideals", "Norm-6 ideals, class counts and polarizations");
  ideal->add_option("--d", d, "Square root of the discriminant")->required();
  ideal->add_option("--n", n, "Squarefree ideal norm")->default_val(6);

  auto* chi = sub("chi", "Euler characteristic of a Teichmueller curve");
  chi->add_option("--family", family, "X, X_br, W2, W4, W6, R or G")->required();
  chi->add_option("--D", D, "Discriminant")->required();
  chi->add_option("--r", r, "Component index (X_br, G)");
  chi->add_option("--j", j, "Component index (W4)");
  chi->add_option("--mode", mode_text, "exact, main_term, leading or remark");

  auto* smm_cmd = sub("smm", "Minimal torus covers of degree m");
  smm_cmd->add_option("--locus", locus_text, "h2, p3, p4 or gothic")->required();
  smm_cmd->add_option("--m", m, "Degree")->required();
  smm_cmd->add_option("--surrogate", mode_text, "exact, main, leading or remark");

  auto* cd_cmd = sub("cd", "Square-tiled surfaces with d squares");
  cd_cmd->add_option("--locus", locus_text, "h2, p3, p4 or gothic")->required();
  cd_cmd->add_option("--d", d, "Number of squares")->required();
  cd_cmd->add_option("--surrogate", mode_text, "exact, main, leading or remark");

  auto* oracle = sub("oracle-h2", "Count H(2) surfaces by permutation pairs");
  oracle->add_option("--d", d, "Number of squares (1..10)")->required();
  oracle->add_option("--convention", convention, "hvHV or HVhv")
      ->capture_default_str();

  auto* sk = sub("sk", "Lattice-point sum S_k(D)");
  sk->add_option("--k", k, "1, 2, 3 or 6")->capture_default_str();
  sk->add_option("--D", D, "Bound")->required();

  auto* vol = sub("volume", "Volume estimate from the lattice-point count");
  vol->add_option("--locus", locus_text, "h2, p3, p4 or gothic")->required();
  vol->add_option("--dmax", d, "Bound D")->required();
  vol->add_option("--mode", estimator_text, "direct or closed")->capture_default_str();
  vol->add_option("--surrogate", mode_text, "exact, main, leading or remark");

  auto* ver = sub("verify", "Run the cross-oracle checks");
  ver->add_option("--suite", suite, "A module name or all")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }

  const Encoder enc(as_float);
  const unsigned nthreads = resolve_threads(threads);

  auto surrogate = [&](counting::Locus l) {
    return mode_text.empty() ? counting::default_mode(l) : euler::parse_mode(mode_text);
  };

  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    if (command == "proto") {
      inputs = {{"D", D}, {"k", k}};
      auto list = prototypes::enumerate_prototypes(D, k);
      json arr = json::array();
      Table t{{"a", "b", "c"}, {}};
      for (const auto& p : list) {
        arr.push_back({p.a, p.b, p.c});
        t.rows.push_back({std::to_string(p.a), std::to_string(p.b), std::to_string(p.c)});
      }
      res.result = {{"count", list.size()}, {"prototypes", arr}};
      res.table = t;
    } else if (command == "e") {
      inputs = {{"D", D}, {"k", k}};
      res.result = enc(prototypes::e_value(D, k));
    } else if (command == "qexp") {
      inputs = {{"k", k}, {"n", n}};
      auto F = qforms::fk_expansion(k, n);
      json arr = json::array();
      Table t{{"n", "coeff"}, {}};
      for (uint64_t i = 0; i <= n; ++i) {
        arr.push_back(enc(F.coeff(i)));
        t.rows.push_back({std::to_string(i), enc.cell(F.coeff(i))});
      }
      res.result = arr;
      res.table = t;
    } else if (command == "zagier") {
      inputs = {{"dmax", d}, {"report", report}};
      if (report) {
        auto rep = zagier::asymptotic_check_e(d, nthreads);
        json windows = json::array();
        Table t{{"lo", "hi", "max_delta1", "max_delta6"}, {}};
        for (int w = 0; w < 3; ++w) {
          windows.push_back({{"lo", rep.window_lo[w]},
                             {"hi", rep.window_hi[w]},
                             {"max_delta1", rep.max_delta1[w]},
                             {"max_delta6", rep.max_delta6[w]}});
          t.rows.push_back({std::to_string(rep.window_lo[w]),
                            std::to_string(rep.window_hi[w]),
                            num(rep.max_delta1[w]), num(rep.max_delta6[w])});
        }
        res.result = {{"windows", windows},
                      {"ratio1", rep.ratio1},
                      {"ratio6", rep.ratio6},
                      {"non_increasing1", rep.non_increasing1},
                      {"non_increasing6", rep.non_increasing6}};
        res.table = t;
      } else {
        MVCOUNT_REQUIRE(d >= 1, "zagier: dmax must be positive");
        json arr = json::array();
        Table t{{"d", "ebar1", "ebar6", "e1", "e6"}, {}};
        for (uint64_t x = 1; x <= d; ++x) {
          Rational b1 = zagier::ebar1_exact(x), b6 = zagier::ebar6_exact(x);
          Rational e1 = prototypes::e_value(x * x, 1), e6 = prototypes::e_value(x * x, 6);
          arr.push_back({{"d", x}, {"ebar1", enc(b1)}, {"ebar6", enc(b6)},
                         {"e1", enc(e1)}, {"e6", enc(e6)}});
          t.rows.push_back({std::to_string(x), enc.cell(b1), enc.cell(b6),
                            enc.cell(e1), enc.cell(e6)});
        }
        res.result = arr;
        res.table = t;
      }
    } else if (command == "ideals") {
      inputs = {{"d", d}, {"n", n}};
      json bases = json::array();
      for (uint64_t rr : arith::divisors(n)) {
        auto spec = ideals::ideal_basis(d, n, rr);
        bases.push_back({{"r", rr},
                         {"g1", {spec.g1.a1, spec.g1.a2}},
                         {"g2", {spec.g2.a1, spec.g2.a2}}});
      }
      res.result = {{"bases", bases}, {"class_count", ideals::class_count(d, n)}};
      if (n == 6) {
        json comps = json::array();
        Table t{{"r", "e1", "e2", "pol1", "pol2"}, {}};
        for (uint64_t rr : ideals::component_list(d)) {
          auto sd = ideals::symplectic_divisors(ideals::gram_matrix(d, n, rr));
          auto pol = ideals::polarization_restriction(d, n, rr);
          comps.push_back({{"r", rr},
                           {"symplectic_type", {sd.first, sd.second}},
                           {"polarization", {pol.first, pol.second}}});
          t.rows.push_back({std::to_string(rr), std::to_string(sd.first),
                            std::to_string(sd.second), std::to_string(pol.first),
                            std::to_string(pol.second)});
        }
        res.result["components"] = comps;
        res.table = t;
      }
    } else if (command == "chi") {
      inputs = {{"family", family}, {"D", D}};
      if (r) inputs["r"] = r;
      if (j) inputs["j"] = j;
      if (!mode_text.empty()) inputs["mode"] = mode_text;
      const euler::Family fam = euler::parse_family(family);
      const euler::Mode mode =
          mode_text.empty() ? square_default(D) : euler::parse_mode(mode_text);
      euler::EulerCharRecord rec{fam, D, std::nullopt, euler::Mode::exact, Rational(0)};
      switch (fam) {
        case euler::Family::X:
          rec.value = arith::is_square(D) ? euler::chi_X_square(arith::isqrt(D))
                                          : euler::chi_X_nonsquare(D);
          break;
        case euler::Family::X_br:
          MVCOUNT_REQUIRE(arith::is_square(D), "chi: X_br needs a square discriminant");
          rec.component = r ? r : 1;
          rec.value = euler::chi_X_br(arith::isqrt(D), *rec.component);
          break;
        case euler::Family::W2: rec.value = euler::chi_W2(D); break;
        case euler::Family::W4: rec = euler::chi_W4(D, j ? j : 1, mode); break;
        case euler::Family::W6: rec = euler::chi_W6(D, mode); break;
        case euler::Family::R: rec.value = euler::chi_R(D); break;
        case euler::Family::G: rec = euler::chi_G(D, r ? r : 1, mode); break;
      }
      res.result = record_json(rec, enc);
    } else if (command == "smm") {
      auto l = counting::parse_locus(locus_text);
      auto mode = surrogate(l);
      inputs = {{"locus", std::string(counting::to_string(l))},
                {"m", m},
                {"surrogate", std::string(euler::to_string(mode))}};
      auto c = counting::smm(l, m, mode);
      res.result = cover_json(c, enc);
      res.table = cover_table(c, enc);
    } else if (command == "cd") {
      auto l = counting::parse_locus(locus_text);
      auto mode = surrogate(l);
      inputs = {{"locus", std::string(counting::to_string(l))},
                {"d", d},
                {"surrogate", std::string(euler::to_string(mode))}};
      res.result = enc(counting::cd_count(l, d, mode));
    } else if (command == "oracle-h2") {
      MVCOUNT_REQUIRE(convention == "hvHV" || convention == "HVhv",
                      "oracle-h2: convention must be hvHV or HVhv");
      inputs = {{"d", d}, {"convention", convention}};
      auto conv = convention == "hvHV" ? counting::Commutator::hvHV
                                       : counting::Commutator::HVhv;
      Rational count = counting::h2_permutation_oracle(d, conv, nthreads);
      Rational expected = counting::cd_count(counting::Locus::H2, d, euler::Mode::exact);
      res.result = {{"count", enc(count)}, {"cd_count", enc(expected)},
                    {"agree", count == expected}};
    } else if (command == "sk") {
      inputs = {{"k", k}, {"D", D}};
      MVCOUNT_REQUIRE(k == 1 || k == 2 || k == 3 || k == 6, "sk: k must be 1, 2, 3 or 6");
      Integer s = volume::sk_sum(k, D);
      PiQuantity c = volume::sk_asymptotic_constant(k);
      double ratio = s.get_d() / (c.to_double() * std::pow(double(D), 4));
      res.result = {{"value", enc(s)}, {"constant", enc(c)}, {"ratio", ratio}};
    } else if (command == "volume") {
      auto l = counting::parse_locus(locus_text);
      auto est_kind = volume::parse_estimator(estimator_text);
      auto mode = surrogate(l);
      inputs = {{"locus", std::string(counting::to_string(l))},
                {"dmax", d},
                {"mode", std::string(volume::to_string(est_kind))},
                {"surrogate", std::string(euler::to_string(mode))}};
      auto est = volume::volume_estimate(l, d, est_kind, mode, nthreads);
      json series = json::array();
      Table t{{"D", "value", "sum"}, {}};
      for (const auto& cp : est.series) {
        series.push_back({{"D", cp.D}, {"value", cp.value}, {"sum", enc(cp.exact_sum)}});
        t.rows.push_back({std::to_string(cp.D), num(cp.value), enc.cell(cp.exact_sum)});
      }
      res.result = {{"exact_target", enc(est.exact_target)},
                    {"target_value", est.exact_target.to_double()},
                    {"value", est.value},
                    {"relative_error", est.relative_error},
                    {"extrapolated", est.extrapolated},
                    {"extrapolated_relative_error", est.extrapolated_relative_error},
                    {"checkpoints", series}};
      if (l == counting::Locus::P3 || l == counting::Locus::P4)
        res.result["quadratic_convention"] = enc(volume::convert_convention(l));
      res.table = t;
    } else if (command == "verify") {
      inputs = {{"suite", suite}};
      auto results = verify::run(suite, nthreads, &err);
      json arr = json::array();
      Table t{{"suite", "check", "passed", "elapsed_ms", "detail"}, {}};
      bool all = true;
      for (const auto& cr : results) {
        all = all && cr.passed;
        arr.push_back({{"suite", cr.suite}, {"check", cr.name}, {"passed", cr.passed},
                       {"detail", cr.detail}, {"elapsed_ms", cr.elapsed_ms}});
        t.rows.push_back({cr.suite, cr.name, cr.passed ? "true" : "false",
                          std::to_string(cr.elapsed_ms), cr.detail});
      }
      res.result = {{"passed", all}, {"checks", arr}};
      res.table = t;
      res.ok = all;
    } else {
      throw InternalError("unhandled command " + command);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  std::ostringstream text;
  if (csv) {
    if (res.table) {
      write_csv(text, *res.table);
    } else {
      write_csv(text, Table{{"command", "result"}, {{command, scalar_text(res.result)}}});
    }
  } else {
    json record = {{"command", command},
                   {"inputs", inputs},
                   {"result", res.result},
                   {"elapsed_ms", elapsed}};
    text << record.dump(2) << '\n';
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot open " << out_path << '\n';
      return 2;
    }
    f << text.str();
  } else {
    out << text.str();
  }
  return res.ok ? 0 : 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mvcount::cli
