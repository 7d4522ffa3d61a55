#include "qmf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qmf/arith.hpp"
#include "qmf/derham.hpp"
#include "qmf/eisenstein.hpp"
#include "qmf/errors.hpp"
#include "qmf/gaussmanin.hpp"
#include "qmf/genfun.hpp"
#include "qmf/io.hpp"
#include "qmf/periods.hpp"
#include "qmf/theta.hpp"
#include "qmf/weierstrass.hpp"

namespace qmf {

namespace {

using nlohmann::json;

struct RunConfig {
  long order = 10;
  long prec = 256;
  bool json = false;
  std::string cache_dir;
};

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

// "0.25", "-3/4", "2"
Rational parse_decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational::parse(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+") throw ParseError("not a number: " + text);
  std::string den = "1" + std::string(frac, '0');
  return Rational::parse(digits + "/" + den);
}

int digits_for(long prec) { return static_cast<int>(std::max(10L, prec * 30103 / 100000)); }

Check from_identity(const SeriesIdentity& id) { return {id.name, id.holds(), id.str()}; }

Check residual_check(const std::string& name, const QSeries& r) {
  return from_identity(make_identity(name, r, QSeries::zero(r.N(), r.d())));
}

std::vector<Check> verify_ramanujan(long N) {
  std::vector<Check> out;
  const RamanujanSeries t = solve_ramanujan(N);
  const auto res = ramanujan_residual(t);
  for (int i = 0; i < 3; ++i) out.push_back(residual_check("ramanujan residual " + std::to_string(i + 1), res[static_cast<std::size_t>(i)]));
  const std::array<QSeries, 3> rec = {t.t1 * Rational(12), t.t2 * Rational(12), t.t3 * Rational(216)};
  const PeriodEisenstein per = eisenstein_via_periods(N);
  const std::array<QSeries, 3> via = {per.e2.truncate(N), per.e4.truncate(N), per.e6.truncate(N)};
  for (int k = 1; k <= 3; ++k) {
    const std::string E = "E" + std::to_string(2 * k);
    const QSeries div = eisenstein_divisor(k, N);
    const auto i = static_cast<std::size_t>(k - 1);
    out.push_back(from_identity(make_identity(E + " recursion = divisor sums", rec[i], div)));
    out.push_back(from_identity(make_identity(E + " periods = divisor sums", via[i], div)));
  }
  return out;
}

std::vector<Check> verify_halphen(long N) {
  std::vector<Check> out;
  const HalphenTriple u = halphen_solution(N);
  const auto r = halphen_residual(u);
  for (int i = 0; i < 3; ++i) out.push_back(residual_check("halphen residual " + std::to_string(i + 1), r[static_cast<std::size_t>(i)]));
  out.push_back(residual_check("darboux residual", darboux_residual(u)));
  return out;
}

std::vector<Check> verify_theta_eisenstein(long N) {
  std::vector<Check> out;
  for (const auto& id : theta_eisenstein_identities(N)) out.push_back(from_identity(id));
  return out;
}

std::vector<Check> verify_delta_product(long N) { return {from_identity(delta_product_report(N))}; }

std::vector<Check> verify_picard_fuchs(long N) {
  std::vector<Check> out;
  out.push_back(residual_check("picard-fuchs F(1/6,5/6,1)", picard_fuchs_residual(PFKind::FirstKind, N)));
  out.push_back(residual_check("picard-fuchs F(-1/6,7/6,1)", picard_fuchs_residual(PFKind::SecondKind, N)));
  const Rational f1 = f_recursion(1)[1];
  const bool ok = f1 == Rational(13, 18);
  out.push_back({"f_1 = 13/18", ok, ok ? "f_1 = 13/18: ok" : "f_1 = 13/18: differs: lhs=" + f1.str() + " rhs=13/18"});
  return out;
}

std::vector<Check> verify_ohyama(long N) {
  std::vector<Check> out;
  const OhyamaEtaReport rep = ohyama_eta_series(N);
  for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
    const CSeries& r = rep.residuals[i];
    const std::string name = "ohyama eta residual " + std::to_string(i + 1);
    if (r.is_known_zero()) {
      out.push_back({name, true, name + ": ok"});
    } else {
      const long v = r.valuation();
      out.push_back({name, false, name + ": differs at q^" + Rational(v, r.d()).str() + ": lhs=" + r.coeff(v).str() + " rhs=0"});
    }
  }
  const OhyamaReport t = ohyama_tangency_check();
  const bool ok = t.kind != OhyamaReport::Kind::NotTangent;
  out.push_back({"ohyama dF(V) in (F)", ok, ok ? "ohyama dF(V) in (F): ok" : "ohyama dF(V) in (F): " + t.str()});
  return out;
}

class Runner {
 public:
  Runner(RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  int series(const std::string& key, const std::function<QSeries()>& make) {
    QSeries s;
    if (!cfg_.cache_dir.empty()) {
      namespace fs = std::filesystem;
      const fs::path path = fs::path(cfg_.cache_dir) / (key + "-o" + std::to_string(cfg_.order) + ".json");
      if (fs::exists(path)) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        s = series_from_json(buf.str());
      } else {
        s = make();
        fs::create_directories(path.parent_path());
        std::ofstream(path) << to_json(s) << "\n";
      }
    } else {
      s = make();
    }
    out_ << (cfg_.json ? to_json(s) : pretty(s)) << "\n";
    return 0;
  }

  int checks(const std::vector<Check>& cs) {
    bool all = true;
    json arr = json::array();
    for (const auto& c : cs) {
      all = all && c.ok;
      if (cfg_.json) arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      else out_ << c.detail << "\n";
    }
    if (cfg_.json) out_ << arr.dump() << "\n";
    return all ? 0 : 1;
  }

  int text(const json& j, const std::string& plain) {
    out_ << (cfg_.json ? j.dump() : plain) << "\n";
    return 0;
  }

 private:
  RunConfig& cfg_;
  std::ostream& out_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Runner run(cfg, out);
  int code = 0;
  std::function<int()> action;

  CLI::App app{"exact q-expansions and period checks", "qmf"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--order", cfg.order, "series truncation order")->check(CLI::PositiveNumber);
  app.add_option("--prec", cfg.prec, "working precision in bits")->check(CLI::Range(64L, 1L << 20));
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--cache-dir", cfg.cache_dir, "directory for cached series");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<int()> f) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->callback([&action, f] { action = f; });
    return sub;
  };
  const long& N = cfg.order;

  // qexp
  CLI::App* qexp = app.add_subcommand("qexp", "q-expansions")->require_subcommand(1);
  int weight = 2;
  leaf(qexp, "eisenstein", "E2, E4 or E6 from the Ramanujan recursion", [&] {
    return run.series("qexp-eisenstein-k" + std::to_string(weight), [&] {
      const RamanujanSeries t = solve_ramanujan(N);
      return weight == 2 ? t.t1 * Rational(12) : weight == 4 ? t.t2 * Rational(12) : t.t3 * Rational(216);
    });
  })->add_option("--k", weight, "weight")->check(CLI::IsMember({2, 4, 6}));
  int which = 3;
  leaf(qexp, "theta", "theta constant", [&] {
    return run.series("qexp-theta-" + std::to_string(which), [&] { return theta_constant(which, N); });
  })->add_option("--which", which, "2, 3 or 4")->check(CLI::IsMember({2, 3, 4}));
  leaf(qexp, "eta", "Dedekind eta", [&] { return run.series("qexp-eta", [&] { return dedekind_eta(N); }); });

  // derham
  CLI::App* derham = app.add_subcommand("derham", "de Rham reduction")->require_subcommand(1);
  std::string poly_text;
  leaf(derham, "reduce", "class of C dx/y in the basis dx/y, x dx/y", [&] {
    const CohomClass c = reduce(Poly::parse(poly_text));
    return run.text({{"alpha", c.alpha.str()}, {"beta", c.beta.str()}}, c.str());
  })->add_option("poly", poly_text, "polynomial in x, t1, t2, t3")->required();

  // gm
  CLI::App* gm = app.add_subcommand("gm", "Gauss-Manin connection")->require_subcommand(1);
  std::string chart = "ramanujan";
  auto chart_opt = [&](CLI::App* sub) {
    sub->add_option("--chart", chart, "ramanujan or halphen")->check(CLI::IsMember({"ramanujan", "halphen"}));
  };
  chart_opt(leaf(gm, "matrix", "connection matrix", [&] {
    const ConnectionMatrix A = chart == "ramanujan" ? gm_matrix() : halphen_pullback().A;
    json j;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) j["A" + std::to_string(a + 1) + std::to_string(b + 1)] = A[a][b].normalized().str();
    }
    std::string s = to_string(A);
    s.pop_back();
    return run.text(j, s);
  }));
  chart_opt(leaf(gm, "field", "the vector field solving the connection", [&] {
    const VectorField<Rational> V = chart == "ramanujan" ? solve_vector_field(gm_matrix()) : halphen_pullback().H;
    json j = json::array();
    std::string s;
    for (std::size_t i = 0; i < V.size(); ++i) {
      j.push_back(V[i].str());
      s += (i ? "\n" : "") + std::string("dt") + std::to_string(i + 1) + " = " + V[i].str();
    }
    return run.text(j, s);
  }));

  // verify
  CLI::App* verify = app.add_subcommand("verify", "identity checks")->require_subcommand(1);
  const std::vector<std::pair<std::string, std::function<std::vector<Check>(long)>>> suites = {
      {"ramanujan", verify_ramanujan},     {"halphen", verify_halphen},           {"theta-eisenstein", verify_theta_eisenstein},
      {"delta-product", verify_delta_product}, {"picard-fuchs", verify_picard_fuchs}, {"ohyama", verify_ohyama}};
  for (const auto& [name, fn] : suites) {
    auto f = fn;
    leaf(verify, name, "verify " + name, [&run, &N, f] { return run.checks(f(N)); });
  }
  leaf(verify, "all", "every identity suite", [&] {
    std::vector<Check> all;
    for (const auto& s : suites) {
      auto part = s.second(N);
      all.insert(all.end(), part.begin(), part.end());
    }
    return run.checks(all);
  });

  // genfun
  CLI::App* genfun = app.add_subcommand("genfun", "generating functions")->require_subcommand(1);
  int genus = 2;
  leaf(genfun, "j", "j-invariant", [&] { return run.series("genfun-j", [&] { return j_function(N); }); });
  leaf(genfun, "tau", "Ramanujan tau", [&] {
    return run.series("genfun-tau", [&] {
      std::vector<Rational> c;
      for (const BigInt& v : tau(N)) c.emplace_back(v);
      return QSeries(1, 1, N, std::move(c));
    });
  });
  leaf(genfun, "dijkgraaf", "F_g of covers of an elliptic curve", [&] {
    return run.series("genfun-dijkgraaf-g" + std::to_string(genus), [&] { return dijkgraaf_F(genus, N); });
  })->add_option("--g", genus, "2 or 3")->check(CLI::IsMember({2, 3}));
  leaf(genfun, "yau-zaslow", "rational curves on K3", [&] { return run.series("genfun-yau-zaslow", [&] { return yau_zaslow(N); }); });
  int bl_genus = 1;
  leaf(genfun, "bryan-leung", "genus-g counts on K3", [&] {
    return run.series("genfun-bryan-leung-g" + std::to_string(bl_genus), [&] { return bryan_leung(bl_genus, N); });
  })->add_option("--g", bl_genus, "genus")->check(CLI::Range(0, 64));
  leaf(genfun, "eta11", "eta(q)^2 eta(q^11)^2", [&] { return run.series("genfun-eta11", [&] { return modularity_eta_product(N); }); });

  // weierstrass
  CLI::App* weier = app.add_subcommand("weierstrass", "Weierstrass expansion")->require_subcommand(1);
  int gk = 1;
  leaf(weier, "gk", "coefficient of z^(2k) in x", [&] {
    const QuasiModularPoly g = eisenstein_modular(gk);
    return run.text({{"k", gk}, {"weight", g.weight}, {"poly", g.p.str()}}, g.p.str());
  })->add_option("--k", gk, "k >= 1")->check(CLI::Range(1, 200));

  // ff
  CLI::App* ff = app.add_subcommand("ff", "finite fields")->require_subcommand(1);
  std::string curve = "y^2+y=x^3-x^2";
  long p = 5;
  int fk = 10;
  CLI::App* count = leaf(ff, "count", "affine points and a_p", [&] {
    const WeierstrassCurve E = WeierstrassCurve::parse(curve);
    const PointCount c = count_points(E, p);
    return run.text({{"curve", E.str()}, {"p", p}, {"affine_points", c.Np}, {"a_p", c.ap}},
                    "affine points: " + std::to_string(c.Np) + "\na_p: " + std::to_string(c.ap));
  });
  count->add_option("--curve", curve, "Weierstrass equation");
  count->add_option("--p", p, "prime")->required();
  CLI::App* sigma = leaf(ff, "sigma", "Aut-weighted sum of U_k(a_p)", [&] {
    const Rational s = sigma_k(p, fk);
    return run.text({{"p", p}, {"k", fk}, {"sigma", s.str()}}, s.str());
  });
  sigma->add_option("--p", p, "prime >= 5")->required();
  sigma->add_option("--k", fk, "even k");

  // periods
  CLI::App* periods = app.add_subcommand("periods", "numeric periods")->require_subcommand(1);
  const auto P = [&] { return static_cast<mpfr_prec_t>(cfg.prec); };
  std::string tau_text = "0.25";
  leaf(periods, "schwarz", "p(tau) = i F(1-tau)/F(tau)", [&] {
    const auto comma = tau_text.find(',');
    const BigFloat re(parse_decimal(tau_text.substr(0, comma)), P());
    const BigFloat im = comma == std::string::npos ? BigFloat(P()) : BigFloat(parse_decimal(tau_text.substr(comma + 1)), P());
    const BigComplex v = schwarz_map(BigComplex(re, im), P());
    const int dg = digits_for(cfg.prec);
    return run.text({{"tau", tau_text}, {"p_re", v.real().str(dg)}, {"p_im", v.imag().str(dg)}}, v.str(dg));
  })->add_option("--tau", tau_text, "re or re,im");
  std::string psi_text = "0";
  leaf(periods, "legendre", "y11 y22 - y12 y21 against 2 pi i", [&] {
    const LegendreReport r = legendre_check(parse_decimal(psi_text), P());
    const bool ok = r.deviation < BigFloat(1e-50, P()) && r.im_ratio.sign() > 0;
    const int dg = digits_for(cfg.prec);
    return run.text({{"psi", psi_text}, {"lhs_re", r.lhs.real().str(dg)}, {"lhs_im", r.lhs.imag().str(dg)},
                     {"deviation", r.deviation.str(6)}, {"conj_deviation", r.conj_deviation.str(6)},
                     {"im_ratio", r.im_ratio.str(dg)}, {"ok", ok}},
                    "lhs = " + r.lhs.str(dg) + "\n|lhs - 2*pi*i| = " + r.deviation.str(6) + "\n|lhs + 2*pi*i| = " +
                        r.conj_deviation.str(6) + "\nIm(y11/y12) = " + r.im_ratio.str(dg) + "\nlegendre: " + (ok ? "ok" : "mismatch")) +
           (ok ? 0 : 1);
  })->add_option("--psi", psi_text, "psi in (-2, 2)");
  leaf(periods, "aconst", "limit defining a, and a0", [&] {
    const AConstantReport r = a_constant_check(P());
    const BigFloat a0 = a0_quadrature(P());
    const BigFloat a0_ref = pi(P()) / sqrt(BigFloat(3L, P()));
    const bool ok = r.deviation < BigFloat(Rational(1, 432), P()) * BigFloat(1e-4, P()) && abs(a0 - a0_ref) < BigFloat(1e-30, P());
    json j;
    std::string s;
    for (const auto& smp : r.samples) {
      j["samples"].push_back({{"tau", "1e-" + std::to_string(smp.k)}, {"Im V", smp.V.imag().str(30)}, {"a", smp.a.str(30)}});
      s += "tau = 1e-" + std::to_string(smp.k) + ": Im V = " + smp.V.imag().str(30) + ", a = " + smp.a.str(30) + "\n";
    }
    j["a_extrapolated"] = r.a_extrapolated.str(30);
    j["deviation"] = r.deviation.str(6);
    j["a0"] = a0.str(40);
    j["ok"] = ok;
    s += "extrapolated a = " + r.a_extrapolated.str(30) + ", |a - 1/432| = " + r.deviation.str(6) + "\na0 = " + a0.str(40) +
         ", |a0 - pi/sqrt(3)| = " + abs(a0 - a0_ref).str(6) + "\naconst: " + (ok ? "ok" : "mismatch");
    return run.text(j, s) + (ok ? 0 : 1);
  });
  std::string emit = "csv";
  int samples = 25;
  CLI::App* boundary = leaf(periods, "boundary", "Schwarz images of the boundary arcs", [&] {
    out << boundary_csv(schwarz_boundary(samples, P()));
    return 0;
  });
  boundary->add_option("--emit", emit, "output format")->check(CLI::IsMember({"csv"}));
  boundary->add_option("--samples", samples, "points per family")->check(CLI::Range(2, 100000));

  std::vector<const char*> argv = {"qmf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << "usage error: no command\n";
    return 2;
  }
  try {
    code = action();
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, out, err);
}

}  // namespace qmf
