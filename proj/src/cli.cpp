#include "cliff/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "cliff/errors.hpp"
#include "cliff/verify.hpp"

namespace cliff {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::logic_error&) {
      throw UsageError(what + ": not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError(what + ": not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != count) throw UsageError(what + " needs " + std::to_string(count) + " comma-separated numbers");
  return out;
}

TwoSpinor parse_spinor(const std::string& text, const std::string& what) {
  const auto v = parse_numbers(text, 4, what);
  return TwoSpinor(cplx(v[0], v[1]), cplx(v[2], v[3]));
}

Json vector_json(const FourVector& x) { return Json::array({x.x0, x.x1, x.x2, x.x3}); }

std::string vector_text(const FourVector& x) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << x.x0 << ", " << x.x1 << ", " << x.x2 << ", " << x.x3 << ")";
  return os.str();
}

struct Settings {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string output;
  std::string output_dir;
};

void require_not_csv(Format f, const std::string& cmd) {
  if (f == Format::csv) throw UsageError("csv output is not available for " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford algebra classification and mod-8 periodicity checks", "cliff"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with default options (flags override it)");

  Settings s;
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", s.seed, "seed for sampled checks");
  app.add_option("--output", s.output, "write output to this file");
  app.add_option("--output-dir", s.output_dir, "directory for relative --output paths");

  std::vector<int> cls_pq;
  int pmax = 7, qmax_sweep = 7;
  auto* classify = app.add_subcommand("classify", "classify Cl(p,q), or sweep 0..pmax x 0..qmax");
  classify->add_option("pq", cls_pq, "p q")->expected(0, 2);
  classify->add_option("--pmax", pmax, "sweep bound for p")->check(CLI::Range(0, 62));
  classify->add_option("--qmax", qmax_sweep, "sweep bound for q")->check(CLI::Range(0, 62));

  int ip = 0, iq = 0;
  auto* idem = app.add_subcommand("idempotent", "primitive idempotent, division ring and minimal ideal");
  idem->add_option("p", ip)->required()->check(CLI::Range(0, 12));
  idem->add_option("q", iq)->required()->check(CLI::Range(0, 12));

  int order = 1;
  auto* chess = app.add_subcommand("chessboard", "spinorial chessboard");
  chess->add_option("--order", order, "board order")->check(CLI::Range(1, 20));

  auto* clock = app.add_subcommand("clock", "the eight hours of the Brauer-Wall clock");

  int cycle_r = 0;
  auto* cycle = app.add_subcommand("cycle", "transitions of Brauer-Wall cycle r");
  cycle->add_option("r", cycle_r)->required()->check(CLI::Range(0, 1 << 20));

  std::string suite;
  VerifyOptions vopts;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--qmax", vopts.qmax, "theorem3: last q listed")->check(CLI::Range(24, 4096));
  verify->add_option("--nmax", vopts.nmax, "classification: largest p+q")->check(CLI::Range(0, 10));
  verify->add_option("--samples", vopts.samples, "numeric: samples per identity")->check(CLI::Range(1, 1000000));
  verify->add_flag("--serial", serial, "disable parallel sweeps");

  long long rk = 0, rr = 0;
  auto* rep = app.add_subcommand("rep", "representation τ_{k/2,r/2}");
  rep->add_option("k", rk)->required()->check(CLI::Range(0LL, 1000LL));
  rep->add_option("r", rr)->required()->check(CLI::Range(0LL, 1000LL));

  std::string cl, cld;
  auto* chain = app.add_subcommand("chain", "spin chain from τ_{l,l̇}");
  chain->add_option("l", cl)->required();
  chain->add_option("l_dot", cld)->required();

  int block_order = 1;
  auto* block = app.add_subcommand("block", "representation block");
  block->add_option("--order", block_order)->check(CLI::Range(1, 2));

  std::string xi = "1,0,0,0", xi_dot;
  auto* spinor = app.add_subcommand("spinor", "spinor to Minkowski vector");
  spinor->add_option("--xi", xi, "re1,im1,re2,im2");
  spinor->add_option("--xi-dot", xi_dot, "re1,im1,re2,im2 (default: conjugate of xi)");

  std::string tx = "1,0,0,0", tpi = "1,0,0,0";
  auto* twistor = app.add_subcommand("twistor", "twistor incidence and norm");
  twistor->add_option("--x", tx, "x0,x1,x2,x3");
  twistor->add_option("--pi", tpi, "re1,im1,re2,im2");

  std::string qa = "1,0", qb = "0,0", bloch;
  auto* qubit = app.add_subcommand("qubit", "density matrix and Bloch vector");
  qubit->add_option("--a", qa, "re,im");
  qubit->add_option("--b", qb, "re,im");
  qubit->add_option("--bloch", bloch, "P1,P2,P3 (mixed state input)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  std::ostringstream buf;
  int code = kExitOk;
  try {
    const Format format = parse_format(s.format);
    if (*classify) {
      if (cls_pq.size() == 1) throw UsageError("classify takes either no arguments or both p and q");
      if (cls_pq.size() == 2) {
        if (cls_pq[0] < 0 || cls_pq[1] < 0) throw UsageError("p and q must be non-negative");
        const AlgebraClass c = algebra_type(cls_pq[0], cls_pq[1]);
        if (format == Format::json) buf << dump_json(to_json(c));
        else if (format == Format::csv) buf << classification_csv({c});
        else buf << to_text(c) << "\n";
      } else {
        std::vector<Signature> grid;
        for (int p = 0; p <= pmax; ++p)
          for (int q = 0; q <= qmax_sweep; ++q) grid.emplace_back(p, q);
        std::vector<std::future<AlgebraClass>> jobs;
        for (const auto& g : grid) jobs.push_back(std::async(std::launch::async, algebra_type, g.p, g.q));
        std::vector<AlgebraClass> cells;
        for (auto& j : jobs) cells.push_back(j.get());
        if (format == Format::csv) buf << classification_csv(cells);
        else if (format == Format::json) {
          Json arr = Json::array();
          for (const auto& c : cells) arr.push_back(to_json(c));
          buf << dump_json(arr);
        } else
          for (const auto& c : cells) buf << to_text(c) << "\n";
      }
    } else if (*idem) {
      require_not_csv(format, "idempotent");
      const auto d = primitive_idempotent(ip, iq);
      const auto ring = division_ring_of(ip, iq);
      const auto ideal = minimal_left_ideal(ip, iq);
      if (format == Format::json) buf << dump_json(to_json(d, ring, ideal));
      else buf << to_text(d, ring, ideal);
    } else if (*chess) {
      require_not_csv(format, "chessboard");
      const Chessboard board(order);
      if (format == Format::json) buf << dump_json(to_json(board));
      else buf << to_text(board);
    } else if (*clock) {
      require_not_csv(format, "clock");
      if (format == Format::json) buf << dump_json(clock_json());
      else buf << clock_text();
    } else if (*cycle) {
      require_not_csv(format, "cycle");
      const auto ts = bw_cycle(cycle_r);
      if (format == Format::json) {
        Json arr = Json::array();
        for (const auto& t : ts) arr.push_back(transition_json(t));
        buf << dump_json({{"cycle", cycle_r}, {"transitions", arr}});
      } else
        for (const auto& t : ts) buf << transition_text(t) << "\n";
    } else if (*verify) {
      require_not_csv(format, "verify");
      vopts.seed = s.seed;
      vopts.parallel = !serial;
      const auto reports = run_suite(suite, vopts);
      bool all_ok = true;
      Json arr = Json::array();
      for (const auto& r : reports) {
        all_ok = all_ok && r.ok();
        if (format == Format::json) arr.push_back(to_json(r));
        else buf << to_text(r);
      }
      if (format == Format::json) buf << dump_json({{"seed", s.seed}, {"ok", all_ok}, {"suites", arr}});
      if (!all_ok) code = kExitVerificationFailure;
    } else if (*rep) {
      require_not_csv(format, "rep");
      const RepLabel label = rep_label(rk, rr);
      if (format == Format::json) buf << dump_json(to_json(label));
      else buf << to_text(label);
    } else if (*chain) {
      require_not_csv(format, "chain");
      const SpinChain sc = spin_chain(HalfInt::parse(cl), HalfInt::parse(cld));
      if (format == Format::json) buf << dump_json(to_json(sc));
      else buf << to_text(sc);
    } else if (*block) {
      require_not_csv(format, "block");
      const auto b = representation_block(block_order);
      if (format == Format::json) buf << dump_json(to_json(b));
      else buf << to_text(b);
    } else if (*spinor) {
      require_not_csv(format, "spinor");
      const TwoSpinor a = parse_spinor(xi, "--xi");
      const TwoSpinor ad = xi_dot.empty() ? TwoSpinor(a.conjugate()) : parse_spinor(xi_dot, "--xi-dot");
      const Eigen::Vector4cd x = spinor_outer(a, ad);
      const bool real = x.imag().cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + x.norm());
      if (format == Format::json) {
        Json j{{"xi", spinor_json(a)}, {"xi_dot", spinor_json(ad)}, {"real", real}};
        Json comps = Json::array();
        for (int i = 0; i < 4; ++i) comps.push_back(complex_json(x(i)));
        j["x"] = comps;
        if (real) {
          const FourVector v = real_four_vector(x);
          j["interval"] = v.interval();
          j["X"] = matrix_json(vector_to_herm(v));
        }
        buf << dump_json(j);
      } else {
        buf << "x = (" << complex_text(x(0)) << ", " << complex_text(x(1)) << ", " << complex_text(x(2)) << ", "
            << complex_text(x(3)) << ")\n";
        if (real) {
          const FourVector v = real_four_vector(x);
          buf << "X = " << matrix_text(vector_to_herm(v)) << "\nS² = " << complex_text(v.interval()) << "\n";
        }
      }
    } else if (*twistor) {
      require_not_csv(format, "twistor");
      const auto xv = parse_numbers(tx, 4, "--x");
      const FourVector x{xv[0], xv[1], xv[2], xv[3]};
      const TwoSpinor pi = parse_spinor(tpi, "--pi");
      const Twistor z{twistor_incidence(x, pi), pi};
      const FormSignature sig = twistor_signature();
      if (format == Format::json)
        buf << dump_json({{"x", vector_json(x)},
                          {"pi", spinor_json(pi)},
                          {"omega", spinor_json(z.omega)},
                          {"norm", twistor_norm(z)},
                          {"signature", {sig.positive, sig.negative}}});
      else
        buf << "x = " << vector_text(x) << "\nω = (" << complex_text(z.omega(0)) << ", " << complex_text(z.omega(1))
            << ")\nnorm = " << complex_text(twistor_norm(z)) << "\nsignature (" << sig.positive << "," << sig.negative
            << ")\n";
    } else if (*qubit) {
      require_not_csv(format, "qubit");
      Mat2 rho;
      if (!bloch.empty()) {
        const auto P = parse_numbers(bloch, 3, "--bloch");
        rho = density_from_bloch(Eigen::Vector3d(P[0], P[1], P[2]));
      } else {
        const auto a = parse_numbers(qa, 2, "--a");
        const auto b = parse_numbers(qb, 2, "--b");
        rho = qubit_density(cplx(a[0], a[1]), cplx(b[0], b[1]));
      }
      const Eigen::Vector3d P = bloch_vector(rho);
      const double pur = purity(rho);
      const std::string state = std::abs(P.norm() - 1.0) <= 1e-9 ? "pure" : "mixed";
      if (format == Format::json)
        buf << dump_json({{"rho", matrix_json(rho)}, {"bloch", {P(0), P(1), P(2)}}, {"purity", pur}, {"state", state}});
      else
        buf << "ρ = " << matrix_text(rho) << "\nP = (" << complex_text(P(0)) << ", " << complex_text(P(1)) << ", "
            << complex_text(P(2)) << ")\npurity = " << complex_text(pur) << " (" << state << ")\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!s.output.empty()) {
    std::filesystem::path path(s.output);
    if (!s.output_dir.empty() && path.is_relative()) path = std::filesystem::path(s.output_dir) / path;
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << path.string() << "\n";
      return kExitUsage;
    }
    file << buf.str();
  } else {
    out << buf.str();
  }
  return code;
}

}  // namespace cliff
