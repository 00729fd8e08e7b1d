// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "block_fixtures.hpp"
#include "cliff/brauer_wall.hpp"
#include "cliff/classify.hpp"
#include "cliff/cli.hpp"
#include "cliff/spin_reps.hpp"
#include "cliff/spinor.hpp"
#include "cliff/tensor_iso.hpp"

using namespace cliff;

namespace {

constexpr double kClassifySeconds = 60.0;
constexpr double kChevalleySeconds = 30.0;
constexpr double kNumericSeconds = 5.0;
constexpr double kFractalTolerance = 1e-4;
constexpr int kNumericSamples = 1000;
constexpr int kBlockSamples = 100;
constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run(args, out, err);
  return out.str();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << " s";
  return o.str();
}

Outcome classification() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int count = 0;
  for (int p = 0; p <= 9; ++p)
    for (int q = 0; p + q <= 9; ++q) {
      ++count;
      o.require(division_ring_of(p, q).ring == algebra_type(p, q).ring,
                "ring mismatch at Cl(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  const double s = seconds_since(t0);
  o.require(count == 55, "expected 55 algebras");
  o.require(s <= kClassifySeconds, "took " + fmt_seconds(s));
  if (o.ok) o.detail = "55 algebras in " + fmt_seconds(s);
  return o;
}

Outcome radon_hurwitz_values() {
  Outcome o;
  const std::vector<long long> base{0, 1, 2, 2, 3, 3, 3, 3};
  for (int i = 0; i < 8; ++i) o.require(radon_hurwitz(i) == base[i], "r_" + std::to_string(i));
  for (int i = -16; i <= 64; ++i)
    o.require(radon_hurwitz(i + 8) == radon_hurwitz(i) + 4, "recurrence at i=" + std::to_string(i));
  return o;
}

Outcome theorem3() {
  Outcome o;
  int code = -1;
  const std::string out = run_cli({"verify", "theorem3", "--qmax", "24"}, code);
  o.require(code == 0, "cli exit " + std::to_string(code));
  for (const char* seq : {"0,0,0,1,1,2,3,4,4", "4,4,5,5,6,7,8,8", "8,8,9,9,10,11,12,12"})
    o.require(out.find(seq) != std::string::npos, std::string("missing sequence ") + seq);
  const auto rep = verify_theorem3(64);
  o.require(rep.ok(), "recurrence fails");
  for (int q = 0; q <= 64; ++q) o.require(rep.k[q + 8] == rep.k[q] + 4, "k(0," + std::to_string(q + 8) + ")");
  return o;
}

Outcome cycles() {
  Outcome o;
  const std::vector<Ring> octet{Ring::C, Ring::H, Ring::HH, Ring::H, Ring::C, Ring::R, Ring::RR, Ring::R};
  for (int r = 0; r <= 7; ++r) {
    const auto c = bw_cycle(r);
    o.require(c.size() == 8 && c.front().from.ring == Ring::R, "cycle " + std::to_string(r) + " start");
    std::vector<Ring> got;
    for (const auto& t : c) got.push_back(t.to.ring);
    o.require(got == octet, "cycle " + std::to_string(r) + " octet");
  }
  o.require(std::abs(fractal_dimension() - 1.9924) <= kFractalTolerance, "fractal dimension");
  return o;
}

Outcome chevalley() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int count = 0;
  for (int na = 0; na <= 3; ++na)
    for (int pa = 0; pa <= na; ++pa)
      for (int nb = 0; nb <= 3; ++nb)
        for (int pb = 0; pb <= nb; ++pb) {
          const auto pr = graded_tensor_check(Signature(pa, na - pa), Signature(pb, nb - pb));
          ++count;
          o.require(pr.ok() && pr.relations_ok && pr.rank == (std::size_t{1} << (na + nb)), pr.claim + ": " + pr.failure);
        }
  const double s = seconds_since(t0);
  o.require(s <= kChevalleySeconds, "took " + fmt_seconds(s));
  if (o.ok) o.detail = std::to_string(count) + " pairs in " + fmt_seconds(s);
  return o;
}

Outcome karoubi() {
  Outcome o;
  auto a = karoubi_check(Signature(1, 1), Signature(0, 2));
  o.require(a.ok() && a.target == Signature(1, 3), "Cl(1,1)⊗Cl(0,2)");
  auto b = karoubi_check(Signature(1, 1), Signature(2, 0));
  o.require(b.ok() && b.target == Signature(3, 1), "Cl(1,1)⊗Cl(2,0)");
  auto c = karoubi_check(Signature(0, 2), Signature(1, 1));
  o.require(c.ok() && c.target == Signature(1, 3), "Cl(0,2)⊗Cl(1,1)");
  return o;
}

Outcome even_iso() {
  Outcome o;
  o.require(even_iso_check(1, 3, Signature(3, 0)).ok(), "Cl+(1,3)");
  o.require(even_iso_check(4, 1, Signature(1, 3)).ok(), "Cl+(4,1)");
  o.require(even_iso_check(2, 4, Signature(4, 1)).ok(), "Cl+(2,4)");
  int count = 0;
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      if (p >= 1) {
        const auto pr = even_iso_check(p, q, EvenIsoKind::isom1);
        o.require(pr.ok() && pr.target == Signature(q, p - 1), pr.claim);
        ++count;
      }
      if (q >= 1) {
        const auto pr = even_iso_check(p, q, EvenIsoKind::isom2);
        o.require(pr.ok() && pr.target == Signature(p, q - 1), pr.claim);
        ++count;
      }
    }
  if (o.ok) o.detail = std::to_string(count) + " witnesses";
  return o;
}

Outcome phi_psi() {
  Outcome o;
  const Signature t(1, 3);
  const auto f = phi_psi_factorization(t, Signature(1, 1));
  o.require(f.phi == RealMultivector(t, Blade::from_indices({1, 2, 3})), "phi");
  o.require(f.psi == RealMultivector(t, Blade::from_indices({1, 2, 4})), "psi");
  for (int i = 1; i <= 2; ++i) {
    const auto e = RealMultivector::generator(t, i);
    o.require(commutes(f.phi, e) && commutes(f.psi, e), "commutation with e" + std::to_string(i));
  }
  o.require(f.phi_sq == -1 && f.psi_sq == -1, "squares");
  o.require(f.span_rank == 16, "span rank");
  std::mt19937_64 rng(kSeed);
  const auto rep = block_matrix_check(1, 3, kBlockSamples, rng);
  o.require(rep.passed == kBlockSamples, "block matrix " + std::to_string(rep.passed) + "/" + std::to_string(kBlockSamples));
  if (o.ok) o.detail = "block matrix 100/100";
  return o;
}

long long stars_and_bars(long long n) {
  // Multisets of size n over two symbols.
  std::set<long long> ones;
  for (long long w = 0; w < (1LL << n); ++w) ones.insert(std::popcount(static_cast<unsigned long long>(w)));
  return static_cast<long long>(ones.size());
}

Outcome representations() {
  Outcome o;
  for (long long k = 0; k <= 12; ++k)
    for (long long r = 0; r <= 12; ++r)
      o.require(rep_label(k, r).degree() == stars_and_bars(k) * stars_and_bars(r), "degree");

  auto check_nodes = [&](const std::vector<BlockNode>& nodes, const RepresentationBlock& block) {
    for (const auto& n : nodes) {
      RepLabel label;
      label.l = HalfInt::parse(n.l);
      label.l_dot = HalfInt::parse(n.l_dot);
      label.field = n.field == 'r' ? RepField::real : RepField::quaternionic;
      label.quotient = n.quotient;
      const std::string id = std::string("node (") + n.l + "," + n.l_dot + ")";
      o.require(rep_field(label.l, label.l_dot) == label.field, id + " field");
      o.require(block.contains(label), id + " missing from block");
    }
  };
  check_nodes(kFirstBlockNodes, representation_block(1));
  check_nodes(kSecondBlockNodes, representation_block(2));

  auto names = [](int c) {
    std::vector<std::string> out;
    for (const auto& l : bw_rep_cycle(c)) out.push_back(l.name());
    return out;
  };
  o.require(names(1) == std::vector<std::string>{"τ^r_{0,0}", "^ετ^r_{0,0}", "τ^q_{0,1/2}", "^ετ^q_{0,1/2}", "τ^q_{0,1}",
                                                 "^ετ^q_{0,1}", "τ^r_{0,3/2}", "^ετ^r_{0,3/2}", "τ^r_{0,2}"},
            "cycle 1");
  const auto c2 = names(2);
  o.require(c2[7] == "^ετ^r_{0,7/2}" && c2[8] == "τ^r_{0,4}", "cycle 2");
  const auto c8 = names(8);
  o.require(c8[7] == "^ετ^r_{0,31/2}" && c8[8] == "τ^r_{0,16}", "cycle 8");

  for (long long k = 0; k <= 32; ++k)
    for (long long r = 0; r <= 32; ++r) {
      const HalfInt l = HalfInt::from_twice(k), ld = HalfInt::from_twice(r), two = HalfInt::from_twice(4);
      o.require(rep_field(l + two, ld) == rep_field(l, ld) && rep_field(l, ld + two) == rep_field(l, ld), "periodicity");
    }
  if (o.ok)
    o.detail = std::to_string(kFirstBlockNodes.size() + kSecondBlockNodes.size()) + " tagged nodes";
  return o;
}

Outcome quotients() {
  Outcome o;
  for (int q : {1, 3, 5, 7}) {
    const auto r = quotient_structure(q);
    const std::size_t half = std::size_t{1} << (q - 1);
    o.require(r.idempotent && r.orthogonal && r.complete && r.central, "λ± at q=" + std::to_string(q));
    o.require(r.kernel_dim == half && r.quotient_dim == half, "dimensions at q=" + std::to_string(q));
    o.require(r.ok(), "report at q=" + std::to_string(q));
  }
  return o;
}

Outcome numeric() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  const auto checks = numeric_property_checks(kNumericSamples, rng);
  const double s = seconds_since(t0);
  std::set<std::string> seen;
  for (const auto& c : checks) {
    seen.insert(c.name);
    o.require(c.samples == kNumericSamples && c.ok(), c.name + " " + std::to_string(c.passed) + "/" + std::to_string(c.samples));
  }
  o.require(checks.size() >= 5, "expected five identities");
  o.require(s <= kNumericSeconds, "took " + fmt_seconds(s));
  if (o.ok) o.detail = std::to_string(checks.size()) + " identities in " + fmt_seconds(s);
  return o;
}

Outcome determinism() {
  Outcome o;
  int c1 = -1, c2 = -1;
  const std::vector<std::string> args{"verify", "all", "--seed", "1234", "--format", "json"};
  const std::string a = run_cli(args, c1);
  const std::string b = run_cli(args, c2);
  o.require(c1 == 0 && c2 == 0, "verify all exit codes " + std::to_string(c1) + "," + std::to_string(c2));
  o.require(!a.empty() && a == b, "reports differ");
  if (o.ok) o.detail = std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"classification oracle agreement", classification},
      {"Radon-Hurwitz numbers", radon_hurwitz_values},
      {"idempotent exponent sequences", theorem3},
      {"Brauer-Wall cycles and fractal dimension", cycles},
      {"Chevalley witnesses", chevalley},
      {"Karoubi witnesses", karoubi},
      {"even-subalgebra isomorphisms", even_iso},
      {"phi/psi factorization and block matrices", phi_psi},
      {"representation layer", representations},
      {"quotient structure", quotients},
      {"numeric layer", numeric},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
