#include "cliff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cliff/errors.hpp"

namespace cliff {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Runs f over items, concurrently when allowed, returning results in item order.
template <typename T, typename F>
auto ordered_map(const std::vector<T>& items, bool parallel, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  if (!parallel) {
    for (const auto& it : items) out.push_back(f(it));
    return out;
  }
  std::vector<std::future<R>> futures;
  for (const auto& it : items) futures.push_back(std::async(std::launch::async, f, it));
  for (auto& fu : futures) out.push_back(fu.get());
  return out;
}

std::vector<Signature> small_signatures(int nmax) {
  std::vector<Signature> out;
  for (int n = 0; n <= nmax; ++n)
    for (int p = 0; p <= n; ++p) out.emplace_back(p, n - p);
  return out;
}

SuiteReport classification_suite(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.suite = "classification";
  struct Row {
    AlgebraClass cls;
    DivisionRingData ring;
    long long k_search = 0;
    std::size_t ideal = 0;
  };
  const auto sigs = small_signatures(opts.nmax);
  const auto rows = ordered_map(sigs, opts.parallel, [](const Signature& s) {
    Row r;
    r.cls = algebra_type(s.p, s.q);
    r.ring = division_ring_of(s.p, s.q);
    r.k_search = primitive_idempotent(s.p, s.q).k;
    r.ideal = static_cast<std::size_t>(minimal_left_ideal(s.p, s.q).dim);
    return r;
  });
  int agree = 0;
  Json table = Json::array();
  for (const Row& r : rows) {
    const bool ring_ok = r.ring.ring == r.cls.ring;
    const bool k_ok = r.k_search == idempotent_factor_count(r.cls.p, r.cls.q);
    const std::size_t dim = std::size_t{1} << r.cls.n();
    const bool ideal_ok = r.ideal << r.k_search == dim;
    if (ring_ok && k_ok && ideal_ok) ++agree;
    else
      rep.add("Cl(" + std::to_string(r.cls.p) + "," + std::to_string(r.cls.q) + ")", false,
              "table " + ring_name(r.cls.ring) + ", brute force " + ring_name(r.ring.ring));
    table.push_back({{"p", r.cls.p}, {"q", r.cls.q}, {"ring", ring_name(r.ring.ring)}, {"dim_fKf", r.ring.dim_fkf},
                     {"k", r.k_search}, {"ideal_dim", r.ideal}});
  }
  rep.add("division ring agrees with the mod-8 table", agree == static_cast<int>(rows.size()),
          std::to_string(agree) + "/" + std::to_string(rows.size()) + " algebras with p+q <= " + std::to_string(opts.nmax));
  rep.data["algebras"] = table;
  return rep;
}

SuiteReport radon_hurwitz_suite() {
  SuiteReport rep;
  rep.suite = "radon-hurwitz";
  const std::vector<long long> base{0, 1, 2, 2, 3, 3, 3, 3};
  std::vector<long long> got;
  for (int i = 0; i < 8; ++i) got.push_back(radon_hurwitz(i));
  rep.add("r_0..r_7", got == base, join_sequence(got));
  bool rec = true;
  for (int i = -16; i <= 64; ++i) rec = rec && radon_hurwitz(i + 8) == radon_hurwitz(i) + 4;
  rep.add("r_{i+8} = r_i + 4 for -16 <= i <= 64", rec);
  return rep;
}

SuiteReport theorem3_suite(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.suite = "theorem3";
  const Theorem3Report t = verify_theorem3(opts.qmax);
  Json cycles = Json::array();
  for (std::size_t c = 0; c < t.cycles.size(); ++c) {
    cycles.push_back(t.cycles[c]);
    rep.add("k sequence, cycle " + std::to_string(c + 1), true, join_sequence(t.cycles[c]));
  }
  const int span = std::max(opts.qmax, 64);
  const Theorem3Report wide = verify_theorem3(span);
  std::string bad;
  for (int q : wide.failures) bad += " " + std::to_string(q);
  rep.add("k(0,q+8) = k(0,q) + 4 for q <= " + std::to_string(span), wide.ok(), bad.empty() ? "" : "fails at" + bad);
  // The closed form agrees with the brute-force idempotent search where it is cheap.
  bool brute = true;
  for (int q = 0; q <= 9; ++q) brute = brute && primitive_idempotent(0, q).k == idempotent_factor_count(0, q);
  rep.add("k(0,q) matches idempotent search for q <= 9", brute);
  rep.data["cycles"] = cycles;
  rep.data["qmax"] = opts.qmax;
  return rep;
}

SuiteReport cycles_suite() {
  SuiteReport rep;
  rep.suite = "cycles";
  const std::vector<Ring> octet{Ring::R, Ring::C, Ring::H, Ring::HH, Ring::H, Ring::C, Ring::R, Ring::RR, Ring::R};
  Json all = Json::array();
  for (int r = 0; r < 8; ++r) {
    const auto ts = bw_cycle(r);
    std::vector<Ring> seq{ts.front().from.ring};
    bool hours = true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      seq.push_back(ts[i].to.ring);
      hours = hours && ts[i].hour() == static_cast<int>(i) + 1 && ts[i].cycle() == r;
    }
    std::string names;
    for (Ring x : seq) names += (names.empty() ? "" : " -> ") + ring_name(x);
    rep.add("cycle r=" + std::to_string(r), seq == octet && hours, names);
    Json j = Json::array();
    for (const auto& t : ts) j.push_back(transition_json(t));
    all.push_back(j);
  }
  const double d = fractal_dimension();
  rep.add("fractal dimension ln63/ln8", std::abs(d - 1.9924) <= 1e-4 && d < 2.0 && d > 1.99, sci(d));
  const Chessboard board(1);
  rep.add("chessboard row rule Cl(p,q) = Cl(p,0)⊗Cl(0,q)", board.row_rule_holds());
  rep.data["cycles"] = all;
  return rep;
}

SuiteReport chevalley_suite(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.suite = "chevalley";
  const auto sigs = small_signatures(3);
  std::vector<std::pair<Signature, Signature>> pairs;
  for (const auto& a : sigs)
    for (const auto& b : sigs) pairs.emplace_back(a, b);
  const auto proofs = ordered_map(pairs, opts.parallel, [](const std::pair<Signature, Signature>& ab) {
    return graded_tensor_check(ab.first, ab.second);
  });
  int passed = 0;
  for (const auto& p : proofs) {
    if (p.ok()) ++passed;
    else rep.add(p.claim, false, p.failure);
  }
  rep.add("graded tensor witnesses, p+q <= 3 and p'+q' <= 3", passed == static_cast<int>(proofs.size()),
          std::to_string(passed) + "/" + std::to_string(proofs.size()));
  for (const auto& [a, b] : std::vector<std::pair<Signature, Signature>>{
           {{0, 1}, {0, 1}}, {{1, 1}, {1, 1}}, {{1, 0}, {0, 3}}}) {
    const IsoProof p = graded_tensor_check(a, b);
    rep.add(p.claim, p.ok(), "rank " + std::to_string(p.rank));
    rep.data["examples"].push_back(to_json(p));
  }
  return rep;
}

SuiteReport karoubi_suite() {
  SuiteReport rep;
  rep.suite = "karoubi";
  const std::vector<std::tuple<Signature, Signature, Signature>> cases{
      {{1, 1}, {0, 2}, {1, 3}}, {{1, 1}, {2, 0}, {3, 1}}, {{0, 2}, {1, 1}, {1, 3}}};
  for (const auto& [a, b, target] : cases) {
    const IsoProof p = karoubi_check(a, b);
    rep.add(p.claim, p.ok() && p.target == target, p.kind + ", rank " + std::to_string(p.rank));
    rep.data["proofs"].push_back(to_json(p));
  }
  return rep;
}

SuiteReport even_iso_suite(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.suite = "even-iso";
  const std::vector<std::pair<Signature, Signature>> named{{{1, 3}, {3, 0}}, {{4, 1}, {1, 3}}, {{2, 4}, {4, 1}}};
  for (const auto& [src, target] : named) {
    const IsoProof p = even_iso_check(src.p, src.q, target);
    rep.add(p.claim, p.ok(), p.kind);
    rep.data["named"].push_back(to_json(p));
  }
  std::vector<std::pair<Signature, EvenIsoKind>> jobs;
  for (const auto& s : small_signatures(8)) {
    if (s.n() == 0) continue;
    if (s.p >= 1) jobs.emplace_back(s, EvenIsoKind::isom1);
    if (s.q >= 1) jobs.emplace_back(s, EvenIsoKind::isom2);
  }
  const auto proofs = ordered_map(jobs, opts.parallel, [](const std::pair<Signature, EvenIsoKind>& j) {
    return even_iso_check(j.first.p, j.first.q, j.second);
  });
  int passed = 0;
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    const auto& p = proofs[i];
    // The realized target must classify like the even subalgebra it replaces.
    const bool ok = p.ok() && p.target.n() == jobs[i].first.n() - 1;
    if (ok) ++passed;
    else rep.add(p.claim, false, p.failure);
  }
  rep.add("isom1/isom2 witnesses for p+q <= 8", passed == static_cast<int>(proofs.size()),
          std::to_string(passed) + "/" + std::to_string(proofs.size()));
  return rep;
}

SuiteReport phi_psi_suite() {
  SuiteReport rep;
  rep.suite = "phi-psi";
  const PhiPsiReport f = phi_psi_factorization(Signature(1, 3), Signature(1, 1));
  rep.add("Cl(1,3): φ=e123, ψ=e124 commute with e1, e2", f.commute_with_base, f.phi.to_string() + ", " + f.psi.to_string());
  rep.add("Cl(1,3): φ² = ψ² = -1 (quaternion case)", f.phi_sq == -1 && f.psi_sq == -1 && f.kind == QuaternionCase::quaternion);
  rep.add("Cl(1,3): decomposition spans", f.ok(), "rank " + std::to_string(f.span_rank));
  rep.data["cl13"] = to_json(f);
  const PhiPsiReport anti = phi_psi_factorization(Signature(5, 1), Signature(4, 0));
  rep.add("Cl(5,1): φ² = -ψ² = 1 (anti-quaternion case)",
          anti.ok() && anti.phi_sq == 1 && anti.psi_sq == -1 && anti.kind == QuaternionCase::anti_quaternion);
  rep.data["cl51"] = to_json(anti);
  const PhiPsiReport pseudo = phi_psi_factorization(Signature(2, 2), Signature(2, 0));
  rep.add("Cl(2,2): φ² = ψ² = 1 (pseudo-quaternion case)", pseudo.ok() && pseudo.kind == QuaternionCase::pseudo_quaternion);
  rep.data["cl22"] = to_json(pseudo);
  return rep;
}

SuiteReport block_matrix_suite(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.suite = "block-matrix";
  std::mt19937_64 rng(opts.seed);
  const PhiPsiReport f = phi_psi_factorization(Signature(1, 3), Signature(1, 1));
  const BlockMatrix one = block_matrix_form(f, RealMultivector(f.target, Rational(1)));
  BlockMatrix id(f.base);
  id.entries[0] = id.entries[3] = ComplexMultivector(f.base, GaussRational(1));
  rep.add("matrix(1) = identity", one == id);
  BlockMatrix phi(f.base);
  phi.entries[1] = ComplexMultivector(f.base, GaussRational(-1));
  phi.entries[2] = ComplexMultivector(f.base, GaussRational(1));
  rep.add("matrix(φ) = [[0,-1],[1,0]]", block_matrix_form(f, f.phi) == phi);
  BlockMatrix psi(f.base);
  psi.entries[1] = psi.entries[2] = ComplexMultivector(f.base, GaussRational::i());
  rep.add("matrix(ψ) = [[0,i],[i,0]]", block_matrix_form(f, f.psi) == psi);
  const BlockMatrixReport r = block_matrix_check(1, 3, opts.block_samples, rng);
  rep.add("matrix(xy) = matrix(x) matrix(y)", r.ok(), std::to_string(r.passed) + "/" + std::to_string(r.samples));
  const ChainReport chain = spin24_chain();
  for (const auto& l : chain.links) rep.add("chain: " + l.claim, l.ok, l.detail);
  return rep;
}

// Symmetric spintensor components: non-decreasing index words of length k
// over {1,2} times those of length r over the dotted indices.
long long multiset_count(long long size) {
  long long count = 0;
  for (long long ones = 0; ones <= size; ++ones) ++count;  // `ones` copies of index 1, the rest index 2
  return count;
}

SuiteReport reps_suite() {
  SuiteReport rep;
  rep.suite = "reps";
  bool deg = true;
  for (long long k = 0; k <= 12; ++k)
    for (long long r = 0; r <= 12; ++r) deg = deg && rep_label(k, r).degree() == multiset_count(k) * multiset_count(r);
  rep.add("degree (k+1)(r+1) matches multiset count, k,r <= 12", deg);

  bool periodic = true;
  for (long long a = 0; a <= 32; ++a)
    for (long long b = 0; b <= 32; ++b) {
      const HalfInt l = HalfInt::from_twice(a), ld = HalfInt::from_twice(b);
      const HalfInt two = HalfInt::from_twice(4);
      periodic = periodic && rep_field(l + two, ld) == rep_field(l, ld) && rep_field(l, ld + two) == rep_field(l, ld);
    }
  rep.add("field is 2-periodic in l and l̇ up to 16", periodic);

  auto names = [](const std::vector<RepLabel>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " -> ") + x.name();
    return s;
  };
  const std::string cycle1 =
      "τ^r_{0,0} -> ^ετ^r_{0,0} -> τ^q_{0,1/2} -> ^ετ^q_{0,1/2} -> τ^q_{0,1} -> ^ετ^q_{0,1} -> τ^r_{0,3/2} -> "
      "^ετ^r_{0,3/2} -> τ^r_{0,2}";
  const auto c1 = bw_rep_cycle(1);
  rep.add("walk cycle 1", names(c1) == cycle1, names(c1));
  const auto c2 = bw_rep_cycle(2);
  rep.add("walk cycle 2 ends at τ^r_{0,4}", c2.back().name() == "τ^r_{0,4}" && c2[7].name() == "^ετ^r_{0,7/2}", names(c2));
  const auto c8 = bw_rep_cycle(8);
  rep.add("walk cycle 8 ends at τ^r_{0,16}", c8.back().name() == "τ^r_{0,16}" && c8[7].name() == "^ετ^r_{0,31/2}",
          names(c8));

  bool walk = true;
  for (const auto& e : bw_rep_walk(8)) {
    if (e.q % 2 == 1) continue;
    const Ring ring = algebra_type(0, e.q).ring;
    const RepField f = (ring == Ring::R || ring == Ring::RR) ? RepField::real : RepField::quaternionic;
    walk = walk && f == e.label.field;
  }
  rep.add("walk fields follow Cl(0,q) for even q <= 64", walk);

  const SpinChain seven = spin_chain(HalfInt::from_twice(0), HalfInt::from_twice(6));
  bool chain_ok = seven.members.size() == 7;
  for (std::size_t i = 0; i < seven.spins.size(); ++i)
    chain_ok = chain_ok && seven.spins[i] == HalfInt::from_twice(2 * static_cast<long long>(i) - 6);
  for (const auto& a : chain_algebra_sequence(seven)) chain_ok = chain_ok && a.k + a.r == 6;
  rep.add("7-plet from τ_{0,3}", chain_ok);

  const auto b1 = representation_block(1);
  const auto b2 = representation_block(2);
  rep.add("first block has 25 nodes", b1.nodes.size() == 25, std::to_string(b1.nodes.size()));
  rep.data["block1"] = to_json(b1);
  rep.data["block2_nodes"] = b2.nodes.size();
  return rep;
}

SuiteReport quotient_suite() {
  SuiteReport rep;
  rep.suite = "quotient";
  for (int q : {1, 3, 5, 7}) {
    const QuotientReport r = quotient_structure(q);
    rep.add("Cl(0," + std::to_string(q) + ")", r.ok(),
            std::string("unit ") + (r.complexified ? "iω" : "ω") + ", kernel " + std::to_string(r.kernel_dim) +
                ", quotient " + std::to_string(r.quotient_dim));
    rep.data["q" + std::to_string(q)] = to_json(r);
  }
  return rep;
}

SuiteReport numeric_suite(const VerifyOptions& opts) {
  SuiteReport rep;
  rep.suite = "numeric";
  std::mt19937_64 rng(opts.seed);
  for (const auto& c : numeric_property_checks(opts.samples, rng))
    rep.add(c.name, c.ok(),
            std::to_string(c.passed) + "/" + std::to_string(c.samples) + " within " + sci(c.tolerance) + ", worst " +
                sci(c.worst));
  const DoubleCoverReport d = sl2c_double_cover_check(100, rng);
  rep.add("SL(2,C) double cover", d.ok(),
          "composition " + std::to_string(d.composition_ok) + "/" + std::to_string(d.samples) + ", distinct " +
              std::to_string(d.distinct_ok) + "/" + std::to_string(d.samples));
  const FormSignature s = twistor_signature();
  rep.add("twistor form signature (2,2)", s.positive == 2 && s.negative == 2 && s.zero == 0);
  return rep;
}

}  // namespace

bool SuiteReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"classification", "radon-hurwitz", "theorem3", "cycles",
                                              "chevalley",      "karoubi",       "even-iso", "phi-psi",
                                              "block-matrix",   "reps",          "quotient", "numeric"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, opts).front());
    return out;
  }
  const std::map<std::string, std::function<SuiteReport()>> table{
      {"classification", [&] { return classification_suite(opts); }},
      {"radon-hurwitz", [] { return radon_hurwitz_suite(); }},
      {"theorem3", [&] { return theorem3_suite(opts); }},
      {"cycles", [] { return cycles_suite(); }},
      {"chevalley", [&] { return chevalley_suite(opts); }},
      {"karoubi", [] { return karoubi_suite(); }},
      {"even-iso", [&] { return even_iso_suite(opts); }},
      {"phi-psi", [] { return phi_psi_suite(); }},
      {"block-matrix", [&] { return block_matrix_suite(opts); }},
      {"reps", [] { return reps_suite(); }},
      {"quotient", [] { return quotient_suite(); }},
      {"numeric", [&] { return numeric_suite(opts); }},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown verification suite: " + name);
  return {it->second()};
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.ok ? "PASS " : "FAIL ") << report.suite << ": " << c.name;
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  }
  os << report.suite << ": " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Json to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"suite", report.suite}, {"ok", report.ok()}, {"checks", checks}, {"data", report.data}};
}

std::string join_sequence(const std::vector<long long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace cliff
