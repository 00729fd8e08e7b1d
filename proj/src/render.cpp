#include "cliff/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cliff {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

Json rank_json(const AlgebraClass& c) {
  if (c.matrix_log2 < 63) return c.matrix_rank();
  return "2^" + std::to_string(c.matrix_log2);
}

std::string rank_text(const AlgebraClass& c) {
  return c.matrix_log2 < 63 ? std::to_string(c.matrix_rank()) : "2^" + std::to_string(c.matrix_log2);
}

Json multivector_json(const RealMultivector& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) terms.push_back({Blade(m).name(), to_string(c)});
  return terms;
}

Json multivector_json(const ComplexMultivector& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) terms.push_back({Blade(m).name(), to_string(c)});
  return terms;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unsupported format: " + name);
}

std::string dump_json(const Json& j) { return j.dump(2, ' ', false, Json::error_handler_t::strict) + "\n"; }

Json to_json(const AlgebraClass& c) {
  return {{"p", c.p}, {"q", c.q}, {"type", c.type_mod8}, {"ring", ring_name(c.ring)}, {"simple", c.simple},
          {"matrix_rank", rank_json(c)}};
}

std::string to_text(const AlgebraClass& c) {
  std::ostringstream os;
  os << "Cl(" << c.p << "," << c.q << "): type " << c.type_mod8 << ", ring " << ring_name(c.ring) << ", "
     << (c.simple ? "simple" : "semisimple") << ", ";
  const std::string k = is_double(c.ring) ? std::string(ring_name(c.ring)).substr(0, 1) : ring_name(c.ring);
  const std::string mat = "Mat_" + rank_text(c) + "(" + k + ")";
  os << (c.simple ? mat : mat + "⊕" + mat) << ", ω² = " << (c.omega_sq > 0 ? "+1" : "-1");
  if (c.n_odd) os << " (n odd)";
  return os.str();
}

std::string classification_csv(const std::vector<AlgebraClass>& cells) {
  std::ostringstream os;
  os << "p,q,type,ring,simple,matrix_rank,omega_sq\n";
  for (const auto& c : cells)
    os << c.p << "," << c.q << "," << c.type_mod8 << "," << ring_name(c.ring) << "," << (c.simple ? "true" : "false")
       << "," << rank_text(c) << "," << c.omega_sq << "\n";
  return os.str();
}

Json to_json(const IdempotentData& d, const DivisionRingData& ring, const MinimalLeftIdeal& ideal) {
  Json gens = Json::array();
  for (Blade b : d.generators) gens.push_back(b.name());
  return {{"p", d.sig.p},
          {"q", d.sig.q},
          {"f", multivector_json(d.f)},
          {"generators", gens},
          {"k", d.k},
          {"group_order", d.group_order},
          {"division_ring", ring_name(ring.ring)},
          {"dim_fKf", ring.dim_fkf},
          {"ideal_dim", ideal.dim}};
}

std::string to_text(const IdempotentData& d, const DivisionRingData& ring, const MinimalLeftIdeal& ideal) {
  std::ostringstream os;
  os << d.sig.name() << "\n";
  os << "  f = " << d.f.to_string() << "\n";
  os << "  generators:";
  if (d.generators.empty()) os << " (none)";
  for (Blade b : d.generators) os << " " << b.name();
  os << "\n  k = " << d.k << ", |T(f)| = " << d.group_order << "\n";
  os << "  f Cl f: dim " << ring.dim_fkf << " -> " << ring_name(ring.ring) << "\n";
  os << "  minimal left ideal: dim " << ideal.dim << "\n";
  return os.str();
}

Json to_json(const Chessboard& board) {
  Json j;
  j["order"] = board.order();
  j["side"] = board.side();
  if (board.order() <= 2) {
    Json cells = Json::array();
    for (std::uint64_t p = 0; p < board.side(); ++p)
      for (std::uint64_t q = 0; q < board.side(); ++q) {
        const AlgebraClass c = board.cell(p, q);
        cells.push_back({{"p", c.p}, {"q", c.q}, {"type", c.type_mod8}, {"ring", ring_name(c.ring)}, {"simple", c.simple}});
      }
    j["cells"] = cells;
  }
  if (board.order() >= 2) {
    Json subs = Json::array();
    for (int P = 0; P < 8; ++P)
      for (int Q = 0; Q < 8; ++Q) {
        const auto s = board.sub_board(P, Q);
        subs.push_back({{"P", P}, {"Q", Q}, {"row", s.row}, {"cycle", s.cycle}});
      }
    j["sub_boards"] = subs;
  }
  return j;
}

std::string to_text(const Chessboard& board) {
  std::ostringstream os;
  if (board.order() == 1) {
    os << "p\\q";
    for (int q = 0; q < 8; ++q) os << "  " << q << " ";
    os << "\n";
    for (int p = 7; p >= 0; --p) {
      os << " " << p << " ";
      for (int q = 0; q < 8; ++q)
        os << " " << board.cell(p, q).type_mod8 << (Chessboard::black(p, q) ? "● " : "○ ");
      os << "\n";
    }
    os << "cells: type (p-q) mod 8; ● even p+q, ○ odd p+q\n";
    return os.str();
  }
  if (board.order() == 2) {
    for (int row = 63; row >= 0; --row) {
      for (int col = 0; col < 64; ++col) {
        if (col && col % 8 == 0) os << " ";
        os << board.cell(row, col).type_mod8;
      }
      os << "\n";
      if (row && row % 8 == 0) os << "\n";
    }
  }
  os << "sub-boards (cycle r by column Q):\n";
  for (int P = 7; P >= 0; --P) {
    for (int Q = 0; Q < 8; ++Q) os << (Q ? " " : "") << "r=" << board.sub_board(P, Q).cycle;
    os << "\n";
  }
  return os.str();
}

Json transition_json(const Transition& t) {
  return {{"from_q", t.from.q}, {"to_q", t.to.q}, {"hour", t.hour()}, {"cycle", t.cycle()},
          {"from_ring", ring_name(t.from.ring)}, {"to_ring", ring_name(t.to.ring)}};
}

std::string transition_text(const Transition& t) {
  std::ostringstream os;
  os << "Cl(0," << t.from.q << ") -" << t.hour() << "-> Cl(0," << t.to.q << ")  " << ring_name(t.from.ring) << " -"
     << t.hour() << "-> " << ring_name(t.to.ring) << "  (h=" << t.hour() << ", r=" << t.cycle() << ")";
  return os.str();
}

Json clock_json() {
  Json hours = Json::array();
  for (const auto& t : bw_cycle(0)) hours.push_back({{"hour", t.hour()}, {"from", ring_name(t.from.ring)}, {"to", ring_name(t.to.ring)}});
  return {{"hours", hours}};
}

std::string clock_text() {
  std::ostringstream os;
  for (const auto& t : bw_cycle(0))
    os << "hour " << t.hour() << ": " << ring_name(t.from.ring) << " -> " << ring_name(t.to.ring) << "\n";
  return os.str();
}

Json to_json(const RepLabel& label) {
  Json spins = Json::array();
  for (HalfInt s : label.spin_values()) spins.push_back(s.str());
  return {{"l", label.l.str()},
          {"l_dot", label.l_dot.str()},
          {"field", field_name(label.field)},
          {"quotient", label.quotient},
          {"spin", label.spin().str()},
          {"spin_values", spins},
          {"degree", label.degree()},
          {"spinspace_log2", label.spinspace_log2()},
          {"name", label.name()}};
}

std::string to_text(const RepLabel& label) {
  std::ostringstream os;
  os << label.name() << ": field " << field_name(label.field) << ", spin " << label.spin().str() << ", degree "
     << label.degree() << ", spinspace 2^" << label.spinspace_log2() << "\n  spin values:";
  for (HalfInt s : label.spin_values()) os << " " << s.str();
  os << "\n";
  return os.str();
}

Json to_json(const SpinChain& chain) {
  Json members = Json::array();
  const auto algebras = chain_algebra_sequence(chain);
  for (std::size_t i = 0; i < chain.members.size(); ++i) {
    Json m = to_json(chain.members[i]);
    m["signed_spin"] = chain.spins[i].str();
    m["algebra"] = {{"k", algebras[i].k}, {"r", algebras[i].r}, {"name", algebras[i].name()}};
    members.push_back(m);
  }
  return {{"l", chain.l.str()}, {"l_dot", chain.l_dot.str()}, {"length", chain.members.size()}, {"members", members}};
}

std::string to_text(const SpinChain& chain) {
  std::ostringstream os;
  const auto algebras = chain_algebra_sequence(chain);
  os << "chain from τ_{" << chain.l.str() << "," << chain.l_dot.str() << "}, " << chain.members.size() << " members\n";
  for (std::size_t i = 0; i < chain.members.size(); ++i)
    os << "  " << chain.members[i].name() << "  s=" << chain.spins[i].str() << "  " << algebras[i].name() << "\n";
  return os.str();
}

Json to_json(const RepresentationBlock& block) {
  Json nodes = Json::array();
  for (const auto& n : block.nodes)
    nodes.push_back({{"l", n.l.str()}, {"l_dot", n.l_dot.str()}, {"field", field_name(n.field)}, {"quotient", n.quotient},
                     {"spin", n.spin().str()}, {"degree", n.degree()}});
  return {{"order", block.order}, {"nodes", nodes}};
}

std::string to_text(const RepresentationBlock& block) {
  std::ostringstream os;
  if (block.order == 1) {
    // Rows l̇ = 2 .. 0, columns l = 0 .. 2.
    for (int r = 4; r >= 0; --r) {
      for (int k = 0; k <= 4; ++k) {
        const RepLabel n = rep_label(k, r);
        std::string cell = n.name();
        os << cell << std::string(cell.size() < 22 ? 22 - cell.size() : 1, ' ');
      }
      os << "\n";
    }
    return os.str();
  }
  for (const auto& n : block.nodes) os << n.name() << "\n";
  return os.str();
}

Json to_json(const IsoProof& proof) {
  Json images = Json::array();
  for (const auto& g : proof.images) {
    Json terms = Json::array();
    for (const auto& [b, c] : g.terms) terms.push_back({b, c});
    images.push_back({{"source", g.label}, {"terms", terms}});
  }
  return {{"claim", proof.claim},
          {"kind", proof.kind},
          {"host", proof.host},
          {"target", proof.target.name()},
          {"expected_squares", proof.expected_squares},
          {"images", images},
          {"relations_ok", proof.relations_ok},
          {"rank", proof.rank},
          {"expected_rank", proof.expected_rank},
          {"ok", proof.ok()},
          {"failure", proof.failure}};
}

Json to_json(const PhiPsiReport& r) {
  return {{"target", r.target.name()},
          {"base", r.base.name()},
          {"phi", multivector_json(r.phi)},
          {"psi", multivector_json(r.psi)},
          {"phipsi", multivector_json(r.phipsi)},
          {"phi_sq", r.phi_sq},
          {"psi_sq", r.psi_sq},
          {"case", quaternion_case_name(r.kind)},
          {"quaternion_algebra", r.quaternion_algebra.name()},
          {"roles_swapped", r.roles_swapped},
          {"commute_with_base", r.commute_with_base},
          {"anticommute", r.anticommute},
          {"component_ranks", r.component_ranks},
          {"span_rank", r.span_rank},
          {"ok", r.ok()}};
}

Json to_json(const QuotientReport& r) {
  return {{"q", r.q},
          {"omega_sq", r.omega_sq},
          {"unit", r.complexified ? "iω" : "ω"},
          {"lambda_plus", multivector_json(r.lambda_plus)},
          {"lambda_minus", multivector_json(r.lambda_minus)},
          {"idempotent", r.idempotent},
          {"orthogonal", r.orthogonal},
          {"complete", r.complete},
          {"central", r.central},
          {"kernel_is_ideal", r.kernel_is_ideal},
          {"kernel_matches_lambda", r.kernel_matches_lambda},
          {"image_faithful", r.image_faithful},
          {"kernel_dim", r.kernel_dim},
          {"quotient_dim", r.quotient_dim},
          {"ok", r.ok()}};
}

Json complex_json(cplx z) { return Json::array({z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}); }

Json matrix_json(const Mat2& m) {
  return Json::array({Json::array({complex_json(m(0, 0)), complex_json(m(0, 1))}),
                      Json::array({complex_json(m(1, 0)), complex_json(m(1, 1))})});
}

Json spinor_json(const TwoSpinor& s) { return Json::array({complex_json(s(0)), complex_json(s(1))}); }

std::string complex_text(cplx z) {
  const double re = z.real(), im = z.imag();
  if (im == 0.0) return fmt(re);
  if (re == 0.0) return fmt(im) + "i";
  return fmt(re) + (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

std::string matrix_text(const Mat2& m) {
  return "[[" + complex_text(m(0, 0)) + ", " + complex_text(m(0, 1)) + "], [" + complex_text(m(1, 0)) + ", " +
         complex_text(m(1, 1)) + "]]";
}

}  // namespace cliff
