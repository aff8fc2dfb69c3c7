// gmk: command-line surface over the library.  Every subcommand maps to one
// library operation plus serialization; output is byte-identical across runs
// for identical arguments.
//
// Exit codes: 0 success, 1 asserted check failed, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmk/acceptance.hpp"
#include "gmk/bieri.hpp"
#include "gmk/complex.hpp"
#include "gmk/family.hpp"
#include "gmk/growth.hpp"
#include "gmk/matrix.hpp"
#include "gmk/permrep.hpp"
#include "gmk/walls.hpp"
#include "gmk/words.hpp"

using gmk::Int;
using json = nlohmann::ordered_json;

namespace {

// Arbitrary-precision integers: emit as a JSON number when they fit 64 bits,
// as a decimal string beyond that.
json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

std::string two_decimals(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open --out file: " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

json matrix_json(const gmk::IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(json_int(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string cycle_notation(const std::vector<std::uint32_t>& perm) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t p = 0; p < perm.size(); ++p) {
    if (seen[p]) continue;
    std::uint32_t q = perm[p];
    seen[p] = true;
    if (q == p) continue;  // fixed points omitted (there are none for our actions)
    os << "(" << p;
    while (!seen[q]) {
      seen[q] = true;
      os << " " << q;
      q = perm[q];
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

json contacts_json(const std::vector<gmk::OsculationContact>& contacts) {
  json arr = json::array();
  for (const auto& ct : contacts)
    arr.push_back({{"hyperplanes", {ct.hyperplane1, ct.hyperplane2}},
                   {"vertex", ct.vertex},
                   {"edges", {ct.edge1, ct.edge2}},
                   {"direct", ct.direct}});
  return arr;
}

int env_threads() {
  if (const char* env = std::getenv("GMK_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 0) return t;
    } catch (...) {
    }
    throw CLI::ValidationError("GMK_THREADS", "must be a nonnegative integer");
  }
  return 0;
}

struct Args {
  int m = 1, k = 1, n = 1, n_max = 10, radius = 4, ell = 1, p = 1;
  bool inverse = false, verify = false, delete_last = false, assert_vh = false;
  bool use_base = false, use_cover = false;
  std::string format = "json", emit_kind = "json", only, out;
};

void check_mk(int m, int k) {
  if (!(1 <= k && k <= m && m <= 6))
    throw CLI::ValidationError("--m/--k", "need 1 <= k <= m <= 6");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for a family of free-by-cyclic groups and their cube complexes"};
  app.require_subcommand(1);
  Args a;

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", a.out, "write output to a file"); };

  CLI::App* phi = app.add_subcommand("phi", "image table of the defining automorphism");
  phi->add_option("--m", a.m)->required();
  phi->add_option("--k", a.k)->required();
  phi->add_flag("--inverse", a.inverse);
  phi->add_option("--format", a.format)->check(CLI::IsMember({"json", "text"}));
  add_out(phi);

  CLI::App* growth = app.add_subcommand("growth", "iterated image length table");
  growth->add_option("--m", a.m)->required();
  growth->add_option("--k", a.k)->required();
  growth->add_option("--n-max", a.n_max)->required()->check(CLI::Range(0, 64));
  growth->add_flag("--inverse", a.inverse);
  growth->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv"}));
  add_out(growth);

  CLI::App* abelian = app.add_subcommand("abelian", "abelianized automorphism and its powers");
  abelian->add_option("--m", a.m)->required();
  abelian->add_option("--k", a.k)->required();
  abelian->add_option("--n", a.n)->required()->check(CLI::Range(0, 1000));
  abelian->add_option("--format", a.format)->check(CLI::IsMember({"json"}));
  add_out(abelian);

  CLI::App* permrep = app.add_subcommand("permrep", "finite point action of the even-rank family");
  permrep->add_option("--m", a.m)->required()->check(CLI::Range(1, 6));
  permrep->add_flag("--verify", a.verify);
  permrep->add_option("--format", a.format)->check(CLI::IsMember({"json"}));
  add_out(permrep);

  CLI::App* cover = app.add_subcommand("cover", "finite cover built from the point action");
  cover->add_option("--m", a.m)->required()->check(CLI::Range(1, 6));
  cover->add_flag("--delete-last", a.delete_last);
  cover->add_option("--emit", a.emit_kind)->check(CLI::IsMember({"dot", "json"}));
  add_out(cover);

  CLI::App* special = app.add_subcommand("special", "wall pathology report");
  special->add_option("--m", a.m)->required()->check(CLI::Range(1, 6));
  special->add_flag("--base", a.use_base);
  special->add_flag("--cover", a.use_cover);
  special->add_flag("--delete-last", a.delete_last);
  special->add_flag("--assert-vh", a.assert_vh, "exit 1 unless the two-coloring succeeds");
  special->add_option("--format", a.format)->check(CLI::IsMember({"json"}));
  add_out(special);

  CLI::App* dehn = app.add_subcommand("dehn", "commutator certificate and lower-bound quantities");
  dehn->add_option("--m", a.m)->required();
  dehn->add_option("--k", a.k)->required();
  dehn->add_option("--n", a.n)->required()->check(CLI::Range(1, 64));
  dehn->add_option("--ell", a.ell)->check(CLI::Range(1, 8));
  dehn->add_option("--p", a.p)->check(CLI::Range(1, 8));
  add_out(dehn);

  CLI::App* comb = app.add_subcommand("comb-audit", "exhaustive normal-form length audit");
  comb->add_option("--m", a.m)->required();
  comb->add_option("--k", a.k)->required();
  comb->add_option("--radius", a.radius)->required()->check(CLI::Range(0, 8));
  add_out(comb);

  CLI::App* repro = app.add_subcommand("reproduce", "run the acceptance criteria");
  repro->add_option("--only", a.only, "run only criteria whose id contains this substring");
  add_out(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (phi->parsed()) {
      check_mk(a.m, a.k);
      gmk::Endomorphism e = gmk::make_phi(a.m, a.k);
      if (a.inverse) e = gmk::inverse_of(e);
      std::vector<std::string> names = gmk::free_kernel_names(a.m, a.k);
      if (a.format == "text") {
        std::ostringstream os;
        for (int g = 0; g < e.rank; ++g)
          os << names[g] << " -> " << gmk::format_word(e.images[g], names) << "\n";
        return emit(os.str(), a.out);
      }
      json images = json::object();
      for (int g = 0; g < e.rank; ++g) images[names[g]] = gmk::format_word(e.images[g], names);
      json doc{{"m", a.m}, {"k", a.k}, {"inverse", a.inverse}, {"images", images}};
      return emit(doc.dump(2) + "\n", a.out);
    }

    if (growth->parsed()) {
      check_mk(a.m, a.k);
      gmk::Endomorphism e = gmk::make_phi(a.m, a.k);
      if (a.inverse) e = gmk::inverse_of(e);
      gmk::GrowthTable t = gmk::growth_table(e, a.n_max);
      std::vector<std::string> names = gmk::free_kernel_names(a.m, a.k);
      if (a.format == "csv") {
        std::ostringstream os;
        os << "n";
        for (const auto& nm : names) os << "," << nm;
        os << ",gr\n";
        for (int n = 0; n <= a.n_max; ++n) {
          os << n;
          for (int g = 0; g < e.rank; ++g) os << "," << t.lengths[g][n];
          os << "," << t.gr[n] << "\n";
        }
        return emit(os.str(), a.out);
      }
      json lengths = json::object();
      for (int g = 0; g < e.rank; ++g) lengths[names[g]] = t.lengths[g];
      json doc{{"m", a.m}, {"k", a.k}, {"inverse", a.inverse}, {"lengths", lengths},
               {"gr", t.gr}};
      if (a.n_max >= 8)
        doc["degree_estimate"] =
            two_decimals(gmk::estimate_degree({t.gr.begin() + 1, t.gr.end()}));
      else
        doc["degree_estimate"] = nullptr;
      return emit(doc.dump(2) + "\n", a.out);
    }

    if (abelian->parsed()) {
      check_mk(a.m, a.k);
      gmk::IntMatrix M = gmk::abelianization_matrix(gmk::make_phi(a.m, a.k));
      gmk::IntMatrix P = gmk::power(M, a.n);
      gmk::IntMatrix N = gmk::sub(M, gmk::identity_matrix(a.m + a.k));
      gmk::MatrixNorms nm = gmk::norms(P);
      json col = json::array();
      for (int j = 0; j < a.m + a.k; ++j) col.push_back(json_int(gmk::column_l1(P, j)));
      json doc{{"m", a.m},
               {"k", a.k},
               {"n", a.n},
               {"matrix", matrix_json(M)},
               {"power", matrix_json(P)},
               {"rank_m_minus_i", gmk::rank(N)},
               {"rank_m_minus_i_squared", gmk::rank(gmk::mul(N, N))},
               {"jordan_profile", gmk::unipotent_jordan_profile(M).sizes},
               {"norms", {{"sup", json_int(nm.sup)}, {"linf_op", json_int(nm.linf_op)}}},
               {"column_l1", col}};
      return emit(doc.dump(2) + "\n", a.out);
    }

    if (permrep->parsed()) {
      gmk::CoordinateAction act = gmk::build_action(a.m);
      gmk::Presentation pres = gmk::presentation(a.m, a.m);
      json gens = json::array();
      for (std::size_t g = 0; g < act.tables.size(); ++g)
        gens.push_back({{"name", pres.generators[g]}, {"cycles", cycle_notation(act.tables[g])}});
      json doc{{"m", a.m}, {"points", act.num_points}, {"generators", gens}};
      int rc = 0;
      if (a.verify) {
        gmk::ActionReport rep = gmk::verify_action(act, pres);
        doc["report"] = {{"relators_ok", rep.relators_ok},
                         {"transitive", rep.transitive},
                         {"involutions_ok", rep.involutions_ok},
                         {"single_coordinate_moves", rep.single_coordinate_moves},
                         {"products_fixed_point_free", rep.products_fixed_point_free},
                         {"staged_transitivity", rep.staged_transitivity},
                         {"stage_flip_property", rep.stage_flip_property},
                         {"failures", rep.failures},
                         {"ok", rep.ok()}};
        rc = rep.ok() ? 0 : 1;
      }
      int erc = emit(doc.dump(2) + "\n", a.out);
      return erc != 0 ? erc : rc;
    }

    if (cover->parsed()) {
      gmk::Presentation pres = gmk::presentation(a.m, a.m);
      gmk::Cover cov = gmk::cover_from_action(pres, gmk::build_action(a.m));
      gmk::SquareComplex x =
          a.delete_last ? gmk::delete_generator(cov.complex, 2 * a.m) : cov.complex;
      if (a.emit_kind == "dot") {
        // Vertices sorted by bit-string label, then edges by (src label,
        // generator label, dst label): stable golden-file output.
        std::ostringstream os;
        os << "digraph cover {\n";
        std::vector<std::string> names = x.vertex_names;
        std::sort(names.begin(), names.end());
        for (const auto& nm : names) os << "  \"" << nm << "\";\n";
        std::vector<std::string> lines;
        for (const auto& e : x.edges) {
          std::ostringstream ls;
          ls << "  \"" << x.vertex_names[e.src] << "\" -> \"" << x.vertex_names[e.dst]
             << "\" [label=\"a" << e.label + 1 << "\", colorindex=" << e.label << "];\n";
          lines.push_back(ls.str());
        }
        std::sort(lines.begin(), lines.end());
        for (const auto& l : lines) os << l;
        os << "}\n";
        return emit(os.str(), a.out);
      }
      json edges = json::array();
      for (const auto& e : x.edges) edges.push_back({e.src, e.dst, e.label});
      json squares = json::array();
      for (const auto& s : x.squares) {
        json steps = json::array();
        for (const auto& st : s.steps) steps.push_back({st.edge, st.forward});
        squares.push_back({{"steps", steps}, {"label", s.label}});
      }
      json doc{{"m", a.m},
               {"deleted_last", a.delete_last},
               {"num_vertices", x.num_vertices},
               {"num_edges", x.edges.size()},
               {"num_squares", x.squares.size()},
               {"vertex_names", x.vertex_names},
               {"edges", edges},
               {"squares", squares}};
      return emit(doc.dump(2) + "\n", a.out);
    }

    if (special->parsed()) {
      if (a.use_base + a.use_cover + a.delete_last > 1)
        throw CLI::ValidationError("--base/--cover/--delete-last", "choose at most one");
      gmk::SquareComplex x;
      std::string which;
      if (a.use_base) {
        x = gmk::presentation_complex(gmk::presentation(a.m, a.m));
        which = "base";
      } else {
        gmk::Cover cov = gmk::cover_from_action(gmk::presentation(a.m, a.m), gmk::build_action(a.m));
        x = a.delete_last ? gmk::delete_generator(cov.complex, 2 * a.m) : cov.complex;
        which = a.delete_last ? "cover-minus-last" : "cover";
      }
      gmk::SpecialnessReport rep = gmk::specialness_report(x);
      json vh{{"ok", rep.vh.ok}};
      if (rep.vh.ok) {
        vh["classes"] = rep.vh.labels_consistent ? json(rep.vh.label_classes) : json::array();
        vh["labels_consistent"] = rep.vh.labels_consistent;
      } else {
        vh["certificate_square"] = *rep.vh.certificate_square;
      }
      json doc{{"m", a.m},
               {"complex", which},
               {"hyperplanes", rep.num_hyperplanes},
               {"npc", rep.npc.ok()},
               {"two_sided", rep.one_sided.all_two_sided()},
               {"self_intersections", rep.self_intersection.squares},
               {"self_osculations", contacts_json(rep.self_osculation.contacts)},
               {"inter_osculations", contacts_json(rep.inter_osculation.contacts)},
               {"vh", vh},
               {"verdict", rep.verdict}};
      int erc = emit(doc.dump(2) + "\n", a.out);
      if (erc != 0) return erc;
      return (a.assert_vh && !rep.vh.ok) ? 1 : 0;
    }

    if (dehn->parsed()) {
      check_mk(a.m, a.k);
      gmk::DoubledGroup G = gmk::make_doubled_group(a.m, a.k);
      gmk::Certificate cert = gmk::certificate_word(G, a.n, a.ell, a.p);
      bool trivial = gmk::is_trivial(G, cert.word);
      gmk::LowerBound lb = gmk::lower_bound_quantity(a.m, a.k, a.n, a.ell, a.p);
      json doc{{"m", a.m},
               {"k", a.k},
               {"n", a.n},
               {"ell", a.ell},
               {"p", a.p},
               {"trivial", trivial},
               {"word_length", cert.word.length()},
               {"written_length", cert.written_length},
               {"filling_exponent", cert.filling_exponent},
               {"lower_bound_exact", json_int(lb.exact)},
               {"lower_bound_abelian", json_int(lb.abelian)}};
      int erc = emit(doc.dump(2) + "\n", a.out);
      return erc != 0 ? erc : (trivial ? 0 : 1);
    }

    if (comb->parsed()) {
      check_mk(a.m, a.k);
      gmk::CombingAudit audit = gmk::combing_length_audit(gmk::make_doubled_group(a.m, a.k),
                                                          a.radius);
      json doc{{"m", a.m},
               {"k", a.k},
               {"radius", audit.radius},
               {"ball_size", audit.ball_size},
               {"violations", audit.violations},
               {"max_ratio", two_decimals(audit.max_ratio)}};
      int erc = emit(doc.dump(2) + "\n", a.out);
      return erc != 0 ? erc : (audit.violations == 0 ? 0 : 1);
    }

    if (repro->parsed()) {
      std::ostringstream os;
      bool all = true;
      for (const auto& r : gmk::acceptance::run_selected(a.only, env_threads())) {
        os << gmk::acceptance::format_result(r) << "\n";
        all = all && r.pass;
      }
      int erc = emit(os.str(), a.out);
      return erc != 0 ? erc : (all ? 0 : 1);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
