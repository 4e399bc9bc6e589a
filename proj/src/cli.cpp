#include "ztop/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ztop/error.hpp"
#include "ztop/families.hpp"
#include "ztop/newton_oracle.hpp"
#include "ztop/resolution.hpp"
#include "ztop/witness.hpp"

namespace ztop::cli {

namespace {

using resolution::Kind;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad range '" + text + "', expected lo..hi");
  }
}

std::string label(const resolution::Component& c) {
  std::ostringstream os;
  os << 'E' << c.id << '(' << c.n_mult << ',' << c.v_mult << ")";
  return os.str();
}

std::string members_text(const std::vector<resolution::ComponentId>& members) {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) out += (k ? "," : "") + std::to_string(members[k]);
  return out + "}";
}

void print_components(std::ostream& out, const resolution::ResolutionData& data) {
  out << "components:\n";
  for (const auto& c : data.components) {
    out << "  " << label(c) << ' ' << (c.kind == Kind::Exceptional ? "exceptional" : "strict")
        << "  candidate pole " << c.candidate_pole() << '\n';
  }
}

void print_strata(std::ostream& out, const resolution::ResolutionData& data) {
  for (const auto& s : data.strata) {
    out << "  " << (s.members.empty() ? std::string("{}") : members_text(s.members)) << " chi=" << s.chi << '\n';
  }
}

void print_lct(std::ostream& out, const resolution::ResolutionData& data) {
  try {
    out << "lct: " << resolution::lct(data) << '\n';
  } catch (const Error&) {
    out << "lct: undefined (no component meets the fiber)\n";
  }
}

void print_pole_table(std::ostream& out, const RatFunc& z) {
  out << "poles:\n";
  for (const auto& [pole, order] : z.poles()) {
    out << "  " << pole << "  order " << order << "  residue " << z.residue(pole) << '\n';
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::BadData, "cannot write " + path);
  f << text;
}

int cmd_zeta(const std::string& path, std::ostream& out) {
  const auto data = resolution::parse_resolution_file(path);
  const RatFunc z = resolution::zeta_from_strata(data);
  out << "zeta: " << z.str() << '\n';
  out << "candidate poles:";
  for (const auto& p : resolution::candidate_poles(data)) out << ' ' << p;
  out << '\n';
  print_pole_table(out, z);
  print_lct(out, data);
  return kExitOk;
}

int cmd_residue(const std::string& path, const std::string& at, std::ostream& out) {
  const auto data = resolution::parse_resolution_file(path);
  const Rational s0 = Rational::parse(at);
  out << "residue at " << s0 << ": " << resolution::zeta_from_strata(data).residue(s0) << '\n';
  return kExitOk;
}

void print_family(std::ostream& out, const families::FamilyData& f) {
  out << "family " << families::family_name(f.kind) << " n=" << f.dim;
  if (f.kind == families::FamilyKind::C) {
    out << " a=" << f.a << " b=" << f.b << '\n';
  } else {
    out << " i=" << f.i << '\n';
  }
  out << "f = " << families::polynomial_text(f) << '\n';
  print_components(out, f.data);
  out << "target: " << label(f.data.component(f.target_id)) << "  pole " << f.target_pole << '\n';
  out << (f.complete ? "strata:\n" : "strata (target-pole strata only):\n");
  print_strata(out, f.data);
  out << "alphas:\n";
  for (const auto& [id, v] : f.alphas) out << "  alpha_" << id << " = " << v << '\n';
  out << "residue via alpha: " << families::residue_via_alpha(f) << '\n';
  if (f.kind == families::FamilyKind::C) {
    out << "closed-form residue: " << families::residue_closed_form_c(f.dim, f.a, f.b) << '\n';
    const auto sec = families::secondary_contribution_check(f.dim, f.a, f.b);
    if (sec.applicable) {
      out << "secondary component E" << sec.k << ": contribution " << sec.value << '\n';
    } else {
      out << "secondary component: not applicable\n";
    }
  }
  if (f.complete) {
    const RatFunc z = resolution::zeta_from_strata(f.data);
    out << "zeta: " << z.str() << '\n';
    print_pole_table(out, z);
  }
  print_lct(out, f.data);
  if (!f.trace.empty()) {
    out << "blow-ups:\n";
    for (std::size_t k = 0; k < f.trace.size(); ++k) {
      out << "  " << std::setw(3) << k + 1 << "  center " << f.trace[k].center;
      if (!f.trace[k].equation.empty()) out << "  strict transform " << f.trace[k].equation;
      out << '\n';
    }
  }
}

void print_curve_family(std::ostream& out, const families::CurveFamilyData& f) {
  out << "family B a=" << f.a << " b=" << f.b << '\n';
  out << "f = " << families::polynomial_text(f) << '\n';
  print_components(out, f.data);
  out << "edges:";
  for (const auto& [u, v] : f.graph.edges) out << ' ' << u << '-' << v;
  out << '\n';
  out << "target: " << label(f.data.component(f.target_id)) << "  pole " << f.expected_pole << '\n';
  out << "strata:\n";
  print_strata(out, f.data);
  const RatFunc z = resolution::zeta_from_strata(f.data);
  out << "zeta: " << z.str() << '\n';
  print_pole_table(out, z);
  print_lct(out, f.data);
}

int cmd_family(const std::string& kind, int n, int i, int a, int b, const std::string& emit, std::ostream& out) {
  std::string text;
  if (kind == "B") {
    const auto f = families::family_b_curve(a, b);
    print_curve_family(out, f);
    text = families::emit_text(f);
  } else {
    families::FamilyData f;
    if (kind == "A-even") {
      f = families::family_a_even(n, i);
    } else if (kind == "A-odd") {
      f = families::family_a_odd(n, i);
    } else if (kind == "C") {
      f = families::family_c(n, a, b);
    } else {
      throw Error(ErrorCode::BadParams, "unknown family '" + kind + "'");
    }
    print_family(out, f);
    text = families::emit_text(f);
  }
  if (!emit.empty()) write_file(emit, text);
  return kExitOk;
}

int cmd_oracle(const std::string& kind, int n, int a, int b, std::ostream& out) {
  if (kind != "C") throw Error(ErrorCode::BadParams, "only family C has a Newton closed form");
  const RatFunc z = newton_oracle::zeta_newton_c(n, a, b);
  const auto p = newton_oracle::NewtonParams::make(n, a, b);
  out << "family C n=" << n << " a=" << a << " b=" << b << '\n';
  out << "A = " << p.form_a().str() << "  B = " << p.form_b().str() << '\n';
  out << "zeta: " << z.str() << '\n';
  print_pole_table(out, z);
  out << "target pole " << p.form_a().root() << '\n';
  return kExitOk;
}

int cmd_witness(const std::string& s0_text, int n, const std::string& format, std::ostream& out) {
  const auto cert = witness::witness_for(Rational::parse(s0_text), n);
  out << (format == "kv" ? cert.kv() + "\n" : cert.str());
  return kExitOk;
}

struct ScanRow {
  std::string text;
  bool match = false;
};

ScanRow scan_point(int n, int a, int b) {
  const auto f = families::family_c(n, a, b);
  const Rational r_alpha = families::residue_via_alpha(f);
  const Rational r_closed = families::residue_closed_form_c(n, a, b);
  const RatFunc z = newton_oracle::zeta_newton_c(n, a, b);
  std::string r_newton = "-";
  bool match = !r_alpha.is_zero() && r_alpha == r_closed;
  if (z.poles().count(f.target_pole)) {
    const Rational r = z.residue(f.target_pole);
    r_newton = r.str();
    match = match && r == r_alpha;
  } else {
    match = false;
  }
  std::ostringstream os;
  os << n << '\t' << a << '\t' << b << '\t' << f.target_pole << '\t' << r_alpha << '\t' << r_closed << '\t' << r_newton
     << '\t' << (match ? "yes" : "NO");
  return {os.str(), match};
}

int cmd_scan(const std::string& kind, const std::string& n_text, const std::string& a_text, const std::string& b_text,
             std::ostream& out) {
  if (kind != "C") throw Error(ErrorCode::BadParams, "scan supports family C only");
  const Range nr = parse_range(n_text);
  const Range ar = parse_range(a_text);
  const Range br = parse_range(b_text);
  std::vector<int> ns, as, bs;
  for (int n = nr.lo; n <= nr.hi; ++n) {
    if (n >= 3) {
      ns.push_back(n);
    } else {
      out << "# skipped n=" << n << " (needs n >= 3)\n";
    }
  }
  for (int a = ar.lo; a <= ar.hi; ++a) {
    if (a >= 4 && a % 2 == 0) {
      as.push_back(a);
    } else {
      out << "# skipped a=" << a << " (needs even a >= 4)\n";
    }
  }
  for (int b = br.lo; b <= br.hi; ++b) {
    if (b >= 2 && b % 2 == 0) {
      bs.push_back(b);
    } else {
      out << "# skipped b=" << b << " (needs even b >= 2)\n";
    }
  }
  struct Point {
    int n, a, b;
  };
  std::vector<Point> grid;
  for (int n : ns) {
    for (int a : as) {
      for (int b : bs) grid.push_back({n, a, b});
    }
  }
  // Evaluate concurrently, print in grid order.
  std::vector<ScanRow> rows(grid.size());
  std::vector<std::string> failures(grid.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < grid.size(); k = next++) {
          try {
            rows[k] = scan_point(grid[k].n, grid[k].a, grid[k].b);
          } catch (const std::exception& e) {
            rows[k] = {std::to_string(grid[k].n) + '\t' + std::to_string(grid[k].a) + '\t' +
                           std::to_string(grid[k].b) + "\terror: " + e.what(),
                       false};
          }
        }
      });
    }
  }
  out << "n\ta\tb\ttarget_pole\tres_alpha\tres_closed\tres_newton\tmatch\n";
  std::size_t mismatches = 0;
  for (const auto& r : rows) {
    out << r.text << '\n';
    if (!r.match) ++mismatches;
  }
  out << "# " << grid.size() << " points, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact topological zeta functions, poles and pole witnesses"};
  app.require_subcommand(1);

  std::string file, at, kind, emit, s0, format = "text", n_range, a_range, b_range;
  int n = 0, i = 0, a = 0, b = 0;

  auto* zeta = app.add_subcommand("zeta", "Z_top, poles, residues and lct of a resolution-data file");
  zeta->add_option("file", file, "resolution-data file")->required();

  auto* family = app.add_subcommand("family", "Generate data for one of the families A-even, A-odd, B, C");
  family->add_option("kind", kind, "A-even | A-odd | B | C")->required();
  family->add_option("--n", n, "dimension");
  family->add_option("--i", i, "exponent i (family A)");
  family->add_option("--a", a, "exponent a (families B, C)");
  family->add_option("--b", b, "exponent b (families B, C)");
  family->add_option("--emit", emit, "write the resolution data to this path");

  auto* residue = app.add_subcommand("residue", "Exact residue of Z_top at a point");
  residue->add_option("file", file, "resolution-data file")->required();
  residue->add_option("--at", at, "pole as p/q")->required();

  auto* oracle = app.add_subcommand("oracle", "Newton-polyhedron closed form of Z_top");
  oracle->add_option("kind", kind, "C")->required();
  oracle->add_option("--n", n)->required();
  oracle->add_option("--a", a)->required();
  oracle->add_option("--b", b)->required();

  auto* wit = app.add_subcommand("witness", "Construct and verify a polynomial with a pole at s0");
  wit->add_option("--s0", s0, "target pole as p/q")->required();
  wit->add_option("--n", n, "number of variables")->required();
  wit->add_option("--format", format, "text | kv")->check(CLI::IsMember({"text", "kv"}));

  auto* scan = app.add_subcommand("scan", "Cross-check the family C residues over a grid");
  scan->add_option("kind", kind, "C")->required();
  scan->add_option("--n", n_range, "lo..hi")->required();
  scan->add_option("--a", a_range, "lo..hi")->required();
  scan->add_option("--b", b_range, "lo..hi")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*zeta) return cmd_zeta(file, out);
    if (*family) return cmd_family(kind, n, i, a, b, emit, out);
    if (*residue) return cmd_residue(file, at, out);
    if (*oracle) return cmd_oracle(kind, n, a, b, out);
    if (*wit) return cmd_witness(s0, n, format, out);
    if (*scan) return cmd_scan(kind, n_range, a_range, b_range, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalVerificationFailure ? kExitVerification : kExitValidation;
  }
  return kExitValidation;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace ztop::cli
