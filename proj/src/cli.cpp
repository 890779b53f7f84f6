#include "rathom/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rathom/cohomology.hpp"
#include "rathom/complex_io.hpp"
#include "rathom/corpus.hpp"
#include "rathom/error.hpp"
#include "rathom/gauge.hpp"
#include "rathom/group_spec.hpp"
#include "rathom/hspace.hpp"
#include "rathom/les.hpp"

namespace rathom::cli {

namespace {

using nlohmann::json;

enum class OutputMode { text, machine };

struct Options {
  std::string complex_source;
  std::string group_spec;
  std::string lc_data;
  std::string poly;
  std::optional<int> n;
  std::optional<int> s;
  std::optional<int> k_max;
  Rank coeff_dim = 1;
  OutputMode output = OutputMode::text;
};

SimplicialComplex load_complex(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin_complex(source.substr(prefix.size()));
  return read_complex_file(source);
}

json dims_json(const GradedDims& d) {
  json out = json::array();
  for (const auto& [degree, rank] : d) out.push_back({degree, rank});
  return out;
}

GradedDims dims_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::parse, where + " must be a list of [degree, rank] pairs");
  GradedDims out;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw Error(ErrorCode::parse, where + ": expected [degree, rank], got " + entry.dump());
    }
    out.add(entry[0].get<int>(), entry[1].get<Rank>());
  }
  return out;
}

json complex_json(const SimplicialComplex& x) {
  return {{"name", x.name()},
          {"vertices", x.vertices().size()},
          {"dim", x.dim()},
          {"f_vector", x.f_vector()}};
}

std::string superscript(int value) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(value)) out += digits[c - '0'];
  return out;
}

void print_complex_header(std::ostream& out, const SimplicialComplex& x) {
  out << "complex: " << x.name() << " (" << x.vertices().size() << " vertices, dim " << x.dim()
      << ", f-vector";
  for (auto f : x.f_vector()) out << ' ' << f;
  out << ")\n";
}

void print_dims_table(std::ostream& out, const std::string& title, const GradedDims& d,
                      const std::string& degree_label = "degree") {
  out << title << '\n';
  out << std::setw(8) << degree_label << std::setw(8) << "rank" << '\n';
  if (d.empty()) out << std::setw(8) << "-" << std::setw(8) << 0 << '\n';
  for (const auto& [degree, rank] : d) {
    out << std::setw(8) << degree << std::setw(8) << rank << '\n';
  }
}

void emit(std::ostream& out, json doc) {
  doc["schema"] = kMachineSchemaVersion;
  out << doc.dump() << '\n';
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  const SimplicialComplex x = load_complex(o.complex_source);
  const GradedDims b = betti(x, o.coeff_dim);
  const GradedDims reduced = reduce(betti(x)).scaled(o.coeff_dim);
  if (o.output == OutputMode::machine) {
    emit(out, {{"command", "cohomology"},
               {"complex", complex_json(x)},
               {"coeff_dim", o.coeff_dim},
               {"betti", dims_json(b)},
               {"reduced_betti", dims_json(reduced)},
               {"euler_characteristic", euler_characteristic(x)}});
    return kExitOk;
  }
  print_complex_header(out, x);
  print_dims_table(out, "Ȟ (finite complex) rational cohomology, coefficients Q^" +
                            std::to_string(o.coeff_dim),
                   b);
  print_dims_table(out, "reduced", reduced);
  out << "euler characteristic: " << euler_characteristic(x) << '\n';
  return kExitOk;
}

int cmd_gauge(const Options& o, std::ostream& out) {
  const SimplicialComplex x = load_complex(o.complex_source);
  const RationalHSpace g = parse_group_spec(o.group_spec);
  const GaugeResult r = gauge_ranks(x, g);
  const HnilReport hnil = hnil_report(g, true);
  if (o.output == OutputMode::machine) {
    json em = json::array();
    for (const auto& [degree, rank] : r.em_decomposition) em.push_back({degree, rank});
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    emit(out, {{"command", "gauge"},
               {"complex", complex_json(x)},
               {"group", {{"name", g.name()},
                          {"homotopy_ranks", dims_json(g.homotopy_ranks())},
                          {"finite_dim_cohomology", g.finite_dim_cohomology()}}},
               {"free_ranks", dims_json(r.free_ranks)},
               {"based_ranks", dims_json(r.based_ranks)},
               {"em_decomposition", em},
               {"habelian", r.habelian},
               {"hnil", {{"group", opt(hnil.group_hnil)},
                         {"function_space", opt(hnil.function_space_hnil)},
                         {"em_decomposition_is_h_equivalence",
                          hnil.em_decomposition_is_h_equivalence}}}});
    return kExitOk;
  }
  print_complex_header(out, x);
  out << "group: " << g.name() << " homotopy ranks " << g.homotopy_ranks().to_string() << '\n';
  print_dims_table(out, "pi_j(F(X,G)o) (x) Q", r.free_ranks, "j");
  print_dims_table(out, "pi_j(F.(X,G)o) (x) Q", r.based_ranks, "j");
  out << "F(X,G)o ~Q";
  if (r.em_decomposition.empty()) out << " point";
  for (const auto& [degree, rank] : r.em_decomposition) {
    out << " K(Q^" << rank << "," << degree << ")";
  }
  out << '\n';
  auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : "unknown"; };
  out << "Hnil_Q(G) = " << show(hnil.group_hnil) << ", Hnil_Q(" << hnil.subject
      << ") = " << show(hnil.function_space_hnil) << '\n';
  out << "  " << hnil.explanation << '\n';
  return kExitOk;
}

int cmd_gl(const Options& o, std::ostream& out) {
  const SimplicialComplex x = load_complex(o.complex_source);
  const GradedDims b = betti(x);
  const GradedDims gl = gl_ranks_from_betti(b, *o.n);
  std::optional<StabilizationReport> stab;
  if (*o.n >= 2) stab = stabilization_from_betti(b, *o.n);
  if (o.output == OutputMode::machine) {
    json doc = {{"command", "gl"}, {"complex", complex_json(x)}, {"n", *o.n}, {"ranks", dims_json(gl)}};
    if (stab) {
      json rows = json::array();
      for (const auto& row : stab->rows) {
        rows.push_back({{"degree", row.degree},
                        {"dim_previous", row.dim_previous},
                        {"dim_current", row.dim_current},
                        {"cokernel", row.cokernel}});
      }
      doc["stabilization"] = {{"injective", stab->injective}, {"rows", rows}};
    }
    emit(out, doc);
    return kExitOk;
  }
  print_complex_header(out, x);
  print_dims_table(out, "pi_k(GL_" + std::to_string(*o.n) + "(C(X))o) (x) Q", gl, "k");
  if (stab) {
    out << "stabilization GL_" << *o.n - 1 << " -> GL_" << *o.n
        << (stab->injective ? " (injective)" : " (NOT injective)") << '\n';
    out << std::setw(6) << "k" << std::setw(10) << "GL_n-1" << std::setw(10) << "GL_n"
        << std::setw(10) << "coker" << '\n';
    for (const auto& row : stab->rows) {
      out << std::setw(6) << row.degree << std::setw(10) << row.dim_previous << std::setw(10)
          << row.dim_current << std::setw(10) << row.cokernel << '\n';
    }
  }
  return kExitOk;
}

int cmd_lc(const Options& o, std::ostream& out) {
  const SimplicialComplex x = load_complex(o.complex_source);
  const GradedDims lc = lc_ranks(x, *o.n);
  if (o.output == OutputMode::machine) {
    emit(out, {{"command", "lc"}, {"complex", complex_json(x)}, {"n", *o.n}, {"ranks", dims_json(lc)}});
    return kExitOk;
  }
  print_complex_header(out, x);
  print_dims_table(out, "pi_k(Lc_" + std::to_string(*o.n) + "(C(X))o) (x) Q", lc, "k");
  return kExitOk;
}

int cmd_les(const Options& o, std::ostream& out) {
  const SimplicialComplex x = load_complex(o.complex_source);
  const LesTable t = build_les(x, *o.n, o.k_max);
  const auto violations = verify_exactness(t);
  if (o.output == OutputMode::machine) {
    json rows = json::array();
    for (const auto& r : t.rows) {
      rows.push_back({{"degree", r.degree},
                      {"dim_gl_previous", r.dim_gl_previous},
                      {"dim_gl", r.dim_gl},
                      {"dim_lc", r.dim_lc},
                      {"rank_inclusion", r.rank_inclusion},
                      {"rank_projection", r.rank_projection},
                      {"rank_connecting", r.rank_connecting}});
    }
    json bad = json::array();
    for (const auto& v : violations) bad.push_back({{"degree", v.degree}, {"junction", v.junction}, {"detail", v.detail}});
    emit(out, {{"command", "les"},
               {"complex", complex_json(x)},
               {"n", t.n},
               {"rows", rows},
               {"exact", t.exact},
               {"violations", bad}});
    return kExitOk;
  }
  print_complex_header(out, x);
  out << "rational LES of GL_" << t.n - 1 << " -> GL_" << t.n << " -> Lc_" << t.n << '\n';
  out << std::setw(4) << "k" << std::setw(10) << "GL_n-1" << std::setw(8) << "GL_n" << std::setw(8)
      << "Lc_n" << std::setw(8) << "rk i" << std::setw(8) << "rk g" << std::setw(8) << "rk d"
      << '\n';
  for (const auto& r : t.rows) {
    out << std::setw(4) << r.degree << std::setw(10) << r.dim_gl_previous << std::setw(8)
        << r.dim_gl << std::setw(8) << r.dim_lc << std::setw(8) << r.rank_inclusion
        << std::setw(8) << r.rank_projection << std::setw(8) << r.rank_connecting << '\n';
  }
  out << "exact: " << (t.exact ? "yes" : "no") << '\n';
  for (const auto& v : violations) {
    out << "  violation at k=" << v.degree << " (" << v.junction << "): " << v.detail << '\n';
  }
  return kExitOk;
}

int cmd_recover(const Options& o, std::ostream& out) {
  GradedDims lc;
  std::optional<int> n = o.n;
  json source;
  if (!o.lc_data.empty()) {
    std::ifstream in(o.lc_data, std::ios::binary);
    if (!in) throw Error(ErrorCode::io, "cannot open Lc data file '" + o.lc_data + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::parse, o.lc_data + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("ranks")) {
      throw Error(ErrorCode::parse, o.lc_data + ": expected an object with key \"ranks\"");
    }
    lc = dims_from_json(doc["ranks"], o.lc_data + ": \"ranks\"");
    if (doc.contains("n")) {
      const int file_n = doc["n"].get<int>();
      if (n && *n != file_n) {
        throw Error(ErrorCode::invalid_argument, "--n " + std::to_string(*n) +
                                                     " disagrees with n = " +
                                                     std::to_string(file_n) + " in " + o.lc_data);
      }
      n = file_n;
    }
    if (!n) throw Error(ErrorCode::invalid_argument, "--n is required when the Lc data has no n");
    source = {{"lc_data", o.lc_data}};
  } else {
    const SimplicialComplex x = load_complex(o.complex_source);
    lc = lc_ranks(x, *n);
    source = {{"complex", complex_json(x)}};
  }
  const Rank rank = recover_cohomology(lc, *n, *o.s);
  if (o.output == OutputMode::machine) {
    json doc = {{"command", "recover"}, {"n", *n}, {"s", *o.s}, {"lc_degree", 2 * *n - 1 - *o.s}, {"rank", rank}};
    doc.update(source);
    emit(out, doc);
    return kExitOk;
  }
  out << "rank Ȟ" << superscript(*o.s) << " = " << rank << "  (from pi_" << 2 * *n - 1 - *o.s
      << "(Lc_" << *n << ") (x) Q)\n";
  return kExitOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  std::vector<std::int64_t> coeffs;
  std::stringstream ss(o.poly);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse, "--poly: '" + item + "' is not an integer coefficient");
    }
  }
  const PoincarePoly p(coeffs);
  const auto degrees = factor_poincare(p);
  if (o.output == OutputMode::machine) {
    emit(out, {{"command", "factor"}, {"coeffs", p.coeffs()}, {"generator_degrees", degrees}});
    return kExitOk;
  }
  out << "generator degrees:";
  if (degrees.empty()) out << " (none)";
  for (int d : degrees) out << ' ' << d;
  out << '\n';
  return kExitOk;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  json list = json::array();
  for (const auto& x : builtin_corpus()) {
    const GradedDims b = betti(x);
    if (o.output == OutputMode::machine) {
      json entry = complex_json(x);
      entry["betti"] = dims_json(b);
      list.push_back(entry);
    } else {
      out << std::left << std::setw(14) << x.name() << std::right << " dim " << x.dim()
          << "  vertices " << std::setw(2) << x.vertices().size() << "  betti " << b.to_string()
          << '\n';
    }
  }
  if (o.output == OutputMode::machine) emit(out, {{"command", "corpus"}, {"complexes", list}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational cohomology of finite complexes and rational homotopy of GL_n(C(X)), "
               "Lc_n(C(X)) and gauge groups F(X,G)",
               "rathom"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, OutputMode> modes{{"text", OutputMode::text},
                                                {"machine", OutputMode::machine}};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "text | machine")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  };
  auto add_complex = [&](CLI::App* sub) {
    return sub->add_option("--complex", o.complex_source, "complex file or builtin:NAME");
  };
  auto add_n = [&](CLI::App* sub, int minimum) {
    return sub->add_option("--n", o.n, "matrix size")->check(CLI::Range(minimum, 1000));
  };

  auto* cohomology = app.add_subcommand("cohomology", "rational cohomology ranks of X");
  add_complex(cohomology)->required();
  cohomology->add_option("--coeff-dim", o.coeff_dim, "coefficients in Q^d")->check(CLI::Range(1, 1'000'000));

  auto* gauge = app.add_subcommand("gauge", "rational homotopy of F(X,G)o and F.(X,G)o");
  add_complex(gauge)->required();
  gauge->add_option("--group", o.group_spec, "U(n) SU(n) Sp(n) S(m) K(d:r,...) trivial")->required();

  auto* gl = app.add_subcommand("gl", "rational homotopy of GL_n(C(X))o");
  add_complex(gl)->required();
  add_n(gl, 1)->required();

  auto* lc = app.add_subcommand("lc", "rational homotopy of Lc_n(C(X))o");
  add_complex(lc)->required();
  add_n(lc, 1)->required();

  auto* les = app.add_subcommand("les", "rational LES of GL_{n-1} -> GL_n -> Lc_n");
  add_complex(les)->required();
  add_n(les, 2)->required();
  les->add_option("--k-max", o.k_max, "top degree (default 2n-1+dim X)")->check(CLI::Range(1, 10'000));

  auto* recover = app.add_subcommand("recover", "read H^s(X;Q) off pi_*(Lc_n) (x) Q");
  auto* recover_complex = add_complex(recover);
  auto* recover_lc = recover->add_option("--lc-data", o.lc_data, "machine output of `lc`");
  recover_complex->excludes(recover_lc);
  add_n(recover, 1);
  recover->add_option("--s", o.s, "cohomological degree")->required()->check(CLI::Range(0, 10'000));

  auto* factor = app.add_subcommand("factor", "generator degrees of an exterior Poincare polynomial");
  factor->add_option("--poly", o.poly, "coefficients from degree 0, e.g. 1,1,0,1,1")->required();

  auto* corpus = app.add_subcommand("corpus", "list builtin complexes");

  for (auto* sub : {cohomology, gauge, gl, lc, les, recover, factor, corpus}) add_output(sub);

  std::vector<const char*> argv{"rathom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (recover->parsed()) {
      if (o.complex_source.empty() && o.lc_data.empty()) {
        throw CLI::RequiredError("recover: one of --complex or --lc-data");
      }
      if (!o.complex_source.empty() && !o.n) throw CLI::RequiredError("--n");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rathom: usage error: " << e.what() << '\n';
    err << "run 'rathom --help' for usage\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (cohomology->parsed()) return cmd_cohomology(o, out);
    if (gauge->parsed()) return cmd_gauge(o, out);
    if (gl->parsed()) return cmd_gl(o, out);
    if (lc->parsed()) return cmd_lc(o, out);
    if (les->parsed()) return cmd_les(o, out);
    if (recover->parsed()) return cmd_recover(o, out);
    if (factor->parsed()) return cmd_factor(o, out);
    return cmd_corpus(o, out);
  } catch (const Error& e) {
    err << "rathom: error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    if (o.output == OutputMode::machine) {
      emit(out, {{"command", command},
                 {"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}});
    }
    return kExitDomainError;
  }
}

}  // namespace rathom::cli
