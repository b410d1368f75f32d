// Command-line front end for the stable class algebra library.
//
// Exit codes: 0 success / verified, 1 verification failure, 2 usage or parse
// error, 3 resource guard tripped.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "classalg/classalg.hpp"

namespace {

struct CommonOpts {
  std::string family = "s1";
  bool json = false;
  std::string out;
  bool force = false;
  int parallel = 1;
  int max_n = -1;  // raises caps and guards when set
};

int effective_cap(const CommonOpts& opts) {
  return std::max(classalg::kDefaultAmbientCap, opts.max_n);
}

classalg::StarOptions star_options(const CommonOpts& opts) {
  return {opts.parallel, effective_cap(opts)};
}

bool guard_overridden(const CommonOpts& opts, int requested) {
  return opts.max_n >= 0 && opts.max_n >= requested;
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw classalg::io_error("cannot open '" + opts.out + "' for writing");
  file << text;
  if (!file) throw classalg::io_error("failed writing '" + opts.out + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw classalg::io_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

classalg::ConjugacyClass parse_class(const CommonOpts& opts, const std::string& literal) {
  auto family = classalg::parse_family(opts.family);
  return classalg::canonicalize(classalg::parse_element(family, literal), effective_cap(opts));
}

void print_element(const CommonOpts& opts, const std::string& heading,
                   const classalg::AlgebraElement& u) {
  if (opts.json) {
    emit(opts, classalg::algebra_json(u).dump() + "\n");
  } else {
    emit(opts, heading + classalg::algebra_text(u) + "\n");
  }
}

int cmd_binary_op(const CommonOpts& opts, const std::string& g_lit, const std::string& h_lit,
                  const std::string& op) {
  auto g = parse_class(opts, g_lit);
  auto h = parse_class(opts, h_lit);
  auto u = classalg::AlgebraElement::basis(g);
  auto v = classalg::AlgebraElement::basis(h);
  classalg::AlgebraElement result = [&] {
    if (op == "mult") return classalg::star(u, v, star_options(opts));
    if (op == "bullet") return classalg::graded_product(u, v, star_options(opts));
    return classalg::graded_bracket(u, v, star_options(opts));
  }();
  const char* symbol = op == "mult" ? " * " : op == "bullet" ? " . " : ", ";
  std::string heading = op == "bracket"
                            ? "[B[" + g.key() + "]" + symbol + "B[" + h.key() + "]] = "
                            : "B[" + g.key() + "]" + symbol + "B[" + h.key() + "] = ";
  print_element(opts, heading, result);
  return 0;
}

int cmd_involution(const CommonOpts& opts, const std::string& g_lit) {
  auto g = parse_class(opts, g_lit);
  auto result = classalg::involution(classalg::AlgebraElement::basis(g));
  print_element(opts, "B[" + g.key() + "]^* = ", result);
  return 0;
}

int cmd_degree(const CommonOpts& opts, const std::string& g_lit) {
  auto g = parse_class(opts, g_lit);
  const int d = classalg::degree(classalg::AlgebraElement::basis(g));
  if (opts.json) {
    classalg::json j;
    j["degree"] = d;
    emit(opts, j.dump() + "\n");
  } else {
    emit(opts, std::to_string(d) + "\n");
  }
  return 0;
}

int cmd_classes(const CommonOpts& opts, int n) {
  auto family = classalg::parse_family(opts.family);
  auto classes = classalg::class_enumerate(family, n, guard_overridden(opts, n));
  if (opts.json) {
    classalg::json j;
    j["family"] = classalg::family_json(family);
    j["n"] = n;
    j["count"] = classes.size();
    classalg::json list = classalg::json::array();
    for (const auto& c : classes) {
      classalg::json item;
      item["n"] = c.ambient();
      item["rep"] = c.rep().to_literal(false);
      item["key"] = c.key();
      item["size"] = classalg::conjugacy_orbit(c.rep()).size();
      list.push_back(std::move(item));
    }
    j["classes"] = std::move(list);
    emit(opts, j.dump() + "\n");
  } else {
    std::string out;
    for (const auto& c : classes)
      out += c.key() + " " + std::to_string(classalg::conjugacy_orbit(c.rep()).size()) + "\n";
    emit(opts, out);
  }
  return 0;
}

int cmd_table(const CommonOpts& opts, int n_max, const std::string& format) {
  if (format != "csv") throw classalg::unsupported_format("table format must be csv");
  auto family = classalg::parse_family(opts.family);
  const auto manifest = classalg::table_manifest_json(family, n_max).dump() + "\n";
  if (!opts.out.empty() && !opts.force) {
    const std::string manifest_path = opts.out + ".manifest.json";
    if (std::filesystem::exists(opts.out) && std::filesystem::exists(manifest_path) &&
        read_file(manifest_path) == manifest) {
      std::cerr << "table cache at '" << opts.out << "' is current; pass --force to recompute\n";
      return 0;
    }
  }
  const auto csv = classalg::structure_constant_table_csv(family, n_max, star_options(opts),
                                                          guard_overridden(opts, n_max));
  emit(opts, csv);
  if (!opts.out.empty()) {
    std::ofstream file(opts.out + ".manifest.json", std::ios::binary);
    if (!file) throw classalg::io_error("cannot write table manifest");
    file << manifest;
  }
  return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& g_lit, const std::string& h_lit,
               int from, std::optional<int> to) {
  auto g = parse_class(opts, g_lit);
  auto h = parse_class(opts, h_lit);
  const int hi = to.value_or(classalg::detail::verification_guard(g.family()));
  auto report = classalg::verify_stability(g, h, from, hi, guard_overridden(opts, hi),
                                           star_options(opts));
  if (opts.json) emit(opts, classalg::stability_report_json(report).dump() + "\n");
  else emit(opts, classalg::stability_report_text(report));
  return report.all_pass() ? 0 : 1;
}

classalg::CheckerSurface parse_surface(const CommonOpts& opts, const std::string& literal) {
  auto family = classalg::FamilyDescriptor::product(2);
  auto g = classalg::parse_element(family, literal);
  return classalg::CheckerSurface(g.ambient(), g.rows()[0], g.rows()[1]);
}

int cmd_surface_analyze(const CommonOpts& opts, const std::string& literal) {
  auto s = parse_surface(opts, literal);
  if (opts.json) {
    emit(opts, classalg::surface_export(s, "json"));
    return 0;
  }
  auto topology = classalg::surface_topology(s);
  std::string out = "N: " + std::to_string(s.triangles) + "\n";
  out += "red: " + s.red.cycle_string() + "\n";
  out += "yellow: " + s.yellow.cycle_string() + "\n";
  out += "components: " + std::to_string(topology.components.size()) + "\n";
  for (std::size_t i = 0; i < topology.components.size(); ++i) {
    const auto& c = topology.components[i];
    out += "  #" + std::to_string(i + 1) + ": faces=" + std::to_string(c.faces) +
           " edges=" + std::to_string(c.edges) + " vertices=" + std::to_string(c.vertices) +
           " chi=" + std::to_string(c.euler) + " genus=" + std::to_string(c.genus) + "\n";
  }
  out += "total: faces=" + std::to_string(topology.faces) + " edges=" + std::to_string(topology.edges) +
         " vertices=" + std::to_string(topology.vertices) + " chi=" + std::to_string(topology.euler) +
         "\n";
  emit(opts, out);
  return 0;
}

int cmd_surface_export(const CommonOpts& opts, const std::string& literal, const std::string& format) {
  auto s = parse_surface(opts, literal);
  emit(opts, classalg::surface_export(s, format));
  return 0;
}

int cmd_diagnose_scaling(const CommonOpts& opts, const std::string& g_lit, int j_max, int big_max) {
  auto family = classalg::parse_family(opts.family);
  auto g = classalg::parse_element(family, g_lit);
  auto rows = classalg::measure_ambient_scaling(g, j_max, big_max);
  if (opts.json) {
    classalg::json j;
    j["family"] = classalg::family_json(family);
    j["g"] = g.to_literal();
    classalg::json list = classalg::json::array();
    for (const auto& row : rows) {
      classalg::json item;
      item["j"] = row.declared_ambient;
      item["N"] = row.group_ambient;
      item["proportional"] = row.proportional;
      if (row.proportional) item["scalar"] = classalg::coeff_json(row.scalar);
      list.push_back(std::move(item));
    }
    j["rows"] = std::move(list);
    emit(opts, j.dump() + "\n");
  } else {
    std::string out = "scaling of averaged " + g.to_literal() + " by declared ambient\n";
    for (const auto& row : rows) {
      out += "j=" + std::to_string(row.declared_ambient) + " N=" + std::to_string(row.group_ambient);
      if (row.proportional) out += " scalar=" + row.scalar.str() + "\n";
      else out += " NOT proportional\n";
    }
    emit(opts, out);
  }
  return 0;
}

int cmd_diagnose_span(const CommonOpts& opts, int n) {
  auto family = classalg::parse_family(opts.family);
  auto report = classalg::integer_span_index(family, n, guard_overridden(opts, n));
  if (opts.json) {
    classalg::json j;
    j["family"] = classalg::family_json(family);
    j["N"] = report.group_ambient;
    j["classes"] = report.class_count;
    j["generators"] = report.generator_count;
    j["rank"] = report.rank;
    j["full_rank"] = report.full_rank;
    if (report.full_rank) j["index"] = classalg::coeff_json(report.index);
    emit(opts, j.dump() + "\n");
  } else {
    std::string out = "averaged elements inside Z^{classes of G_" +
                      std::to_string(report.group_ambient) + "}\n";
    out += "classes: " + std::to_string(report.class_count) + ", generators: " +
           std::to_string(report.generator_count) + ", rank: " + std::to_string(report.rank) + "\n";
    if (report.full_rank) out += "index of the integer span: " + report.index.str() + "\n";
    else out += "span is not of full rank\n";
    emit(opts, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable conjugacy class algebras of symmetric group families"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  app.add_option("--family", opts.family, "family literal: s1, s2, sm:<m>, full:<l1,l2,...>");
  app.add_flag("--json", opts.json, "emit JSON instead of text");
  app.add_option("--out", opts.out, "write output to a file instead of stdout");
  app.add_flag("--force", opts.force, "recompute cached outputs");
  app.add_option("--parallel", opts.parallel, "worker count for product expansions")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", opts.max_n, "raise ambient caps and resource guards to this size");

  std::string g_lit, h_lit;
  auto* mult = app.add_subcommand("mult", "stable product of two basis classes");
  mult->add_option("first", g_lit, "first element literal")->required();
  mult->add_option("second", h_lit, "second element literal")->required();

  auto* bullet = app.add_subcommand("bullet", "top-degree (graded) product");
  bullet->add_option("first", g_lit, "first element literal")->required();
  bullet->add_option("second", h_lit, "second element literal")->required();

  auto* bracket = app.add_subcommand("bracket", "graded bracket");
  bracket->add_option("first", g_lit, "first element literal")->required();
  bracket->add_option("second", h_lit, "second element literal")->required();

  auto* invol = app.add_subcommand("involution", "class of the inverses");
  invol->add_option("element", g_lit, "element literal")->required();

  auto* deg = app.add_subcommand("degree", "filtration degree of a basis class");
  deg->add_option("element", g_lit, "element literal")->required();

  int classes_n = 0;
  auto* classes = app.add_subcommand("classes", "conjugacy classes at one ambient size");
  classes->add_option("--n", classes_n, "ambient size")->required();

  int table_n_max = 0;
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "structure constant table");
  table->add_option("--n-max", table_n_max, "largest basis ambient size")->required();
  table->add_option("--format", table_format, "output format (csv)");

  int verify_from = 0;
  std::optional<int> verify_to;
  auto* verify = app.add_subcommand("verify", "check the stable expansion inside finite groups");
  verify->add_option("first", g_lit, "first element literal")->required();
  verify->add_option("second", h_lit, "second element literal")->required();
  verify->add_option("--from", verify_from, "smallest group ambient size");
  verify->add_option("--to", verify_to, "largest group ambient size (default: family guard)");

  auto* surface = app.add_subcommand("surface", "checker surface tools");
  surface->require_subcommand(1);
  surface->fallthrough();
  std::string surface_lit;
  auto* analyze = surface->add_subcommand("analyze", "components, Euler characteristic, genus");
  analyze->add_option("pair", surface_lit, "two-row element literal, e.g. \"(1 2)|e@2\"")->required();
  std::string export_format = "json";
  auto* exp = surface->add_subcommand("export", "write the surface as JSON or DOT");
  exp->add_option("pair", surface_lit, "two-row element literal")->required();
  exp->add_option("--format", export_format, "json or dot");

  auto* diagnose = app.add_subcommand("diagnose", "numerical diagnostics");
  diagnose->require_subcommand(1);
  diagnose->fallthrough();
  std::string scaling_g = "(1 2)";
  int scaling_j_max = 4;
  int scaling_big_max = 6;
  auto* scaling = diagnose->add_subcommand(
      "scaling", "scalar between averaged copies of one permutation at different ambients");
  scaling->add_option("--g", scaling_g, "underlying element literal");
  scaling->add_option("--j-max", scaling_j_max, "largest declared ambient");
  scaling->add_option("--N-max", scaling_big_max, "largest group ambient");
  int span_n = 2;
  auto* span = diagnose->add_subcommand(
      "span", "index of the integer span of averaged elements");
  span->add_option("--n", span_n, "group ambient size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mult->parsed()) return cmd_binary_op(opts, g_lit, h_lit, "mult");
    if (bullet->parsed()) return cmd_binary_op(opts, g_lit, h_lit, "bullet");
    if (bracket->parsed()) return cmd_binary_op(opts, g_lit, h_lit, "bracket");
    if (invol->parsed()) return cmd_involution(opts, g_lit);
    if (deg->parsed()) return cmd_degree(opts, g_lit);
    if (classes->parsed()) return cmd_classes(opts, classes_n);
    if (table->parsed()) return cmd_table(opts, table_n_max, table_format);
    if (verify->parsed()) return cmd_verify(opts, g_lit, h_lit, verify_from, verify_to);
    if (surface->parsed()) {
      if (analyze->parsed()) return cmd_surface_analyze(opts, surface_lit);
      return cmd_surface_export(opts, surface_lit, export_format);
    }
    if (diagnose->parsed()) {
      if (scaling->parsed()) return cmd_diagnose_scaling(opts, scaling_g, scaling_j_max, scaling_big_max);
      return cmd_diagnose_span(opts, span_n);
    }
  } catch (const classalg::cap_exceeded& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const classalg::resource_guard& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const classalg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
