#include "qcoalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "qcoalg/comodule.hpp"
#include "qcoalg/errors.hpp"
#include "qcoalg/io.hpp"
#include "qcoalg/relations.hpp"
#include "qcoalg/report.hpp"
#include "qcoalg/selftest.hpp"

namespace qcoalg {

namespace {

// Missing or inconsistent flags count as command-line parse errors.
[[noreturn]] void usage(const std::string& what) { throw ParseError(what); }

struct Options {
  std::string format = "json";
  std::string quiver, coalgebra, relations, module, output;
  std::string vertices, source, target, element, path;
  std::optional<std::size_t> maxlen;
  bool classify = false;
  std::string action;
  std::size_t cap = kDefaultCotensorCap;
  std::uint64_t seed = 1;
  std::size_t trials = 20;
};

struct LoadedCoalgebra {
  CoalgebraSpec spec;
  std::size_t max_length;
  CoalgebraPtr c;
};

std::size_t default_length(const std::vector<PathVector>& gens) {
  std::size_t l = 1;
  for (const auto& g : gens) l = std::max(l, g.max_length());
  return l;
}

LoadedCoalgebra load_coalgebra(const Options& o) {
  if (o.coalgebra.empty()) usage("--coalgebra is required");
  LoadedCoalgebra out;
  out.spec = parse_coalgebra(read_file(o.coalgebra));
  out.max_length = o.maxlen.value_or(
      out.spec.max_length.value_or(default_length(out.spec.generators)));
  out.c = std::make_shared<const GradedSubcoalgebra>(subcoalgebra_closure(
      out.spec.quiver, out.spec.generators, out.max_length,
      out.spec.admissible));
  return out;
}

QuiverPtr load_quiver(const Options& o) {
  if (o.quiver.empty()) usage("--quiver is required");
  return parse_quiver(read_file(o.quiver));
}

VertexSubset parse_vertices(const Quiver& q, const std::string& list) {
  if (list.empty()) usage("--vertices is required");
  std::vector<std::string> ids;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t end = std::min(list.find(',', pos), list.size());
    std::string id = list.substr(pos, end - pos);
    if (!id.empty()) ids.push_back(id);
    pos = end + 1;
  }
  return VertexSubset::from_ids(q, ids);
}

Vertex vertex_flag(const Quiver& q, const std::string& id, const char* flag) {
  if (id.empty()) usage(std::string(flag) + " is required");
  return q.vertex(id);
}

std::size_t require_maxlen(const Options& o) {
  if (!o.maxlen) usage("--maxlen is required");
  return *o.maxlen;
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ContractError("cli", "cannot write file '" + path + "'");
  f << text;
}

Report cmd_paths(const Options& o) {
  auto q = load_quiver(o);
  const std::size_t l = require_maxlen(o);
  Vertex a = vertex_flag(*q, o.source, "--source");
  Vertex b = vertex_flag(*q, o.target, "--target");
  auto paths = enumerate_paths(*q, a, b, l);
  return {{"source", o.source},
          {"target", o.target},
          {"max_length", l},
          {"count", paths.size()},
          {"paths", path_list_report(*q, paths)},
          {"acyclic", is_acyclic(*q)},
          {"intervally_finite_upto_bound", is_intervally_finite_upto(*q, l)}};
}

Report decomposition_report(const Quiver& q, const VertexSubset& x,
                            const std::string& text) {
  Path p = parse_path(q, text);
  if (x.contains(p.target())) {
    auto d = cellular_decomposition(q, p, x);
    return {{"path", q.format_path(p)},
            {"cells", path_list_report(q, d.cells)}};
  }
  auto d = tail_decomposition(q, p, x);
  return {{"path", q.format_path(p)},
          {"cells", path_list_report(q, d.cells)},
          {"tail", q.format_path(d.tail)}};
}

Report cmd_cells(const Options& o) {
  auto q = load_quiver(o);
  auto x = parse_vertices(*q, o.vertices);
  if (!o.path.empty()) return decomposition_report(*q, x, o.path);
  const std::size_t l = require_maxlen(o);
  Vertex a = vertex_flag(*q, o.source, "--source");
  Vertex b = vertex_flag(*q, o.target, "--target");
  auto cells = enumerate_cells(*q, x, a, b, l);
  return {{"source", o.source},
          {"target", o.target},
          {"max_length", l},
          {"count", cells.size()},
          {"cells", path_list_report(*q, cells)}};
}

Report cmd_tails(const Options& o) {
  auto q = load_quiver(o);
  auto x = parse_vertices(*q, o.vertices);
  if (!o.path.empty()) return decomposition_report(*q, x, o.path);
  const std::size_t l = require_maxlen(o);
  Vertex a = vertex_flag(*q, o.source, "--source");
  auto tails = enumerate_tails(*q, x, a, l);
  return {{"source", o.source},
          {"max_length", l},
          {"count", tails.size()},
          {"tails", path_list_report(*q, tails)}};
}

Report cmd_delta(const Options& o) {
  auto q = load_quiver(o);
  if (o.element.empty()) usage("--element is required");
  PathVector v = parse_path_vector(*q, o.element);
  return {{"element", format_path_vector(*q, v)},
          {"counit", counit(v).get_str()},
          {"terms", tensor_report(*q, delta_elem(*q, v))}};
}

Report cmd_closure(const Options& o) {
  auto lc = load_coalgebra(o);
  Report gens = Report::array();
  for (const auto& g : lc.spec.generators)
    gens.push_back(format_path_vector(*lc.spec.quiver, g));
  Report r = {{"quiver", quiver_report(*lc.spec.quiver)},
              {"generators", std::move(gens)},
              {"requested_admissible", lc.spec.admissible}};
  r.update(coalgebra_report(*lc.c));
  return r;
}

Report cmd_localize(const Options& o) {
  auto lc = load_coalgebra(o);
  auto x = parse_vertices(lc.c->quiver(), o.vertices);
  auto loc = localize_coalgebra(lc.c, x);
  Report r = localization_report(loc);
  if (o.classify)
    r["classification"] = classification_report(
        lc.c->quiver(), classify_idempotent(*lc.c, x, lc.max_length),
        lc.max_length);
  return r;
}

Report cmd_classify(const Options& o) {
  auto lc = load_coalgebra(o);
  auto x = parse_vertices(lc.c->quiver(), o.vertices);
  Report r = {{"vertices", Report::array()}};
  for (Vertex v : x.members()) r["vertices"].push_back(lc.c->quiver().vertex_id(v));
  r.update(classification_report(lc.c->quiver(),
                                 classify_idempotent(*lc.c, x, lc.max_length),
                                 lc.max_length));
  return r;
}

Report cmd_dualize(const Options& o) {
  if (!o.relations.empty()) {
    auto q = load_quiver(o);
    RelationSpec rel = parse_relations(*q, read_file(o.relations));
    const std::size_t l = o.maxlen.value_or(
        rel.max_length.value_or(default_length(rel.relations)));
    RelationIdeal omega(std::make_shared<const PathTable>(q, l), rel.relations);
    GradedSubcoalgebra c = coalgebra_of_relations(omega);
    const bool exact = relations_of_coalgebra(c) == omega;
    if (!o.output.empty())
      write_output(o.output, format_coalgebra({q, c.basis(), true, l}));
    return {{"direction", "relations_to_coalgebra"},
            {"ideal", ideal_report(omega)},
            {"coalgebra", coalgebra_report(c)},
            {"round_trip_exact", exact}};
  }
  auto lc = load_coalgebra(o);
  RelationIdeal omega = relations_of_coalgebra(*lc.c);
  const bool exact = coalgebra_of_relations(omega) == *lc.c;
  if (!o.output.empty())
    write_output(o.output,
                 format_relations(lc.c->quiver(),
                                  {omega.generators(), lc.max_length}));
  return {{"direction", "coalgebra_to_relations"},
          {"coalgebra", coalgebra_report(*lc.c)},
          {"ideal", ideal_report(omega)},
          {"round_trip_exact", exact}};
}

Report cmd_criterion(const Options& o) {
  auto lc = load_coalgebra(o);
  const Quiver& q = lc.c->quiver();
  Vertex x = vertex_flag(q, o.source, "--source");
  Vertex y = vertex_flag(q, o.target, "--sink");
  Report r = witness_report(q, criterion_witness(*lc.c, x, y, lc.max_length));
  Report sizes = Report::array();
  for (std::size_t l = 1; l <= lc.max_length; ++l)
    sizes.push_back(criterion_witness(*lc.c, x, y, l).size());
  r["sizes_by_bound"] = std::move(sizes);
  return r;
}

Report cmd_comodule(const Options& o) {
  auto lc = load_coalgebra(o);
  if (o.module.empty()) usage("--module is required");
  const std::string text = read_file(o.module);
  const Quiver& q = lc.c->quiver();

  if (o.action == "validate")
    return validation_report(validate(parse_comodule(lc.c, text)));

  auto require_valid = [](const FinComodule& m) {
    auto v = validate(m);
    if (!v.valid)
      throw ContractError("comodules", "invalid comodule: " + v.problems.front());
  };

  if (o.action == "length") {
    FinComodule m = parse_comodule(lc.c, text);
    require_valid(m);
    auto f = socle_filtration(m);
    auto s = socle(m);
    Report homs = Report::object();
    for (Vertex x = 0; x < q.num_vertices(); ++x)
      homs[q.vertex_id(x)] = hom_simple(m, x).rank();
    return {{"dim", m.dim()},
            {"length_vector", length_vector_report(q, f.lengths)},
            {"total_length", total_length(f.lengths)},
            {"loewy_length", f.loewy_length},
            {"socle_dimension", s.space.rank()},
            {"hom_simple_dimensions", std::move(homs)}};
  }

  auto x = parse_vertices(q, o.vertices);
  auto loc = localize_coalgebra(lc.c, x);
  const Quiver& local = loc.quiver->quiver();
  if (o.action == "quotient") {
    FinComodule m = parse_comodule(lc.c, text);
    require_valid(m);
    FinComodule em = quotient_functor(m, loc);
    return {{"source_length_vector", length_vector_report(q, length_vector(m))},
            {"quotient", comodule_report(em)},
            {"length_vector", length_vector_report(local, length_vector(em))}};
  }
  if (o.action == "section") {
    FinComodule n = parse_comodule(loc.coalgebra, text);
    require_valid(n);
    FinComodule s = cotensor_section(n, loc, o.cap);
    const LengthVector ln = length_vector(n);
    const LengthVector lts = length_vector(quotient_functor(s, loc));
    return {{"input_length_vector", length_vector_report(local, ln)},
            {"section", comodule_report(s)},
            {"length_vector", length_vector_report(q, length_vector(s))},
            {"quotient_of_section_matches_input", ln == lts}};
  }
  usage("unknown comodule action '" + o.action + "'");
}

Report cmd_roundtrip(const Options& o) {
  if (!o.module.empty()) {
    auto lc = load_coalgebra(o);
    FinComodule m = parse_comodule(lc.c, read_file(o.module));
    std::string text = format_comodule(m);
    FinComodule again = parse_comodule(lc.c, text);
    return {{"kind", "comodule"},
            {"canonical", text},
            {"identical", again.coefficients() == m.coefficients() &&
                              format_comodule(again) == text}};
  }
  if (!o.coalgebra.empty()) {
    CoalgebraSpec spec = parse_coalgebra(read_file(o.coalgebra));
    std::string text = format_coalgebra(spec);
    CoalgebraSpec again = parse_coalgebra(text);
    return {{"kind", "coalgebra"},
            {"canonical", text},
            {"identical", *again.quiver == *spec.quiver &&
                              again.generators == spec.generators &&
                              again.admissible == spec.admissible &&
                              again.max_length == spec.max_length}};
  }
  auto q = load_quiver(o);
  if (!o.relations.empty()) {
    RelationSpec rel = parse_relations(*q, read_file(o.relations));
    std::string text = format_relations(*q, rel);
    RelationSpec again = parse_relations(*q, text);
    return {{"kind", "relations"},
            {"canonical", text},
            {"identical", again.relations == rel.relations &&
                              again.max_length == rel.max_length}};
  }
  std::string text = format_quiver(*q);
  return {{"kind", "quiver"},
          {"canonical", text},
          {"identical", *parse_quiver(text) == *q}};
}

Report cmd_selftest(const Options& o, bool& failed) {
  Report suites = Report::array();
  failed = false;
  for (const auto& s : run_selftest(o.seed, o.trials)) {
    failed |= s.failures > 0;
    suites.push_back({{"name", s.name},
                      {"trials", s.trials},
                      {"failures", s.failures},
                      {"first_failure", s.first_failure}});
  }
  return {{"seed", o.seed}, {"suites", std::move(suites)}, {"passed", !failed}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact computations with quivers, path coalgebras and comodules",
               "qcoalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  auto maxlen = [&](CLI::App* sub) {
    sub->add_option_function<std::size_t>(
        "--maxlen", [&](const std::size_t& l) { o.maxlen = l; },
        "Path length bound");
  };
  auto* paths = app.add_subcommand("paths", "Enumerate paths between two vertices");
  paths->add_option("--quiver", o.quiver)->required();
  paths->add_option("--source", o.source)->required();
  paths->add_option("--target", o.target)->required();
  maxlen(paths);

  auto* cells = app.add_subcommand("cells", "Cells relative to a vertex subset, or a cellular decomposition");
  cells->add_option("--quiver", o.quiver)->required();
  cells->add_option("--vertices", o.vertices)->required();
  cells->add_option("--source", o.source);
  cells->add_option("--target", o.target);
  cells->add_option("--path", o.path, "Decompose this path instead");
  maxlen(cells);

  auto* tails = app.add_subcommand("tails", "Tails at a vertex, or a tail decomposition");
  tails->add_option("--quiver", o.quiver)->required();
  tails->add_option("--vertices", o.vertices)->required();
  tails->add_option("--source", o.source);
  tails->add_option("--path", o.path, "Decompose this path instead");
  maxlen(tails);

  auto* delta_cmd = app.add_subcommand("delta", "Comultiplication and counit of an element");
  delta_cmd->add_option("--quiver", o.quiver)->required();
  delta_cmd->add_option("--element", o.element)->required();

  auto* closure = app.add_subcommand("closure", "Subcoalgebra generated by a coalgebra file");
  closure->add_option("--coalgebra", o.coalgebra)->required();
  maxlen(closure);

  auto* localize = app.add_subcommand("localize", "Localize at a vertex subset");
  localize->add_option("--coalgebra", o.coalgebra)->required();
  localize->add_option("--vertices", o.vertices)->required();
  localize->add_flag("--classify", o.classify, "Also classify the idempotent");
  maxlen(localize);

  auto* classify = app.add_subcommand("classify", "Semicentral, split and colocalizing tests");
  classify->add_option("--coalgebra", o.coalgebra)->required();
  classify->add_option("--vertices", o.vertices)->required();
  maxlen(classify);

  auto* dualize = app.add_subcommand("dualize", "Relations to coalgebra (--quiver/--relations) or back (--coalgebra)");
  dualize->add_option("--quiver", o.quiver);
  dualize->add_option("--relations", o.relations);
  dualize->add_option("--coalgebra", o.coalgebra);
  dualize->add_option("--output", o.output, "Write the dual object as a file");
  maxlen(dualize);

  auto* criterion = app.add_subcommand("criterion", "Bounded witness family for the non-relation criterion");
  criterion->add_option("--coalgebra", o.coalgebra)->required();
  criterion->add_option("--source", o.source)->required();
  criterion->add_option("--sink", o.target)->required();
  maxlen(criterion);

  auto* comodule = app.add_subcommand("comodule", "Finite-dimensional comodule operations");
  comodule->add_option("action", o.action, "validate | length | quotient | section")
      ->required()
      ->check(CLI::IsMember({"validate", "length", "quotient", "section"}));
  comodule->add_option("--coalgebra", o.coalgebra)->required();
  comodule->add_option("--module", o.module)->required();
  comodule->add_option("--vertices", o.vertices);
  comodule->add_option("--cap", o.cap, "Dimension cap for the cotensor space");
  maxlen(comodule);

  auto* roundtrip = app.add_subcommand("roundtrip", "Parse, print canonically and re-parse a file");
  roundtrip->add_option("--quiver", o.quiver);
  roundtrip->add_option("--coalgebra", o.coalgebra);
  roundtrip->add_option("--relations", o.relations);
  roundtrip->add_option("--module", o.module);
  maxlen(roundtrip);

  auto* selftest = app.add_subcommand("selftest", "Randomized property suites");
  selftest->add_option("--seed", o.seed);
  selftest->add_option("--trials", o.trials);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::map<CLI::App*, std::function<Report()>> commands = {
      {paths, [&] { return cmd_paths(o); }},
      {cells, [&] { return cmd_cells(o); }},
      {tails, [&] { return cmd_tails(o); }},
      {delta_cmd, [&] { return cmd_delta(o); }},
      {closure, [&] { return cmd_closure(o); }},
      {localize, [&] { return cmd_localize(o); }},
      {classify, [&] { return cmd_classify(o); }},
      {dualize, [&] { return cmd_dualize(o); }},
      {criterion, [&] { return cmd_criterion(o); }},
      {comodule, [&] { return cmd_comodule(o); }},
      {roundtrip, [&] { return cmd_roundtrip(o); }},
  };

  try {
    Report r;
    bool failed = false;
    CLI::App* chosen = app.get_subcommands().front();
    if (chosen == selftest)
      r = cmd_selftest(o, failed);
    else
      r = commands.at(chosen)();
    out << (o.format == "text" ? render_text(r) : render_json(r));
    return failed ? 1 : 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qcoalg
