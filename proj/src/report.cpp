#include "qcoalg/report.hpp"

#include <algorithm>
#include <sstream>

#include "qcoalg/io.hpp"

namespace qcoalg {

namespace {

Report optional_string(const std::optional<std::string>& s) {
  return s ? Report(*s) : Report(nullptr);
}

Report components_report(const Quiver& q,
                         const std::map<std::pair<Vertex, Vertex>, Subspace>& comps) {
  Report out = Report::array();
  for (const auto& [key, s] : comps) {
    Report basis = Report::array();
    for (const auto& v : s.basis()) basis.push_back(format_path_vector(q, v));
    out.push_back({{"source", q.vertex_id(key.first)},
                   {"target", q.vertex_id(key.second)},
                   {"dim", s.dim()},
                   {"basis", std::move(basis)}});
  }
  return out;
}

bool is_scalar(const Report& r) { return !r.is_object() && !r.is_array(); }

std::string scalar_text(const Report& r) {
  if (r.is_string()) return r.get<std::string>();
  if (r.is_null()) return "-";
  return r.dump();
}

void render(const Report& r, std::size_t indent, std::ostringstream& out);

void render_value(const std::string& key, std::size_t width, const Report& v,
                  std::size_t indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  std::string label = key;
  label.resize(std::max(width, key.size()), ' ');
  if (is_scalar(v)) {
    out << pad << label << "  " << scalar_text(v) << "\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
    out << pad << label << "  ";
    if (v.empty()) out << "(none)";
    bool first = true;
    for (const auto& e : v) {
      out << (first ? "" : ", ") << scalar_text(e);
      first = false;
    }
    out << "\n";
  } else if (v.empty()) {
    out << pad << label << "  (none)\n";
  } else {
    out << pad << key << "\n";
    render(v, indent + 2, out);
  }
}

void render(const Report& r, std::size_t indent, std::ostringstream& out) {
  if (r.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, v] : r.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : r.items()) render_value(k, width, v, indent, out);
  } else if (r.is_array()) {
    std::size_t k = 0;
    for (const auto& e : r) {
      if (is_scalar(e)) {
        out << std::string(indent, ' ') << "- " << scalar_text(e) << "\n";
      } else {
        out << std::string(indent, ' ') << "[" << k << "]\n";
        render(e, indent + 2, out);
      }
      ++k;
    }
  } else {
    out << std::string(indent, ' ') << scalar_text(r) << "\n";
  }
}

}  // namespace

Report quiver_report(const Quiver& q) {
  Report vertices = Report::array();
  for (Vertex v = 0; v < q.num_vertices(); ++v) vertices.push_back(q.vertex_id(v));
  Report arrows = Report::array();
  for (Arrow a = 0; a < q.num_arrows(); ++a)
    arrows.push_back({{"id", q.arrow(a).id},
                      {"source", q.vertex_id(q.source(a))},
                      {"target", q.vertex_id(q.target(a))}});
  return {{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

Report path_list_report(const Quiver& q, const std::vector<Path>& paths) {
  Report out = Report::array();
  for (const Path& p : paths) out.push_back(q.format_path(p));
  return out;
}

Report tensor_report(const Quiver& q, const TensorExpansion& t) {
  Report out = Report::array();
  for (const auto& [legs, c] : t)
    out.push_back({{"left", q.format_path(legs.first)},
                   {"right", q.format_path(legs.second)},
                   {"coefficient", c.get_str()}});
  return out;
}

Report coalgebra_report(const GradedSubcoalgebra& c) {
  const Quiver& q = c.quiver();
  Report tame = Report::array();
  for (const auto& d : tameness_diagnostic(c))
    tame.push_back({{"source", q.vertex_id(d.source)},
                    {"target", q.vertex_id(d.target)},
                    {"dim", d.dim},
                    {"exceeds_two", d.exceeds_two}});
  return {{"max_length", c.max_length()},
          {"truncation", "exact at this bound: comultiplication never "
                         "increases path length"},
          {"subcoalgebra", is_subcoalgebra(c)},
          {"admissible", is_admissible(c)},
          {"dimension", c.dimension()},
          {"components", components_report(q, c.components())},
          {"off_diagonal_dimensions", std::move(tame)}};
}

Report ideal_report(const RelationIdeal& omega) {
  Report gens = Report::array();
  for (const auto& g : omega.generators())
    gens.push_back(format_path_vector(omega.quiver(), g));
  return {{"max_length", omega.max_length()},
          {"dimension", omega.dimension()},
          {"generators", std::move(gens)},
          {"components", components_report(omega.quiver(), omega.components())}};
}

Report localization_report(const Localization& loc) {
  const Quiver& q = loc.source->quiver();
  const LocalizedQuiver& lq = *loc.quiver;
  const Quiver& local = lq.quiver();
  Report vertices = Report::array();
  for (Vertex v : loc.vertices.members()) vertices.push_back(q.vertex_id(v));
  Report arrows = Report::array();
  for (Arrow a = 0; a < local.num_arrows(); ++a) {
    const auto& info = lq.arrows()[a];
    arrows.push_back({{"id", local.arrow(a).id},
                      {"source", q.vertex_id(info.source)},
                      {"target", q.vertex_id(info.target)},
                      {"label", format_path_vector(q, info.label)},
                      {"pivot_cell", q.format_path(info.pivot_cell)}});
  }
  Report elements = Report::array();
  for (const auto& row : loc.restricted->basis())
    elements.push_back({{"element", format_path_vector(q, row)},
                        {"localized", format_path_vector(local, lq.reexpress(row))}});
  const std::size_t parallel = lq.max_parallel_arrows();
  return {{"vertices", std::move(vertices)},
          {"max_length", lq.max_length()},
          {"localized_quiver", {{"arrows", std::move(arrows)}}},
          {"max_parallel_arrows", parallel},
          {"three_arrow_kronecker_subquiver", lq.contains_triple_arrow()},
          {"ext1_lower_bound", parallel},
          {"restricted_dimension", loc.restricted->dimension()},
          {"localized_dimension", loc.coalgebra->dimension()},
          {"elements", std::move(elements)}};
}

Report classification_report(const Quiver& q,
                             const IdempotentClassification& cls,
                             std::size_t max_length) {
  auto arrow_id = [&](const std::optional<Arrow>& a) {
    return optional_string(a ? std::optional<std::string>(q.arrow(*a).id)
                             : std::nullopt);
  };
  Report tails = Report::array();
  for (const auto& t : cls.tails)
    tails.push_back({{"vertex", q.vertex_id(t.vertex)},
                     {"dims_by_bound", t.by_bound},
                     {"growth_warning", t.growth_warning}});
  return {
      {"left_semicentral", cls.left_semicentral},
      {"right_semicentral", cls.right_semicentral},
      {"split", cls.split},
      {"colocalizing", cls.colocalizing},
      {"acyclic_shortcut", cls.acyclic_shortcut},
      {"entering_arrow", arrow_id(cls.entering_arrow)},
      {"leaving_arrow", arrow_id(cls.leaving_arrow)},
      {"split_witness",
       optional_string(cls.split_witness
                           ? std::optional<std::string>(q.format_path(*cls.split_witness))
                           : std::nullopt)},
      {"tail_dimensions", std::move(tails)},
      {"note", "tail dimensions computed up to length " +
                   std::to_string(max_length) +
                   "; growth at the last bound is reported, not decided"}};
}

Report witness_report(const Quiver& q, const CriterionWitness& w) {
  Report rows = Report::array();
  for (std::size_t k = 0; k < w.size(); ++k)
    rows.push_back({{"pivot", q.format_path(w.pivots[k])},
                    {"row", format_path_vector(q, w.rows[k])}});
  return {{"source", q.vertex_id(w.source)},
          {"sink", q.vertex_id(w.target)},
          {"max_length", w.max_length},
          {"size", w.size()},
          {"rows", std::move(rows)},
          {"note", "bounded evidence only"}};
}

Report length_vector_report(const Quiver& q, const LengthVector& v) {
  Report out = Report::object();
  for (Vertex x = 0; x < q.num_vertices(); ++x) {
    auto it = v.find(q.vertex_id(x));
    out[q.vertex_id(x)] = it == v.end() ? 0 : it->second;
  }
  return out;
}

Report comodule_report(const FinComodule& m) {
  Report lines = Report::array();
  std::istringstream in(format_comodule(m));
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return {{"dim", m.dim()}, {"coaction", std::move(lines)}};
}

Report validation_report(const ValidationReport& r) {
  return {{"valid", r.valid}, {"problems", r.problems}};
}

std::string render_json(const Report& r) { return r.dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream out;
  render(r, 0, out);
  return out.str();
}

}  // namespace qcoalg
