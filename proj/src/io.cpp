#include "qcoalg/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "qcoalg/errors.hpp"

namespace qcoalg {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;    // 1-based
  std::string_view text;  // comment stripped

  std::vector<Token> tokens() const {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      if (i > start) out.push_back({text.substr(start, i - start), start + 1});
    }
    return out;
  }

  // Text after the first token; `column` receives its 1-based start.
  std::string_view rest_after(const Token& t, std::size_t& column) const {
    std::size_t from = t.column - 1 + t.text.size();
    column = from;
    return text.substr(from);
  }

  [[noreturn]] void error(const std::string& what, std::size_t column) const {
    throw ParseError(what, number, column);
  }
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) out.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char ch : id)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '\'')
      return false;
  return true;
}

std::size_t parse_count(const Line& line, const Token& t) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    line.error("expected a nonnegative integer, got '" + std::string(t.text) +
                   "'",
               t.column);
  return value;
}

void add_vertex(Quiver& q, std::string_view id, std::size_t line,
                std::size_t column) {
  if (!valid_id(id))
    throw ParseError("invalid vertex id '" + std::string(id) + "'", line, column);
  if (q.find_vertex(id))
    throw ParseError("duplicate vertex '" + std::string(id) + "'", line, column);
  q.add_vertex(std::string(id));
}

void add_arrow(Quiver& q, std::string_view id, std::string_view source,
               std::string_view target, std::size_t line,
               const std::size_t columns[3]) {
  if (!valid_id(id) || id.starts_with("e_") ||
      std::isdigit(static_cast<unsigned char>(id.front())))
    throw ParseError("invalid arrow id '" + std::string(id) + "'", line,
                     columns[0]);
  if (q.find_arrow(id))
    throw ParseError("duplicate arrow '" + std::string(id) + "'", line,
                     columns[0]);
  auto s = q.find_vertex(source);
  if (!s)
    throw ParseError("unknown vertex '" + std::string(source) + "'", line,
                     columns[1]);
  auto t = q.find_vertex(target);
  if (!t)
    throw ParseError("unknown vertex '" + std::string(target) + "'", line,
                     columns[2]);
  q.add_arrow(std::string(id), *s, *t);
}

// Handles `vertex` and `arrow` lines; false for any other keyword.
bool quiver_line(Quiver& q, const Line& line) {
  auto tok = line.tokens();
  if (tok[0].text == "vertex") {
    if (tok.size() != 2)
      line.error("expected 'vertex <id>'", tok[0].column);
    add_vertex(q, tok[1].text, line.number, tok[1].column);
    return true;
  }
  if (tok[0].text == "arrow") {
    if (tok.size() != 4)
      line.error("expected 'arrow <id> <source> <target>'", tok[0].column);
    const std::size_t cols[3] = {tok[1].column, tok[2].column, tok[3].column};
    add_arrow(q, tok[1].text, tok[2].text, tok[3].text, line.number, cols);
    return true;
  }
  return false;
}

std::pair<std::size_t, std::size_t> locate(std::string_view text,
                                           std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

QuiverPtr parse_quiver_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON quiver", line, col);
  }
  auto q = std::make_shared<Quiver>();
  try {
    for (const auto& v : doc.at("vertices"))
      add_vertex(*q, v.get<std::string>(), 0, 0);
    for (const auto& a : doc.at("arrows")) {
      const std::size_t cols[3] = {0, 0, 0};
      add_arrow(*q, a.at("id").get<std::string>(),
                a.at("source").get<std::string>(),
                a.at("target").get<std::string>(), 0, cols);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON quiver: ") + e.what());
  }
  return q;
}

bool parse_bool(const Line& line, const Token& t) {
  if (t.text == "true") return true;
  if (t.text == "false") return false;
  line.error("expected 'true' or 'false'", t.column);
}

std::string format_id_block(const Quiver& q) {
  std::string out;
  for (Vertex v = 0; v < q.num_vertices(); ++v)
    out += "vertex " + q.vertex_id(v) + "\n";
  for (Arrow a = 0; a < q.num_arrows(); ++a)
    out += "arrow " + q.arrow(a).id + " " + q.vertex_id(q.source(a)) + " " +
           q.vertex_id(q.target(a)) + "\n";
  return out;
}

}  // namespace

QuiverPtr parse_quiver(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() &&
         std::isspace(static_cast<unsigned char>(text[first])))
    ++first;
  if (first < text.size() && text[first] == '{') return parse_quiver_json(text);
  auto q = std::make_shared<Quiver>();
  for (const Line& line : split_lines(text))
    if (!quiver_line(*q, line)) {
      auto tok = line.tokens();
      line.error("unexpected keyword '" + std::string(tok[0].text) + "'",
                 tok[0].column);
    }
  return q;
}

CoalgebraSpec parse_coalgebra(std::string_view text) {
  auto q = std::make_shared<Quiver>();
  CoalgebraSpec spec;
  std::vector<const Line*> generators;
  auto lines = split_lines(text);
  bool seen_admissible = false, seen_maxlen = false;
  for (const Line& line : lines) {
    if (quiver_line(*q, line)) continue;
    auto tok = line.tokens();
    if (tok[0].text == "generator") {
      if (tok.size() < 2) line.error("expected a path vector", tok[0].column);
      generators.push_back(&line);
    } else if (tok[0].text == "admissible") {
      if (tok.size() != 2 || seen_admissible)
        line.error("expected a single 'admissible true|false'", tok[0].column);
      spec.admissible = parse_bool(line, tok[1]);
      seen_admissible = true;
    } else if (tok[0].text == "maxlen") {
      if (tok.size() != 2 || seen_maxlen)
        line.error("expected a single 'maxlen <L>'", tok[0].column);
      spec.max_length = parse_count(line, tok[1]);
      seen_maxlen = true;
    } else {
      line.error("unexpected keyword '" + std::string(tok[0].text) + "'",
                 tok[0].column);
    }
  }
  for (const Line* line : generators) {
    auto tok = line->tokens();
    std::size_t col = 0;
    std::string_view rest = line->rest_after(tok[0], col);
    spec.generators.push_back(parse_path_vector(*q, rest, line->number, col));
  }
  spec.quiver = std::move(q);
  return spec;
}

RelationSpec parse_relations(const Quiver& q, std::string_view text) {
  RelationSpec spec;
  for (const Line& line : split_lines(text)) {
    auto tok = line.tokens();
    if (tok[0].text == "relation") {
      if (tok.size() < 2) line.error("expected a path vector", tok[0].column);
      std::size_t col = 0;
      std::string_view rest = line.rest_after(tok[0], col);
      spec.relations.push_back(parse_path_vector(q, rest, line.number, col));
    } else if (tok[0].text == "maxlen") {
      if (tok.size() != 2 || spec.max_length)
        line.error("expected a single 'maxlen <L>'", tok[0].column);
      spec.max_length = parse_count(line, tok[1]);
    } else {
      line.error("unexpected keyword '" + std::string(tok[0].text) + "'",
                 tok[0].column);
    }
  }
  return spec;
}

FinComodule parse_comodule(CoalgebraPtr c, std::string_view text) {
  const Quiver& q = c->quiver();
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty comodule file", 1, 1);
  const Line& head = lines.front();
  auto htok = head.tokens();
  if (htok[0].text != "dim" || htok.size() != 2)
    head.error("expected 'dim <m>' first", htok[0].column);
  const std::size_t m = parse_count(head, htok[1]);
  FinComodule::Coefficients coef(m, std::vector<PathVector>(m));
  std::vector<std::vector<bool>> seen(m, std::vector<bool>(m, false));

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    auto tok = line.tokens();
    if (tok[0].text != "rho")
      line.error("unexpected keyword '" + std::string(tok[0].text) + "'",
                 tok[0].column);
    if (tok.size() < 3 || tok[2].text != ":")
      line.error("expected 'rho <i> : ...'", tok[0].column);
    const std::size_t i = parse_count(line, tok[1]);
    if (i >= m) line.error("basis index out of range", tok[1].column);
    std::size_t pos = tok[2].column;  // 0-based index just after ':'
    std::string_view text_line = line.text;
    while (pos < text_line.size()) {
      std::size_t end = text_line.find(';', pos);
      if (end == std::string_view::npos) end = text_line.size();
      std::string_view entry = text_line.substr(pos, end - pos);
      std::size_t lead = 0;
      while (lead < entry.size() &&
             std::isspace(static_cast<unsigned char>(entry[lead])))
        ++lead;
      if (lead < entry.size()) {
        std::size_t num_end = lead;
        while (num_end < entry.size() &&
               !std::isspace(static_cast<unsigned char>(entry[num_end])))
          ++num_end;
        Token jt{entry.substr(lead, num_end - lead), pos + lead + 1};
        const std::size_t j = parse_count(line, jt);
        if (j >= m) line.error("basis index out of range", jt.column);
        if (seen[i][j])
          line.error("coefficient (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") given twice",
                     jt.column);
        seen[i][j] = true;
        coef[i][j] = parse_path_vector(q, entry.substr(num_end), line.number,
                                       pos + num_end);
      }
      pos = end + 1;
    }
  }
  return FinComodule(std::move(c), std::move(coef));
}

std::string format_quiver(const Quiver& q) { return format_id_block(q); }

std::string format_coalgebra(const CoalgebraSpec& spec) {
  std::string out = format_id_block(*spec.quiver);
  for (const auto& g : spec.generators)
    out += "generator " + format_path_vector(*spec.quiver, g) + "\n";
  out += std::string("admissible ") + (spec.admissible ? "true" : "false") + "\n";
  if (spec.max_length)
    out += "maxlen " + std::to_string(*spec.max_length) + "\n";
  return out;
}

std::string format_relations(const Quiver& q, const RelationSpec& spec) {
  std::string out;
  for (const auto& r : spec.relations)
    out += "relation " + format_path_vector(q, r) + "\n";
  if (spec.max_length)
    out += "maxlen " + std::to_string(*spec.max_length) + "\n";
  return out;
}

std::string format_comodule(const FinComodule& m) {
  const Quiver& q = m.quiver();
  std::string out = "dim " + std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += "rho " + std::to_string(i) + " :";
    bool first = true;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const PathVector& c = m.coefficient(i, j);
      if (c.is_zero()) continue;
      out += first ? " " : "; ";
      out += std::to_string(j) + " " + format_path_vector(q, c);
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cli", "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qcoalg
