#include "qcoalg/path_vector.hpp"

#include <algorithm>
#include <cctype>

#include "qcoalg/errors.hpp"

namespace qcoalg {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == start) throw ParseError("expected digits", 0, start + 1);
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t end_num = digits(i);
  std::size_t end = end_num;
  if (end < text.size() && text[end] == '/') end = digits(end + 1);
  if (end != text.size())
    throw ParseError("unexpected character in rational", 0, end + 1);
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  q.set_str(s, 10);
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator", 0, 1);
  q.canonicalize();
  return q;
}

void PathVector::add(const Path& p, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational PathVector::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<Vertex, Vertex>> PathVector::endpoints() const {
  if (terms_.empty()) return std::nullopt;
  const Path& first = terms_.begin()->first;
  std::pair<Vertex, Vertex> ends{first.source(), first.target()};
  for (const auto& [p, c] : terms_)
    if (p.source() != ends.first || p.target() != ends.second)
      return std::nullopt;
  return ends;
}

std::map<std::pair<Vertex, Vertex>, PathVector>
PathVector::split_by_endpoints() const {
  std::map<std::pair<Vertex, Vertex>, PathVector> out;
  for (const auto& [p, c] : terms_) out[{p.source(), p.target()}].add(p, c);
  return out;
}

std::size_t PathVector::max_length() const {
  std::size_t m = 0;
  for (const auto& [p, c] : terms_) m = std::max(m, p.length());
  return m;
}

std::size_t PathVector::min_length() const {
  // Canonical order sorts by length first.
  return terms_.empty() ? 0 : terms_.begin()->first.length();
}

PathVector& PathVector::operator+=(const PathVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

PathVector& PathVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

Rational pairing(const PathVector& v, const PathVector& w) {
  const auto& small = v.size() <= w.size() ? v : w;
  const auto& large = v.size() <= w.size() ? w : v;
  Rational s(0);
  for (const auto& [p, c] : small.terms()) s += c * large.coefficient(p);
  return s;
}

std::set<Path> psupp(const PathVector& v) {
  std::set<Path> out;
  for (const auto& [p, c] : v.terms()) out.insert(p);
  return out;
}

namespace {

bool is_id_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
         ch == '\'';
}

class VectorParser {
 public:
  VectorParser(const Quiver& q, std::string_view text, std::size_t line,
               std::size_t offset)
      : q_(q), text_(text), line_(line), offset_(offset) {}

  PathVector parse() {
    skip_ws();
    if (pos_ == text_.size()) error("empty vector");
    PathVector v;
    if (text_.substr(pos_) == "0" ||
        (text_[pos_] == '0' && rest_is_blank(pos_ + 1)))
      return v;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) {
        if (first) error("empty vector");
        break;
      }
      Rational sign(1);
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        if (text_[pos_] == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      Rational coeff = sign;
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '/'))
          ++pos_;
        Rational c;
        try {
          c = parse_rational(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
          pos_ = start + (e.column() ? e.column() - 1 : 0);
          error("malformed coefficient");
        }
        coeff *= c;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '*') {
          ++pos_;
          skip_ws();
        } else {
          error("expected '*' after coefficient");
        }
      }
      v.add(parse_path_at(), coeff);
      first = false;
    }
    return v;
  }

  Path parse_path_only() {
    skip_ws();
    Path p = parse_path_at();
    skip_ws();
    if (pos_ != text_.size()) error("trailing characters after path");
    return p;
  }

 private:
  Path parse_path_at() {
    std::vector<Arrow> arrows;
    std::size_t path_start = pos_;
    while (true) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
      if (start == pos_) error("expected a path");
      std::string_view tok = text_.substr(start, pos_ - start);
      if (auto a = q_.find_arrow(tok)) {
        arrows.push_back(*a);
      } else if (tok.starts_with("e_") && arrows.empty() &&
                 (pos_ == text_.size() || text_[pos_] != '.')) {
        auto v = q_.find_vertex(tok.substr(2));
        if (!v) {
          pos_ = start;
          error("unknown vertex in '" + std::string(tok) + "'");
        }
        return Path::trivial(*v);
      } else {
        pos_ = start;
        error("unknown arrow '" + std::string(tok) + "'");
      }
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        continue;
      }
      break;
    }
    for (std::size_t k = 1; k < arrows.size(); ++k)
      if (q_.target(arrows[k - 1]) != q_.source(arrows[k])) {
        pos_ = path_start;
        error("arrows do not compose");
      }
    return q_.make_path(std::move(arrows));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool rest_is_blank(std::size_t from) const {
    for (std::size_t k = from; k < text_.size(); ++k)
      if (!std::isspace(static_cast<unsigned char>(text_[k]))) return false;
    return true;
  }

  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(what, line_, offset_ + pos_ + 1);
  }

  const Quiver& q_;
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Path parse_path(const Quiver& q, std::string_view text, std::size_t line,
                std::size_t column_offset) {
  return VectorParser(q, text, line, column_offset).parse_path_only();
}

PathVector parse_path_vector(const Quiver& q, std::string_view text,
                             std::size_t line, std::size_t column_offset) {
  return VectorParser(q, text, line, column_offset).parse();
}

std::string format_path_vector(const Quiver& q, const PathVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += q.format_path(p);
    first = false;
  }
  return out;
}

}  // namespace qcoalg
