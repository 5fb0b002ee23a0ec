#include "weldkit/codec.hpp"

#include <cctype>
#include <charconv>

namespace weld {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back({l, number++});
    start = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_comment(std::string_view s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return false;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// "diagram NAME" / "movie NAME"; returns the name.
std::string header_name(const Line& l, std::string_view keyword) {
  const auto toks = tokenize(l.text);
  if (toks.empty() || toks[0].text != keyword)
    throw ParseError("expected '" + std::string(keyword) + " NAME'", l.number, 1);
  if (toks.size() != 2)
    throw ParseError("header needs exactly one name", l.number,
                     toks.size() > 2 ? toks[2].column : l.text.size() + 1);
  return std::string(toks[1].text);
}

bool starts_with_keyword(std::string_view line, std::string_view keyword) {
  const auto toks = tokenize(line);
  return !toks.empty() && toks[0].text == keyword;
}

std::vector<int> parse_site(const Token& tok, std::size_t line_no) {
  std::vector<int> site;
  std::size_t i = 0;
  const std::string_view s = tok.text;
  while (i <= s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string_view::npos) j = s.size();
    int value = 0;
    const char* first = s.data() + i;
    const char* last = s.data() + j;
    if (first == last || *first == '+')
      throw ParseError("malformed location hint", line_no, tok.column + i);
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw ParseError("malformed location hint", line_no, tok.column + i);
    site.push_back(value);
    i = j + 1;
  }
  return site;
}

std::vector<Pass> parse_passes(std::string_view line, std::size_t line_no,
                               std::vector<std::size_t>& columns) {
  std::vector<Pass> passes;
  const auto toks = tokenize(line);
  if (toks.size() == 1 && toks[0].text == kRoundCircleCode) return passes;
  for (const Token& tok : toks) {
    const std::string_view t = tok.text;
    if (t.size() < 3 || (t[0] != 'O' && t[0] != 'U' && t[0] != 'V') ||
        (t.back() != '+' && t.back() != '-'))
      throw ParseError("bad token '" + std::string(t) + "'", line_no, tok.column);
    int id = 0;
    const char* first = t.data() + 1;
    const char* last = t.data() + t.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, id);
    if (ec != std::errc() || ptr != last || id <= 0 || *first == '0')
      throw ParseError("bad crossing id in '" + std::string(t) + "'", line_no, tok.column + 1);
    const Role role = t[0] == 'O' ? Role::Over : t[0] == 'U' ? Role::Under : Role::Virtual;
    passes.push_back({role, id, t.back() == '+' ? 1 : -1});
    columns.push_back(tok.column);
  }
  return passes;
}

ParseError violation_error(const Violation& v, const std::vector<std::size_t>& columns,
                           std::size_t line_no) {
  const std::size_t col =
      v.invariant == "planarity" || columns.empty() ? 1 : columns[v.position];
  return ParseError(v.invariant + ": " + v.detail, line_no, col);
}

}  // namespace

PlanarDiagram parse_word(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> columns;
  PlanarDiagram d(parse_passes(line, line_no, columns));
  if (auto v = validate(d)) throw violation_error(*v, columns, line_no);
  return d;
}

GaussCode parse_gauss_code(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> columns;
  PlanarDiagram d(parse_passes(line, line_no, columns));
  for (std::size_t p = 0; p < d.size(); ++p)
    if (!d.is_classical(p))
      throw ParseError("virtual pass in a Gauss code", line_no, columns[p]);
  if (auto v = validate_structure(d)) throw violation_error(*v, columns, line_no);
  return GaussCode{d.word()};
}

PlanarDiagram parse_diagram(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && is_comment(lines[first].text)) ++first;
  if (first == lines.size()) return PlanarDiagram();
  if (starts_with_keyword(lines[first].text, "diagram")) {
    auto records = parse_diagram_file(text);
    if (records.size() != 1)
      throw ParseError("expected a single diagram record", lines[first].number, 1);
    return std::move(records.front().diagram);
  }
  for (std::size_t k = first + 1; k < lines.size(); ++k)
    if (!is_comment(lines[k].text) && !is_blank(lines[k].text))
      throw ParseError("trailing content after word", lines[k].number, 1);
  return parse_word(lines[first].text, lines[first].number);
}

std::vector<NamedDiagram> parse_diagram_file(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<NamedDiagram> out;
  std::size_t k = 0;
  while (k < lines.size()) {
    if (is_comment(lines[k].text) || is_blank(lines[k].text)) {
      ++k;
      continue;
    }
    NamedDiagram nd;
    nd.name = header_name(lines[k], "diagram");
    const std::size_t header_line = lines[k].number;
    ++k;
    while (k < lines.size() && is_comment(lines[k].text)) ++k;
    if (k == lines.size())
      throw ParseError("record '" + nd.name + "' has no word line", header_line + 1, 1);
    nd.diagram = parse_word(lines[k].text, lines[k].number);
    ++k;
    out.push_back(std::move(nd));
  }
  return out;
}

std::string serialize_diagram(const PlanarDiagram& d) { return to_word(d); }

std::string serialize_record(const NamedDiagram& d) {
  return "diagram " + d.name + "\n" + to_word(d.diagram) + "\n";
}

Movie parse_movie(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && (is_comment(lines[k].text) || is_blank(lines[k].text))) ++k;
  if (k == lines.size()) throw ParseError("empty movie file", 1, 1);
  Movie m;
  m.name = header_name(lines[k], "movie");
  std::size_t last_line = lines[k].number;
  ++k;
  bool expect_word = true;
  for (; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (is_comment(l.text)) continue;
    last_line = l.number;
    const bool is_event = starts_with_keyword(l.text, "event");
    if (expect_word) {
      if (is_event) throw ParseError("event where a diagram word was expected", l.number, 1);
      m.diagrams.push_back(parse_word(l.text, l.number));
      expect_word = false;
      continue;
    }
    if (!is_event && is_blank(l.text)) {
      bool trailing = true;
      for (std::size_t r = k + 1; r < lines.size(); ++r)
        trailing = trailing && (is_blank(lines[r].text) || is_comment(lines[r].text));
      if (trailing) break;
    }
    if (!is_event) throw ParseError("diagram word where an event was expected", l.number, 1);
    const auto toks = tokenize(l.text);
    if (toks.size() < 2 || toks.size() > 3)
      throw ParseError("event needs a move name and at most one location", l.number, 1);
    const auto kind = move_kind_from_string(toks[1].text);
    if (!kind)
      throw ParseError("unknown move '" + std::string(toks[1].text) + "'", l.number,
                       toks[1].column);
    MovieEvent ev{*kind, std::nullopt};
    if (toks.size() == 3) ev.site = parse_site(toks[2], l.number);
    m.events.push_back(std::move(ev));
    expect_word = true;
  }
  if (m.diagrams.empty()) throw ParseError("movie has no frames", last_line + 1, 1);
  if (expect_word) throw ParseError("movie must end with a diagram word", last_line + 1, 1);
  return m;
}

std::string serialize_movie(const Movie& m) {
  std::string out = "movie " + (m.name.empty() ? std::string("unnamed") : m.name) + "\n";
  for (std::size_t i = 0; i < m.diagrams.size(); ++i) {
    if (i > 0) {
      const MovieEvent& ev = m.events[i - 1];
      out += "event ";
      out += to_string(ev.kind);
      if (ev.site) {
        out += ' ';
        for (std::size_t j = 0; j < ev.site->size(); ++j) {
          if (j) out += ',';
          out += std::to_string((*ev.site)[j]);
        }
      }
      out += '\n';
    }
    out += to_word(m.diagrams[i]);
    out += '\n';
  }
  return out;
}

}  // namespace weld
