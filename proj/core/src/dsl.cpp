#include "coxlab/dsl.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {
namespace {

struct Token {
  enum class Kind { Word, Semicolon, End } kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view text, int first_line) : text_(text), line_(first_line) {}

  Token next() {
    skip_blank();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;
    const char c = text_[pos_];
    if (c == ';') {
      advance();
      tok.kind = Token::Kind::Semicolon;
      tok.text = ";";
      return tok;
    }
    if (!is_id_char(c)) {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    tok.kind = Token::Kind::Word;
    while (pos_ < text_.size() && is_id_char(text_[pos_])) {
      tok.text.push_back(text_[pos_]);
      advance();
    }
    return tok;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, int first_line) : lexer_(text, first_line) { shift(); }

  CoxeterDiagram parse() {
    expect_keyword("nodes");
    std::vector<std::string> names;
    if (cur_.kind != Token::Kind::Word) fail("expected at least one node identifier");
    while (cur_.kind == Token::Kind::Word) {
      for (const auto& n : names) {
        if (n == cur_.text) fail("duplicate node '" + cur_.text + "'");
      }
      names.push_back(cur_.text);
      shift();
    }
    CoxeterMatrix m(names);
    if (!end_statement()) return CoxeterDiagram(std::move(m));

    while (cur_.kind != Token::Kind::End) {
      expect_keyword("edge");
      const int a = node_ref(m);
      const Token at_b = cur_;
      const int b = node_ref(m);
      if (a == b) fail_at(at_b, "edge joins node '" + m.node(a) + "' to itself");
      if (m(a, b) != 2) {
        fail_at(at_b, "repeated edge between '" + m.node(a) + "' and '" + m.node(b) + "'");
      }
      m.set(a, b, label());
      if (!end_statement()) break;
    }
    return CoxeterDiagram(std::move(m));
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(cur_, msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column);
  }

  void expect_keyword(std::string_view kw) {
    if (cur_.kind != Token::Kind::Word || cur_.text != kw) {
      fail("expected '" + std::string(kw) + "'" +
           (cur_.kind == Token::Kind::End ? " before end of input"
                                          : ", found '" + cur_.text + "'"));
    }
    shift();
  }

  /// Consumes a ';'. Returns false when the input ends instead.
  bool end_statement() {
    if (cur_.kind == Token::Kind::Semicolon) {
      shift();
      return cur_.kind != Token::Kind::End;
    }
    if (cur_.kind == Token::Kind::End) return false;
    fail("expected ';', found '" + cur_.text + "'");
  }

  int node_ref(const CoxeterMatrix& m) {
    if (cur_.kind != Token::Kind::Word) fail("expected a node identifier");
    const int idx = m.index_of(cur_.text);
    if (idx < 0) fail("unknown node '" + cur_.text + "'");
    shift();
    return idx;
  }

  int label() {
    if (cur_.kind != Token::Kind::Word) fail("expected an edge label");
    if (cur_.text == "inf") {
      shift();
      return kInfinity;
    }
    int value = 0;
    const auto* first = cur_.text.data();
    const auto* last = first + cur_.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("malformed edge label '" + cur_.text + "'");
    if (value < 3) {
      fail("edge label " + cur_.text + " is below 3 (m = 2 means no edge)");
    }
    if (value == kInfinity) fail("edge label out of range; use 'inf'");
    shift();
    return value;
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

CoxeterDiagram parse_diagram(std::string_view text) { return Parser(text, 1).parse(); }

std::string render_dsl(const CoxeterDiagram& d) {
  std::ostringstream out;
  out << "nodes";
  for (const auto& n : d.nodes()) out << ' ' << n;
  out << ';';
  for (const Edge& e : d.edges()) {
    out << " edge " << d.nodes()[e.a] << ' ' << d.nodes()[e.b] << ' ';
    if (e.m == kInfinity) {
      out << "inf";
    } else {
      out << e.m;
    }
    out << ';';
  }
  return out.str();
}

std::vector<NamedDiagram> parse_catalog(std::string_view text) {
  std::vector<NamedDiagram> out;
  std::optional<std::string> name;
  std::string body;
  int body_line = 1;
  int line_no = 0;

  auto flush = [&] {
    if (name) {
      out.push_back({*name, Parser(body, body_line).parse()});
    }
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    if (line.starts_with("@diagram")) {
      flush();
      std::string_view rest = line.substr(8);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
        rest.remove_prefix(1);
      }
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) {
        rest.remove_suffix(1);
      }
      if (rest.empty()) throw ParseError("@diagram needs a name", line_no, 9);
      name = std::string(rest);
      body.clear();
      body_line = line_no + 1;
    } else if (name) {
      body.append(line);
      body.push_back('\n');
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  flush();
  return out;
}

}  // namespace coxlab
