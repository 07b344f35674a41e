#include "prodquot/presentation.hpp"

#include <cctype>
#include <sstream>

#include "prodquot/error.hpp"

namespace prodquot {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

namespace {

enum class Tok { name, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        t.text += advance();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::number;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        t.text += advance();
    } else {
      t.kind = Tok::punct;
      t.text = std::string(1, advance());
    }
    return t;
  }

private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  Presentation parse() {
    Presentation p;
    bool have_gens = false;
    while (tok_.kind != Tok::end) {
      const Token kw = expect_name();
      expect_punct(":");
      if (kw.text == "gens") {
        if (have_gens) fail(ErrorCode::syntax_error, "duplicate gens statement", kw);
        parse_gens(p);
        have_gens = true;
      } else if (kw.text == "rel") {
        if (!have_gens) fail(ErrorCode::syntax_error, "rel before gens", kw);
        parse_rel(p);
      } else {
        fail(ErrorCode::syntax_error, "expected 'gens' or 'rel', found '" + kw.text + "'", kw);
      }
    }
    if (!have_gens) fail(ErrorCode::empty_generator_list, "missing gens statement", tok_);
    return p;
  }

private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg, const Token& at) {
    throw ParseError(code, msg, at.line, at.column);
  }

  bool at_punct(const char* s) const { return tok_.kind == Tok::punct && tok_.text == s; }

  void expect_punct(const char* s) {
    if (!at_punct(s))
      fail(ErrorCode::syntax_error,
           std::string("expected '") + s + "', found '" + describe(tok_) + "'", tok_);
    tok_ = lex_.next();
  }

  Token expect_name() {
    if (tok_.kind != Tok::name)
      fail(ErrorCode::syntax_error, "expected a name, found '" + describe(tok_) + "'", tok_);
    Token t = tok_;
    tok_ = lex_.next();
    return t;
  }

  static std::string describe(const Token& t) { return t.kind == Tok::end ? "end of input" : t.text; }

  void parse_gens(Presentation& p) {
    if (at_punct(";")) fail(ErrorCode::empty_generator_list, "empty generator list", tok_);
    while (true) {
      const Token t = expect_name();
      for (const auto& g : p.generators)
        if (g == t.text) fail(ErrorCode::syntax_error, "duplicate generator '" + t.text + "'", t);
      p.generators.push_back(t.text);
      if (at_punct(",")) {
        tok_ = lex_.next();
        continue;
      }
      expect_punct(";");
      break;
    }
  }

  void parse_rel(Presentation& p) {
    Word prev = parse_word(p);
    if (!at_punct("=")) fail(ErrorCode::syntax_error, "expected '=' in relation", tok_);
    while (at_punct("=")) {
      tok_ = lex_.next();
      Word rhs = parse_word(p);
      Word r = prev;
      const Word ri = inverse(rhs);
      r.insert(r.end(), ri.begin(), ri.end());
      r = free_reduce(std::move(r));
      if (!r.empty()) p.relators.push_back(std::move(r));
      prev = std::move(rhs);
    }
    expect_punct(";");
  }

  Word parse_word(const Presentation& p) {
    Word w = parse_factor(p);
    while (at_punct("*")) {
      tok_ = lex_.next();
      Word f = parse_factor(p);
      w.insert(w.end(), f.begin(), f.end());
    }
    return free_reduce(std::move(w));
  }

  Word parse_factor(const Presentation& p) {
    Word base = parse_atom(p);
    if (!at_punct("^")) return base;
    tok_ = lex_.next();
    bool neg = false;
    if (at_punct("-")) {
      neg = true;
      tok_ = lex_.next();
    }
    if (tok_.kind != Tok::number)
      fail(ErrorCode::syntax_error, "expected integer exponent, found '" + describe(tok_) + "'", tok_);
    const long long e = std::stoll(tok_.text);
    if (e > 100000) fail(ErrorCode::syntax_error, "exponent too large", tok_);
    tok_ = lex_.next();
    const Word unit = neg ? inverse(base) : base;
    Word out;
    for (long long i = 0; i < e; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return free_reduce(std::move(out));
  }

  Word parse_atom(const Presentation& p) {
    if (tok_.kind == Tok::number) {
      if (tok_.text != "1") fail(ErrorCode::syntax_error, "only '1' may appear as a number in a word", tok_);
      tok_ = lex_.next();
      return {};
    }
    if (tok_.kind == Tok::name) {
      for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (p.generators[i] == tok_.text) {
          tok_ = lex_.next();
          return {Letter{static_cast<int>(i), 1}};
        }
      }
      fail(ErrorCode::unknown_generator, "unknown generator '" + tok_.text + "'", tok_);
    }
    if (at_punct("(")) {
      tok_ = lex_.next();
      Word w = parse_word(p);
      expect_punct(")");
      return w;
    }
    if (at_punct("[")) {
      tok_ = lex_.next();
      Word u = parse_word(p);
      expect_punct(",");
      Word v = parse_word(p);
      expect_punct("]");
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      const Word ui = inverse(u), vi = inverse(v);
      w.insert(w.end(), ui.begin(), ui.end());
      w.insert(w.end(), vi.begin(), vi.end());
      return free_reduce(std::move(w));
    }
    fail(ErrorCode::syntax_error, "unexpected '" + describe(tok_) + "' in word", tok_);
  }

  Lexer lex_;
  Token tok_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).parse();
}

std::string format_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long long e = static_cast<long long>(j - i) * w[i].sign;
    if (!first) os << '*';
    first = false;
    os << p.generators[w[i].generator];
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : "") << p.generators[i];
  os << ";\n";
  for (const auto& r : p.relators) os << "rel: " << format_word(p, r) << " = 1;\n";
  return os.str();
}

}  // namespace prodquot
