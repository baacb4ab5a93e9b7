#include "lwo/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "lwo/error.hpp"
#include "lwo/normalize.hpp"
#include "lwo/reason.hpp"

namespace lwo {

namespace {

enum class Tok { Word, Colon, Dot, Iri, AtPrefix, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

bool isWordByte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skipBlankAndComments();
    current_ = Token{};
    current_.span = {line_, col_};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == ':') {
      current_.kind = Tok::Colon;
      bump();
    } else if (c == '.') {
      current_.kind = Tok::Dot;
      bump();
    } else if (c == '<') {
      bump();
      std::string iri;
      while (pos_ < text_.size() && text_[pos_] != '>') {
        if (text_[pos_] == '\n') throw ParseError(current_.span, "unterminated IRI");
        iri += text_[pos_];
        bump();
      }
      if (pos_ >= text_.size()) throw ParseError(current_.span, "unterminated IRI");
      bump();
      current_.kind = Tok::Iri;
      current_.text = std::move(iri);
    } else if (c == '@') {
      bump();
      std::string word = readWord();
      if (word != "prefix") throw ParseError(current_.span, "unknown directive '@" + word + "'");
      current_.kind = Tok::AtPrefix;
    } else if (isWordByte(static_cast<unsigned char>(c))) {
      current_.kind = Tok::Word;
      current_.text = readWord();
    } else {
      throw ParseError(current_.span, std::string("unexpected character '") + c + "'");
    }
  }

  std::string readWord() {
    std::string w;
    while (pos_ < text_.size() && isWordByte(static_cast<unsigned char>(text_[pos_]))) {
      w += text_[pos_];
      bump();
    }
    return w;
  }

  void skipBlankAndComments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count code points, not continuation bytes
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"sub",    "equiv", "not",    "atleast", "atmost", "exists",
                                       "inv",    "Bottom", "Top",   "concept", "role"};
  return k;
}

enum class Use { Concept, Role };

struct Usage {
  std::optional<SourceSpan> asConcept;
  std::optional<SourceSpan> asRole;
  std::optional<Use> declared;
  SourceSpan declaredAt;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : lex_(text), options_(options), prefixes_(options.prefixes) {}

  ParsedDocument document() {
    ConstraintSet constraints;
    while (lex_.peek().kind != Tok::End) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::AtPrefix) {
        prefixDecl();
      } else if (t.kind == Tok::Word && (t.text == "concept" || t.text == "role")) {
        declaration();
      } else {
        SourceSpan at = t.span;
        auto raw = constraint();
        expect(Tok::Dot, "'.' after a constraint");
        normalizeInto(raw, at, constraints);
      }
    }
    Vocabulary v = vocabulary();
    return ParsedDocument{Ontology(std::move(v), std::move(constraints)), prefixes_};
  }

  ConstraintSet single() {
    SourceSpan at = lex_.peek().span;
    auto raw = constraint();
    if (lex_.peek().kind == Tok::Dot) lex_.take();
    if (lex_.peek().kind != Tok::End) fail(lex_.peek(), "unexpected input after the constraint");
    (void)vocabulary();
    ConstraintSet out;
    normalizeInto(raw, at, out);
    return out;
  }

  Name name() {
    Token first = lex_.take();
    if (first.kind != Tok::Word) fail(first, "expected a name");
    if (lex_.peek().kind == Tok::Colon) {
      lex_.take();
      Token local = lex_.take();
      if (local.kind != Tok::Word) fail(local, "expected a local name after '" + first.text + ":'");
      auto it = prefixes_.find(first.text);
      if (it == prefixes_.end()) fail(first, "undeclared prefix '" + first.text + "'");
      return Name(first.text, local.text, it->second + local.text);
    }
    if (keywords().count(first.text)) fail(first, "keyword '" + first.text + "' used as a name");
    return Name::plain(first.text);
  }

  bool atEnd() const { return lex_.peek().kind == Tok::End; }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(t.span, message);
  }

  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != kind) fail(t, "expected " + what);
    return t;
  }

  bool keyword(const char* word) {
    if (lex_.peek().kind == Tok::Word && lex_.peek().text == word) {
      lex_.take();
      return true;
    }
    return false;
  }

  void prefixDecl() {
    lex_.take();
    Token label = expect(Tok::Word, "a prefix label");
    expect(Tok::Colon, "':' after the prefix label");
    Token iri = expect(Tok::Iri, "an IRI in angle brackets");
    expect(Tok::Dot, "'.' after the prefix declaration");
    auto [it, inserted] = prefixes_.emplace(label.text, iri.text);
    if (!inserted && it->second != iri.text)
      fail(label, "prefix '" + label.text + "' is already bound to <" + it->second + ">");
  }

  void declaration() {
    Token kw = lex_.take();
    SourceSpan at = lex_.peek().span;
    Name n = name();
    expect(Tok::Dot, "'.' after the declaration");
    Use kind = kw.text == "concept" ? Use::Concept : Use::Role;
    auto& u = usage(n);
    if (u.declared && *u.declared != kind)
      throw ParseError(at, "'" + n.display() + "' is declared both as a concept and as a role");
    u.declared = kind;
    u.declaredAt = at;
  }

  Usage& usage(const Name& n) {
    auto it = std::find_if(usages_.begin(), usages_.end(), [&](const auto& p) { return p.first == n; });
    if (it != usages_.end()) return it->second;
    usages_.emplace_back(n, Usage{});
    return usages_.back().second;
  }

  std::uint64_t count() {
    Token t = expect(Tok::Word, "a count");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) fail(t, "expected a non-negative integer, got '" + t.text + "'");
    if (v == 0) fail(t, "count must be at least 1");
    return v;
  }

  RoleDescription role() {
    bool inverse = keyword("inv");
    SourceSpan at = lex_.peek().span;
    Name n = name();
    auto& u = usage(n);
    if (!u.asRole) u.asRole = at;
    return RoleDescription{n, inverse};
  }

  Concept atomic() {
    SourceSpan at = lex_.peek().span;
    Name n = name();
    auto& u = usage(n);
    if (!u.asConcept) u.asConcept = at;
    return Concept::atomic(n);
  }

  // basic := Bottom | name | atleast INT role | exists role
  SugarConcept basic(bool negated) {
    if (keyword("Bottom")) return negated ? Concept::top() : Concept::bottom();
    if (keyword("atleast")) {
      std::uint64_t n = count();
      Concept c = Concept::atLeast(n, role());
      return negated ? complement(c) : c;
    }
    if (keyword("exists")) {
      RoleDescription r = role();
      if (negated) return sugar::NotExists{r};
      return sugar::Exists{r};
    }
    Concept c = atomic();
    return negated ? complement(c) : c;
  }

  SugarConcept sugarConcept() {
    if (keyword("Top")) return sugar::Top{};
    if (keyword("not")) return basic(true);
    if (keyword("atmost")) {
      std::uint64_t n = count();
      return sugar::AtMost{n, role()};
    }
    return basic(false);
  }

  SugarInclusion constraint() {
    SugarInclusion s;
    s.lhs = sugarConcept();
    Token op = lex_.take();
    if (op.kind != Tok::Word || (op.text != "sub" && op.text != "equiv")) fail(op, "expected 'sub' or 'equiv'");
    s.equivalence = op.text == "equiv";
    s.rhs = sugarConcept();
    return s;
  }

  void normalizeInto(const SugarInclusion& raw, SourceSpan at, ConstraintSet& out) {
    try {
      auto part = normalizeConstraintSet(std::vector<SugarInclusion>{raw}, options_.allowExtended);
      out.insert(part.begin(), part.end());
    } catch (const ValidationError& e) {
      throw ParseError(at, e.what());
    }
  }

  Vocabulary vocabulary() {
    Vocabulary v;
    for (const auto& [n, u] : usages_) {
      Use kind;
      if (u.declared) {
        kind = *u.declared;
        if (kind == Use::Concept && u.asRole)
          throw ParseError(*u.asRole, "'" + n.display() + "' is declared as a concept but used as a role");
        if (kind == Use::Role && u.asConcept)
          throw ParseError(*u.asConcept, "'" + n.display() + "' is declared as a role but used as a concept");
      } else if (u.asConcept && u.asRole) {
        const SourceSpan later = (u.asConcept->line > u.asRole->line ||
                                  (u.asConcept->line == u.asRole->line && u.asConcept->column > u.asRole->column))
                                     ? *u.asConcept
                                     : *u.asRole;
        throw ParseError(later, "'" + n.display() + "' is used both as a concept and as a role");
      } else {
        kind = u.asRole ? Use::Role : Use::Concept;
      }
      (kind == Use::Concept ? v.concepts : v.roles).insert(n);
    }
    return v;
  }

  Lexer lex_;
  const ParseOptions& options_;
  PrefixTable prefixes_;
  std::vector<std::pair<Name, Usage>> usages_;
};

}  // namespace

ParsedDocument parseDocument(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).document();
}

Ontology parseOntology(std::string_view text, const ParseOptions& options) {
  return parseDocument(text, options).ontology;
}

ConstraintSet parseConstraint(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).single();
}

Name parseName(std::string_view text, const PrefixTable& prefixes) {
  ParseOptions options;
  options.prefixes = prefixes;
  Parser p(text, options);
  Name n = p.name();
  if (!p.atEnd()) throw ParseError({1, 1}, "'" + std::string(text) + "' is not a single name");
  return n;
}

namespace {

// Assigns one printable prefix label per namespace.
class NameWriter {
 public:
  explicit NameWriter(const Vocabulary& v) {
    std::vector<Name> names(v.concepts.begin(), v.concepts.end());
    names.insert(names.end(), v.roles.begin(), v.roles.end());
    std::sort(names.begin(), names.end());
    for (const auto& n : names) {
      if (n.prefix().empty() && n.iri() == n.local()) continue;
      const std::string& iri = n.iri();
      if (iri.size() < n.local().size() || iri.compare(iri.size() - n.local().size(), n.local().size(), n.local()) != 0)
        throw Error("cannot write name '" + n.display() + "': its IRI does not end with its local part");
      std::string ns = iri.substr(0, iri.size() - n.local().size());
      if (labelOf_.count(ns)) continue;
      std::string base = n.prefix().empty() ? "ns" : n.prefix();
      std::string label = base;
      for (int k = 1; nsOf_.count(label); ++k) label = base + std::to_string(k);
      labelOf_[ns] = label;
      nsOf_[label] = ns;
    }
  }

  std::string name(const Name& n) const {
    if (n.prefix().empty() && n.iri() == n.local()) return n.local();
    const std::string ns = n.iri().substr(0, n.iri().size() - n.local().size());
    return labelOf_.at(ns) + ":" + n.local();
  }

  std::string role(const RoleDescription& r) const { return (r.inverse ? "inv " : "") + name(r.role); }

  std::string text(const Concept& c) const {
    if (c.isTop()) return "Top";
    const auto& b = c.basic();
    std::string body;
    switch (b.kind()) {
      case BasicConcept::Kind::Bottom: body = "Bottom"; break;
      case BasicConcept::Kind::Atomic: body = name(b.conceptName()); break;
      case BasicConcept::Kind::AtLeast: body = "atleast " + std::to_string(b.count()) + " " + role(b.role()); break;
    }
    return c.isNegated() ? "not " + body : body;
  }

  const std::map<std::string, std::string>& prefixes() const { return nsOf_; }

 private:
  std::map<std::string, std::string> labelOf_;  // namespace -> label
  std::map<std::string, std::string> nsOf_;     // label -> namespace
};

std::string dotEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string serializeOntology(const Ontology& o) {
  for (const auto& i : o.constraints())
    if (!isExtended(i)) throw ValidationError("cannot serialize '" + toString(i) + "'");
  const NameWriter w(o.vocabulary());
  std::ostringstream out;
  out << "# lightweight ontology: " << o.vocabulary().concepts.size() << " concepts, "
      << o.vocabulary().roles.size() << " roles, " << o.constraints().size() << " constraints\n";
  for (const auto& [label, ns] : w.prefixes()) out << "@prefix " << label << ": <" << ns << "> .\n";
  for (const auto& c : o.vocabulary().concepts) out << "concept " << w.name(c) << " .\n";
  for (const auto& r : o.vocabulary().roles) out << "role " << w.name(r) << " .\n";
  for (const auto& i : o.constraints()) out << w.text(i.lhs) << " sub " << w.text(i.rhs) << " .\n";
  return out.str();
}

std::string exportDot(const ConstraintGraph& g) {
  std::ostringstream out;
  out << "digraph constraints {\n";
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    std::string label;
    for (const auto& c : g.node(v).labels) label += (label.empty() ? "" : "\\n") + dotEscape(toString(c));
    if (g.node(v).bottom) label += "\\n[bottom node]";
    if (g.node(v).top) label += "\\n[top node]";
    out << "  n" << v << " [label=\"" << label << "\"];\n";
  }
  for (auto [v, w] : g.arcList()) {
    out << "  n" << v << " -> n" << w;
    if (g.arc(v, w) == ArcKind::Tautological) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string exportTable(const Ontology& o) {
  std::ostringstream out;
  std::set<Inclusion> rows(o.constraints().begin(), o.constraints().end());
  for (const auto& i : o.constraints()) out << toString(i.lhs) << '\t' << toString(i.rhs) << '\n';
  for (const auto& e : emptyDescriptions(o.constraints())) {
    Inclusion row{e, Concept::bottom()};
    if (rows.insert(row).second) out << toString(e) << "\tBottom\n";
  }
  return out.str();
}

}  // namespace lwo
