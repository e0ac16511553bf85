#include "linkscope/ntriples.hpp"

#include <cctype>
#include <istream>

#include "linkscope/error.hpp"

namespace linkscope {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t'; }

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  bool eat(char c) {
    if (done() || s[i] != c) return false;
    ++i;
    return true;
  }
  void skip_ws() {
    while (!done() && is_ws(s[i])) ++i;
  }
  // Requires at least one whitespace char between terms.
  bool skip_ws1() {
    if (done() || !is_ws(s[i])) return false;
    skip_ws();
    return true;
  }
};

bool hex_val(char c, std::uint32_t& out) {
  if (c >= '0' && c <= '9') out = static_cast<std::uint32_t>(c - '0');
  else if (c >= 'a' && c <= 'f') out = static_cast<std::uint32_t>(c - 'a' + 10);
  else if (c >= 'A' && c <= 'F') out = static_cast<std::uint32_t>(c - 'A' + 10);
  else return false;
  return true;
}

bool parse_hex(Cursor& c, int digits, std::uint32_t& code) {
  code = 0;
  for (int k = 0; k < digits; ++k) {
    if (c.done()) return false;
    std::uint32_t v;
    if (!hex_val(c.s[c.i], v)) return false;
    code = code << 4 | v;
    ++c.i;
  }
  return true;
}

bool append_utf8(std::uint32_t cp, std::string& out) {
  if (cp >= 0xD800 && cp <= 0xDFFF) return false;  // surrogates
  if (cp > 0x10FFFF) return false;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | cp >> 6));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | cp >> 12));
    out.push_back(static_cast<char>(0x80 | (cp >> 6 & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | cp >> 18));
    out.push_back(static_cast<char>(0x80 | (cp >> 12 & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp >> 6 & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return true;
}

std::optional<Iri> parse_iriref(Cursor& c) {
  if (!c.eat('<')) return std::nullopt;
  std::size_t start = c.i;
  while (!c.done() && c.peek() != '>') {
    if (c.peek() == '<') return std::nullopt;
    ++c.i;
  }
  if (c.done()) return std::nullopt;  // unterminated
  std::string_view body = c.s.substr(start, c.i - start);
  ++c.i;  // '>'
  if (!valid_iri(body)) return std::nullopt;
  return Iri{std::string(body)};
}

bool blank_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::optional<BlankNode> parse_blank(Cursor& c) {
  if (!c.eat('_') || !c.eat(':')) return std::nullopt;
  std::size_t start = c.i;
  while (!c.done() && blank_label_char(c.peek())) ++c.i;
  if (c.i == start) return std::nullopt;
  return BlankNode{std::string(c.s.substr(start, c.i - start))};
}

std::optional<std::string> parse_quoted_string(Cursor& c) {
  if (!c.eat('"')) return std::nullopt;
  std::string out;
  while (true) {
    if (c.done()) return std::nullopt;  // unterminated
    char ch = c.peek();
    ++c.i;
    if (ch == '"') return out;
    if (ch == '\\') {
      if (c.done()) return std::nullopt;
      char esc = c.peek();
      ++c.i;
      switch (esc) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case 'u': {
          std::uint32_t cp;
          if (!parse_hex(c, 4, cp) || !append_utf8(cp, out)) return std::nullopt;
          break;
        }
        case 'U': {
          std::uint32_t cp;
          if (!parse_hex(c, 8, cp) || !append_utf8(cp, out)) return std::nullopt;
          break;
        }
        default:
          return std::nullopt;
      }
    } else {
      out.push_back(ch);
    }
  }
}

std::optional<std::string> parse_langtag(Cursor& c) {
  // '@' already consumed. [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
  std::string tag;
  auto alpha = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)); };
  auto alnum = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)); };
  if (c.done() || !alpha(c.peek())) return std::nullopt;
  while (!c.done() && alpha(c.peek())) tag.push_back(c.s[c.i++]);
  while (!c.done() && c.peek() == '-') {
    tag.push_back(c.s[c.i++]);
    if (c.done() || !alnum(c.peek())) return std::nullopt;
    while (!c.done() && alnum(c.peek())) tag.push_back(c.s[c.i++]);
  }
  return tag;
}

std::optional<Literal> parse_literal(Cursor& c) {
  auto body = parse_quoted_string(c);
  if (!body) return std::nullopt;
  Literal lit{std::move(*body), std::nullopt, std::nullopt};
  if (c.eat('@')) {
    auto tag = parse_langtag(c);
    if (!tag) return std::nullopt;
    lit.lang_tag = std::move(*tag);
  } else if (!c.done() && c.peek() == '^') {
    if (!c.eat('^') || !c.eat('^')) return std::nullopt;
    auto dt = parse_iriref(c);
    if (!dt) return std::nullopt;
    lit.datatype = std::move(*dt);
  }
  return lit;
}

void escape_into(std::string_view raw, std::string& out) {
  for (char ch : raw) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(ch);
    }
  }
}

}  // namespace

bool valid_iri(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (is_ws(c) || c == '\n' || c == '\r' || c == '<' || c == '>') return false;
  }
  return true;
}

bool ntriples_line_skippable(std::string_view line) {
  Cursor c{line};
  c.skip_ws();
  return c.done() || c.peek() == '#';
}

std::optional<Triple> parse_ntriples_line(std::string_view line) {
  Cursor c{line};
  c.skip_ws();

  SubjectTerm subject;
  if (!c.done() && c.peek() == '<') {
    auto iri = parse_iriref(c);
    if (!iri) return std::nullopt;
    subject = std::move(*iri);
  } else {
    auto bn = parse_blank(c);
    if (!bn) return std::nullopt;
    subject = std::move(*bn);
  }
  if (!c.skip_ws1()) return std::nullopt;

  auto predicate = parse_iriref(c);
  if (!predicate) return std::nullopt;
  if (!c.skip_ws1()) return std::nullopt;

  ObjectTerm object;
  if (c.done()) return std::nullopt;
  if (c.peek() == '<') {
    auto iri = parse_iriref(c);
    if (!iri) return std::nullopt;
    object = std::move(*iri);
  } else if (c.peek() == '_') {
    auto bn = parse_blank(c);
    if (!bn) return std::nullopt;
    object = std::move(*bn);
  } else if (c.peek() == '"') {
    auto lit = parse_literal(c);
    if (!lit) return std::nullopt;
    object = std::move(*lit);
  } else {
    return std::nullopt;
  }

  c.skip_ws();
  if (!c.eat('.')) return std::nullopt;
  c.skip_ws();
  if (!c.done()) return std::nullopt;  // trailing junk after terminal dot

  return Triple{std::move(subject), std::move(*predicate), std::move(object)};
}

std::optional<Triple> NTriplesReader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++tally_.lines_total;
    if (ntriples_line_skippable(line)) {
      ++tally_.lines_skipped;
      continue;
    }
    auto t = parse_ntriples_line(line);
    if (!t) {
      ++tally_.lines_malformed;
      continue;
    }
    ++tally_.triples_ok;
    return t;
  }
  if (in_->bad()) throw IngestError("I/O failure while reading N-Triples stream");
  return std::nullopt;
}

std::pair<std::vector<Triple>, ParseTally> parse_ntriples(std::istream& in) {
  NTriplesReader reader(in);
  std::vector<Triple> out;
  while (auto t = reader.next()) out.push_back(std::move(*t));
  return {std::move(out), reader.tally()};
}

std::string serialize_triple(const Triple& t) {
  std::string out;
  if (const auto* iri = std::get_if<Iri>(&t.subject)) {
    out += '<';
    out += iri->value;
    out += '>';
  } else {
    out += "_:";
    out += std::get<BlankNode>(t.subject).label;
  }
  out += " <";
  out += t.predicate.value;
  out += "> ";
  if (const auto* iri = std::get_if<Iri>(&t.object)) {
    out += '<';
    out += iri->value;
    out += '>';
  } else if (const auto* bn = std::get_if<BlankNode>(&t.object)) {
    out += "_:";
    out += bn->label;
  } else {
    const auto& lit = std::get<Literal>(t.object);
    out += '"';
    escape_into(lit.lexical, out);
    out += '"';
    if (lit.lang_tag) {
      out += '@';
      out += *lit.lang_tag;
    } else if (lit.datatype) {
      out += "^^<";
      out += lit.datatype->value;
      out += '>';
    }
  }
  out += " .";
  return out;
}

void EdgeExtractor::add(const Triple& t) {
  if (t.predicate != predicate_) return;
  ++out_.predicate_matches;
  const auto* s = std::get_if<Iri>(&t.subject);
  const auto* o = std::get_if<Iri>(&t.object);
  if (!s || !o) {
    ++out_.off_roster;
    return;
  }
  auto si = index_->find(s->value);
  auto oi = index_->find(o->value);
  if (si == index_->end() || oi == index_->end()) {
    ++out_.off_roster;
    return;
  }
  out_.edges.emplace_back(si->second, oi->second);
}

EdgeExtraction extract_edges(const std::vector<Triple>& triples,
                             const Iri& link_predicate, const IriIndex& index) {
  EdgeExtractor ex(link_predicate, index);
  for (const auto& t : triples) ex.add(t);
  return ex.take();
}

}  // namespace linkscope
