#include "lienil/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lienil/errors.hpp"
#include "lienil/field.hpp"

namespace lienil {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == ':') {
      out.push_back({":", i + 1});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != ':' &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool parse_uint(std::string_view s, unsigned long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

unsigned long number(Token const& t, std::size_t line, char const* what) {
  unsigned long v = 0;
  if (!parse_uint(t.text, v)) throw ParseError(line, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
  return v;
}

// Parses tokens[from..] as a relation word; `after` is the 1-based index all
// generators must exceed.
PcWord parse_word(std::vector<Token> const& tokens, std::size_t from, std::size_t line, unsigned p, unsigned n,
                  unsigned after) {
  PcWord w;
  if (from >= tokens.size()) {
    std::size_t col = tokens.empty() ? 1 : tokens.back().column + tokens.back().text.size();
    throw ParseError(line, col, "missing relation word (use 'e' for the identity)");
  }
  if (tokens[from].text == "e") {
    if (from + 1 != tokens.size()) throw ParseError(line, tokens[from + 1].column, "unexpected text after 'e'");
    return w;
  }
  unsigned prev = after;
  for (std::size_t t = from; t < tokens.size(); ++t) {
    Token const& tok = tokens[t];
    std::string_view s = tok.text;
    if (s.size() < 2 || s[0] != 'x') throw ParseError(line, tok.column, "expected a token x<k>^<e>, got '" + tok.text + "'");
    std::size_t caret = s.find('^');
    unsigned long k = 0, e = 1;
    if (!parse_uint(s.substr(1, caret == std::string_view::npos ? s.npos : caret - 1), k))
      throw ParseError(line, tok.column + 1, "bad generator index in '" + tok.text + "'");
    if (caret != std::string_view::npos && !parse_uint(s.substr(caret + 1), e))
      throw ParseError(line, tok.column + caret + 1, "bad exponent in '" + tok.text + "'");
    if (k < 1 || k > n)
      throw ParseError(line, tok.column + 1, "generator x" + std::to_string(k) + " out of range 1.." + std::to_string(n));
    if (k <= after)
      throw ParseError(line, tok.column + 1,
                       "word may only use generators after x" + std::to_string(after) + ", got x" + std::to_string(k));
    if (k <= prev)
      throw ParseError(line, tok.column + 1, "generators must be strictly increasing within a word");
    if (e == 0 || e >= p)
      throw ParseError(line, caret == std::string_view::npos ? tok.column : tok.column + caret + 1,
                       "exponent " + std::to_string(e) + " not in [1, " + std::to_string(p) + ")");
    w.letters.push_back({unsigned(k - 1), unsigned(e)});
    prev = unsigned(k);
  }
  return w;
}

std::string word_text(PcWord const& w) {
  if (w.empty()) return "e";
  std::string s;
  for (auto [k, e] : w.letters) {
    if (!s.empty()) s += ' ';
    s += "x" + std::to_string(k + 1) + "^" + std::to_string(e);
  }
  return s;
}

CatalogEntry entry(std::string name, unsigned p, std::string pc, std::vector<std::string> tags, ExpectedValues ex) {
  CatalogEntry e;
  e.name = std::move(name);
  e.p = p;
  e.pc_text = std::move(pc);
  e.tags = std::move(tags);
  e.expected = std::move(ex);
  return e;
}

ExpectedValues abelian(std::size_t order, std::size_t t_aug, std::string note) {
  return {order, 1, 1, 2, 2, t_aug, "commutative: R^[2] = 0; t(G) = 1 + sum(p^m_i - 1); " + std::move(note)};
}

// |G'| = p forces p + 1 <= t_L <= t^L <= |G'| + 1.
ExpectedValues small_derived(std::size_t order, unsigned p, unsigned cls) {
  return {order, p, cls, p + 1, p + 1, std::nullopt, "|G'| = p pins t_L = t^L = p + 1"};
}

ExpectedValues shape(std::size_t order, std::size_t derived, unsigned cls, std::string note) {
  return {order, derived, cls, std::nullopt, std::nullopt, std::nullopt, std::move(note)};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  // Abelian controls.
  c.push_back(entry("c2", 2, "p 2\ngens 1\n", {"p=2", "abelian", "cyclic"}, abelian(2, 2, "C2")));
  c.push_back(entry("c4", 2, "p 2\ngens 2\npow 1 : x2^1\n", {"p=2", "abelian", "cyclic"}, abelian(4, 4, "C4")));
  c.push_back(entry("c4xc2", 2, "p 2\ngens 3\npow 1 : x2^1\n", {"p=2", "abelian"}, abelian(8, 5, "1 + 3 + 1")));
  c.push_back(entry("c3", 3, "p 3\ngens 1\n", {"p=3", "abelian", "cyclic"}, abelian(3, 3, "C3")));
  c.push_back(entry("c9", 3, "p 3\ngens 2\npow 1 : x2^1\n", {"p=3", "abelian", "cyclic"}, abelian(9, 9, "C9")));
  c.push_back(entry("c27", 3, "p 3\ngens 3\npow 1 : x2^1\npow 2 : x3^1\n", {"p=3", "abelian", "cyclic"},
                    abelian(27, 27, "C27")));
  c.push_back(entry("c9xc3", 3, "p 3\ngens 3\npow 1 : x2^1\n", {"p=3", "abelian"}, abelian(27, 11, "1 + 8 + 2")));
  c.push_back(entry("c3xc3xc3xc3", 3, "p 3\ngens 4\n", {"p=3", "abelian", "elementary"}, abelian(81, 9, "1 + 4*2")));
  c.push_back(entry("c5", 5, "p 5\ngens 1\n", {"p=5", "abelian", "cyclic"}, abelian(5, 5, "C5")));
  c.push_back(entry("c25", 5, "p 5\ngens 2\npow 1 : x2^1\n", {"p=5", "abelian", "cyclic"}, abelian(25, 25, "C25")));

  // p = 2. In the dihedral-type groups x1 is the reflection and x2 the rotation.
  c.push_back(entry("d4", 2, "p 2\ngens 3\npow 2 : x3^1\ncomm 2 1 : x3^1\n", {"p=2", "dihedral", "class 2"},
                    small_derived(8, 2, 2)));
  c.push_back(entry("q8", 2, "p 2\ngens 3\npow 1 : x3^1\npow 2 : x3^1\ncomm 2 1 : x3^1\n",
                    {"p=2", "quaternion", "class 2"}, small_derived(8, 2, 2)));
  c.push_back(entry("d4xc2", 2, "p 2\ngens 4\npow 2 : x3^1\ncomm 2 1 : x3^1\n", {"p=2", "class 2"},
                    small_derived(16, 2, 2)));
  c.push_back(entry("d8", 2, "p 2\ngens 4\npow 2 : x3^1\npow 3 : x4^1\ncomm 2 1 : x3^1 x4^1\ncomm 3 1 : x4^1\n",
                    {"p=2", "dihedral", "maximal class"}, shape(16, 4, 3, "dihedral of order 16: G' = <r^2>")));
  c.push_back(entry("q16", 2,
                    "p 2\ngens 4\npow 1 : x4^1\npow 2 : x3^1\npow 3 : x4^1\ncomm 2 1 : x3^1 x4^1\ncomm 3 1 : x4^1\n",
                    {"p=2", "quaternion", "maximal class"}, shape(16, 4, 3, "generalized quaternion: G' = <r^2>")));
  c.push_back(entry("sd16", 2, "p 2\ngens 4\npow 2 : x3^1\npow 3 : x4^1\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\n",
                    {"p=2", "semidihedral", "maximal class"}, shape(16, 4, 3, "semidihedral: r^s = r^3")));
  c.push_back(entry("m16", 2, "p 2\ngens 4\npow 2 : x3^1\npow 3 : x4^1\ncomm 2 1 : x4^1\n", {"p=2", "modular"},
                    small_derived(16, 2, 2)));
  c.push_back(entry("d16", 2,
                    "p 2\ngens 5\npow 2 : x3^1\npow 3 : x4^1\npow 4 : x5^1\ncomm 2 1 : x3^1 x4^1 x5^1\n"
                    "comm 3 1 : x4^1 x5^1\ncomm 4 1 : x5^1\n",
                    {"p=2", "dihedral", "maximal class"}, shape(32, 8, 4, "dihedral of order 32")));
  c.push_back(entry("c4wrc2", 2,
                    "p 2\ngens 5\npow 2 : x4^1\npow 3 : x5^1\ncomm 2 1 : x3^1\ncomm 3 1 : x5^1\ncomm 4 1 : x5^1\n",
                    {"p=2", "wreath"}, shape(32, 4, 3, "C4 wr C2: G' = {(a, -a)}")));
  c.push_back(entry("extraspecial32p", 2, "p 2\ngens 5\ncomm 2 1 : x5^1\ncomm 4 3 : x5^1\n",
                    {"p=2", "extraspecial", "class 2"}, small_derived(32, 2, 2)));
  c.push_back(entry("extraspecial32m", 2,
                    "p 2\ngens 5\npow 3 : x5^1\npow 4 : x5^1\ncomm 2 1 : x5^1\ncomm 4 3 : x5^1\n",
                    {"p=2", "extraspecial", "class 2"}, small_derived(32, 2, 2)));
  c.push_back(entry("g32class2", 2, "p 2\ngens 5\ncomm 2 1 : x4^1\ncomm 3 1 : x5^1\n", {"p=2", "class 2"},
                    shape(32, 4, 2, "G' = <x4, x5> central")));
  c.push_back(entry("g64class3", 2,
                    "p 2\ngens 6\ncomm 2 1 : x4^1\ncomm 3 2 : x5^1\ncomm 4 3 : x6^1\ncomm 5 1 : x6^1\n",
                    {"p=2", "class 3"}, shape(64, 8, 3, "G' = <x4, x5, x6>, gamma_3 = <x6>")));
  c.push_back(entry("c2wrc4", 2,
                    "p 2\ngens 6\npow 1 : x2^1\ncomm 3 1 : x4^1\ncomm 3 2 : x5^1\ncomm 4 1 : x5^1\n"
                    "comm 4 2 : x6^1\ncomm 5 1 : x6^1\n",
                    {"p=2", "wreath"}, shape(64, 8, 4, "C2 wr C4: gamma_i = (t - 1)^(i-1) F2[C4]")));

  // p = 3.
  c.push_back(entry("heisenberg27", 3, "p 3\ngens 3\ncomm 2 1 : x3^1\n", {"p=3", "extraspecial", "exponent 3"},
                    small_derived(27, 3, 2)));
  c.push_back(entry("extraspecial27e9", 3, "p 3\ngens 3\npow 2 : x3^1\ncomm 2 1 : x3^1\n",
                    {"p=3", "extraspecial", "exponent 9"}, small_derived(27, 3, 2)));
  c.push_back(entry("heisenberg27xc3", 3, "p 3\ngens 4\ncomm 2 1 : x3^1\n", {"p=3", "class 2"},
                    small_derived(81, 3, 2)));
  c.push_back(entry("c9sdc9", 3, "p 3\ngens 4\npow 1 : x3^1\npow 2 : x4^1\ncomm 2 1 : x4^1\n",
                    {"p=3", "metacyclic", "class 2"}, small_derived(81, 3, 2)));
  c.push_back(entry("c3wrc3", 3, "p 3\ngens 4\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\n",
                    {"p=3", "wreath", "maximal class", "|G'|=9"}, shape(81, 9, 3, "C3 wr C3")));
  c.push_back(entry("maxclass81b", 3, "p 3\ngens 4\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x4^1\n",
                    {"p=3", "maximal class", "|G'|=9"}, shape(81, 9, 3, "maximal class")));
  c.push_back(entry("maxclass81c", 3, "p 3\ngens 4\npow 1 : x4^1\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x4^1\n",
                    {"p=3", "maximal class", "|G'|=9"}, shape(81, 9, 3, "maximal class")));
  c.push_back(entry("maxclass81d", 3,
                    "p 3\ngens 4\npow 1 : x4^1\npow 2 : x4^1\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x4^1\n",
                    {"p=3", "maximal class", "|G'|=9"}, shape(81, 9, 3, "maximal class")));
  c.push_back(entry("g243class2", 3, "p 3\ngens 5\ncomm 2 1 : x4^1\ncomm 3 1 : x5^1\n", {"p=3", "class 2"},
                    shape(243, 9, 2, "G' = <x4, x5> central")));
  c.push_back(entry("g243cyclicderived", 3,
                    "p 3\ngens 5\npow 1 : x3^1\npow 2 : x4^1\npow 4 : x5^1\ncomm 2 1 : x4^1\ncomm 3 2 : x5^2\n"
                    "comm 4 1 : x5^1\n",
                    {"p=3", "class 3", "G' cyclic"}, shape(243, 9, 3, "G' = <x4> = C9, gamma_3 = G'^3 = <x5>")));
  c.push_back(entry("g243class3", 3, "p 3\ngens 5\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x5^1\n",
                    {"p=3", "class 3", "|G'|=27", "G' elementary", "gamma_3 rank 2"},
                    shape(243, 27, 3, "G' = <x3, x4, x5> elementary, gamma_3 = <x4, x5>")));
  const char* maxclass243[] = {
      "pow 3 : x5^2\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x4^1 x5^1\ncomm 4 1 : x5^1\ncomm 4 2 : x5^1\n",
      "pow 3 : x5^2\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x4^1\ncomm 4 1 : x5^1\ncomm 4 2 : x5^1\n",
      "pow 1 : x5^1\npow 3 : x5^2\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x4^1 x5^2\ncomm 4 1 : x5^1\n"
      "comm 4 2 : x5^1\n",
      "pow 1 : x5^1\npow 3 : x5^2\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x4^1\ncomm 4 1 : x5^1\n"
      "comm 4 2 : x5^1\n",
      "pow 1 : x5^1\npow 2 : x4^2\npow 3 : x5^2\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x5^1\n"
      "comm 4 1 : x5^1\n",
      "pow 1 : x5^1\npow 2 : x5^1\npow 3 : x5^2\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\ncomm 3 2 : x4^1\n"
      "comm 4 1 : x5^1\ncomm 4 2 : x5^1\n",
  };
  for (int i = 0; i < 6; ++i)
    c.push_back(entry("maxclass243" + std::string(1, char('a' + i)), 3, std::string("p 3\ngens 5\n") + maxclass243[i],
                      {"p=3", "maximal class", "|G'|=27", "gamma_3 rank 2"},
                      shape(243, 27, 4, "maximal class of order 3^5")));
  c.push_back(entry("g729class3", 3,
                    "p 3\ngens 6\npow 1 : x4^1\npow 2 : x5^1\npow 4 : x6^1\ncomm 2 1 : x4^1\ncomm 3 1 : x5^1\n"
                    "comm 4 2 : x6^2\ncomm 5 1 : x6^1\n",
                    {"p=3", "class 3", "|G'|=27", "above default cap"},
                    shape(729, 27, 3, "G' = <x4, x5> = C9 x C3, gamma_3 = G'^3 = <x6>")));
  c.push_back(entry("g729class4", 3,
                    "p 3\ngens 6\npow 1 : x3^1\ncomm 2 1 : x4^1\ncomm 3 2 : x6^2\ncomm 4 1 : x5^1\ncomm 5 1 : x6^1\n",
                    {"p=3", "class 4", "|G'|=27", "G' elementary", "gamma_3 rank 2", "above default cap"},
                    shape(729, 27, 4, "G/G' = C9 x C3, G' = <x4, x5, x6> elementary, gamma_4 = <x6>")));

  // p = 5.
  c.push_back(entry("heisenberg125", 5, "p 5\ngens 3\ncomm 2 1 : x3^1\n", {"p=5", "extraspecial", "exponent 5"},
                    small_derived(125, 5, 2)));
  c.push_back(entry("extraspecial125e25", 5, "p 5\ngens 3\npow 2 : x3^1\ncomm 2 1 : x3^1\n",
                    {"p=5", "extraspecial", "exponent 25"}, small_derived(125, 5, 2)));
  c.push_back(entry("maxclass625", 5, "p 5\ngens 4\ncomm 2 1 : x3^1\ncomm 3 1 : x4^1\n",
                    {"p=5", "maximal class", "above default cap"}, shape(625, 25, 3, "C5^3 extended by C5")));

  std::sort(c.begin(), c.end(), [](auto const& a, auto const& b) { return a.name < b.name; });
  return c;
}

}  // namespace

PcPresentation CatalogEntry::presentation() const { return parse_pc_file(pc_text); }

std::size_t CatalogEntry::order() const {
  std::size_t n = 1;
  for (unsigned i = 0; i < presentation().n_gens(); ++i) n *= p;
  return n;
}

std::vector<CatalogEntry> const& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = make_catalog();
  return catalog;
}

CatalogEntry const* find_entry(std::string_view name) {
  for (auto const& e : builtin_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

PcPresentation parse_pc_file(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<unsigned> p, n;
  std::optional<PcPresentation> pres;
  std::vector<std::uint8_t> seen;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line = ln + 1;
    auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    std::string const& dir = tokens[0].text;
    if (dir == "p" || dir == "gens") {
      if (tokens.size() != 2) throw ParseError(line, tokens[0].column, "'" + dir + "' takes exactly one number");
      unsigned long v = number(tokens[1], line, dir == "p" ? "a prime" : "a generator count");
      if (dir == "p") {
        if (p) throw ParseError(line, 1, "prime given twice");
        if (v > 251 || !is_prime(unsigned(v))) throw ParseError(line, tokens[1].column, "'" + tokens[1].text + "' is not a prime <= 251");
        p = unsigned(v);
      } else {
        if (n) throw ParseError(line, 1, "generator count given twice");
        if (v > 64) throw ParseError(line, tokens[1].column, "too many generators");
        n = unsigned(v);
      }
      if (p && n && !pres) {
        pres.emplace(*p, *n);
        seen.assign(std::size_t(*n) * (*n + 1), 0);
      }
      continue;
    }
    if (dir != "pow" && dir != "comm") throw ParseError(line, tokens[0].column, "unknown directive '" + dir + "'");
    if (!pres) throw ParseError(line, tokens[0].column, "'p' and 'gens' must come before relations");
    const std::size_t nargs = dir == "pow" ? 1 : 2;
    if (tokens.size() < nargs + 2 || tokens[nargs + 1].text != ":") {
      std::size_t col = tokens.size() > nargs + 1 ? tokens[nargs + 1].column : tokens.back().column;
      throw ParseError(line, col, "expected '" + dir + (nargs == 1 ? " <i>" : " <j> <i>") + " : <word>'");
    }
    std::vector<unsigned> idx;
    for (std::size_t a = 1; a <= nargs; ++a) {
      unsigned long v = number(tokens[a], line, "a generator index");
      if (v < 1 || v > *n)
        throw ParseError(line, tokens[a].column, "generator index " + tokens[a].text + " out of range 1.." + std::to_string(*n));
      idx.push_back(unsigned(v));
    }
    if (dir == "pow") {
      std::size_t key = idx[0] - 1;
      if (seen[key]) throw ParseError(line, 1, "power relation for x" + std::to_string(idx[0]) + " given twice");
      seen[key] = 1;
      pres->set_power(idx[0] - 1, parse_word(tokens, 3, line, *p, *n, idx[0]));
    } else {
      if (idx[0] <= idx[1]) throw ParseError(line, tokens[1].column, "commutator relation needs j > i");
      std::size_t key = *n + std::size_t(idx[0] - 1) * (*n) + (idx[1] - 1);
      if (seen[key])
        throw ParseError(line, 1, "commutator relation (" + std::to_string(idx[0]) + ", " + std::to_string(idx[1]) + ") given twice");
      seen[key] = 1;
      pres->set_commutator(idx[0] - 1, idx[1] - 1, parse_word(tokens, 4, line, *p, *n, idx[0]));
    }
  }
  if (!p) throw ParseError(lines.size(), 1, "missing 'p <prime>'");
  if (!n) throw ParseError(lines.size(), 1, "missing 'gens <n>'");
  pres->validate();
  return *pres;
}

std::string serialize_pc(PcPresentation const& pres) {
  std::ostringstream out;
  out << "p " << pres.p() << "\ngens " << pres.n_gens() << "\n";
  for (unsigned i = 0; i < pres.n_gens(); ++i)
    if (!pres.power(i).empty()) out << "pow " << i + 1 << " : " << word_text(pres.power(i)) << "\n";
  for (unsigned j = 0; j < pres.n_gens(); ++j)
    for (unsigned i = 0; i < j; ++i)
      if (!pres.commutator(j, i).empty())
        out << "comm " << j + 1 << " " << i + 1 << " : " << word_text(pres.commutator(j, i)) << "\n";
  return out.str();
}

FiniteGroup parse_cayley_file(std::string_view text, unsigned p) {
  auto lines = split_lines(text);
  std::size_t ln = 0;
  std::vector<Token> tokens;
  auto next_line = [&]() {
    while (ln < lines.size()) {
      tokens = tokenize(lines[ln++]);
      if (!tokens.empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, 1, "empty Cayley table file");
  if (tokens[0].text != "order" || tokens.size() != 2)
    throw ParseError(ln, tokens[0].column, "expected 'order <N>'");
  const unsigned long order = number(tokens[1], ln, "an order");
  if (order == 0 || order > 4096) throw ParseError(ln, tokens[1].column, "order must be in 1..4096");
  std::vector<Element> table;
  table.reserve(order * order);
  for (unsigned long row = 0; row < order; ++row) {
    if (!next_line()) throw ParseError(lines.size(), 1, "expected " + std::to_string(order) + " table rows");
    if (tokens.size() != order)
      throw ParseError(ln, tokens.empty() ? 1 : tokens[0].column,
                       "row " + std::to_string(row) + " has " + std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(order));
    for (auto const& t : tokens) {
      unsigned long v = number(t, ln, "an element index");
      if (v >= order) throw ParseError(ln, t.column, "element index " + t.text + " out of range");
      table.push_back(Element(v));
    }
  }
  if (next_line()) throw ParseError(ln, tokens[0].column, "unexpected text after the table");
  if (p == 0) {
    if (order == 1) throw InputError("cannot infer the prime of the trivial group; pass it explicitly");
    for (unsigned q = 2; q <= order; ++q)
      if (order % q == 0) {
        p = q;
        break;
      }
  }
  if (p > 251) throw InputError("prime must be at most 251");
  FiniteGroup g(p, order, table, {});
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) {
      Element ab = g.mul(a, b);
      for (Element c = 0; c < order; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw InputError("Cayley table is not associative: (" + std::to_string(a) + " " + std::to_string(b) + ") " +
                           std::to_string(c) + " differs");
    }
  return g;
}

std::vector<WitnessCase> const& witness_coverage() {
  static const std::vector<WitnessCase> cases = {
      {12, "G' = C9 x C3 or (C3)^5, gamma_3 inside G'^3", {"g729class3"},
       "G'/gamma_3 of rank 2 needs 3 generators; order 3^6 is above the default scan cap"},
      {12, "G' = (C3)^4, gamma_3 = C3, d = (3, 1)", {}, "G'/gamma_3 of rank 3 needs 3 generators, so |G| >= 3^7"},
      {12, "G' = (C3)^3, gamma_3 = C3 x C3, gamma_4 = 1, d = (1, 2)", {"g243class3"}, ""},
      {14, "G' = C9 x C3 x C3 or (C3)^6, gamma_3 inside G'^3", {}, "G'/gamma_3 of rank >= 3 needs 3 generators and |G'| >= 3^4, so |G| >= 3^7"},
      {14, "G' = (C3)^5, gamma_3 = C3, d = (4, 1)", {}, "G'/gamma_3 of rank 4 needs 4 generators, so |G| >= 3^9"},
      {14, "G' = C9 x C3, gamma_4 = C3 inside G'^3, d = (1, 1, 1)",
       {"maxclass243a", "maxclass243b", "maxclass243c", "maxclass243d", "maxclass243e", "maxclass243f"}, ""},
      {14, "G' = (C3)^4, gamma_3 = C3 x C3, d = (2, 2)", {}, "G'/gamma_3 of rank 2 needs 3 generators, so |G| >= 3^7"},
      {14, "G' = (C3)^3, gamma_3 = C3 x C3, gamma_4 = C3, d = (1, 1, 1)", {"g729class4"},
       "order 3^6 is above the default scan cap; run with --max-order 729"},
  };
  return cases;
}

}  // namespace lienil
