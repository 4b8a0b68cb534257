#include "bracekit/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace bracekit {

namespace {

constexpr int kMaxParsedOrder = 4096;  // guards table allocation, not a math bound

struct Token {
  std::string text;
  int line = 1;
  int column = 1;
};

/// Whitespace-separated tokens with 1-based positions; remembers where the
/// input ended so end-of-input errors still point somewhere useful.
struct TokenStream {
  std::vector<Token> tokens;
  size_t pos = 0;
  int end_line = 1;
  int end_column = 1;

  static TokenStream from(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    TokenStream ts;
    int line = 1, column = 1;
    size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '\n') {
        ++line;
        column = 1;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++column;
        ++i;
      } else {
        Token tok{"", line, column};
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
          tok.text += text[i];
          ++i;
          ++column;
        }
        ts.tokens.push_back(std::move(tok));
      }
    }
    ts.end_line = line;
    ts.end_column = column;
    return ts;
  }

  const Token& require(const std::string& what) {
    if (pos >= tokens.size())
      throw ParseError("unexpected end of input, expected " + what, end_line, end_column);
    return tokens[pos++];
  }

  void require_keyword(const std::string& keyword) {
    const Token& tok = require("'" + keyword + "'");
    if (tok.text != keyword)
      throw ParseError("expected '" + keyword + "', found '" + tok.text + "'", tok.line,
                       tok.column);
  }

  int require_int(const std::string& what, int lo, int hi) {
    const Token& tok = require(what);
    size_t digits = 0;
    long value = 0;
    bool ok = !tok.text.empty();
    for (char c : tok.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        ok = false;
        break;
      }
      value = value * 10 + (c - '0');
      if (++digits > 7) break;  // anything longer is out of range anyway
    }
    if (!ok || digits > 7)
      throw ParseError("expected " + what + ", found '" + tok.text + "'", tok.line, tok.column);
    if (value < lo || value > hi)
      throw ParseError(what + " " + tok.text + " out of range " + std::to_string(lo) + ".." +
                           std::to_string(hi),
                       tok.line, tok.column);
    return static_cast<int>(value);
  }

  void require_end() {
    if (pos < tokens.size()) {
      const Token& tok = tokens[pos];
      throw ParseError("unexpected trailing input '" + tok.text + "'", tok.line, tok.column);
    }
  }
};

std::vector<std::vector<Index>> read_rows(TokenStream& ts, int n) {
  std::vector<std::vector<Index>> rows(n, std::vector<Index>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[x][y] = ts.require_int("table entry", 0, n - 1);
  return rows;
}

void write_rows(std::ostream& out, const std::vector<std::vector<Index>>& rows) {
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << row[i];
    }
    out << '\n';
  }
}

GroupTable group_with_identity_first(std::vector<std::vector<Index>> rows) {
  GroupTable g = GroupTable::from_table(std::move(rows));
  if (g.identity() != 0)
    throw Error(ErrorCode::IdentityMismatch,
                "identity is at index " + std::to_string(g.identity()) + ", files require index 0",
                {g.identity()});
  return g;
}

}  // namespace

GroupTable read_group_text(std::istream& in) {
  TokenStream ts = TokenStream::from(in);
  ts.require_keyword("group");
  const int n = ts.require_int("group order", 1, kMaxParsedOrder);
  std::vector<std::vector<Index>> rows = read_rows(ts, n);
  ts.require_end();
  return group_with_identity_first(std::move(rows));
}

void write_group_text(std::ostream& out, const GroupTable& g) {
  out << "group " << g.order() << '\n';
  write_rows(out, g.rows());
}

SkewBrace read_brace_text(std::istream& in) {
  TokenStream ts = TokenStream::from(in);
  ts.require_keyword("brace");
  const int n = ts.require_int("brace order", 1, kMaxParsedOrder);
  ts.require_keyword("dot:");
  std::vector<std::vector<Index>> dot = read_rows(ts, n);
  ts.require_keyword("circle:");
  std::vector<std::vector<Index>> circle = read_rows(ts, n);
  ts.require_end();
  return SkewBrace::from_tables(group_with_identity_first(std::move(dot)),
                                group_with_identity_first(std::move(circle)));
}

void write_brace_text(std::ostream& out, const SkewBrace& b) {
  out << "brace " << b.order() << '\n';
  out << "dot:\n";
  write_rows(out, b.dot().rows());
  out << "circle:\n";
  write_rows(out, b.circle().rows());
}

YbeSolution read_ybe_text(std::istream& in) {
  TokenStream ts = TokenStream::from(in);
  ts.require_keyword("ybe");
  const int n = ts.require_int("solution order", 1, kMaxParsedOrder);
  std::vector<std::pair<Index, Index>> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Token key = ts.pos < ts.tokens.size() ? ts.tokens[ts.pos]
                                                  : Token{"", ts.end_line, ts.end_column};
      const int rx = ts.require_int("pair entry", 0, n - 1);
      const int ry = ts.require_int("pair entry", 0, n - 1);
      if (rx != x || ry != y)
        throw ParseError("expected entry for pair " + std::to_string(x) + " " + std::to_string(y) +
                             ", found " + std::to_string(rx) + " " + std::to_string(ry),
                         key.line, key.column);
      ts.require_keyword("->");
      const int u = ts.require_int("image entry", 0, n - 1);
      const int v = ts.require_int("image entry", 0, n - 1);
      table[static_cast<size_t>(x) * n + y] = {u, v};
    }
  ts.require_end();
  return YbeSolution::from_table(n, std::move(table));
}

void write_ybe_text(std::ostream& out, const YbeSolution& r) {
  const int n = r.order();
  out << "ybe " << n << '\n';
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto [u, v] = r.apply(x, y);
      out << x << ' ' << y << " -> " << u << ' ' << v << '\n';
    }
}

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson parse_json(std::istream& in) {
  try {
    return OrderedJson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 1);
  }
}

int json_order(const OrderedJson& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing integer field \"n\"", 1);
  const long n = j["n"].get<long>();
  if (n < 1 || n > kMaxParsedOrder)
    throw ParseError("order " + std::to_string(n) + " out of range 1.." +
                         std::to_string(kMaxParsedOrder),
                     1);
  return static_cast<int>(n);
}

std::vector<std::vector<Index>> json_rows(const OrderedJson& j, const std::string& field, int n) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != static_cast<size_t>(n))
    throw ParseError("field \"" + field + "\" must be an array of " + std::to_string(n) + " rows",
                     1);
  std::vector<std::vector<Index>> rows(n, std::vector<Index>(n));
  for (int x = 0; x < n; ++x) {
    const OrderedJson& row = j[field][x];
    if (!row.is_array() || row.size() != static_cast<size_t>(n))
      throw ParseError("row " + std::to_string(x) + " of \"" + field + "\" must have " +
                           std::to_string(n) + " entries",
                       1);
    for (int y = 0; y < n; ++y) {
      if (!row[y].is_number_integer())
        throw ParseError("non-integer entry in \"" + field + "\"", 1);
      const long v = row[y].get<long>();
      if (v < 0 || v >= n)
        throw ParseError("entry " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1),
                         1);
      rows[x][y] = static_cast<Index>(v);
    }
  }
  return rows;
}

OrderedJson rows_json(const std::vector<std::vector<Index>>& rows) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& row : rows) arr.push_back(row);
  return arr;
}

}  // namespace

GroupTable read_group_json(std::istream& in) {
  const OrderedJson j = parse_json(in);
  const int n = json_order(j);
  return group_with_identity_first(json_rows(j, "table", n));
}

std::string group_json(const GroupTable& g) {
  OrderedJson j;
  j["n"] = g.order();
  j["table"] = rows_json(g.rows());
  return j.dump();
}

SkewBrace read_brace_json(std::istream& in) {
  const OrderedJson j = parse_json(in);
  const int n = json_order(j);
  return SkewBrace::from_tables(group_with_identity_first(json_rows(j, "dot", n)),
                                group_with_identity_first(json_rows(j, "circle", n)));
}

std::string brace_json(const SkewBrace& b) {
  OrderedJson j;
  j["n"] = b.order();
  j["dot"] = rows_json(b.dot().rows());
  j["circle"] = rows_json(b.circle().rows());
  return j.dump();
}

YbeSolution read_ybe_json(std::istream& in) {
  const OrderedJson j = parse_json(in);
  const int n = json_order(j);
  if (!j.contains("map") || !j["map"].is_array() ||
      j["map"].size() != static_cast<size_t>(n) * n)
    throw ParseError("field \"map\" must be an array of " + std::to_string(n * n) + " pairs", 1);
  std::vector<std::pair<Index, Index>> table(static_cast<size_t>(n) * n);
  for (size_t k = 0; k < table.size(); ++k) {
    const OrderedJson& entry = j["map"][k];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw ParseError("map entry " + std::to_string(k) + " must be a pair of integers", 1);
    const long u = entry[0].get<long>(), v = entry[1].get<long>();
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("map entry " + std::to_string(k) + " out of range 0.." +
                           std::to_string(n - 1),
                       1);
    table[k] = {static_cast<Index>(u), static_cast<Index>(v)};
  }
  return YbeSolution::from_table(n, std::move(table));
}

std::string ybe_json(const YbeSolution& r) {
  OrderedJson j;
  j["n"] = r.order();
  OrderedJson map = OrderedJson::array();
  for (const auto& [u, v] : r.table()) map.push_back(OrderedJson::array({u, v}));
  j["map"] = std::move(map);
  return j.dump();
}

namespace {

bool looks_like_json(const std::string& text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  return false;
}

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

SkewBrace read_brace_any(std::istream& in) {
  const std::string text = slurp(in);
  std::istringstream stream(text);
  return looks_like_json(text) ? read_brace_json(stream) : read_brace_text(stream);
}

GroupTable read_group_any(std::istream& in) {
  const std::string text = slurp(in);
  std::istringstream stream(text);
  return looks_like_json(text) ? read_group_json(stream) : read_group_text(stream);
}

namespace {

std::string power_label(const std::string& base, int exp) {
  if (exp == 0) return "";
  if (exp == 1) return base;
  return base + "^" + std::to_string(exp);
}

/// Labels for a two-generator presentation g1^i g2^j at index (size of
/// <g1>) * j + i, e.g. eta^i pi^j for D4.
std::vector<std::string> two_generator_labels(const std::string& g1, int n1, const std::string& g2,
                                              int n2) {
  std::vector<std::string> labels;
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i) {
      std::string label = power_label(g1, i) + power_label(g2, j);
      labels.push_back(label.empty() ? "1" : label);
    }
  return labels;
}

std::vector<std::string> atom_labels(const std::string& atom) {
  if (atom == "D4") return two_generator_labels("η", 4, "π", 2);
  if (atom == "Q8") return two_generator_labels("s", 4, "t", 2);
  // Defer name validation to named_group, then label cyclically.
  const GroupTable g = named_group(atom);
  std::vector<std::string> labels;
  for (int i = 0; i < g.order(); ++i) {
    const std::string label = power_label("g", i);
    labels.push_back(label.empty() ? "1" : label);
  }
  return labels;
}

std::vector<std::string> pair_labels(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const std::string& la : a)
    for (const std::string& lb : b) labels.push_back("(" + la + "," + lb + ")");
  return labels;
}

std::vector<std::string> split_atoms(std::string_view name) {
  std::string s(name);
  std::vector<std::string> atoms;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find('x', start);
    if (pos == std::string::npos) {
      atoms.push_back(s.substr(start));
      break;
    }
    atoms.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return atoms;
}

}  // namespace

std::vector<std::string> element_labels(std::string_view name) {
  const std::vector<std::string> atoms = split_atoms(name);
  std::vector<std::string> labels = atom_labels(atoms.empty() ? "" : atoms[0]);
  for (size_t i = 1; i < atoms.size(); ++i) labels = pair_labels(labels, atom_labels(atoms[i]));
  return labels;
}

std::vector<std::pair<std::string, Index>> generator_names(std::string_view name) {
  const std::vector<std::string> atoms = split_atoms(name);
  if (atoms.size() != 1) {
    named_group(name);  // validate, products have no generator names
    return {};
  }
  const std::string& atom = atoms[0];
  if (atom == "D4") return {{"eta", 1}, {"pi", 4}};
  if (atom == "Q8") return {{"s", 1}, {"t", 4}};
  const GroupTable g = named_group(atom);  // validates Cn
  if (g.order() == 1) return {};
  return {{"g", 1}};
}

}  // namespace bracekit
