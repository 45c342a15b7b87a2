#include "lagrel/io.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <utility>

#include "lagrel/error.hpp"

namespace lagrel {

namespace {

struct Line {
  std::size_t no = 0;
  std::vector<std::string> tokens;
};

// Splits the input into significant lines; blank lines and '#' comment
// lines disappear here so parsers only see content.
struct Reader {
  std::vector<Line> lines;
  std::size_t at = 0;
  std::size_t last_no = 0;

  explicit Reader(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
      ++no;
      Line ln;
      ln.no = no;
      std::istringstream ls(raw);
      std::string tok;
      while (ls >> tok) {
        ln.tokens.push_back(tok);
      }
      if (ln.tokens.empty() || ln.tokens[0][0] == '#') {
        continue;
      }
      lines.push_back(std::move(ln));
    }
    last_no = no;
  }

  bool done() const { return at >= lines.size(); }

  const Line& peek() const {
    if (done()) {
      throw ParseError("unexpected end of input", last_no + 1, 1);
    }
    return lines[at];
  }

  const Line& next() {
    const Line& ln = peek();
    ++at;
    return ln;
  }

  void expect_done() const {
    if (!done()) {
      throw ParseError("trailing content", lines[at].no, 1);
    }
  }
};

std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError("expected an unsigned integer, got '" + tok + "'", line,
                     1);
  }
  return v;
}

Scalar parse_scalar_tok(const Field& f, const std::string& tok,
                        std::size_t line) {
  try {
    return parse_scalar(f, tok);
  } catch (const Error&) {
    throw ParseError("bad scalar '" + tok + "'", line, 1);
  }
}

void expect_keyword(const Line& ln, std::size_t i, const std::string& word) {
  if (i >= ln.tokens.size() || ln.tokens[i] != word) {
    throw ParseError("expected '" + word + "'", ln.no, 1);
  }
}

void expect_arity(const Line& ln, std::size_t n) {
  if (ln.tokens.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " tokens", ln.no, 1);
  }
}

Field parse_field_line(const Line& ln) {
  expect_keyword(ln, 0, "field");
  if (ln.tokens.size() == 2 && ln.tokens[1] == "Qx") {
    return Field::qx();
  }
  if (ln.tokens.size() == 3 && ln.tokens[1] == "Fp") {
    std::uint64_t p = parse_uint(ln.tokens[2], ln.no);
    try {
      return Field::fp(p);
    } catch (const Error&) {
      throw ParseError("modulus " + ln.tokens[2] + " is not prime", ln.no, 1);
    }
  }
  throw ParseError("expected 'field Fp <p>' or 'field Qx'", ln.no, 1);
}

std::size_t parse_sized_line(Reader& rd, const std::string& key) {
  const Line& ln = rd.next();
  expect_keyword(ln, 0, key);
  expect_arity(ln, 2);
  return static_cast<std::size_t>(parse_uint(ln.tokens[1], ln.no));
}

Matrix parse_rows(Reader& rd, const Field& f, std::size_t rows,
                  std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& ln = rd.next();
    expect_arity(ln, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = parse_scalar_tok(f, ln.tokens[c], ln.no);
    }
  }
  return m;
}

void render_rows(std::ostringstream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c ? " " : "") << m.at(r, c).str();
    }
    os << "\n";
  }
}

void require_canonical_span(const Matrix& span) {
  if (!span.is_rref()) {
    throw Error(Errc::parse_error, "span rows are not in canonical form");
  }
}

}  // namespace

std::string render_linear(const LinearRelation& r) {
  std::ostringstream os;
  os << "linrel v1\n";
  os << "field " << r.field().str() << "\n";
  os << "dom " << r.dom() << "\n";
  os << "cod " << r.cod() << "\n";
  os << "rows " << r.span().rows() << "\n";
  render_rows(os, r.span());
  return os.str();
}

LinearRelation parse_linear(const std::string& text) {
  Reader rd(text);
  {
    const Line& ln = rd.next();
    expect_keyword(ln, 0, "linrel");
    expect_keyword(ln, 1, "v1");
    expect_arity(ln, 2);
  }
  Field f = parse_field_line(rd.next());
  std::size_t dom = parse_sized_line(rd, "dom");
  std::size_t cod = parse_sized_line(rd, "cod");
  std::size_t rows = parse_sized_line(rd, "rows");
  Matrix span = parse_rows(rd, f, rows, dom + cod);
  rd.expect_done();
  require_canonical_span(span);
  return LinearRelation(dom, cod, span);
}

std::string render_graded(const AffineGradedRelation& r) {
  std::ostringstream os;
  os << "graded v1\n";
  os << "field " << r.field().str() << "\n";
  os << "wires " << r.dom() << " " << r.cod() << "\n";
  if (r.is_empty()) {
    os << "empty\n";
    return os.str();
  }
  os << "rows " << r.span().rows() << "\n";
  render_rows(os, r.span());
  if (!r.offset_is_zero()) {
    os << "offset";
    for (const Scalar& e : r.offset()) {
      os << " " << e.str();
    }
    os << "\n";
  }
  return os.str();
}

std::string render_graded(const GradedRelation& r) {
  return render_graded(AffineGradedRelation::from_graded(r));
}

AffineGradedRelation parse_graded(const std::string& text) {
  Reader rd(text);
  {
    const Line& ln = rd.next();
    expect_keyword(ln, 0, "graded");
    expect_keyword(ln, 1, "v1");
    expect_arity(ln, 2);
  }
  Field f = parse_field_line(rd.next());
  std::size_t dom = 0, cod = 0;
  {
    const Line& ln = rd.next();
    expect_keyword(ln, 0, "wires");
    expect_arity(ln, 3);
    dom = static_cast<std::size_t>(parse_uint(ln.tokens[1], ln.no));
    cod = static_cast<std::size_t>(parse_uint(ln.tokens[2], ln.no));
  }
  if (!rd.done() && rd.peek().tokens[0] == "empty") {
    const Line& ln = rd.next();
    expect_arity(ln, 1);
    rd.expect_done();
    return AffineGradedRelation::empty(f, dom, cod);
  }
  std::size_t width = 2 * (dom + cod);
  std::size_t rows = parse_sized_line(rd, "rows");
  Matrix span = parse_rows(rd, f, rows, width);

  bool has_offset = false;
  std::vector<Scalar> offset(width, Scalar::zero(f));
  if (!rd.done() && rd.peek().tokens[0] == "offset") {
    const Line& ln = rd.next();
    expect_arity(ln, width + 1);
    for (std::size_t c = 0; c < width; ++c) {
      offset[c] = parse_scalar_tok(f, ln.tokens[c + 1], ln.no);
    }
    has_offset = true;
  }
  rd.expect_done();
  require_canonical_span(span);
  if (has_offset) {
    bool all_zero = true;
    for (const Scalar& e : offset) {
      all_zero = all_zero && e.is_zero();
    }
    if (all_zero) {
      throw Error(Errc::parse_error, "a zero offset line must be omitted");
    }
    if (span.reduce(offset) != offset) {
      throw Error(Errc::parse_error, "offset is not the canonical coset representative");
    }
  }
  return AffineGradedRelation(dom, cod, std::move(offset), span);
}

std::string render_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "circuit p=" << c.field.modulus() << " wires=" << c.wires << "\n";
  for (const Op& op : c.ops) {
    if (const auto* o = std::get_if<OpF>(&op)) {
      os << "F " << o->i << "\n";
    } else if (const auto* o = std::get_if<OpFinv>(&op)) {
      os << "Finv " << o->i << "\n";
    } else if (const auto* o = std::get_if<OpS>(&op)) {
      os << "S " << o->a.str() << " " << o->i << "\n";
    } else if (const auto* o = std::get_if<OpV>(&op)) {
      os << "V " << o->a.str() << " " << o->i << "\n";
    } else if (const auto* o = std::get_if<OpC>(&op)) {
      os << "C " << o->a.str() << " " << o->i << " " << o->j << "\n";
    } else if (const auto* o = std::get_if<OpDiscard>(&op)) {
      os << "D " << o->a.str() << " " << o->i << "\n";
    } else if (const auto* o = std::get_if<OpZero>(&op)) {
      os << "ZERO " << o->i << "\n";
    } else if (const auto* o = std::get_if<OpXShift>(&op)) {
      os << "XSHIFT " << o->a.str() << " " << o->i << "\n";
    } else if (const auto* o = std::get_if<OpZShift>(&op)) {
      os << "ZSHIFT " << o->a.str() << " " << o->i << "\n";
    } else if (const auto* o = std::get_if<OpPost>(&op)) {
      os << "POST " << o->i << "\n";
    }
  }
  return os.str();
}

Circuit parse_circuit(const std::string& text) {
  Reader rd(text);
  const Line& hd = rd.next();
  expect_keyword(hd, 0, "circuit");
  expect_arity(hd, 3);
  auto key_value = [&](std::size_t i, const std::string& key) {
    const std::string& tok = hd.tokens[i];
    if (tok.rfind(key + "=", 0) != 0) {
      throw ParseError("expected '" + key + "=<n>'", hd.no, 1);
    }
    return parse_uint(tok.substr(key.size() + 1), hd.no);
  };
  std::uint64_t p = key_value(1, "p");
  std::size_t wires = static_cast<std::size_t>(key_value(2, "wires"));
  Field f = [&] {
    try {
      return Field::fp(p);
    } catch (const Error&) {
      throw ParseError("modulus " + std::to_string(p) + " is not prime",
                       hd.no, 1);
    }
  }();

  Circuit c{f, wires, {}};
  auto rail = [&](const Line& ln, std::size_t i) {
    std::size_t r = static_cast<std::size_t>(parse_uint(ln.tokens[i], ln.no));
    if (r >= wires) {
      throw ParseError("rail " + ln.tokens[i] + " is outside the register",
                       ln.no, 1);
    }
    return r;
  };
  while (!rd.done()) {
    const Line& ln = rd.next();
    const std::string& k = ln.tokens[0];
    if (k == "F") {
      expect_arity(ln, 2);
      c.ops.push_back(OpF{rail(ln, 1)});
    } else if (k == "Finv") {
      expect_arity(ln, 2);
      c.ops.push_back(OpFinv{rail(ln, 1)});
    } else if (k == "S") {
      expect_arity(ln, 3);
      c.ops.push_back(OpS{parse_scalar_tok(f, ln.tokens[1], ln.no), rail(ln, 2)});
    } else if (k == "V") {
      expect_arity(ln, 3);
      c.ops.push_back(OpV{parse_scalar_tok(f, ln.tokens[1], ln.no), rail(ln, 2)});
    } else if (k == "C") {
      expect_arity(ln, 4);
      std::size_t i = rail(ln, 2);
      std::size_t j = rail(ln, 3);
      if (i == j) {
        throw ParseError("shear rails must differ", ln.no, 1);
      }
      c.ops.push_back(OpC{parse_scalar_tok(f, ln.tokens[1], ln.no), i, j});
    } else if (k == "D") {
      expect_arity(ln, 3);
      c.ops.push_back(
          OpDiscard{parse_scalar_tok(f, ln.tokens[1], ln.no), rail(ln, 2)});
    } else if (k == "ZERO") {
      expect_arity(ln, 2);
      c.ops.push_back(OpZero{rail(ln, 1)});
    } else if (k == "XSHIFT") {
      expect_arity(ln, 3);
      c.ops.push_back(
          OpXShift{parse_scalar_tok(f, ln.tokens[1], ln.no), rail(ln, 2)});
    } else if (k == "ZSHIFT") {
      expect_arity(ln, 3);
      c.ops.push_back(
          OpZShift{parse_scalar_tok(f, ln.tokens[1], ln.no), rail(ln, 2)});
    } else if (k == "POST") {
      expect_arity(ln, 2);
      c.ops.push_back(OpPost{rail(ln, 1)});
    } else {
      throw ParseError("unknown instruction '" + k + "'", ln.no, 1);
    }
  }
  return c;
}

Netlist parse_netlist(const std::string& text) {
  Reader rd(text);
  {
    const Line& ln = rd.next();
    expect_keyword(ln, 0, "net");
    expect_keyword(ln, 1, "v1");
    expect_arity(ln, 2);
  }
  Field f = Field::qx();
  Netlist net;
  std::map<std::string, std::size_t> index;
  auto node_of = [&](const Line& ln, std::size_t i) {
    auto it = index.find(ln.tokens[i]);
    if (it == index.end()) {
      throw ParseError("unknown node '" + ln.tokens[i] + "'", ln.no, 1);
    }
    return it->second;
  };
  auto value_of = [&](const Line& ln, std::size_t i) {
    Scalar v = parse_scalar_tok(f, ln.tokens[i], ln.no);
    bool constant = v.num().degree() <= 0;
    bool x_multiple = v.num().degree() == 1 && v.num().coeff(0) == 0;
    if (v.den().degree() > 0 || (!constant && !x_multiple)) {
      throw ParseError(
          "element values are rational constants or multiples of x", ln.no,
          1);
    }
    return v;
  };

  while (!rd.done()) {
    const Line& ln = rd.next();
    const std::string& k = ln.tokens[0];
    if (k == "node") {
      if (ln.tokens.size() < 2) {
        throw ParseError("expected at least one node name", ln.no, 1);
      }
      for (std::size_t i = 1; i < ln.tokens.size(); ++i) {
        if (!index.emplace(ln.tokens[i], net.nodes.size()).second) {
          throw ParseError("duplicate node '" + ln.tokens[i] + "'", ln.no, 1);
        }
        net.nodes.push_back(ln.tokens[i]);
      }
    } else if (k == "R" || k == "L" || k == "C" || k == "V" || k == "I") {
      expect_arity(ln, 4);
      NetKind kind = k == "R"   ? NetKind::resistor
                     : k == "L" ? NetKind::inductor
                     : k == "C" ? NetKind::capacitor
                     : k == "V" ? NetKind::vsource
                                : NetKind::isource;
      NetComponent el{kind, value_of(ln, 3), node_of(ln, 1), node_of(ln, 2)};
      net.components.push_back(std::move(el));
    } else if (k == "W") {
      expect_arity(ln, 3);
      net.components.push_back(
          NetComponent{NetKind::wire, Scalar::zero(f), node_of(ln, 1),
                       node_of(ln, 2)});
    } else if (k == "PORT") {
      expect_arity(ln, 2);
      net.ports.push_back(node_of(ln, 1));
    } else {
      throw ParseError("unknown directive '" + k + "'", ln.no, 1);
    }
  }
  return net;
}

std::string render_purification(const Purification& p) {
  std::ostringstream os;
  os << render_linear(p.pure);
  os << "\n";
  os << "discards v1\n";
  for (const auto& [wire, weight] : p.discards) {
    os << wire << " " << weight.str() << "\n";
  }
  return os.str();
}

std::string file_kind(const std::string& text) {
  Reader rd(text);
  return rd.peek().tokens[0];
}

}  // namespace lagrel
