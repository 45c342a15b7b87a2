#include <string>
#include <vector>

#include "doctest.h"
#include "lagrel/io.hpp"

using namespace lagrel;

namespace {

Scalar sc(const Field& f, const char* text) { return parse_scalar(f, text); }

}  // namespace

TEST_CASE("flat relations have one on-disk spelling") {
  Field f = Field::fp(5);
  LinearRelation r = LinearRelation::scale(f, sc(f, "3"));
  std::string text = render_linear(r);
  CHECK(text ==
        "linrel v1\n"
        "field Fp 5\n"
        "dom 1\n"
        "cod 1\n"
        "rows 1\n"
        "1 3\n");
  CHECK(parse_linear(text) == r);

  Field q = Field::qx();
  LinearRelation s = LinearRelation::scale(q, sc(q, "x"));
  std::string symbolic = render_linear(s);
  CHECK(symbolic ==
        "linrel v1\n"
        "field Qx\n"
        "dom 1\n"
        "cod 1\n"
        "rows 1\n"
        "1 x\n");
  CHECK(parse_linear(symbolic) == s);
}

TEST_CASE("comments and blank lines are skipped") {
  Field f = Field::fp(5);
  LinearRelation r = LinearRelation::scale(f, sc(f, "3"));
  std::string text = "# a scale relation\n\n" + render_linear(r);
  CHECK(parse_linear(text) == r);
  CHECK(file_kind(text) == "linrel");
}

TEST_CASE("graded relations round trip with offsets") {
  Field f = Field::fp(5);

  AffineGradedRelation shift =
      AffineGradedRelation::x_shift(f, 1, sc(f, "2"), 0);
  std::string text = render_graded(shift);
  CHECK(text.find("offset") != std::string::npos);
  CHECK(parse_graded(text) == shift);

  AffineGradedRelation plain = AffineGradedRelation::from_graded(
      GradedRelation::gate_s(f, 1, sc(f, "3"), 0));
  std::string linear_text = render_graded(plain);
  CHECK(linear_text.find("offset") == std::string::npos);
  CHECK(parse_graded(linear_text) == plain);

  AffineGradedRelation none = AffineGradedRelation::empty(f, 1, 2);
  std::string empty_text = render_graded(none);
  CHECK(empty_text.find("empty") != std::string::npos);
  AffineGradedRelation back = parse_graded(empty_text);
  CHECK(back.is_empty());
  CHECK(back == none);
}

TEST_CASE("circuits round trip instruction by instruction") {
  Field f = Field::fp(3);
  Circuit c{f,
            2,
            {OpF{0}, OpFinv{1}, OpS{sc(f, "2"), 0}, OpV{sc(f, "1"), 1},
             OpC{sc(f, "2"), 0, 1}, OpDiscard{sc(f, "0"), 0}, OpZero{1},
             OpXShift{sc(f, "1"), 0}, OpZShift{sc(f, "2"), 1}, OpPost{0}}};
  std::string text = render_circuit(c);
  CHECK(text ==
        "circuit p=3 wires=2\n"
        "F 0\n"
        "Finv 1\n"
        "S 2 0\n"
        "V 1 1\n"
        "C 2 0 1\n"
        "D 0 0\n"
        "ZERO 1\n"
        "XSHIFT 1 0\n"
        "ZSHIFT 2 1\n"
        "POST 0\n");
  Circuit back = parse_circuit(text);
  CHECK(back.wires == c.wires);
  CHECK(back.field == f);
  CHECK(back.ops == c.ops);
}

TEST_CASE("netlists parse into the analyzer's input") {
  Field f = Field::qx();
  Netlist net = parse_netlist(
      "net v1\n"
      "node in mid gnd\n"
      "R in mid 2\n"
      "R mid gnd 3\n"
      "PORT in\n"
      "PORT gnd\n");
  CHECK(net.nodes == std::vector<std::string>{"in", "mid", "gnd"});
  CHECK(net.ports == std::vector<std::size_t>{0, 2});
  REQUIRE(net.components.size() == 2);
  CHECK(net.components[0].kind == NetKind::resistor);
  CHECK(net.components[1].value == sc(f, "3"));

  Netlist direct{{"in", "mid", "gnd"},
                 {NetComponent{NetKind::resistor, sc(f, "2"), 0, 1},
                  NetComponent{NetKind::resistor, sc(f, "3"), 1, 2}},
                 {0, 2}};
  CHECK(analyze(net) == analyze(direct));
}

TEST_CASE("purifications list their discard weights") {
  Field f = Field::fp(5);
  Matrix span(f, 1, 2);
  span.at(0, 0) = sc(f, "1");
  span.at(0, 1) = sc(f, "4");
  Purification p{LinearRelation(1, 1, span), {{0, sc(f, "2")}}};
  CHECK(render_purification(p) ==
        "linrel v1\n"
        "field Fp 5\n"
        "dom 1\n"
        "cod 1\n"
        "rows 1\n"
        "1 4\n"
        "\n"
        "discards v1\n"
        "0 2\n");
}

TEST_CASE("file kind reads the first significant token") {
  CHECK(file_kind("circuit p=3 wires=1\n") == "circuit");
  CHECK(file_kind("\n# note\nnet v1\n") == "net");
  CHECK(file_kind("graded v1\n") == "graded");
  CHECK_THROWS_WITH_AS(file_kind("# only comments\n"),
                       "parse error: unexpected end of input at line 2, "
                       "column 1",
                       Error);
}

TEST_CASE("flat relation files reject structural damage") {
  CHECK_THROWS_WITH_AS(parse_linear(""),
                       "parse error: unexpected end of input at line 1, "
                       "column 1",
                       Error);
  CHECK_THROWS_WITH_AS(parse_linear("linrel v2\n"),
                       "parse error: expected 'v1' at line 1, column 1",
                       Error);
  CHECK_THROWS_WITH_AS(
      parse_linear("linrel v1\nfield Fp 9\ndom 1\ncod 1\nrows 0\n"),
      "parse error: modulus 9 is not prime at line 2, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_linear("linrel v1\nfield Fp 5\ndom 1\ncod 1\nrows 1\n1 z\n"),
      "parse error: bad scalar 'z' at line 6, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_linear("linrel v1\nfield Fp 5\ndom 1\ncod 1\nrows 1\n1\n"),
      "parse error: expected 2 tokens at line 6, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_linear("linrel v1\nfield Fp 5\ndom 1\ncod 1\nrows 1\n1 3\nx\n"),
      "parse error: trailing content at line 7, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_linear("linrel v1\nfield Fp 5\ndom 1\ncod 1\nrows 1\n2 1\n"),
      "parse error: span rows are not in canonical form", Error);
}

TEST_CASE("graded relation files insist on canonical offsets") {
  std::string base =
      "graded v1\n"
      "field Fp 5\n"
      "wires 0 1\n"
      "rows 1\n"
      "1 0\n";
  CHECK_THROWS_WITH_AS(parse_graded(base + "offset 0 0\n"),
                       "parse error: a zero offset line must be omitted",
                       Error);
  CHECK_THROWS_WITH_AS(
      parse_graded(base + "offset 1 0\n"),
      "parse error: offset is not the canonical coset representative",
      Error);
  CHECK(parse_graded(base + "offset 0 2\n").offset()[1] ==
        sc(Field::fp(5), "2"));
}

TEST_CASE("circuit files reject malformed instructions") {
  CHECK_THROWS_WITH_AS(
      parse_circuit("circuit p=4 wires=1\n"),
      "parse error: modulus 4 is not prime at line 1, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_circuit("circuit wires=1 p=3\n"),
      "parse error: expected 'p=<n>' at line 1, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_circuit("circuit p=3 wires=1\nQ 0\n"),
      "parse error: unknown instruction 'Q' at line 2, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_circuit("circuit p=3 wires=2\nC 1 0 0\n"),
      "parse error: shear rails must differ at line 2, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_circuit("circuit p=3 wires=1\nF 5\n"),
      "parse error: rail 5 is outside the register at line 2, column 1",
      Error);
}

TEST_CASE("netlist files validate nodes and values") {
  CHECK_THROWS_WITH_AS(
      parse_netlist("net v1\nnode a\nR a q 1\n"),
      "parse error: unknown node 'q' at line 3, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_netlist("net v1\nnode a a\n"),
      "parse error: duplicate node 'a' at line 2, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_netlist("net v1\nnode a b\nX a b 1\n"),
      "parse error: unknown directive 'X' at line 3, column 1", Error);
  CHECK_THROWS_WITH_AS(
      parse_netlist("net v1\nnode a b\nR a b 1/x\n"),
      "parse error: element values are rational constants or multiples of x "
      "at line 3, column 1",
      Error);
  CHECK_THROWS_WITH_AS(
      parse_netlist("net v1\nnode a b\nR a b x+1\n"),
      "parse error: element values are rational constants or multiples of x "
      "at line 3, column 1",
      Error);
}
