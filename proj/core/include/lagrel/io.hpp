#pragma once

#include <string>

#include "lagrel/affine.hpp"
#include "lagrel/circuit.hpp"
#include "lagrel/linrel.hpp"
#include "lagrel/netlist.hpp"
#include "lagrel/synthesis.hpp"

namespace lagrel {

// Line-oriented text formats.  Scalars are single whitespace-free tokens:
// decimal residues over F_p, compact fraction expressions over Q(x).
// Lines that are blank or start with '#' are skipped on input.  Parsers
// insist on the canonical form the writers produce, so a value has exactly
// one on-disk spelling.

std::string render_linear(const LinearRelation& r);
LinearRelation parse_linear(const std::string& text);

std::string render_graded(const AffineGradedRelation& r);
std::string render_graded(const GradedRelation& r);
AffineGradedRelation parse_graded(const std::string& text);

std::string render_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

Netlist parse_netlist(const std::string& text);

// Pure relation file, a blank line, then the discard list.
std::string render_purification(const Purification& p);

// First keyword of the first significant line: "linrel", "graded",
// "circuit" or "net".
std::string file_kind(const std::string& text);

}  // namespace lagrel
