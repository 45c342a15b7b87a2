#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lagrel/graded.hpp"
#include "lagrel/io.hpp"
#include "lagrel/netlist.hpp"
#include "lagrel/stabilizer.hpp"
#include "lagrel/synthesis.hpp"

namespace {

using namespace lagrel;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write '" + out_path + "'");
  out << text;
  if (!out) throw Error(Errc::io_error, "cannot write '" + out_path + "'");
}

Field field_from_spec(const std::string& spec) {
  if (spec == "Qx" || spec == "qx") return Field::qx();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(spec, &used);
    if (used != spec.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw Error(Errc::invalid_argument,
                "field must be 'Qx' or a prime modulus, got '" + spec + "'");
  }
  return Field::fp(p);
}

int run_compose(const std::string& a, const std::string& b,
                const std::string& out) {
  std::string ta = slurp(a), tb = slurp(b);
  std::string ka = file_kind(ta), kb = file_kind(tb);
  if (ka != kb) {
    throw Error(Errc::parse_error,
                "cannot compose a '" + ka + "' file with a '" + kb + "' file");
  }
  if (ka == "linrel") {
    emit(out, render_linear(compose(parse_linear(ta), parse_linear(tb))));
  } else if (ka == "graded") {
    emit(out, render_graded(compose(parse_graded(ta), parse_graded(tb))));
  } else {
    throw Error(Errc::parse_error, "cannot compose '" + ka + "' files");
  }
  return 0;
}

int run_check(const std::string& path) {
  AffineGradedRelation r = parse_graded(slurp(path));
  if (r.is_empty()) {
    std::cout << "empty relation\n";
    return 1;
  }
  GradedRelation lin = r.linear_part();
  bool iso = lin.is_isotropic();
  bool lag = lin.is_lagrangian();
  std::cout << "isotropic: " << (iso ? "yes" : "no") << "\n";
  std::cout << "lagrangian: " << (lag ? "yes" : "no") << "\n";
  return lag ? 0 : 1;
}

int run_synth(const std::string& path, const std::string& out) {
  AffineGradedRelation r = parse_graded(slurp(path));
  if (r.dom() != 0) {
    throw Error(Errc::invalid_argument,
                "synthesis needs a state with no open inputs");
  }
  if (!r.field().is_prime()) {
    throw Error(Errc::invalid_argument,
                "circuit files carry a prime modulus");
  }
  std::size_t m = r.cod();
  Circuit c{r.field(), 0, {}};
  if (r.is_empty()) {
    // An inconsistent postselection on one auxiliary rail empties the
    // whole register.
    c.wires = m + 1;
    for (std::size_t i = 0; i < m; ++i) c.ops.push_back(OpZero{i});
    c.ops.push_back(OpZero{m});
    c.ops.push_back(OpZShift{Scalar::one(c.field), m});
    c.ops.push_back(OpPost{m});
  } else {
    c.wires = m;
    c.ops = synthesize(r.linear_part());
    const std::vector<Scalar>& off = r.offset();
    for (std::size_t i = 0; i < m; ++i) {
      if (!off[i].is_zero()) c.ops.push_back(OpXShift{off[i], i});
      if (!off[m + i].is_zero()) c.ops.push_back(OpZShift{off[m + i], i});
    }
  }
  emit(out, render_circuit(c));
  return 0;
}

int run_purify(const std::string& path, const std::string& out) {
  AffineGradedRelation r = parse_graded(slurp(path));
  emit(out, render_purification(purify(r.to_graded())));
  return 0;
}

int run_sim(const std::string& path, const std::string& out) {
  Circuit c = parse_circuit(slurp(path));
  EvaluatedCircuit ev = evaluate(c);
  emit(out, render_graded(ev.relation));
  return 0;
}

Circuit random_circuit(const Field& f, std::size_t wires, std::uint64_t seed) {
  Circuit c{f, wires, {}};
  for (std::size_t i = 0; i < wires; ++i) c.ops.push_back(OpZero{i});
  if (wires == 0) return c;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> rail(0, wires - 1);
  std::uniform_int_distribution<std::uint64_t> val(0, f.modulus() - 1);
  std::uniform_int_distribution<int> kind(0, 6);
  auto scalar = [&] {
    return Scalar::from_int(f, static_cast<long long>(val(gen)));
  };
  for (std::size_t n = 0; n < 3 * wires + 2; ++n) {
    std::size_t i = rail(gen);
    switch (kind(gen)) {
      case 0:
        c.ops.push_back(OpF{i});
        break;
      case 1:
        c.ops.push_back(OpFinv{i});
        break;
      case 2:
        c.ops.push_back(OpS{scalar(), i});
        break;
      case 3:
        c.ops.push_back(OpV{scalar(), i});
        break;
      case 4:
        if (wires < 2) {
          c.ops.push_back(OpS{scalar(), i});
          break;
        }
        {
          std::size_t j = rail(gen);
          while (j == i) j = rail(gen);
          c.ops.push_back(OpC{scalar(), i, j});
        }
        break;
      case 5:
        c.ops.push_back(OpXShift{scalar(), i});
        break;
      default:
        c.ops.push_back(OpZShift{scalar(), i});
        break;
    }
  }
  return c;
}

void report_verify(const std::string& label, const VerifyReport& rep) {
  std::cout << label << ": ok (";
  if (rep.empty_relation) {
    std::cout << "empty relation";
  } else {
    std::cout << rep.checked_points << " points";
  }
  std::cout << ")\n";
}

int run_verify(const std::string& path, double eps, int batch,
               std::uint64_t seed) {
  Circuit c = parse_circuit(slurp(path));
  report_verify("correspondence", verify_correspondence(c, eps));
  for (int k = 1; k <= batch; ++k) {
    Circuit rc = random_circuit(c.field, c.wires, seed + std::uint64_t(k));
    report_verify("batch " + std::to_string(k),
                  verify_correspondence(rc, eps));
  }
  return 0;
}

int run_net(const std::string& path, const std::string& out) {
  Netlist n = parse_netlist(slurp(path));
  AffineGradedRelation r = analyze(n);
  emit(out, render_graded(r));
  if (r.is_empty()) {
    std::cerr << "behaviour: empty\n";
  } else {
    std::cerr << "behaviour: " << r.span().rows()
              << " degrees of freedom on " << r.cod() << " ports\n";
  }
  return 0;
}

int run_axioms(const std::string& field_spec) {
  std::vector<Field> fields;
  if (field_spec.empty()) {
    for (std::uint64_t p : {2, 3, 5, 7, 11}) fields.push_back(Field::fp(p));
  } else {
    fields.push_back(field_from_spec(field_spec));
  }
  bool all_ok = true;
  for (const Field& f : fields) {
    for (const AxiomCheck& chk : one_state_axioms(f)) {
      std::cout << "[" << f.str() << "] " << chk.name << ": "
                << (chk.ok ? "ok" : "FAIL") << "\n";
      all_ok = all_ok && chk.ok;
    }
    Scalar one = Scalar::one(f);
    GradedRelation s = GradedRelation::gate_s(f, 1, one, 0);
    GradedRelation v = GradedRelation::gate_v(f, 1, one, 0);
    bool euler = compose(compose(s, v), s) == GradedRelation::gate_f(f, 1, 0);
    std::cout << "[" << f.str() << "] euler: " << (euler ? "ok" : "FAIL")
              << "\n";
    all_ok = all_ok && euler;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lagrangian relation toolkit"};
  app.require_subcommand(1);

  std::string in_a, in_b, out_path, field_spec;
  double eps = 1e-9;
  int batch = 0;
  std::uint64_t seed = 1;

  CLI::App* cmd_compose =
      app.add_subcommand("compose", "compose two relation files");
  cmd_compose->add_option("first", in_a, "left relation file")->required();
  cmd_compose->add_option("second", in_b, "right relation file")->required();
  cmd_compose->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* cmd_check =
      app.add_subcommand("check", "report isotropy and the Lagrangian test");
  cmd_check->add_option("relation", in_a, "graded relation file")->required();

  CLI::App* cmd_synth =
      app.add_subcommand("synth", "synthesize a preparation circuit");
  cmd_synth->add_option("relation", in_a, "graded state file")->required();
  cmd_synth->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* cmd_purify =
      app.add_subcommand("purify", "factor into a pure map and discards");
  cmd_purify->add_option("relation", in_a, "graded relation file")->required();
  cmd_purify->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* cmd_sim =
      app.add_subcommand("sim", "evaluate a circuit to a relation");
  cmd_sim->add_option("circuit", in_a, "circuit file")->required();
  cmd_sim->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "check a circuit against the dense state vector");
  cmd_verify->add_option("circuit", in_a, "circuit file")->required();
  cmd_verify->add_option("--eps", eps, "numerical tolerance");
  cmd_verify->add_option("--batch", batch,
                         "additionally verify this many random circuits");
  cmd_verify->add_option("--seed", seed, "seed for the random batch");

  CLI::App* cmd_net =
      app.add_subcommand("net", "analyze a netlist into a port behaviour");
  cmd_net->add_option("netlist", in_a, "netlist file")->required();
  cmd_net->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* cmd_axioms = app.add_subcommand(
      "axioms", "check the one-point state equations and the Euler identity");
  cmd_axioms->add_option("--field", field_spec,
                         "single field to check ('Qx' or a prime)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_compose)) return run_compose(in_a, in_b, out_path);
    if (app.got_subcommand(cmd_check)) return run_check(in_a);
    if (app.got_subcommand(cmd_synth)) return run_synth(in_a, out_path);
    if (app.got_subcommand(cmd_purify)) return run_purify(in_a, out_path);
    if (app.got_subcommand(cmd_sim)) return run_sim(in_a, out_path);
    if (app.got_subcommand(cmd_verify)) return run_verify(in_a, eps, batch, seed);
    if (app.got_subcommand(cmd_net)) return run_net(in_a, out_path);
    if (app.got_subcommand(cmd_axioms)) return run_axioms(field_spec);
  } catch (const Error& e) {
    std::cerr << "lagrel: " << e.what() << "\n";
    bool usage = e.code() == Errc::parse_error || e.code() == Errc::io_error;
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "lagrel: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
