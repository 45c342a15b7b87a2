#include "lagrel/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

#include "lagrel/affine.hpp"
#include "lagrel/error.hpp"
#include "lagrel/graded.hpp"

namespace lagrel {

namespace {

constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 20;

std::string rail_text(std::size_t r) {
  std::ostringstream os;
  os << "rail " << r;
  return os.str();
}

// Lazily grown register of live rails.  The first entry of `rails` is the
// most significant digit of an amplitude index.
struct DenseSim {
  std::uint64_t p;
  std::vector<std::size_t> rails;
  std::vector<std::complex<double>> amp{std::complex<double>(1.0, 0.0)};
  std::vector<std::complex<double>> omega;
  std::vector<char> touched;
  std::uint64_t inv2;

  DenseSim(std::uint64_t prime, std::size_t wires)
      : p(prime), touched(wires, 0), inv2((prime + 1) / 2) {
    omega.reserve(p);
    for (std::uint64_t k = 0; k < p; ++k) {
      double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                 static_cast<double>(p);
      omega.push_back(std::polar(1.0, t));
    }
  }

  std::complex<double> root(std::uint64_t e) const { return omega[e % p]; }

  bool is_live(std::size_t r) const {
    return std::binary_search(rails.begin(), rails.end(), r);
  }

  std::size_t pos_of(std::size_t r) const {
    auto it = std::lower_bound(rails.begin(), rails.end(), r);
    if (it == rails.end() || *it != r) {
      throw Error(Errc::invalid_argument, rail_text(r) + " is not live");
    }
    return static_cast<std::size_t>(it - rails.begin());
  }

  std::size_t stride(std::size_t pos) const {
    std::size_t s = 1;
    for (std::size_t t = pos + 1; t < rails.size(); ++t) {
      s *= static_cast<std::size_t>(p);
    }
    return s;
  }

  // Inserts a rail in the point state |0> or the uniform superposition.
  void insert_rail(std::size_t r, bool uniform) {
    if (amp.size() > kMaxAmplitudes / p) {
      throw Error(Errc::circuit_too_large,
                  "state vector exceeds the amplitude budget");
    }
    auto it = std::lower_bound(rails.begin(), rails.end(), r);
    std::size_t idx = static_cast<std::size_t>(it - rails.begin());
    rails.insert(it, r);
    std::size_t st = stride(idx);
    std::vector<std::complex<double>> out(amp.size() * p);
    double u = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint64_t k = (i / st) % p;
      std::size_t hi = i / (st * p);
      std::size_t old = hi * st + i % st;
      if (uniform) {
        out[i] = amp[old] * u;
      } else {
        out[i] = k == 0 ? amp[old] : std::complex<double>(0.0, 0.0);
      }
    }
    amp = std::move(out);
    touched[r] = 1;
  }

  // Materializes an untouched rail in |0>; rejects retired rails.
  void require_live(std::size_t r) {
    if (is_live(r)) {
      return;
    }
    if (touched[r]) {
      throw Error(Errc::invalid_argument, rail_text(r) + " was retired");
    }
    insert_rail(r, false);
  }

  void prepare(std::size_t r) {
    if (is_live(r)) {
      throw Error(Errc::invalid_argument,
                  rail_text(r) + " prepared while still live");
    }
    insert_rail(r, true);
  }

  void fourier(std::size_t pos, bool inverse) {
    std::size_t st = stride(pos);
    double u = 1.0 / std::sqrt(static_cast<double>(p));
    std::vector<std::complex<double>> v(p), w(p);
    for (std::size_t hi = 0; hi < amp.size() / (st * p); ++hi) {
      for (std::size_t lo = 0; lo < st; ++lo) {
        std::size_t base = hi * st * p + lo;
        for (std::uint64_t k = 0; k < p; ++k) {
          v[k] = amp[base + k * st];
        }
        for (std::uint64_t j = 0; j < p; ++j) {
          std::complex<double> acc(0.0, 0.0);
          for (std::uint64_t k = 0; k < p; ++k) {
            std::uint64_t e = (j * k) % p;
            acc += (inverse ? std::conj(root(e)) : root(e)) * v[k];
          }
          w[j] = acc * u;
        }
        for (std::uint64_t j = 0; j < p; ++j) {
          amp[base + j * st] = w[j];
        }
      }
    }
  }

  void phase_quadratic(std::size_t pos, std::uint64_t a) {
    std::size_t st = stride(pos);
    for (std::size_t i = 0; i < amp.size(); ++i) {
      std::uint64_t k = (i / st) % p;
      std::uint64_t e = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(k) * k % p) * inv2 % p * a % p);
      amp[i] *= root(e);
    }
  }

  // Basis permutation |x,y> -> |x, y - a*x> with x on `ctrl`.
  void shear_basis(std::size_t ctrl, std::size_t tgt, std::uint64_t a) {
    std::size_t sc = stride(ctrl);
    std::size_t st = stride(tgt);
    std::vector<std::complex<double>> out(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
      std::uint64_t x = (i / sc) % p;
      std::uint64_t y = (i / st) % p;
      std::uint64_t ysrc = (y + a % p * x) % p;
      std::size_t src = i + (ysrc - y) * st;
      out[i] = amp[src];
    }
    amp = std::move(out);
  }

  void shift_x(std::size_t pos, std::uint64_t a) {
    std::size_t st = stride(pos);
    std::vector<std::complex<double>> out(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
      std::uint64_t k = (i / st) % p;
      std::uint64_t ksrc = (k + p - a % p) % p;
      out[i] = amp[i + (ksrc - k) * st];
    }
    amp = std::move(out);
  }

  void shift_z(std::size_t pos, std::uint64_t a) {
    std::size_t st = stride(pos);
    for (std::size_t i = 0; i < amp.size(); ++i) {
      std::uint64_t k = (i / st) % p;
      amp[i] *= root(a % p * k);
    }
  }

  // Contracts one rail against the uniform effect; no renormalization.
  void postselect(std::size_t r) {
    std::size_t pos = pos_of(r);
    std::size_t st = stride(pos);
    double u = 1.0 / std::sqrt(static_cast<double>(p));
    std::vector<std::complex<double>> out(amp.size() / p);
    for (std::size_t o = 0; o < out.size(); ++o) {
      std::size_t hi = o / st;
      std::size_t lo = o % st;
      std::complex<double> acc(0.0, 0.0);
      for (std::uint64_t k = 0; k < p; ++k) {
        acc += amp[hi * st * p + k * st + lo];
      }
      out[o] = acc * u;
    }
    amp = std::move(out);
    rails.erase(rails.begin() + static_cast<std::ptrdiff_t>(pos));
  }
};

std::uint64_t residue_of(const Scalar& a) { return a.residue(); }

void check_rail(std::size_t r, std::size_t wires) {
  if (r >= wires) {
    throw Error(Errc::index_out_of_range, rail_text(r) + " exceeds the register");
  }
}

// Applies the displacement labelled (shift | phase) without any overall
// phase convention beyond "phases first, shifts second".
DenseState apply_weyl(const DenseState& s,
                      const std::vector<std::uint64_t>& shift,
                      const std::vector<std::uint64_t>& phase) {
  std::uint64_t p = s.p;
  std::size_t n = s.rails.size();
  DenseState out{s.p, s.rails, std::vector<std::complex<double>>(s.amp.size())};
  std::vector<std::size_t> st(n, 1);
  for (std::size_t pos = n; pos-- > 1;) {
    st[pos - 1] = st[pos] * static_cast<std::size_t>(p);
  }
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    std::uint64_t e = 0;
    std::size_t dst = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::uint64_t k = (i / st[pos]) % p;
      e = (e + phase[pos] % p * k) % p;
      dst += ((k + shift[pos]) % p) * st[pos];
    }
    double t = 2.0 * std::numbers::pi * static_cast<double>(e) /
               static_cast<double>(p);
    out.amp[dst] = std::polar(1.0, t) * s.amp[i];
  }
  return out;
}

std::size_t checked_power(std::uint64_t p, std::size_t n, const char* what) {
  std::size_t r = 1;
  for (std::size_t t = 0; t < n; ++t) {
    if (r > kMaxAmplitudes / p) {
      throw Error(Errc::circuit_too_large, what);
    }
    r *= static_cast<std::size_t>(p);
  }
  return r;
}

bool next_digits(std::vector<std::uint64_t>& d, std::uint64_t p) {
  for (std::size_t t = d.size(); t-- > 0;) {
    if (++d[t] < p) {
      return true;
    }
    d[t] = 0;
  }
  return false;
}

}  // namespace

DenseState simulate_dense(const Circuit& c) {
  if (!c.field.is_prime() || c.field.modulus() == 2) {
    throw Error(Errc::even_or_non_prime,
                "dense simulation needs an odd prime field");
  }
  std::uint64_t p = c.field.modulus();
  if (p > kMaxAmplitudes) {
    throw Error(Errc::circuit_too_large,
                "field order exceeds the amplitude budget");
  }
  for (const Op& op : c.ops) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          check_rail(o.i, c.wires);
          if constexpr (std::is_same_v<T, OpC>) {
            check_rail(o.j, c.wires);
            if (o.i == o.j) {
              throw Error(Errc::equal_indices,
                          "shear needs two distinct rails");
            }
          }
        },
        op);
  }

  DenseSim sim(p, c.wires);
  for (const Op& op : c.ops) {
    if (const auto* z = std::get_if<OpZero>(&op)) {
      sim.prepare(z->i);
      continue;
    }
    if (const auto* d = std::get_if<OpDiscard>(&op)) {
      (void)d;
      throw Error(Errc::non_stabilizer_gate,
                  "discard has no state-vector counterpart");
    }
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          sim.require_live(o.i);
          if constexpr (std::is_same_v<T, OpC>) {
            sim.require_live(o.j);
          }
          if constexpr (std::is_same_v<T, OpF>) {
            sim.fourier(sim.pos_of(o.i), false);
          } else if constexpr (std::is_same_v<T, OpFinv>) {
            sim.fourier(sim.pos_of(o.i), true);
          } else if constexpr (std::is_same_v<T, OpS>) {
            sim.phase_quadratic(sim.pos_of(o.i), residue_of(o.a));
          } else if constexpr (std::is_same_v<T, OpV>) {
            std::size_t pos = sim.pos_of(o.i);
            sim.fourier(pos, false);
            sim.phase_quadratic(pos, residue_of(o.a));
            sim.fourier(pos, true);
          } else if constexpr (std::is_same_v<T, OpC>) {
            sim.shear_basis(sim.pos_of(o.i), sim.pos_of(o.j),
                            residue_of(o.a));
          } else if constexpr (std::is_same_v<T, OpXShift>) {
            sim.shift_x(sim.pos_of(o.i), residue_of(o.a));
          } else if constexpr (std::is_same_v<T, OpZShift>) {
            sim.shift_z(sim.pos_of(o.i), residue_of(o.a));
          } else if constexpr (std::is_same_v<T, OpPost>) {
            sim.postselect(o.i);
          }
        },
        op);
  }
  return DenseState{p, std::move(sim.rails), std::move(sim.amp)};
}

std::complex<double> inner(const DenseState& a, const DenseState& b) {
  if (a.p != b.p) {
    throw Error(Errc::mixed_fields, "states live over different primes");
  }
  if (a.rails != b.rails) {
    throw Error(Errc::dimension_mismatch, "states live on different rails");
  }
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    acc += std::conj(a.amp[i]) * b.amp[i];
  }
  return acc;
}

double norm(const DenseState& s) {
  double acc = 0.0;
  for (const auto& z : s.amp) {
    acc += std::norm(z);
  }
  return std::sqrt(acc);
}

std::vector<WeylElement> stabilizer_group(const DenseState& s, double eps) {
  if (s.p < 3) {
    throw Error(Errc::even_or_non_prime,
                "stabilizer enumeration needs an odd prime");
  }
  std::size_t w = s.rails.size();
  double ns = norm(s);
  if (ns <= eps) {
    throw Error(Errc::state_not_stabilizer, "state vector vanishes");
  }
  checked_power(s.p, 2 * w, "stabilizer enumeration too large");
  std::size_t expected = checked_power(s.p, w, "stabilizer group too large");

  std::vector<WeylElement> members;
  std::vector<std::uint64_t> digits(2 * w, 0);
  do {
    std::vector<std::uint64_t> shift(digits.begin(),
                                     digits.begin() + static_cast<std::ptrdiff_t>(w));
    std::vector<std::uint64_t> phase(digits.begin() + static_cast<std::ptrdiff_t>(w),
                                     digits.end());
    DenseState ws = apply_weyl(s, shift, phase);
    std::complex<double> c = inner(s, ws) / (ns * ns);
    if (std::abs(std::abs(c) - 1.0) > eps) {
      continue;
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < s.amp.size(); ++i) {
      diff += std::norm(ws.amp[i] - c * s.amp[i]);
    }
    if (std::sqrt(diff) > eps * ns) {
      continue;
    }
    members.push_back(WeylElement{std::move(shift), std::move(phase), c});
  } while (next_digits(digits, s.p));

  if (members.size() != expected) {
    std::ostringstream os;
    os << "found " << members.size() << " stabilizing displacements, expected "
       << expected;
    throw Error(Errc::state_not_stabilizer, os.str());
  }
  return members;
}

VerifyReport verify_correspondence(const Circuit& c, double eps) {
  EvaluatedCircuit ev = evaluate(c);
  if (!ev.dom_rails.empty()) {
    throw Error(Errc::invalid_argument,
                "every rail must be prepared before use");
  }
  DenseState ds = simulate_dense(c);
  if (ds.rails != ev.cod_rails) {
    throw Error(Errc::correspondence_violation,
                "live rail bookkeeping diverged between the two evaluations");
  }

  VerifyReport rep;
  double ns = norm(ds);
  if (ev.relation.is_empty()) {
    rep.empty_relation = true;
    if (ns > eps) {
      throw Error(Errc::correspondence_violation,
                  "relation is empty but the state vector does not vanish");
    }
    return rep;
  }
  if (ns <= eps) {
    throw Error(Errc::correspondence_violation,
                "state vector vanished under a nonempty relation");
  }

  std::size_t w = ds.rails.size();
  GradedRelation lin = ev.relation.linear_part();
  checked_power(ds.p, 2 * w, "correspondence check too large");

  std::vector<std::uint64_t> digits(2 * w, 0);
  do {
    std::vector<std::uint64_t> shift(digits.begin(),
                                     digits.begin() + static_cast<std::ptrdiff_t>(w));
    std::vector<std::uint64_t> phase(digits.begin() + static_cast<std::ptrdiff_t>(w),
                                     digits.end());
    DenseState ws = apply_weyl(ds, shift, phase);
    std::complex<double> cv = inner(ds, ws) / (ns * ns);
    bool dense_member = std::abs(std::abs(cv) - 1.0) <= eps;
    if (dense_member) {
      double diff = 0.0;
      for (std::size_t i = 0; i < ds.amp.size(); ++i) {
        diff += std::norm(ws.amp[i] - cv * ds.amp[i]);
      }
      dense_member = std::sqrt(diff) <= eps * ns;
    }

    std::vector<Scalar> v;
    v.reserve(2 * w);
    for (std::uint64_t x : shift) {
      v.push_back(Scalar::from_int(c.field, static_cast<long long>(x)));
    }
    for (std::uint64_t z : phase) {
      v.push_back(Scalar::from_int(c.field, static_cast<long long>(z)));
    }
    bool rel_member = lin.member(v);

    if (dense_member != rel_member) {
      std::ostringstream os;
      os << "displacement (x=";
      for (std::size_t t = 0; t < w; ++t) {
        os << (t ? "," : "") << shift[t];
      }
      os << " z=";
      for (std::size_t t = 0; t < w; ++t) {
        os << (t ? "," : "") << phase[t];
      }
      os << ") is " << (dense_member ? "" : "not ")
         << "a dense stabilizer but is "
         << (rel_member ? "" : "not ") << "in the relation";
      throw Error(Errc::correspondence_violation, os.str());
    }
    ++rep.checked_points;
  } while (next_digits(digits, ds.p));

  return rep;
}

}  // namespace lagrel
