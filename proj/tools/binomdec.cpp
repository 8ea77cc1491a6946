// Command line driver: parse a .bid problem file, run one decomposition
// subcommand, report as JSON (default) or readable text.
//
//   binomdec <subcommand> [options] <file.bid>
//
// subcommands: cellular memb hull unmixed primary assoc isprimary verify
// exit codes: 0 ok, 1 input error, 2 verification failure

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "binomdec/cellular.hpp"
#include "binomdec/decomp.hpp"
#include "binomdec/errors.hpp"
#include "binomdec/parse.hpp"

using json = nlohmann::ordered_json;
using namespace binomdec;

namespace {

struct Options {
  std::string subcommand;
  std::string path;
  bool pretty = false;
  bool verify = false;
  bool no_prune = false;
  bool allow_extension = false;
  bool stepwise = false;
};

const char* const kUsage =
    "usage: binomdec <subcommand> [options] <file.bid>\n"
    "\n"
    "subcommands\n"
    "  cellular    split into cellular ideals\n"
    "  memb        ideal of embedded witness monomials (cellular input)\n"
    "  hull        intersection of the minimal primary components (cellular input)\n"
    "  unmixed     unmixed decomposition (cellular input)\n"
    "  primary     primary decomposition\n"
    "  assoc       associated primes (cellular input)\n"
    "  isprimary   test for primariness over the algebraic closure\n"
    "  verify      primary decomposition plus intersection check\n"
    "\n"
    "options\n"
    "  --json              machine output, one line (default)\n"
    "  --pretty            readable text instead of JSON\n"
    "  --verify            intersect the components and report 'verified'\n"
    "  --no-prune          keep redundant components\n"
    "  --allow-extension   enlarge the coefficient field when roots are missing\n"
    "  --stepwise          unmixed only: recurse the splitting, keep every part\n"
    "  --order <name>      term order; degrevlex is the only one\n";

Options parse_args(int argc, char** argv) {
  static const std::vector<std::string> subs = {"cellular", "memb",  "hull",      "unmixed",
                                                "primary",  "assoc", "isprimary", "verify"};
  Options o;
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> positional;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--help" || a == "-h") {
      std::cout << kUsage;
      std::exit(0);
    } else if (a == "--json") {
      o.pretty = false;
    } else if (a == "--pretty") {
      o.pretty = true;
    } else if (a == "--verify") {
      o.verify = true;
    } else if (a == "--no-prune") {
      o.no_prune = true;
    } else if (a == "--allow-extension") {
      o.allow_extension = true;
    } else if (a == "--stepwise") {
      o.stepwise = true;
    } else if (a == "--order" || a.rfind("--order=", 0) == 0) {
      std::string value;
      if (a == "--order") {
        if (++i == args.size()) throw std::runtime_error("--order needs a value");
        value = args[i];
      } else {
        value = a.substr(8);
      }
      if (value != "degrevlex") throw std::runtime_error("unsupported term order '" + value + "'");
    } else if (!a.empty() && a[0] == '-') {
      throw std::runtime_error("unknown option '" + a + "'");
    } else {
      positional.push_back(a);
    }
  }
  if (positional.size() != 2)
    throw std::runtime_error("expected a subcommand and one input file (try --help)");
  o.subcommand = positional[0];
  o.path = positional[1];
  if (std::find(subs.begin(), subs.end(), o.subcommand) == subs.end())
    throw std::runtime_error("unknown subcommand '" + o.subcommand + "'");
  if (o.stepwise && o.subcommand != "unmixed")
    throw std::runtime_error("--stepwise applies to the unmixed subcommand only");
  return o;
}

long small_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::runtime_error("lattice entry out of printable range");
  return z.get_si();
}

json field_json(const FieldCtx& F) {
  json o;
  o["p"] = F.p();
  o["k"] = F.k();
  o["modulus"] = F.k() == 1 ? json(nullptr) : json(F.modulus());
  return o;
}

// one row per lattice generator, coordinates in ambient order
json lattice_json(const Lattice& L) {
  json rows = json::array();
  const IntMatrix& B = L.basis();
  for (int j = 0; j < B.cols(); ++j) {
    json row = json::array();
    for (int i = 0; i < B.rows(); ++i) row.push_back(small_int(B.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// values are coefficient vectors low-to-high, one per basis row
json character_json(const PartialCharacter& rho) {
  json o;
  o["basis"] = lattice_json(rho.lattice);
  json vals = json::array();
  for (const FieldElement& v : rho.values) vals.push_back(v.coeffs());
  o["values"] = vals;
  return o;
}

json ideal_json(const BinomialIdeal& I) {
  json a = json::array();
  for (const Poly& f : I.groebner()) a.push_back(poly_str(I.ring(), f));
  return a;
}

std::string monomial_str(const Ring& R, const Expvec& m) {
  return poly_str(R, poly_monomial(R, R.field().one(), m));
}

const char* kind_str(ComponentKind k) {
  switch (k) {
    case ComponentKind::Unmixed: return "unmixed";
    case ComponentKind::Primary: return "primary";
    case ComponentKind::Hull: return "hull";
  }
  return "?";
}

json component_json(const Component& c) {
  json o;
  o["generators"] = ideal_json(c.ideal);
  json p;
  p["witness"] = monomial_str(c.ideal.ring(), c.provenance.witness);
  p["character_index"] =
      c.provenance.character_index < 0 ? json(nullptr) : json(c.provenance.character_index);
  p["kind"] = kind_str(c.provenance.kind);
  o["provenance"] = p;
  o["associated_prime"] = c.associated_prime ? ideal_json(*c.associated_prime) : json(nullptr);
  return o;
}

json cellular_component_json(const CellularComponent& c) {
  json o;
  o["generators"] = ideal_json(c.ideal);
  json p;
  p["kind"] = "cellular";
  p["delta"] = c.certificate.delta;
  o["provenance"] = p;
  o["associated_prime"] = nullptr;
  return o;
}

// names one offending variable when the certificate is missing
std::vector<int> require_cellular(const BinomialIdeal& I,
                                  const std::optional<CellularCertificate>& cert) {
  if (cert) return cert->delta;
  const Ring& R = I.ring();
  for (int i = 1; i <= R.nvars(); ++i) {
    Expvec xi(R.nvars(), 0);
    xi[i - 1] = 1;
    if (equal(quotient_monomial(I, xi), I)) continue;
    if (saturate_monomial(I, xi).is_unit()) continue;
    throw NotCellular("variable " + R.var(i) +
                      " is a zerodivisor but not nilpotent modulo the ideal");
  }
  throw NotCellular();
}

// full induction: hull of the level, then recurse into every split-off part;
// nothing is deduplicated, so redundant parts stay visible
void stepwise_closure(const BinomialIdeal& I, const std::vector<int>& delta,
                      std::vector<Component>& out, int depth) {
  if (depth > 64) throw std::logic_error("stepwise splitting failed to terminate");
  std::vector<Component> step = unmixed_decomposition_stepwise(I, delta);
  out.push_back(step[0]);
  for (size_t i = 1; i < step.size(); ++i) stepwise_closure(step[i].ideal, delta, out, depth + 1);
}

std::vector<BinomialIdeal> ideals_of(const std::vector<Component>& cs) {
  std::vector<BinomialIdeal> out;
  for (const Component& c : cs) out.push_back(c.ideal);
  return out;
}

json run_subcommand(const Options& opt, const BinomialIdeal& J) {
  json o;
  o["input"] = opt.path;
  o["field"] = field_json(J.ring().field());
  std::optional<CellularCertificate> cert = is_cellular(J);
  o["delta"] = cert ? json(cert->delta) : json(nullptr);
  o["character"] = cert ? character_json(cellular_character(J, cert->delta)) : json(nullptr);
  json memb_j = nullptr, comps_j = nullptr, primary_j = nullptr, verified_j = nullptr;

  const std::string& cmd = opt.subcommand;
  if (cmd == "cellular") {
    std::vector<CellularComponent> cs = cellular_decomposition(J, !opt.no_prune);
    comps_j = json::array();
    std::vector<BinomialIdeal> ideals;
    for (const CellularComponent& c : cs) {
      comps_j.push_back(cellular_component_json(c));
      ideals.push_back(c.ideal);
    }
    if (opt.verify) verified_j = verify_cellular_decomposition(J, ideals);
  } else if (cmd == "memb" || cmd == "hull") {
    std::vector<int> d = require_cellular(J, cert);
    BinomialIdeal M = memb(J, d);
    memb_j = json::array();
    for (const Poly& f : M.generator_polys()) memb_j.push_back(poly_str(J.ring(), f));
    if (cmd == "hull") {
      Component h{hull(J, d), {Expvec(J.ring().nvars(), 0), -1, ComponentKind::Hull},
                  std::nullopt};
      comps_j = json::array({component_json(h)});
    }
  } else if (cmd == "unmixed") {
    std::vector<int> d = require_cellular(J, cert);
    std::vector<Component> cs;
    if (opt.stepwise)
      stepwise_closure(J, d, cs, 0);
    else
      cs = unmixed_decomposition(J, d);
    comps_j = json::array();
    for (const Component& c : cs) comps_j.push_back(component_json(c));
    if (opt.verify) verified_j = equal(intersect_all(ideals_of(cs)), J);
  } else if (cmd == "primary" || cmd == "verify") {
    std::vector<Component> cs = primary_decomposition(J, false, !opt.no_prune);
    comps_j = json::array();
    for (const Component& c : cs) comps_j.push_back(component_json(c));
    if (opt.verify || cmd == "verify") verified_j = equal(intersect_all(ideals_of(cs)), J);
  } else if (cmd == "assoc") {
    std::vector<int> d = require_cellular(J, cert);
    comps_j = json::array();
    for (const BinomialIdeal& P : associated_primes(J, d, false)) {
      json c;
      c["generators"] = ideal_json(P);
      c["provenance"] = nullptr;
      c["associated_prime"] = nullptr;
      comps_j.push_back(c);
    }
  } else {  // isprimary
    primary_j = is_primary(J);
  }

  o["memb_generators"] = memb_j;
  o["components"] = comps_j;
  o["primary"] = primary_j;
  o["verified"] = verified_j;
  return o;
}

std::string join_ints(const json& a, const char* sep) {
  std::string s;
  for (const json& v : a) {
    if (!s.empty()) s += sep;
    s += std::to_string(v.get<long>());
  }
  return s;
}

std::string value_str(const json& coeffs) {
  if (coeffs.size() == 1) return std::to_string(coeffs[0].get<long>());
  return "[" + join_ints(coeffs, ",") + "]";
}

void print_pretty(std::ostream& os, const json& o) {
  os << "input: " << o["input"].get<std::string>() << "\n";
  const json& f = o["field"];
  os << "field: GF(" << f["p"].get<long>();
  if (f["k"].get<long>() > 1) os << "^" << f["k"].get<long>();
  os << ")";
  if (!f["modulus"].is_null()) os << "  modulus " << join_ints(f["modulus"], ",");
  os << "\n";
  if (!o["delta"].is_null()) os << "delta: " << join_ints(o["delta"], " ") << "\n";
  if (!o["character"].is_null()) {
    const json& c = o["character"];
    os << "character:";
    if (c["basis"].empty()) os << " trivial";
    for (size_t i = 0; i < c["basis"].size(); ++i)
      os << " (" << join_ints(c["basis"][i], ",") << ") -> " << value_str(c["values"][i]);
    os << "\n";
  }
  if (!o["memb_generators"].is_null()) {
    os << "memb generators:";
    if (o["memb_generators"].empty()) os << " none";
    for (const json& g : o["memb_generators"]) os << " " << g.get<std::string>();
    os << "\n";
  }
  if (!o["components"].is_null()) {
    os << "components: " << o["components"].size() << "\n";
    int n = 0;
    for (const json& c : o["components"]) {
      os << "  [" << ++n << "]";
      const json& p = c["provenance"];
      if (!p.is_null()) {
        os << " " << p["kind"].get<std::string>();
        if (p.contains("witness")) os << ", witness " << p["witness"].get<std::string>();
        if (p.contains("character_index") && !p["character_index"].is_null())
          os << ", character " << p["character_index"].get<long>();
        if (p.contains("delta")) os << ", delta " << join_ints(p["delta"], " ");
      }
      os << "\n      generators:";
      for (const json& g : c["generators"]) os << " " << g.get<std::string>() << ";";
      os << "\n";
      if (!c["associated_prime"].is_null()) {
        os << "      prime:";
        for (const json& g : c["associated_prime"]) os << " " << g.get<std::string>() << ";";
        os << "\n";
      }
    }
  }
  if (!o["primary"].is_null()) os << "primary: " << (o["primary"].get<bool>() ? "yes" : "no") << "\n";
  if (!o["verified"].is_null())
    os << "verified: " << (o["verified"].get<bool>() ? "yes" : "no") << "\n";
}

int run(const Options& opt) {
  ProblemFile pf = parse_problem_file(opt.path);
  json out;
  BinomialIdeal J = pf.ideal;
  // grow the field at the outermost level, so every reported ideal lives
  // over one coefficient field and J stays comparable with the components
  for (int round = 0;; ++round) {
    try {
      out = run_subcommand(opt, J);
      break;
    } catch (const MissingRoots& e) {
      if (!opt.allow_extension) throw;
      if (round >= 8) throw std::logic_error("field extension failed to stabilize");
      J = embed_ideal(J, extend_field(J.ring().field(), e.needed_degree).embed);
    }
  }
  if (opt.pretty)
    print_pretty(std::cout, out);
  else
    std::cout << out.dump() << "\n";
  return out["verified"].is_boolean() && !out["verified"].get<bool>() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  bool allow_extension = false;
  try {
    Options opt = parse_args(argc, argv);
    allow_extension = opt.allow_extension;
    return run(opt);
  } catch (const MissingRoots& e) {
    std::cerr << "error: " << e.what();
    if (!allow_extension) std::cerr << " (re-run with --allow-extension)";
    std::cerr << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
