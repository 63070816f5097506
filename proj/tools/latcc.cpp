// latcc: multilevel lattice constellations from binary linear codes.
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latcc/code_file.hpp"
#include "latcc/code_library.hpp"
#include "latcc/constructions.hpp"
#include "latcc/errors.hpp"
#include "latcc/geometry.hpp"
#include "latcc/latticeness.hpp"
#include "latcc/leech.hpp"

using json = nlohmann::json;  // std::map-backed, so dumped keys are sorted

namespace {

constexpr int kExitOk = 0;         // verified / lattice as claimed
constexpr int kExitNegative = 1;   // negative verdict or failed reproduction
constexpr int kExitUndecided = 2;  // undecided or enumeration infeasible
constexpr int kExitInput = 3;      // unusable input

constexpr double kQuotedAssociatedLeechDensity = 0.00012;

std::uint64_t enum_cap() {
  if (const char* s = std::getenv("LATCC_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0)
      throw latcc::Error(std::string("bad LATCC_ENUM_CAP value: ") + s);
    return v;
  }
  return latcc::kDefaultEnumCap;
}

struct InputSpec {
  std::string file;
  std::string builtin;
};

latcc::LayeredCode resolve_input(const InputSpec& in, std::string& described) {
  if (!in.file.empty() && !in.builtin.empty())
    throw latcc::Error("give either a code file or --builtin, not both");
  if (!in.builtin.empty()) {
    described = "builtin " + in.builtin;
    return latcc::builtin_code(in.builtin);
  }
  if (!in.file.empty()) {
    described = "file " + in.file;
    return latcc::to_layered_code(latcc::load_code_file(in.file));
  }
  throw latcc::Error("no input: give a code file or --builtin <name>");
}

std::string sig6(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

std::string point_str(const latcc::Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

json point_json(const latcc::Point& p) {
  json a = json::array();
  for (auto c : p) a.push_back(c);
  return a;
}

json verdict_json(const latcc::LatticeVerdict& v) {
  json j;
  j["is_lattice"] = v.is_lattice ? json(*v.is_lattice) : json(nullptr);
  j["method"] = latcc::method_name(v.method);
  j["precondition_held"] = v.precondition_held ? json(*v.precondition_held) : json(nullptr);
  if (v.witness) {
    if (const auto* pw = std::get_if<latcc::PairWitness>(&*v.witness)) {
      j["witness"] = json::array({point_json(pw->a), point_json(pw->b)});
      latcc::Point sum(pw->a.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = pw->a[i] + pw->b[i];
      j["witness_sum"] = point_json(sum);
    } else if (const auto* sw = std::get_if<latcc::SchurWitness>(&*v.witness)) {
      j["witness"] = {{"target_level", sw->target_level}, {"g", sw->g.str()}, {"h", sw->h.str()}};
    }
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string verdict_reason(const latcc::LatticeVerdict& v, std::uint64_t cap) {
  switch (v.method) {
    case latcc::CheckMethod::structural:
      if (v.precondition_held && !*v.precondition_held)
        return "containment chain failed; the structural criterion makes no claim";
      return v.is_lattice.value_or(false)
                 ? "containment chain held and every generator-pair Schur product was absorbed"
                 : "containment chain held but a generator-pair Schur product escaped";
    case latcc::CheckMethod::brute_force: {
      std::string why = v.precondition_held && !*v.precondition_held
                            ? "containment chain failed; fell back to explicit closure: "
                            : "explicit closure over the coset set: ";
      return why + (v.is_lattice.value_or(false) ? "closed under addition mod the period"
                                                 : "a coset sum escaped the set");
    }
    case latcc::CheckMethod::nested_closure:
      return v.is_lattice.value_or(false)
                 ? "nested chain with every generator-pair Schur product in the next level"
                 : "nested chain but a generator-pair Schur product escaped the next level";
    case latcc::CheckMethod::undecided:
    default:
      return "containment chain failed and explicit enumeration exceeds the cap of " +
             std::to_string(cap);
  }
}

void print_verdict_human(const latcc::LatticeVerdict& v, std::uint64_t cap) {
  std::string verdict = !v.is_lattice ? "undecided" : (*v.is_lattice ? "lattice" : "not a lattice");
  std::cout << "verdict: " << verdict << " (method " << latcc::method_name(v.method) << ")\n";
  std::cout << "reason: " << verdict_reason(v, cap) << "\n";
  if (v.witness) {
    if (const auto* pw = std::get_if<latcc::PairWitness>(&*v.witness)) {
      latcc::Point sum(pw->a.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = pw->a[i] + pw->b[i];
      std::cout << "witness: " << point_str(pw->a) << " + " << point_str(pw->b) << " = "
                << point_str(sum) << " is outside the constellation\n";
    } else if (const auto* sw = std::get_if<latcc::SchurWitness>(&*v.witness)) {
      std::cout << "witness: Schur product of " << sw->g.str() << " and " << sw->h.str()
                << " is not absorbed at level " << sw->target_level << "\n";
    }
  }
}

int verdict_exit(const latcc::LatticeVerdict& v) {
  if (!v.is_lattice) return kExitUndecided;
  return *v.is_lattice ? kExitOk : kExitNegative;
}

std::string center_fraction_str(const latcc::DensityReport& r) {
  if (r.center_den == 0) return "";
  return std::to_string(r.center_num) + "/" + std::to_string(r.center_den);
}

json density_json(const latcc::DensityReport& r) {
  json j;
  j["points_per_period"] = r.points_per_period;
  j["min_distance_sq"] = r.min_distance_sq;
  j["center_density"] = r.center_density;
  const std::string frac = center_fraction_str(r);
  j["center_density_fraction"] = frac.empty() ? json(nullptr) : json(frac);
  j["packing_density"] = r.packing_density;
  j["ball_volume"] = latcc::ball_volume(r.dimension);
  return j;
}

void print_density_human(const latcc::DensityReport& r, const std::string& indent) {
  std::cout << indent << "points per period M: " << r.points_per_period << "\n";
  std::cout << indent << "min squared distance d^2: " << r.min_distance_sq << "\n";
  const std::string frac = center_fraction_str(r);
  std::cout << indent << "center density (d/2)^n M / 2^(nL): " << sig6(r.center_density);
  if (!frac.empty()) std::cout << " (exactly " << frac << ")";
  std::cout << "\n";
  std::cout << indent << "packing density: " << sig6(r.packing_density) << " (= V_" << r.dimension
            << " x " << (frac.empty() ? sig6(r.center_density) : frac) << ", V_" << r.dimension
            << " = " << sig6(latcc::ball_volume(r.dimension)) << ")\n";
}

std::string associated_density_note(double computed) {
  return "note: the computed associated-constellation density " + sig6(computed) +
         " differs from the published figure " + sig6(kQuotedAssociatedLeechDensity) +
         "; the value here follows exactly from the density formula";
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct CodeHeader {
  std::string described;
  int n = 0, levels = 0, rank = 0;
};

CodeHeader header_of(const latcc::LayeredCode& code, const std::string& described) {
  return {described, code.block_length(), code.levels(), code.code().rank()};
}

void print_header_human(const CodeHeader& h) {
  std::cout << "code: " << h.described << " (n=" << h.n << ", L=" << h.levels
            << ", rank " << h.rank << ")\n";
}

json header_json(const CodeHeader& h) {
  return {{"input", h.described}, {"n", h.n}, {"levels", h.levels}, {"rank", h.rank}};
}

// ---------------------------------------------------------------- check

int run_check(const InputSpec& in, const std::string& method, bool as_json) {
  std::string described;
  const latcc::LayeredCode code = resolve_input(in, described);
  const std::uint64_t cap = enum_cap();

  latcc::LatticeVerdict v;
  if (method == "auto") {
    v = latcc::decide_latticeness(code, cap);
  } else if (method == "theorem2") {
    v = latcc::structural_check(code);
  } else {
    const latcc::Constellation k = latcc::construction_c_star(code, cap);
    if (!k.is_explicit())
      throw latcc::EnumerationCapError("brute force needs the explicit coset set; " +
                                       std::to_string(code.code().rank()) +
                                       " generators exceed the cap of " + std::to_string(cap));
    v = latcc::closure_check(k);
  }

  const CodeHeader h = header_of(code, described);
  if (as_json) {
    json j = header_json(h);
    j["schema_version"] = 1;
    j["command"] = "check";
    j.update(verdict_json(v));
    j["reason"] = verdict_reason(v, cap);
    emit_json(j);
  } else {
    print_header_human(h);
    print_verdict_human(v, cap);
  }
  return verdict_exit(v);
}

// ---------------------------------------------------------------- density

struct DensityPair {
  latcc::DensityReport cstar;
  latcc::DensityReport associated;
  bool leech_scale = false;  // min norms came from the branch search
};

DensityPair compute_density_pair(const latcc::LayeredCode& code, std::uint64_t cap) {
  DensityPair out;
  const latcc::Constellation kstar = latcc::construction_c_star(code, cap);
  const latcc::Constellation kc = latcc::associated_construction_c(code, cap);
  if (kstar.is_explicit()) {
    out.cstar = latcc::packing_density(kstar);
  } else {
    // Implicit constellations are only measurable through the specialized
    // exact search; anything else is out of enumeration reach.
    try {
      out.cstar = latcc::packing_density(kstar, latcc::leech_min_norm(code).norm_sq);
      out.leech_scale = true;
    } catch (const latcc::StructureError&) {
      throw latcc::EnumerationCapError(
          "coset enumeration exceeds the cap of " + std::to_string(cap) +
          " and the code does not match the built-in exact-search structure");
    }
  }
  out.associated = kc.is_explicit()
                       ? latcc::packing_density(kc)
                       : latcc::packing_density(kc, latcc::leech_associated_min_norm(code).norm_sq);
  return out;
}

int run_density(const InputSpec& in, bool as_json) {
  std::string described;
  const latcc::LayeredCode code = resolve_input(in, described);
  const DensityPair d = compute_density_pair(code, enum_cap());
  const double ratio = d.cstar.packing_density / d.associated.packing_density;

  const CodeHeader h = header_of(code, described);
  if (as_json) {
    json j = header_json(h);
    j["schema_version"] = 1;
    j["command"] = "density";
    j["cstar"] = density_json(d.cstar);
    j["associated"] = density_json(d.associated);
    j["ratio"] = ratio;
    if (d.leech_scale) {
      j["associated_density_note"] = associated_density_note(d.associated.packing_density);
      j["published_figure"] = kQuotedAssociatedLeechDensity;
      j["matches_published_figure"] = false;
    }
    emit_json(j);
  } else {
    print_header_human(h);
    std::cout << "jointly coded constellation (C*):\n";
    print_density_human(d.cstar, "  ");
    std::cout << "associated independent-level constellation (C):\n";
    print_density_human(d.associated, "  ");
    std::cout << "density ratio C*/C: " << sig6(ratio) << "\n";
    if (d.leech_scale) std::cout << associated_density_note(d.associated.packing_density) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- min-distance

int run_min_distance(const InputSpec& in, bool as_json) {
  std::string described;
  const latcc::LayeredCode code = resolve_input(in, described);
  const std::uint64_t cap = enum_cap();
  const latcc::Constellation k = latcc::construction_c_star(code, cap);

  latcc::MinDistance md;
  if (k.is_explicit()) {
    md = latcc::min_distance_sq(k);
  } else {
    try {
      const latcc::LeechMinNorm mn = latcc::leech_min_norm(code);
      md.d2 = mn.norm_sq;
      md.a = mn.witness.reconstruct();
      md.b = latcc::Point(md.a.size(), 0);
    } catch (const latcc::StructureError&) {
      throw latcc::EnumerationCapError(
          "coset enumeration exceeds the cap of " + std::to_string(cap) +
          " and the code does not match the built-in exact-search structure");
    }
  }
  latcc::Point diff(md.a.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = md.a[i] - md.b[i];
  diff = latcc::min_representative(diff, code.levels());

  const CodeHeader h = header_of(code, described);
  if (as_json) {
    json j = header_json(h);
    j["schema_version"] = 1;
    j["command"] = "min-distance";
    j["min_distance_sq"] = md.d2;
    j["witness"] = {{"a", point_json(md.a)}, {"b", point_json(md.b)},
                    {"difference", point_json(diff)}};
    emit_json(j);
  } else {
    print_header_human(h);
    std::cout << "min squared distance: " << md.d2 << "\n";
    std::cout << "witness: " << point_str(md.a) << " and " << point_str(md.b)
              << ", shortest difference " << point_str(diff) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- construct

int run_construct(const InputSpec& in, std::int64_t radius, const std::string& output,
                  bool as_json) {
  std::string described;
  const latcc::LayeredCode code = resolve_input(in, described);
  const std::uint64_t cap = enum_cap();
  const latcc::Constellation k = latcc::construction_c_star(code, cap);
  if (!k.is_explicit())
    throw latcc::EnumerationCapError("constructing points needs the explicit coset set; rank " +
                                     std::to_string(code.code().rank()) +
                                     " exceeds the cap of " + std::to_string(cap));
  if (radius < 0) radius = std::int64_t{1} << code.levels();

  const std::int64_t period = std::int64_t{1} << code.levels();
  std::vector<latcc::Point> points;
  for (const latcc::Point& coset : k.cosets()) {
    // Per coordinate, the translates of coset[j] landing in [-radius, radius].
    std::vector<std::vector<std::int64_t>> choices(coset.size());
    bool any = true;
    for (std::size_t j = 0; j < coset.size() && any; ++j) {
      for (std::int64_t v = coset[j] - ((coset[j] + radius) / period + 1) * period;
           v <= radius; v += period)
        if (v >= -radius) choices[j].push_back(v);
      any = !choices[j].empty();
    }
    if (!any) continue;
    std::uint64_t count = points.size();
    std::uint64_t block = 1;
    for (const auto& c : choices) block *= c.size();
    if (count + block > (std::uint64_t{1} << 22))
      throw latcc::EnumerationCapError("more than 2^22 points inside the requested box");
    std::vector<std::size_t> idx(coset.size(), 0);
    while (true) {
      latcc::Point p(coset.size());
      for (std::size_t j = 0; j < coset.size(); ++j) p[j] = choices[j][idx[j]];
      points.push_back(std::move(p));
      std::size_t j = coset.size();
      while (j > 0 && ++idx[j - 1] == choices[j - 1].size()) idx[--j] = 0;
      if (j == 0) break;
    }
  }
  std::sort(points.begin(), points.end());

  std::ostringstream body;
  for (const latcc::Point& p : points) {
    for (std::size_t j = 0; j < p.size(); ++j) body << (j ? " " : "") << p[j];
    body << "\n";
  }
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw latcc::Error("cannot write " + output);
    out << body.str();
  }

  if (as_json) {
    json j = header_json(header_of(code, described));
    j["schema_version"] = 1;
    j["command"] = "construct";
    j["radius"] = radius;
    j["count"] = points.size();
    json arr = json::array();
    for (const latcc::Point& p : points) arr.push_back(point_json(p));
    j["points"] = arr;
    emit_json(j);
  } else if (output.empty()) {
    std::cout << body.str();
  } else {
    std::cout << points.size() << " points written to " << output << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- leech

json leech_report_json(const latcc::LeechReport& rep) {
  json j;
  j["schema_version"] = 1;
  j["command"] = "leech";
  json chain = json::array();
  for (const auto& c : rep.chain_checks) chain.push_back({{"name", c.name}, {"pass", c.pass}});
  j["chain_checks"] = chain;
  json schur = json::array();
  for (const auto& c : rep.schur_checks) {
    json e = {{"level", c.level}, {"pass", c.pass}};
    if (c.counterexample)
      e["counterexample"] = {{"g", c.counterexample->g.str()}, {"h", c.counterexample->h.str()}};
    schur.push_back(e);
  }
  j["schur_checks"] = schur;
  j["structural"] = verdict_json(rep.structural);
  j["min_norm_sq"] = rep.min_norm.norm_sq;
  j["density"] = density_json(rep.density);
  j["associated_min_norm_sq"] = rep.associated_min_norm.norm_sq;
  j["associated_density"] = density_json(rep.associated_density);
  j["associated_density_note"] = associated_density_note(rep.associated_density.packing_density);
  j["published_figure"] = kQuotedAssociatedLeechDensity;
  j["matches_published_figure"] = false;
  j["separation_witnessed"] = rep.separation_witnessed;
  j["verdict"] = rep.verdict;
  return j;
}

int run_leech(bool as_json) {
  const latcc::LeechReport rep = latcc::leech_verify();
  if (as_json) {
    emit_json(leech_report_json(rep));
  } else {
    std::cout << "Leech constellation (n=24, L=3, rank 36)\n";
    std::cout << "chain checks:\n";
    for (const auto& c : rep.chain_checks)
      std::cout << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
    std::cout << "Schur closure (generator pairs):\n";
    for (const auto& c : rep.schur_checks) {
      std::cout << "  level " << (c.level - 1) << " products absorbed at level " << c.level << ": "
                << (c.pass ? "pass" : "FAIL") << "\n";
      if (c.counterexample)
        std::cout << "    counterexample: " << c.counterexample->g.str() << " * "
                  << c.counterexample->h.str() << "\n";
    }
    std::cout << "structural check: ";
    print_verdict_human(rep.structural, enum_cap());
    std::cout << "min squared norm: " << rep.min_norm.norm_sq << "\n";
    print_density_human(rep.density, "");
    std::cout << "associated independent-level constellation:\n";
    std::cout << "  min squared norm: " << rep.associated_min_norm.norm_sq << "\n";
    print_density_human(rep.associated_density, "  ");
    std::cout << associated_density_note(rep.associated_density.packing_density) << "\n";
    std::cout << "jointly coded set is strictly inside the associated set: "
              << (rep.separation_witnessed ? "yes" : "NO") << "\n";
    std::cout << "overall: " << (rep.verdict ? "verified lattice" : "NOT VERIFIED") << "\n";
  }
  return rep.verdict ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- example

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

void add_check(std::vector<ExampleCheck>& cs, const std::string& name, bool pass,
               const std::string& detail = "") {
  cs.push_back({name, pass, detail});
}

bool cosets_equal(const latcc::Constellation& k, const std::vector<latcc::Point>& want) {
  return k.is_explicit() && k.cosets() == want;
}

std::vector<ExampleCheck> run_example_checks(const std::string& name, std::uint64_t cap,
                                             std::vector<std::string>& notes) {
  std::vector<ExampleCheck> cs;
  if (name == "ex1") {
    const latcc::LayeredCode code = latcc::builtin_code("ex1");
    const latcc::Constellation k = latcc::construction_c_star(code, cap);
    add_check(cs, "coset set is {(0,0),(1,2),(2,2),(3,0)}",
              cosets_equal(k, {{0, 0}, {1, 2}, {2, 2}, {3, 0}}));
    const latcc::LatticeVerdict v = latcc::decide_latticeness(code, cap);
    add_check(cs, "containment chain fails",
              v.precondition_held && !*v.precondition_held);
    add_check(cs, "closure oracle refutes latticeness",
              v.is_lattice && !*v.is_lattice && v.method == latcc::CheckMethod::brute_force);
    bool witness_ok = false;
    if (v.witness) {
      if (const auto* pw = std::get_if<latcc::PairWitness>(&*v.witness))
        witness_ok = pw->a == latcc::Point{1, 2} && pw->b == latcc::Point{3, 0} &&
                     !k.contains({4, 2});
    }
    add_check(cs, "witness (1,2) + (3,0) = (4,2) lies outside", witness_ok);
    const latcc::LatticeVerdict av =
        latcc::nested_closure_check({code.projection(1), code.projection(2)});
    add_check(cs, "associated independent-level constellation is a lattice",
              av.is_lattice.value_or(false));
  } else if (name == "ex2") {
    const latcc::LayeredCode code = latcc::builtin_code("ex2");
    const latcc::Constellation k = latcc::construction_c_star(code, cap);
    add_check(cs, "coset set is {(0,0),(1,2),(2,0),(3,2)}",
              cosets_equal(k, {{0, 0}, {1, 2}, {2, 0}, {3, 2}}));
    const latcc::LatticeVerdict v = latcc::decide_latticeness(code, cap);
    add_check(cs, "lattice by the structural criterion",
              v.is_lattice.value_or(false) && v.method == latcc::CheckMethod::structural);
    const DensityPair d = compute_density_pair(code, cap);
    add_check(cs, "min squared distance 4", d.cstar.min_distance_sq == 4,
              "got " + std::to_string(d.cstar.min_distance_sq));
    const double quarter_pi = std::numbers::pi / 4.0;
    add_check(cs, "packing density pi/4 within 1e-12",
              std::abs(d.cstar.packing_density - quarter_pi) < 1e-12,
              sig6(d.cstar.packing_density));
    add_check(cs, "associated packing density pi/8 within 1e-12",
              std::abs(d.associated.packing_density - std::numbers::pi / 8.0) < 1e-12,
              sig6(d.associated.packing_density));
    add_check(cs, "density ratio exactly 2",
              d.cstar.packing_density / d.associated.packing_density == 2.0);
  } else if (name == "ex5") {
    const latcc::LayeredCode code = latcc::builtin_code("ex5");
    const latcc::Constellation k = latcc::construction_c_star(code, cap);
    add_check(cs, "the 8 cosets match the listed set",
              cosets_equal(k, {{0, 0}, {1, 2}, {2, 4}, {3, 6}, {4, 0}, {5, 2}, {6, 4}, {7, 6}}));
    const latcc::LatticeVerdict v = latcc::decide_latticeness(code, cap);
    add_check(cs, "containment chain fails",
              v.precondition_held && !*v.precondition_held);
    add_check(cs, "closure oracle still certifies a lattice",
              v.is_lattice.value_or(false) && v.method == latcc::CheckMethod::brute_force);
  } else if (name == "leech") {
    const latcc::LeechReport rep = latcc::leech_verify();
    bool chain = true;
    for (const auto& c : rep.chain_checks) chain = chain && c.pass;
    add_check(cs, "containment chain and membership checks", chain);
    bool schur = true;
    for (const auto& c : rep.schur_checks) schur = schur && c.pass;
    add_check(cs, "generator-pair Schur closures", schur);
    add_check(cs, "structural check certifies a lattice",
              rep.structural.is_lattice.value_or(false) &&
                  rep.structural.method == latcc::CheckMethod::structural);
    add_check(cs, "min squared norm 32", rep.min_norm.norm_sq == 32,
              "got " + std::to_string(rep.min_norm.norm_sq));
    add_check(cs, "center density exactly 1",
              rep.density.center_num == 1 && rep.density.center_den == 1);
    add_check(cs, "packing density within 1e-5 of 0.001929",
              std::abs(rep.density.packing_density - 0.001929) < 1e-5,
              sig6(rep.density.packing_density));
    add_check(cs, "jointly coded set strictly inside the associated set",
              rep.separation_witnessed);
    add_check(cs, "associated min squared norm 16", rep.associated_min_norm.norm_sq == 16,
              "got " + std::to_string(rep.associated_min_norm.norm_sq));
    add_check(cs, "associated density differs from the published 0.00012",
              std::abs(rep.associated_density.packing_density - kQuotedAssociatedLeechDensity) >
                  1e-5,
              sig6(rep.associated_density.packing_density));
    notes.push_back(associated_density_note(rep.associated_density.packing_density));
  } else {
    throw latcc::Error("unknown example: " + name + " (have ex1, ex2, ex5, leech)");
  }
  return cs;
}

int run_example(const std::string& name, bool as_json) {
  std::vector<std::string> notes;
  const std::vector<ExampleCheck> cs = run_example_checks(name, enum_cap(), notes);
  bool all = true;
  for (const auto& c : cs) all = all && c.pass;

  if (as_json) {
    json j;
    j["schema_version"] = 1;
    j["command"] = "example";
    j["example"] = name;
    json arr = json::array();
    for (const auto& c : cs) {
      json e = {{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      arr.push_back(e);
    }
    j["checks"] = arr;
    j["notes"] = notes;
    j["pass"] = all;
    emit_json(j);
  } else {
    std::cout << "example " << name << ":\n";
    for (const auto& c : cs) {
      std::cout << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
      std::cout << "\n";
    }
    for (const auto& n : notes) std::cout << n << "\n";
    std::cout << (all ? "PASS" : "FAIL") << "  " << name << "\n";
  }
  return all ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- info

int run_info(bool as_json) {
  if (as_json) {
    json j;
    j["schema_version"] = 1;
    j["command"] = "info";
    j["version"] = LATCC_VERSION;
    j["builtins"] = latcc::builtin_names();
    j["enum_cap"] = enum_cap();
    j["methods"] = {"auto", "theorem2", "bruteforce"};
    j["exit_codes"] = {{"ok", kExitOk}, {"negative", kExitNegative},
                       {"undecided", kExitUndecided}, {"input_error", kExitInput}};
    emit_json(j);
  } else {
    std::cout << "latcc " << LATCC_VERSION
              << " - multilevel lattice constellations from binary linear codes\n";
    std::cout << "builtin codes:";
    for (const auto& n : latcc::builtin_names()) std::cout << " " << n;
    std::cout << "\nenumeration cap: " << enum_cap()
              << " coset points (override with LATCC_ENUM_CAP)\n";
    std::cout << "code file format: '#' comments, then 'n=<int> L=<int>', then\n"
              << "'mode=list|gen', then one bitstring of length n*L per line\n";
    std::cout << "exit codes: 0 verified/lattice, 1 negative verdict, 2 undecided or\n"
              << "infeasible, 3 input error\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multilevel lattice constellations from binary linear codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(LATCC_VERSION));

  InputSpec in;
  bool as_json = false;
  std::string method = "auto";
  std::int64_t radius = -1;
  std::string output;
  std::string example_name;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", in.file, "code file (see 'latcc info' for the format)");
    sub->add_option("--builtin", in.builtin, "builtin code: ex1, ex2, ex5, leech, golay24");
    sub->add_flag("--json", as_json, "emit a JSON report");
  };

  CLI::App* check = app.add_subcommand("check", "decide whether the constellation is a lattice");
  add_input(check);
  check->add_option("--method", method, "decision procedure")
      ->check(CLI::IsMember({"auto", "theorem2", "bruteforce"}));

  CLI::App* density = app.add_subcommand("density", "packing density of C* and associated C");
  add_input(density);

  CLI::App* mindist = app.add_subcommand("min-distance", "minimum squared Euclidean distance");
  add_input(mindist);

  CLI::App* construct = app.add_subcommand("construct", "list constellation points in a box");
  add_input(construct);
  construct->add_option("--points", radius, "coordinate bound R; emit points in [-R, R]^n");
  construct->add_option("--output", output, "write the point list to this file");

  CLI::App* example = app.add_subcommand("example", "reproduce a stock example end to end");
  example->add_option("name", example_name, "ex1, ex2, ex5 or leech")->required();
  example->add_flag("--json", as_json, "emit a JSON report");

  CLI::App* leech = app.add_subcommand("leech", "full Leech construction and verification");
  leech->add_flag("--json", as_json, "emit a JSON report");

  CLI::App* info = app.add_subcommand("info", "tool, format and builtin overview");
  info->add_flag("--json", as_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(check)) return run_check(in, method, as_json);
    if (app.got_subcommand(density)) return run_density(in, as_json);
    if (app.got_subcommand(mindist)) return run_min_distance(in, as_json);
    if (app.got_subcommand(construct)) return run_construct(in, radius, output, as_json);
    if (app.got_subcommand(example)) return run_example(example_name, as_json);
    if (app.got_subcommand(leech)) return run_leech(as_json);
    if (app.got_subcommand(info)) return run_info(as_json);
    return kExitInput;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const latcc::EnumerationCapError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const latcc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
