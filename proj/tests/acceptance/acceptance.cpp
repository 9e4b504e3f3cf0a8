// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "grext/classify/classify.hpp"
#include "grext/classify/groupoid_nerve.hpp"
#include "grext/classify/nerve.hpp"
#include "grext/cli/cli.hpp"
#include "grext/cli/problem.hpp"
#include "grext/densegroup/automorphism.hpp"
#include "grext/densegroup/carriere.hpp"
#include "grext/exactnum/pell.hpp"
#include "grext/grpd/suites.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace grext;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
    }
  }
};

int failures = 0;

void criterion(const std::string& id, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool timed = limit_s <= 0 || s < limit_s;
  bool pass = o.pass && timed;
  failures += !pass;
  char timing[64];
  if (limit_s > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s < %g s", s, limit_s);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", s);
  }
  std::cout << id << (pass ? " PASS " : " FAIL ") << o.detail << " (" << timing << ")" << std::endl;
}

std::string cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = run(args, out, err);
  if (code) *code = c;
  return out.str();
}

EmbeddedLattice preset_lattice(const std::string& name) {
  return problem_lattice(parse_problem(problem_preset(name)));
}

}  // namespace

int main() {
  criterion("AC1", 1.0, [] {
    Outcome o;
    int code = 0;
    auto j = json::parse(cli({"aut-rho", "-i", "preset:lsqrt2"}, &code))["results"];
    o.require(code == 0, "exit code");
    o.require(j["name"] == "Z_2 x Z", "name");
    o.require(j["generators"] == json::array({"-1", "1+θ"}), "generators");
    o.require(j["matrices"].size() == 2 && j["matrices"][1] == "[[1,2],[1,1]]", "T");
    o.require(j["complete"] == true, "complete");
    if (o.pass) o.detail = "lsqrt2: Z_2 x Z, generators -1 and 1+θ, T = [[1,2],[1,1]]";
    return o;
  });

  criterion("AC2", 1.0, [] {
    Outcome o;
    std::string shown;
    for (long D : {2, 3, 5, 6, 7, 10}) {
      auto s = pell_fundamental_unit(Integer(D));
      auto b = oracle::pell_bruteforce(D, 1000);
      o.require(b && s.x == b->x && s.y == b->y && s.norm == b->norm, "D=" + std::to_string(D));
      shown += " " + std::to_string(D) + ":(" + s.x.get_str() + "," + s.y.get_str() + "," +
               std::to_string(s.norm) + ")";
    }
    auto two = pell_fundamental_unit(2);
    o.require(two.x == 1 && two.y == 1 && two.norm == -1, "D=2 is (1,1,-1)");
    if (o.pass) o.detail = "Pell equals brute force (y <= 1000):" + shown;
    return o;
  });

  criterion("AC3", 5.0, [] {
    Outcome o;
    auto L = preset_lattice("cubic");
    auto aut = aut_rho(L);
    auto found = oracle::rank2_automorphisms(L, 10);
    std::sort(found.begin(), found.end());
    o.require(aut.name == "Z_2", "name " + aut.name);
    o.require(found == std::vector<std::array<long, 4>>{{-1, 0, 0, -1}, {1, 0, 0, 1}}, "oracle set");
    // A multiplier field F has [F:Q] dividing both the field degree and the rank.
    auto O = multiplier_ring(L);
    o.require(O.rank() == 1 && std::gcd(L.field().degree(), static_cast<int>(L.rank())) == 1,
              "degree divisibility");
    if (o.pass) o.detail = "cubic: Aut(ρ) = Z_2; B=10 oracle finds only ±I; multiplier ring = Z, gcd(3,2) = 1";
    return o;
  });

  criterion("AC4", 30.0, [] {
    Outcome o;
    auto L = preset_lattice("lsqrt2");
    auto aut = aut_rho(L);
    auto r = run_grpd_suite(L, aut, 10000, 7);
    std::size_t total = 0, checks = 0;
    for (const auto& c : r.checks) {
      o.require(c.failures == 0, c.name + ": " + c.first_failure);
      o.require(c.samples >= 10000 || c.name == "crossed_module_finite", c.name + " sample count");
      total += c.samples;
      ++checks;
    }
    if (o.pass)
      o.detail = std::to_string(checks) + " identity checks, " + std::to_string(total) + " seeded samples, 0 failures";
    return o;
  });

  criterion("AC5", 1.0, [] {
    Outcome o;
    auto r = carriere_family({2, 1, 1, 1});
    const auto& f = r.field;
    auto q = [&](long a, long b) { return FieldElement(f, std::vector<Rational>{Rational(a, 2), Rational(b, 2)}); };
    auto c = [&](long x) { return FieldElement::from_rational(f, Rational(x)); };
    o.require(r.disc == 5, "field Q(√5)");
    o.require(r.lambda1 == q(3, -1) && r.lambda2 == q(3, 1), "eigenvalues (3±√5)/2");
    o.require(r.lambda1 * r.lambda2 == c(1), "λ₁λ₂ = 1");
    for (auto [lam, V] : {std::pair{r.lambda1, r.V1}, std::pair{r.lambda2, r.V2}}) {
      o.require(c(2) * V[0] + c(1) * V[1] == lam * V[0] && c(1) * V[0] + c(1) * V[1] == lam * V[1], "A·V = λV");
    }
    auto w = ga_word_eval(r, "A V1 A^-1");
    o.require(w.a == c(1) && w.b == r.lambda1 * r.ga_V1.b, "A V1 A^-1 scales by λ₁");
    if (o.pass) o.detail = "λ = (3±√5)/2, λ₁λ₂ = 1, A·Vᵢ = λᵢVᵢ exact, A V₁ A⁻¹ = x + λ₁·ℓ₁";
    return o;
  });

  criterion("AC6", 60.0, [] {
    Outcome o;
    constexpr std::size_t kUnionFindBudget = 2000000;
    std::size_t compared = 0, both = 0;
    for (const char* name : {"circle", "sphere", "torus"}) {
      auto X = nerve_preset(name);
      for (const auto& H : FiniteGroup::small_groups()) {
        const std::string pair = std::string(name) + "/" + H.name();
        auto ours = classify_finite(X, H);
        auto burnside = oracle::cech_orbits_burnside(X, H);
        o.require(ours.pointed == burnside.pointed && ours.free == burnside.free, pair + " (Burnside)");
        if (auto uf = oracle::cech_orbits(X, H, kUnionFindBudget)) {
          o.require(ours.pointed == uf->pointed && ours.free == uf->free, pair + " (union-find)");
          ++both;
        }
        ++compared;
      }
    }
    auto s3 = classify_finite(nerve_preset("circle"), FiniteGroup::by_name("S3"));
    o.require(s3.pointed == 6 && s3.free == 3, "S¹/S3 = 6 pointed, 3 free");
    if (o.pass) {
      o.detail = std::to_string(compared) + " nerve/group pairs (|G| <= 8) agree with Burnside orbit counts, " +
                 std::to_string(both) + " also with union-find orbits, pointed and free; S¹/S3 = 6, 3";
    }
    return o;
  });

  criterion("AC7", 30.0, [] {
    Outcome o;
    auto S = nerve_preset("sphere");
    for (int m : {2, 3}) {
      auto r = crossed_module_h1(S, FiniteCrossedModule::to_trivial(FiniteGroup::cyclic(m)));
      auto snf = simplicial_cohomology(S, 2, m).order();
      o.require(r.classes == static_cast<std::size_t>(m), "Z_" + std::to_string(m) + " class count");
      o.require(snf && *snf == m, "SNF H²(S², Z_" + std::to_string(m) + ")");
      o.require(oracle::h2_order_cochains(S, m) == static_cast<std::size_t>(m), "cochain enumeration");
    }
    if (o.pass) o.detail = "Z_2 -> 1: 2 classes, Z_3 -> 1: 3 classes = |H²(S², Z_m)| by SNF and by cochains";
    return o;
  });

  criterion("AC8", 0, [] {
    Outcome o;
    auto h = json::parse(cli({"homotopy", "-i", "preset:lsqrt2", "--g", "R", "--max", "5"}))["results"];
    o.require(h["pi_X"] == json::array({"Z_2 x Z", "Z^2", "0", "0", "0"}), "π_i(X) = " + h["pi_X"].dump());
    o.require(h["pi_B"][0] == "Z^2", "π₁(B(Γ⋉G))");
    auto p = json::parse(cli({"postnikov", "-i", "preset:lsqrt2", "--g", "R"}))["results"];
    const std::string summary = p["summary"];
    o.require(summary.rfind("X = X_(2)", 0) == 0, "postnikov: " + summary);
    if (o.pass) o.detail = "π(X) = [Z_2 x Z, Z^2, 0, 0, 0]; π₁(B(Γ⋉G)) = Z^2; " + summary;
    return o;
  });

  criterion("AC9", 30.0, [] {
    Outcome o;
    for (const char* name : {"Z2", "Z3", "S3"}) {
      auto G = FiniteGroup::by_name(name);
      auto r = groupoid_nerve(FiniteAction::point(G));
      bool ok = r.components.size() == 1 && r.components[0].order == static_cast<std::size_t>(G.order()) &&
                r.components[0].abelian_match && r.components[0].isomorphism_certified;
      o.require(ok, name);
    }
    if (o.pass) o.detail = "π₁ of the 2-truncated nerve ≅ Z2, Z3, S3: order, abelianization and explicit isomorphism";
    return o;
  });

  criterion("AC10", 0, [] {
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"aut-rho", "-i", "preset:lsqrt2"},
        {"aut-rho", "-i", "preset:cubic"},
        {"pell", "--d", "2"},
        {"pell", "--d", "10"},
        {"verify", "-i", "preset:lsqrt2", "--suite", "all", "--samples", "10000", "--seed", "7"},
        {"carriere", "--matrix", "2,1,1,1", "--word", "A V1 A^-1"},
        {"classify", "-i", "preset:lsqrt2", "-n", "preset:circle", "--mode", "pointed-iso", "--quotient", "3"},
        {"classify", "-i", "preset:lsqrt2", "-n", "preset:sphere", "--mode", "equivalence"},
        {"homotopy", "-i", "preset:lsqrt2", "--g", "R", "--max", "5"},
        {"postnikov", "-i", "preset:lsqrt2", "--g", "R"},
        {"nerve", "--group", "S3"},
        {"nerve", "--preset", "torus"},
    };
    for (const auto& c : commands) {
      auto first = cli(c);
      auto threaded = c;
      threaded.insert(threaded.begin(), {"--threads", "2"});
      o.require(!first.empty() && first == cli(c) && first == cli(threaded), c[0]);
    }
    if (o.pass) o.detail = std::to_string(commands.size()) + " commands byte-identical across repeated and threaded runs";
    return o;
  });

  return failures ? 1 : 0;
}
