// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "support.hpp"

#include <gcoh/cochain.hpp>
#include <gcoh/correspondence.hpp>
#include <gcoh/groupoid.hpp>
#include <gcoh/normal_form.hpp>
#include <gcoh/simplicial.hpp>
#include <gcoh/skew_product.hpp>
#include <gcoh/torus.hpp>
#include <gcoh/tower.hpp>
#include <gcoh/twist.hpp>

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace gcoh;
using namespace gcoh::testing;
using Json = nlohmann::json;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs the installed executable and returns stdout; the exit code goes to `code`.
std::string run_tool(const std::string& args, int& code) {
  const std::string cmd = std::string(GCOH_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Failure("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

IntMatrix diag(std::initializer_list<long> d) {
  IntMatrix m = IntMatrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  Index i = 0;
  for (long v : d) m(i, i) = v, ++i;
  return m;
}

FiniteSystem random_system(Rng& rng, int max_points) {
  const auto n = rng.uniform(1, max_points);
  std::vector<Index> sigma;
  for (i64 i = 0; i < n; ++i) sigma.push_back(static_cast<Index>(rng.uniform(0, n - 1)));
  return FiniteSystem::from_map(sigma);
}

void expect_report(const VerificationReport& r, const std::string& context) {
  for (const auto& l : r.laws)
    expect(l.passed, context + ": law " + l.name + " failed at " + l.counterexample.value_or("?"));
}

SimplicialComplex random_complex(Rng& rng) {
  const Index nv = rng.uniform(1, 6);
  std::vector<Simplex> facets;
  const int count = static_cast<int>(rng.uniform(1, 6));
  for (int f = 0; f < count; ++f) {
    Simplex s;
    for (Index v = 0; v < nv; ++v)
      if (rng.uniform(0, 2) == 0) s.push_back(v);
    if (!s.empty() && s.size() <= 4) facets.push_back(s);
  }
  return SimplicialComplex::from_facets(nv, facets);
}

// ---------------------------------------------------------------------------

std::string ac1() {
  const auto start = Clock::now();
  const std::vector<std::pair<long, long>> pairs{{2, 3}, {2, 5}, {3, 5}, {5, 2}, {2, 7}};
  for (const auto& [p, q] : pairs) {
    int code = 0;
    const std::string out = run_tool("solenoid --p " + std::to_string(p) + " --q " + std::to_string(q), code);
    expect(code == 0, "exit code " + std::to_string(code) + " for p=" + std::to_string(p));
    const Json j = Json::parse(out);
    const long d = std::abs(p - q);
    const std::string h2 = d == 1 ? "0" : "Z/" + std::to_string(d);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    expect(j.at("H0") == "Z" && j.at("H1") == "Z", tag + " low degrees");
    expect(j.at("H2") == h2, tag + " H2 = " + j.at("H2").dump());
    for (int k = 3; j.contains("H" + std::to_string(k)); ++k) expect(j.at("H" + std::to_string(k)) == "0", tag + " high degree");
    expect(j.contains("H3"), tag + " H3 missing");
    expect(j.at("brauer") == "0", tag + " brauer");
  }
  const double t = seconds_since(start);
  expect(t < 1.0, "took " + std::to_string(t) + " s");
  std::ostringstream os;
  os << "5 solenoids, " << t << " s";
  return os.str();
}

std::string ac2() {
  double worst = 0;
  auto timed = [&](const IntMatrix& r) {
    const auto start = Clock::now();
    auto table = torus_groupoid_cohomology(TorusEndo(r));
    worst = std::max(worst, seconds_since(start));
    for (const auto& h : table.degrees) expect(h.split_certified, "torus degree left unsplit");
    return table;
  };
  for (long d = -9; d <= 9; ++d) {
    if (std::abs(d) < 2) continue;
    const auto t = timed(diag({d}));
    expect(t.degrees[1].to_string() == "Z", "d=" + std::to_string(d) + " H1 " + t.degrees[1].to_string());
    const long m = std::abs(d - 1);
    expect(*t.degrees[2].split_sum == (m == 1 ? FgAbGroup::trivial() : FgAbGroup::cyclic(m)),
           "d=" + std::to_string(d) + " H2 " + t.degrees[2].to_string());
  }
  IntMatrix r2(2, 2);
  r2 << 2, 1, 0, 2;
  expect(timed(r2).brauer.to_string() == "Z/3", "[[2,1],[0,2]] brauer");
  expect(*timed(diag({2, 2, 2})).brauer.split_sum == FgAbGroup::from_factors(0, {3, 3, 3}), "2I brauer");
  const auto b4 = timed(diag({1, 1, 1, 2})).brauer;
  expect(b4.kernel_part.free_rank() + b4.cokernel_part.free_rank() >= 1, "diag(1,1,1,2) brauer " + b4.to_string());
  expect(worst < 1.0, "slowest case " + std::to_string(worst) + " s");
  std::ostringstream os;
  os << "16 one-dimensional + 3 higher cases, slowest " << worst << " s; diag(1,1,1,2) gives " << b4.to_string();
  return os.str();
}

std::string ac3() {
  const auto start = Clock::now();
  Rng rng(3003);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 4, -3, 3);
    for (Index n : {2, 3})
      expect(exterior_power(m, n) == wedge_by_expansion(m, n), "mismatch at trial " + std::to_string(trial));
  }
  const double t = seconds_since(start);
  expect(t < 5.0, "took " + std::to_string(t) + " s");
  std::ostringstream os;
  os << "100 matrices x 2 degrees, " << t << " s";
  return os.str();
}

std::string ac4() {
  Rng rng(4004);
  for (int trial = 0; trial < 500; ++trial) {
    const Index rows = rng.uniform(1, 3), cols = rng.uniform(1, 3);
    const IntMatrix m = random_matrix(rng, rows, cols, -2, 2);
    const auto got = shape_of(cokernel(m));
    const auto want = cokernel_by_enumeration(m);
    expect(got == want, "trial " + std::to_string(trial) + ": " + cokernel(m).to_string());
  }
  return "500 sampled matrices";
}

std::string ac5() {
  Rng rng(5005);
  int degrees = 0, unsplit = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto k = random_complex(rng);
    const auto c = cochain_complex(k);
    const Index top = c.top_degree() + 1;
    const auto ss = induced_on_cohomology(CochainMap::identity(c), top);
    for (Index n = 0; n <= top; ++n) {
      const auto h = groupoid_cohomology(ss, n);
      const FgAbGroup hn = n <= c.top_degree() ? cohomology(c, n).group : FgAbGroup::trivial();
      const FgAbGroup hn1 = n > 0 && n - 1 <= c.top_degree() ? cohomology(c, n - 1).group : FgAbGroup::trivial();
      const std::string tag = "complex " + std::to_string(trial) + " degree " + std::to_string(n);
      expect(h.kernel_part == hn, tag + " kernel end");
      expect(h.cokernel_part == hn1, tag + " cokernel end");
      if (h.split_certified)
        expect(*h.split_sum == direct_sum(hn, hn1), tag + " split sum");
      else
        ++unsplit;
      ++degrees;
    }
  }
  std::ostringstream os;
  os << "20 complexes, " << degrees << " degrees, " << unsplit << " reported as two ends";
  return os.str();
}

std::string ac6() {
  std::vector<Simplex> faces;
  for (Index i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    faces.push_back(a);
    faces.push_back(b);
  }
  const auto torus = SimplicialComplex::from_facets(7, faces);
  const auto c = cochain_complex(torus);
  expect(cohomology(c, 0).group == FgAbGroup::free(1), "H0");
  expect(cohomology(c, 1).group == FgAbGroup::free(2), "H1");
  expect(cohomology(c, 2).group == FgAbGroup::free(1), "H2");
  for (Index d : {2, 3}) {
    const auto cm = circle_map(4, d);
    const AbHom h1 = induced_map(cm.self, 1);
    expect(h1.source() == FgAbGroup::free(1) && h1.matrix()(0, 0) == static_cast<long>(d),
           "degree " + std::to_string(d) + " acts as " + h1.matrix()(0, 0).get_str());
  }
  return "torus (Z, Z^2, Z); circle maps x2, x3";
}

std::string ac7() {
  const auto start = Clock::now();
  Rng rng(7007);
  const std::vector<FgAbGroup> coefficients{FgAbGroup::free(1), FgAbGroup::cyclic(2), FgAbGroup::cyclic(3),
                                            FgAbGroup::from_factors(1, {2}), FgAbGroup::from_factors(0, {2, 4})};
  std::size_t checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_system(rng, 6);
    const Truncation t(s, rng.uniform(0, 3), rng.uniform(0, 3));
    const std::string tag = "system " + std::to_string(trial);
    const auto laws = verify_groupoid_laws(t);
    expect_report(laws, tag);
    const auto& A = coefficients[static_cast<std::size_t>(rng.uniform(0, static_cast<i64>(coefficients.size()) - 1))];
    std::vector<IntVector> g;
    for (Index x = 0; x < s.size(); ++x) {
      IntVector v(A.generator_count());
      for (Index i = 0; i < v.size(); ++i) v(i) = static_cast<long>(rng.uniform(-4, 4));
      g.push_back(v);
    }
    const auto ext = extend_cocycle(t, A, g);
    expect_report(ext.report, tag + " cocycle");
    for (const auto& r : {laws, ext.report})
      for (const auto& l : r.laws) checks += l.checked;
  }
  const double t = seconds_since(start);
  expect(t < 30.0, "took " + std::to_string(t) + " s");
  std::ostringstream os;
  os << "200 systems, " << checks << " law instances, " << t << " s";
  return os.str();
}

std::string ac8() {
  Rng rng(8008);
  std::size_t checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_system(rng, 5);
    const int n = std::vector<int>{2, 3, 4, 6}[static_cast<std::size_t>(rng.uniform(0, 3))];
    std::vector<std::vector<int>> labeling;
    for (Index x = 0; x < s.size(); ++x) {
      std::vector<int> p(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
      for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.uniform(0, i))]);
      labeling.push_back(p);
    }
    const Twist tw(s, FiberBundle(n, labeling));
    const Truncation t(s, rng.uniform(0, 2), rng.uniform(0, 3));
    const auto r = verify_twist(tw, t, rng.raw());
    expect_report(r, "sample " + std::to_string(trial));
    for (const auto& l : r.laws) checks += l.checked;
  }
  std::ostringstream os;
  os << "200 samples, " << checks << " law instances";
  return os.str();
}

std::string ac9() {
  Rng rng(9009);
  const auto groups = small_groups();
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_system(rng, 5);
    const auto& G = groups[static_cast<std::size_t>(rng.uniform(0, static_cast<i64>(groups.size()) - 1))];
    std::vector<int> c;
    for (Index x = 0; x < s.size(); ++x) c.push_back(static_cast<int>(rng.uniform(0, G.order() - 1)));
    const auto sp = skew_product(s, G, c, rng.uniform(0, 2), rng.uniform(0, 3));
    expect_report(sp.report, "sample " + std::to_string(trial) + " over " + G.name());
    for (const char* law : {"cocycle-identity", "bijection"})
      expect(sp.report.find(law) && sp.report.find(law)->passed, std::string("missing law ") + law);
  }
  return "50 skew products over groups of order <= 6";
}

std::string ac10() {
  Rng rng(10010);
  for (int trial = 0; trial < 50; ++trial)
    expect_report(correspondence_check(random_system(rng, 5), rng.raw()), "system " + std::to_string(trial));
  return "50 systems";
}

std::string ac11() {
  const FgAbGroup Z = FgAbGroup::free(1);
  auto one = [](long v) {
    IntMatrix m(1, 1);
    m(0, 0) = v;
    return m;
  };
  for (const auto& g : {Z, FgAbGroup::from_factors(1, {4}), FgAbGroup::cyclic(6)}) {
    const Tower t({g, g, g}, {AbHom::identity(g), AbHom::identity(g)}, TailPolicy::Stabilized);
    const auto lim = inverse_limit(t);
    expect(lim.conclusive && lim.group == g, "constant tower limit for " + g.to_string());
    expect(lim_one(t).zero, "constant tower lim1 for " + g.to_string());
  }
  for (long p : {2, 3, 5}) {
    const Tower t({Z, Z, Z}, {AbHom(Z, Z, one(p)), AbHom(Z, Z, one(p))}, TailPolicy::Stabilized);
    const auto lim = inverse_limit(t);
    expect(lim.conclusive && lim.group.is_trivial(), "x" + std::to_string(p) + " limit");
    const auto l1 = lim_one(t);
    expect(!l1.zero && l1.first_uncertified_stage >= 0, "x" + std::to_string(p) + " lim1 should be unknown");
    const auto& idx = l1.stages.at(static_cast<std::size_t>(l1.first_uncertified_stage)).indices;
    expect(idx.size() >= 3, "witness too short");
    BigInt want = 1;
    for (const auto& s : idx) {
      expect(s == want.get_str(), "witness index " + s + ", expected " + want.get_str());
      want *= p;
    }
  }
  // surjective towers: finite 2-adic quotients, and projections off a free summand
  std::vector<FgAbGroup> stages;
  std::vector<AbHom> maps;
  for (int k = 0; k <= 3; ++k) stages.push_back(FgAbGroup::cyclic(BigInt(2) << k));
  for (int k = 0; k < 3; ++k) maps.emplace_back(stages[static_cast<std::size_t>(k + 1)], stages[static_cast<std::size_t>(k)], one(1));
  expect(lim_one(Tower(stages, maps, TailPolicy::Stabilized)).zero, "2-adic tower");
  const auto z2 = FgAbGroup::free(2);
  IntMatrix proj(1, 2);
  proj << 1, 0;
  expect(lim_one(Tower({Z, z2, z2}, {AbHom(z2, Z, proj), AbHom::identity(z2)}, TailPolicy::Stabilized)).zero,
         "projection tower");
  const auto z6 = FgAbGroup::cyclic(6), z3 = FgAbGroup::cyclic(3);
  expect(lim_one(Tower({z3, z6, z6}, {AbHom(z6, z3, one(1)), AbHom::identity(z6)}, TailPolicy::Stabilized)).zero,
         "Z/6 -> Z/3 tower");
  return "3 constant, 3 multiplication, 3 surjective towers";
}

std::string ac12() {
  const std::string swap = R"({"points":["a","b","c"],"sigma":{"a":"b","b":"a","c":"a"}})";
  const std::vector<std::string> jobs{
      "solenoid --p 3 --q 7",
      "torus --matrix " + quoted("[[2,1],[1,3]]"),
      "torus --matrix " + quoted("[[2,1],[0,2]]") + " --format table",
      "simplicial --circle 5 --degree -3",
      "tower --tower " + quoted(R"({"stages":["Z","Z"],"maps":[[[3]]]})"),
      "groupoid-verify --system " + quoted(swap) + " --max-m 2 --max-witness 3",
      "skew --system " + quoted(swap) + " --group S3",
      "twist --system " + quoted(swap) + " --fiber-n 6 --bundle random --seed 11",
      "correspondence --system " + quoted(swap) + " --seed 42",
  };
  for (const auto& args : jobs) {
    int c1 = 0, c2 = 0;
    const std::string a = run_tool(args, c1), b = run_tool(args, c2);
    expect(c1 == 0 && c2 == 0, "nonzero exit for: " + args);
    expect(!a.empty() && a == b, "outputs differ for: " + args);
  }
  return std::to_string(jobs.size()) + " jobs run twice";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"AC1 solenoid table via CLI", ac1},
      {"AC2 torus engine", ac2},
      {"AC3 exterior powers vs multilinear expansion", ac3},
      {"AC4 cokernels vs quotient enumeration", ac4},
      {"AC5 identity map splits into H^n + H^(n-1)", ac5},
      {"AC6 simplicial goldens", ac6},
      {"AC7 groupoid and cocycle laws", ac7},
      {"AC8 twist laws", ac8},
      {"AC9 skew products", ac9},
      {"AC10 correspondence identities", ac10},
      {"AC11 towers", ac11},
      {"AC12 deterministic CLI output", ac12},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    std::string detail;
    bool ok = false;
    try {
      detail = run();
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " : " << detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
