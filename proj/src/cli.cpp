#include <gcoh/cli.hpp>

#include <gcoh/correspondence.hpp>
#include <gcoh/errors.hpp>
#include <gcoh/skew_product.hpp>
#include <gcoh/solenoid.hpp>
#include <gcoh/torus.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace gcoh::cli {

using io::Json;

namespace {

Json group_json(const FgAbGroup& g) { return io::write_group(g); }

void put_table(Json& out, const GroupoidTable& table) {
  Json degrees = Json::array();
  for (const auto& h : table.degrees) {
    out["H" + std::to_string(h.degree)] = h.to_string();
    Json d{{"n", h.degree},
           {"ker", group_json(h.kernel_part)},
           {"coker", group_json(h.cokernel_part)},
           {"split", h.split_certified}};
    if (h.split_sum) d["group"] = group_json(*h.split_sum);
    degrees.push_back(d);
  }
  out["degrees"] = degrees;
  out["brauer"] = table.brauer.to_string();
}

Json chain_json(const StageChain& c) {
  return {{"stage", c.stage},
          {"indices", c.indices},
          {"certified", c.certified},
          {"stable_from", c.stable_from},
          {"certificate", c.certificate}};
}

Json chains_json(const std::vector<StageChain>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(chain_json(c));
  return out;
}

Json limit_json(const LimitResult& r) {
  Json out{{"conclusive", r.conclusive}, {"profinite", r.profinite}, {"stages", chains_json(r.stages)}};
  if (r.conclusive)
    out["group"] = group_json(r.group);
  else
    out["reason"] = r.reason;
  return out;
}

Json lim_one_json(const LimOneResult& r) {
  Json out{{"status", r.zero ? "Zero" : "Unknown"}, {"stages", chains_json(r.stages)}};
  if (r.zero)
    out["certificate"] = r.certificate;
  else {
    out["first_uncertified_stage"] = r.first_uncertified_stage;
    out["reason"] = r.reason;
  }
  return out;
}

long bound(const Json& input, const char* key, long fallback) {
  return input.contains(key) ? io::read_small(input[key], key, 0, 8) : fallback;
}

const Json& require(const Json& input, const char* key) {
  if (!input.contains(key)) throw ValidationError(std::string("input is missing \"") + key + "\"");
  return input[key];
}

// Status from a verification report: a failed law is an internal inconsistency.
int finish(Json& out, const VerificationReport& r) {
  out["laws"] = io::write_report(r);
  out["status"] = r.passed() ? "pass" : "fail";
  return r.passed() ? 0 : 1;
}

int run_torus(const Json& in, Json& out) {
  const TorusEndo e(io::read_matrix(require(in, "matrix"), "matrix"));
  const GroupoidTable direct = torus_groupoid_cohomology(e);
  const auto data = torus_cohomology_data(e);
  const GroupoidTable generic = groupoid_table(data, static_cast<Index>(direct.degrees.size()) - 1);
  for (std::size_t n = 0; n < direct.degrees.size(); ++n)
    if (direct.degrees[n].kernel_part != generic.degrees[n].kernel_part ||
        direct.degrees[n].cokernel_part != generic.degrees[n].cokernel_part)
      throw InternalError("torus: exterior-power path and generic path disagree in degree " + std::to_string(n));
  out["k"] = e.k();
  out["degree"] = e.degree().get_str();
  out["homeomorphism"] = e.homeomorphism();
  if (e.homeomorphism()) out["warning"] = "det R = +-1: sigma is a homeomorphism and the groupoid is a transformation groupoid";
  Json hx = Json::array(), ss = Json::array();
  for (Index n = 0; n <= e.k(); ++n) {
    hx.push_back(group_json(data[static_cast<std::size_t>(n)].source()));
    ss.push_back(io::write_matrix(data[static_cast<std::size_t>(n)].matrix()));
  }
  out["HX"] = hx;
  out["sigma_star"] = ss;
  put_table(out, direct);
  return 0;
}

int run_solenoid(const Json& in, Json& out) {
  const SolenoidTable t = solenoid_table(io::read_integer(require(in, "p"), "p"), io::read_integer(require(in, "q"), "q"));
  out["module"] = t.module.to_string();
  out["sigma1"] = t.sigma1.to_string();
  out["HX"] = t.hx;
  out["sigma_star"] = t.sigma_star;
  put_table(out, t.gamma);
  return 0;
}

int run_simplicial(const Json& in, Json& out) {
  SimplicialComplex k;
  std::optional<CochainMap> self;
  if (in.contains("circle")) {
    const long n = io::read_small(in["circle"], "circle", 3, 100000);
    const long d = io::read_small(require(in, "degree"), "degree", -1000, 1000);
    CircleMap cm = circle_map(n, d);
    k = cm.base;
    self = cm.self;
  } else {
    k = io::read_complex(require(in, "complex"));
    SimplicialMap f = SimplicialMap::identity(k);
    if (in.contains("map")) {
      const Json& m = in["map"];
      if (!m.is_object()) throw ValidationError("map: expected an object vertex -> vertex");
      std::map<std::string, std::string> vm;
      for (const auto& [a, b] : m.items()) {
        if (!b.is_string()) throw ValidationError("map: image of '" + a + "' must be a vertex label");
        vm[a] = b.get<std::string>();
      }
      f = SimplicialMap::from_labels(k, k, vm);
    }
    self = induced_cochain_map(f);
  }
  const auto ss = induced_on_cohomology(*self, 3);
  const Index dim = std::max<Index>(k.dimension(), 0);
  Json hx = Json::array(), mats = Json::array();
  for (Index n = 0; n <= k.dimension(); ++n) {
    hx.push_back(group_json(ss[static_cast<std::size_t>(n)].source()));
    mats.push_back(io::write_matrix(ss[static_cast<std::size_t>(n)].matrix()));
  }
  out["vertices"] = k.vertex_count();
  out["dimension"] = k.dimension();
  out["HX"] = hx;
  out["sigma_star"] = mats;
  put_table(out, groupoid_table(ss, std::max<Index>(dim + 1, 3)));
  return 0;
}

int run_tower(const Json& in, Json& out) {
  out["assumption"] = "the stage maps of the underlying system are onto, so the groupoid reduces to the base stage; not checked";
  if (in.contains("degrees")) {
    const Json& ds = in["degrees"];
    if (!ds.is_array() || ds.empty()) throw ValidationError("tower: degrees must be a nonempty array of towers");
    std::vector<Tower> towers;
    for (const auto& t : ds) towers.push_back(io::read_tower(t));
    Json degrees = Json::array();
    for (Index n = 0; n < static_cast<Index>(towers.size()); ++n) {
      const TowerCohomology h = tower_groupoid_cohomology(towers, n);
      Json d{{"n", n}, {"lim", limit_json(h.quotient)}, {"lim1_previous", lim_one_json(h.sub)},
             {"determined", h.group_determined}};
      if (h.group) d["group"] = group_json(*h.group);
      out["H" + std::to_string(n)] = h.group ? h.group->to_string() : std::string("undetermined");
      degrees.push_back(d);
    }
    out["degrees"] = degrees;
    return 0;
  }
  const Tower t = io::read_tower(in);
  out["length"] = t.length();
  out["tail"] = to_string(t.tail());
  out["limit"] = limit_json(inverse_limit(t));
  out["lim1"] = lim_one_json(lim_one(t));
  return 0;
}

std::vector<IntVector> read_cocycle_values(const Json& in, const FiniteSystem& sys, const FgAbGroup& a,
                                           std::mt19937_64& rng) {
  std::vector<IntVector> g;
  for (Index x = 0; x < sys.size(); ++x) {
    IntVector v = IntVector::Zero(a.generator_count());
    if (in.contains("cocycle")) {
      const Json& c = in["cocycle"];
      if (!c.is_object() || !c.contains(sys.label(x)))
        throw ValidationError("cocycle: expected a value for every point, missing '" + sys.label(x) + "'");
      const Json& val = c[sys.label(x)];
      if (val.is_array()) {
        if (static_cast<Index>(val.size()) != a.generator_count())
          throw ValidationError("cocycle: value at '" + sys.label(x) + "' has the wrong number of coordinates");
        for (Index i = 0; i < v.size(); ++i) v(i) = io::read_integer(val[static_cast<std::size_t>(i)], "cocycle");
      } else if (a.generator_count() == 1) {
        v(0) = io::read_integer(val, "cocycle");
      } else {
        throw ValidationError("cocycle: coefficients have several generators, give arrays");
      }
    } else {
      for (Index i = 0; i < v.size(); ++i) v(i) = static_cast<long>(rng() % 7) - 3;
    }
    g.push_back(v);
  }
  return g;
}

int run_groupoid_verify(const Json& in, const std::uint64_t seed, Json& out) {
  const FiniteSystem sys = io::read_system(require(in, "system"));
  const Truncation t(sys, bound(in, "max_m", 1), bound(in, "max_witness", 3));
  const FgAbGroup a = in.contains("coefficients") ? io::read_group(in["coefficients"], "coefficients") : FgAbGroup::free(1);
  std::mt19937_64 rng(seed);
  const auto g = read_cocycle_values(in, sys, a, rng);
  VerificationReport report = verify_groupoid_laws(t);
  const CocycleExtension ext = extend_cocycle(t, a, g);
  report.append(ext.report);

  Json els = Json::array(), values = Json::object(), gv = Json::object();
  for (std::size_t i = 0; i < t.size(); ++i) {
    els.push_back(describe(sys, t.elements()[i]));
    values[describe(sys, t.elements()[i])] = io::write_vector(ext.values[i]);
  }
  for (Index x = 0; x < sys.size(); ++x) gv[sys.label(x)] = io::write_vector(ext.generator_values[static_cast<std::size_t>(x)]);
  out["elements"] = t.size();
  out["truncation"] = els;
  out["bounds"] = {{"max_m", t.max_abs_m()}, {"max_witness", t.max_witness()}};
  out["cocycle"] = {{"coefficients", group_json(a)}, {"generator_values", gv}, {"values", values}};
  return finish(out, report);
}

int run_skew(const Json& in, const std::uint64_t seed, Json& out) {
  const FiniteSystem sys = io::read_system(require(in, "system"));
  const FiniteGroup group = in.contains("group") ? io::read_finite_group(in["group"]) : FiniteGroup::cyclic(2);
  std::mt19937_64 rng(seed);
  std::vector<int> c;
  Json cj = Json::object();
  for (Index x = 0; x < sys.size(); ++x) {
    int v;
    if (in.contains("cocycle")) {
      const Json& cc = in["cocycle"];
      if (!cc.is_object() || !cc.contains(sys.label(x)))
        throw ValidationError("cocycle: expected a group element for every point, missing '" + sys.label(x) + "'");
      v = static_cast<int>(io::read_small(cc[sys.label(x)], "cocycle value", 0, group.order() - 1));
    } else {
      v = static_cast<int>(rng() % static_cast<std::uint64_t>(group.order()));
    }
    c.push_back(v);
    cj[sys.label(x)] = v;
  }
  const long M = bound(in, "max_m", 1), W = bound(in, "max_witness", 3);
  const SkewProduct sp = skew_product(sys, group, c, M, W);
  out["group"] = group.name();
  out["group_order"] = group.order();
  out["cocycle"] = cj;
  out["product_points"] = sp.system.size();
  out["elements"] = Truncation(sp.system, M, W).size();
  out["bounds"] = {{"max_m", M}, {"max_witness", W}};
  return finish(out, sp.report);
}

int run_twist(const Json& in, const std::uint64_t seed, Json& out) {
  const FiniteSystem sys = io::read_system(require(in, "system"));
  const int n = static_cast<int>(in.contains("n") ? io::read_small(in["n"], "fiber n", 1, 64) : 2);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> labeling;
  const Json bundle = in.value("bundle", Json("trivial"));
  std::string kind = "table";
  if (bundle.is_string() && (bundle == "trivial" || bundle == "random")) {
    kind = bundle.get<std::string>();
    for (Index x = 0; x < sys.size(); ++x) {
      std::vector<int> p(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
      if (kind == "random") std::shuffle(p.begin(), p.end(), rng);
      labeling.push_back(p);
    }
  } else if (bundle.is_object()) {
    for (Index x = 0; x < sys.size(); ++x) {
      if (!bundle.contains(sys.label(x)) || !bundle[sys.label(x)].is_array())
        throw ValidationError("bundle: expected a labeling for every point, missing '" + sys.label(x) + "'");
      std::vector<int> p;
      for (const auto& v : bundle[sys.label(x)]) p.push_back(static_cast<int>(io::read_small(v, "bundle label", 0, n - 1)));
      labeling.push_back(p);
    }
  } else {
    throw ValidationError("bundle: expected \"trivial\", \"random\" or {point: [labels]}");
  }
  const Twist tw(sys, FiberBundle(n, labeling));
  const long M = bound(in, "max_m", 1), W = bound(in, "max_witness", 3);
  const Truncation t(sys, M, W);
  Json lab = Json::object();
  for (Index x = 0; x < sys.size(); ++x) lab[sys.label(x)] = labeling[static_cast<std::size_t>(x)];
  out["n"] = n;
  out["bundle"] = {{"kind", kind}, {"labeling", lab}};
  out["elements"] = t.size();
  out["bounds"] = {{"max_m", M}, {"max_witness", W}};
  return finish(out, verify_twist(tw, t, seed));
}

int run_correspondence(const Json& in, const std::uint64_t seed, Json& out) {
  const FiniteSystem sys = io::read_system(require(in, "system"));
  const int samples = static_cast<int>(in.contains("samples") ? io::read_small(in["samples"], "samples", 0, 32) : 3);
  Json relation = Json::array();
  for (Index x = 0; x < sys.size(); ++x)
    for (Index y = 0; y < sys.size(); ++y)
      if (in_relation(sys, x, y)) relation.push_back({sys.label(x), sys.label(y)});
  out["relation"] = relation;
  out["samples"] = samples;
  return finish(out, correspondence_check(sys, seed, samples));
}

int dispatch(const JobSpec& job, Json& out) {
  const Json& in = job.input;
  const std::string& s = job.subcommand;
  if (s == "torus") return run_torus(in, out);
  if (s == "solenoid") return run_solenoid(in, out);
  if (s == "simplicial") return run_simplicial(in, out);
  if (s == "tower") return run_tower(in, out);
  if (s == "groupoid-verify") return run_groupoid_verify(in, job.seed, out);
  if (s == "skew") return run_skew(in, job.seed, out);
  if (s == "twist") return run_twist(in, job.seed, out);
  if (s == "correspondence") return run_correspondence(in, job.seed, out);
  throw ValidationError("unknown subcommand '" + s + "'");
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_table(const Json& report) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& [k, v] : report.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : report.items()) {
    if (k == "laws") continue;
    os << std::left << std::setw(static_cast<int>(width) + 2) << k;
    os << (v.is_primitive() ? scalar_text(v) : v.dump()) << "\n";
  }
  if (report.contains("laws"))
    for (const auto& law : report["laws"]) {
      os << "  " << std::left << std::setw(24) << law["law"].get<std::string>()
         << (law["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << law["checked"].dump() << " checked";
      if (!law["counterexample"].is_null()) os << "  counterexample " << law["counterexample"].get<std::string>();
      os << "\n";
    }
  return os.str();
}

std::string render(const Json& report, const std::string& format) {
  if (format == "table") return render_table(report);
  return report.dump(2) + "\n";
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"torus",           "solenoid", "simplicial", "tower",
                                              "groupoid-verify", "skew",     "twist",      "correspondence"};
  return names;
}

Json canonical_input(const Json& input) {
  if (input.is_number_integer()) return input.dump();
  if (input.is_number()) throw ValidationError("input contains a non-integer number: " + input.dump());
  if (input.is_array()) {
    Json out = Json::array();
    for (const auto& v : input) out.push_back(canonical_input(v));
    return out;
  }
  if (input.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : input.items()) out[k] = canonical_input(v);
    return out;
  }
  return input;
}

std::string cache_key(const JobSpec& job) {
  Json key{{"version", GCOH_VERSION},
           {"subcommand", job.subcommand},
           {"input", canonical_input(job.input)},
           {"seed", std::to_string(job.seed)},
           {"format", job.format}};
  return key.dump();
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

JobResult run_job(const JobSpec& job) {
  Json report{{"version", GCOH_VERSION}, {"subcommand", job.subcommand}, {"seed", std::to_string(job.seed)}};
  int code = 0;
  try {
    if (job.format != "json" && job.format != "table")
      throw ValidationError("format must be json or table, got '" + job.format + "'");
    if (std::find(subcommands().begin(), subcommands().end(), job.subcommand) == subcommands().end())
      throw ValidationError("unknown subcommand '" + job.subcommand + "'");
    JobSpec canonical = job;
    canonical.input = canonical_input(job.input);
    report["input"] = canonical.input;
    code = dispatch(canonical, report);
  } catch (const ValidationError& e) {
    code = 2;
    report["status"] = "invalid";
    report["error"] = e.what();
  } catch (const InternalError& e) {
    code = 1;
    report["status"] = "internal-error";
    report["error"] = e.what();
  } catch (const std::exception& e) {
    // anything else escaping an engine breaks its contract
    code = 1;
    report["status"] = "internal-error";
    report["error"] = e.what();
  }
  if (!report.contains("status")) report["status"] = "ok";
  report["exit_code"] = code;
  return {code, render(report, job.format == "table" ? "table" : "json")};
}

namespace {

std::optional<JobResult> read_cache(const std::filesystem::path& file, const std::string& key, std::ostream& log,
                                    std::mutex& log_mutex) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const Json entry = Json::parse(buf.str());
    if (entry.at("key").get<std::string>() != key) throw std::runtime_error("key mismatch");
    return JobResult{entry.at("exit_code").get<int>(), entry.at("output").get<std::string>()};
  } catch (const std::exception& e) {
    std::lock_guard<std::mutex> lock(log_mutex);
    log << "warning: cache entry " << file.string() << " is corrupt (" << e.what() << "), recomputing\n";
    return std::nullopt;
  }
}

void write_cache(const std::filesystem::path& file, const std::string& key, const JobResult& r) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::ostringstream tmp_name;
  tmp_name << file.filename().string() << ".tmp." << std::this_thread::get_id();
  const auto tmp = file.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // an unwritable cache only costs recomputation
    out << Json{{"key", key}, {"exit_code", r.exit_code}, {"output", r.output}}.dump();
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

JobResult cached(const JobSpec& job, const std::optional<std::filesystem::path>& dir, std::ostream& log,
                 std::mutex& log_mutex) {
  if (!dir) return run_job(job);
  std::string key;
  try {
    key = cache_key(job);
  } catch (const ValidationError&) {
    return run_job(job);  // invalid input is reported by run_job itself
  }
  const auto file = *dir / (content_hash(key) + ".json");
  if (auto hit = read_cache(file, key, log, log_mutex)) return *hit;
  JobResult r = run_job(job);
  write_cache(file, key, r);
  return r;
}

}  // namespace

JobResult run_job_cached(const JobSpec& job, const std::optional<std::filesystem::path>& cache_dir, std::ostream& log) {
  std::mutex m;
  return cached(job, cache_dir, log, m);
}

std::vector<JobSpec> read_manifest(const Json& manifest) {
  const Json& jobs = manifest.is_object() ? manifest.value("jobs", Json::array()) : manifest;
  if (!jobs.is_array()) throw ValidationError("manifest: expected an array of jobs");
  std::vector<JobSpec> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Json& j = jobs[i];
    const std::string where = "manifest job " + std::to_string(i);
    if (!j.is_object() || !j.contains("subcommand") || !j["subcommand"].is_string())
      throw ValidationError(where + ": expected {\"subcommand\": ..., \"input\": {...}}");
    JobSpec spec;
    spec.subcommand = j["subcommand"].get<std::string>();
    spec.input = j.value("input", Json::object());
    if (j.contains("seed")) {
      const BigInt s = io::read_integer(j["seed"], where + " seed");
      if (s < 0 || s > BigInt("18446744073709551615")) throw ValidationError(where + ": seed out of range");
      spec.seed = std::stoull(s.get_str());
    }
    if (j.contains("format")) spec.format = j["format"].get<std::string>();
    out.push_back(std::move(spec));
  }
  return out;
}

JobResult run_batch(const std::vector<JobSpec>& jobs, const std::optional<std::filesystem::path>& cache_dir,
                    unsigned workers, std::ostream& log) {
  Json report{{"version", GCOH_VERSION}, {"subcommand", "batch"}};
  if (jobs.empty()) {
    report["status"] = "invalid";
    report["error"] = "manifest is empty";
    report["jobs"] = Json::array();
    report["exit_code"] = 2;
    return {2, report.dump(2) + "\n"};
  }
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = cached(jobs[i], cache_dir, log, log_mutex);
  };
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  Json list = Json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    code = std::max(code, results[i].exit_code);
    Json entry{{"index", i}, {"subcommand", jobs[i].subcommand}, {"exit_code", results[i].exit_code}};
    try {
      entry["report"] = Json::parse(results[i].output);
    } catch (const Json::parse_error&) {
      entry["report"] = results[i].output;
    }
    list.push_back(entry);
  }
  report["jobs"] = list;
  report["status"] = code == 0 ? "ok" : "failed";
  report["exit_code"] = code;
  return {code, report.dump(2) + "\n"};
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology, twists and Brauer groups of groupoids of local homeomorphisms."};
  app.set_version_flag("--version", std::string(GCOH_VERSION));
  app.require_subcommand(1, 1);

  std::map<std::string, std::string> flags;
  std::string format = "json", input_arg, cache_dir_arg;
  std::uint64_t seed = default_seed;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", input_arg, "input document: inline JSON or a file path");
    sub->add_option("--seed", seed, "seed for randomized suites")->capture_default_str();
    sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    sub->add_option("--cache-dir", cache_dir_arg, "result cache directory (default: $GCOH_CACHE_DIR)");
  };
  auto flag = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option_function<std::string>("--" + name, [&flags, name](const std::string& v) { flags[name] = v; }, help)
        ->allow_extra_args(false);
  };

  auto* torus = app.add_subcommand("torus", "endomorphism x -> Rx of the k-torus");
  flag(torus, "matrix", "integer matrix R as JSON, e.g. [[2,1],[0,2]]");
  auto* solenoid = app.add_subcommand("solenoid", "the (p,q)-solenoid");
  flag(solenoid, "p", "integer p");
  flag(solenoid, "q", "integer q");
  auto* simplicial = app.add_subcommand("simplicial", "simplicial self-map of a finite complex");
  flag(simplicial, "complex", "complex JSON or file");
  flag(simplicial, "map", "vertex map JSON or file (identity when omitted)");
  flag(simplicial, "circle", "use the n-gon instead of --complex");
  flag(simplicial, "degree", "degree of the circle map");
  auto* tower = app.add_subcommand("tower", "inverse limit and lim^1 of a tower");
  flag(tower, "tower", "tower JSON or file");
  std::vector<CLI::App*> finite;
  finite.push_back(app.add_subcommand("groupoid-verify", "groupoid laws and cocycle extension on a truncation"));
  finite.push_back(app.add_subcommand("skew", "skew product by a finite-group cocycle"));
  finite.push_back(app.add_subcommand("twist", "Z/n twist built from bundle data"));
  finite.push_back(app.add_subcommand("correspondence", "Hilbert-module identities of the correspondence"));
  for (auto* sub : finite) flag(sub, "system", "finite system JSON or file");
  for (auto* sub : {finite[0], finite[1], finite[2]}) {
    flag(sub, "max-m", "bound on |m| (default 1)");
    flag(sub, "max-witness", "bound on witnesses k, l (default 3)");
  }
  flag(finite[0], "coefficients", "coefficient group, e.g. \"Z + Z/2\" (default Z)");
  flag(finite[0], "cocycle", "values of g on the points as JSON (default: seeded random)");
  flag(finite[1], "group", "Z/n, klein, S3 or {\"table\": ...} (default Z/2)");
  flag(finite[1], "cocycle", "group element index per point as JSON (default: seeded random)");
  flag(finite[2], "fiber-n", "fibre order n (default 2)");
  flag(finite[2], "bundle", "trivial, random or {point: labeling} (default trivial)");
  flag(finite[3], "samples", "random vectors added to the point masses (default 3)");
  auto* batch = app.add_subcommand("batch", "run a manifest of jobs");
  flag(batch, "manifest", "manifest JSON or file");
  batch->add_option("--jobs", workers, "worker threads")->capture_default_str();
  for (auto* sub : app.get_subcommands({})) common(sub);

  if (argc > 1 && argv[1][0] != '-') {
    const std::string name = argv[1];
    if (name != "batch" && std::find(subcommands().begin(), subcommands().end(), name) == subcommands().end()) {
      err << "error: unknown subcommand '" << name << "'\n";
      return 2;
    }
  }
  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << GCOH_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  std::optional<std::filesystem::path> cache_dir;
  if (!cache_dir_arg.empty())
    cache_dir = cache_dir_arg;
  else if (const char* env = std::getenv("GCOH_CACHE_DIR"); env && *env)
    cache_dir = env;

  try {
    if (sub == "batch") {
      std::string source = flags.count("manifest") ? flags["manifest"] : input_arg;
      if (source.empty()) throw ValidationError("batch needs --manifest");
      const JobResult r = run_batch(read_manifest(io::parse_json_argument(source)), cache_dir, workers, err);
      out << r.output;
      if (r.exit_code != 0) err << "batch finished with exit code " << r.exit_code << "\n";
      return r.exit_code;
    }

    JobSpec job;
    job.subcommand = sub;
    job.seed = seed;
    job.format = format;
    job.input = input_arg.empty() ? Json::object() : io::parse_json_argument(input_arg);
    if (!job.input.is_object()) throw ValidationError("--input must be a JSON object");
    static const std::map<std::string, std::pair<std::string, bool>> folding{
        // flag -> (input key, value is JSON)
        {"matrix", {"matrix", true}},     {"p", {"p", false}},
        {"q", {"q", false}},              {"complex", {"complex", true}},
        {"map", {"map", true}},           {"circle", {"circle", false}},
        {"degree", {"degree", false}},    {"system", {"system", true}},
        {"max-m", {"max_m", false}},      {"max-witness", {"max_witness", false}},
        {"coefficients", {"coefficients", false}}, {"cocycle", {"cocycle", true}},
        {"group", {"group", false}},      {"fiber-n", {"n", false}},
        {"bundle", {"bundle", false}},    {"samples", {"samples", false}},
    };
    for (const auto& [name, value] : flags) {
      if (name == "tower") continue;
      const auto& [key, is_json] = folding.at(name);
      const auto first = value.find_first_not_of(" \t");
      const bool looks_json = first != std::string::npos && (value[first] == '{' || value[first] == '[');
      job.input[key] = (is_json || looks_json) ? io::parse_json_argument(value) : Json(value);
    }
    if (flags.count("tower")) {
      Json t = io::parse_json_argument(flags["tower"]);
      if (!t.is_object()) throw ValidationError("--tower must be a JSON object");
      for (const auto& [k, v] : t.items()) job.input[k] = v;
    }

    const JobResult r = run_job_cached(job, cache_dir, err);
    out << r.output;
    if (r.exit_code != 0) {
      try {
        const Json rep = Json::parse(r.output);
        if (rep.contains("error")) err << "error: " << rep["error"].get<std::string>() << "\n";
      } catch (const Json::parse_error&) {
      }
    }
    return r.exit_code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gcoh::cli
