#include "origami/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "origami/builders.hpp"
#include "origami/congruence.hpp"
#include "origami/origami.hpp"
#include "origami/search.hpp"
#include "origami/veech.hpp"

namespace origami::cli {
namespace {

using json = nlohmann::ordered_json;

struct GlobalOptions {
  std::string s_action = "ccw";
  size_t orbit_cap = 1'000'000;
  long long closure_cap = 10'000'000;
  bool timings = false;

  SConvention convention() const { return s_convention_from_string(s_action); }
};

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<int> parse_stratum(const std::string& csv) {
  std::vector<int> out;
  std::string tok;
  std::stringstream ss(csv);
  while (std::getline(ss, tok, ',')) {
    // Tolerate stray spaces; an entirely empty argument means the empty stratum.
    std::erase_if(tok, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

Origami load_origami(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::runtime_error("input file is empty: " + path);
  return text[first] == '{' ? origami_from_json_text(text) : origami_from_text(text);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write file: " + path);
  f << content;
  if (!content.empty() && content.back() != '\n') f << '\n';
}

json cylinders_json(const Origami& o) {
  json j;
  j["horizontal"] = cylinders(o, Direction::Horizontal);
  j["vertical"] = cylinders(o, Direction::Vertical);
  j["diagonal"] = cylinders(o, Direction::Diagonal);
  return j;
}

json origami_report(const Origami& o) {
  json j;
  j["text"] = to_text(o);
  j["d"] = degree(o);
  j["stratum"] = stratum(o);
  j["genus"] = genus(o);
  j["cylinders"] = cylinders_json(o);
  j["reduced"] =
      is_reduced_sufficient(o) == Reducedness::Reduced ? "reduced" : "undetermined";
  j["hash"] = hex64(origami_hash(o));
  return j;
}

json veech_report(const CosetGraph& g) {
  const CuspData cusps = cusp_data(g);
  json j;
  j["index"] = veech_index(g);
  j["cusp_widths"] = cusps.widths;
  j["level"] = cusps.level;
  j["num_stabilizer_generators"] = static_cast<long long>(stabilizer_words(g).size());
  j["contains_minus_identity"] = contains_minus_identity(g);
  j["s_action"] = to_string(g.convention);
  return j;
}

// Builder-shaped origamis (single horizontal cylinder, vertical circumferences
// in {1,3,5}) get the standard three witnesses; everything else is harvested.
std::vector<ParabolicWitness> auto_witnesses(const Origami& o, SConvention conv,
                                             std::string& source) {
  const std::vector<int> horiz = cylinders(o, Direction::Horizontal);
  const std::vector<int> vert = cylinders(o, Direction::Vertical);
  const bool one_cyl = horiz.size() == 1 && horiz[0] == degree(o);
  bool small_vert = true;
  long long q = 0;
  for (int v : vert) {
    small_vert = small_vert && (v == 1 || v == 3 || v == 5);
    if (v == 5) ++q;
  }
  if (one_cyl && small_vert && degree(o) > 4 * q) {
    source = "standard";
    return standard_witnesses(degree(o), q);
  }
  source = "harvested";
  return harvest_parabolics(o, 2, conv);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
  }
};

int cmd_build(const GlobalOptions& g, const std::string& stratum_csv, int l,
              const std::string& out_path, std::ostream& out) {
  const std::vector<int> alphas = parse_stratum(stratum_csv);
  const Origami o = build_stratum_origami(alphas, l);
  json j;
  j["command"] = "build";
  j["origami"] = origami_report(o);
  json jb;
  jb["stratum_input"] = alphas;
  jb["l"] = l;
  jb["L"] = degree(o);
  jb["q"] = odd_pair_count(alphas);
  jb["expected_size"] = expected_size(alphas, l);
  j["builder"] = std::move(jb);
  if (!out_path.empty()) {
    write_file(out_path, to_json_text(o));
    j["written"] = out_path;
  }
  (void)g;
  emit(out, j);
  return 0;
}

int cmd_analyze(const GlobalOptions& g, const std::string& in_path, int mod_max,
                std::ostream& out) {
  Timer timer;
  const Origami o = load_origami(in_path);
  json j;
  j["command"] = "analyze";
  j["origami"] = origami_report(o);

  OrbitOptions opts;
  opts.cap = g.orbit_cap;
  opts.convention = g.convention();
  const CosetGraph graph = orbit_coset_graph(o, opts);
  j["veech"] = veech_report(graph);

  const std::vector<Word> words = stabilizer_words(graph);
  json surj = json::object();
  bool all_full = true;
  std::vector<uint32_t> moduli;
  for (int n = 2; n <= mod_max; ++n) moduli.push_back(static_cast<uint32_t>(n));
  for (uint32_t n : {16u, 25u, 27u})
    if (static_cast<int>(n) > mod_max) moduli.push_back(n);
  for (uint32_t n : moduli) {
    const bool full = image_is_full_mod(std::span<const Word>(words), n, g.closure_cap);
    surj[std::to_string(n)] = full;
    all_full = all_full && full;
  }
  json jc;
  jc["surjective_mod"] = std::move(surj);
  jc["surjective_all_checked"] = all_full;
  jc["level_verdict"] = to_string(is_congruence_at_level(graph, g.closure_cap));
  j["congruence"] = std::move(jc);
  if (g.timings) j["timings_ms"] = timer.ms();
  emit(out, j);
  return 0;
}

int cmd_verify_tnc(const GlobalOptions& g, const std::string& in_path,
                   const std::string& witness_spec, std::ostream& out) {
  const Origami o = load_origami(in_path);
  json j;
  j["command"] = "verify-tnc";
  j["origami"] = origami_report(o);

  std::vector<ParabolicWitness> witnesses;
  std::string source;
  if (witness_spec == "auto") {
    witnesses = auto_witnesses(o, g.convention(), source);
  } else {
    std::ifstream f(witness_spec);
    if (!f) throw std::runtime_error("cannot open witness file: " + witness_spec);
    std::stringstream buf;
    buf << f.rdbuf();
    witnesses = witnesses_from_json_text(buf.str());
    source = "file";
  }
  j["witness_source"] = source;

  const TncCertificate cert = verify_certificate(witnesses);
  j["certificate"] = json::parse(certificate_to_json_text(cert));

  // Soundness cross-check: each witness matrix A T^m A^-1 should actually lie
  // in the Veech group.  Skipped (with a note) if the orbit exceeds the cap.
  bool members_ok = true;
  try {
    OrbitOptions opts;
    opts.cap = g.orbit_cap;
    opts.convention = g.convention();
    const CosetGraph graph = orbit_coset_graph(o, opts);
    json jm = json::array();
    for (const ParabolicWitness& w : cert.witnesses) {
      const Mat2 par = w.A * mat_pow(kT, w.m) * inverse(w.A);
      const bool in = contains_matrix(graph, par);
      members_ok = members_ok && in;
      jm.push_back(in);
    }
    j["witness_in_group"] = std::move(jm);
    j["veech"] = veech_report(graph);
  } catch (const OrbitCapExceeded& e) {
    j["witness_in_group"] = "skipped: " + std::string(e.what());
  }

  j["verdict"] = cert.valid && members_ok ? "valid" : "invalid";
  emit(out, j);
  return cert.valid && members_ok ? 0 : 2;
}

int cmd_search_l(const GlobalOptions& g, const std::string& stratum_csv, long long l_max,
                 int primes, std::ostream& out) {
  const std::vector<int> alphas = parse_stratum(stratum_csv);
  json j;
  j["command"] = "search-l";
  j["stratum"] = alphas;
  SearchOutcome res;
  if (primes > 0) {
    j["mode"] = "prime";
    try {
      res = find_prime_l(alphas, primes);
    } catch (const std::invalid_argument& e) {
      // q = 0: report the vacuity diagnostic like the scan mode does.
      res.q_zero_vacuous = true;
      res.diagnostic = e.what();
    }
  } else {
    j["mode"] = "scan";
    res = find_l(alphas, l_max);
  }
  j["q"] = odd_pair_count(alphas);
  json arr = json::array();
  for (const SearchResult& r : res.results) {
    json e;
    e["l"] = r.l;
    e["L"] = r.L;
    e["gcd_L_30q"] = r.gcd_L_30q;
    e["L_minus_4q_mod_3"] = r.Lm4q_mod3;
    e["L_minus_4q_mod_5"] = r.Lm4q_mod5;
    if (r.primality_checked) e["L_is_prime"] = r.L_is_prime;
    arr.push_back(std::move(e));
  }
  j["results"] = std::move(arr);
  if (!res.diagnostic.empty()) j["diagnostic"] = res.diagnostic;
  (void)g;
  emit(out, j);
  return res.q_zero_vacuous ? 2 : 0;
}

int cmd_orbit(const GlobalOptions& g, const std::string& in_path, const std::string& dot_path,
              const std::string& json_path, std::ostream& out) {
  const Origami o = load_origami(in_path);
  OrbitOptions opts;
  opts.cap = g.orbit_cap;
  opts.convention = g.convention();
  const CosetGraph graph = orbit_coset_graph(o, opts);
  json j;
  j["command"] = "orbit";
  j["origami"] = origami_report(o);
  j["veech"] = veech_report(graph);
  if (!dot_path.empty()) {
    write_file(dot_path, to_dot(graph));
    j["dot_written"] = dot_path;
  }
  if (!json_path.empty()) {
    write_file(json_path, graph_to_json_text(graph));
    j["json_written"] = json_path;
  }
  emit(out, j);
  return 0;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"one-cylinder origami / Veech group toolkit"};
  app.name("origami");

  GlobalOptions g;
  app.add_option("--s-action", g.s_action, "S-action convention: ccw (default), cw, involutive")
      ->check(CLI::IsMember({"ccw", "cw", "involutive"}));
  app.add_option("--orbit-cap", g.orbit_cap, "orbit vertex cap (default 1e6)");
  app.add_option("--closure-cap", g.closure_cap, "modular closure size cap (default 1e7)");
  app.add_flag("--timings", g.timings, "include timings in reports (non-deterministic)");
  app.require_subcommand(1);

  std::string stratum_csv, in_path, out_path, dot_path, json_path;
  std::string witness_spec = "auto";
  int l = 1, mod_max = 13, primes = 0;
  long long l_max = 0;

  CLI::App* build = app.add_subcommand("build", "construct a one-cylinder origami in a stratum");
  build->add_option("--stratum", stratum_csv, "comma-separated cone orders, e.g. 2,4,1,3")
      ->required();
  build->add_option("--l", l, "extra cylinder squares (l >= 1)")->required();
  build->add_option("--out", out_path, "write the origami as JSON to this file");

  CLI::App* analyze = app.add_subcommand("analyze", "orbit, Veech data and congruence panel");
  analyze->add_option("--in", in_path, "origami file (text or JSON)")->required();
  analyze->add_option("--mod-max", mod_max, "upper end of the contiguous modulus panel (default 13)");

  CLI::App* verify = app.add_subcommand("verify-tnc", "verify a totally-non-congruence certificate");
  verify->add_option("--in", in_path, "origami file (text or JSON)")->required();
  verify->add_option("--witnesses", witness_spec, "'auto' or a witness JSON file");

  CLI::App* search = app.add_subcommand("search-l", "search cylinder extensions meeting the criteria");
  search->add_option("--stratum", stratum_csv, "comma-separated cone orders")->required();
  CLI::Option* omax = search->add_option("--max", l_max, "scan l = 1..max");
  CLI::Option* oprimes = search->add_option("--primes", primes, "find this many prime-L values");
  omax->excludes(oprimes);
  oprimes->excludes(omax);

  CLI::App* orbit = app.add_subcommand("orbit", "export the coset graph");
  orbit->add_option("--in", in_path, "origami file (text or JSON)")->required();
  orbit->add_option("--dot", dot_path, "write Graphviz DOT here");
  orbit->add_option("--json", json_path, "write graph JSON here");

  std::vector<std::string> argv = args;
  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (build->parsed()) return cmd_build(g, stratum_csv, l, out_path, out);
    if (analyze->parsed()) return cmd_analyze(g, in_path, mod_max, out);
    if (verify->parsed()) return cmd_verify_tnc(g, in_path, witness_spec, out);
    if (search->parsed()) {
      if (l_max <= 0 && primes <= 0) {
        err << "error: search-l needs --max or --primes\n";
        return 1;
      }
      return cmd_search_l(g, stratum_csv, l_max, primes, out);
    }
    if (orbit->parsed()) return cmd_orbit(g, in_path, dot_path, json_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace origami::cli
