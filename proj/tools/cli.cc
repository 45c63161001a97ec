// Copyright 2026 The bentforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentforge/constructions.h"
#include "bentforge/eainv.h"
#include "bentforge/expsums.h"
#include "bentforge/polyform.h"

#ifndef BENTFORGE_VERSION
#define BENTFORGE_VERSION "dev"
#endif

namespace bentforge::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct FieldOptions {
  int m = 0;
  std::string poly;
};

FieldPtr make_field(const FieldOptions& o) {
  return field_new(o.m, o.poly.empty() ? std::nullopt : std::optional<uint32_t>(parse_hex(o.poly)));
}

Json meta(std::string_view command, const Field& f) {
  Json j;
  j["tool"] = "bentforge";
  j["version"] = BENTFORGE_VERSION;
  j["command"] = command;
  j["m"] = f.m();
  j["poly"] = to_hex(f.poly());
  return j;
}

// --out: a file, or `fallback` for "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback, std::ios::openmode mode = std::ios::trunc) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::out | mode);
    if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }
  bool is_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

// --- Kloosterman tables ---------------------------------------------------------------

std::optional<fs::path> table_dir() {
  const char* d = std::getenv("BENTFORGE_TABLE_DIR");
  if (d == nullptr || *d == '\0') return std::nullopt;
  return fs::path(d);
}

fs::path table_path(const fs::path& dir, int n) { return dir / ("kloosterman_n" + std::to_string(n) + ".csv"); }

// Loads K_n from BENTFORGE_TABLE_DIR when present, otherwise computes it and
// stores it there for the next run.
KloostermanTable table_for(int n, std::ostream& err) {
  const auto dir = table_dir();
  if (!dir) return KloostermanTable::compute(n);
  const fs::path path = table_path(*dir, n);
  if (fs::exists(path)) {
    std::ifstream in(path);
    try {
      auto t = KloostermanTable::load(in);
      if (t.n() != n) throw std::runtime_error("holds n=" + std::to_string(t.n()));
      return t;
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ": " + e.what());
    }
  }
  auto t = KloostermanTable::compute(n);
  fs::create_directories(*dir);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream o(tmp);
    t.save(o);
    if (!o) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
  err << "cached K_" << n << " in " << path.string() << '\n';
  return t;
}

KloostermanCache cache_for(const FieldPtr& f, std::ostream& err) {
  if (!table_dir()) return KloostermanCache(f);
  return KloostermanCache(f, table_for(f->n(), err));
}

// --- function input -------------------------------------------------------------------

struct FunctionOptions {
  FieldOptions field;
  std::string combiner = "x1";
  std::vector<std::string> a;
  std::string b;
  std::string table;
};

HParams parse_params(const Field& f, const FunctionOptions& o) {
  HParams p;
  p.combiner = Combiner::parse(o.combiner);
  for (const auto& s : o.a) p.a.push_back(parse_element(f, s));
  if (static_cast<int>(p.a.size()) != p.combiner.t()) {
    throw std::invalid_argument("--a needs " + std::to_string(p.combiner.t()) + " coefficient(s) for combiner " +
                                o.combiner);
  }
  if (o.b.empty()) throw std::invalid_argument("--b is required");
  p.b = parse_element(f, o.b);
  return p;
}

TruthTable load_function(const FunctionOptions& o) {
  if (!o.table.empty()) {
    std::ifstream in(o.table);
    if (!in) throw std::runtime_error("cannot open " + o.table);
    return read_truth_table(in, o.field.m ? make_field(o.field) : nullptr);
  }
  if (o.field.m == 0) throw std::invalid_argument("either --table or --m with --a/--b is required");
  auto f = make_field(o.field);
  return build_h(parse_params(*f, o), f);
}

void add_field_options(CLI::App* c, FieldOptions& o, bool required) {
  auto* m = c->add_option("--m", o.m, "field degree m (even for h functions)");
  if (required) m->required();
  c->add_option("--poly", o.poly, "reduction polynomial in hex (default: built-in table)");
}

void add_function_options(CLI::App* c, FunctionOptions& o) {
  add_field_options(c, o.field, false);
  c->add_option("--combiner", o.combiner, "combiner: hex table, t:hex, x1, x1x2, maj3 or x1x2x3")
      ->capture_default_str();
  c->add_option("--a", o.a, "coefficients a_1..a_t (w^k or hex), comma separated")->delimiter(',');
  c->add_option("--b", o.b, "b (w^k or hex)");
  c->add_option("--table", o.table, "read a truth table file instead of building h");
}

// --- verify-examples ------------------------------------------------------------------

struct Example {
  std::string name;
  int m;
  std::vector<int> a;  // exponents of w
  int b;
  Combiner combiner;
  std::string expected;
};

std::vector<Example> examples() {
  return {
      {"1.1", 6, {0}, 7, Combiner::x1(), "thm1:1"},
      {"1.2", 6, {0}, 1, Combiner::x1(), "thm1:2"},
      {"2.1", 12, {195, 1}, 0, Combiner::x1x2(), "thm2:1"},
      {"2.2", 12, {0, 258}, 63, Combiner::x1x2(), "thm2:2"},
      {"2.3", 12, {0, 60}, 63, Combiner::x1x2(), "thm2:3"},
      {"3.1", 6, {27, 9, 1}, 0, Combiner::majority3(), "thm3:1"},
      {"3.2", 6, {27, 1, 5}, 0, Combiner::majority3(), "thm3:2"},
      {"3.3", 6, {27, 16, 34}, 7, Combiner::majority3(), "thm3:3"},
      {"3.4", 6, {27, 16, 11}, 7, Combiner::majority3(), "thm3:4"},
      {"3.5", 6, {27, 1, 3}, 7, Combiner::majority3(), "thm3:5"},
      {"3.6", 6, {27, 3, 9}, 1, Combiner::majority3(), "thm3:6"},
  };
}

std::string power(int k) { return k == 0 ? "1" : k == 1 ? "w" : "w^" + std::to_string(k); }

}  // namespace

int verify_examples(std::ostream& out, std::ostream& err, uint32_t poly6, uint32_t poly12, bool json) {
  const FieldPtr f6 = field_new(6, poly6);
  const FieldPtr f12 = field_new(12, poly12);
  const KloostermanCache k6 = cache_for(f6, err);
  const KloostermanCache k12 = cache_for(f12, err);
  Json report = Json::array();
  int failures = 0;
  for (const auto& ex : examples()) {
    const FieldPtr& f = ex.m == 6 ? f6 : f12;
    const KloostermanCache& k = ex.m == 6 ? k6 : k12;
    HParams p{{}, f->w(ex.b), ex.combiner};
    for (int e : ex.a) p.a.push_back(f->w(e));
    const auto spectrum = walsh(build_h(p, f));
    const int mag = 1 << (ex.m / 2);
    const bool walsh_ok = std::all_of(spectrum.values.begin(), spectrum.values.end(),
                                      [&](int32_t v) { return v == mag || v == -mag; });
    const bool criterion = xxeq_criterion(p, k);
    const std::string label = theorem_label(p, k);
    const bool ok = walsh_ok && criterion && label == ex.expected;
    failures += !ok;

    std::string a_text;
    for (std::size_t i = 0; i < ex.a.size(); ++i) a_text += (i ? ", " : "") + power(ex.a[i]);
    if (json) {
      Json j;
      j["example"] = ex.name;
      j["m"] = ex.m;
      j["combiner_table_hex"] = ex.combiner.table_hex();
      Json a = Json::array();
      for (Element e : p.a) a.push_back(to_hex(e));
      j["a_list_hex"] = a;
      j["b_hex"] = to_hex(p.b);
      j["expected_condition"] = ex.expected;
      j["matched_condition"] = label;
      j["criterion"] = criterion;
      j["walsh_verified"] = walsh_ok;
      j["ok"] = ok;
      report.push_back(j);
    } else {
      out << "example " << ex.name << "  m=" << ex.m << "  a=(" << a_text << ") b=" << power(ex.b) << "  " << label
          << "  walsh " << (walsh_ok ? "+-" + std::to_string(mag) : "not flat") << "  "
          << (ok ? "ok" : "FAILED") << '\n';
    }
    if (!ok) {
      err << "example " << ex.name << " failed: expected " << ex.expected << ", got " << label
          << (walsh_ok ? "" : ", spectrum not flat") << (criterion ? "" : ", criterion false") << '\n';
    }
  }
  const int total = static_cast<int>(examples().size());
  if (json) {
    Json doc;
    Json m = meta("verify-examples", *f6);
    m.erase("m");
    m.erase("poly");
    m["poly_m6"] = to_hex(f6->poly());
    m["poly_m12"] = to_hex(f12->poly());
    doc["meta"] = m;
    doc["examples"] = report;
    doc["verified"] = total - failures;
    doc["total"] = total;
    out << doc.dump(2) << '\n';
  } else {
    out << total - failures << '/' << total << " parameter sets verified\n";
  }
  return failures ? kExitMismatch : kExitOk;
}

namespace {

// --- sweep ----------------------------------------------------------------------------

struct SweepOptions {
  FieldOptions field;
  std::string combiner;
  std::string scope = "exhaustive";
  uint64_t seed = 1;
  std::string format = "json";
  std::string out = "-";
  int jobs = 0;
  bool only_bent = false;
  uint64_t checkpoint_every = 1'000'000;
  bool resume = false;
  uint64_t halt_after = 0;  // testing aid: stop after this many checkpoints
};

struct SweepCounts {
  uint64_t records = 0;
  uint64_t bent = 0;
  uint64_t walsh_bent = 0;
  uint64_t mismatches = 0;           // criterion disagrees with the full Walsh transform
  uint64_t theorem_violations = 0;   // a theorem condition holds but h is not bent
  uint64_t unexplained_bent = 0;     // bent, theorem applicable, no condition matched

  void add(const SweepRecord& r) {
    ++records;
    bent += r.bent;
    walsh_bent += r.walsh_verified;
    mismatches += r.bent != r.walsh_verified;
    const auto& c = r.matched_condition;
    if (c == "n/a") return;
    const bool matched = c.substr(c.find(':') + 1) != "none";
    theorem_violations += matched && !r.walsh_verified;
    unexplained_bent += !matched && r.walsh_verified;
  }

  Json to_json() const {
    Json j;
    j["records"] = records;
    j["bent"] = bent;
    j["walsh_verified"] = walsh_bent;
    j["mismatches"] = mismatches;
    j["theorem_violations"] = theorem_violations;
    j["unexplained_bent"] = unexplained_bent;
    return j;
  }

  static SweepCounts from_json(const Json& j) {
    SweepCounts c;
    c.records = j.at("records");
    c.bent = j.at("bent");
    c.walsh_bent = j.at("walsh_verified");
    c.mismatches = j.at("mismatches");
    c.theorem_violations = j.at("theorem_violations");
    c.unexplained_bent = j.at("unexplained_bent");
    return c;
  }
};

const char* kCsvHeader = "m,combiner_table_hex,a_list_hex,b_hex,bent,matched_condition,walsh_verified";

void write_record(std::ostream& o, const std::string& format, const Field& f, const SweepRecord& r) {
  if (format == "csv") {
    o << f.m() << ',' << r.params.combiner.table_hex() << ',';
    for (std::size_t i = 0; i < r.params.a.size(); ++i) o << (i ? ";" : "") << to_hex(r.params.a[i]);
    o << ',' << to_hex(r.params.b) << ',' << (r.bent ? "true" : "false") << ',' << r.matched_condition << ','
      << (r.walsh_verified ? "true" : "false") << '\n';
    return;
  }
  Json j;
  j["m"] = f.m();
  j["combiner_table_hex"] = r.params.combiner.table_hex();
  Json a = Json::array();
  for (Element e : r.params.a) a.push_back(to_hex(e));
  j["a_list_hex"] = a;
  j["b_hex"] = to_hex(r.params.b);
  j["bent"] = r.bent;
  j["matched_condition"] = r.matched_condition;
  j["walsh_verified"] = r.walsh_verified;
  o << j.dump() << '\n';
}

void write_header(std::ostream& o, const std::string& format, const Json& m) {
  if (format == "csv") {
    o << '#';
    for (const auto& [k, v] : m.items()) o << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    o << '\n' << kCsvHeader << '\n';
    return;
  }
  Json j;
  j["meta"] = m;
  o << j.dump() << '\n';
}

void write_summary(std::ostream& o, const std::string& format, const SweepCounts& c) {
  if (format == "csv") {
    o << "# summary";
    const Json j = c.to_json();
    for (const auto& [k, v] : j.items()) o << ' ' << k << '=' << v.dump();
    o << '\n';
    return;
  }
  Json j;
  j["summary"] = c.to_json();
  o << j.dump() << '\n';
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  if (o.checkpoint_every == 0) throw std::invalid_argument("--checkpoint-every must be positive");
  const FieldPtr f = make_field(o.field);
  const Combiner combiner = Combiner::parse(o.combiner);
  const Scope scope = Scope::parse(o.scope);
  ScopeCursor cursor(*f, combiner, scope, o.seed);
  const KloostermanCache k = cache_for(f, err);

  Json m = meta("sweep", *f);
  m["combiner_table_hex"] = combiner.table_hex();
  m["arity"] = combiner.t();
  m["scope"] = scope.to_string();
  m["seed"] = o.seed;
  m["parameter_sets"] = cursor.size();
  m["only_bent"] = o.only_bent;

  const bool to_file = !(o.out.empty() || o.out == "-");
  const std::string ckpt_path = o.out + ".ckpt";
  // Everything that has to match for a checkpoint to be reusable.
  Json config = m;
  config["format"] = o.format;
  config["checkpoint_every"] = o.checkpoint_every;

  SweepCounts counts;
  std::optional<Output> sink;
  if (o.resume) {
    if (!to_file) throw std::invalid_argument("--resume needs --out <file>");
    std::ifstream in(ckpt_path);
    if (!in) throw std::runtime_error("no checkpoint at " + ckpt_path);
    const Json ckpt = Json::parse(in);
    if (ckpt.at("config") != config) throw std::runtime_error(ckpt_path + " was written by a different sweep");
    fs::resize_file(o.out, ckpt.at("offset").get<uint64_t>());
    counts = SweepCounts::from_json(ckpt.at("counts"));
    cursor.skip(ckpt.at("next").get<uint64_t>());
    sink.emplace(o.out, out, std::ios::app);
    err << "resuming at parameter set " << cursor.position() << " of " << cursor.size() << '\n';
  } else {
    sink.emplace(o.out, out);
    write_header(**sink, o.format, m);
  }

  // Records are produced in batches small enough to bound memory; batches
  // never straddle a checkpoint boundary.
  constexpr uint64_t kBatch = uint64_t{1} << 16;
  uint64_t checkpoints = 0;
  while (cursor.position() < cursor.size()) {
    const uint64_t boundary = (cursor.position() / o.checkpoint_every + 1) * o.checkpoint_every;
    const uint64_t take = std::min({kBatch, boundary - cursor.position(), cursor.size() - cursor.position()});
    const auto indices = cursor.next(take);
    const auto records = evaluate_indices(k, combiner, indices, o.jobs);
    for (const auto& r : records) {
      counts.add(r);
      if (!o.only_bent || r.bent || r.walsh_verified) write_record(**sink, o.format, *f, r);
    }
    (**sink).flush();
    if (to_file && cursor.position() == boundary && cursor.position() < cursor.size()) {
      Json ckpt;
      ckpt["config"] = config;
      ckpt["next"] = cursor.position();
      ckpt["offset"] = static_cast<uint64_t>(fs::file_size(o.out));
      ckpt["counts"] = counts.to_json();
      const std::string tmp = ckpt_path + ".tmp";
      {
        std::ofstream c(tmp);
        c << ckpt.dump() << '\n';
      }
      fs::rename(tmp, ckpt_path);
      if (o.halt_after && ++checkpoints == o.halt_after) {
        err << "halted after " << cursor.position() << " parameter sets; rerun with --resume\n";
        return kExitHalted;
      }
    }
  }
  write_summary(**sink, o.format, counts);
  (**sink).flush();
  if (to_file) fs::remove(ckpt_path);

  err << "sweep m=" << f->m() << " combiner=" << combiner.table_hex() << ' ' << scope.to_string() << ": "
      << counts.records << " parameter sets, " << counts.bent << " bent by criterion, " << counts.walsh_bent
      << " by Walsh, " << counts.mismatches << " mismatches, " << counts.theorem_violations
      << " theorem violations, " << counts.unexplained_bent << " bent without a matching condition\n";
  return counts.mismatches || counts.theorem_violations ? kExitMismatch : kExitOk;
}

// --- single-function commands ---------------------------------------------------------

int cmd_kloosterman(int n, const std::string& path, std::ostream& out, std::ostream& err) {
  if (n < 1 || n > 20) throw std::invalid_argument("n must be in [1, 20]");
  const auto t = table_for(n, err);
  Output o(path, out);
  t.save(*o);
  return kExitOk;
}

int cmd_expand(const FunctionOptions& fo, const std::string& path, std::ostream& out, std::ostream& err) {
  if (fo.a.size() != 1) throw std::invalid_argument("expand takes exactly one --a");
  if (fo.b.empty()) throw std::invalid_argument("--b is required");
  const FieldPtr f = make_field(fo.field);
  const Element a = parse_element(*f, fo.a[0]);
  const Element b = parse_element(*f, fo.b);
  const auto p = expand_h1(a, b, f);
  Output o(path, out);
  write_polynomial_csv(*o, p);
  if (evaluate(p) != rational_h(a, b, f)) {
    err << "expansion disagrees with Tr(a/(x^(q-1)+b))\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_spectrum(const FunctionOptions& fo, const std::string& format, const std::string& path, std::ostream& out) {
  const auto t = load_function(fo);
  const auto s = walsh(t);
  Output o(path, out);
  if (format == "csv") {
    write_spectrum_csv(*o, s);
    return kExitOk;
  }
  Json doc;
  doc["meta"] = meta("spectrum", t.field());
  doc["bent"] = is_bent(s, t.field().m());
  Json rows = Json::array();
  for (uint32_t w = 0; w < s.values.size(); ++w) rows.push_back({{"omega_hex", to_hex(w)}, {"value", s.values[w]}});
  doc["spectrum"] = rows;
  *o << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_fingerprint(const FunctionOptions& fo, const std::string& format, const std::string& path,
                    std::ostream& out) {
  const auto t = load_function(fo);
  const auto fp = fingerprint(t);
  Output o(path, out);
  if (format == "text") {
    *o << fp.canonical() << '\n';
    return kExitOk;
  }
  Json doc;
  doc["meta"] = meta("fingerprint", t.field());
  doc["degree"] = fp.degree;
  Json ms = Json::array();
  for (const auto& [v, n] : fp.walsh_multiset) ms.push_back({{"abs_walsh", v}, {"count", n}});
  doc["walsh_multiset"] = ms;
  if (fp.hyper_profile) {
    doc["hyper_profile"] = *fp.hyper_profile;
  } else {
    doc["hyper_profile"] = nullptr;
  }
  doc["canonical"] = fp.canonical();
  *o << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bent functions from rational trace blocks: examples, sweeps, tables and spectra", "bentforge"};
  app.set_version_flag("--version", std::string(BENTFORGE_VERSION));
  app.require_subcommand(1);

  std::string examples_format = "text";
  auto* verify = app.add_subcommand("verify-examples", "rebuild and check the eleven worked parameter sets");
  verify->add_option("--format", examples_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "run a combiner over a parameter scope");
  add_field_options(sweep, so.field, true);
  sweep->add_option("--combiner", so.combiner, "combiner: hex table, t:hex, x1, x1x2, maj3 or x1x2x3")->required();
  sweep->add_option("--scope", so.scope, "exhaustive or sample:K")->capture_default_str();
  sweep->add_option("--seed", so.seed, "seed for sample scopes")->capture_default_str();
  sweep->add_option("--format", so.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sweep->add_option("--out", so.out, "output file, - for stdout")->capture_default_str();
  sweep->add_option("--jobs", so.jobs, "worker threads, 0 for all cores")->capture_default_str();
  sweep->add_flag("--only-bent", so.only_bent, "write only records that are bent");
  sweep->add_option("--checkpoint-every", so.checkpoint_every, "parameter sets between checkpoints")
      ->capture_default_str();
  sweep->add_flag("--resume", so.resume, "continue from <out>.ckpt");
  sweep->add_option("--halt-after-checkpoints", so.halt_after)->group("");

  int kn = 0;
  std::string kout = "-";
  auto* kloost = app.add_subcommand("kloosterman", "write the K_n table as a_hex,value rows");
  kloost->add_option("--n,--m", kn, "degree n of GF(2^n)")->required();
  kloost->add_option("--out", kout, "output file, - for stdout");

  FunctionOptions eo;
  std::string eout = "-";
  auto* expand = app.add_subcommand("expand", "ordinary polynomial form of Tr(a/(x^(q-1)+b))");
  add_field_options(expand, eo.field, true);
  expand->add_option("--a", eo.a, "a (w^k or hex)")->required();
  expand->add_option("--b", eo.b, "b (w^k or hex)")->required();
  expand->add_option("--out", eout, "output file, - for stdout");

  FunctionOptions spo;
  std::string sformat = "csv", sout = "-";
  auto* spectrum = app.add_subcommand("spectrum", "Walsh spectrum of h or of a truth table file");
  add_function_options(spectrum, spo);
  spectrum->add_option("--format", sformat)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  spectrum->add_option("--out", sout, "output file, - for stdout");

  FunctionOptions fpo;
  std::string fformat = "text", fout = "-";
  auto* fprint = app.add_subcommand("fingerprint", "EA-invariant fingerprint of h or of a truth table file");
  add_function_options(fprint, fpo);
  fprint->add_option("--format", fformat)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  fprint->add_option("--out", fout, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (verify->parsed()) return verify_examples(out, err, 0x5b, 0x10eb, examples_format == "json");
    if (sweep->parsed()) return cmd_sweep(so, out, err);
    if (kloost->parsed()) return cmd_kloosterman(kn, kout, out, err);
    if (expand->parsed()) {
      eo.combiner = "x1";
      return cmd_expand(eo, eout, out, err);
    }
    if (spectrum->parsed()) return cmd_spectrum(spo, sformat, sout, out);
    if (fprint->parsed()) return cmd_fingerprint(fpo, fformat, fout, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace bentforge::cli
