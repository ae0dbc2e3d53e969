#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "output.hpp"
#include "permspec/circulant.hpp"
#include "permspec/enumerator.hpp"
#include "permspec/extremal.hpp"
#include "permspec/parity.hpp"
#include "permspec/permanent.hpp"
#include "permspec/reproduce.hpp"
#include "permspec/sequences.hpp"
#include "permspec/serialize.hpp"
#include "permspec/spectrum.hpp"
#include "permspec/upper.hpp"

using namespace permspec;
using cli::Format;
using cli::Output;

namespace {

// thrown by commands whose own check failed
struct CheckFailed {
  Output output;
};

unsigned default_workers() {
  if (const char* env = std::getenv("PERMSPEC_WORKERS")) {
    try {
      const long w = std::stol(env);
      if (w >= 1) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
    throw Error(Errc::invalid_argument, std::string("PERMSPEC_WORKERS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

Weights parse_weights(const std::vector<std::string>& w) {
  return Weights{parse_exact(w.at(0)), parse_exact(w.at(1)), parse_exact(w.at(2))};
}

Output spectrum_output(const SpectrumReport& report) {
  Output out{json_of(report), {}, {{"value", "partitions"}, {}}};
  for (const auto& v : report.spectrum.values()) {
    std::string parts;
    for (const auto& p : report.attaining.at(v)) parts += (parts.empty() ? "" : " ") + to_string(p);
    out.table.rows.push_back({to_string(v), parts});
  }
  return out;
}

Output permanent_command(const std::string& path, bool oracle) {
  const WeightedMatrix m = read_matrix_file(path);
  const ExactValue value = permanent_ryser(m);
  Json doc{{"n", m.size()}, {"permanent", json_of(value)}};
  Output out{doc, {}, {{"n", "permanent"}, {{std::to_string(m.size()), to_string(value)}}}};
  if (!oracle) return out;
  const ExactValue check = permanent_expansion(m);
  out.doc["oracle"] = json_of(check);
  out.doc["agrees"] = check == value;
  out.table = {{"n", "permanent", "oracle", "agrees"},
               {{std::to_string(m.size()), to_string(value), to_string(check), check == value ? "yes" : "no"}}};
  if (check != value) throw CheckFailed{out};
  return out;
}

Output seq_command(const std::string& name, long first, long last) {
  const SequenceTable table = sequence_table(name, first, last);
  Output out{json_of(table), {}, {{"n", "value"}, {}}};
  for (const auto& [n, v] : table.values) {
    out.lines.push_back({{"n", n}, {"value", json_of(v)}});
    out.table.rows.push_back({std::to_string(n), to_string(v)});
  }
  return out;
}

Output extremal_command(long n, const std::vector<std::string>& weights) {
  if (!weights.empty()) return Output{json_of(max_weighted_symmetric(n, parse_weights(weights))), {}, {}};
  Json doc{{"n", n}, {"class", to_string(ClassKind::Lambda3)}};
  doc["merriell_max"] = json_of(merriell_max(n));
  doc["bolshakov_second"] = n % 3 == 0 && n >= 6 ? json_of(bolshakov_second(n)) : Json(nullptr);
  doc["voorhoeve_bound"] = json_of(voorhoeve_bound(n));
  return Output{doc, {}, {}};
}

SmallSpectra default_small_spectra(unsigned workers) {
  SmallSpectra small;
  BruteOptions opts;
  opts.workers = workers;
  for (long s = 3; s <= 7; ++s) small[s] = indecomposable_spectrum(s, opts).spectrum;
  return small;
}

Output upper_command(const std::string& kind, long n, long t, const std::string& spectra_path, bool strict,
                     unsigned workers) {
  RankedMagnitudes r;
  if (kind == "sym") {
    r = upper_symmetric(n, t);
  } else if (kind == "gen") {
    const SmallSpectra small = spectra_path.empty() ? default_small_spectra(workers) : load_spectra(spectra_path);
    r = upper_general(n, t, small, strict ? MissingPolicy::Strict : MissingPolicy::Partial);
  } else {
    throw Error(Errc::invalid_argument, "upper kind must be 'sym' or 'gen', got '" + kind + "'");
  }
  Output out{json_of(r), {}, {{"rank", "value", "coefficient", "provenance"}, {}}};
  long rank = 0;
  for (const auto& e : r.values) {
    std::string prov;
    for (const auto& p : e.provenance) prov += (prov.empty() ? "" : " ") + to_string(p);
    out.table.rows.push_back({std::to_string(++rank), to_string(e.value), to_string(e.coefficient), prov});
  }
  return out;
}

Output census_output(const ParityCensus& census) {
  Output out{json_of(census), {}, {{"offsets", "ryser", "determinant"}, {}}};
  for (const auto& e : census.entries) {
    std::string offs;
    for (long o : e.offsets.offsets) offs += (offs.empty() ? "" : " ") + std::to_string(o);
    out.table.rows.push_back({offs, e.odd_ryser ? "odd" : "even", e.odd_det ? "odd" : "even"});
  }
  return out;
}

Output circulant_command(long n, long k, bool census, unsigned workers) {
  Output out;
  out.table.header = {"offsets", "permanent"};
  auto add_row = [&](const std::vector<long>& offsets, const BigInt& per) {
    std::string offs;
    for (long o : offsets) offs += (offs.empty() ? "" : " ") + std::to_string(o);
    out.table.rows.push_back({offs, per.get_str()});
  };
  if (k == 3) {
    const CirculantReport report = circulant_report(n, workers);
    out.doc = json_of(report);
    for (const auto& c : report.classes) add_row(c.offsets.offsets, c.permanent);
  } else {
    Json classes = Json::array();
    std::vector<ExactValue> values;
    for (const auto& c : canonical_classes(n, k)) {
      const BigInt per = permanent(circulant_matrix(c));
      classes.push_back({{"offsets", c.offsets}, {"permanent", json_of(ExactValue(per))}});
      values.emplace_back(per);
      add_row(c.offsets, per);
    }
    out.doc = {{"n", n}, {"k", k}, {"classes", classes}, {"spectrum", json_of(Spectrum(values))}};
  }
  out.doc["reis_count"] = json_of(reis_count(n, k));
  if (census) out.doc["parity_census"] = json_of(parity_census(n, workers));
  return out;
}

Output parity_command(const std::string& target, std::optional<long> n, unsigned workers) {
  if (target == "census") {
    if (!n) throw Error(Errc::invalid_argument, "parity census needs n");
    return census_output(parity_census(*n, workers));
  }
  const WeightedMatrix m = read_matrix_file(target);
  const auto binary = m.as_binary();
  if (!binary) throw Error(Errc::not_in_class, "parity needs a (0,1) matrix");
  const ParityReport report = parity_ryser(*binary, target);
  return Output{json_of(report), {}, {}};
}

struct EnumerateArgs {
  std::string kind;
  long n = 3;
  std::vector<std::string> weights;
  bool spectrum = false;
  bool count = false;
  bool indecomposable = false;
  bool upto = false;
  bool allow_large = false;
  std::optional<std::size_t> shards;
  std::optional<std::size_t> shard;
};

Output enumerate_command(const EnumerateArgs& a, unsigned workers) {
  const auto kind = parse_class_kind(a.kind);
  if (!kind) throw Error(Errc::invalid_argument, "unknown class '" + a.kind + "'");
  EnumerationTask task;
  const bool weighted = *kind == ClassKind::LambdaABG || *kind == ClassKind::LambdaABGDiag ||
                        *kind == ClassKind::LambdaABGSym;
  if (weighted && a.weights.empty()) throw Error(Errc::invalid_argument, "weighted classes need --weights");
  task.spec = weighted ? ClassSpec::weighted(*kind, parse_weights(a.weights)) : ClassSpec::binary(*kind);
  task.indecomposable_only = a.indecomposable;
  task.allow_large = a.allow_large;
  task.workers = workers;
  if (a.shards || a.shard) {
    if (!a.shards || !a.shard) throw Error(Errc::invalid_argument, "--shards and --shard go together");
    task.shard = Shard{*a.shards, *a.shard};
  }
  const bool want_spectrum = a.spectrum || !a.count;
  const bool want_count = a.count || !a.spectrum;
  task.with_permanents = want_spectrum;

  Json doc{{"class", to_string(*kind)}, {"n", a.n}};
  if (task.spec.weights()) doc["weights"] = json_of(*task.spec.weights());
  if (task.shard) doc["shard"] = {{"count", task.shard->count}, {"index", task.shard->index}};
  doc["indecomposable_only"] = a.indecomposable;

  Output out;
  out.table.header = {"n", "count", "spectrum"};
  Json counts = Json::object();
  SmallSpectra spectra;
  for (long size = a.upto ? 3 : a.n; size <= a.n; ++size) {
    task.n = size;
    const ScanResult r = scan(task);
    const Spectrum& s = a.indecomposable ? r.indecomposable : r.spectrum;
    if (want_count) counts[std::to_string(size)] = r.count.get_str();
    if (want_spectrum) spectra[size] = s;
    out.table.rows.push_back(
        {std::to_string(size), want_count ? r.count.get_str() : "", want_spectrum ? cli::cell(json_of(s)) : ""});
    if (size == a.n) {
      if (want_count) doc["count"] = r.count.get_str();
      if (want_spectrum) {
        doc["spectrum"] = json_of(r.spectrum);
        doc["indecomposable_spectrum"] = json_of(r.indecomposable);
      }
    }
  }
  if (a.upto && want_count) doc["counts"] = counts;
  if (want_spectrum) doc["spectra"] = spectra_to_json(spectra);
  out.doc = doc;
  return out;
}

Output reproduce_command(bool skip_n8, unsigned workers) {
  ReproduceOptions opts;
  opts.workers = workers;
  opts.include_n8 = !skip_n8;
  const auto results = reproduce_paper(opts);
  Output out;
  out.doc = {{"checks", Json::array()}};
  out.table.header = {"check", "status", "description", "detail"};
  long failed = 0;
  for (const auto& r : results) {
    out.doc["checks"].push_back(
        {{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"detail", r.detail}});
    out.table.rows.push_back({r.id, r.passed ? "PASS" : "FAIL", r.description, r.detail});
    if (!r.passed) ++failed;
  }
  out.doc["passed"] = static_cast<long>(results.size()) - failed;
  out.doc["failed"] = failed;
  if (failed) throw CheckFailed{out};
  return out;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::formula_mismatch: return 1;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact permanents, spectra and parities of three-per-line matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");

  std::string format_name = "json";
  app.add_option("--format", format_name, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  std::optional<unsigned> workers_flag;
  app.add_option("--workers", workers_flag, "worker threads (default: PERMSPEC_WORKERS or 1)")
      ->check(CLI::PositiveNumber);

  std::function<Output(unsigned)> action;

  auto* perm = app.add_subcommand("permanent", "permanent of a matrix file");
  std::string perm_file;
  bool perm_oracle = false;
  perm->add_option("file", perm_file)->required();
  perm->add_flag("--oracle", perm_oracle, "cross-check with first-row expansion");
  perm->callback([&] { action = [&](unsigned) { return permanent_command(perm_file, perm_oracle); }; });

  auto* seq = app.add_subcommand("seq", "sequence values as JSON lines");
  std::string seq_name;
  long seq_first = 0, seq_last = 0;
  seq->add_option("name", seq_name)->required()->check(CLI::IsMember(sequence_names()));
  seq->add_option("first", seq_first)->required();
  seq->add_option("last", seq_last)->required();
  seq->callback([&] { action = [&](unsigned) { return seq_command(seq_name, seq_first, seq_last); }; });

  auto* spec = app.add_subcommand("spectrum", "symmetric or weighted spectra");
  spec->require_subcommand(1);
  auto* spec_sym = spec->add_subcommand("sym", "symmetric class spectrum");
  long sym_n = 0;
  spec_sym->add_option("n", sym_n)->required();
  spec_sym->callback([&] { action = [&](unsigned) { return spectrum_output(spectrum_symmetric_report(sym_n)); }; });
  auto* spec_w = spec->add_subcommand("weighted", "weighted symmetric spectrum");
  long w_n = 0;
  std::vector<std::string> w_weights;
  spec_w->add_option("n", w_n)->required();
  spec_w->add_option("weights", w_weights, "alpha beta gamma")->required()->expected(3);
  spec_w->callback([&] {
    action = [&](unsigned) { return spectrum_output(spectrum_weighted_report(w_n, parse_weights(w_weights))); };
  });

  auto* ext = app.add_subcommand("extremal", "extremal permanents");
  long ext_n = 0;
  std::vector<std::string> ext_weights;
  ext->add_option("n", ext_n)->required();
  ext->add_option("--weights", ext_weights, "alpha beta gamma")->expected(3)->allow_extra_args(false);
  ext->callback([&] { action = [&](unsigned) { return extremal_command(ext_n, ext_weights); }; });

  auto* up = app.add_subcommand("upper", "ranked upper magnitudes");
  std::string up_kind, up_spectra;
  long up_n = 0, up_t = 1;
  bool up_strict = false;
  up->add_option("kind", up_kind, "sym or gen")->required()->check(CLI::IsMember({"sym", "gen"}));
  up->add_option("n", up_n)->required();
  up->add_option("--t", up_t)->capture_default_str();
  up->add_option("--spectra", up_spectra, "JSON map {size: [values]} of indecomposable spectra");
  up->add_flag("--strict", up_strict, "fail when an unsupplied size could matter");
  up->callback([&] {
    action = [&](unsigned w) { return upper_command(up_kind, up_n, up_t, up_spectra, up_strict, w); };
  });

  auto* circ = app.add_subcommand("circulant", "circulant classes and their permanents");
  long circ_n = 0, circ_k = 3;
  bool circ_census = false;
  circ->add_option("n", circ_n)->required();
  circ->add_option("--k", circ_k)->capture_default_str();
  circ->add_flag("--census", circ_census, "add the parity census");
  circ->callback([&] { action = [&](unsigned w) { return circulant_command(circ_n, circ_k, circ_census, w); }; });

  auto* par = app.add_subcommand("parity", "parity of a matrix file, or 'census <n>'");
  std::string par_target;
  std::optional<long> par_n;
  par->add_option("target", par_target, "matrix file or 'census'")->required();
  par->add_option("n", par_n);
  par->callback([&] { action = [&](unsigned w) { return parity_command(par_target, par_n, w); }; });

  auto* en = app.add_subcommand("enumerate", "exhaustive class enumeration");
  EnumerateArgs en_args;
  en->add_option("class", en_args.kind, "lambda3, lambda3-diag, lambda3-sym, abg, abg-diag, abg-sym")->required();
  en->add_option("n", en_args.n)->required();
  en->add_option("--weights", en_args.weights, "alpha beta gamma")->expected(3)->allow_extra_args(false);
  en->add_flag("--spectrum", en_args.spectrum);
  en->add_flag("--count", en_args.count);
  en->add_flag("--indecomposable", en_args.indecomposable, "completely indecomposable members only");
  en->add_flag("--upto", en_args.upto, "every size from 3 to n");
  en->add_flag("--allow-large", en_args.allow_large);
  en->add_option("--shards", en_args.shards)->check(CLI::PositiveNumber);
  en->add_option("--shard", en_args.shard);
  en->callback([&] { action = [&](unsigned w) { return enumerate_command(en_args, w); }; });

  auto* rep = app.add_subcommand("reproduce-paper", "recompute every published value");
  bool rep_skip_n8 = false;
  rep->add_flag("--skip-n8", rep_skip_n8, "skip the order 8 exhaustive scan");
  rep->callback([&] { action = [&](unsigned w) { return reproduce_command(rep_skip_n8, w); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Format format = format_name == "csv" ? Format::Csv : format_name == "text" ? Format::Text : Format::Json;
  try {
    const unsigned workers = workers_flag ? *workers_flag : default_workers();
    cli::emit(std::cout, action(workers), format);
    return 0;
  } catch (const CheckFailed& f) {
    cli::emit(std::cout, f.output, format);
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
