// fgt: command-line front end for the finite group toolkit.
//
//   fgt analyze "S(4)"
//   fgt subgroups "A(4)" --format table
//   fgt check "S(3)" --gens "(1 2)" cn
//   fgt check "A(4)" --index 0 wfsqn --formation U_p:2
//   fgt verify all --max-order 60 --out reports
//   fgt corpus --max-order 24
//   fgt cache warm --cache-dir .fgt-cache

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "fgt/cache.hpp"
#include "fgt/corpus.hpp"
#include "fgt/embedding.hpp"
#include "fgt/expr.hpp"
#include "fgt/formation.hpp"
#include "fgt/named.hpp"
#include "fgt/theorems.hpp"

using namespace fgt;

namespace {

enum Exit { kOk = 0, kDoesNotHold = 1, kError = 2, kViolations = 3, kExcessiveSkips = 4 };

struct Options {
  std::string format = "table";
  std::size_t max_order = 100;
  std::string formation_tag;
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 1;
  std::string cache_dir;
  std::size_t table_cap = Limits{}.table_cap;
  std::size_t lattice_cap = Limits{}.lattice_cap;
  std::size_t subgroup_cap = Limits{}.subgroup_count_cap;

  Limits limits() const {
    Limits l;
    l.table_cap = table_cap;
    l.lattice_cap = lattice_cap;
    l.subgroup_count_cap = subgroup_cap;
    return l;
  }
};

// ---------------------------------------------------------------------------
// Output

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

/// Objects with a "rows" array print as a table; everything else as
/// key/value lines.
void emit(const Json& doc, const std::string& format, std::ostream& os = std::cout) {
  if (format == "json") {
    os << doc.dump(2) << "\n";
    return;
  }
  const bool csv = format == "csv";
  if (doc.contains("rows") && doc["rows"].is_array()) {
    std::vector<std::string> cols;
    if (doc.contains("columns"))
      for (const auto& c : doc["columns"]) cols.push_back(c.get<std::string>());
    for (const auto& row : doc["rows"])
      for (auto it = row.begin(); it != row.end(); ++it)
        if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : doc["rows"]) {
      std::vector<std::string> line;
      for (const auto& c : cols) line.push_back(row.contains(c) ? scalar(row[c]) : "");
      cells.push_back(std::move(line));
    }
    if (csv) {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
      os << "\n";
      for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_field(line[i]);
        os << "\n";
      }
      return;
    }
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (it.key() != "rows" && it.key() != "columns") os << it.key() << ": " << scalar(it.value()) << "\n";
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      width[i] = cols[i].size();
      for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
    }
    auto print = [&](const std::vector<std::string>& line) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        os << line[i];
        if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
      }
      os << "\n";
    };
    print(cols);
    for (const auto& line : cells) print(line);
    return;
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (csv)
      os << csv_field(it.key()) << "," << csv_field(scalar(it.value())) << "\n";
    else
      os << it.key() << ": " << scalar(it.value()) << "\n";
  }
}

Json subgroup_json(const Group& g, const Subgroup& h) { return detail::describe(g, h); }

std::string short_subgroup(const Group& g, const Subgroup& h) {
  auto d = subgroup_json(g, h);
  std::string s = "<";
  for (std::size_t i = 0; i < d["gens"].size(); ++i) s += (i ? ", " : "") + d["gens"][i].get<std::string>();
  return s + "> order " + std::to_string(h.order());
}

// ---------------------------------------------------------------------------
// Shared plumbing

std::unique_ptr<LatticeCache> open_cache(const Options& o) {
  if (o.cache_dir.empty()) return nullptr;
  return std::make_unique<LatticeCache>(o.cache_dir, o.seed);
}

GroupAnalysis make_analysis(const Group& g, const Options& o) {
  auto cache = open_cache(o);
  if (cache) return GroupAnalysis(g, cache->get_or_compute(g, o.limits()), o.limits());
  return GroupAnalysis(g, all_subgroups(g, o.limits()), o.limits());
}

std::vector<Formation> formations_for(const Group& g, const Options& o) {
  if (!o.formation_tag.empty()) return {formation(o.formation_tag)};
  std::vector<Formation> out{formation("U"), formation("N")};
  for (unsigned p : g.primes()) {
    out.push_back(formation("U_p:" + std::to_string(p)));
    out.push_back(formation("N_p:" + std::to_string(p)));
  }
  return out;
}

/// Splits "(1 2)(3 4), (1 3)" at top-level commas.
std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  for (auto& s : out) {
    auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  out.erase(std::remove(out.begin(), out.end(), ""), out.end());
  return out;
}

/// A generator is a permutation in cycle notation, an element label, or an
/// element index.
Elem resolve_element(const Group& g, const std::string& token) {
  std::string wanted = token;
  if (!token.empty() && token[0] == '(') {
    try {
      wanted = parse_cycles(token).to_cycles();
    } catch (const Error&) {
    }
  }
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.label(static_cast<Elem>(i)) == wanted || g.label(static_cast<Elem>(i)) == token) return static_cast<Elem>(i);
  if (!token.empty() && std::all_of(token.begin(), token.end(), ::isdigit)) {
    std::size_t i = std::stoul(token);
    if (i < g.order()) return static_cast<Elem>(i);
  }
  throw Error(ErrorKind::NotSubgroup, "no element matches '" + token + "'");
}

// ---------------------------------------------------------------------------
// Commands

int cmd_analyze(const std::string& expr, const Options& o) {
  Group g = build_from_expr(expr, o.limits());
  Json doc;
  doc["group"] = expr;
  doc["order"] = g.order();
  std::string fact;
  for (auto [p, k] : g.prime_factorization())
    fact += (fact.empty() ? "" : " * ") + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
  doc["factorization"] = fact.empty() ? "1" : fact;
  Json sizes = Json::array();
  for (const auto& cls : conjugacy_classes(g)) sizes.push_back(cls.size());
  doc["class_sizes"] = sizes;

  const auto normals = normal_subgroups(g);
  Json named;
  named["center"] = subgroup_json(g, center(g));
  if (g.order() <= o.lattice_cap) named["frattini"] = subgroup_json(g, frattini(g, all_subgroups(g, o.limits())));
  named["fitting"] = subgroup_json(g, fitting(g, normals));
  for (unsigned p : g.primes()) {
    std::string ps = std::to_string(p);
    named["O_" + ps] = subgroup_json(g, o_p(normals, p));
    named["O_" + ps + "'"] = subgroup_json(g, o_p_prime(normals, p));
    named["O^" + ps] = subgroup_json(g, o_upper_p(g, normals, p));
  }
  doc["named"] = named;

  auto series = chief_series(g);
  const auto forms = formations_for(g, o);
  Json factors = Json::array();
  for (const auto& f : series.factors()) {
    Json row{{"lower", f.lower.order()}, {"upper", f.upper.order()}, {"order", f.order()}};
    Json central;
    for (const auto& form : forms) central[form.tag()] = is_f_central(g, f, form, o.limits());
    row["f_central"] = central;
    factors.push_back(row);
  }
  doc["chief_factor_orders"] = series.factor_orders();
  doc["chief_factors"] = factors;

  Json zf, residual, membership;
  for (const auto& form : forms) {
    zf[form.tag()] = subgroup_json(g, f_hypercentre(g, form, o.limits(), &normals));
    residual[form.tag()] = subgroup_json(g, f_residual(g, form));
    membership[form.tag()] = form.member(g);
  }
  doc["hypercentre"] = zf;
  doc["residual"] = residual;
  doc["formation_member"] = membership;

  Json classes;
  std::vector<std::string> tags = {"nilpotent", "soluble", "supersoluble", "sylow_tower_supersoluble"};
  for (unsigned p : g.primes())
    for (const char* base : {"p_nilpotent", "p_supersoluble", "p_soluble"}) tags.push_back(std::string(base) + ":" + std::to_string(p));
  for (const auto& t : tags) classes[t] = is_in_class(g, parse_class_spec(t), o.limits());
  doc["classes"] = classes;

  if (o.format == "json") {
    emit(doc, "json");
    return kOk;
  }
  // Flatten for table and csv output.
  Json flat;
  flat["group"] = expr;
  flat["order"] = g.order();
  flat["factorization"] = doc["factorization"];
  flat["class_sizes"] = sizes.dump();
  for (auto it = named.begin(); it != named.end(); ++it) flat["named." + it.key()] = it.value()["order"];
  flat["chief_factor_orders"] = doc["chief_factor_orders"].dump();
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (auto it = factors[i]["f_central"].begin(); it != factors[i]["f_central"].end(); ++it)
      flat["chief_factor." + std::to_string(i) + ".central." + it.key()] = it.value();
  for (auto it = zf.begin(); it != zf.end(); ++it) flat["Z." + it.key()] = it.value()["order"];
  for (auto it = residual.begin(); it != residual.end(); ++it) flat["residual." + it.key()] = it.value()["order"];
  for (auto it = membership.begin(); it != membership.end(); ++it) flat["member." + it.key()] = it.value();
  for (auto it = classes.begin(); it != classes.end(); ++it) flat["class." + it.key()] = it.value();
  emit(flat, o.format);
  return kOk;
}

int cmd_subgroups(const std::string& expr, const Options& o) {
  Group g = build_from_expr(expr, o.limits());
  auto a = make_analysis(g, o);
  Json doc{{"group", expr}, {"order", g.order()}, {"subgroups", a.lattice().size()}};
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.lattice().size(); ++i) {
    const auto& h = a.lattice()[i];
    auto d = subgroup_json(g, h);
    rows.push_back({{"index", i},
                    {"order", h.order()},
                    {"gens", o.format == "json" ? d["gens"] : Json(d["gens"].dump())},
                    {"normal", a.is_normal_at(i)},
                    {"qn", a.is_qn_at(i)},
                    {"sqn", a.is_sqn_at(i)},
                    {"bits", h.members().to_hex()}});
  }
  doc["rows"] = rows;
  if (o.format != "json") doc["columns"] = {"index", "order", "normal", "qn", "sqn", "gens", "bits"};
  emit(doc, o.format);
  return kOk;
}

int cmd_check(const std::string& expr, const std::string& gens, std::optional<std::size_t> index, const std::string& tag,
              const Options& o) {
  Group g = build_from_expr(expr, o.limits());
  auto a = make_analysis(g, o);
  Subgroup h;
  if (!gens.empty()) {
    std::vector<Elem> seed;
    for (const auto& t : split_generators(gens)) seed.push_back(resolve_element(g, t));
    h = generated_subgroup(g, seed);
  } else if (index) {
    if (*index >= a.lattice().size())
      throw Error(ErrorKind::NotSubgroup, "lattice index " + std::to_string(*index) + " out of range");
    h = a.lattice()[*index];
  } else {
    throw Error(ErrorKind::ConfigError, "give --gens or --index");
  }
  std::optional<Formation> form;
  if (!o.formation_tag.empty()) form = formation(o.formation_tag);
  auto v = evaluate_predicate(a, h, tag, form ? &*form : nullptr);
  Json doc{{"group", expr},
           {"subgroup", short_subgroup(g, h)},
           {"index", a.index_of(h)},
           {"predicate", v.kind},
           {"holds", v.holds},
           {"candidates", v.candidates}};
  if (!v.formation.empty()) doc["formation"] = v.formation;
  if (v.witness) {
    doc["witness"] = short_subgroup(g, v.witness->t);
    if (tag.rfind("supp:", 0) != 0) {
      doc["core"] = short_subgroup(g, v.witness->core);
      std::string replay = replay_witness(g, a.lattice(), h, v, form ? &*form : nullptr);
      doc["replay"] = replay.empty() ? "ok" : replay;
    }
  }
  emit(doc, o.format);
  return v.holds ? kOk : kDoesNotHold;
}

int cmd_corpus(const Options& o, const std::vector<std::string>& families, const std::vector<std::string>& extra) {
  CorpusConfig cc;
  cc.max_order = o.max_order;
  cc.families = {families.begin(), families.end()};
  cc.extra = extra;
  cc.limits = o.limits();
  auto corpus = build_corpus(cc);
  Json rows = Json::array();
  for (const auto& e : corpus) rows.push_back({{"expr", e.expr}, {"order", e.group.order()}});
  emit({{"groups", corpus.size()}, {"max_order", o.max_order}, {"rows", rows}, {"columns", {"expr", "order"}}}, o.format);
  return kOk;
}

struct VerifyFlags {
  std::string corpus = "default";
  std::vector<std::string> extra;
  std::string out_dir;
  std::size_t sample_cap = 0;
  std::size_t implication_max_order = 60;
  double skip_threshold = 0.2;
  std::size_t vacuity_floor = 10;
};

int cmd_verify(const std::string& id, const Options& o, const VerifyFlags& vf) {
  auto ids = resolve_theorem_ids(id);
  CorpusConfig cc;
  cc.max_order = o.max_order;
  cc.extra = vf.extra;
  cc.limits = o.limits();
  std::vector<CorpusEntry> corpus;
  if (vf.corpus != "empty") {
    if (vf.corpus != "default") {
      std::stringstream ss(vf.corpus);
      for (std::string f; std::getline(ss, f, ',');) cc.families.insert(f);
    }
    corpus = build_corpus(cc);
  }

  VerifyOptions opt;
  opt.suite.sample_cap = vf.sample_cap;
  opt.suite.seed = o.seed;
  opt.suite.implication_max_order = vf.implication_max_order;
  opt.suite.limits = o.limits();
  opt.jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  opt.corpus_description = {{"families", vf.corpus == "empty" ? Json("empty") : Json(vf.corpus)},
                            {"max_order", o.max_order},
                            {"extra", vf.extra}};
  auto cache = open_cache(o);
  std::mutex cache_mutex;
  if (cache) {
    opt.lattices = [&](const Group& g) -> std::optional<SubgroupLattice> {
      std::lock_guard<std::mutex> lock(cache_mutex);
      return cache->get_or_compute(g, o.limits());
    };
  }
  auto reports = verify(ids, corpus, opt);

  if (!vf.out_dir.empty()) {
    std::filesystem::create_directories(vf.out_dir);
    for (const auto& r : reports) {
      std::ofstream out(std::filesystem::path(vf.out_dir) / (r.theorem + ".json"), std::ios::trunc);
      out << r.to_json().dump(2) << "\n";
    }
  }

  int code = kOk;
  Json rows = Json::array();
  for (const auto& r : reports) {
    auto audit = vacuity_audit(r, vf.vacuity_floor);
    bool excessive = r.skip_rate() > vf.skip_threshold;
    rows.push_back({{"theorem", r.theorem},
                    {"instances", r.instances.size()},
                    {"hypothesis_true", r.hypothesis_true()},
                    {"nontrivial", r.nontrivial()},
                    {"skipped", r.skipped()},
                    {"violations", r.violations()},
                    {"low_signal", audit.low_signal}});
    if (r.violations()) code = kViolations;
    if (excessive && code == kOk) code = kExcessiveSkips;
  }
  if (o.format == "json" && vf.out_dir.empty()) {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(r.to_json());
    emit({{"reports", all}}, "json");
  } else {
    emit({{"groups", corpus.size()},
          {"rows", rows},
          {"columns", {"theorem", "instances", "hypothesis_true", "nontrivial", "skipped", "violations", "low_signal"}}},
         o.format);
  }
  if (cache)
    for (const auto& line : cache->log()) std::cerr << line << "\n";
  return code;
}

int cmd_cache(const std::string& action, const Options& o, const std::vector<std::string>& families) {
  if (o.cache_dir.empty()) throw Error(ErrorKind::ConfigError, "cache commands need --cache-dir");
  LatticeCache cache(o.cache_dir, o.seed);
  Json doc{{"action", action}, {"cache_dir", o.cache_dir}};
  if (action == "warm") {
    CorpusConfig cc;
    cc.max_order = o.max_order;
    cc.families = {families.begin(), families.end()};
    cc.limits = o.limits();
    std::size_t skipped = 0;
    for (const auto& e : build_corpus(cc)) {
      try {
        cache.get_or_compute(e.group, o.limits());
      } catch (const Error& err) {
        if (!err.is_cap_error()) throw;
        ++skipped;
      }
    }
    doc["computed"] = cache.misses();
    doc["already_cached"] = cache.hits();
    doc["skipped"] = skipped;
  } else if (action == "validate") {
    auto v = cache.validate(o.limits());
    doc["entries"] = v.entries;
    doc["rederived"] = v.rederived;
    doc["purged"] = v.purged.size();
    for (const auto& line : cache.log()) std::cerr << line << "\n";
  } else if (action == "purge") {
    doc["removed"] = cache.purge();
  } else {
    throw Error(ErrorKind::ConfigError, "unknown cache action '" + action + "'");
  }
  doc["entries_now"] = cache.entries().size();
  emit(doc, o.format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group toolkit: subgroup lattices, formations, embedding predicates and theorem suites"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or table")
        ->envname("FGT_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--max-order", o.max_order, "largest group order in the corpus")
        ->envname("FGT_MAX_ORDER")
        ->check(CLI::PositiveNumber);
    sub->add_option("--formation", o.formation_tag, "U, N, U_p:<p> or N_p:<p>")->envname("FGT_FORMATION");
    sub->add_option("--seed", o.seed, "seed for sampled choices")->envname("FGT_SEED");
    sub->add_option("--jobs", o.jobs, "worker threads, 0 for all cores")->envname("FGT_JOBS");
    sub->add_option("--cache-dir", o.cache_dir, "lattice cache directory")->envname("FGT_CACHE_DIR");
    sub->add_option("--table-cap", o.table_cap, "largest Cayley table")->envname("FGT_TABLE_CAP")->check(CLI::PositiveNumber);
    sub->add_option("--lattice-cap", o.lattice_cap, "largest group with a full lattice")
        ->envname("FGT_LATTICE_CAP")
        ->check(CLI::PositiveNumber);
    sub->add_option("--subgroup-cap", o.subgroup_cap, "largest subgroup count")
        ->envname("FGT_SUBGROUP_CAP")
        ->check(CLI::PositiveNumber);
  };

  std::string expr, gens, tag, id, action;
  std::optional<std::size_t> index;
  std::vector<std::string> families, extra;
  VerifyFlags vf;

  auto* analyze = app.add_subcommand("analyze", "structure of one group");
  analyze->add_option("group", expr, "group expression")->required();
  add_common(analyze);

  auto* subgroups = app.add_subcommand("subgroups", "list the subgroup lattice");
  subgroups->add_option("group", expr, "group expression")->required();
  add_common(subgroups);

  auto* check = app.add_subcommand("check", "evaluate an embedding predicate");
  check->add_option("group", expr, "group expression")->required();
  check->add_option("predicate", tag, "qn, sqn, wfsqn, fsqn, fqn, cn, fns, fhn, fnn or supp:<class>")->required();
  auto* gens_opt = check->add_option("--gens", gens, "generators, e.g. \"(1 2),(1 2 3)\" or element indices");
  check->add_option("--index", index, "lattice index")->excludes(gens_opt);
  add_common(check);

  auto* verify_cmd = app.add_subcommand("verify", "run theorem suites over the corpus");
  verify_cmd->add_option("theorem", id, "theorem id, family prefix, or all")->required();
  verify_cmd->add_option("--corpus", vf.corpus, "default, empty, or a comma list of families")->envname("FGT_CORPUS");
  verify_cmd->add_option("--extra", extra, "additional group expressions");
  verify_cmd->add_option("--out", vf.out_dir, "directory for per-theorem JSON reports")->envname("FGT_OUT");
  verify_cmd->add_option("--sample-cap", vf.sample_cap, "sample inner quantifiers above this size (0: exhaustive)")
      ->envname("FGT_SAMPLE_CAP");
  verify_cmd->add_option("--implication-max-order", vf.implication_max_order, "order bound for S4.IMPL")
      ->envname("FGT_IMPLICATION_MAX_ORDER");
  verify_cmd->add_option("--skip-threshold", vf.skip_threshold, "largest tolerated skip fraction")
      ->envname("FGT_SKIP_THRESHOLD")
      ->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--vacuity-floor", vf.vacuity_floor, "nontrivial instances below which a suite is flagged")
      ->envname("FGT_VACUITY_FLOOR");
  add_common(verify_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "list the corpus");
  corpus_cmd->add_option("--families", families, "restrict to these families");
  corpus_cmd->add_option("--extra", extra, "additional group expressions");
  add_common(corpus_cmd);

  auto* cache_cmd = app.add_subcommand("cache", "manage the lattice cache");
  cache_cmd->add_option("action", action, "warm, validate or purge")
      ->required()
      ->check(CLI::IsMember({"warm", "validate", "purge"}));
  cache_cmd->add_option("--families", families, "families to warm");
  add_common(cache_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    vf.extra = extra;
    if (*analyze) return cmd_analyze(expr, o);
    if (*subgroups) return cmd_subgroups(expr, o);
    if (*check) return cmd_check(expr, gens, index, tag, o);
    if (*verify_cmd) return cmd_verify(id, o, vf);
    if (*corpus_cmd) return cmd_corpus(o, families, extra);
    if (*cache_cmd) return cmd_cache(action, o, families);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
