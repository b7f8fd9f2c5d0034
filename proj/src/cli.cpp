#include "hitset/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hitset/eengine.hpp"
#include "hitset/exact.hpp"
#include "hitset/io.hpp"
#include "hitset/mc.hpp"
#include "hitset/reduce.hpp"

namespace hitset {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string count_text(const Count& c) { return c.str(); }

std::string set_text(const VertexSet& s) {
  std::string out;
  s.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1);
  });
  return out;
}

const char* method_name(BadnessMethod m) {
  switch (m) {
    case BadnessMethod::First: return "first";
    case BadnessMethod::Second: return "second";
    case BadnessMethod::Third: return "third";
  }
  return "?";
}

// A non-full hypergraph restricted to the vertices its edges cover. Rows
// computed on the restriction are lifted back with `fill` at the uncovered
// positions.
struct Support {
  Hypergraph restricted;
  std::vector<std::size_t> vertices;  // restricted index -> original vertex
  std::size_t width = 0;
  bool full = true;

  explicit Support(const Hypergraph& h) : width(h.width()) {
    full = h.is_full();
    if (full) {
      restricted = h;
      return;
    }
    VertexSet cover(width);
    for (const auto& e : h.edges()) cover |= e;
    vertices = cover.indices();
    std::vector<std::size_t> local(width, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) {
      VertexSet s(vertices.size());
      e.for_each([&](std::size_t v) { s.set(local[v]); });
      edges.push_back(std::move(s));
    }
    restricted = Hypergraph(vertices.size(), std::move(edges));
  }

  VertexSet lift(const VertexSet& s) const {
    if (full) return s;
    VertexSet out(width);
    s.for_each([&](std::size_t i) { out.set(vertices[i]); });
    return out;
  }

  // Free positions stay free (`fill_twos`) or become 0.
  WildcardRow lift(const WildcardRow& row, bool fill_twos) const {
    if (full) return row;
    VertexSet uncovered = VertexSet::full(width);
    for (auto v : vertices) uncovered.reset(v);
    VertexSet zeros = lift(row.zeros()), twos = lift(row.twos());
    (fill_twos ? twos : zeros) |= uncovered;
    std::vector<VertexSet> bubbles;
    for (const auto& b : row.bubbles()) bubbles.push_back(lift(b));
    return WildcardRow(width, row.kind(), std::move(zeros), lift(row.ones()), std::move(twos), std::move(bubbles));
  }

  // A count over the restriction times 2^(uncovered) when those are free.
  Count scale(const Count& c, bool free_uncovered) const {
    if (full || !free_uncovered) return c;
    return c << (width - vertices.size());
  }
};

Hypergraph load_hypergraph(const RunConfig& config, std::ostream& err) {
  if (config.input.empty()) throw UsageError("missing input file");
  std::istringstream in(read_file(config.input));
  auto h = parse_hypergraph(in);
  if (!h.is_full()) err << "warning: hypergraph does not cover every vertex\n";
  return h;
}

void write_rows_text(std::ostream& out, const std::vector<WildcardRow>& rows) {
  for (const auto& r : rows) out << serialize_row(r) << '\n';
}

json rows_json(const std::vector<WildcardRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back({{"row", serialize_row(r)}, {"cardinality", count_text(row_cardinality(r))}});
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::vector<WildcardRow> run_ehs(const Hypergraph& h, const RunConfig& config, Count& total, std::size_t& impositions) {
  Support sup(h);
  ExactOptions opts;
  opts.feasibility = config.feasibility;
  std::vector<WildcardRow> rows;
  if (config.reduce) {
    auto red = reduce_hypergraph(sup.restricted);
    auto run = enumerate_ehs(red.reduced, opts);
    rows = inflate_rows(run.final_rows, red.map);
    impositions = run.impositions;
  } else {
    auto run = enumerate_ehs(sup.restricted, opts);
    rows = std::move(run.final_rows);
    impositions = run.impositions;
  }
  total = 0;
  for (auto& r : rows) {
    r = sup.lift(r, true);
    total += row_cardinality(r);
  }
  return rows;
}

int cmd_ehs(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto h = load_hypergraph(config, err);
  Count total;
  std::size_t impositions = 0;
  auto rows = run_ehs(h, config, total, impositions);
  if (config.format == OutputFormat::Json) {
    emit(out, {{"command", "ehs"}, {"rows", rows_json(rows)}, {"row_count", rows.size()}, {"count", count_text(total)},
               {"impositions", impositions}});
  } else {
    write_rows_text(out, rows);
    out << "rows " << rows.size() << "\ncount " << total << '\n';
  }
  return kExitOk;
}

int cmd_matchings(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.input.empty()) throw UsageError("missing graph file");
  std::istringstream in(read_file(config.input));
  auto g = parse_graph(in);
  Hypergraph stars;
  try {
    stars = stars_hypergraph(g.vertices, g.edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  Count total;
  std::size_t impositions = 0;
  auto rows = run_ehs(stars, config, total, impositions);
  if (config.format == OutputFormat::Json) {
    emit(out, {{"command", "matchings"}, {"rows", rows_json(rows)}, {"row_count", rows.size()},
               {"count", count_text(total)}});
  } else {
    write_rows_text(out, rows);
    out << "rows " << rows.size() << "\ncount " << total << '\n';
  }
  return kExitOk;
}

EngineOptions engine_options(const RunConfig& config) {
  EngineOptions o;
  o.feasibility = config.feasibility;
  o.cutoff = config.cutoff;
  return o;
}

int cmd_hs(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.reduce) throw UsageError("--reduce applies to ehs, matchings and mhs only");
  auto h = load_hypergraph(config, err);
  Support sup(h);
  auto s = enumerate_hs(sup.restricted, engine_options(config));
  std::vector<WildcardRow> rows;
  Count total = 0;
  for (const auto& r : s.rows) {
    rows.push_back(sup.lift(r, true));
    total += row_cardinality(rows.back());
  }
  if (config.format == OutputFormat::Json) {
    json degrees = s.degrees();
    emit(out, {{"command", "hs"},
               {"rows", rows_json(rows)},
               {"row_count", rows.size()},
               {"count", count_text(total)},
               {"degrees", degrees},
               {"impositions", s.stats.impositions}});
  } else {
    write_rows_text(out, rows);
    out << "rows " << rows.size() << "\ncount " << total << '\n';
  }
  return kExitOk;
}

// Loads the cached family when its header hash matches, else computes and
// (when a path is given) stores it.
MinNotMCFamily cached_mnmc(const Hypergraph& h, const RunConfig& config, std::ostream& err) {
  auto hash = hash_hex(hypergraph_hash(h));
  if (!config.mnmc_cache.empty()) {
    std::ifstream probe(config.mnmc_cache);
    if (probe) {
      try {
        auto parsed = parse_family(probe);
        bool match = false;
        for (const auto& c : parsed.header_comments)
          if (c.find("hash " + hash) != std::string::npos) match = true;
        if (match && parsed.family.width() == h.width()) return MinNotMCFamily(std::move(parsed.family));
        err << "note: MinNotMC cache is stale, recomputing\n";
      } catch (const ParseError& e) {
        err << "note: unreadable MinNotMC cache (" << e.what() << "), recomputing\n";
      }
    }
  }
  auto fam = min_not_mc(h, config.workers);
  if (!config.mnmc_cache.empty()) {
    std::ofstream os(config.mnmc_cache);
    if (!os) throw std::runtime_error("cannot write " + config.mnmc_cache);
    os << "# hash " << hash << '\n' << serialize_family(fam.family);
  }
  return fam;
}

DriverConfig driver_config(const RunConfig& config) {
  DriverConfig d;
  d.samples = config.samples;
  d.seed = config.seed;
  d.badness.mode = config.badness;
  d.grade = config.grade;
  d.feasibility = config.feasibility;
  d.cutoff = config.cutoff;
  d.workers = config.workers;
  return d;
}

json stats_json(const MinhitStats& s) {
  return {{"semifinal_rows", s.rows},
          {"average_promise", s.average_promise},
          {"average_degree", s.average_degree},
          {"mu", s.mu},
          {"minimum_count", count_text(s.minimum_count)},
          {"mnmc_size", s.mnmc_size},
          {"superkilled", s.superkilled},
          {"percent_very_good", s.shares.very_good},
          {"percent_merely_good", s.shares.merely_good},
          {"percent_bad", s.shares.bad},
          {"percent_unresolved", s.shares.unresolved}};
}

void stats_text(std::ostream& out, const MinhitStats& s) {
  out << "semifinal_rows " << s.rows << "\nmu " << s.mu << "\nminimum_count " << s.minimum_count << "\nmnmc_size "
      << s.mnmc_size << "\nsuperkilled " << s.superkilled << '\n';
  auto old = out.precision(4);
  out << "average_promise " << s.average_promise << "\naverage_degree " << s.average_degree << "\npercent_very_good "
      << s.shares.very_good << "\npercent_merely_good " << s.shares.merely_good << "\npercent_bad " << s.shares.bad
      << "\npercent_unresolved " << s.shares.unresolved << '\n';
  out.precision(old);
}

json verdicts_json(const MinhitResult& r, const Support& sup) {
  json a = json::array();
  for (const auto& v : r.verdicts) {
    json j = {{"row", serialize_row(sup.lift(r.semifinal.rows[v.row_index], false))},
              {"class", to_string(v.row_class)},
              {"promise", count_text(v.promise)},
              {"degree", v.degree},
              {"superkilled", v.superkilled}};
    if (v.sampled) {
      j["alpha"] = v.alpha;
      j["samples"] = v.samples;
      j["likely"] = to_string(v.likely);
    }
    if (v.badness_method) j["badness_method"] = method_name(*v.badness_method);
    a.push_back(std::move(j));
  }
  return a;
}

void verdicts_text(std::ostream& out, const MinhitResult& r, const Support& sup) {
  for (const auto& v : r.verdicts) {
    out << serialize_row(sup.lift(r.semifinal.rows[v.row_index], false)) << " : " << to_string(v.row_class);
    if (v.sampled) out << ' ' << v.alpha << '/' << v.samples;
    if (v.badness_method) out << " badness=" << method_name(*v.badness_method);
    out << '\n';
  }
}

int cmd_minhit(const RunConfig& config, std::ostream& out, std::ostream& err, bool classify_only) {
  auto h = load_hypergraph(config, err);
  Support sup(h);
  auto dconf = driver_config(config);
  if (classify_only) dconf.grade = Grade::Second;
  if (config.reduce && dconf.grade == Grade::Second) throw UsageError("--reduce needs --grade first");

  const Hypergraph* work = &sup.restricted;
  std::optional<Reduction> red;
  if (config.reduce) {
    red = reduce_hypergraph(sup.restricted);
    work = &red->reduced;
  }
  std::optional<MinNotMCFamily> mnmc;
  if (dconf.use_mnmc) mnmc = cached_mnmc(*work, config, err);

  MinhitResult res;
  try {
    res = minhit(*work, dconf, mnmc ? &*mnmc : nullptr);
  } catch (const UnresolvedVerdicts& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnresolved;
  }

  const bool json_mode = config.format == OutputFormat::Json;
  json j;
  j["command"] = classify_only ? "classify" : "mhs";
  j["grade"] = res.grade == Grade::First ? "first" : "second";
  if (res.grade == Grade::First) {
    std::vector<WildcardRow> rows = res.final_rows;
    if (red) rows = inflate_rows(rows, red->map);
    Count total = 0;
    for (auto& r : rows) {
      r = sup.lift(r, false);
      total += row_cardinality(r);
    }
    if (json_mode) {
      j["rows"] = rows_json(rows);
      j["row_count"] = rows.size();
      j["count"] = count_text(total);
    } else {
      write_rows_text(out, rows);
      out << "rows " << rows.size() << "\ncount " << total << '\n';
    }
  } else {
    if (json_mode) {
      j["verdicts"] = verdicts_json(res, sup);
    } else {
      verdicts_text(out, res, sup);
    }
  }
  const auto& e = res.estimate;
  if (json_mode) {
    j["estimate"] = {{"total", e.total},
                     {"very_good_exact", count_text(e.very_good_exact)},
                     {"merely_good", e.merely_good},
                     {"factor", e.factor}};
    j["stats"] = stats_json(res.stats);
    emit(out, j);
  } else {
    auto old = out.precision(10);
    out << "estimate " << e.total << '\n';
    out.precision(old);
    stats_text(out, res.stats);
  }
  return kExitOk;
}

int cmd_minnotmc(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto h = load_hypergraph(config, err);
  if (!h.is_full()) throw UsageError("minnotmc needs a hypergraph that covers every vertex");
  auto fam = min_not_mc(h, config.workers);
  auto hash = hash_hex(hypergraph_hash(h));
  if (config.format == OutputFormat::Json) {
    json sets = json::array();
    for (const auto& s : fam.family) sets.push_back(vertices_of(s));
    emit(out, {{"command", "minnotmc"}, {"hash", hash}, {"sets", sets}, {"size", fam.size()}});
  } else if (config.output.empty()) {
    out << "# hash " << hash << '\n' << serialize_family(fam.family);
  }
  if (!config.output.empty()) {
    std::ofstream os(config.output);
    if (!os) throw std::runtime_error("cannot write " + config.output);
    os << "# hash " << hash << '\n' << serialize_family(fam.family);
  }
  return kExitOk;
}

int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto h = load_hypergraph(config, err);
  Support sup(h);
  auto s = enumerate_hs(sup.restricted, engine_options(config));
  auto sets = sample_mhs(sup.restricted, s, config.count, config.seed);
  if (config.format == OutputFormat::Json) {
    json a = json::array();
    for (const auto& x : sets) a.push_back(vertices_of(sup.lift(x)));
    emit(out, {{"command", "sample"}, {"sets", a}});
  } else {
    for (const auto& x : sets) out << set_text(sup.lift(x)) << '\n';
  }
  return kExitOk;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto h = load_hypergraph(config, err);
  Support sup(h);
  Count ehs_total;
  std::size_t impositions = 0;
  run_ehs(h, config, ehs_total, impositions);
  EngineOptions eopts;
  eopts.feasibility = config.feasibility;
  auto s = enumerate_hs(sup.restricted, eopts);
  Count hs_total = sup.scale(s.total_cardinality(), true);

  auto dconf = driver_config(config);
  auto mnmc = cached_mnmc(sup.restricted, config, err);
  std::optional<Count> mhs_total;
  double estimate = 0;
  try {
    auto res = minhit(sup.restricted, dconf, &mnmc);
    mhs_total = res.exact_count;
    estimate = res.estimate.total;
  } catch (const UnresolvedVerdicts& e) {
    err << "error: " << e.what() << '\n';
  }
  if (config.format == OutputFormat::Json) {
    json j = {{"command", "count"}, {"ehs", count_text(ehs_total)}, {"hs", count_text(hs_total)}};
    if (mhs_total) j["mhs"] = count_text(*mhs_total);
    j["mhs_estimate"] = estimate;
    emit(out, j);
  } else {
    out << "ehs " << ehs_total << "\nhs " << hs_total << '\n';
    if (mhs_total) out << "mhs " << *mhs_total << '\n';
    auto old = out.precision(10);
    out << "mhs_estimate " << estimate << '\n';
    out.precision(old);
  }
  return mhs_total || config.grade == Grade::Second ? kExitOk : kExitUnresolved;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
  Signature sig = config.signature;
  sig.seed = config.seed;
  Hypergraph h;
  try {
    h = random_hypergraph(sig);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto text = "# signature " + std::to_string(sig.w) + ' ' + std::to_string(sig.h) + ' ' + std::to_string(sig.k) +
              " seed " + std::to_string(sig.seed) + '\n' + serialize_hypergraph(h);
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream os(config.output);
    if (!os) throw std::runtime_error("cannot write " + config.output);
    os << text;
  }
  return kExitOk;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& c = config.command;
    if (c == "gen") return cmd_gen(config, out);
    if (c == "ehs") return cmd_ehs(config, out, err);
    if (c == "matchings") return cmd_matchings(config, out, err);
    if (c == "hs") return cmd_hs(config, out, err);
    if (c == "mhs") return cmd_minhit(config, out, err, false);
    if (c == "classify") return cmd_minhit(config, out, err, true);
    if (c == "minnotmc") return cmd_minnotmc(config, out, err);
    if (c == "sample") return cmd_sample(config, out, err);
    if (c == "count") return cmd_count(config, out, err);
    err << "error: unknown command '" << c << "'\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << config.input << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << "error: limit exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hitset
