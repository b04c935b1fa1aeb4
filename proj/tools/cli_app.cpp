#include "cli_app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliffsynth/baseline.hpp"
#include "cliffsynth/bitmatrix.hpp"
#include "cliffsynth/circuit.hpp"
#include "cliffsynth/optdb.hpp"
#include "cliffsynth/search.hpp"
#include "cliffsynth/symplectic.hpp"
#include "cliffsynth/synth_result.hpp"

namespace cliffsynth::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotGroup = 3;
constexpr int kExitDb = 4;
constexpr int kExitAbandoned = 5;
constexpr int kExitGuard = 6;
constexpr int kExitInternal = 70;

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

bool spit(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  return static_cast<bool>(f);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Input matrix of either kind; the symplectic text format announces itself
// with an "sp" header token, plain integer headers are parity matrices.
struct InputMatrix {
  bool is_sp = false;
  BitMatrix gl;
  SpMatrix sp;
  int qubits() const { return is_sp ? sp.n : gl.rows(); }
  const char* kind_name() const { return is_sp ? "sp" : "gl"; }
};

int read_input(const std::string& path, const std::string& kind,
               InputMatrix& out, std::ostream& err) {
  const auto text = slurp(path);
  if (!text) {
    err << "cannot read " << path << "\n";
    return kExitParse;
  }
  std::istringstream probe(*text);
  std::string tok;
  probe >> tok;
  std::string perr;
  if (tok == "sp") {
    const auto m = parse_sp(*text, &perr);
    if (!m) {
      err << path << ": " << perr << "\n";
      return kExitParse;
    }
    if (kind == "gl") {
      err << path << ": holds a symplectic matrix but --kind gl was given\n";
      return kExitParse;
    }
    out.is_sp = true;
    out.sp = *m;
    return kExitOk;
  }
  const auto m = parse_matrix(*text, &perr);
  if (!m) {
    err << path << ": " << perr << "\n";
    return kExitParse;
  }
  if (kind == "sp") {
    err << path << ": holds a parity matrix but --kind sp was given\n";
    return kExitParse;
  }
  out.is_sp = false;
  out.gl = *m;
  return kExitOk;
}

SearchHeuristic heuristic_from(const std::string& name,
                               SearchHeuristic fallback) {
  if (name == "vector") return SearchHeuristic::Vector;
  if (name == "hsum") return SearchHeuristic::HSum;
  if (name == "hprod") return SearchHeuristic::HProd;
  return fallback;
}

struct SynthArgs {
  std::string input;
  std::string out;
  std::string method = "greedy";
  std::string kind;
  std::string heuristic;
  std::string mode = "count";
  std::string db;
  double r = 3.0;
  int maxq = 0;
  int maxwait = 10;
  long max_nodes = 10'000'000;
};

// Gate count, two-qubit depth and the identity-replayable circuit of one
// synthesis outcome, shared by synth and bench.
struct RunOutcome {
  int gates = 0;
  int depth2q = 0;
  Circuit full;
};

RunOutcome outcome_gl(const GlSynth& s) {
  return {two_qubit_count(s.circuit), depth(s.circuit), s.full_circuit()};
}
RunOutcome outcome_sp(const SpSynth& s) {
  return {two_qubit_count(s.circuit), depth(s.circuit), s.full_circuit()};
}

// Shared method dispatch. Returns an exit code; on success fills `res`.
int run_method(const InputMatrix& in, const std::string& method,
               const SynthArgs& a, const TreeDb* db, RunOutcome& res,
               std::ostream& err) {
  const bool min_depth = a.mode == "depth";
  if (method == "gauss") {
    if (in.is_sp) {
      err << "method gauss applies to parity matrices only\n";
      return kExitParse;
    }
    res = outcome_gl(*gaussian_synth(in.gl));
    return kExitOk;
  }
  if (method == "volanto") {
    if (!in.is_sp) {
      err << "method volanto applies to symplectic matrices only\n";
      return kExitParse;
    }
    res = outcome_sp(*volanto_synth(in.sp));
    return kExitOk;
  }
  if (method == "greedy") {
    GreedyConfig cfg;
    cfg.heuristic = heuristic_from(a.heuristic, SearchHeuristic::Vector);
    cfg.min_depth = min_depth;
    cfg.max_wait = a.maxwait;
    if (in.is_sp) {
      const auto r = greedy_synth(in.sp, cfg);
      if (!r.ok) {
        err << "greedy search abandoned: no heuristic progress for "
            << cfg.max_wait << " steps\n";
        return kExitAbandoned;
      }
      res = outcome_sp(r.synth);
    } else {
      const auto r = greedy_synth(in.gl, cfg);
      if (!r.ok) {
        err << "greedy search abandoned: no heuristic progress for "
            << cfg.max_wait << " steps\n";
        return kExitAbandoned;
      }
      res = outcome_gl(r.synth);
    }
    return kExitOk;
  }
  if (method == "astar") {
    AstarConfig cfg;
    cfg.heuristic = heuristic_from(a.heuristic, SearchHeuristic::HSum);
    if (cfg.heuristic == SearchHeuristic::Vector) {
      err << "astar needs a scalar heuristic (hsum or hprod)\n";
      return kExitParse;
    }
    cfg.r = a.r;
    cfg.max_q = a.maxq;
    cfg.min_depth = min_depth;
    cfg.max_nodes = a.max_nodes;
    if (in.is_sp) {
      const auto r = astar_synth(in.sp, cfg);
      if (!r.ok) {
        err << "search exhausted its node budget before reaching a terminal "
               "form\n";
        return kExitAbandoned;
      }
      res = outcome_sp(r.synth);
    } else {
      const auto r = astar_synth(in.gl, cfg);
      if (!r.ok) {
        err << "search exhausted its node budget before reaching a terminal "
               "form\n";
        return kExitAbandoned;
      }
      res = outcome_gl(r.synth);
    }
    return kExitOk;
  }
  if (method == "optimal") {
    if (db == nullptr) {
      err << "--db is required for method optimal\n";
      return kExitDb;
    }
    if (in.is_sp != (db->kind == DbKind::Sp) || in.qubits() != db->n) {
      err << "database holds " << (db->kind == DbKind::Sp ? "sp" : "gl")
          << " classes for n=" << db->n << ", input is " << in.kind_name()
          << " n=" << in.qubits() << "\n";
      return kExitDb;
    }
    if (in.is_sp) {
      const auto s = optimal_synth(in.sp, *db);
      if (!s) {
        err << "input class is not present in the database\n";
        return kExitDb;
      }
      res = outcome_sp(*s);
    } else {
      const auto s = optimal_synth(in.gl, *db);
      if (!s) {
        err << "input class is not present in the database\n";
        return kExitDb;
      }
      res = outcome_gl(*s);
    }
    return kExitOk;
  }
  err << "unknown method " << method << "\n";
  return kExitParse;
}

int do_synth(const SynthArgs& a, std::ostream& out, std::ostream& err) {
  InputMatrix in;
  if (const int rc = read_input(a.input, a.kind, in, err)) return rc;

  if (in.is_sp) {
    if (!is_symplectic(in.sp)) {
      err << a.input << ": matrix does not preserve the symplectic form\n";
      return kExitNotGroup;
    }
  } else if (!inverse(in.gl)) {
    err << a.input << ": matrix is singular\n";
    return kExitNotGroup;
  }

  std::optional<TreeDb> db;
  if (a.method == "optimal") {
    if (a.db.empty()) {
      err << "--db is required for method optimal\n";
      return kExitDb;
    }
    try {
      db = load_db(a.db);
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return kExitDb;
    }
  }

  RunOutcome res;
  if (const int rc =
          run_method(in, a.method, a, db ? &*db : nullptr, res, err))
    return rc;

  const std::string path = a.out.empty() ? a.input + ".circ" : a.out;
  if (!spit(path, circuit_to_text(res.full))) {
    err << "cannot write " << path << "\n";
    return kExitParse;
  }
  out << "n=" << in.qubits() << " kind=" << in.kind_name()
      << " method=" << a.method << " gates=" << res.gates
      << " depth=" << res.depth2q << " out=" << path << "\n";
  return kExitOk;
}

struct DbgenArgs {
  int n = 0;
  std::string kind;
  std::string mode = "count";
  std::string out;
  std::string stats;
  bool allow_large = false;
};

std::string stats_csv(const TreeDb& db) {
  const DbStats st = class_stats(db);
  std::ostringstream csv;
  csv << "cost,classes\n";
  for (size_t c = 0; c < st.per_cost.size(); ++c)
    csv << c << "," << st.per_cost[c] << "\n";
  return csv.str();
}

int do_dbgen(const DbgenArgs& a, std::ostream& out, std::ostream& err) {
  const DbKind kind = a.kind == "sp" ? DbKind::Sp : DbKind::Gl;
  const DbMode mode = a.mode == "depth" ? DbMode::Depth : DbMode::Count;
  if (a.allow_large)
    out << "resource estimate: " << db_resource_estimate(a.n, kind, mode)
        << "\n";
  TreeDb db;
  try {
    db = generate_db(a.n, kind, mode, DbOptions{a.allow_large});
  } catch (const DbGuardError& e) {
    err << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
  try {
    save_db(db, a.out);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
  const std::string spath = a.stats.empty() ? a.out + ".csv" : a.stats;
  if (!spit(spath, stats_csv(db))) {
    err << "cannot write " << spath << "\n";
    return kExitParse;
  }
  const DbStats st = class_stats(db);
  out << "kind=" << (kind == DbKind::Sp ? "sp" : "gl") << " n=" << a.n
      << " mode=" << (mode == DbMode::Depth ? "depth" : "count")
      << " classes=" << st.total << " max_cost=" << st.max_cost
      << " db=" << a.out << " stats=" << spath << "\n";
  return kExitOk;
}

int do_stats(const std::string& dbpath, const std::string& outpath,
             std::ostream& out, std::ostream& err) {
  TreeDb db;
  try {
    db = load_db(dbpath);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitDb;
  }
  const std::string csv = stats_csv(db);
  if (outpath.empty()) {
    out << csv;
  } else if (!spit(outpath, csv)) {
    err << "cannot write " << outpath << "\n";
    return kExitParse;
  }
  return kExitOk;
}

int do_verify(const std::string& mpath, const std::string& cpath,
              const std::string& kind, std::ostream& out, std::ostream& err) {
  InputMatrix in;
  if (const int rc = read_input(mpath, kind, in, err)) return rc;
  const auto ctext = slurp(cpath);
  if (!ctext) {
    err << "cannot read " << cpath << "\n";
    return kExitParse;
  }
  std::string perr;
  const auto circ = parse_circuit(*ctext, in.qubits(), &perr);
  if (!circ) {
    err << cpath << ": " << perr << "\n";
    return kExitParse;
  }
  bool ok = false;
  try {
    if (in.is_sp)
      ok = replay(*circ, SpMatrix(in.sp.n)) == in.sp;
    else
      ok = replay(*circ, BitMatrix::identity(in.gl.rows())) == in.gl;
  } catch (const std::exception& e) {
    err << "circuit does not apply to a " << in.kind_name()
        << " matrix: " << e.what() << "\n";
    return kExitParse;
  }
  if (!ok) {
    out << "mismatch\n";
    return kExitMismatch;
  }
  out << "ok\n";
  return kExitOk;
}

struct BenchArgs {
  std::string kind;
  std::string nlist;
  std::string methods;
  std::string baseline;
  std::string db;
  std::string out;
  std::string heuristic;
  std::string mode = "count";
  int samples = 100;
  uint64_t seed = 1;
  double r = 3.0;
  int maxq = 0;
  int maxwait = 10;
  long max_nodes = 10'000'000;
  bool no_timing = false;
  bool exhaustive = false;
};

// All invertible n x n parity matrices for the exhaustive flag (n <= 4).
std::vector<BitMatrix> enumerate_invertible(int n) {
  std::vector<BitMatrix> all;
  const uint64_t patterns = uint64_t{1} << (n * n);
  for (uint64_t bits = 0; bits < patterns; ++bits) {
    BitMatrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if ((bits >> (n * r + c)) & 1) m.set(r, c, true);
    if (inverse(m)) all.push_back(std::move(m));
  }
  return all;
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const bool sp = a.kind == "sp";

  std::vector<int> ns;
  for (const std::string& tok : split_list(a.nlist)) {
    try {
      const int n = std::stoi(tok);
      if (n < 1 || n > 512) throw std::out_of_range("n");
      ns.push_back(n);
    } catch (const std::exception&) {
      err << "bad value in --n list: " << tok << "\n";
      return kExitParse;
    }
  }
  if (ns.empty()) {
    err << "--n needs at least one size\n";
    return kExitParse;
  }

  std::vector<std::string> methods = split_list(
      a.methods.empty() ? (sp ? "volanto,greedy,astar" : "gauss,greedy,astar")
                        : a.methods);
  const std::string baseline =
      a.baseline.empty() ? (sp ? "volanto" : "gauss") : a.baseline;
  auto method_ok = [&](const std::string& m) {
    if (m == "greedy" || m == "astar" || m == "optimal") return true;
    if (m == "gauss") return !sp;
    if (m == "volanto") return sp;
    return false;
  };
  for (const std::string& m : methods)
    if (!method_ok(m)) {
      err << "method " << m << " is not valid for kind " << a.kind << "\n";
      return kExitParse;
    }
  if (!method_ok(baseline)) {
    err << "baseline " << baseline << " is not valid for kind " << a.kind
        << "\n";
    return kExitParse;
  }

  const bool needs_db =
      baseline == "optimal" ||
      std::find(methods.begin(), methods.end(), "optimal") != methods.end();
  std::optional<TreeDb> db;
  if (needs_db) {
    if (a.db.empty()) {
      err << "--db is required when benchmarking the optimal method\n";
      return kExitDb;
    }
    try {
      db = load_db(a.db);
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return kExitDb;
    }
    if ((db->kind == DbKind::Sp) != sp) {
      err << "database kind does not match --kind\n";
      return kExitDb;
    }
    for (int n : ns)
      if (n != db->n) {
        err << "database covers n=" << db->n
            << " but --n asks for n=" << n << "\n";
        return kExitDb;
      }
  }

  if (a.exhaustive && (sp || ns.size() != 1 || ns[0] > 4)) {
    err << "--exhaustive enumerates parity matrices for a single n <= 4\n";
    return kExitParse;
  }

  SynthArgs knobs;
  knobs.heuristic = a.heuristic;
  knobs.mode = a.mode;
  knobs.r = a.r;
  knobs.maxq = a.maxq;
  knobs.maxwait = a.maxwait;
  knobs.max_nodes = a.max_nodes;

  std::ostringstream csv;
  csv << "instance_id,n,kind,method,gates,depth,wall_ms,saving_pct\n";

  // One timed synthesis; failures leave the numeric fields empty.
  struct Cell {
    bool ok = false;
    int gates = 0;
    int depth2q = 0;
    double ms = 0.0;
  };
  std::ostringstream devnull;
  auto run_one = [&](const InputMatrix& in, const std::string& method) {
    Cell cell;
    RunOutcome res;
    const auto t0 = std::chrono::steady_clock::now();
    const int rc =
        run_method(in, method, knobs, db ? &*db : nullptr, res, devnull);
    const auto t1 = std::chrono::steady_clock::now();
    cell.ms =
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() /
        1e6;
    if (rc == kExitOk) {
      cell.ok = true;
      cell.gates = res.gates;
      cell.depth2q = res.depth2q;
    }
    return cell;
  };

  long id = 0;
  long failures = 0;
  for (int n : ns) {
    std::vector<InputMatrix> instances;
    if (a.exhaustive) {
      for (BitMatrix& m : enumerate_invertible(n)) {
        InputMatrix in;
        in.gl = std::move(m);
        instances.push_back(std::move(in));
      }
    } else {
      for (int s = 0; s < a.samples; ++s) {
        InputMatrix in;
        const uint64_t seed = a.seed + static_cast<uint64_t>(id + s);
        if (sp) {
          in.is_sp = true;
          in.sp = random_sp(n, seed);
        } else {
          in.gl = random_gl(n, seed);
        }
        instances.push_back(std::move(in));
      }
    }
    for (const InputMatrix& in : instances) {
      const Cell base = run_one(in, baseline);
      for (const std::string& method : methods) {
        const Cell cell =
            method == baseline ? base : run_one(in, method);
        csv << id << "," << n << "," << a.kind << "," << method << ",";
        if (cell.ok)
          csv << cell.gates << "," << cell.depth2q;
        else
          csv << ",";
        csv << "," << std::fixed << std::setprecision(3)
            << (a.no_timing ? 0.0 : cell.ms) << ",";
        if (cell.ok && base.ok) {
          double saving = 0.0;
          if (base.gates > 0)
            saving = 100.0 * (base.gates - cell.gates) / base.gates;
          else if (cell.gates != 0)
            saving = -100.0;
          csv << std::fixed << std::setprecision(2) << saving;
        }
        csv << "\n";
        if (!cell.ok) {
          ++failures;
          err << "instance " << id << " n=" << n << " method=" << method
              << ": no result\n";
        }
      }
      ++id;
    }
  }

  if (a.out.empty()) {
    out << csv.str();
  } else if (!spit(a.out, csv.str())) {
    err << "cannot write " << a.out << "\n";
    return kExitParse;
  }
  err << "instances=" << id << " failures=" << failures << "\n";
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "CNOT and Clifford circuit synthesis over GF(2) matrices.\n"
      "Exit codes: 0 ok, 1 verify mismatch, 2 usage/parse error, 3 input\n"
      "not invertible or not symplectic, 4 database missing/insufficient,\n"
      "5 search abandoned, 6 resource guard."};
  app.require_subcommand(1);

  const auto kind_check = CLI::IsMember({"gl", "sp"});
  const auto mode_check = CLI::IsMember({"count", "depth"});
  const auto heur_check = CLI::IsMember({"vector", "hsum", "hprod"});
  const auto method_check =
      CLI::IsMember({"gauss", "volanto", "greedy", "astar", "optimal"});

  SynthArgs sargs;
  CLI::App* synth = app.add_subcommand(
      "synth", "Synthesize a circuit for a matrix file; writes the circuit "
               "text next to the input unless --out is given.");
  synth->add_option("input", sargs.input, "matrix file")->required();
  synth->add_option("-o,--out", sargs.out, "circuit output file");
  synth->add_option("--method", sargs.method, "synthesis method")
      ->check(method_check)
      ->capture_default_str();
  synth->add_option("--kind", sargs.kind, "expected matrix kind")
      ->check(kind_check);
  synth->add_option("--heuristic", sargs.heuristic,
                    "search heuristic (default: vector for greedy, hsum for "
                    "astar)")
      ->check(heur_check);
  synth->add_option("--mode", sargs.mode, "minimize gate count or depth")
      ->check(mode_check)
      ->capture_default_str();
  synth->add_option("--db", sargs.db, "class database for method optimal");
  synth->add_option("--r", sargs.r, "astar heuristic weight")
      ->capture_default_str();
  synth->add_option("--maxq", sargs.maxq,
                    "astar queue bound (0 = 100 below 16 qubits, else 10)")
      ->capture_default_str();
  synth->add_option("--maxwait", sargs.maxwait,
                    "greedy patience before abandoning")
      ->capture_default_str();
  synth->add_option("--max-nodes", sargs.max_nodes,
                    "astar node expansion budget")
      ->capture_default_str();

  DbgenArgs dargs;
  CLI::App* dbgen = app.add_subcommand(
      "dbgen", "Generate an equivalence-class database and its histogram "
               "CSV.");
  dbgen->add_option("--n", dargs.n, "matrix size / qubit count")->required();
  dbgen->add_option("--kind", dargs.kind, "gl or sp")
      ->required()
      ->check(kind_check);
  dbgen->add_option("--mode", dargs.mode, "classify by count or depth")
      ->check(mode_check)
      ->capture_default_str();
  dbgen->add_option("-o,--out", dargs.out, "database output file")->required();
  dbgen->add_option("--stats", dargs.stats,
                    "histogram CSV path (default: <out>.csv)");
  dbgen->add_flag("--allow-large", dargs.allow_large,
                  "lift the default size guard (prints a resource estimate)");

  std::string stats_db, stats_out;
  CLI::App* stats = app.add_subcommand(
      "stats", "Print the per-cost class histogram of a database as CSV.");
  stats->add_option("--db", stats_db, "database file")->required();
  stats->add_option("-o,--out", stats_out, "CSV output file (default stdout)");

  BenchArgs bargs;
  CLI::App* bench = app.add_subcommand(
      "bench", "Run methods over random instances and emit one CSV row per "
               "(instance, method).");
  bench->add_option("--kind", bargs.kind, "gl or sp")
      ->required()
      ->check(kind_check);
  bench->add_option("--n", bargs.nlist, "comma-separated sizes, e.g. 4,8,16")
      ->required();
  bench->add_option("--samples", bargs.samples, "instances per size")
      ->capture_default_str();
  bench->add_option("--seed", bargs.seed,
                    "base seed; instance i uses seed+i")
      ->capture_default_str();
  bench->add_option("--methods", bargs.methods,
                    "comma-separated methods (default gauss|volanto,greedy,"
                    "astar)");
  bench->add_option("--baseline", bargs.baseline,
                    "method the saving column compares against (default "
                    "gauss/volanto)");
  bench->add_option("--db", bargs.db, "class database for method optimal");
  bench->add_option("-o,--out", bargs.out, "CSV output file (default stdout)");
  bench->add_option("--heuristic", bargs.heuristic, "search heuristic")
      ->check(heur_check);
  bench->add_option("--mode", bargs.mode, "minimize gate count or depth")
      ->check(mode_check)
      ->capture_default_str();
  bench->add_option("--r", bargs.r, "astar heuristic weight")
      ->capture_default_str();
  bench->add_option("--maxq", bargs.maxq, "astar queue bound")
      ->capture_default_str();
  bench->add_option("--maxwait", bargs.maxwait, "greedy patience")
      ->capture_default_str();
  bench->add_option("--max-nodes", bargs.max_nodes,
                    "astar node expansion budget")
      ->capture_default_str();
  bench->add_flag("--no-timing", bargs.no_timing,
                  "zero the wall_ms column so fixed seeds give bit-identical "
                  "CSVs");
  bench->add_flag("--exhaustive", bargs.exhaustive,
                  "enumerate every invertible matrix instead of sampling "
                  "(gl, single n <= 4)");

  std::string verify_matrix, verify_circuit, verify_kind;
  CLI::App* verify = app.add_subcommand(
      "verify", "Replay a circuit file from the identity and compare against "
                "a matrix file.");
  verify->add_option("matrix", verify_matrix, "matrix file")->required();
  verify->add_option("circuit", verify_circuit, "circuit file")->required();
  verify->add_option("--kind", verify_kind, "expected matrix kind")
      ->check(kind_check);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cliffsynth");
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand(synth)) return do_synth(sargs, out, err);
    if (app.got_subcommand(dbgen)) return do_dbgen(dargs, out, err);
    if (app.got_subcommand(stats))
      return do_stats(stats_db, stats_out, out, err);
    if (app.got_subcommand(bench)) return do_bench(bargs, out, err);
    if (app.got_subcommand(verify))
      return do_verify(verify_matrix, verify_circuit, verify_kind, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "no subcommand\n";
  return kExitParse;
}

}  // namespace cliffsynth::cli
