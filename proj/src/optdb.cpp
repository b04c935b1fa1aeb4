#include "cliffsynth/optdb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "cliffsynth/canon.hpp"

namespace cliffsynth {

namespace {

// Variant enumeration order is plain, transpose, inverse, inverse-transpose;
// the flags stored on a row are (transp, inv) bits of that code.
int variant_code(uint8_t transp, uint8_t inv) { return transp | (inv << 1); }

// Matrix transpose at the gate level: reversing a product transposes it
// gate-by-gate. CNOT(i,j) transposes to CNOT(j,i); a transvection transposes
// to the transvection of the form-swapped Pauli (X and Z parts exchanged).
Gate transpose_gate(const Gate& g) {
  if (g.kind == GateKind::Cnot) return Gate::cnot(g.b, g.a);
  auto sw = [](int c) { return c == 1 ? 2 : (c == 2 ? 1 : c); };
  return Gate::tv(sw(g.pa), sw(g.pb), g.a, g.b);
}

using LayerList = std::vector<std::vector<Gate>>;

// Rewrites a generating gate list (replayed from the identity) of M into one
// of the selected variant of M. Transpose reverses the list and transposes
// each gate; inverse only reverses (the gates are involutions);
// inverse-transpose transposes each gate in place.
LayerList transform_layers(const LayerList& layers, int variant) {
  LayerList out = layers;
  if (variant == 1 || variant == 2) std::reverse(out.begin(), out.end());
  if (variant == 1 || variant == 3)
    for (auto& layer : out)
      for (auto& g : layer) g = transpose_gate(g);
  return out;
}

std::vector<int> supp_of(const LayerList& layers, int n) {
  std::vector<int> supp;
  if (layers.empty()) {
    supp.resize(static_cast<size_t>(n));
    std::iota(supp.begin(), supp.end(), 0);
    return supp;
  }
  for (const Gate& g : layers.back()) {
    supp.push_back(g.a);
    supp.push_back(g.b);
  }
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  return supp;
}

struct GlTraits {
  using Mat = BitMatrix;
  static constexpr DbKind kind = DbKind::Gl;
  static constexpr LayerAlphabet alphabet = LayerAlphabet::Cnot;
  static Mat ident(int n) { return BitMatrix::identity(n); }
  static Mat variant(const Mat& a, int v) {
    if (v == 0) return a;
    if (v == 1) return transpose(a);
    auto inv = inverse(a);
    if (!inv) throw std::logic_error("class representative is singular");
    return v == 2 ? *inv : transpose(*inv);
  }
  static CanonCert cert(const Mat& a) { return gl_cert(a); }
  static std::vector<Gate> single_gates(int n) {
    std::vector<Gate> out;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) out.push_back(Gate::cnot(i, j));
    return out;
  }
  static const BitMatrix& bits(const Mat& a) { return a; }
};

struct SpTraits {
  using Mat = SpMatrix;
  static constexpr DbKind kind = DbKind::Sp;
  static constexpr LayerAlphabet alphabet = LayerAlphabet::Tv;
  static Mat ident(int n) { return SpMatrix(n); }
  static Mat variant(const Mat& a, int v) {
    switch (v) {
      case 0:
        return a;
      case 1:
        return sp_transpose(a);
      case 2:
        return sp_inverse(a);
      default:
        return sp_transpose(sp_inverse(a));
    }
  }
  static CanonCert cert(const Mat& a) { return sp_cert(a); }
  static std::vector<Gate> single_gates(int n) {
    std::vector<Gate> out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (const PauliVec& v : two_qubit_transvections(n, i, j))
          out.push_back(Gate::tv(v.pauli_at(i), v.pauli_at(j), i, j));
    return out;
  }
  static const BitMatrix& bits(const Mat& a) { return a.m; }
};

struct PackedHash {
  size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
    uint64_t h = (k.first + 0x9e3779b97f4a7c15ull) * 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
    h += k.second * 0x94d049bb133111ebull;
    h ^= h >> 29;
    return static_cast<size_t>(h);
  }
};
using RawSeen = std::unordered_set<std::pair<uint64_t, uint64_t>, PackedHash>;

// Representative matrix and layered gate list of a row: fold the ancestry,
// at each step transforming the accumulated list to the variant the child
// extended and appending the child's op. Replaying the flattened list from
// the identity reproduces the representative by construction.
template <class Tr>
std::pair<typename Tr::Mat, LayerList> rebuild(const TreeDb& db, uint32_t id) {
  std::vector<uint32_t> chain;
  for (uint32_t cur = id;;) {
    chain.push_back(cur);
    const uint32_t parent = db.rows[cur].parent;
    if (parent == kNoParent) break;
    cur = parent;
  }
  std::reverse(chain.begin(), chain.end());
  LayerList layers;
  for (uint32_t cur : chain) {
    const DbRow& r = db.rows[cur];
    if (r.parent == kNoParent) continue;
    layers = transform_layers(layers, variant_code(r.transp, r.inv));
    layers.push_back(r.op);
  }
  typename Tr::Mat m = Tr::ident(db.n);
  for (const auto& layer : layers)
    for (const Gate& g : layer) apply_gate(m, g);
  return {std::move(m), std::move(layers)};
}

// Indexes all four variant certificates of a representative. A query matrix
// X lies in the class of representative B exactly when cert(X) equals one of
// them: any variant relation X' ~ B between relabelings transports to
// X ~ B-variant, so a single canonization of X decides membership and also
// names the matching variant. Equal certificates keep the first variant in
// enumeration order.
template <class Tr>
void index_variants(TreeDb& db, uint32_t row, const typename Tr::Mat& rep) {
  for (int v = 0; v < 4; ++v) {
    CanonCert c = Tr::cert(Tr::variant(rep, v));
    db.index.try_emplace(std::move(c.bytes),
                         DbIndexEntry{row, static_cast<DbVariant>(v)});
  }
}

template <class Tr>
TreeDb generate_impl(int n, DbMode mode) {
  TreeDb db;
  db.n = n;
  db.kind = Tr::kind;
  db.mode = mode;
  db.rows.push_back(DbRow{});
  const typename Tr::Mat ident = Tr::ident(n);
  index_variants<Tr>(db, 0, ident);

  RawSeen seen;  // exact-duplicate candidate matrices skip canonization
  seen.insert(Tr::bits(ident).packed_key());

  std::vector<std::vector<Gate>> single_ops;
  if (mode == DbMode::Count)
    for (const Gate& g : Tr::single_gates(n)) single_ops.push_back({g});

  size_t lo = 0, hi = 1;
  while (lo < hi) {
    for (size_t id = lo; id < hi; ++id) {
      auto [amat, layers] = rebuild<Tr>(db, static_cast<uint32_t>(id));
      const auto child_cost = static_cast<uint16_t>(db.rows[id].cost + 1);
      for (int v = 0; v < 4; ++v) {
        const typename Tr::Mat vmat = Tr::variant(amat, v);
        LayerList depth_ops;
        if (mode == DbMode::Depth)
          depth_ops = depth_one_layers(
              n, supp_of(transform_layers(layers, v), n), Tr::alphabet);
        const LayerList& ops =
            mode == DbMode::Count ? single_ops : depth_ops;
        for (const auto& op : ops) {
          typename Tr::Mat b = vmat;
          for (const Gate& g : op) apply_gate(b, g);
          if (!seen.insert(Tr::bits(b).packed_key()).second) continue;
          CanonCert c = Tr::cert(b);
          if (db.index.count(c.bytes)) continue;
          const auto row = static_cast<uint32_t>(db.rows.size());
          DbRow r;
          r.parent = static_cast<uint32_t>(id);
          r.transp = static_cast<uint8_t>(v & 1);
          r.inv = static_cast<uint8_t>(v >> 1);
          r.cost = child_cost;
          r.op = op;
          db.rows.push_back(std::move(r));
          index_variants<Tr>(db, row, b);
        }
      }
    }
    lo = hi;
    hi = db.rows.size();
  }
  return db;
}

Circuit flatten(int n, const LayerList& layers) {
  Circuit c{n, {}};
  for (const auto& layer : layers)
    for (const Gate& g : layer) c.gates.push_back(g);
  return c;
}

void check_kind(const TreeDb& db, DbKind want, const char* who) {
  if (db.kind != want)
    throw std::invalid_argument(std::string(who) +
                                ": database kind does not match");
}

void check_id(const TreeDb& db, uint32_t id, const char* who) {
  if (id >= db.rows.size())
    throw std::out_of_range(std::string(who) + ": row id out of range");
}

}  // namespace

std::string db_resource_estimate(int n, DbKind kind, DbMode mode) {
  (void)mode;  // count and depth modes hold the same classes
  double group = 1.0, relabel = 1.0;
  if (kind == DbKind::Gl) {
    for (int i = 0; i < n; ++i)
      group *= std::pow(2.0, n) - std::pow(2.0, i);
    for (int i = 2; i <= n; ++i) relabel *= i;
  } else {
    group = std::pow(2.0, double(n) * n);
    for (int i = 1; i <= n; ++i) group *= std::pow(4.0, i) - 1.0;
    for (int i = 2; i <= n; ++i) relabel *= i;
    relabel *= std::pow(6.0, n);
  }
  const double classes = std::max(1.0, group / (4.0 * relabel * relabel));
  const double mib = classes * 260.0 / (1024.0 * 1024.0);
  std::ostringstream os;
  os << "expect on the order of " << std::scientific << classes
     << " classes, roughly " << std::fixed << mib
     << " MiB of rows+index, plus a transient candidate memo of similar size";
  return os.str();
}

TreeDb generate_db(int n, DbKind kind, DbMode mode, const DbOptions& opts) {
  if (n < 1) throw std::invalid_argument("generate_db: n must be positive");
  const int soft = kind == DbKind::Gl ? 6 : 4;
  const int hard = kind == DbKind::Gl ? 7 : 5;
  if (n > hard) {
    std::ostringstream os;
    os << "generate_db: n=" << n << " exceeds the hard cap " << hard << "; "
       << db_resource_estimate(n, kind, mode);
    throw DbGuardError(os.str());
  }
  if (n > soft && !opts.allow_large) {
    std::ostringstream os;
    os << "generate_db: n=" << n << " exceeds the default guard " << soft
       << " (set allow_large to proceed); " << db_resource_estimate(n, kind, mode);
    throw DbGuardError(os.str());
  }
  return kind == DbKind::Gl ? generate_impl<GlTraits>(n, mode)
                            : generate_impl<SpTraits>(n, mode);
}

std::pair<BitMatrix, Circuit> retrieve_gl(const TreeDb& db, uint32_t id) {
  check_kind(db, DbKind::Gl, "retrieve_gl");
  check_id(db, id, "retrieve_gl");
  auto [m, layers] = rebuild<GlTraits>(db, id);
  return {std::move(m), flatten(db.n, layers)};
}

std::pair<SpMatrix, Circuit> retrieve_sp(const TreeDb& db, uint32_t id) {
  check_kind(db, DbKind::Sp, "retrieve_sp");
  check_id(db, id, "retrieve_sp");
  auto [m, layers] = rebuild<SpTraits>(db, id);
  return {std::move(m), flatten(db.n, layers)};
}

std::optional<GlSynth> optimal_synth(const BitMatrix& a, const TreeDb& db) {
  check_kind(db, DbKind::Gl, "optimal_synth");
  if (a.rows() != db.n || a.cols() != db.n)
    throw std::invalid_argument("optimal_synth: matrix size does not match db");
  const auto it = db.index.find(gl_cert(a).bytes);
  if (it == db.index.end()) return std::nullopt;

  auto [bmat, layers] = rebuild<GlTraits>(db, it->second.row);
  const LayerList vlayers =
      transform_layers(layers, static_cast<int>(it->second.variant));
  BitMatrix vmat = BitMatrix::identity(db.n);
  for (const auto& layer : vlayers)
    for (const Gate& g : layer) apply_gate(vmat, g);

  const auto perms = recover_gl_perms(a, vmat);
  if (!perms)
    throw std::logic_error("optimal_synth: certificate hit without isomorphism");
  const auto& [pr, pc] = *perms;

  // a = pr * vmat * pc = (pr*pc) * (pc^-1 vmat pc); conjugating CNOT(i,j) by
  // the column permutation relabels both qubits through it.
  const std::vector<int> relabel = permutation_of(pc);
  Circuit circ{db.n, {}};
  for (const auto& layer : vlayers)
    for (const Gate& g : layer)
      circ.gates.push_back(Gate::cnot(relabel[g.a], relabel[g.b]));

  GlSynth out{mul(pr, pc), std::move(circ)};
  if (!(replay(out.circuit, out.terminal) == a))
    throw std::logic_error("optimal_synth: reconstructed circuit failed replay");
  return out;
}

std::optional<SpSynth> optimal_synth(const SpMatrix& a, const TreeDb& db) {
  check_kind(db, DbKind::Sp, "optimal_synth");
  if (a.n != db.n)
    throw std::invalid_argument("optimal_synth: matrix size does not match db");
  const auto it = db.index.find(sp_cert(a).bytes);
  if (it == db.index.end()) return std::nullopt;

  auto [bmat, layers] = rebuild<SpTraits>(db, it->second.row);
  const LayerList vlayers =
      transform_layers(layers, static_cast<int>(it->second.variant));
  SpMatrix vmat(db.n);
  for (const auto& layer : vlayers)
    for (const Gate& g : layer) apply_gate(vmat, g);

  const auto perms = recover_sp_perms(a, vmat);
  if (!perms)
    throw std::logic_error("optimal_synth: certificate hit without isomorphism");
  const auto& [sr, sc] = *perms;

  // a = (sr*sc) * (sc^-1 vmat sc); conjugating the transvection of v by sc
  // gives the transvection of v*sc, still supported on exactly two qubits
  // because sc only relabels qubits and rotates single-qubit frames.
  Circuit circ{db.n, {}};
  for (const auto& layer : vlayers)
    for (const Gate& g : layer) {
      PauliVec w(db.n);
      w.bits = mul(tv_pauli(g, db.n).bits, sc.m);
      int qi = -1, qj = -1;
      for (int q = 0; q < db.n; ++q)
        if (w.pauli_at(q) != 0) (qi < 0 ? qi : qj) = q;
      if (qi < 0 || qj < 0)
        throw std::logic_error("optimal_synth: conjugated gate lost support");
      circ.gates.push_back(Gate::tv(w.pauli_at(qi), w.pauli_at(qj), qi, qj));
    }

  SpMatrix terminal = sp_mul(sr, sc);
  if (!(replay(circ, terminal) == a))
    throw std::logic_error("optimal_synth: reconstructed circuit failed replay");
  return make_sp_synth(std::move(terminal), std::move(circ));
}

DbStats class_stats(const TreeDb& db) {
  DbStats s;
  for (const DbRow& r : db.rows) s.max_cost = std::max(s.max_cost, int(r.cost));
  s.per_cost.assign(static_cast<size_t>(s.max_cost) + 1, 0);
  for (const DbRow& r : db.rows) ++s.per_cost[r.cost];
  s.total = static_cast<long>(db.rows.size());
  return s;
}

Regression heuristic_regression(const TreeDb& db, SearchHeuristic heuristic) {
  if (heuristic == SearchHeuristic::Vector)
    throw std::invalid_argument(
        "heuristic_regression: needs a scalar heuristic");
  const size_t count = db.rows.size();
  std::vector<double> xs(count), ys(count);
  for (uint32_t id = 0; id < count; ++id) {
    double x;
    if (db.kind == DbKind::Gl) {
      const BitMatrix m = rebuild<GlTraits>(db, id).first;
      x = heuristic == SearchHeuristic::HSum ? H_sum_gl(m) : H_prod_gl(m);
    } else {
      const SpMatrix m = rebuild<SpTraits>(db, id).first;
      x = heuristic == SearchHeuristic::HSum ? H_sum_sp(m) : H_prod_sp(m);
    }
    xs[id] = x;
    ys[id] = double(db.rows[id].cost);
  }
  const double xbar = std::accumulate(xs.begin(), xs.end(), 0.0) / double(count);
  const double ybar = std::accumulate(ys.begin(), ys.end(), 0.0) / double(count);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (size_t i = 0; i < count; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    syy += (ys[i] - ybar) * (ys[i] - ybar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw std::invalid_argument("heuristic_regression: degenerate variance");
  Regression out;
  out.m = sxy / sxx;
  out.b = ybar - out.m * xbar;
  out.r = sxy / std::sqrt(sxx * syy);
  return out;
}

namespace {

constexpr char kMagic[] = "CLFDB1";

void put_u8(std::string& s, uint8_t v) { s.push_back(static_cast<char>(v)); }
void put_u16(std::string& s, uint16_t v) {
  put_u8(s, static_cast<uint8_t>(v & 0xff));
  put_u8(s, static_cast<uint8_t>(v >> 8));
}
void put_u32(std::string& s, uint32_t v) {
  put_u16(s, static_cast<uint16_t>(v & 0xffff));
  put_u16(s, static_cast<uint16_t>(v >> 16));
}

struct Reader {
  const std::string& s;
  size_t pos = 0;
  uint8_t u8() {
    if (pos >= s.size()) throw std::runtime_error("database file truncated");
    return static_cast<uint8_t>(s[pos++]);
  }
  uint16_t u16() {
    const uint16_t lo = u8();
    return static_cast<uint16_t>(lo | (uint16_t(u8()) << 8));
  }
  uint32_t u32() {
    const uint32_t lo = u16();
    return lo | (uint32_t(u16()) << 16);
  }
};

}  // namespace

void save_db(const TreeDb& db, const std::string& path) {
  std::string buf(kMagic, 6);
  put_u8(buf, static_cast<uint8_t>(db.kind));
  put_u8(buf, static_cast<uint8_t>(db.mode));
  put_u16(buf, static_cast<uint16_t>(db.n));
  put_u32(buf, static_cast<uint32_t>(db.rows.size()));
  for (const DbRow& r : db.rows) {
    put_u32(buf, r.parent);
    put_u8(buf, r.transp);
    put_u8(buf, r.inv);
    put_u16(buf, r.cost);
    put_u16(buf, static_cast<uint16_t>(r.op.size()));
    for (const Gate& g : r.op) {
      put_u8(buf, g.kind == GateKind::Cnot ? 0 : 1);
      put_u8(buf, static_cast<uint8_t>(g.a));
      put_u8(buf, static_cast<uint8_t>(g.b));
      put_u8(buf, static_cast<uint8_t>(g.pa));
      put_u8(buf, static_cast<uint8_t>(g.pb));
    }
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!f) throw std::runtime_error("save_db: cannot write " + path);
}

TreeDb load_db(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_db: cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  const std::string buf = os.str();

  Reader rd{buf};
  if (buf.size() < 6 || buf.compare(0, 6, kMagic, 6) != 0)
    throw std::runtime_error("load_db: not a class database file");
  rd.pos = 6;

  TreeDb db;
  const uint8_t kind = rd.u8();
  const uint8_t mode = rd.u8();
  if (kind > 1 || mode > 1)
    throw std::runtime_error("load_db: bad kind/mode byte");
  db.kind = static_cast<DbKind>(kind);
  db.mode = static_cast<DbMode>(mode);
  db.n = rd.u16();
  if (db.n < 1 || db.n > 64)
    throw std::runtime_error("load_db: bad dimension");
  const uint32_t count = rd.u32();
  if (count == 0) throw std::runtime_error("load_db: empty database");

  db.rows.reserve(count);
  for (uint32_t id = 0; id < count; ++id) {
    DbRow r;
    r.parent = rd.u32();
    r.transp = rd.u8();
    r.inv = rd.u8();
    r.cost = rd.u16();
    const uint16_t gates = rd.u16();
    if (id == 0) {
      if (r.parent != kNoParent || gates != 0 || r.cost != 0)
        throw std::runtime_error("load_db: malformed root row");
    } else if (r.parent >= id) {
      throw std::runtime_error("load_db: row parent out of order");
    } else if (db.rows[r.parent].cost + 1 != r.cost || gates == 0) {
      throw std::runtime_error("load_db: row cost inconsistent");
    }
    if (r.transp > 1 || r.inv > 1)
      throw std::runtime_error("load_db: bad variant flags");
    r.op.reserve(gates);
    for (uint16_t k = 0; k < gates; ++k) {
      const uint8_t gk = rd.u8();
      const int a = rd.u8(), b = rd.u8(), pa = rd.u8(), pb = rd.u8();
      if (a >= db.n || b >= db.n || a == b)
        throw std::runtime_error("load_db: gate qubits out of range");
      if (gk == 0 && db.kind == DbKind::Gl && pa == 0 && pb == 0) {
        r.op.push_back(Gate::cnot(a, b));
      } else if (gk == 1 && db.kind == DbKind::Sp && pa >= 1 && pa <= 3 &&
                 pb >= 1 && pb <= 3) {
        r.op.push_back(Gate::tv(pa, pb, a, b));
      } else {
        throw std::runtime_error("load_db: bad gate record");
      }
    }
    db.rows.push_back(std::move(r));
  }
  if (rd.pos != buf.size())
    throw std::runtime_error("load_db: trailing bytes");

  for (uint32_t id = 0; id < count; ++id) {
    if (db.kind == DbKind::Gl)
      index_variants<GlTraits>(db, id, rebuild<GlTraits>(db, id).first);
    else
      index_variants<SpTraits>(db, id, rebuild<SpTraits>(db, id).first);
  }
  return db;
}

}  // namespace cliffsynth
