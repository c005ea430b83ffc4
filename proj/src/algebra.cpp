#include "arex/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace arex {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonAdmissible: return "NonAdmissible";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::IsProjective: return "IsProjective";
    case ErrorCode::IsInjective: return "IsInjective";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::UnknownSummand: return "UnknownSummand";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::NoRelativeARFound: return "NoRelativeARFound";
    case ErrorCode::NotInSyzygyCategory: return "NotInSyzygyCategory";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

// ---------------------------------------------------------------------------
// Algebra

struct Algebra::Data {
  QuiverPresentation presentation;
  PrimeField field;
  std::vector<std::vector<std::size_t>> relations;
  std::vector<Path> paths;
  std::vector<std::vector<std::vector<std::size_t>>> between;  // [v][w]
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
};

const QuiverPresentation& Algebra::presentation() const { return self_->presentation; }
const PrimeField& Algebra::field() const { return self_->field; }
std::size_t Algebra::num_vertices() const { return self_->presentation.vertices.size(); }
std::size_t Algebra::num_arrows() const { return self_->presentation.arrows.size(); }
const Arrow& Algebra::arrow(std::size_t i) const { return self_->presentation.arrows.at(i); }
const std::vector<std::vector<std::size_t>>& Algebra::relations() const { return self_->relations; }
const std::vector<Path>& Algebra::path_basis() const { return self_->paths; }

const std::vector<std::size_t>& Algebra::paths_between(std::size_t v, std::size_t w) const {
  return self_->between.at(v).at(w);
}

std::optional<std::size_t> Algebra::path_index(std::size_t source,
                                               const std::vector<std::size_t>& arrows) const {
  const auto it = self_->index.find({source, arrows});
  if (it == self_->index.end()) return std::nullopt;
  return it->second;
}

Algebra Algebra::opposite() const {
  Algebra op;
  op.self_ = op_;
  op.op_ = self_;
  return op;
}

std::string Algebra::vertex_label(std::size_t v) const { return presentation().vertices.at(v); }

namespace {

bool has_relation_suffix(const std::vector<std::size_t>& arrows,
                         const std::vector<std::vector<std::size_t>>& relations) {
  for (const auto& r : relations) {
    if (r.size() > arrows.size()) continue;
    if (std::equal(r.rbegin(), r.rend(), arrows.rbegin())) return true;
  }
  return false;
}

std::shared_ptr<Algebra::Data> enumerate(const QuiverPresentation& p, std::size_t cap) {
  auto data = std::make_shared<Algebra::Data>(Algebra::Data{p, PrimeField(p.field_char), {}, {}, {}, {}});
  const std::size_t nv = p.vertices.size();
  for (const Arrow& a : p.arrows)
    if (a.source >= nv || a.target >= nv)
      throw Error(ErrorCode::Malformed, "arrow '" + a.name + "' has an endpoint outside the vertex set");
  for (std::size_t i = 0; i < p.arrows.size(); ++i)
    for (std::size_t j = i + 1; j < p.arrows.size(); ++j)
      if (p.arrows[i].name == p.arrows[j].name)
        throw Error(ErrorCode::Malformed, "duplicate arrow name '" + p.arrows[i].name + "'");

  std::size_t max_rel = 0;
  for (const auto& rel : p.relations) {
    if (rel.size() < 2) throw Error(ErrorCode::Malformed, "relations must have length at least 2");
    std::vector<std::size_t> idx;
    for (const std::string& name : rel) {
      auto it = std::find_if(p.arrows.begin(), p.arrows.end(), [&](const Arrow& a) { return a.name == name; });
      if (it == p.arrows.end()) throw Error(ErrorCode::Malformed, "relation names unknown arrow '" + name + "'");
      idx.push_back(static_cast<std::size_t>(it - p.arrows.begin()));
    }
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
      if (p.arrows[idx[k]].target != p.arrows[idx[k + 1]].source)
        throw Error(ErrorCode::Malformed, "relation path is not composable");
    max_rel = std::max(max_rel, idx.size());
    data->relations.push_back(std::move(idx));
  }

  // A nonzero path is determined, for the purpose of extension, by its last
  // (max_rel - 1) arrows. Once a path is longer than the number of such
  // states, some state repeats and the path can be pumped forever.
  const std::size_t state_len = max_rel == 0 ? 0 : max_rel - 1;
  std::size_t states = 0;
  std::vector<Path> level;
  for (std::size_t v = 0; v < nv; ++v) level.push_back(Path{v, v, {}});
  std::size_t len = 0;
  while (!level.empty()) {
    if (len <= state_len) states += level.size();
    if (len > state_len && len >= states)
      throw Error(ErrorCode::NonAdmissible, "a cycle is not bounded by the relations");
    for (Path& q : level) {
      data->paths.push_back(q);
      if (data->paths.size() > cap)
        throw Error(ErrorCode::CapExceeded, "path basis exceeds cap " + std::to_string(cap));
    }
    std::vector<Path> next;
    for (const Path& q : level) {
      for (std::size_t ai = 0; ai < p.arrows.size(); ++ai) {
        if (p.arrows[ai].source != q.target) continue;
        Path ext = q;
        ext.arrows.push_back(ai);
        ext.target = p.arrows[ai].target;
        if (!has_relation_suffix(ext.arrows, data->relations)) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
    ++len;
  }

  data->between.assign(nv, std::vector<std::vector<std::size_t>>(nv));
  for (std::size_t i = 0; i < data->paths.size(); ++i) {
    const Path& q = data->paths[i];
    data->between[q.source][q.target].push_back(i);
    data->index[{q.source, q.arrows}] = i;
  }
  return data;
}

QuiverPresentation opposite_presentation(const QuiverPresentation& p) {
  QuiverPresentation op = p;
  for (Arrow& a : op.arrows) std::swap(a.source, a.target);
  for (auto& r : op.relations) std::reverse(r.begin(), r.end());
  return op;
}

}  // namespace

Algebra build_algebra(const QuiverPresentation& p, std::size_t cap) {
  Algebra a;
  a.self_ = enumerate(p, cap);
  a.op_ = enumerate(opposite_presentation(p), cap);
  return a;
}

// ---------------------------------------------------------------------------
// Modules

Eigen::Index ModuleRep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), Eigen::Index{0}); }

bool operator==(const ModuleRep& a, const ModuleRep& b) {
  if (a.dims != b.dims || a.action.size() != b.action.size()) return false;
  for (std::size_t i = 0; i < a.action.size(); ++i)
    if (a.action[i].rows() != b.action[i].rows() || a.action[i].cols() != b.action[i].cols() ||
        a.action[i] != b.action[i])
      return false;
  return true;
}

ModuleRep zero_module(const Algebra& a) {
  ModuleRep m;
  m.dims.assign(a.num_vertices(), 0);
  for (std::size_t i = 0; i < a.num_arrows(); ++i) m.action.emplace_back(0, 0);
  return m;
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
  ModuleRep s;
  s.dims.resize(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v) s.dims[v] = m.dims[v] + n.dims[v];
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    const FpMatrix& x = m.action[i];
    const FpMatrix& y = n.action[i];
    FpMatrix z = FpMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
    z.topLeftCorner(x.rows(), x.cols()) = x;
    z.bottomRightCorner(y.rows(), y.cols()) = y;
    s.action.push_back(std::move(z));
  }
  return s;
}

ModuleRep direct_sum(const std::vector<ModuleRep>& ms, const Algebra& a) {
  ModuleRep s = zero_module(a);
  for (const ModuleRep& m : ms) s = direct_sum(s, m);
  return s;
}

void validate_module(const Algebra& a, const ModuleRep& m) {
  if (m.dims.size() != a.num_vertices() || m.action.size() != a.num_arrows())
    throw Error(ErrorCode::AlgebraMismatch, "module does not match the quiver");
  for (std::size_t i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    if (m.action[i].rows() != m.dims[ar.target] || m.action[i].cols() != m.dims[ar.source])
      throw Error(ErrorCode::Malformed, "arrow '" + ar.name + "' has a matrix of the wrong shape");
    if (m.action[i].size() > 0 &&
        ((m.action[i].array() < 0).any() || (m.action[i].array() >= a.field().characteristic()).any()))
      throw Error(ErrorCode::Malformed, "arrow '" + ar.name + "' has entries outside [0, p)");
  }
  for (const auto& rel : a.relations()) {
    Path p{a.arrow(rel.front()).source, a.arrow(rel.back()).target, rel};
    const FpMatrix act = path_action(a, m, p);
    if (act.size() > 0 && !(act.array() == 0).all())
      throw Error(ErrorCode::Malformed, "a relation does not act as zero");
  }
}

FpMatrix path_action(const Algebra& a, const ModuleRep& m, const Path& p) {
  FpMatrix acc = FpMatrix::Identity(m.dims[p.source], m.dims[p.source]);
  for (std::size_t ai : p.arrows) acc = a.field().reduce(m.action[ai] * acc);
  return acc;
}

// ---------------------------------------------------------------------------
// Morphisms

ModMorphism identity_morphism(const ModuleRep& m) {
  ModMorphism h{m, m, {}};
  for (Eigen::Index d : m.dims) h.blocks.push_back(FpMatrix::Identity(d, d));
  return h;
}

ModMorphism zero_morphism(const ModuleRep& m, const ModuleRep& n) {
  ModMorphism h{m, n, {}};
  for (std::size_t v = 0; v < m.dims.size(); ++v) h.blocks.push_back(FpMatrix::Zero(n.dims[v], m.dims[v]));
  return h;
}

ModMorphism compose(const PrimeField& f, const ModMorphism& g, const ModMorphism& h) {
  ModMorphism out{h.source, g.target, {}};
  for (std::size_t v = 0; v < h.blocks.size(); ++v) out.blocks.push_back(f.reduce(g.blocks[v] * h.blocks[v]));
  return out;
}

ModMorphism add(const PrimeField& f, const ModMorphism& a, const ModMorphism& b) {
  ModMorphism out{a.source, a.target, {}};
  for (std::size_t v = 0; v < a.blocks.size(); ++v) out.blocks.push_back(f.reduce(a.blocks[v] + b.blocks[v]));
  return out;
}

ModMorphism scale(const PrimeField& f, std::int64_t c, const ModMorphism& a) {
  ModMorphism out = a;
  for (auto& b : out.blocks) b = f.reduce(b * f.reduce(c));
  return out;
}

ModMorphism direct_sum(const ModMorphism& a, const ModMorphism& b) {
  ModMorphism out{direct_sum(a.source, b.source), direct_sum(a.target, b.target), {}};
  for (std::size_t v = 0; v < a.blocks.size(); ++v) {
    FpMatrix z = FpMatrix::Zero(out.target.dims[v], out.source.dims[v]);
    z.topLeftCorner(a.blocks[v].rows(), a.blocks[v].cols()) = a.blocks[v];
    z.bottomRightCorner(b.blocks[v].rows(), b.blocks[v].cols()) = b.blocks[v];
    out.blocks.push_back(std::move(z));
  }
  return out;
}

bool is_morphism(const Algebra& a, const ModMorphism& h) {
  const ModuleRep& m = h.source;
  const ModuleRep& n = h.target;
  if (h.blocks.size() != a.num_vertices() || m.dims.size() != a.num_vertices() ||
      n.dims.size() != a.num_vertices())
    return false;
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    if (h.blocks[v].rows() != n.dims[v] || h.blocks[v].cols() != m.dims[v]) return false;
  const PrimeField& f = a.field();
  for (std::size_t i = 0; i < a.num_arrows(); ++i) {
    const std::size_t s = a.arrow(i).source, t = a.arrow(i).target;
    const FpMatrix lhs = f.reduce(n.action[i] * h.blocks[s]);
    const FpMatrix rhs = f.reduce(h.blocks[t] * m.action[i]);
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_zero(const ModMorphism& h) {
  for (const auto& b : h.blocks)
    if (b.size() > 0 && !(b.array() == 0).all()) return false;
  return true;
}

bool is_injective_map(const PrimeField& f, const ModMorphism& h) {
  for (std::size_t v = 0; v < h.blocks.size(); ++v)
    if (rank(f, h.blocks[v]) != h.source.dims[v]) return false;
  return true;
}

bool is_surjective_map(const PrimeField& f, const ModMorphism& h) {
  for (std::size_t v = 0; v < h.blocks.size(); ++v)
    if (rank(f, h.blocks[v]) != h.target.dims[v]) return false;
  return true;
}

bool is_isomorphism(const PrimeField& f, const ModMorphism& h) {
  return h.source.dims == h.target.dims && is_injective_map(f, h);
}

ModMorphism column_morphism(const ModuleRep& source, const std::vector<ModMorphism>& parts,
                            const ModuleRep& target) {
  ModMorphism out{source, target, {}};
  for (std::size_t v = 0; v < source.dims.size(); ++v) {
    FpMatrix b(target.dims[v], source.dims[v]);
    Eigen::Index row = 0;
    for (const ModMorphism& p : parts) {
      b.middleRows(row, p.blocks[v].rows()) = p.blocks[v];
      row += p.blocks[v].rows();
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

ModMorphism row_morphism(const ModuleRep& source, const std::vector<ModMorphism>& parts,
                         const ModuleRep& target) {
  ModMorphism out{source, target, {}};
  for (std::size_t v = 0; v < source.dims.size(); ++v) {
    FpMatrix b(target.dims[v], source.dims[v]);
    Eigen::Index col = 0;
    for (const ModMorphism& p : parts) {
      b.middleCols(col, p.blocks[v].cols()) = p.blocks[v];
      col += p.blocks[v].cols();
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

Eigen::Index hom_ambient_dim(const ModuleRep& m, const ModuleRep& n) {
  Eigen::Index d = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) d += m.dims[v] * n.dims[v];
  return d;
}

FpVector flatten(const ModMorphism& h) {
  FpVector out(hom_ambient_dim(h.source, h.target));
  Eigen::Index off = 0;
  for (const FpMatrix& b : h.blocks) {
    out.segment(off, b.size()) = Eigen::Map<const FpVector>(b.data(), b.size());
    off += b.size();
  }
  return out;
}

ModMorphism unflatten(const ModuleRep& m, const ModuleRep& n, const FpVector& coords) {
  ModMorphism h{m, n, {}};
  Eigen::Index off = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const Eigen::Index r = n.dims[v], c = m.dims[v];
    h.blocks.push_back(Eigen::Map<const FpMatrix>(coords.data() + off, r, c));
    off += r * c;
  }
  return h;
}

ModMorphism HomSpace::combination(const PrimeField& f, const FpVector& coeffs) const {
  return element(f.reduce(basis * coeffs));
}

HomSpace hom_space(const Algebra& a, const ModuleRep& m, const ModuleRep& n) {
  if (m.dims.size() != a.num_vertices() || n.dims.size() != a.num_vertices())
    throw Error(ErrorCode::AlgebraMismatch, "hom between modules over different quivers");
  const PrimeField& f = a.field();
  std::vector<Eigen::Index> offset(m.dims.size() + 1, 0);
  for (std::size_t v = 0; v < m.dims.size(); ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
  const Eigen::Index unknowns = offset.back();

  Eigen::Index eqs = 0;
  for (std::size_t i = 0; i < a.num_arrows(); ++i) eqs += n.dims[a.arrow(i).target] * m.dims[a.arrow(i).source];
  FpMatrix sys = FpMatrix::Zero(eqs, unknowns);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < a.num_arrows(); ++i) {
    const std::size_t s = a.arrow(i).source, t = a.arrow(i).target;
    const FpMatrix& ma = m.action[i];  // m_t x m_s
    const FpMatrix& na = n.action[i];  // n_t x n_s
    const Eigen::Index nt = n.dims[t], ns = n.dims[s], ms = m.dims[s], mt = m.dims[t];
    // (na X_s - X_t ma)(r, c) = 0
    for (Eigen::Index c = 0; c < ms; ++c)
      for (Eigen::Index r = 0; r < nt; ++r, ++row) {
        for (Eigen::Index k = 0; k < ns; ++k)
          sys(row, offset[s] + k + c * ns) = f.add(sys(row, offset[s] + k + c * ns), na(r, k));
        for (Eigen::Index l = 0; l < mt; ++l)
          sys(row, offset[t] + r + l * nt) = f.sub(sys(row, offset[t] + r + l * nt), ma(l, c));
      }
  }
  return HomSpace{m, n, kernel(f, sys)};
}

std::vector<ModMorphism> hom_basis(const Algebra& a, const ModuleRep& m, const ModuleRep& n) {
  const HomSpace h = hom_space(a, m, n);
  std::vector<ModMorphism> out;
  for (Eigen::Index i = 0; i < h.dim(); ++i) out.push_back(h.basis_element(i));
  return out;
}

// ---------------------------------------------------------------------------
// Sub and quotient objects

Subobject submodule(const Algebra& a, const ModuleRep& m, const std::vector<FpMatrix>& spans) {
  const PrimeField& f = a.field();
  std::vector<FpMatrix> basis;
  ModuleRep sub;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    basis.push_back(spans[v].cols() == 0 ? FpMatrix(m.dims[v], 0) : column_basis(f, spans[v]));
    sub.dims.push_back(basis.back().cols());
  }
  for (std::size_t i = 0; i < a.num_arrows(); ++i) {
    const std::size_t s = a.arrow(i).source, t = a.arrow(i).target;
    const FpMatrix image = f.reduce(m.action[i] * basis[s]);
    auto x = solve(f, basis[t], image);
    if (!x) throw Error(ErrorCode::Malformed, "subspaces are not closed under the arrow action");
    sub.action.push_back(*x);
  }
  ModMorphism incl{sub, m, basis};
  return Subobject{std::move(sub), std::move(incl)};
}

Quotient quotient_module(const Algebra& a, const ModuleRep& m, const std::vector<FpMatrix>& spans) {
  const PrimeField& f = a.field();
  std::vector<FpMatrix> proj, lifts;
  ModuleRep q;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const FpMatrix c = spans[v].cols() == 0 ? FpMatrix(m.dims[v], 0) : column_basis(f, spans[v]);
    const FpMatrix d = complement_basis(f, c, m.dims[v]);
    const FpMatrix b = hstack(c, d);
    const FpMatrix binv = *inverse(f, b);
    proj.push_back(binv.bottomRows(d.cols()));
    lifts.push_back(d);
    q.dims.push_back(d.cols());
  }
  for (std::size_t i = 0; i < a.num_arrows(); ++i) {
    const std::size_t s = a.arrow(i).source, t = a.arrow(i).target;
    q.action.push_back(f.reduce(proj[t] * f.reduce(m.action[i] * lifts[s])));
  }
  ModMorphism p{m, q, proj};
  return Quotient{std::move(q), std::move(p), std::move(lifts)};
}

Subobject kernel_of(const Algebra& a, const ModMorphism& h) {
  std::vector<FpMatrix> spans;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) {
    if (h.target.dims[v] == 0)
      spans.push_back(FpMatrix::Identity(h.source.dims[v], h.source.dims[v]));
    else
      spans.push_back(kernel(a.field(), h.blocks[v]));
  }
  return submodule(a, h.source, spans);
}

Quotient cokernel_of(const Algebra& a, const ModMorphism& h) { return quotient_module(a, h.target, h.blocks); }

Subobject image_of(const Algebra& a, const ModMorphism& h) { return submodule(a, h.target, h.blocks); }

std::vector<FpMatrix> radical_spans(const Algebra& a, const ModuleRep& m) {
  std::vector<FpMatrix> spans;
  for (std::size_t v = 0; v < m.dims.size(); ++v) spans.emplace_back(m.dims[v], 0);
  for (std::size_t i = 0; i < a.num_arrows(); ++i) {
    const std::size_t t = a.arrow(i).target;
    spans[t] = hstack(spans[t], m.action[i]);
  }
  return spans;
}

std::vector<FpMatrix> socle_spans(const Algebra& a, const ModuleRep& m) {
  std::vector<FpMatrix> stacked;
  for (std::size_t v = 0; v < m.dims.size(); ++v) stacked.emplace_back(0, m.dims[v]);
  for (std::size_t i = 0; i < a.num_arrows(); ++i) {
    const std::size_t s = a.arrow(i).source;
    stacked[s] = vstack(stacked[s], m.action[i]);
  }
  std::vector<FpMatrix> spans;
  for (std::size_t v = 0; v < m.dims.size(); ++v) spans.push_back(kernel(a.field(), stacked[v]));
  return spans;
}

ModuleRep simple_module(const Algebra& a, std::size_t v) {
  ModuleRep s = zero_module(a);
  s.dims[v] = 1;
  for (std::size_t i = 0; i < a.num_arrows(); ++i)
    s.action[i] = FpMatrix::Zero(s.dims[a.arrow(i).target], s.dims[a.arrow(i).source]);
  return s;
}

ModuleRep dual(const ModuleRep& m) {
  ModuleRep d;
  d.dims = m.dims;
  for (const FpMatrix& x : m.action) d.action.push_back(x.transpose());
  return d;
}

ModMorphism dual(const ModMorphism& h) {
  ModMorphism d{dual(h.target), dual(h.source), {}};
  for (const FpMatrix& b : h.blocks) d.blocks.push_back(b.transpose());
  return d;
}

std::string dimension_vector_string(const ModuleRep& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t v = 0; v < m.dims.size(); ++v) os << (v ? "," : "") << m.dims[v];
  os << ')';
  return os.str();
}

}  // namespace arex
