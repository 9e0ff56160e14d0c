#include "invgen/structured.hpp"

#include <algorithm>

#include "invgen/errors.hpp"
#include "invgen/meataxe.hpp"

namespace invgen {

namespace {

/// delta for the trivial F_p factor of an abelian group: the p-rank of
/// G/frat(G), i.e. the number of invariant factors divisible by p.
uint32_t p_rank_omega(const PermGroup &G, uint64_t p) {
  uint64_t count = 0;
  for (uint32_t x = 0; x < G.order(); ++x)
    if (G.power(x, p) == G.identity_id()) ++count;
  uint32_t rank = 0;
  while (count > 1) {
    count /= p;
    ++rank;
  }
  return rank;
}

std::vector<ChiefAnnotation> abelian_leaf_annotation(const PermGroup &G) {
  std::vector<ChiefAnnotation> ann;
  for (auto [p, e] : G.order_factorization()) {
    ChiefAnnotation a;
    a.prime = p;
    a.dim = 1;
    a.trivial_action = true;
    a.delta = p_rank_omega(G, p);
    a.r = 1;
    ann.push_back(std::move(a));
  }
  return ann;
}

GModule inflate_to(const GModule &V, const PermGroup &target,
                   const std::vector<uint32_t> &project) {
  GModule W;
  W.group = target.shared_from_this();
  W.q = V.q;
  W.dim = V.dim;
  for (uint32_t g : target.generator_ids()) W.gen_action.push_back(V.matrix_of(project[g]));
  return W;
}

} // namespace

StructuredGroupPtr StructuredGroup::make_leaf(PermGroupPtr G, std::string expr) {
  auto S = std::shared_ptr<StructuredGroup>(new StructuredGroup());
  S->leaf_ = std::move(G);
  S->expr_ = std::move(expr);
  S->order_fact_ = S->leaf_->order_factorization();
  auto dd = derived_data(*S->leaf_);
  S->soluble_ = dd.is_soluble;
  if (dd.is_soluble) S->derived_length_ = dd.derived_length;
  if (is_abelian(*S->leaf_)) {
    S->annotation_ = abelian_leaf_annotation(*S->leaf_);
    S->annotation_complete_ = true;
  }
  return S;
}

StructuredGroupPtr StructuredGroup::make_extension(std::vector<SocleSummand> socle_raw,
                                                   StructuredGroupPtr top, std::string expr,
                                                   uint64_t meataxe_seed,
                                                   std::optional<uint32_t> d_formula,
                                                   std::optional<uint32_t> derived_length) {
  auto S = std::shared_ptr<StructuredGroup>(new StructuredGroup());
  S->top_ = std::move(top);
  S->socle_raw_ = std::move(socle_raw);
  S->expr_ = std::move(expr);
  S->d_formula_ = d_formula;
  S->derived_length_ = derived_length;

  PermGroupPtr T = S->top_->is_leaf() ? S->top_->leaf() : S->top_->materialize().group;
  for (const auto &sum : S->socle_raw_)
    if (sum.module.group.get() != T.get())
      throw Error(ErrorKind::GroupMismatch, "socle modules must act through the top group");

  // Order: product of q^(dim*mult) over the socle, times |top|.
  S->order_fact_ = S->top_->order_factorization();
  for (const auto &sum : S->socle_raw_)
    S->order_fact_[sum.module.q] += uint64_t(sum.module.dim) * sum.multiplicity;
  S->soluble_ = S->top_->soluble(); // abelian socle keeps solubility

  // Irreducible socle: split each raw summand and merge isomorphic parts.
  for (const auto &sum : S->socle_raw_) {
    auto dec = meataxe_decompose(sum.module, meataxe_seed);
    for (auto &comp : dec.components) {
      uint32_t mult = comp.multiplicity * sum.multiplicity;
      bool merged = false;
      for (auto &have : S->socle_irr_)
        if (have.module.q == comp.module.q && have.module.dim == comp.module.dim &&
            modules_isomorphic(have.module, comp.module)) {
          have.multiplicity += mult;
          merged = true;
          break;
        }
      if (!merged) S->socle_irr_.push_back(SocleSummand{comp.module, mult});
    }
  }

  // Chief annotation: socle factors are complemented by construction; the
  // top's factors pull back along the split quotient.
  bool ok = S->top_->annotation_complete();
  std::vector<ChiefAnnotation> ann;
  for (const auto &sum : S->socle_irr_) {
    ChiefAnnotation a;
    a.prime = sum.module.q;
    a.dim = sum.module.dim;
    a.trivial_action = sum.module.is_trivial_action();
    a.delta = sum.multiplicity;
    a.r = sum.module.dim / uint32_t(intertwiner_space(sum.module, sum.module).size());
    a.module = sum.module;
    ann.push_back(std::move(a));
  }
  if (ok) {
    for (const auto &e : S->top_->annotation()) {
      ChiefAnnotation pulled = e;
      if (!e.trivial_action) {
        if (e.module && e.module->group.get() == T.get()) {
          pulled.module = e.module;
        } else if (e.module && !S->top_->is_leaf()) {
          const auto &mt = S->top_->materialize();
          if (e.module->group.get() == mt.top.get())
            pulled.module = inflate_to(*e.module, *T, mt.project_top);
          else
            pulled.module.reset();
        } else {
          pulled.module.reset();
        }
      }
      bool merged = false;
      for (auto &have : ann) {
        if (have.prime != pulled.prime) continue;
        if (have.trivial_action && pulled.trivial_action) {
          have.delta += pulled.delta;
          merged = true;
          break;
        }
        if (have.trivial_action != pulled.trivial_action || have.dim != pulled.dim) continue;
        if (have.module && pulled.module &&
            have.module->group.get() == pulled.module->group.get()) {
          if (modules_isomorphic(*have.module, *pulled.module)) {
            have.delta += pulled.delta;
            merged = true;
            break;
          }
        } else {
          // Same prime, nontrivial, and no common coordinates to compare in:
          // refuse rather than guess.
          ok = false;
          break;
        }
      }
      if (!ok) break;
      if (!merged) ann.push_back(std::move(pulled));
    }
  }
  S->annotation_ = std::move(ann);
  S->annotation_complete_ = ok;
  return S;
}

StructuredGroupPtr StructuredGroup::direct_product(const std::vector<StructuredGroupPtr> &parts,
                                                   std::string expr, uint64_t order_cap) {
  // Materialized product when every factor is a concrete leaf.
  bool all_leaves = std::all_of(parts.begin(), parts.end(),
                                [](const auto &p) { return p->is_leaf(); });
  if (all_leaves) {
    std::vector<Permutation> gens;
    uint32_t total_deg = 0;
    for (const auto &p : parts) total_deg += p->leaf()->degree();
    uint32_t off = 0;
    for (const auto &p : parts) {
      for (const auto &g : p->leaf()->generators()) gens.push_back(g.shifted(off, total_deg));
      off += p->leaf()->degree();
    }
    return make_leaf(PermGroup::from_generators(gens, order_cap), std::move(expr));
  }

  auto S = std::shared_ptr<StructuredGroup>(new StructuredGroup());
  S->expr_ = std::move(expr);
  S->soluble_ = true;
  uint32_t dl = 0;
  bool dl_known = true;
  bool ann_ok = true;
  for (const auto &p : parts) {
    S->order_fact_ = merge_factors(S->order_fact_, p->order_factorization());
    S->soluble_ = S->soluble_ && p->soluble();
    if (p->derived_length())
      dl = std::max(dl, *p->derived_length());
    else
      dl_known = false;
    ann_ok = ann_ok && p->annotation_complete();
    // Factors of a direct product: trivial entries merge by prime; a
    // nontrivial factor from one side is never isomorphic to one from the
    // other side (the other side acts trivially on it).
    for (const auto &e : p->annotation()) {
      bool merged = false;
      if (e.trivial_action)
        for (auto &have : S->annotation_)
          if (have.trivial_action && have.prime == e.prime) {
            have.delta += e.delta;
            merged = true;
            break;
          }
      if (!merged) {
        ChiefAnnotation copy = e;
        copy.module.reset(); // no common coordinates across factors
        S->annotation_.push_back(std::move(copy));
      }
    }
  }
  if (dl_known) S->derived_length_ = dl;
  S->annotation_complete_ = ann_ok;
  // Not materializable without a leaf representation; leave leaf_ null and
  // socle empty: callers treat it as annotation-only.
  return S;
}

ModuleSum StructuredGroup::socle_module_sum() const {
  ModuleSum A;
  for (const auto &s : socle_irr_) A.summands.push_back({s.module, s.multiplicity});
  return A;
}

PermGroupPtr StructuredGroup::top_group() const {
  if (is_leaf()) return leaf_;
  if (!top_)
    throw Error(ErrorKind::MissingAnnotation, "structured product has no single top group");
  return top_->is_leaf() ? top_->leaf() : top_->materialize().group;
}

bool StructuredGroup::supersoluble_by_annotation() const {
  if (!annotation_complete_) return false;
  for (const auto &a : annotation_)
    if (a.dim != 1) return false;
  // Chief annotations only list complemented factors; for our constructions
  // (Frattini-free socles over supersoluble tops) that is the whole series.
  return true;
}

bool StructuredGroup::materializable(uint64_t order_cap) const {
  BigUint n = order();
  return n.fits_u64() && n.as_u64() <= order_cap;
}

Permutation StructuredGroup::Materialized::element_perm(
    const std::vector<std::vector<uint32_t>> &w, uint32_t top_id,
    const std::vector<MatFp> &rho_per_summand) const {
  const uint32_t deg_top = top->degree();
  const uint32_t total = socle_points + deg_top;
  std::vector<uint32_t> img(total);
  for (std::size_t blk = 0; blk < block_offset.size(); ++blk) {
    const uint32_t s = block_summand[blk];
    const GModule &V = socle[s].module;
    const MatFp &rho = rho_per_summand[s];
    const uint32_t off = block_offset[blk];
    uint64_t block_size = 1;
    for (uint32_t i = 0; i < V.dim; ++i) block_size *= V.q;
    std::vector<uint32_t> vec(V.dim);
    for (uint64_t code = 0; code < block_size; ++code) {
      uint64_t c = code;
      for (uint32_t i = 0; i < V.dim; ++i) {
        vec[i] = uint32_t(c % V.q);
        c /= V.q;
      }
      auto moved = vec_mat(vec, rho);
      PrimeField F{V.q};
      uint64_t out = 0;
      for (uint32_t i = V.dim; i-- > 0;) out = out * V.q + F.add(moved[i], w[blk][i]);
      img[off + code] = off + uint32_t(out);
    }
  }
  const Permutation &tp = top->element(top_id);
  for (uint32_t p = 0; p < deg_top; ++p) img[socle_points + p] = socle_points + tp.apply(p);
  return Permutation(std::move(img));
}

std::vector<MatFp> StructuredGroup::Materialized::rho_of(uint32_t top_id) const {
  std::vector<MatFp> out;
  out.reserve(socle.size());
  for (const auto &s : socle) out.push_back(s.module.matrix_of(top_id));
  return out;
}

const StructuredGroup::Materialized &StructuredGroup::materialize(uint64_t order_cap) const {
  {
    std::lock_guard<std::mutex> lock(mat_mutex_);
    if (mat_) return *mat_;
  }
  auto M = std::make_shared<Materialized>();
  if (is_leaf()) {
    M->group = leaf_;
    M->top = leaf_;
    M->project_top.resize(leaf_->order());
    for (uint32_t i = 0; i < leaf_->order(); ++i) M->project_top[i] = i;
    std::lock_guard<std::mutex> lock(mat_mutex_);
    if (!mat_) mat_ = M;
    return *mat_;
  }
  if (!top_)
    throw Error(ErrorKind::OrderCapExceeded,
                "structured product without leaves cannot be materialized");
  if (!materializable(order_cap))
    throw Error(ErrorKind::OrderCapExceeded,
                "structured group of order " + order().str() + " exceeds cap " +
                    std::to_string(order_cap));

  PermGroupPtr T = top_group();
  M->top = T;
  M->socle = socle_raw_;
  uint32_t off = 0;
  for (uint32_t s = 0; s < socle_raw_.size(); ++s) {
    const auto &sum = socle_raw_[s];
    uint64_t block_size = 1;
    for (uint32_t i = 0; i < sum.module.dim; ++i) block_size *= sum.module.q;
    for (uint32_t c = 0; c < sum.multiplicity; ++c) {
      M->block_offset.push_back(off);
      M->block_summand.push_back(s);
      off += uint32_t(block_size);
    }
  }
  M->socle_points = off;
  const uint32_t total_deg = off + T->degree();

  std::vector<Permutation> gens;
  // Translations by basis vectors of each block.
  for (std::size_t blk = 0; blk < M->block_offset.size(); ++blk) {
    const GModule &V = socle_raw_[M->block_summand[blk]].module;
    for (uint32_t t = 0; t < V.dim; ++t) {
      std::vector<uint32_t> img(total_deg);
      for (uint32_t i = 0; i < total_deg; ++i) img[i] = i;
      uint64_t block_size = 1;
      for (uint32_t i = 0; i < V.dim; ++i) block_size *= V.q;
      uint64_t step = 1;
      for (uint32_t i = 0; i < t; ++i) step *= V.q;
      for (uint64_t code = 0; code < block_size; ++code) {
        uint64_t digit = (code / step) % V.q;
        uint64_t moved = digit + 1 == V.q ? code - step * (V.q - 1) : code + step;
        img[M->block_offset[blk] + code] = M->block_offset[blk] + uint32_t(moved);
      }
      gens.push_back(Permutation(std::move(img)));
    }
  }
  // Top generators acting linearly on every block and naturally on its points.
  for (uint32_t gi = 0; gi < T->generators().size(); ++gi) {
    uint32_t gid = T->generator_ids()[gi];
    auto rho = M->rho_of(gid);
    std::vector<std::vector<uint32_t>> zero_w;
    for (std::size_t blk = 0; blk < M->block_offset.size(); ++blk)
      zero_w.push_back(std::vector<uint32_t>(socle_raw_[M->block_summand[blk]].module.dim, 0));
    gens.push_back(M->element_perm(zero_w, gid, rho));
  }

  M->group = PermGroup::from_generators(gens, order_cap);
  if (BigUint(M->group->order()) == order()) {
    // expected
  } else {
    throw Error(ErrorKind::Internal, "materialized order mismatch for " + expr_);
  }

  // Projection onto the top along the action on the top block.
  M->project_top.resize(M->group->order());
  const uint32_t base = M->socle_points;
  for (uint32_t x = 0; x < M->group->order(); ++x) {
    const Permutation &px = M->group->element(x);
    std::vector<uint32_t> img(T->degree());
    for (uint32_t p = 0; p < T->degree(); ++p) img[p] = px.apply(base + p) - base;
    M->project_top[x] = T->id_of(Permutation(std::move(img)));
  }

  std::lock_guard<std::mutex> lock(mat_mutex_);
  if (!mat_) mat_ = M;
  return *mat_;
}

uint32_t gaschutz_d(const StructuredGroup &S) {
  if (!S.annotation_complete())
    throw Error(ErrorKind::MissingAnnotation,
                "chief annotation unavailable for " + S.expr() +
                    " (non-abelian leaf without construction data)");
  uint32_t best = 0;
  for (const auto &a : S.annotation()) {
    uint32_t theta = a.trivial_action ? 0 : 1;
    uint32_t val = theta + (a.delta + a.r - 1) / a.r;
    best = std::max(best, val);
  }
  return best;
}

} // namespace invgen
