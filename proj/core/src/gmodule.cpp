#include "invgen/gmodule.hpp"

#include "invgen/errors.hpp"

namespace invgen {

MatFp GModule::matrix_of(uint32_t elem_id) const {
  const auto &words = group->bfs_words();
  std::vector<uint32_t> path;
  uint32_t cur = elem_id;
  while (cur != group->identity_id()) {
    path.push_back(words[cur].second);
    cur = words[cur].first;
  }
  MatFp m = MatFp::identity(q, dim);
  for (auto it = path.rbegin(); it != path.rend(); ++it) m = mat_mul(m, gen_action[*it]);
  return m;
}

std::vector<MatFp> GModule::all_matrices() const {
  const auto &words = group->bfs_words();
  const uint32_t n = uint32_t(group->order());
  std::vector<MatFp> mats(n);
  std::vector<bool> have(n, false);
  mats[group->identity_id()] = MatFp::identity(q, dim);
  have[group->identity_id()] = true;
  // Resolve along BFS parents; each element costs one multiply.
  for (uint32_t x = 0; x < n; ++x) {
    if (have[x]) continue;
    std::vector<uint32_t> chain{x};
    uint32_t cur = words[x].first;
    while (!have[cur]) {
      chain.push_back(cur);
      cur = words[cur].first;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      mats[*it] = mat_mul(mats[words[*it].first], gen_action[words[*it].second]);
      have[*it] = true;
    }
  }
  return mats;
}

bool GModule::verify_action(std::mt19937_64 &rng, int trials) const {
  const uint32_t n = uint32_t(group->order());
  for (int t = 0; t < trials; ++t) {
    uint32_t a = uint32_t(rng() % n), b = uint32_t(rng() % n);
    MatFp lhs = matrix_of(group->mul(a, b));
    MatFp rhs = mat_mul(matrix_of(a), matrix_of(b));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Bitset GModule::kernel_ids() const {
  Bitset ker(group->order());
  for (uint32_t x = 0; x < group->order(); ++x)
    if (matrix_of(x).is_identity()) ker.set(x);
  return ker;
}

bool GModule::is_trivial_action() const {
  for (const auto &m : gen_action)
    if (!m.is_identity()) return false;
  return true;
}

GModule make_module(PermGroupPtr G, uint32_t q, std::vector<MatFp> gen_action) {
  GModule M;
  M.group = std::move(G);
  M.q = q;
  M.dim = gen_action.empty() ? 0 : gen_action.front().rows;
  for (const auto &m : gen_action)
    if (m.rows != M.dim || m.cols != M.dim || !mat_invertible(m))
      throw Error(ErrorKind::Internal, "module generator matrices must be invertible and square");
  M.gen_action = std::move(gen_action);
  return M;
}

GModule regular_module(PermGroupPtr G, uint32_t q, uint64_t order_cap) {
  if (G->order() > order_cap)
    throw Error(ErrorKind::OrderCapExceeded,
                "regular module capped at order " + std::to_string(order_cap));
  const uint32_t n = uint32_t(G->order());
  GModule M;
  M.group = G;
  M.q = q;
  M.dim = n;
  for (uint32_t g : G->generator_ids()) {
    MatFp P(q, n, n);
    for (uint32_t x = 0; x < n; ++x) P.at(x, G->mul(x, g)) = 1;
    M.gen_action.push_back(std::move(P));
  }
  return M;
}

GModule trivial_module(PermGroupPtr G, uint32_t q) {
  GModule M;
  M.group = std::move(G);
  M.q = q;
  M.dim = 1;
  M.gen_action.assign(M.group->generators().size(), MatFp::identity(q, 1));
  return M;
}

GModule module_power(const GModule &V, uint32_t u) {
  GModule M;
  M.group = V.group;
  M.q = V.q;
  M.dim = V.dim * u;
  for (const auto &g : V.gen_action) {
    MatFp D(V.q, M.dim, M.dim);
    for (uint32_t c = 0; c < u; ++c)
      for (uint32_t i = 0; i < V.dim; ++i)
        for (uint32_t j = 0; j < V.dim; ++j)
          D.at(c * V.dim + i, c * V.dim + j) = g.at(i, j);
    M.gen_action.push_back(std::move(D));
  }
  return M;
}

FixedSpace fixed_space(const GModule &V, uint32_t elem_id) {
  MatFp m = V.matrix_of(elem_id);
  MatFp diff = mat_sub(m, MatFp::identity(V.q, V.dim));
  MatFp ker = left_nullspace(diff);
  return FixedSpace{ker.rows, std::move(ker)};
}

FixedSpace fixed_space(const GModule &V, const Permutation &g) {
  return fixed_space(V, V.group->id_of(g));
}

FixedSpace global_fixed_space(const GModule &V) {
  if (V.gen_action.empty()) {
    return FixedSpace{V.dim, MatFp::identity(V.q, V.dim)};
  }
  MatFp stacked(V.q, V.dim, V.dim * uint32_t(V.gen_action.size()));
  for (uint32_t k = 0; k < V.gen_action.size(); ++k) {
    MatFp diff = mat_sub(V.gen_action[k], MatFp::identity(V.q, V.dim));
    for (uint32_t i = 0; i < V.dim; ++i)
      for (uint32_t j = 0; j < V.dim; ++j) stacked.at(i, k * V.dim + j) = diff.at(i, j);
  }
  MatFp ker = left_nullspace(stacked);
  return FixedSpace{ker.rows, std::move(ker)};
}

std::pair<uint32_t, uint32_t> centralizer_dim_check(const PermGroup &G, uint32_t q,
                                                    uint32_t elem_id) {
  GModule reg = regular_module(G.shared_from_this(), q);
  uint32_t measured = fixed_space(reg, elem_id).dim;
  uint32_t predicted = uint32_t(G.order() / G.element_order(elem_id));
  return {measured, predicted};
}

RowSpace spin(const GModule &M, const std::vector<std::vector<uint32_t>> &seeds) {
  RowSpace W(M.q, M.dim);
  std::vector<std::vector<uint32_t>> queue;
  for (const auto &v : seeds)
    if (W.insert(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto &g : M.gen_action) {
      auto img = vec_mat(queue[head], g);
      if (W.insert(img)) queue.push_back(std::move(img));
    }
  }
  return W;
}

GModule submodule_action(const GModule &M, const RowSpace &W) {
  GModule S;
  S.group = M.group;
  S.q = M.q;
  S.dim = W.dim();
  for (const auto &g : M.gen_action) {
    MatFp r(M.q, S.dim, S.dim);
    for (uint32_t i = 0; i < S.dim; ++i) {
      std::vector<uint32_t> row(W.basis().row(i), W.basis().row(i) + M.dim);
      auto img = vec_mat(row, g);
      // Basis is RREF, so coordinates are just the pivot entries.
      auto coords = W.coordinates(img);
      for (uint32_t j = 0; j < S.dim; ++j) r.at(i, j) = coords[j];
    }
    S.gen_action.push_back(std::move(r));
  }
  return S;
}

} // namespace invgen
