#include <cmath>
#include <stdexcept>

#include "gridramsey/quasirand.hpp"

namespace gridramsey {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational q{Integer{static_cast<unsigned long>(num)}, Integer{static_cast<unsigned long>(den)}};
  q.canonicalize();
  return q;
}

void require_lemma_preconditions(const PartitionedGraph& pg, const Rational& eps) {
  if (pg.class_count() < 2) throw std::domain_error("lemma needs k >= 2 classes");
  if (eps > 1) throw std::domain_error("class imbalance exceeds 1");
  if (auto check = is_kpartite(pg); !check)
    throw std::domain_error("graph is not k-partite: edge " + std::to_string(check.violation->u + 1) + " " +
                            std::to_string(check.violation->v + 1) + " lies inside a class");
}

Rational lower_bound_formula(std::size_t k, const Rational& eps, const Rational& delta, std::size_t n) {
  const Rational km1{static_cast<unsigned long>(k - 1)};
  const Rational shape = 1 + 1 / (km1 * km1 * km1);
  return (1 - 4 * eps) * shape * qpow(delta, 4) * qpow(Rational{static_cast<unsigned long>(n)}, 4);
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t value) {
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(value)));
  while (root * root > value) --root;
  while ((root + 1) * (root + 1) <= value) ++root;
  if (root * root != value) return std::nullopt;
  return root;
}

}  // namespace

Rational lemma_lower_bound(const PartitionedGraph& pg) {
  const auto trimmed = pg.without_empty_classes();
  const auto eps = partition_imbalance(trimmed);
  require_lemma_preconditions(trimmed, eps);
  return lower_bound_formula(trimmed.class_count(), eps, density(trimmed.graph()), trimmed.graph().order());
}

LemmaDiagnostics lemma_diagnostics(const PartitionedGraph& pg) {
  for (const auto& cls : pg.classes())
    if (cls.empty()) throw std::domain_error("diagnostics need every class non-empty");

  const auto& g = pg.graph();
  const auto n = g.order();
  const auto k = pg.class_count();

  LemmaDiagnostics d;
  d.n = n;
  d.k = k;
  d.epsilon = partition_imbalance(pg);
  require_lemma_preconditions(pg, d.epsilon);
  d.delta = density(g);
  d.hom = hom_c4(g);
  d.bound = lower_bound_formula(k, d.epsilon, d.delta, n);

  d.class_degree.assign(n, std::vector<std::size_t>(k, 0));
  for (Vertex z = 0; z < n; ++z)
    for (Vertex y : g.neighbours(z).members()) ++d.class_degree[z][pg.class_of(y)];

  // The codegree mass between classes i and j equals sum_z d^i_z d^j_z.
  d.codegree_mass.assign(k, std::vector<std::uint64_t>(k, 0));
  for (Vertex z = 0; z < n; ++z)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) d.codegree_mass[i][j] += d.class_degree[z][i] * d.class_degree[z][j];

  std::vector<std::uint64_t> sizes(k);
  for (std::size_t i = 0; i < k; ++i) sizes[i] = pg.classes()[i].size();

  d.s = 0;
  for (std::size_t i = 0; i < k; ++i) d.s += ratio(d.codegree_mass[i][i], sizes[i]);

  bool rational_t = true;
  Rational t_exact = 0;
  d.t = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto product = sizes[i] * sizes[j];
      if (auto root = exact_sqrt(product); root && rational_t) {
        t_exact += ratio(d.codegree_mass[i][j], *root);
      } else {
        rational_t = false;
      }
      mpf_class term(static_cast<unsigned long>(product), LemmaDiagnostics::kDiagnosticPrecisionBits);
      term = sqrt(term);
      d.t += mpf_class(static_cast<unsigned long>(d.codegree_mass[i][j]), LemmaDiagnostics::kDiagnosticPrecisionBits) /
             term;
    }
  }
  if (rational_t) d.t_exact = t_exact;
  return d;
}

ChainCheck check_chain(const LemmaDiagnostics& d) {
  const Rational k{static_cast<unsigned long>(d.k)};
  const Rational n{static_cast<unsigned long>(d.n)};
  const Rational hom{Integer{static_cast<unsigned long>(d.hom)}};
  const Rational density_side = k * d.delta * d.delta * n * n / ((1 + d.epsilon) * (1 + d.epsilon));

  ChainCheck out;
  if (d.t_exact) {
    const auto& t = *d.t_exact;
    const Rational chain_b = d.s * d.s / k + (t - d.s) * (t - d.s) / (k * (k - 1));
    out.s_vs_t = d.s >= t / (k - 1);
    out.hom_vs_s_t = hom >= chain_b;
    out.t_vs_density = t >= density_side;
    out.s_vs_t_tight = d.s == t / (k - 1);
    out.hom_vs_s_t_tight = hom == chain_b;
    out.t_vs_density_tight = t == density_side;
    return out;
  }

  constexpr auto bits = LemmaDiagnostics::kDiagnosticPrecisionBits;
  const mpf_class tol(std::ldexp(1.0, -64), bits);
  auto at_least = [&](const mpf_class& lhs, const mpf_class& rhs) {
    const mpf_class scale = abs(lhs) > abs(rhs) ? mpf_class(abs(lhs), bits) : mpf_class(abs(rhs), bits);
    return mpf_class(lhs - rhs, bits) >= mpf_class(-tol * scale, bits);
  };
  const mpf_class s(d.s, bits);
  const mpf_class kf(k, bits);
  const mpf_class t(d.t, bits);
  const mpf_class chain_b = mpf_class(s * s / kf, bits) + mpf_class((t - s) * (t - s) / (kf * (kf - 1)), bits);
  out.s_vs_t = at_least(s, mpf_class(t / (kf - 1), bits));
  out.hom_vs_s_t = at_least(mpf_class(hom, bits), chain_b);
  out.t_vs_density = at_least(t, mpf_class(density_side, bits));
  return out;
}

}  // namespace gridramsey
