#include "wsc/families.hpp"

#include "wsc/error.hpp"
#include "wsc/partition.hpp"
#include "wsc/poly_ops.hpp"

namespace wsc {

using namespace vars;

namespace {

MultiPoly w_pow(std::size_t k) { return MultiPoly::variable(index(Var::w), static_cast<std::uint32_t>(k)); }

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// x (x-1) ... (x-k+1); 1 when k = 0.
MultiPoly falling(const MultiPoly& x, std::size_t k) {
  MultiPoly out(1);
  for (std::size_t j = 0; j < k; ++j) out *= x - MultiPoly(static_cast<long>(j));
  return out;
}

void require_size(std::size_t n, std::size_t least, const char* what) {
  if (n < least) throw Error(ErrorCode::BadSize, std::string(what) + " needs n >= " + std::to_string(least));
}

}  // namespace

PowerSumPair::PowerSumPair(MultiPoly e1, MultiPoly e2) : e1_(std::move(e1)), e2_(std::move(e2)) {
  cache_.push_back(MultiPoly(2));
  cache_.push_back(e1_);
}

const MultiPoly& PowerSumPair::p(std::size_t k) {
  while (cache_.size() <= k) {
    const std::size_t m = cache_.size();
    cache_.push_back(e1_ * cache_[m - 1] - e2_ * cache_[m - 2]);
  }
  return cache_[k];
}

MultiPoly z_null(std::size_t n) {
  require_size(n, 1, "null graph");
  return pow(q() + t(), static_cast<unsigned>(n));
}

MultiPoly z_tree(std::size_t n) {
  require_size(n, 1, "tree");
  return q() * pow(q() + v(), static_cast<unsigned>(n - 1));
}

MultiPoly z_line(std::size_t n) {
  require_size(n, 1, "line graph");
  // A: weight with the last vertex on a given favored color, B: on a given
  // unfavored color.
  MultiPoly a = w(), b(1);
  for (std::size_t k = 1; k < n; ++k) {
    MultiPoly next_a = w() * ((s() + v()) * a + qt() * b);
    MultiPoly next_b = s() * a + (qt() + v()) * b;
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return s() * a + qt() * b;
}

MultiPoly z_star(std::size_t n) {
  require_size(n, 2, "star graph");
  MultiPoly out;
  const MultiPoly leaf = qt() + s() * w();
  for (std::size_t j = 0; j < n; ++j) {
    out += (pow(v(), static_cast<unsigned>(j)) * (qt() + s() * w_pow(j + 1)) *
            pow(leaf, static_cast<unsigned>(n - 1 - j)))
               .scaled(binomial(n - 1, j));
  }
  return out;
}

MultiPoly ph_complete(std::size_t n) {
  require_size(n, 1, "complete graph");
  MultiPoly out;
  for (std::size_t l = 0; l <= n; ++l)
    out += (falling(s(), l) * falling(qt(), n - l) * w_pow(l)).scaled(binomial(n, l));
  return out;
}

MultiPoly circuit_e1() { return qt() + v() + w() * (s() + v()); }
MultiPoly circuit_e2() { return v() * w() * (q() + v()); }

MultiPoly z_circuit(std::size_t n) {
  require_size(n, 2, "circuit");
  PowerSumPair lambdas(circuit_e1(), circuit_e2());
  const auto k = static_cast<unsigned>(n);
  return lambdas.p(n) + (s() - MultiPoly(1)) * pow(v() * w(), k) + (qt() - MultiPoly(1)) * pow(v(), k);
}

MultiPoly ph_circuit(std::size_t n) {
  require_size(n, 1, "circuit");
  if (n == 1) return MultiPoly();
  return specialize(z_circuit(n), Var::v, -1);
}

MultiPoly family_z(FamilyKind kind, std::size_t n) {
  switch (kind) {
    case FamilyKind::Null: return z_null(n);
    case FamilyKind::Line: return z_line(n);
    case FamilyKind::Star:
      if (n == 1) return z_null(1);
      return z_star(n);
    case FamilyKind::Circuit:
      if (n == 1) throw Error(ErrorCode::LoopyGraph, "C_1 is a looped vertex; Z is computed for loopless graphs only");
      return z_circuit(n);
    case FamilyKind::Complete:
    case FamilyKind::C4d: break;
  }
  return z_subgraph_sum(make_family(kind, n));
}

MultiPoly family_ph(FamilyKind kind, std::size_t n) {
  switch (kind) {
    case FamilyKind::Complete: return ph_complete(n);
    case FamilyKind::Circuit: return ph_circuit(n);
    case FamilyKind::C4d: return ph(make_family(kind, n));
    default: break;
  }
  return specialize(family_z(kind, n), Var::v, -1);
}

TransmigrationReport transmigration_check(std::size_t n) {
  TransmigrationReport out;
  out.n = n;
  const auto k = static_cast<unsigned>(n);
  const MultiPoly at_sq = substitute(z_circuit(n), Substitution().bind(Var::s, q()));
  const MultiPoly expected = w_pow(n) * (pow(q() + v(), k) + (q() - MultiPoly(1)) * pow(v(), k));
  out.residual = at_sq - expected;
  out.holds = out.residual.is_zero();
  return out;
}

}  // namespace wsc
