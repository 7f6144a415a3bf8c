#include "wsc/strips.hpp"

#include "wsc/error.hpp"
#include "wsc/poly_io.hpp"
#include "wsc/poly_ops.hpp"

namespace wsc {

using namespace vars;

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

const MultiPoly& at(const std::vector<MultiPoly>& row, std::size_t d) {
  static const MultiPoly zero;
  return d < row.size() ? row[d] : zero;
}

std::vector<MultiPoly> next_row(const std::vector<MultiPoly>& prev, const MultiPoly& edge_weight,
                                const MultiPoly& interior_weight, StripRecurrence form) {
  const std::size_t ly = prev.size();  // building L_y + 1 from L_y, prev has L_y + 1 entries
  std::vector<MultiPoly> row(ly + 1);
  row[0] = edge_weight * at(prev, 0) + at(prev, 1);
  for (std::size_t d = 1; d <= ly; ++d) {
    const MultiPoly& left = form == StripRecurrence::Corrected ? at(prev, d - 1) : row[d - 1];
    row[d] = left + interior_weight * at(prev, d) + at(prev, d + 1);
  }
  return row;
}

MultiPoly sum(const std::vector<MultiPoly>& row) {
  MultiPoly out;
  for (const auto& p : row) out += p;
  return out;
}

MultiPoly s_minus_1(const MultiPoly& p) { return substitute(p, Substitution().bind(Var::s, s() - MultiPoly(1))); }

StripCheck check(std::string name, std::size_t ly, const MultiPoly& lhs, const MultiPoly& rhs) {
  StripCheck c{std::move(name), ly, false, lhs - rhs};
  c.holds = c.residual.is_zero();
  return c;
}

}  // namespace

MultiPoly c_tilde(std::size_t d, const MultiPoly& argument) {
  MultiPoly out;
  for (std::size_t j = 0; j <= d; ++j) {
    MultiPoly term = pow(argument, static_cast<unsigned>(d - j)).scaled(binomial(2 * d - j, j));
    if (j % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

std::string_view to_string(StripRole role) { return role == StripRole::Zh ? "Zh" : "Ph"; }

MultiPoly StripCountTable::count(StripRole role, std::size_t d) const {
  return at(role == StripRole::Zh ? zh : ph, d);
}

std::vector<StripCountTable> build_counts(std::size_t ly_max, StripRecurrence form) {
  if (ly_max < 1) throw Error(ErrorCode::BadSize, "strip tables need L_y >= 1");
  const MultiPoly one(1);
  std::vector<StripCountTable> tables(ly_max + 1);
  tables[0].zh = {one};
  tables[0].total_zh = one;
  tables[1].ly = 1;
  tables[1].zh = {s() + one, one};
  tables[1].ph = {s() + one, one};
  for (std::size_t ly = 1; ly < ly_max; ++ly) {
    auto& next = tables[ly + 1];
    next.ly = ly + 1;
    next.zh = next_row(tables[ly].zh, s() + one, s() + MultiPoly(2), form);
    next.ph = next_row(tables[ly].ph, s(), s() + one, form);
  }
  for (std::size_t ly = 1; ly <= ly_max; ++ly) {
    tables[ly].total_zh = sum(tables[ly].zh);
    tables[ly].total_ph = sum(tables[ly].ph);
  }
  return tables;
}

std::vector<StripCheck> verify_sum_identities(const std::vector<StripCountTable>& tables, std::size_t ly) {
  if (ly == 0 || ly >= tables.size()) throw Error(ErrorCode::BadSize, "no table for L_y = " + std::to_string(ly));
  const auto& t = tables[ly];
  MultiPoly zh, ph;
  for (std::size_t d = 0; d <= ly; ++d) {
    const MultiPoly c = c_tilde(d, q() - s());
    zh += c * t.count(StripRole::Zh, d);
    ph += c * t.count(StripRole::Ph, d);
  }
  const auto k = static_cast<unsigned>(ly);
  return {check("Zh sum identity", ly, zh, pow(q(), k)),
          check("Ph sum identity", ly, ph, q() * pow(q() - MultiPoly(1), k - 1))};
}

std::vector<StripCheck> verify_relation_and_totals(const std::vector<StripCountTable>& tables, std::size_t ly) {
  if (ly == 0 || ly >= tables.size()) throw Error(ErrorCode::BadSize, "no table for L_y = " + std::to_string(ly));
  const auto& t = tables[ly];
  const auto& below = tables[ly - 1];
  std::vector<StripCheck> out;
  for (std::size_t d = 0; d <= ly; ++d) {
    out.push_back(check("Ph/Zh relation d=" + std::to_string(d), ly, t.count(StripRole::Ph, d),
                        s_minus_1(t.count(StripRole::Zh, d)) + s_minus_1(below.count(StripRole::Zh, d))));
  }
  const auto L = static_cast<long>(ly);
  out.push_back(check("n_Zh(L,L)", ly, t.count(StripRole::Zh, ly), MultiPoly(1)));
  out.push_back(check("n_Ph(L,L)", ly, t.count(StripRole::Ph, ly), MultiPoly(1)));
  out.push_back(check("n_Zh(L,L-1)", ly, t.count(StripRole::Zh, ly - 1),
                      (s() + MultiPoly(1)) * MultiPoly(L) + MultiPoly(L - 1)));
  out.push_back(check("n_Ph(L,L-1)", ly, t.count(StripRole::Ph, ly - 1), (s() + MultiPoly(1)) * MultiPoly(L)));
  out.push_back(check("N_Zh closed form", ly, t.total_zh, total_zh_closed_form(ly)));
  out.push_back(check("N_Ph closed form", ly, t.total_ph, total_ph_closed_form(ly)));
  if (auto z = tabulated_total(StripRole::Zh, ly)) out.push_back(check("N_Zh tabulated", ly, t.total_zh, *z));
  if (auto p = tabulated_total(StripRole::Ph, ly)) out.push_back(check("N_Ph tabulated", ly, t.total_ph, *p));
  return out;
}

MultiPoly total_zh_closed_form(std::size_t ly) {
  MultiPoly out;
  for (std::size_t j = 0; j <= ly; ++j)
    out += pow(s(), static_cast<unsigned>(ly - j)).scaled(binomial(ly, j) * binomial(2 * j, j));
  return out;
}

MultiPoly total_ph_closed_form(std::size_t ly) {
  if (ly == 0) throw Error(ErrorCode::BadSize, "N_Ph needs L_y >= 1");
  return s_minus_1(total_zh_closed_form(ly)) + s_minus_1(total_zh_closed_form(ly - 1));
}

std::optional<MultiPoly> tabulated_total(StripRole role, std::size_t ly) {
  static const char* const zh[] = {"s+2",
                                   "s^2+4s+6",
                                   "s^3+6s^2+18s+20",
                                   "s^4+8s^3+36s^2+80s+70",
                                   "s^5+10s^4+60s^3+200s^2+350s+252",
                                   "s^6+12s^5+90s^4+400s^3+1050s^2+1512s+924"};
  static const char* const ph[] = {"s+2",
                                   "s^2+3s+4",
                                   "s^3+4s^2+11s+10",
                                   "s^4+5s^3+21s^2+37s+26",
                                   "s^5+6s^4+34s^3+88s^2+123s+70",
                                   "s^6+7s^5+50s^4+170s^3+366s^2+401s+192"};
  if (ly < 1 || ly > 6) return std::nullopt;
  return parse_poly(role == StripRole::Zh ? zh[ly - 1] : ph[ly - 1]);
}

std::vector<double> growth_rate(StripRole role, long s, std::size_t ly_max) {
  const auto tables = build_counts(ly_max);
  std::vector<double> out;
  for (std::size_t ly = 1; ly < ly_max; ++ly) {
    const auto a = specialize(tables[ly].total(role), Var::s, s).constant_term();
    const auto b = specialize(tables[ly + 1].total(role), Var::s, s).constant_term();
    out.push_back(mpq_class(b, a).get_d());
  }
  return out;
}

void require_all(const std::vector<StripCheck>& checks) {
  for (const auto& c : checks)
    if (!c.holds)
      throw Error(ErrorCode::IdentityFailed,
                  c.name + " at L_y=" + std::to_string(c.ly) + ", residual " + to_text(c.residual));
}

}  // namespace wsc
