#include "logarr/arrangement/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "logarr/core/linalg.hpp"

namespace logarr {

namespace {

Form normalize(int n_vars, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != n_vars) throw std::invalid_argument("form length differs from n_vars");
  BigInt lcm_den = 1;
  for (const auto& c : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& c : v) {
    BigInt z = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  if (g == 0) throw std::invalid_argument("degenerate form");
  const auto lead = std::find_if(ints.begin(), ints.end(), [](const BigInt& z) { return z != 0; });
  if (*lead < 0) g = -g;
  Form out;
  for (auto& z : ints) out.push_back(to_int64(BigInt(z / g)));
  return out;
}

std::vector<Rat> to_rat(const Form& f) { return {f.begin(), f.end()}; }

}  // namespace

std::vector<Rat> Arrangement::form_rat(int i) const { return to_rat(form(i)); }

MPoly Arrangement::Q() const {
  MPoly q(n_vars_, 1);
  for (int i = 0; i < d(); ++i) {
    const auto f = form_rat(i);
    q = q * MPoly::linear_form(f);
  }
  return q;
}

int vector_rank(const std::vector<std::vector<Rat>>& vs) {
  if (vs.empty()) return 0;
  std::vector<RatRow> rows;
  for (const auto& v : vs) {
    RatRow r;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) r.push(static_cast<int>(j), v[j]);
    rows.push_back(std::move(r));
  }
  return echelon_rank(RatField{}, std::move(rows), static_cast<int>(vs.front().size()), Exec::Serial);
}

Arrangement make_arrangement(int n_vars, const std::vector<std::vector<Rat>>& forms, std::string name) {
  // The zero-dimensional space only carries the empty arrangement (essentialized empty input).
  if (n_vars < 1 && !(n_vars == 0 && forms.empty())) throw std::invalid_argument("n_vars must be at least 1");
  if (n_vars > kMaxVars) throw std::invalid_argument("too many variables");
  Arrangement a;
  a.n_vars_ = n_vars;
  a.name_ = std::move(name);
  for (const auto& v : forms) {
    Form f = normalize(n_vars, v);
    if (std::find(a.forms_.begin(), a.forms_.end(), f) != a.forms_.end())
      throw std::invalid_argument("duplicate hyperplane");
    a.forms_.push_back(std::move(f));
  }
  std::vector<std::vector<Rat>> rs;
  for (const auto& f : a.forms_) rs.push_back(to_rat(f));
  a.rank_ = vector_rank(rs);
  return a;
}

Arrangement make_arrangement(int n_vars, const std::vector<Form>& forms, std::string name) {
  std::vector<std::vector<Rat>> rs;
  for (const auto& f : forms) rs.push_back(to_rat(f));
  return make_arrangement(n_vars, rs, std::move(name));
}

Arrangement boolean_arrangement(int m) {
  if (m < 1) throw std::invalid_argument("boolean arrangement needs m >= 1");
  std::vector<Form> fs;
  for (int i = 0; i < m; ++i) {
    Form f(static_cast<std::size_t>(m), 0);
    f[static_cast<std::size_t>(i)] = 1;
    fs.push_back(f);
  }
  return make_arrangement(m, fs, "boolean(" + std::to_string(m) + ")");
}

Arrangement braid_arrangement(int m) {
  if (m < 2) throw std::invalid_argument("braid arrangement needs m >= 2");
  std::vector<Form> fs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Form f(static_cast<std::size_t>(m), 0);
      f[static_cast<std::size_t>(i)] = 1;
      f[static_cast<std::size_t>(j)] = -1;
      fs.push_back(f);
    }
  return make_arrangement(m, fs, "braid(" + std::to_string(m) + ")");
}

namespace {

bool subsets_independent(const std::vector<Form>& chosen, const Form& cand, int max_size) {
  // Every subset containing cand of size <= max_size must be independent; it suffices to
  // check subsets of size exactly min(max_size, |chosen|+1), since independence is inherited.
  const int k = std::min(max_size, static_cast<int>(chosen.size()) + 1) - 1;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  const int total = static_cast<int>(chosen.size());
  while (true) {
    std::vector<std::vector<Rat>> vs{to_rat(cand)};
    for (int i : idx) vs.push_back(to_rat(chosen[static_cast<std::size_t>(i)]));
    if (vector_rank(vs) != k + 1) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == total - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
}

}  // namespace

Arrangement generic_arrangement(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 1) throw std::invalid_argument("generic arrangement needs n >= 0 and d >= 1");
  if (d < n + 1) throw std::invalid_argument("generic arrangement with d < n+1 cannot be essential");
  if (n == 0 && d > 1) throw std::invalid_argument("generic arrangement in one variable has d = 1");
  std::mt19937_64 gen(seed);
  std::vector<Form> chosen;
  const int nv = n + 1;
  while (static_cast<int>(chosen.size()) < d) {
    Form cand(static_cast<std::size_t>(nv));
    for (auto& c : cand) c = static_cast<std::int64_t>(gen() % 19) - 9;
    if (std::all_of(cand.begin(), cand.end(), [](std::int64_t c) { return c == 0; })) continue;
    if (!subsets_independent(chosen, cand, nv)) continue;
    chosen.push_back(normalize(nv, to_rat(cand)));
  }
  return make_arrangement(nv, chosen,
                          "generic(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(seed) + ")");
}

Arrangement edelman_reiner() {
  std::vector<Form> fs;
  for (int mask = 1; mask < 16; ++mask) {
    Form f(4);
    for (int i = 0; i < 4; ++i) f[static_cast<std::size_t>(i)] = (mask >> (3 - i)) & 1;
    fs.push_back(f);
  }
  return make_arrangement(4, fs, "edelman-reiner");
}

Arrangement nlf_demo() {
  return make_arrangement(4, std::vector<Form>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}},
                          "nlf-demo");
}

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid family parameter '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("invalid family parameter '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Arrangement family(const std::string& spec) {
  std::string name = spec, params;
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    params = spec.substr(colon + 1);
  }
  std::replace(name.begin(), name.end(), '_', '-');
  const std::vector<int> p = parse_ints(params);
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw std::invalid_argument("family '" + name + "' expects " + std::to_string(k) + " parameters");
  };
  if (name == "boolean") {
    need(1);
    return boolean_arrangement(p[0]);
  }
  if (name == "braid") {
    need(1);
    return braid_arrangement(p[0]);
  }
  if (name == "generic") {
    if (p.size() == 2) return generic_arrangement(p[0], p[1], 0);
    need(3);
    if (p[2] < 0) throw std::invalid_argument("seed must be nonnegative");
    return generic_arrangement(p[0], p[1], static_cast<std::uint64_t>(p[2]));
  }
  if (name == "edelman-reiner") {
    need(0);
    return edelman_reiner();
  }
  if (name == "nlf-demo") {
    need(0);
    return nlf_demo();
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace logarr
