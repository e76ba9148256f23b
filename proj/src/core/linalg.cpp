#include "logarr/core/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace logarr {

template <class E>
int SparseRow<E>::find(int c) const {
  auto it = std::lower_bound(idx.begin(), idx.end(), c);
  if (it == idx.end() || *it != c) return -1;
  return static_cast<int>(it - idx.begin());
}

template struct SparseRow<Rat>;
template struct SparseRow<std::uint32_t>;

ModField::Elem ModField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Elem>(r);
}

ModField::Elem ModField::reduce(const BigInt& z) const {
  BigInt r = z % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r.get_ui());
}

ModField::Elem ModField::reduce(const Rat& q) const {
  const Elem den = reduce(BigInt(q.get_den()));
  if (den == 0) throw std::domain_error("prime divides a denominator");
  return mul(reduce(BigInt(q.get_num())), inv(den));
}

template <class E>
std::vector<int> Echelon<E>::free_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

template struct Echelon<Rat>;
template struct Echelon<std::uint32_t>;

namespace {

/// target <- target - f * src, written through scratch.
template <class Field>
void eliminate(const Field& field, SparseRow<typename Field::Elem>& target, const typename Field::Elem& f,
               const SparseRow<typename Field::Elem>& src, SparseRow<typename Field::Elem>& scratch) {
  using E = typename Field::Elem;
  scratch.idx.clear();
  scratch.val.resize(target.size() + src.size());
  std::size_t i = 0, j = 0, n = 0;
  while (i < target.size() || j < src.size()) {
    const int ci = i < target.size() ? target.idx[i] : INT32_MAX;
    const int cj = j < src.size() ? src.idx[j] : INT32_MAX;
    if (ci < cj) {
      scratch.idx.push_back(ci);
      std::swap(scratch.val[n++], target.val[i]);
      ++i;
    } else if (cj < ci) {
      scratch.idx.push_back(cj);
      field.negmul(scratch.val[n++], f, src.val[j]);
      ++j;
    } else {
      E& out = scratch.val[n];
      field.submul(out, target.val[i], f, src.val[j]);
      if (!Field::is_zero(out)) {
        scratch.idx.push_back(ci);
        ++n;
      }
      ++i;
      ++j;
    }
  }
  scratch.val.resize(n);
  std::swap(target.idx, scratch.idx);
  std::swap(target.val, scratch.val);
}

}  // namespace

template <class Field>
Echelon<typename Field::Elem> gauss_jordan(const Field& field, std::vector<SparseRow<typename Field::Elem>> rows,
                                           int ncols, Exec exec) {
  using E = typename Field::Elem;
  using Row = SparseRow<E>;
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const Row& r) { return r.empty(); }), rows.end());
  const int nrows = static_cast<int>(rows.size());

  std::vector<int> active(static_cast<std::size_t>(nrows));
  for (int r = 0; r < nrows; ++r) active[static_cast<std::size_t>(r)] = r;
  std::vector<int> pivot_row_of;  // pivot rows in order of their pivot column
  std::vector<int> pivot_cols;

  const bool par = exec == Exec::Parallel;
  std::vector<Row> scratch_pool;

  for (int c = 0; c < ncols && !active.empty(); ++c) {
    int best = -1;
    for (int r : active) {
      const Row& row = rows[static_cast<std::size_t>(r)];
      if (row.idx.front() != c) continue;
      if (best < 0 || row.size() < rows[static_cast<std::size_t>(best)].size()) best = r;
    }
    if (best < 0) continue;

    Row& piv = rows[static_cast<std::size_t>(best)];
    if (!(piv.val.front() == Field::one())) {
      const E f = field.inv(piv.val.front());
      for (auto& v : piv.val) field.mul_inplace(v, f);
    }

    // Every row other than the pivot that carries column c gets it cleared.
    std::vector<int> targets;
    for (int r : active)
      if (r != best && rows[static_cast<std::size_t>(r)].idx.front() == c) targets.push_back(r);
    for (int r : pivot_row_of)
      if (rows[static_cast<std::size_t>(r)].find(c) >= 0) targets.push_back(r);

    const int nt = static_cast<int>(targets.size());
#pragma omp parallel if (par && nt > 16)
    {
      Row scratch;
      E f{};
#pragma omp for schedule(dynamic, 4)
      for (int t = 0; t < nt; ++t) {
        Row& row = rows[static_cast<std::size_t>(targets[static_cast<std::size_t>(t)])];
        const int pos = row.find(c);
        f = row.val[static_cast<std::size_t>(pos)];
        eliminate(field, row, f, piv, scratch);
      }
    }

    pivot_row_of.push_back(best);
    pivot_cols.push_back(c);
    std::erase_if(active, [&](int r) { return r == best || rows[static_cast<std::size_t>(r)].empty(); });
  }

  Echelon<E> out;
  out.cols = ncols;
  out.pivots = std::move(pivot_cols);
  out.rows.reserve(pivot_row_of.size());
  for (int r : pivot_row_of) out.rows.push_back(std::move(rows[static_cast<std::size_t>(r)]));
  return out;
}

template Echelon<Rat> gauss_jordan<RatField>(const RatField&, std::vector<RatRow>, int, Exec);
template Echelon<std::uint32_t> gauss_jordan<ModField>(const ModField&, std::vector<ModRow>, int, Exec);

template <class Field>
int echelon_rank(const Field& field, std::vector<SparseRow<typename Field::Elem>> rows, int ncols, Exec exec) {
  using E = typename Field::Elem;
  using Row = SparseRow<E>;
  // Light columns first keeps fill-in down.
  std::vector<int> weight(static_cast<std::size_t>(ncols));
  for (const auto& r : rows)
    for (int c : r.idx) ++weight[static_cast<std::size_t>(c)];
  std::vector<int> order(static_cast<std::size_t>(ncols));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return weight[static_cast<std::size_t>(x)] < weight[static_cast<std::size_t>(y)];
  });
  std::vector<int> slot(static_cast<std::size_t>(ncols));
  for (int k = 0; k < ncols; ++k) slot[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  std::vector<std::pair<int, E>> entries;
  for (auto& r : rows) {
    entries.clear();
    for (std::size_t k = 0; k < r.size(); ++k) entries.emplace_back(slot[static_cast<std::size_t>(r.idx[k])], std::move(r.val[k]));
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t k = 0; k < entries.size(); ++k) {
      r.idx[k] = entries[k].first;
      r.val[k] = std::move(entries[k].second);
    }
  }

  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(ncols));
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    if (!rows[static_cast<std::size_t>(r)].empty())
      bucket[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)].idx.front())].push_back(r);

  const bool par = exec == Exec::Parallel;
  int rank = 0;
  for (int c = 0; c < ncols; ++c) {
    auto& here = bucket[static_cast<std::size_t>(c)];
    if (here.empty()) continue;
    ++rank;
    const auto best_it = std::min_element(here.begin(), here.end(), [&](int x, int y) {
      return rows[static_cast<std::size_t>(x)].size() < rows[static_cast<std::size_t>(y)].size();
    });
    const int best = *best_it;
    std::swap(*best_it, here.back());
    here.pop_back();
    Row& piv = rows[static_cast<std::size_t>(best)];
    const E inv = field.inv(piv.val.front());
    for (auto& v : piv.val) field.mul_inplace(v, inv);

    const int nt = static_cast<int>(here.size());
#pragma omp parallel if (par && nt > 16)
    {
      Row scratch;
#pragma omp for schedule(dynamic, 4)
      for (int t = 0; t < nt; ++t) {
        Row& row = rows[static_cast<std::size_t>(here[static_cast<std::size_t>(t)])];
        const E f = row.val.front();
        eliminate(field, row, f, piv, scratch);
      }
    }
    for (int r : here) {
      const Row& row = rows[static_cast<std::size_t>(r)];
      if (!row.empty()) bucket[static_cast<std::size_t>(row.idx.front())].push_back(r);
    }
    here.clear();
    here.shrink_to_fit();
    Row().idx.swap(piv.idx);
    piv.val.clear();
    piv.val.shrink_to_fit();
  }
  return rank;
}

template int echelon_rank<RatField>(const RatField&, std::vector<RatRow>, int, Exec);
template int echelon_rank<ModField>(const ModField&, std::vector<ModRow>, int, Exec);

template <class Field>
std::vector<SparseRow<typename Field::Elem>> kernel_from_echelon(const Field& field,
                                                                const Echelon<typename Field::Elem>& ech) {
  using E = typename Field::Elem;
  const std::vector<int> free = ech.free_columns();
  std::vector<int> slot(static_cast<std::size_t>(ech.cols), -1);
  for (std::size_t k = 0; k < free.size(); ++k) slot[static_cast<std::size_t>(free[k])] = static_cast<int>(k);

  // Column-wise gather: entry R[k][f] contributes -R[k][f] at pivot_k of vector f.
  std::vector<std::vector<std::pair<int, const E*>>> entries(free.size());
  for (std::size_t k = 0; k < ech.rows.size(); ++k) {
    const auto& row = ech.rows[k];
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int s = slot[static_cast<std::size_t>(row.idx[j])];
      if (s >= 0) entries[static_cast<std::size_t>(s)].emplace_back(ech.pivots[k], &row.val[j]);
    }
  }

  std::vector<SparseRow<E>> out(free.size());
  const E one = Field::one();
  for (std::size_t s = 0; s < free.size(); ++s) {
    auto& v = out[s];
    bool placed = false;
    for (const auto& [pc, val] : entries[s]) {
      if (!placed && pc > free[s]) {
        v.push(free[s], one);
        placed = true;
      }
      E neg{};
      field.negmul(neg, one, *val);
      v.push(pc, neg);
    }
    if (!placed) v.push(free[s], one);
  }
  return out;
}

template std::vector<RatRow> kernel_from_echelon(const RatField&, const Echelon<Rat>&);
template std::vector<ModRow> kernel_from_echelon(const ModField&, const Echelon<std::uint32_t>&);

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

std::vector<RatRow> RatMatrix::sparse_rows() const {
  std::vector<RatRow> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[static_cast<std::size_t>(r)].push(c, (*this)(r, c));
  return out;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch");
  std::vector<Rat> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

DenseRref rref_reference(RatMatrix m) {
  DenseRref out;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rat inv = 1 / m(row, c);
    for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const Rat f = m(r, c);
      for (int j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  const auto ech = gauss_jordan(RatField{}, m.sparse_rows(), m.cols());
  std::vector<std::vector<Rat>> out;
  for (const auto& v : kernel_from_echelon(RatField{}, ech)) {
    std::vector<Rat> d(static_cast<std::size_t>(m.cols()));
    for (std::size_t j = 0; j < v.size(); ++j) d[static_cast<std::size_t>(v.idx[j])] = v.val[j];
    out.push_back(std::move(d));
  }
  return out;
}

int rank(const RatMatrix& m) { return echelon_rank(RatField{}, m.sparse_rows(), m.cols()); }

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 32-bit inputs.
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto powmod = [n](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= n;
    while (e > 0) {
      if (e & 1) r = r * b % n;
      b = b * b % n;
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t choose_prime(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  for (;;) {
    const std::uint32_t cand = static_cast<std::uint32_t>((gen() % (1ull << 31)) + (1ull << 31)) | 1u;
    if (is_prime_u32(cand)) return cand;
  }
}

}  // namespace logarr
