#pragma once

#include <cstdint>
#include <vector>

#include "logarr/core/rational.hpp"

namespace logarr {

/// Sparse row: strictly increasing column indices with nonzero values.
template <class E>
struct SparseRow {
  std::vector<int> idx;
  std::vector<E> val;

  bool empty() const { return idx.empty(); }
  std::size_t size() const { return idx.size(); }
  void push(int c, const E& v) {
    idx.push_back(c);
    val.push_back(v);
  }
  /// Position of column c, or -1.
  int find(int c) const;
};

using RatRow = SparseRow<Rat>;
using ModRow = SparseRow<std::uint32_t>;

struct RatField {
  using Elem = Rat;
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static Rat one() { return 1; }
  static Rat inv(const Rat& a) { return 1 / a; }
  static void mul_inplace(Rat& a, const Rat& f) { a *= f; }
  /// out = a - f * b
  static void submul(Rat& out, const Rat& a, const Rat& f, const Rat& b) {
    mpq_mul(out.get_mpq_t(), f.get_mpq_t(), b.get_mpq_t());
    mpq_sub(out.get_mpq_t(), a.get_mpq_t(), out.get_mpq_t());
  }
  /// out = -f * b
  static void negmul(Rat& out, const Rat& f, const Rat& b) {
    mpq_mul(out.get_mpq_t(), f.get_mpq_t(), b.get_mpq_t());
    mpq_neg(out.get_mpq_t(), out.get_mpq_t());
  }
};

/// Z/p for a prime p < 2^32.
struct ModField {
  using Elem = std::uint32_t;
  std::uint32_t p;

  explicit ModField(std::uint32_t prime) : p(prime) {}
  static bool is_zero(Elem a) { return a == 0; }
  static Elem one() { return 1; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p); }
  Elem inv(Elem a) const;
  void mul_inplace(Elem& a, Elem f) const { a = mul(a, f); }
  void submul(Elem& out, Elem a, Elem f, Elem b) const {
    const Elem fb = mul(f, b);
    out = a >= fb ? a - fb : a + (p - fb);
  }
  void negmul(Elem& out, Elem f, Elem b) const {
    const Elem fb = mul(f, b);
    out = fb == 0 ? 0 : p - fb;
  }
  /// Image of a rational; throws std::domain_error if p divides the denominator.
  Elem reduce(const Rat& q) const;
  Elem reduce(const BigInt& z) const;
};

enum class Exec { Serial, Parallel };

/// Reduced row echelon form: rows[k] has its leading 1 in column pivots[k], and
/// every pivot column is zero in all other rows.
template <class E>
struct Echelon {
  int cols = 0;
  std::vector<SparseRow<E>> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(pivots.size()); }
  int nullity() const { return cols - rank(); }
  std::vector<int> free_columns() const;
};

/// Sparse Gauss-Jordan elimination.  Column order fixes the result (the reduced
/// echelon form is unique); the row elimination inside every pivot step runs as an
/// OpenMP loop when exec is Parallel and is bitwise identical to the serial run.
template <class Field>
Echelon<typename Field::Elem> gauss_jordan(const Field& field, std::vector<SparseRow<typename Field::Elem>> rows,
                                           int ncols, Exec exec = Exec::Parallel);

/// Rank by forward elimination only; rows are bucketed by leading column.
template <class Field>
int echelon_rank(const Field& field, std::vector<SparseRow<typename Field::Elem>> rows, int ncols,
                 Exec exec = Exec::Parallel);

/// Right null space read off a reduced echelon form: one vector per free column f,
/// with entry 1 at f, 0 at the other free columns, ordered by f.
template <class Field>
std::vector<SparseRow<typename Field::Elem>> kernel_from_echelon(const Field& field,
                                                                const Echelon<typename Field::Elem>& ech);

/// Dense rational matrix.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
  const Rat& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
  }
  std::vector<RatRow> sparse_rows() const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

/// Textbook dense serial Gauss-Jordan; the reference the sparse kernel is tested against.
struct DenseRref {
  RatMatrix reduced;
  std::vector<int> pivots;
};
DenseRref rref_reference(RatMatrix m);

/// Basis of {v : M v = 0} in reduced form (see kernel_from_echelon), as dense vectors.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Word-sized primes in [2^31, 2^32) chosen deterministically from a seed.
std::uint32_t choose_prime(std::uint64_t seed);
bool is_prime_u32(std::uint32_t n);

}  // namespace logarr
