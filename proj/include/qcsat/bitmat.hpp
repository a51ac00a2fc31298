// Packed GF(2) bit vectors and the linear-algebra routines built on them:
// rank, row reduction, kernel bases, affine solves, and expressing a vector
// as an XOR combination of given rows. Everything here is dense over 64-bit
// words; problem sizes in this project stay in the low hundreds of bits.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace qcsat {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static BitVec unit(std::size_t nbits, std::size_t i) {
    BitVec v(nbits);
    v.set(i, true);
    return v;
  }

  std::size_t size() const { return nbits_; }
  std::size_t num_words() const { return words_.size(); }
  std::uint64_t word(std::size_t w) const { return words_[w]; }
  std::uint64_t& word(std::size_t w) { return words_[w]; }

  // Grow or shrink, preserving low bits and keeping tail bits clear.
  void resize(std::size_t nbits) {
    nbits_ = nbits;
    words_.resize((nbits + 63) / 64, 0);
    const std::size_t tail = nbits & 63;
    if (!words_.empty() && tail)
      words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  // Mixed widths are tolerated: bits past the shorter operand are zeros.
  BitVec& operator^=(const BitVec& o) {
    const std::size_t w0 = std::min(words_.size(), o.words_.size());
    for (std::size_t w = 0; w < w0; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  BitVec& operator&=(const BitVec& o) {
    const std::size_t w0 = std::min(words_.size(), o.words_.size());
    for (std::size_t w = 0; w < w0; ++w) words_[w] &= o.words_[w];
    for (std::size_t w = w0; w < words_.size(); ++w) words_[w] = 0;
    return *this;
  }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  bool any() const {
    for (const auto w : words_)
      if (w) return true;
    return false;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (const auto w : words_) c += std::popcount(w);
    return c;
  }

  // Index of the lowest set bit, or -1 when zero.
  int first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(64 * w + std::countr_zero(words_[w]));
    return -1;
  }

  // parity(popcount(a & b)) without materializing the AND.
  static bool and_parity(const BitVec& a, const BitVec& b) {
    std::uint64_t acc = 0;
    const std::size_t w0 = std::min(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < w0; ++w) acc ^= a.words_[w] & b.words_[w];
    return std::popcount(acc) & 1u;
  }

  // parity(popcount(a & b & {bits < limit})).
  static bool and_parity_below(const BitVec& a, const BitVec& b,
                               std::size_t limit) {
    std::uint64_t acc = 0;
    const std::size_t full = limit / 64;
    const std::size_t w0 =
        std::min({a.words_.size(), b.words_.size(), full + 1});
    for (std::size_t w = 0; w < w0; ++w) {
      std::uint64_t x = a.words_[w] & b.words_[w];
      if (w == full) x &= (std::uint64_t{1} << (limit & 63)) - 1;
      acc ^= x;
    }
    return std::popcount(acc) & 1u;
  }

  std::vector<std::size_t> set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        out.push_back(64 * w + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  // Copy of the bits at `indices` (in order) into a fresh vector.
  BitVec gather(const std::vector<std::size_t>& indices) const {
    BitVec out(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
      out.set(i, get(indices[i]));
    return out;
  }

  // Concatenation: this followed by `o`.
  BitVec concat(const BitVec& o) const {
    BitVec out(nbits_ + o.nbits_);
    for (std::size_t i = 0; i < nbits_; ++i) out.set(i, get(i));
    for (std::size_t i = 0; i < o.nbits_; ++i) out.set(nbits_ + i, o.get(i));
    return out;
  }

  bool operator==(const BitVec&) const = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Rank of the row span.
inline std::size_t gf2_rank(std::vector<BitVec> rows) {
  std::size_t rank = 0;
  for (std::size_t col_row = 0; col_row < rows.size(); ++col_row) {
    const int pivot = rows[col_row].first_set();
    if (pivot < 0) continue;
    ++rank;
    for (std::size_t r = col_row + 1; r < rows.size(); ++r)
      if (rows[r].get(static_cast<std::size_t>(pivot))) rows[r] ^= rows[col_row];
  }
  return rank;
}

// Row-reduce to a canonical independent spanning set (reduced echelon rows,
// ordered by pivot column). Zero rows are dropped.
inline std::vector<BitVec> gf2_row_reduce(std::vector<BitVec> rows) {
  std::vector<BitVec> basis;
  for (auto& row : rows) {
    for (const auto& b : basis) {
      const int p = b.first_set();
      if (row.get(static_cast<std::size_t>(p))) row ^= b;
    }
    if (!row.any()) continue;
    const int p = row.first_set();
    for (auto& b : basis)
      if (b.get(static_cast<std::size_t>(p))) b ^= row;
    basis.push_back(row);
  }
  std::sort(basis.begin(), basis.end(), [](const BitVec& a, const BitVec& b) {
    return a.first_set() < b.first_set();
  });
  return basis;
}

// Find a mask m (one bit per input row) with XOR_{i in m} rows[i] == target,
// or nullopt when target is outside the span.
inline std::optional<BitVec> gf2_solve_combination(
    const std::vector<BitVec>& rows, BitVec target) {
  struct Entry {
    BitVec row;
    BitVec mask;
  };
  std::vector<Entry> pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Entry e{rows[i], BitVec::unit(rows.size(), i)};
    for (const auto& p : pivots) {
      const int pc = p.row.first_set();
      if (e.row.get(static_cast<std::size_t>(pc))) {
        e.row ^= p.row;
        e.mask ^= p.mask;
      }
    }
    if (e.row.any()) pivots.push_back(std::move(e));
  }
  BitVec mask(rows.size());
  for (const auto& p : pivots) {
    const int pc = p.row.first_set();
    if (target.get(static_cast<std::size_t>(pc))) {
      target ^= p.row;
      mask ^= p.mask;
    }
  }
  if (target.any()) return std::nullopt;
  return mask;
}

struct GF2System {
  BitVec particular;           // one solution of A v = rhs
  std::vector<BitVec> kernel;  // basis of {v : A v = 0}
};

// Solve the linear system whose q-th equation is parity(lhs[q] & v) = rhs[q]
// over v in GF(2)^nvars. Returns nullopt when inconsistent.
inline std::optional<GF2System> gf2_solve_affine(std::vector<BitVec> lhs,
                                                 BitVec rhs,
                                                 std::size_t nvars) {
  // Forward elimination on the augmented system.
  std::vector<int> pivot_of_row;
  std::vector<std::size_t> used_rows;
  std::vector<bool> is_pivot_col(nvars, false);
  std::size_t next = 0;
  for (std::size_t col = 0; col < nvars && next < lhs.size(); ++col) {
    std::size_t r = next;
    while (r < lhs.size() && !lhs[r].get(col)) ++r;
    if (r == lhs.size()) continue;
    std::swap(lhs[r], lhs[next]);
    {
      const bool tmp = rhs.get(r);
      rhs.set(r, rhs.get(next));
      rhs.set(next, tmp);
    }
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      if (k != next && lhs[k].get(col)) {
        lhs[k] ^= lhs[next];
        if (rhs.get(next)) rhs.flip(k);
      }
    }
    pivot_of_row.push_back(static_cast<int>(col));
    used_rows.push_back(next);
    is_pivot_col[col] = true;
    ++next;
  }
  for (std::size_t r = next; r < lhs.size(); ++r)
    if (rhs.get(r)) return std::nullopt;  // 0 = 1

  GF2System sol;
  sol.particular = BitVec(nvars);
  for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
    sol.particular.set(static_cast<std::size_t>(pivot_of_row[i]),
                       rhs.get(used_rows[i]));
  for (std::size_t col = 0; col < nvars; ++col) {
    if (is_pivot_col[col]) continue;
    BitVec k(nvars);
    k.set(col, true);
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
      if (lhs[used_rows[i]].get(col))
        k.set(static_cast<std::size_t>(pivot_of_row[i]), true);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

// Basis of {v in GF(2)^nvars : parity(rows[q] & v) = 0 for all q}.
inline std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& rows,
                                      std::size_t nvars) {
  auto sys = gf2_solve_affine(rows, BitVec(rows.size()), nvars);
  return sys ? std::move(sys->kernel) : std::vector<BitVec>{};
}

}  // namespace qcsat
