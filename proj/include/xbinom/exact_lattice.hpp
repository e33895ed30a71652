#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace xbinom {

using BigInt = boost::multiprecision::cpp_int;

// A cell (n, k) of the Pascal plane extended to negative rows and columns.
struct LatticePoint {
    std::int64_t n = 0;
    std::int64_t k = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline bool is_odd(std::int64_t v) { return (v & 1) != 0; }

// n! for n >= 0. Throws DomainError for negative n.
BigInt factorial(std::int64_t n);

// Binomial coefficient for a nonnegative row: n!/(k!(n-k)!) inside
// 0 <= k <= n, zero elsewhere. Throws DomainError for n < 0.
BigInt binom_nonneg(LatticePoint p);

// Binomial coefficient for a negative row n < 0:
//   k >= 0      : (-1)^k     C(-n+k-1, k)
//   k <= n      : (-1)^(n-k) C(-k-1, n-k)
//   n < k < 0   : 0
// Throws DomainError for n >= 0.
BigInt binom_neg(LatticePoint p);

// Total over all integer pairs; dispatches on the sign of n.
BigInt binom_lattice(LatticePoint p);

inline BigInt binom_lattice(std::int64_t n, std::int64_t k) { return binom_lattice({n, k}); }

// True exactly on the cells where the extended coefficient vanishes.
bool in_zero_region(LatticePoint p);

// Closed rectangle n_min..n_max x k_min..k_max.
struct LatticeWindow {
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::int64_t k_min = 0;
    std::int64_t k_max = 0;

    bool empty() const { return n_min > n_max || k_min > k_max; }
    std::uint64_t cells() const;
    bool contains(LatticePoint p) const {
        return p.n >= n_min && p.n <= n_max && p.k >= k_min && p.k <= k_max;
    }

    static LatticeWindow square(std::int64_t lo, std::int64_t hi) { return {lo, hi, lo, hi}; }

    friend bool operator==(const LatticeWindow&, const LatticeWindow&) = default;
};

// Dense row-major (n then k) table of exact values over a window.
class LatticeTable {
public:
    LatticeTable() = default;
    explicit LatticeTable(LatticeWindow window);

    const LatticeWindow& window() const { return window_; }
    std::size_t width() const { return width_; }

    const BigInt& at(LatticePoint p) const;
    const BigInt& at(std::int64_t n, std::int64_t k) const { return at({n, k}); }
    BigInt& mutable_at(LatticePoint p);

    friend bool operator==(const LatticeTable&, const LatticeTable&) = default;

private:
    std::size_t index(LatticePoint p) const;

    LatticeWindow window_{};
    std::size_t width_ = 0;
    std::vector<BigInt> cells_;
};

// Evaluates binom_lattice over every cell of the window.
LatticeTable make_lattice_table(LatticeWindow window);

// Independent reference: builds the window from the addition recurrence
// alone, seeded by row 0 (1 at k = 0, else 0). Rows n > 0 run the recurrence
// forward. Rows n < 0 run it backward, left-to-right for k >= 0 and
// right-to-left for k <= n, anchored by the zero cells n < k < 0. The
// recurrence does not hold at (0,0), so row -1 takes its two anchor cells
// from the lines y = 0 and y = x, where the coefficient is identically 1.
LatticeTable pascal_oracle(LatticeWindow window);

}  // namespace xbinom
