#include "xbinom/exact_lattice.hpp"

#include "xbinom/errors.hpp"

#include <algorithm>
#include <string>

namespace xbinom {

BigInt factorial(std::int64_t n)
{
    if (n < 0) {
        throw DomainError("factorial of negative integer " + std::to_string(n));
    }
    BigInt r = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

BigInt binom_nonneg(LatticePoint p)
{
    if (p.n < 0) {
        throw DomainError("binom_nonneg requires n >= 0, got " + std::to_string(p.n));
    }
    if (p.k < 0 || p.k > p.n) {
        return 0;
    }
    const std::int64_t k = std::min(p.k, p.n - p.k);
    // Each partial product is C(n-k+i, i), so the division is exact.
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= p.n - k + i;
        r /= i;
    }
    return r;
}

BigInt binom_neg(LatticePoint p)
{
    if (p.n >= 0) {
        throw DomainError("binom_neg requires n < 0, got " + std::to_string(p.n));
    }
    if (p.k >= 0) {
        BigInt r = binom_nonneg({-p.n + p.k - 1, p.k});
        return is_odd(p.k) ? BigInt(-r) : r;
    }
    if (p.k <= p.n) {
        BigInt r = binom_nonneg({-p.k - 1, p.n - p.k});
        return is_odd(p.n - p.k) ? BigInt(-r) : r;
    }
    return 0;
}

BigInt binom_lattice(LatticePoint p)
{
    return p.n >= 0 ? binom_nonneg(p) : binom_neg(p);
}

bool in_zero_region(LatticePoint p)
{
    if (p.n >= 0) {
        return p.k < 0 || p.k > p.n;
    }
    return p.n < p.k && p.k < 0;
}

std::uint64_t LatticeWindow::cells() const
{
    if (empty()) {
        return 0;
    }
    return static_cast<std::uint64_t>(n_max - n_min + 1) * static_cast<std::uint64_t>(k_max - k_min + 1);
}

LatticeTable::LatticeTable(LatticeWindow window)
    : window_(window),
      width_(window.empty() ? 0 : static_cast<std::size_t>(window.k_max - window.k_min + 1)),
      cells_(window.cells())
{
}

std::size_t LatticeTable::index(LatticePoint p) const
{
    if (!window_.contains(p)) {
        throw DomainError("lattice point (" + std::to_string(p.n) + ", " + std::to_string(p.k) +
                          ") outside table window");
    }
    return static_cast<std::size_t>(p.n - window_.n_min) * width_ + static_cast<std::size_t>(p.k - window_.k_min);
}

const BigInt& LatticeTable::at(LatticePoint p) const { return cells_[index(p)]; }

BigInt& LatticeTable::mutable_at(LatticePoint p) { return cells_[index(p)]; }

LatticeTable make_lattice_table(LatticeWindow window)
{
    LatticeTable table(window);
    if (window.empty()) {
        return table;
    }
    for (std::int64_t n = window.n_min; n <= window.n_max; ++n) {
        for (std::int64_t k = window.k_min; k <= window.k_max; ++k) {
            table.mutable_at({n, k}) = binom_lattice({n, k});
        }
    }
    return table;
}

namespace {

// One row of the recurrence grid, addressable by signed column.
struct Row {
    std::int64_t k_lo;
    std::vector<BigInt> v;

    BigInt& operator[](std::int64_t k) { return v[static_cast<std::size_t>(k - k_lo)]; }
    const BigInt& operator[](std::int64_t k) const { return v[static_cast<std::size_t>(k - k_lo)]; }
};

}  // namespace

LatticeTable pascal_oracle(LatticeWindow window)
{
    LatticeTable table(window);
    if (window.empty()) {
        return table;
    }

    const std::int64_t row_lo = std::min<std::int64_t>(window.n_min, 0);
    const std::int64_t row_hi = std::max<std::int64_t>(window.n_max, 0);
    // Forward rows lose one valid column on the left per step.
    const std::int64_t k_lo = std::min(window.k_min, window.n_min) - row_hi - 1;
    const std::int64_t k_hi = std::max<std::int64_t>(window.k_max, 0) + 1;
    const auto width = static_cast<std::size_t>(k_hi - k_lo + 1);

    auto emit = [&](std::int64_t n, const Row& row) {
        if (n < window.n_min || n > window.n_max) {
            return;
        }
        for (std::int64_t k = window.k_min; k <= window.k_max; ++k) {
            table.mutable_at({n, k}) = row[k];
        }
    };

    Row row0{k_lo, std::vector<BigInt>(width)};
    row0[0] = 1;
    emit(0, row0);

    Row prev = row0;
    for (std::int64_t n = 1; n <= row_hi; ++n) {
        Row cur{k_lo, std::vector<BigInt>(width)};
        for (std::int64_t k = k_lo + 1; k <= k_hi; ++k) {
            cur[k] = prev[k] + prev[k - 1];
        }
        emit(n, cur);
        prev = std::move(cur);
    }

    prev = std::move(row0);
    for (std::int64_t n = 0; n > row_lo; --n) {
        const std::int64_t m = n - 1;
        Row cur{k_lo, std::vector<BigInt>(width)};
        // Anchor cells. Below row -1 they sit in the zero region m < k < 0
        // (already zero); row -1 has no zero cells and is anchored on the
        // lines y = 0 and y = x instead.
        if (m == -1) {
            cur[0] = 1;
            cur[-1] = 1;
        } else {
            cur[0] = prev[0] - cur[-1];
        }
        for (std::int64_t k = 1; k <= k_hi; ++k) {
            cur[k] = prev[k] - cur[k - 1];
        }
        // Right-to-left over k <= m: C(m, k-1) = C(n, k) - C(m, k).
        for (std::int64_t k = (m == -1 ? -1 : n); k > k_lo; --k) {
            cur[k - 1] = prev[k] - cur[k];
        }
        emit(m, cur);
        prev = std::move(cur);
    }
    return table;
}

}  // namespace xbinom
