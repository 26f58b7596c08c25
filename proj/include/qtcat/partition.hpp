#pragma once

#include "qtcat/laurent.hpp"

#include <compare>
#include <stdexcept>
#include <vector>

namespace qtcat {

/// Cell of a Young diagram: row h (= co-leg), column k (= co-arm), both
/// 0-based. The torus character of the cell is t^h q^k.
struct Cell {
    int h = 0;
    int k = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (of 0) is valid; it is the nu of the single nested pair at n = 1.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int n() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool contains(Cell c) const {
        return c.h >= 0 && c.k >= 0 && c.h < rows() && c.k < parts_[c.h];
    }

    Partition conjugate() const {
        if (parts_.empty()) return Partition{};
        std::vector<int> conj(parts_[0]);
        for (int k = 0; k < parts_[0]; ++k) {
            int count = 0;
            for (int p : parts_)
                if (p > k) ++count;
            conj[k] = count;
        }
        return Partition(std::move(conj));
    }

    /// Remove a corner cell; throws unless the cell is a removable corner.
    Partition remove_corner(Cell c) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline std::vector<Cell> cells(const Partition& mu) {
    std::vector<Cell> out;
    for (int h = 0; h < mu.rows(); ++h)
        for (int k = 0; k < mu.parts()[h]; ++k) out.push_back({h, k});
    return out;
}

struct ArmLeg {
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
};

/// Arm/leg/co-arm/co-leg of a cell: cells strictly right of / above / left
/// of / below it in the diagram.
inline ArmLeg armleg(const Partition& mu, Cell c) {
    if (!mu.contains(c)) throw std::invalid_argument("armleg: cell outside diagram");
    int col_height = 0;
    for (int p : mu.parts())
        if (p > c.k) ++col_height;
    return {mu.parts()[c.h] - 1 - c.k, col_height - 1 - c.h, c.k, c.h};
}

/// All partitions of n in reverse-lexicographic order, e.g.
/// 3 -> (3), (2,1), (1,1,1).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            acc.push_back(p);
            self(self, rem - p, p);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Removable corners: exactly the cells with arm 0 and leg 0, by row.
inline std::vector<Cell> corners(const Partition& mu) {
    std::vector<Cell> out;
    for (int h = 0; h < mu.rows(); ++h)
        if (h + 1 == mu.rows() || mu.parts()[h + 1] < mu.parts()[h])
            out.push_back({h, mu.parts()[h] - 1});
    return out;
}

inline Partition Partition::remove_corner(Cell c) const {
    ArmLeg al = armleg(*this, c);
    if (al.arm != 0 || al.leg != 0)
        throw std::invalid_argument("remove_corner: cell is not a corner");
    std::vector<int> p = parts_;
    if (--p[c.h] == 0) p.erase(p.begin() + c.h);
    return Partition(std::move(p));
}

/// A partition of n with a removable corner; nu = mu minus the corner.
struct NestedPair {
    Partition mu;
    Cell corner;
    Partition nu() const { return mu.remove_corner(corner); }
};

/// All (mu, zeta) with mu of size n and zeta a corner, in partition order
/// with corners by ascending row.
inline std::vector<NestedPair> nested_pairs(int n) {
    if (n < 1) throw std::invalid_argument("nested_pairs: n must be >= 1");
    std::vector<NestedPair> out;
    for (const Partition& mu : enumerate_partitions(n))
        for (Cell c : corners(mu)) out.push_back({mu, c});
    return out;
}

/// Cells of mu in the same row as zeta, excluding zeta itself.
inline std::vector<Cell> row_cells(const Partition& mu, Cell zeta) {
    std::vector<Cell> out;
    for (int k = 0; k < mu.parts()[zeta.h]; ++k)
        if (k != zeta.k) out.push_back({zeta.h, k});
    return out;
}

/// Cells of mu in the same column as zeta, excluding zeta itself.
inline std::vector<Cell> col_cells(const Partition& mu, Cell zeta) {
    std::vector<Cell> out;
    for (int h = 0; h < mu.rows(); ++h)
        if (h != zeta.h && mu.parts()[h] > zeta.k) out.push_back({h, zeta.k});
    return out;
}

/// Minimal monomial generators of the ideal I_mu, as exponent pairs (h,k) of
/// x^h y^k: the outer corner positions of the diagram. Count is the number of
/// distinct part values plus one.
inline std::vector<Cell> canonical_generators(const Partition& mu) {
    std::vector<Cell> out;
    const auto& p = mu.parts();
    for (int h = 0; h <= mu.rows(); ++h) {
        int k = h < mu.rows() ? p[h] : 0;
        bool outer = (h == 0) || (h == mu.rows()) || (p[h - 1] > p[h]);
        if (outer) out.push_back({h, k});
    }
    return out;
}

/// n(mu) = sum (i-1) mu_i = sum of co-legs over cells.
inline long long n_stat(const Partition& mu) {
    long long s = 0;
    for (int h = 0; h < mu.rows(); ++h) s += static_cast<long long>(h) * mu.parts()[h];
    return s;
}

/// Coefficients b[k][i] of v^i t^k, 1 <= k <= N, 0 <= i, in the truncated
/// expansion of  t/(1-tv) * prod_{k>=1} 1/(1-t^k v^{k-1}).  Every factor is
/// truncated at total t-degree N; only factors with k <= N contribute.
/// b[0] is kept empty so b[k] indexes by k directly.
inline std::vector<std::vector<Int>> cell_count_series(int N) {
    if (N < 1) throw std::invalid_argument("cell_count_series: N must be >= 1");
    // dense table s[tdeg][vdeg]
    std::vector<std::vector<Int>> s(N + 1, std::vector<Int>(N + 1, 0));
    for (int j = 0; 1 + j <= N; ++j) s[1 + j][j] = 1; // t/(1-tv)
    for (int k = 1; k <= N; ++k) {
        // multiply by 1/(1 - t^k v^{k-1}): cumulative sums along (k, k-1)
        for (int td = k; td <= N; ++td)
            for (int vd = k - 1; vd <= N; ++vd) s[td][vd] += s[td - k][vd - (k - 1)];
    }
    std::vector<std::vector<Int>> b(N + 1);
    for (int k = 1; k <= N; ++k) {
        int top = N;
        while (top >= 0 && s[k][top] == 0) --top;
        b[k].assign(s[k].begin(), s[k].begin() + top + 1);
    }
    return b;
}

} // namespace qtcat
