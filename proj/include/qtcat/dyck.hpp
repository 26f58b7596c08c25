#pragma once

#include "qtcat/laurent.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtcat {

/// Dyck path of size n as a binary sequence of length 2n: 0 is an up step,
/// 1 is a right step; every prefix has at least as many 0's as 1's.
class DyckPath {
public:
    explicit DyckPath(std::vector<std::uint8_t> seq) : seq_(std::move(seq)) {
        int ups = 0, rights = 0;
        for (auto s : seq_) {
            if (s > 1) throw std::invalid_argument("DyckPath: entries must be 0 or 1");
            s == 0 ? ++ups : ++rights;
            if (rights > ups) throw std::invalid_argument("DyckPath: path dips below diagonal");
        }
        if (ups != rights) throw std::invalid_argument("DyckPath: unbalanced sequence");
    }

    static DyckPath from_string(const std::string& s) {
        std::vector<std::uint8_t> seq;
        seq.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("DyckPath: bad character");
            seq.push_back(c == '1');
        }
        return DyckPath(std::move(seq));
    }

    const std::vector<std::uint8_t>& seq() const { return seq_; }
    int size() const { return static_cast<int>(seq_.size() / 2); }

    std::string to_string() const {
        std::string s;
        for (auto v : seq_) s += char('0' + v);
        return s;
    }

    bool operator==(const DyckPath&) const = default;

    /// Column of the up step reaching height y (1-based y): the number of
    /// right steps preceding it. Each height is reached by exactly one up step.
    std::vector<int> up_columns() const {
        std::vector<int> cols;
        cols.reserve(seq_.size() / 2);
        int rights = 0;
        for (auto s : seq_) {
            if (s) ++rights;
            else cols.push_back(rights);
        }
        return cols;
    }

private:
    std::vector<std::uint8_t> seq_;
};

/// The path with all up steps first: the unique path with bounce 0.
inline DyckPath staircase_free_path(int n) {
    std::vector<std::uint8_t> s(2 * n, 0);
    for (int i = n; i < 2 * n; ++i) s[i] = 1;
    return DyckPath(std::move(s));
}

inline bool is_p0(const DyckPath& p) {
    const auto& s = p.seq();
    for (int i = 0; i < p.size(); ++i)
        if (s[i] != 0) return false;
    return true;
}

/// All Dyck paths of size n, lexicographic on seq.
inline std::vector<DyckPath> enumerate_dyck(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_dyck: n must be >= 1");
    std::vector<DyckPath> out;
    std::vector<std::uint8_t> seq;
    auto rec = [&](auto&& self, int ups, int rights) -> void {
        if (static_cast<int>(seq.size()) == 2 * n) {
            out.emplace_back(DyckPath(seq));
            return;
        }
        if (ups < n) {
            seq.push_back(0);
            self(self, ups + 1, rights);
            seq.pop_back();
        }
        if (rights < ups) {
            seq.push_back(1);
            self(self, ups, rights + 1);
            seq.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Number of full cells below the path and above the main diagonal. Equals
/// coinv(seq) - C(n+1,2).
inline long long area(const DyckPath& p) {
    long long a = 0, row = 0;
    const auto cols = p.up_columns();
    for (int c : cols) {
        a += row - c;
        ++row;
    }
    return a;
}

/// Result of the bounce scan. contacts holds j_1 > j_2 > ... > j_{b-1} > 0,
/// the diagonal contact x-coordinates excluding the terminal 0. arrivals[i]
/// is the 0-based seq index of the up step where scan stage i+1 stopped
/// (one entry per stage, including the final stage that reaches 0, so
/// arrivals.size() == contacts.size() + 1 for any path except P0).
/// sections[i] is the 0-based half-open seq range of bounce section B_{i+1};
/// the sections partition the contiguous range (arrivals.back(), arrivals[0]].
struct BounceData {
    std::vector<int> contacts;
    std::vector<int> arrivals;
    std::vector<std::pair<int, int>> sections;
};

/// Standard bounce scan: from (n,n) move west along the top until blocked by
/// an up step of p, drop to the diagonal, repeat; record each diagonal
/// contact until reaching 0. Stage i stops at the unique up step reaching
/// height j_{i-1} (with j_0 = n), which sits at seq position j_{i-1} + j_i
/// (1-based).
inline BounceData bounce_contacts(const DyckPath& p) {
    const auto cols = p.up_columns();
    BounceData bd;
    int j = p.size();
    while (j > 0) {
        int nj = cols[j - 1];
        bd.arrivals.push_back(j + nj - 1); // 0-based index of that up step
        if (nj > 0) bd.contacts.push_back(nj);
        j = nj;
    }
    for (std::size_t i = 0; i + 1 < bd.arrivals.size(); ++i)
        bd.sections.push_back({bd.arrivals[i + 1] + 1, bd.arrivals[i] + 1});
    return bd;
}

/// bounce = sum of the diagonal contact x-coordinates.
inline long long bounce(const DyckPath& p) {
    long long s = 0;
    for (int j : bounce_contacts(p).contacts) s += j;
    return s;
}

/// s3 = sum (j_i - 1) over contacts = bounce - (b-1). Undefined on P0.
inline long long s3(const DyckPath& p) {
    BounceData bd = bounce_contacts(p);
    if (bd.contacts.empty()) throw std::domain_error("s3: undefined on the bounce-free path P0");
    long long s = 0;
    for (int j : bd.contacts) s += j - 1;
    return s;
}

/// Per-section counts v_0, v_1, ... of 01's (an up step immediately followed
/// by a right step), assembled so the path contributes
/// q^area t^s3 (v_0 + v_1 t + ...) to the nested series. Calibrated rule,
/// frozen against the localization side: a 01 pair belongs to the section
/// containing its RIGHT step, and v_0 is the section nearest the origin
/// (reversed section order). Undefined on P0.
inline std::vector<long long> v_poly(const DyckPath& p) {
    BounceData bd = bounce_contacts(p);
    if (bd.contacts.empty())
        throw std::domain_error("v_poly: undefined on the bounce-free path P0");
    const auto& s = p.seq();
    std::vector<long long> v;
    v.reserve(bd.sections.size());
    for (auto it = bd.sections.rbegin(); it != bd.sections.rend(); ++it) {
        long long c = 0;
        for (int r = it->first; r < it->second; ++r)
            if (r >= 1 && s[r - 1] == 0 && s[r] == 1) ++c;
        v.push_back(c);
    }
    return v;
}

/// C_n(q,t) = sum over Dyck paths of q^area t^bounce.
inline LaurentPoly comb_catalan(int n) {
    LaurentPoly out;
    for (const DyckPath& p : enumerate_dyck(n))
        out.add_term(Exp2{bounce(p), area(p)}, 1);
    return out;
}

/// N_n(q,t) = sum over Dyck paths of size n+1 except P0 of
/// q^area t^s3 (v_0 + v_1 t + ...).
inline LaurentPoly comb_nested(int n) {
    LaurentPoly out;
    for (const DyckPath& p : enumerate_dyck(n + 1)) {
        if (is_p0(p)) continue;
        const long long a = area(p), s = s3(p);
        const auto v = v_poly(p);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) out.add_term(Exp2{s + static_cast<long long>(i), a}, v[i]);
    }
    return out;
}

} // namespace qtcat
