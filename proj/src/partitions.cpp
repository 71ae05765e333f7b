#include "hermite/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace hermite {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw OutOfRangeError("negative part in partition");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw OutOfRangeError("parts not weakly decreasing at slot " + std::to_string(i));
    }
}

Partition Partition::padded(const Partition& p, int slots) {
    if (p.slots() > slots) throw BoxViolationError("partition has more than " + std::to_string(slots) + " slots");
    std::vector<int> v = p.parts_;
    v.resize(static_cast<std::size_t>(slots), 0);
    return Partition(std::move(v));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::trimmed() const {
    std::vector<int> v = parts_;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Partition(std::move(v));
}

Partition Partition::transposed() const {
    std::vector<int> v;
    if (!parts_.empty() && parts_[0] > 0) {
        v.resize(static_cast<std::size_t>(parts_[0]), 0);
        for (int col = 1; col <= parts_[0]; ++col)
            for (int p : parts_)
                if (p >= col) ++v[static_cast<std::size_t>(col - 1)];
    }
    return Partition(std::move(v));
}

bool Partition::fits_box(int rows, int cols) const {
    if (part(0) > cols) return false;
    for (int i = rows; i < slots(); ++i)
        if (part(i) > 0) return false;
    return true;
}

bool Partition::is_regular() const {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] == parts_[i + 1]) return false;
    return true;
}

bool Partition::operator<(const Partition& o) const {
    if (parts_.size() != o.parts_.size()) return parts_.size() < o.parts_.size();
    return parts_ < o.parts_;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Dominance dominance(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw WeightMismatchError("dominance needs equal weights: " + a.to_string() + " vs " + b.to_string());
    int n = std::max(a.slots(), b.slots());
    bool a_ge = true, b_ge = true;
    int sa = 0, sb = 0;
    for (int i = 0; i < n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) a_ge = false;
        if (sb < sa) b_ge = false;
    }
    if (a_ge && b_ge) return Dominance::Equal;
    if (a_ge) return Dominance::Dominates;
    if (b_ge) return Dominance::DominatedBy;
    return Dominance::Incomparable;
}

namespace {

// Tie-break for the canonical order: at the last slot where the tuples
// differ, the larger entry goes first.
bool revlex_before(const Partition& a, const Partition& b) {
    int n = std::max(a.slots(), b.slots());
    for (int i = n - 1; i >= 0; --i) {
        if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
    }
    return false;
}

std::vector<Partition> order_within_weight(std::vector<Partition> v) {
    const std::size_t n = v.size();
    if (n <= 1) return v;
    // prereq[i] counts elements strictly dominated by v[i] not yet placed.
    std::vector<std::vector<std::size_t>> above(n); // j in above[i]: v[j] strictly dominates v[i]
    std::vector<std::size_t> prereq(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            switch (dominance(v[i], v[j])) {
                case Dominance::Dominates: ++prereq[i]; above[j].push_back(i); break;
                case Dominance::DominatedBy: ++prereq[j]; above[i].push_back(j); break;
                default: break;
            }
        }
    }
    std::vector<Partition> out;
    out.reserve(n);
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i] || prereq[i] != 0) continue;
            if (pick == n || revlex_before(v[i], v[pick])) pick = i;
        }
        placed[pick] = true;
        for (std::size_t j : above[pick]) --prereq[j];
        out.push_back(v[pick]);
    }
    return out;
}

} // namespace

std::vector<Partition> canonical_order(std::vector<Partition> items) {
    std::stable_sort(items.begin(), items.end(), [](const Partition& a, const Partition& b) {
        return a.weight() < b.weight();
    });
    std::vector<Partition> out;
    out.reserve(items.size());
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        while (j < items.size() && items[j].weight() == items[i].weight()) ++j;
        auto block = order_within_weight({items.begin() + static_cast<std::ptrdiff_t>(i),
                                          items.begin() + static_cast<std::ptrdiff_t>(j)});
        out.insert(out.end(), block.begin(), block.end());
        i = j;
    }
    return out;
}

namespace {

void enumerate_rec(int remaining, int slot, int maxval, int m, std::vector<int>& cur,
                   const std::function<void(const Partition&)>& fn) {
    if (slot == m) {
        if (remaining == 0) fn(Partition(cur));
        return;
    }
    int slots_left = m - slot;
    for (int v = std::min(maxval, remaining); v >= 0; --v) {
        // weakly decreasing and still able to reach the weight
        if (static_cast<long long>(v) * slots_left < remaining) break;
        cur.push_back(v);
        enumerate_rec(remaining - v, slot + 1, v, m, cur, fn);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_box(int k, int m, int ell, bool regular) {
    if (k < 0) throw OutOfRangeError("negative weight");
    std::vector<Partition> out;
    if (m < 0 || ell < 0) return out;
    std::vector<int> cur;
    enumerate_rec(k, 0, ell, m, cur, [&](const Partition& p) {
        if (!regular || p.is_regular()) out.push_back(p);
    });
    return out;
}

void for_each_in_box(int m, int ell, const std::function<void(const Partition&)>& fn) {
    for (int k = 0; k <= m * ell; ++k) {
        std::vector<int> cur;
        enumerate_rec(k, 0, ell, m, cur, fn);
    }
}

BoxedPartitionSet boxed_partitions(int k, int m, int ell, bool regular) {
    BoxedPartitionSet set;
    set.k = k;
    set.m = m;
    set.ell = ell;
    set.regular = regular;
    set.members = canonical_order(enumerate_box(k, m, ell, regular));
    return set;
}

std::vector<std::int64_t> gaussian_binomial(int ell, int m) {
    if (ell < 0 || m < 0) throw OutOfRangeError("negative box side");
    // Pascal recurrence [n choose k]_q = [n-1 choose k-1]_q + q^k [n-1 choose k]_q,
    // carried as coefficient vectors; values stay far below 2^63 for sides <= 30.
    std::vector<std::vector<std::int64_t>> row(static_cast<std::size_t>(m) + 1);
    row[0] = {1};
    for (int n = 1; n <= ell + m; ++n) {
        for (int k = std::min(n, m); k >= 1; --k) {
            const auto& left = row[static_cast<std::size_t>(k - 1)];
            std::vector<std::int64_t> next = left;
            if (k <= n - 1 && !row[static_cast<std::size_t>(k)].empty()) {
                const auto& up = row[static_cast<std::size_t>(k)];
                if (next.size() < up.size() + static_cast<std::size_t>(k))
                    next.resize(up.size() + static_cast<std::size_t>(k), 0);
                for (std::size_t i = 0; i < up.size(); ++i)
                    next[i + static_cast<std::size_t>(k)] += up[i];
            }
            row[static_cast<std::size_t>(k)] = std::move(next);
        }
    }
    auto coeffs = row[static_cast<std::size_t>(m)];
    coeffs.resize(static_cast<std::size_t>(ell) * static_cast<std::size_t>(m) + 1, 0);
    return coeffs;
}

std::int64_t b_coefficient(int k, int ell, int m) {
    if (k < 0 || k > ell * m)
        throw OutOfRangeError("b_k out of range: k=" + std::to_string(k));
    auto p = gaussian_binomial(ell, m);
    std::int64_t prev = k == 0 ? 0 : p[static_cast<std::size_t>(k - 1)];
    return p[static_cast<std::size_t>(k)] - prev;
}

Partition staircase(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = m - 1 - i;
    return Partition(std::move(v));
}

Partition tilde_w(const Partition& lambda, int m, int ell) {
    if (!lambda.fits_box(m, ell))
        throw BoxViolationError(lambda.to_string() + " does not fit in " + std::to_string(m) + "x" + std::to_string(ell));
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = lambda.part(i) + (m - 1 - i);
    return Partition(std::move(v));
}

Partition tilde_d(const Partition& lambda, int m, int ell) {
    const int n = ell + m - 1;
    if (lambda.slots() != m || lambda.part(0) > n)
        throw BoxViolationError(lambda.to_string() + " is not an m-slot partition bounded by " + std::to_string(n));
    if (!lambda.is_regular())
        throw NotRegularError(lambda.to_string() + " has colliding slot values");
    std::vector<bool> in_s(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i < m; ++i) in_s[static_cast<std::size_t>(lambda.part(i))] = true;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(ell));
    for (int s = 0; s <= n; ++s)
        if (!in_s[static_cast<std::size_t>(s)]) out.push_back(n - s);
    std::sort(out.begin(), out.end(), std::greater<int>());
    return Partition(std::move(out));
}

Partition tilde_w_star(const Partition& lambda, int ell, int m) {
    if (lambda.slots() != ell)
        throw RangeViolationError(lambda.to_string() + " does not have " + std::to_string(ell) + " slots");
    if (!lambda.is_regular())
        throw NotRegularError(lambda.to_string() + " has colliding slot values");
    std::vector<int> v(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) {
        int x = lambda.part(i) - (ell - 1 - i);
        if (x < 0 || x > m)
            throw RangeViolationError("entry " + std::to_string(x) + " outside [0," + std::to_string(m) + "]");
        v[static_cast<std::size_t>(i)] = x;
    }
    return Partition(std::move(v));
}

} // namespace hermite
