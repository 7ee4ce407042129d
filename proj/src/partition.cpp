#include <sydlab/partition.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sydlab {

bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1)
            return false;
        if (i > 0 && p[i] > p[i - 1])
            return false;
    }
    return true;
}

int size(const Partition& p)
{
    int s = 0;
    for (int x : p)
        s += x;
    return s;
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n)
{
    std::vector<Bipartition> out;
    for (int a = n; a >= 0; --a) {
        auto left = enumerate_partitions(a);
        auto right = enumerate_partitions(n - a);
        for (const auto& x : left)
            for (const auto& y : right)
                out.emplace_back(x, y);
    }
    return out;
}

Partition transpose(const Partition& p)
{
    Partition t;
    if (p.empty())
        return t;
    t.assign(p.front(), 0);
    for (int x : p)
        for (int j = 0; j < x; ++j)
            ++t[j];
    return t;
}

int distinct_sizes(const Partition& p)
{
    int k = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (i == 0 || p[i] != p[i - 1])
            ++k;
    return k;
}

std::vector<std::pair<int, int>> multiplicities(const Partition& p)
{
    std::vector<std::pair<int, int>> out;
    for (int x : p) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

Partition from_multiplicities(const std::vector<std::pair<int, int>>& mult)
{
    Partition p;
    for (auto [part, m] : mult)
        for (int i = 0; i < m; ++i)
            p.push_back(part);
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

namespace {

// p(n) by Euler's pentagonal recurrence; table grows on demand.
std::int64_t partition_count_impl(int n)
{
    static std::mutex mtx;
    static std::vector<std::int64_t> table{1};
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        std::int64_t v = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            int sign = (k % 2 == 1) ? 1 : -1;
            v += sign * table[m - g1];
            int g2 = k * (3 * k + 1) / 2;
            if (g2 <= m)
                v += sign * table[m - g2];
        }
        table.push_back(v);
    }
    return table[n];
}

} // namespace

std::int64_t partition_count(int n)
{
    if (n < 0)
        return 0;
    return partition_count_impl(n);
}

std::int64_t bipartition_count(int n)
{
    if (n < 0)
        return 0;
    std::int64_t total = 0;
    for (int a = 0; a <= n; ++a)
        total += partition_count(a) * partition_count(n - a);
    return total;
}

std::int64_t p_distinct_sizes(int l, int k)
{
    if (l < 0 || k < 0)
        return 0;
    // count[s][j]: partitions of s into parts <= current bound with j sizes.
    std::vector<std::vector<std::int64_t>> count(l + 1, std::vector<std::int64_t>(k + 1, 0));
    count[0][0] = 1;
    for (int part = 1; part <= l; ++part) {
        auto next = count;
        for (int s = 0; s <= l; ++s)
            for (int j = 0; j < k; ++j) {
                if (count[s][j] == 0)
                    continue;
                for (int mult = 1; s + mult * part <= l; ++mult)
                    next[s + mult * part][j + 1] += count[s][j];
            }
        count = std::move(next);
    }
    return count[l][k];
}

std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

} // namespace sydlab
