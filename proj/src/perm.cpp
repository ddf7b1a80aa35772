#include "klrx/perm.hpp"

#include <algorithm>
#include <numeric>

namespace klrx {

Perm perm_id(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_s(int d, int r) {
    Perm p = perm_id(d);
    std::swap(p[r], p[r + 1]);
    return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm p(b.size());
    for (size_t i = 0; i < b.size(); ++i) p[i] = a[b[i]];
    return p;
}

Perm perm_inv(const Perm& w) {
    Perm p(w.size());
    for (size_t i = 0; i < w.size(); ++i) p[w[i]] = static_cast<int>(i);
    return p;
}

int perm_len(const Perm& w) {
    int n = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++n;
    return n;
}

bool perm_is_id(const Perm& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != static_cast<int>(i)) return false;
    return true;
}

bool left_descent(const Perm& w, int r) {
    // value r+1 occurs before value r
    int pr = -1, pr1 = -1;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == r) pr = static_cast<int>(i);
        if (w[i] == r + 1) pr1 = static_cast<int>(i);
    }
    return pr1 < pr;
}

std::vector<int> min_word(const Perm& w_in) {
    Perm w = w_in;
    std::vector<int> word;
    const int d = static_cast<int>(w.size());
    for (;;) {
        int t = -1;
        for (int r = 0; r + 1 < d; ++r)
            if (left_descent(w, r)) {
                t = r;
                break;
            }
        if (t < 0) break;
        word.push_back(t);
        w = perm_mul(perm_s(d, t), w);
    }
    return word;
}

Perm perm_from_word(int d, const std::vector<int>& word) {
    Perm w = perm_id(d);
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = perm_mul(perm_s(d, *it), w);
    return w;
}

Perm longest_elt(int d) {
    Perm p(d);
    for (int i = 0; i < d; ++i) p[i] = d - 1 - i;
    return p;
}

Perm longest_block(int d, int off, int m) {
    Perm p = perm_id(d);
    for (int i = 0; i < m; ++i) p[off + i] = off + m - 1 - i;
    return p;
}

Perm u_perm(int r, int i, int j, int d) {
    if (r < 0 || i < 0 || j < 0 || r + i + j > d) throw Error("u_perm: blocks out of range");
    Perm p = perm_id(d);
    for (int t = 1; t <= i; ++t) p[r + t - 1] = r + t + j - 1;
    for (int t = 1; t <= j; ++t) p[r + i + t - 1] = r + t - 1;
    return p;
}

bool is_shuffle(const Perm& w, const std::vector<int>& mu) {
    int off = 0;
    for (int m : mu) {
        for (int i = 0; i + 1 < m; ++i)
            if (w[off + i] > w[off + i + 1]) return false;
        off += m;
    }
    return true;
}

namespace {
void shuffles_rec(const std::vector<int>& mu, size_t bi, std::vector<int>& avail, Perm& cur,
                  std::vector<Perm>& out) {
    if (bi == mu.size()) {
        out.push_back(cur);
        return;
    }
    int m = mu[bi];
    // choose m values from avail (increasing) for this block
    int n = static_cast<int>(avail.size());
    std::vector<int> idx(m);
    std::function<void(int, int)> choose = [&](int start, int k) {
        if (k == m) {
            std::vector<int> rest;
            size_t pos = cur.size();
            for (int t = 0; t < m; ++t) cur.push_back(avail[idx[t]]);
            for (int t = 0; t < n; ++t)
                if (std::find(idx.begin(), idx.end(), t) == idx.end()) rest.push_back(avail[t]);
            std::vector<int> saved = avail;
            avail = rest;
            shuffles_rec(mu, bi + 1, avail, cur, out);
            avail = saved;
            cur.resize(pos);
            return;
        }
        for (int t = start; t <= n - (m - k); ++t) {
            idx[k] = t;
            choose(t + 1, k + 1);
        }
    };
    if (m == 0) {
        shuffles_rec(mu, bi + 1, avail, cur, out);
        return;
    }
    choose(0, 0);
}
}  // namespace

std::vector<Perm> shuffles(const std::vector<int>& mu) {
    int d = 0;
    for (int m : mu) d += m;
    std::vector<int> avail(d);
    std::iota(avail.begin(), avail.end(), 0);
    Perm cur;
    std::vector<Perm> out;
    shuffles_rec(mu, 0, avail, cur, out);
    return out;
}

void coset_decompose(const Perm& w, const std::vector<int>& mu, Perm& u, Perm& p) {
    const int d = static_cast<int>(w.size());
    u = w;
    p = perm_id(d);
    int off = 0;
    for (int m : mu) {
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return w[off + a] < w[off + b]; });
        for (int i = 0; i < m; ++i) {
            u[off + i] = w[off + order[i]];
            p[off + order[i]] = off + i;
        }
        off += m;
    }
    // w = u * p
}

std::vector<Perm> all_perms(int d) {
    Perm p = perm_id(d);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

uint64_t perm_code(const Perm& w) {
    uint64_t c = 0;
    for (int v : w) c = c * 16 + static_cast<uint64_t>(v + 1);
    return c;
}

}  // namespace klrx
