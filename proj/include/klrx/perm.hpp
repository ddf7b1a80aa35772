#ifndef KLRX_PERM_HPP
#define KLRX_PERM_HPP

#include <cstdint>
#include <vector>

#include "klrx/bigint.hpp"

namespace klrx {

// Permutations of [0, d) in one-line notation: p[i] = w(i). Generators
// s_r (0-based r) swap values r and r+1 on the left, positions r and
// r+1 on the right. Reduced words use 0-based generator indices.
using Perm = std::vector<int>;

Perm perm_id(int d);
Perm perm_s(int d, int r);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
Perm perm_inv(const Perm& w);
int perm_len(const Perm& w);
bool perm_is_id(const Perm& w);

// Left descent: len(s_r * w) < len(w).
bool left_descent(const Perm& w, int r);
// Lexicographically minimal reduced word; this is the fixed choice used
// for every psi_w in the project.
std::vector<int> min_word(const Perm& w);
Perm perm_from_word(int d, const std::vector<int>& word);

// w acting on a word by place permutation: out[w(i)] = in[i].
template <typename T>
std::vector<T> perm_act(const Perm& w, const std::vector<T>& in) {
    std::vector<T> out(in.size());
    for (size_t i = 0; i < in.size(); ++i) out[w[i]] = in[i];
    return out;
}

// Longest element of S_d, or of the parabolic S_mu block starting at
// `off` with size `m`, embedded into S_d.
Perm longest_elt(int d);
Perm longest_block(int d, int off, int m);

// Block swap permutation U_{r;i,j} (1-based r as in the conventions of
// thick calculus): maps [r+1, r+i] increasingly onto [r+1+j, r+i+j] and
// [r+i+1, r+i+j] increasingly onto [r+1, r+j].
Perm u_perm(int r, int i, int j, int d);

// Minimal coset representatives for S_d / S_mu: w increasing on each
// block of the composition mu.
bool is_shuffle(const Perm& w, const std::vector<int>& mu);
std::vector<Perm> shuffles(const std::vector<int>& mu);
// w = u * p with u in D^mu and p in S_mu, lengths additive.
void coset_decompose(const Perm& w, const std::vector<int>& mu, Perm& u, Perm& p);

std::vector<Perm> all_perms(int d);

uint64_t perm_code(const Perm& w);

}  // namespace klrx

#endif
