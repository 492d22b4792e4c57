// Exact arithmetic in GF(p^a) through log/antilog tables, specialized to
// square-order fields GF(t^2) with the conjugation x -> x^t and norm
// x -> x^(t+1) maps used by Hermitian geometry.
//
// Elements are integer codes in [0, q): the base-p digits of a code are the
// coefficients of the polynomial representative, lowest degree first. Codes
// give a total order on elements; 0 and 1 encode the field's zero and one.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermicode {

class Field {
public:
    // Builds GF(p^a). The modulus is the lexicographically smallest monic
    // irreducible of degree a over F_p (coefficients compared low-degree
    // first), so every derived table is reproducible bit for bit.
    Field(int p, int a);

    int p() const noexcept { return p_; }
    int a() const noexcept { return a_; }
    int q() const noexcept { return q_; }

    // Square root of q; defined only when the extension degree is even.
    bool has_conjugation() const noexcept { return t_ != 0; }
    int t() const;

    // Monic modulus, a+1 coefficients over F_p, lowest degree first.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    // Smallest element code generating the multiplicative group.
    int generator() const noexcept { return generator_; }

    // Checked operations. Element arguments must be codes in [0, q).
    int add(int x, int y) const { return addu(check(x), check(y)); }
    int sub(int x, int y) const { return subu(check(x), check(y)); }
    int neg(int x) const { return negu(check(x)); }
    int mul(int x, int y) const { return mulu(check(x), check(y)); }
    int inv(int x) const;
    int pow(int x, long long e) const;
    int conjugate(int x) const;
    int norm(int x) const;

    // True when x lies in the subfield of order t (fixed by conjugation).
    bool in_subfield_t(int x) const;

    // Unchecked fast paths for enumeration loops.
    int addu(int x, int y) const noexcept {
        return p_ == 2 ? (x ^ y) : add_tab_[static_cast<size_t>(x) * q_ + y];
    }
    int subu(int x, int y) const noexcept { return addu(x, negu(y)); }
    int negu(int x) const noexcept { return p_ == 2 ? x : neg_tab_[x]; }
    int mulu(int x, int y) const noexcept {
        return (x && y) ? exp_[log_[x] + log_[y]] : 0;
    }
    int invu(int x) const noexcept { return exp_[q_ - 1 - log_[x]]; }
    int conjugateu(int x) const noexcept { return conj_tab_[x]; }
    int normu(int x) const noexcept { return norm_tab_[x]; }

    const int* log_table() const noexcept { return log_.data(); }
    const int* exp_table() const noexcept { return exp_.data(); }
    const int* add_table() const noexcept { return add_tab_.empty() ? nullptr : add_tab_.data(); }

private:
    int check(int x) const {
        if (x < 0 || x >= q_)
            throw std::out_of_range("element code " + std::to_string(x) +
                                    " outside GF(" + std::to_string(q_) + ")");
        return x;
    }
    int require_t() const;

    // Polynomial helpers over F_p, coefficients low-degree first.
    std::vector<int> poly_mul_mod(const std::vector<int>& u, const std::vector<int>& v) const;
    static std::vector<int> code_to_poly(int code, int p, int a);
    static int poly_to_code(const std::vector<int>& c, int p);

    int p_ = 0;
    int a_ = 0;
    int q_ = 0;
    int t_ = 0;
    int generator_ = 0;
    std::vector<int> modulus_;
    std::vector<int> log_;       // log_[x] for x in [1, q); log_[0] = -1
    std::vector<int> exp_;       // exp_[i] = g^i for i in [0, 2(q-1)); no mod needed in mulu
    std::vector<int> add_tab_;   // q*q table, empty when p == 2
    std::vector<int> neg_tab_;   // empty when p == 2
    std::vector<int> conj_tab_;  // x^t, empty when t undefined
    std::vector<int> norm_tab_;  // x^(t+1), empty when t undefined
};

}  // namespace hermicode
