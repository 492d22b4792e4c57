#include "hermicode/gf.hpp"

#include <algorithm>

namespace hermicode {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Remainder of u by the monic divisor v, both low-degree first.
std::vector<int> poly_mod(std::vector<int> u, const std::vector<int>& v, int p) {
    const int dv = static_cast<int>(v.size()) - 1;
    while (static_cast<int>(u.size()) > dv) {
        const int du = static_cast<int>(u.size()) - 1;
        const int lead = u.back();
        if (lead != 0) {
            for (int i = 0; i <= dv; ++i) {
                int& c = u[du - dv + i];
                c = (c - lead * v[i]) % p;
                if (c < 0) c += p;
            }
        }
        u.pop_back();
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    return u;
}

bool divides(const std::vector<int>& v, const std::vector<int>& u, int p) {
    return poly_mod(u, v, p).empty();
}

// Trial division against every lower-degree monic polynomial.
bool is_irreducible(const std::vector<int>& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d < deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> g(d + 1, 0);
            long long rest = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<int> factor_distinct_primes(int n) {
    std::vector<int> out;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

constexpr int kMaxOrder = 1 << 16;

}  // namespace

std::vector<int> Field::code_to_poly(int code, int p, int a) {
    std::vector<int> c(a, 0);
    for (int i = 0; i < a; ++i) {
        c[i] = code % p;
        code /= p;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

int Field::poly_to_code(const std::vector<int>& c, int p) {
    int code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
    return code;
}

std::vector<int> Field::poly_mul_mod(const std::vector<int>& u, const std::vector<int>& v) const {
    if (u.empty() || v.empty()) return {};
    std::vector<int> w(u.size() + v.size() - 1, 0);
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            w[i + j] = static_cast<int>((w[i + j] + static_cast<long long>(u[i]) * v[j]) % p_);
    return poly_mod(std::move(w), modulus_, p_);
}

Field::Field(int p, int a) : p_(p), a_(a) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (a < 1) throw std::invalid_argument("extension degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < a; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds supported limit");
    }
    q_ = static_cast<int>(q);
    if (a % 2 == 0) {
        t_ = 1;
        for (int i = 0; i < a / 2; ++i) t_ *= p;
    }

    // Lexicographically smallest monic irreducible of degree a, scanning
    // coefficient tuples (c_0, ..., c_{a-1}) in increasing lex order.
    {
        long long count = 1;
        for (int i = 0; i < a; ++i) count *= p;
        bool found = false;
        for (long long idx = 0; idx < count && !found; ++idx) {
            std::vector<int> f(a + 1, 0);
            long long rest = idx;
            for (int i = a - 1; i >= 0; --i) {
                f[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            f[a] = 1;
            if (is_irreducible(f, p)) {
                modulus_ = std::move(f);
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible modulus found");  // cannot happen
    }

    if (p_ != 2) {
        neg_tab_.resize(q_);
        add_tab_.resize(static_cast<size_t>(q_) * q_);
        for (int x = 0; x < q_; ++x) {
            auto cx = code_to_poly(x, p_, a_);
            cx.resize(a_, 0);
            std::vector<int> nx(a_);
            for (int i = 0; i < a_; ++i) nx[i] = (p_ - cx[i]) % p_;
            neg_tab_[x] = poly_to_code(nx, p_);
            for (int y = 0; y < q_; ++y) {
                auto cy = code_to_poly(y, p_, a_);
                cy.resize(a_, 0);
                std::vector<int> s(a_);
                for (int i = 0; i < a_; ++i) s[i] = (cx[i] + cy[i]) % p_;
                add_tab_[static_cast<size_t>(x) * q_ + y] = poly_to_code(s, p_);
            }
        }
    }

    // Smallest primitive element, tested against the prime factors of q-1.
    const auto factors = factor_distinct_primes(q_ - 1);
    auto pow_raw = [&](int base, int e) {
        std::vector<int> acc{1};
        std::vector<int> b = code_to_poly(base, p_, a_);
        while (e > 0) {
            if (e & 1) acc = poly_mul_mod(acc, b);
            b = poly_mul_mod(b, b);
            e >>= 1;
        }
        return poly_to_code(acc, p_);
    };
    generator_ = 1;
    for (int g = 2; g < q_; ++g) {
        bool primitive = true;
        for (int f : factors) {
            if (pow_raw(g, (q_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = g;
            break;
        }
    }

    log_.assign(q_, -1);
    exp_.assign(2 * (q_ - 1) > 0 ? 2 * (q_ - 1) : 1, 1);
    {
        std::vector<int> acc{1};
        const auto g = code_to_poly(generator_, p_, a_);
        for (int i = 0; i < q_ - 1; ++i) {
            const int code = poly_to_code(acc, p_);
            exp_[i] = code;
            exp_[i + (q_ - 1)] = code;
            if (log_[code] != -1) throw std::logic_error("generator is not primitive");
            log_[code] = i;
            acc = poly_mul_mod(acc, g);
        }
        if (poly_to_code(acc, p_) != 1) throw std::logic_error("generator order mismatch");
    }

    if (t_ != 0) {
        conj_tab_.resize(q_);
        norm_tab_.resize(q_);
        conj_tab_[0] = 0;
        norm_tab_[0] = 0;
        for (int x = 1; x < q_; ++x) {
            conj_tab_[x] = exp_[static_cast<int>((static_cast<long long>(log_[x]) * t_) % (q_ - 1))];
            norm_tab_[x] = mulu(conj_tab_[x], x);
        }
    }
}

int Field::t() const { return require_t(); }

int Field::require_t() const {
    if (t_ == 0) throw std::domain_error("field GF(" + std::to_string(q_) + ") is not a square extension");
    return t_;
}

int Field::inv(int x) const {
    check(x);
    if (x == 0) throw std::domain_error("inversion of zero");
    return invu(x);
}

int Field::pow(int x, long long e) const {
    check(x);
    if (x == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    long long r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[static_cast<int>((static_cast<long long>(log_[x]) * r) % (q_ - 1))];
}

int Field::conjugate(int x) const {
    check(x);
    require_t();
    return conj_tab_[x];
}

int Field::norm(int x) const {
    check(x);
    require_t();
    return norm_tab_[x];
}

bool Field::in_subfield_t(int x) const {
    check(x);
    require_t();
    return conj_tab_[x] == x;
}

}  // namespace hermicode
