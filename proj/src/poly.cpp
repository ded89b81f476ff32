#include "lierep/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lierep {

Poly char_poly(const Mat<GaussRat>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::SizeMismatch, "char_poly: square required");
    const std::size_t n = m.rows();
    std::vector<GaussRat> c(n + 1);
    c[n] = GaussRat(1);
    Mat<GaussRat> mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + Mat<GaussRat>::identity(n).scaled(c[n - k + 1]);
        GaussRat tr = (m * mk).trace();
        c[n - k] = -tr / GaussRat(Rat(static_cast<long>(k)));
    }
    return Poly(std::move(c));
}

namespace {

struct GInt {
    mpz_class a, b;  // a + b i
    bool operator<(const GInt& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    bool operator==(const GInt& o) const { return a == o.a && b == o.b; }
};

mpz_class gnorm(const GInt& z) { return z.a * z.a + z.b * z.b; }

GInt gmul(const GInt& x, const GInt& y) {
    return GInt{x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

bool gdiv_exact(const GInt& x, const GInt& y, GInt& out) {
    mpz_class n = gnorm(y);
    mpz_class pa = x.a * y.a + x.b * y.b;
    mpz_class pb = x.b * y.a - x.a * y.b;
    if (pa % n != 0 || pb % n != 0) return false;
    out = GInt{pa / n, pb / n};
    return true;
}

mpz_class round_div(const mpz_class& p, const mpz_class& q) {
    // nearest integer to p/q, q > 0
    mpz_class two_p = 2 * p;
    mpz_class r = (two_p + q) / (2 * q);
    if (two_p + q < 0 && (two_p + q) % (2 * q) != 0) r -= 1;
    return r;
}

GInt ggcd(GInt x, GInt y) {
    while (!(y.a == 0 && y.b == 0)) {
        mpz_class n = gnorm(y);
        mpz_class qa = round_div(x.a * y.a + x.b * y.b, n);
        mpz_class qb = round_div(x.b * y.a - x.a * y.b, n);
        GInt q{qa, qb};
        GInt r{x.a - (q.a * y.a - q.b * y.b), x.b - (q.a * y.b + q.b * y.a)};
        x = y;
        y = r;
    }
    return x;
}

std::map<mpz_class, unsigned> factor_integer(mpz_class n) {
    std::map<mpz_class, unsigned> f;
    mpz_class d = 2;
    while (d * d <= n) {
        while (n % d == 0) {
            ++f[d];
            n /= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) ++f[n];
    return f;
}

// A Gaussian prime above the rational prime p = 1 mod 4, via a square root
// of -1 mod p.
GInt gaussian_prime_above(const mpz_class& p) {
    mpz_class exp = (p - 1) / 2;
    mpz_class t = 2, x = 0;
    while (true) {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), t.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        if (r == p - 1) {
            mpz_class e4 = (p - 1) / 4;
            mpz_powm(x.get_mpz_t(), t.get_mpz_t(), e4.get_mpz_t(), p.get_mpz_t());
            break;
        }
        t += 1;
    }
    return ggcd(GInt{p, 0}, GInt{x, 1});
}

/// All divisors of a nonzero Gaussian integer, associates included.
std::set<GInt> gauss_divisors(const GInt& z) {
    std::vector<std::pair<GInt, unsigned>> primes;
    for (const auto& [p, e] : factor_integer(gnorm(z))) {
        std::vector<GInt> ps;
        if (p == 2) ps.push_back(GInt{1, 1});
        else if (p % 4 == 3) ps.push_back(GInt{p, 0});
        else {
            GInt pi = gaussian_prime_above(p);
            ps.push_back(pi);
            ps.push_back(GInt{pi.a, -pi.b});
        }
        for (const GInt& q : ps) {
            GInt w = z, quo{0, 0};
            unsigned m = 0;
            while (gdiv_exact(w, q, quo)) {
                w = quo;
                ++m;
            }
            if (m) primes.push_back({q, m});
        }
    }
    std::vector<GInt> divs{GInt{1, 0}};
    for (const auto& [q, m] : primes) {
        std::vector<GInt> next;
        GInt qk{1, 0};
        for (unsigned k = 0; k <= m; ++k) {
            for (const GInt& d : divs) next.push_back(gmul(d, qk));
            qk = gmul(qk, q);
        }
        divs = std::move(next);
    }
    std::set<GInt> out;
    for (const GInt& d : divs)
        for (const GInt& u : {GInt{1, 0}, GInt{-1, 0}, GInt{0, 1}, GInt{0, -1}})
            out.insert(gmul(d, u));
    return out;
}

}  // namespace

RootList gauss_rational_roots(const Poly& p) {
    if (p.is_zero())
        throw Error(ErrorCode::ValidationError, "gauss_rational_roots: zero polynomial");
    RootList out;
    std::vector<GaussRat> c = p.coeffs;
    std::size_t zero_mult = 0;
    while (c.size() > 1 && c.front().is_zero()) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult) out.roots.push_back({GaussRat(0), zero_mult});
    if (c.size() <= 1) {
        out.full_degree = true;
        return out;
    }
    // clear denominators to land in Z[i]
    mpz_class lcm = 1;
    for (const GaussRat& z : c) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.re().den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.im().den().get_mpz_t());
    }
    auto as_gint = [&](const GaussRat& z) {
        Rat re = z.re() * Rat(lcm), im = z.im() * Rat(lcm);
        return GInt{re.num(), im.num()};
    };
    std::set<GInt> num_divs = gauss_divisors(as_gint(c.front()));
    std::set<GInt> den_divs = gauss_divisors(as_gint(c.back()));
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<GaussRat> candidates;
    for (const GInt& pn : num_divs)
        for (const GInt& qd : den_divs) {
            mpz_class n = gnorm(qd);
            Rat re(pn.a * qd.a + pn.b * qd.b, n);
            Rat im(pn.b * qd.a - pn.a * qd.b, n);
            if (seen.insert({re.str(), im.str()}).second) candidates.push_back(GaussRat(re, im));
        }
    std::sort(candidates.begin(), candidates.end(), [](const GaussRat& x, const GaussRat& y) {
        if (x.re() != y.re()) return x.re() < y.re();
        return x.im() < y.im();
    });
    Poly rem{std::vector<GaussRat>(c)};
    for (const GaussRat& r : candidates) {
        std::size_t m = 0;
        while (rem.degree() >= 1 && rem.eval(r).is_zero()) {
            rem = rem.deflate(r);
            ++m;
        }
        if (m) out.roots.push_back({r, m});
        if (rem.degree() == 0) break;
    }
    out.full_degree = (rem.degree() == 0);
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) {
        if (x.first.re() != y.first.re()) return x.first.re() < y.first.re();
        return x.first.im() < y.first.im();
    });
    return out;
}

}  // namespace lierep
