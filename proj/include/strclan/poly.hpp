#pragma once

#include "strclan/field.hpp"
#include "strclan/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace strclan {

/// Dense univariate polynomials, coefficients ascending. poly[i] is the T^i coefficient.
template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void poly_trim(F f, Poly<F>& p) {
    while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class F>
int poly_deg(const Poly<F>& p) { return static_cast<int>(p.size()) - 1; }

template <class F>
Poly<F> poly_add(F f, Poly<F> a, const Poly<F>& b) {
    if (a.size() < b.size()) a.resize(b.size(), f.zero());
    for (size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
    poly_trim(f, a);
    return a;
}

template <class F>
Poly<F> poly_scale(F f, Poly<F> a, const typename F::Elem& s) {
    for (auto& x : a) x = f.mul(x, s);
    poly_trim(f, a);
    return a;
}

template <class F>
Poly<F> poly_mul(F f, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, f.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    poly_trim(f, r);
    return r;
}

/// (quotient, remainder) with invertible leading divisor coefficient.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(F f, Poly<F> a, const Poly<F>& b) {
    if (b.empty()) throw domain_error("polynomial division by zero");
    Poly<F> q;
    auto lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        auto c = f.mul(a.back(), lead_inv);
        if (q.size() < shift + 1) q.resize(shift + 1, f.zero());
        q[shift] = f.add(q[shift], c);
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        poly_trim(f, a);
        if (a.size() >= b.size() && a.empty()) break;
    }
    poly_trim(f, q);
    return {q, a};
}

template <class F>
Poly<F> poly_mod(F f, const Poly<F>& a, const Poly<F>& b) { return poly_divmod(f, a, b).second; }

template <class F>
Poly<F> poly_monic(F f, Poly<F> a) {
    if (a.empty()) return a;
    return poly_scale(f, std::move(a), f.inv(a.back()));
}

template <class F>
Poly<F> poly_gcd(F f, Poly<F> a, Poly<F> b) {
    poly_trim(f, a);
    poly_trim(f, b);
    while (!b.empty()) {
        auto r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

template <class F>
Poly<F> poly_derivative(F f, const Poly<F>& a) {
    Poly<F> d;
    for (size_t i = 1; i < a.size(); ++i) {
        auto c = a[i];
        typename F::Elem m = f.from_int(static_cast<long long>(i));
        d.push_back(f.mul(c, m));
    }
    poly_trim(f, d);
    return d;
}

template <class F>
typename F::Elem poly_eval(F f, const Poly<F>& a, const typename F::Elem& x) {
    auto r = f.zero();
    for (size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

/// a^e mod m
template <class F>
Poly<F> poly_powmod(F f, Poly<F> a, BigInt e, const Poly<F>& m) {
    Poly<F> r = {f.one()};
    a = poly_mod(f, a, m);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mod(f, poly_mul(f, r, a), m);
        a = poly_mod(f, poly_mul(f, a, a), m);
        e >>= 1;
    }
    return r;
}

/// Tries to write m = f1*f2 with gcd(f1,f2)=1 and both nonconstant.
/// Root scans, squarefree structure, and (over GF(p)) distinct-degree splits.
template <class F>
std::optional<std::pair<Poly<F>, Poly<F>>> poly_coprime_split(F f, Poly<F> m);

inline std::optional<std::pair<Poly<FpField>, Poly<FpField>>> split_by_factor(FpField f, const Poly<FpField>& m,
                                                                              Poly<FpField> g) {
    // peel the full power of g out of m so the two parts are coprime
    Poly<FpField> rest = m, power = {f.one()};
    while (true) {
        auto [q, r] = poly_divmod(f, rest, g);
        if (!r.empty()) break;
        rest = q;
        power = poly_mul(f, power, g);
    }
    if (poly_deg<FpField>(power) <= 0 || poly_deg<FpField>(rest) <= 0) return std::nullopt;
    return std::make_pair(power, rest);
}

template <>
inline std::optional<std::pair<Poly<FpField>, Poly<FpField>>> poly_coprime_split<FpField>(FpField f, Poly<FpField> m) {
    poly_trim(f, m);
    m = poly_monic(f, m);
    int d = poly_deg<FpField>(m);
    if (d <= 1) return std::nullopt;
    // linear roots (complete scan for small p)
    if (f.p <= 4096) {
        for (std::uint64_t v = 0; v < f.p; ++v) {
            if (f.is_zero(poly_eval(f, m, v))) {
                Poly<FpField> lin = {f.neg(v), f.one()};
                auto s = split_by_factor(f, m, lin);
                if (s) return s;
            }
        }
    }
    // distinct-degree: gcd(T^{p^i} - T, m)
    Poly<FpField> x = {f.zero(), f.one()};
    Poly<FpField> xp = x;
    for (int i = 1; 2 * i <= d; ++i) {
        xp = poly_powmod(f, xp, BigInt(f.p), m);
        auto diff = poly_add(f, xp, poly_scale(f, x, f.neg(f.one())));
        auto g = poly_gcd(f, diff, m);
        if (poly_deg<FpField>(g) > 0 && poly_deg<FpField>(g) < d) {
            auto s = split_by_factor(f, m, g);
            if (s) return s;
        }
    }
    // squarefree structure
    auto der = poly_derivative(f, m);
    if (!der.empty()) {
        auto g = poly_gcd(f, m, der);
        if (poly_deg<FpField>(g) > 0 && poly_deg<FpField>(g) < d) {
            auto sf = poly_divmod(f, m, g).first; // squarefree part
            auto s = split_by_factor(f, m, sf);
            if (s) return s;
            s = split_by_factor(f, m, g);
            if (s) return s;
        }
    }
    return std::nullopt;
}

template <>
inline std::optional<std::pair<Poly<RatField>, Poly<RatField>>> poly_coprime_split<RatField>(RatField f, Poly<RatField> m) {
    poly_trim(f, m);
    m = poly_monic(f, m);
    int d = poly_deg<RatField>(m);
    if (d <= 1) return std::nullopt;
    auto try_factor = [&](Poly<RatField> g) -> std::optional<std::pair<Poly<RatField>, Poly<RatField>>> {
        Poly<RatField> rest = m, power = {f.one()};
        while (true) {
            auto [q, r] = poly_divmod(f, rest, g);
            if (!r.empty()) break;
            rest = q;
            power = poly_mul(f, power, g);
        }
        if (poly_deg<RatField>(power) <= 0 || poly_deg<RatField>(rest) <= 0) return std::nullopt;
        return std::make_pair(power, rest);
    };
    // rational roots: scale to integer coefficients, scan divisors of ends
    BigInt denlcm = 1;
    for (const auto& c : m) denlcm = boost::multiprecision::lcm(denlcm, denominator(c));
    std::vector<BigInt> ic;
    for (const auto& c : m) ic.push_back(numerator(c * BigRat(denlcm)));
    BigInt a0 = ic.front(), an = ic.back();
    if (a0 == 0) {
        auto s = try_factor({f.zero(), f.one()});
        if (s) return s;
    } else if (boost::multiprecision::abs(a0) <= 100000 && boost::multiprecision::abs(an) <= 100000) {
        auto divisors = [](BigInt n) {
            n = boost::multiprecision::abs(n);
            std::vector<BigInt> ds;
            for (BigInt i = 1; i * i <= n; ++i)
                if (n % i == 0) { ds.push_back(i); ds.push_back(n / i); }
            return ds;
        };
        for (const auto& pn : divisors(a0))
            for (const auto& qn : divisors(an))
                for (int sign : {1, -1}) {
                    BigRat root = BigRat(sign * pn, qn);
                    if (f.is_zero(poly_eval(f, m, root))) {
                        auto s = try_factor({f.neg(root), f.one()});
                        if (s) return s;
                    }
                }
    }
    auto der = poly_derivative(f, m);
    if (!der.empty()) {
        auto g = poly_gcd(f, m, der);
        if (poly_deg<RatField>(g) > 0 && poly_deg<RatField>(g) < d) {
            auto sf = poly_divmod(f, m, g).first;
            auto s = try_factor(sf);
            if (s) return s;
            s = try_factor(g);
            if (s) return s;
        }
    }
    return std::nullopt;
}

/// Minimal polynomial of a square matrix (Krylov on the matrix itself).
template <class F>
Poly<F> matrix_minpoly(const Matrix<F>& m) {
    if (m.rows != m.cols) throw domain_error("minpoly of non-square matrix");
    F f = m.f;
    int n = m.rows;
    // stack powers I, M, M^2, ... as rows until dependent
    std::vector<Matrix<F>> powers;
    powers.push_back(Matrix<F>::identity(f, n));
    for (int k = 1; k <= n; ++k) powers.push_back(powers.back().mul(m));
    for (int k = 1; k <= n + 1; ++k) {
        // solve sum_{i<k} c_i M^i = M^k ?  i.e. dependence among first k+1 powers
        Matrix<F> sys(f, n * n, k);
        for (int i = 0; i < k; ++i)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) sys.at(r * n + c, i) = powers[i].at(r, c);
        std::vector<typename F::Elem> rhs(n * n, f.zero());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) rhs[r * n + c] = powers[k].at(r, c);
        auto sol = solve(sys, rhs);
        if (sol) {
            Poly<F> mp(k + 1, f.zero());
            for (int i = 0; i < k; ++i) mp[i] = f.neg((*sol)[i]);
            mp[k] = f.one();
            return mp;
        }
    }
    throw Error(Error::Kind::Internal, "minpoly not found");
}

} // namespace strclan
