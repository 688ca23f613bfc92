#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace strclan {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Error kinds line up with the CLI exit codes (input = 2, domain = 1).
struct Error : std::runtime_error {
    enum class Kind { Input, Domain, Internal };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error input_error(const std::string& m) { return Error(Error::Kind::Input, m); }
inline Error domain_error(const std::string& m) { return Error(Error::Kind::Domain, m); }

/// Prime field GF(p), elements stored as canonical representatives in [0, p).
struct FpField {
    using Elem = std::uint64_t;
    std::uint64_t p = 101;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return static_cast<Elem>(m);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw domain_error("division by zero in GF(" + std::to_string(p) + ")");
        // extended gcd
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw domain_error("non-invertible element in GF(p)");
        if (t < 0) t += static_cast<long long>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Elem num = parse(s.substr(0, slash));
            Elem den = parse(s.substr(slash + 1));
            return div(num, den);
        }
        try {
            long long v = std::stoll(s);
            return from_int(v);
        } catch (const std::exception&) {
            throw input_error("bad GF(p) element: '" + s + "'");
        }
    }
};

/// Exact rationals backed by arbitrary-precision integers.
struct RatField {
    using Elem = BigRat;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem from_int(long long v) const { return Elem(v); }
    Elem inv(const Elem& a) const {
        if (a == 0) throw domain_error("division by zero in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw domain_error("division by zero in Q");
        return a / b;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const {
        if (denominator(a) == 1) return numerator(a).str();
        return numerator(a).str() + "/" + denominator(a).str();
    }
    Elem parse(const std::string& s) const {
        try {
            return Elem(s);
        } catch (const std::exception&) {
            throw input_error("bad rational element: '" + s + "'");
        }
    }
};

/// Runtime field choice: "q" or "gf:<p>".
struct FieldSpec {
    bool rational = false;
    std::uint64_t p = 101;

    static FieldSpec parse(const std::string& s) {
        FieldSpec fs;
        if (s == "q" || s == "Q") { fs.rational = true; return fs; }
        if (s.rfind("gf:", 0) == 0) {
            fs.rational = false;
            fs.p = std::stoull(s.substr(3));
            if (fs.p < 2 || fs.p > (1ull << 31)) throw input_error("field prime out of range: " + s);
            for (std::uint64_t d = 2; d * d <= fs.p; ++d)
                if (fs.p % d == 0) throw input_error("field modulus not prime: " + s);
            return fs;
        }
        throw input_error("bad field spec '" + s + "' (expected q or gf:<p>)");
    }
    std::string str() const { return rational ? "q" : "gf:" + std::to_string(p); }
    bool operator==(const FieldSpec& o) const { return rational == o.rational && (rational || p == o.p); }
};

} // namespace strclan
