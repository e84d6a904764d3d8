#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "satlab/graph.hpp"

namespace satlab {

// Exact rational arithmetic for bound values; never floats.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const = default;
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const;

    std::string to_string() const;
};

long long falling_factorial(long long m, int k);

enum class BoundCase {
    Ehm,      // sat(n, K2, Ks) = (s-2)(n-s+2) + C(s-2,2), exact
    KrKs,     // sat(n, Kr, Ks): max-of-two lower (asymptotic), exact-form upper
    QuadLB,   // sat(n, H, Ks) >= f_{h1,h2}(H) (n^2/(2(s-1)) - n/2)
    C4K4,     // sat(n, C4, K4) <= C(n-2, 2); lower asymptotic
    CrKs,     // sat(n, Cr, Ks) = Theta(n^floor(r/2)), leading coefficients only
    C6K5,     // sat(n, C6, K5) <= 6 C(n-3, 3); lower asymptotic
    KTcount,  // greedy-construction count bound n C(|V(F)|-2, r-1) + C(|V(F)|-a(F)-1, r)
};

struct BoundParams {
    int n = 0, r = 0, s = 0;
    // QuadLB: pattern H with the pinned nonedge; KTcount: target F.
    std::optional<Graph> h;
    int h1 = 0, h2 = 0;
    std::optional<Graph> f;
};

struct BoundReport {
    BoundCase bound_case;
    BoundParams params;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    bool lower_asymptotic = false;  // o(.) slack dropped; informational only
    bool upper_asymptotic = false;
    std::string notes;

    std::string to_json() const;
};

// Exact rational values of the cited closed forms.  Parameters outside a
// bound's validity range raise std::domain_error naming the violated
// condition.
BoundReport evaluate_bound(BoundCase c, const BoundParams& p);

std::optional<BoundCase> parse_bound_case(const std::string& name);
std::string bound_case_name(BoundCase c);

// One summary row per bound family at the given parameters, rendered as an
// aligned text table.
std::string bounds_table(int n);

}  // namespace satlab
