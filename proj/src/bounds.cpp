#include "satlab/bounds.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"

namespace satlab {

namespace {

long long checked(__int128 v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error(what);
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n) : num(n), den(1) {}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                            "Rational overflow"),
                    checked(static_cast<__int128>(den) * o.den, "Rational overflow"));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked(static_cast<__int128>(num) * o.num, "Rational overflow"),
                    checked(static_cast<__int128>(den) * o.den, "Rational overflow"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
    return *this * Rational(o.den, o.num);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

bool Rational::operator<=(const Rational& o) const { return *this < o || *this == o; }

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

long long falling_factorial(long long m, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    __int128 out = 1;
    for (int i = 0; i < k; ++i) {
        out *= m - i;
        if (out > std::numeric_limits<long long>::max() ||
            out < std::numeric_limits<long long>::min())
            throw std::overflow_error("falling_factorial overflow");
    }
    return static_cast<long long>(out);
}

namespace {

void require_range(bool cond, const char* condition) {
    if (!cond) throw std::domain_error(std::string("parameters outside validity range: need ") +
                                       condition);
}

BoundReport ehm_bound(const BoundParams& p) {
    require_range(p.s >= 3, "s >= 3");
    require_range(p.n >= p.s, "n >= s");
    Rational v = Rational(p.s - 2) * Rational(p.n - p.s + 2) + Rational(binomial(p.s - 2, 2));
    BoundReport r{BoundCase::Ehm, p, v, v, false, false,
                  "exact equality; extremal graph is the clique-plus-independent-set join"};
    return r;
}

BoundReport krks_bound(const BoundParams& p) {
    require_range(p.s > p.r && p.r >= 3, "s > r >= 3");
    require_range(p.n >= p.s, "n >= s");
    Rational upper = Rational(p.n - p.s + 2) * Rational(binomial(p.s - 2, p.r - 1)) +
                     Rational(binomial(p.s - 2, p.r));
    Rational lb1 = Rational(binomial(p.s - 2, p.r - 1), p.r - 1) * Rational(p.n) -
                   Rational(2 * binomial(p.s - 2, p.r - 1));
    Rational lb2 =
        Rational(binomial(p.s - 2, p.r - 1) + binomial(p.s - 3, p.r - 2), p.r) * Rational(p.n);
    Rational lower = lb1 < lb2 ? lb2 : lb1;
    return {BoundCase::KrKs, p, lower, upper, true, false,
            "lower bound valid only for n large (unspecified n_{s,r}); informational"};
}

BoundReport quad_lower(const BoundParams& p) {
    require_range(p.s >= 3, "s >= 3");
    require_range(p.h.has_value(), "pattern H supplied");
    const Graph& h = *p.h;
    require_range(h.order() <= p.s, "|V(H)| <= s");
    require_range(p.h1 >= 0 && p.h1 < h.order() && p.h2 >= 0 && p.h2 < h.order() && p.h1 != p.h2 &&
                      !h.has_edge(p.h1, p.h2),
                  "h1 h2 a nonedge of H");
    Count f = rooted_pair_count(h, p.h1, p.h2, p.s);
    Rational lower = Rational(f) * (Rational(static_cast<long long>(p.n) * p.n, 2 * (p.s - 1)) -
                                    Rational(p.n, 2));
    return {BoundCase::QuadLB, p, lower, std::nullopt, false, false,
            "pinned-pair counting lower bound; exact at every n"};
}

BoundReport c4k4_bound(const BoundParams& p) {
    require_range(p.n >= 4, "n >= 4");
    Rational upper = Rational(binomial(p.n - 2, 2));
    // Lower is C(n,2) - n^{5/3+d}, asymptotic only; report the C(n,2) term.
    return {BoundCase::C4K4, p, Rational(binomial(p.n, 2)), upper, true, false,
            "lower bound drops the n^{5/3+delta} slack; informational"};
}

BoundReport crks_bound(const BoundParams& p) {
    require_range(p.s >= 5, "s >= 5");
    require_range(p.r <= 2 * p.s - 4, "r <= 2s-4");
    require_range(p.r % 2 == 0 ? p.r >= 4 : p.r >= 5, "r >= 4 (even) or r >= 5 (odd)");
    int k = p.r / 2;
    long long nk = 1;
    for (int i = 0; i < k; ++i) nk *= p.n;
    Rational lower, upper;
    if (p.r % 2 == 0) {
        lower = Rational(falling_factorial(p.s - 2, k), 4 * k) * Rational(nk);
        upper = Rational(falling_factorial(p.s - 2, k), 2 * k) * Rational(nk);
    } else {
        lower = Rational(falling_factorial(p.s - 2, k + 1) * falling_factorial(k - 2, k - 2),
                         static_cast<long long>(p.r) * (p.r - 3) * falling_factorial(p.r, k) *
                             (p.s - 1)) *
                Rational(nk);
        upper = Rational(falling_factorial(p.s - 2, k + 1), 2) * Rational(nk);
    }
    return {BoundCase::CrKs, p, lower, upper, true, true,
            "leading coefficients only; both sides carry o(n^k) slack"};
}

BoundReport c6k5_bound(const BoundParams& p) {
    require_range(p.n >= 6, "n >= 6");
    Rational upper = Rational(6 * binomial(p.n - 3, 3));
    long long n3 = static_cast<long long>(p.n) * p.n * p.n;
    return {BoundCase::C6K5, p, Rational(n3), upper, true, false,
            "lower bound is (1-o(1)) n^3; informational"};
}

BoundReport kt_count_bound(const BoundParams& p) {
    require_range(p.r >= 2, "r >= 2");
    require_range(p.f.has_value(), "target F supplied");
    const Graph& f = *p.f;
    require_range(f.edge_count() >= 1, "F has an edge");
    int alpha = independence_number(f);
    Rational upper = Rational(p.n) * Rational(binomial(f.order() - 2, p.r - 1)) +
                     Rational(binomial(f.order() - alpha - 1, p.r));
    return {BoundCase::KTcount, p, std::nullopt, upper, false, false,
            "clique-count bound for the greedy saturated construction"};
}

}  // namespace

BoundReport evaluate_bound(BoundCase c, const BoundParams& p) {
    switch (c) {
        case BoundCase::Ehm: return ehm_bound(p);
        case BoundCase::KrKs: return krks_bound(p);
        case BoundCase::QuadLB: return quad_lower(p);
        case BoundCase::C4K4: return c4k4_bound(p);
        case BoundCase::CrKs: return crks_bound(p);
        case BoundCase::C6K5: return c6k5_bound(p);
        case BoundCase::KTcount: return kt_count_bound(p);
    }
    throw std::logic_error("unreachable");
}

std::string bound_case_name(BoundCase c) {
    switch (c) {
        case BoundCase::Ehm: return "Ehm";
        case BoundCase::KrKs: return "KrKs";
        case BoundCase::QuadLB: return "QuadLB";
        case BoundCase::C4K4: return "C4K4";
        case BoundCase::CrKs: return "CrKs";
        case BoundCase::C6K5: return "C6K5";
        case BoundCase::KTcount: return "KTcount";
    }
    throw std::logic_error("unreachable");
}

std::optional<BoundCase> parse_bound_case(const std::string& name) {
    for (BoundCase c : {BoundCase::Ehm, BoundCase::KrKs, BoundCase::QuadLB, BoundCase::C4K4,
                        BoundCase::CrKs, BoundCase::C6K5, BoundCase::KTcount})
        if (bound_case_name(c) == name) return c;
    return std::nullopt;
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["case"] = bound_case_name(bound_case);
    nlohmann::json jp;
    if (params.n) jp["n"] = params.n;
    if (params.r) jp["r"] = params.r;
    if (params.s) jp["s"] = params.s;
    if (params.h) {
        jp["h"] = to_graph6(*params.h);
        jp["h1"] = params.h1;
        jp["h2"] = params.h2;
    }
    if (params.f) jp["f"] = to_graph6(*params.f);
    j["params"] = jp;
    j["lower"] = lower ? nlohmann::json(lower->to_string()) : nlohmann::json();
    j["upper"] = upper ? nlohmann::json(upper->to_string()) : nlohmann::json();
    j["lower_asymptotic"] = lower_asymptotic;
    j["upper_asymptotic"] = upper_asymptotic;
    j["notes"] = notes;
    return j.dump();
}

std::string bounds_table(int n) {
    std::ostringstream out;
    auto row = [&](const std::string& what, const BoundReport& r) {
        out << what << "  lower=" << (r.lower ? r.lower->to_string() : "-")
            << (r.lower_asymptotic ? " (asymptotic)" : "")
            << "  upper=" << (r.upper ? r.upper->to_string() : "-")
            << (r.upper_asymptotic ? " (asymptotic)" : "") << "\n";
    };
    BoundParams p;
    p.n = n;
    p.s = 4;
    row("sat(n,K2,K4)      ", evaluate_bound(BoundCase::Ehm, p));
    p.r = 3;
    row("sat(n,K3,K4)      ", evaluate_bound(BoundCase::KrKs, p));
    row("sat(n,C4,K4)      ", evaluate_bound(BoundCase::C4K4, p));
    p.s = 5;
    p.r = 6;
    row("sat(n,C6,K5)      ", evaluate_bound(BoundCase::C6K5, p));
    row("sat(n,C6,K5) Theta", evaluate_bound(BoundCase::CrKs, p));
    return out.str();
}

}  // namespace satlab
