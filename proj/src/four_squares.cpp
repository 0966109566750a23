#include "ruscs/four_squares.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ruscs {

namespace {

constexpr long kBruteForceLimit = 1000000;
constexpr int kRandomRetryCap = 10000;

Integer powmod(Integer base, Integer exp, const Integer &mod)
{
    Integer result = 1;
    base %= mod;
    if (base < 0) {
        base += mod;
    }
    while (exp > 0) {
        if ((exp & 1) != 0) {
            result = result * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

Integer random_below(const Integer &bound, Rng &rng)
{
    if (bound <= 0) {
        return 0;
    }
    // Rejection sampling over 64-bit chunks keeps the draw unbiased.
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    while (true) {
        Integer v = 0;
        for (unsigned got = 0; got < bits; got += 64) {
            v = (v << 64) | Integer(rng());
        }
        v >>= (((bits + 63) / 64) * 64 - bits);
        if (v < bound) {
            return v;
        }
    }
}

FourSquares canonical(Integer a, Integer b, Integer c, Integer d)
{
    std::array<Integer, 4> v{abs(a), abs(b), abs(c), abs(d)};
    std::sort(v.begin(), v.end(), [](const Integer &x, const Integer &y) { return x > y; });
    return {v[0], v[1], v[2], v[3]};
}

/// Visit solutions a >= b >= c >= d >= 0 in decreasing-a scan order.
/// Returns false from the visitor to stop early.
template <typename Visitor> void scan_descending(const Integer &M, Visitor &&visit)
{
    if (M == 0) {
        visit(FourSquares{0, 0, 0, 0});
        return;
    }
    for (Integer a = isqrt(M); a >= 0 && 4 * a * a >= M; --a) {
        Integer r1 = M - a * a;
        for (Integer b = std::min(a, isqrt(r1)); b >= 0 && 3 * b * b >= r1; --b) {
            Integer r2 = r1 - b * b;
            for (Integer c = std::min(b, isqrt(r2)); c >= 0 && 2 * c * c >= r2; --c) {
                Integer d2 = r2 - c * c;
                Integer d = isqrt(d2);
                if (d * d == d2 && d <= c) {
                    if (!visit(FourSquares{a, b, c, d})) {
                        return;
                    }
                }
            }
        }
    }
}

std::optional<std::pair<Integer, Integer>> complete_two_squares(const Integer &q, Rng &rng)
{
    if (q == 0) {
        return std::make_pair(Integer(0), Integer(0));
    }
    if (q == 1) {
        return std::make_pair(Integer(1), Integer(0));
    }
    if (q == 2) {
        return std::make_pair(Integer(1), Integer(1));
    }
    if (q % 4 != 1 || !is_probable_prime(q, rng)) {
        return std::nullopt;
    }
    auto [x, y] = two_squares(q, rng);
    if (x * x + y * y != q) {
        return std::nullopt; // pseudoprime slipped through; caller retries
    }
    return std::make_pair(x, y);
}

FourSquares four_squares_randomized(const Integer &M, Rng &rng)
{
    // Strip factors of 4 so the remaining part keeps odd structure.
    Integer m = M;
    Integer scale = 1;
    while (m % 4 == 0) {
        m >>= 2;
        scale <<= 1;
    }
    Integer root = isqrt(m);
    for (int attempt = 0; attempt < kRandomRetryCap; ++attempt) {
        Integer a = random_below(root + 1, rng);
        Integer rb = isqrt(m - a * a);
        Integer b = random_below(rb + 1, rng);
        Integer q = m - a * a - b * b;
        if (auto xy = complete_two_squares(q, rng)) {
            return canonical(a * scale, b * scale, xy->first * scale, xy->second * scale);
        }
    }
    // Deterministic fallback: decrementing scan of a, then b.
    for (Integer a = root; a >= 0; --a) {
        Integer r1 = m - a * a;
        for (Integer b = isqrt(r1); b >= 0; --b) {
            Integer q = r1 - b * b;
            if (auto xy = complete_two_squares(q, rng)) {
                return canonical(a * scale, b * scale, xy->first * scale, xy->second * scale);
            }
        }
    }
    throw std::logic_error("four_squares: no decomposition found (unreachable for M >= 0)");
}

} // namespace

Integer isqrt(const Integer &n)
{
    if (n < 0) {
        throw std::invalid_argument("isqrt: negative argument");
    }
    if (n == 0) {
        return 0;
    }
    Integer r = boost::multiprecision::sqrt(n);
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

bool is_probable_prime(const Integer &n, Rng &rng)
{
    if (n < 2) {
        return false;
    }
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) {
            return true;
        }
        if (n % p == 0) {
            return false;
        }
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }
    for (int round = 0; round < 40; ++round) {
        Integer a = 2 + random_below(n - 3, rng);
        Integer x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

Integer sqrt_minus_one(const Integer &pr, Rng &rng)
{
    if (pr < 5 || pr % 4 != 1) {
        throw std::invalid_argument("sqrt_minus_one: argument must be a prime = 1 (mod 4)");
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
        Integer g = 2 + random_below(pr - 3, rng);
        Integer x = powmod(g, (pr - 1) / 4, pr);
        if (x * x % pr == pr - 1) {
            return x;
        }
        // For prime pr, g^((pr-1)/2) must be +-1; anything else is a
        // compositeness witness.
        Integer h = x * x % pr;
        if (h != 1 && h != pr - 1) {
            throw std::invalid_argument("sqrt_minus_one: argument is composite");
        }
    }
    throw std::invalid_argument("sqrt_minus_one: retry cap exceeded (argument likely composite)");
}

std::pair<Integer, Integer> two_squares(const Integer &pr, Rng &rng)
{
    if (pr == 2) {
        return {1, 1};
    }
    Integer s = sqrt_minus_one(pr, rng);
    // gcd(pr, s + i) in Z[i] has norm pr.
    GaussianInt a{pr, 0};
    GaussianInt b{s, 1};
    while (!b.is_zero()) {
        // Euclidean step with the rounded quotient a*conj(b)/norm(b).
        Integer n = b.norm();
        GaussianInt t = a * b.conj();
        auto round_div = [&](const Integer &num) {
            Integer q = (2 * num + n) / (2 * n);
            if (2 * num + n < 0 && (2 * num + n) % (2 * n) != 0) {
                --q;
            }
            return q;
        };
        GaussianInt q{round_div(t.re()), round_div(t.im())};
        GaussianInt r = a - q * b;
        a = b;
        b = r;
    }
    Integer x = abs(a.re());
    Integer y = abs(a.im());
    if (x < y) {
        std::swap(x, y);
    }
    if (x * x + y * y != pr) {
        throw std::invalid_argument("two_squares: argument is not 2 or a prime = 1 (mod 4)");
    }
    return {x, y};
}

FourSquares four_squares(const Integer &M, Rng &rng)
{
    if (M < 0) {
        throw std::invalid_argument("four_squares: argument must be nonnegative");
    }
    if (M == 0) {
        return {0, 0, 0, 0};
    }
    if (M <= kBruteForceLimit) {
        FourSquares out{0, 0, 0, 0};
        bool found = false;
        scan_descending(M, [&](const FourSquares &s) {
            out = s;
            found = true;
            return false;
        });
        if (!found) {
            throw std::logic_error("four_squares: brute force found nothing (impossible)");
        }
        return out;
    }
    return four_squares_randomized(M, rng);
}

std::vector<FourSquares> four_squares_multi(const Integer &M, int count, Rng &rng)
{
    if (count < 1) {
        throw std::invalid_argument("four_squares_multi: count must be >= 1");
    }
    std::vector<FourSquares> out;
    if (M <= kBruteForceLimit) {
        scan_descending(M, [&](const FourSquares &s) {
            out.push_back(s);
            return static_cast<int>(out.size()) < count;
        });
        return out;
    }
    std::set<std::array<Integer, 4>> seen;
    int attempts = 0;
    const int attempt_cap = count * 64;
    while (static_cast<int>(out.size()) < count && attempts < attempt_cap) {
        ++attempts;
        FourSquares s = four_squares(M, rng);
        if (seen.insert({s.a, s.b, s.c, s.d}).second) {
            out.push_back(s);
        }
    }
    return out;
}

} // namespace ruscs
