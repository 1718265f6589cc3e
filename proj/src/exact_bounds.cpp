#include "deltared/bounds.hpp"
#include "deltared/error.hpp"

#include <cmath>

using std::int64_t;
using std::optional;
using std::uint64_t;
__extension__ typedef __int128 i128;

namespace deltared {

namespace
{
    constexpr uint64_t kExactCap = 1'000'000;

    auto require_exact_range(uint64_t k, uint64_t t, uint64_t x) -> void
    {
        if (k > kExactCap || t > kExactCap || x > kExactCap)
            throw DomainError("exact rational path supports parameters up to 1e6");
    }

    // base^k, or empty once it exceeds `limit`.
    auto bounded_power(int64_t base, uint64_t k, int64_t limit) -> optional<int64_t>
    {
        i128 acc = 1;
        for (uint64_t i = 0; i < k; ++i) {
            acc *= base;
            if (acc > limit)
                return std::nullopt;
        }
        return static_cast<int64_t>(acc);
    }

    auto integer_root(int64_t x, uint64_t k) -> optional<int64_t>
    {
        if (x < 0)
            return std::nullopt;
        if (x <= 1 || k == 1)
            return x;
        auto guess = static_cast<int64_t>(std::llround(std::pow(static_cast<double>(x), 1.0 / static_cast<double>(k))));
        for (int64_t c = std::max<int64_t>(0, guess - 1); c <= guess + 1; ++c)
            if (auto p = bounded_power(c, k, x); p && *p == x)
                return c;
        return std::nullopt;
    }

    auto as_int(uint64_t v) -> int64_t { return static_cast<int64_t>(v); }
}

auto exact_kth_root(const Rational & q, uint64_t k) -> optional<Rational>
{
    if (k == 0)
        throw DomainError("root order must be positive");
    auto num = integer_root(q.numerator(), k);
    auto den = integer_root(q.denominator(), k);
    if (! num || ! den)
        return std::nullopt;
    return Rational(*num, *den);
}

auto exact_bound_v1(uint64_t k, uint64_t t, uint64_t n) -> Rational
{
    bound_v1(k, t, n);
    require_exact_range(k, t, n);
    return Rational(as_int(n) + as_int(k - 1) * as_int(t), 2 * as_int(k));
}

auto exact_bound_e1(uint64_t k, uint64_t t, uint64_t m) -> Rational
{
    bound_e1(k, t, m);
    require_exact_range(k, t, m);
    return Rational(as_int(m) + as_int(k - 1) * as_int(t), 2 * as_int(k) - 1);
}

auto exact_bound_v2(uint64_t k, uint64_t t, uint64_t n) -> optional<Rational>
{
    bound_v2(k, t, n);
    require_exact_range(k, t, n);
    auto r = exact_kth_root(Rational(as_int(n), as_int(k + 1) * as_int(t)), k);
    if (! r)
        return std::nullopt;
    const Rational nq(as_int(n));
    return nq - nq * Rational(as_int(k), as_int(k + 1)) * *r;
}

auto exact_bound_e2(uint64_t k, uint64_t t, uint64_t m) -> optional<Rational>
{
    bound_e2(k, t, m);
    require_exact_range(k, t, m);
    auto r = exact_kth_root(Rational(as_int(m), as_int(k) * as_int(t)), k - 1);
    if (! r)
        return std::nullopt;
    const Rational mq(as_int(m));
    return mq - mq * Rational(as_int(k - 1), as_int(k)) * *r;
}

auto exact_k2_edge_identity(uint64_t t, uint64_t m) -> Rational
{
    k2_edge_identity(t, m);
    require_exact_range(2, t, m);
    const auto ti = as_int(t);
    const auto mi = as_int(m);
    return Rational((2 * ti - mi) * (3 * mi - 2 * ti), 12 * ti);
}

}
