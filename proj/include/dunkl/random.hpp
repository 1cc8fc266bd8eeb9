#pragma once

#include "dunkl/poly.hpp"

#include <cstdint>
#include <random>

namespace dunkl {

/// Deterministic sampler for randomized suites. Bounded draws are derived
/// from the raw 64-bit engine output so results do not depend on the
/// standard library's distribution implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Nonzero rational p/q with |p| <= 5, 1 <= q <= 3.
    Rational small_rational() {
        long num = uniform(1, 5) * (uniform(0, 1) ? 1 : -1);
        Rational q(num, uniform(1, 3));
        q.canonicalize();
        return q;
    }

    RationalVector vector(std::size_t dim) {
        RationalVector v(dim);
        for (auto& x : v) x = uniform(0, 3) == 0 ? Rational(0) : small_rational();
        return v;
    }

    /// Homogeneous polynomial of degree m with 1..max_terms random monomials.
    Poly homogeneous(std::size_t dim, unsigned m, unsigned max_terms = 4) {
        Poly p(dim);
        while (p.is_zero()) {
            auto count = uniform(1, max_terms);
            for (long t = 0; t < count; ++t) {
                Exponent e;
                for (unsigned k = 0; k < m; ++k) e[static_cast<std::size_t>(uniform(0, static_cast<long>(dim) - 1))] += 1;
                p.add_term(e, small_rational());
            }
        }
        return p;
    }

    /// Polynomial with homogeneous parts of every degree up to max_degree.
    Poly general(std::size_t dim, unsigned max_degree, unsigned max_terms = 3) {
        Poly p(dim);
        for (unsigned m = 0; m <= max_degree; ++m)
            if (uniform(0, 2) != 0) p += homogeneous(dim, m, max_terms);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace dunkl
