#ifndef RINGFACTOR_TEST_SUPPORT_HPP
#define RINGFACTOR_TEST_SUPPORT_HPP

#include <random>

#include "ringfactor/matrix.hpp"

namespace ringfactor::testing {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}

    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> dist(lo, hi);
        return dist(eng);
    }
};

inline Rat random_small_rat(Rng& rng) {
    long num = rng.pick(-3, 3);
    long den = rng.pick(1, 3);
    return Rat(num) / Rat(den);
}

inline RingElement random_element(const RingDescriptor& desc, Rng& rng) {
    switch (desc.kind()) {
        case RingKind::Integer: return RingElement::integer(Int(rng.pick(-4, 4)));
        case RingKind::Rational: return RingElement::rational(random_small_rat(rng));
        case RingKind::GaussianRational:
            return RingElement::gaussian(random_small_rat(rng), random_small_rat(rng));
        case RingKind::Poly: {
            ElemVec coeffs;
            long deg = rng.pick(0, 2);
            for (long i = 0; i <= deg; ++i) coeffs.push_back(random_element(desc.base(), rng));
            return RingElement::poly(desc, std::move(coeffs));
        }
        case RingKind::Jet: {
            ElemVec coeffs;
            for (int i = 0; i < desc.jet_order(); ++i)
                coeffs.push_back(random_element(desc.base(), rng));
            return RingElement::jet(desc, std::move(coeffs));
        }
        case RingKind::Product: {
            ElemVec comps;
            for (const auto& c : desc.components()) comps.push_back(random_element(c, rng));
            return RingElement::product(desc, std::move(comps));
        }
        case RingKind::Analytic: break;
    }
    fail(Errc::UnsupportedRing, "no random generator for this ring");
}

/// Unit of the form 1 + (nilpotent); only meaningful for jet/product rings.
inline RingElement random_principal_unit(const RingDescriptor& desc, Rng& rng) {
    RingElement r = random_element(desc, rng);
    RingElement c = RingElement::one(desc);
    switch (desc.kind()) {
        case RingKind::Jet: {
            ElemVec coeffs = r.parts();
            coeffs[0] = RingElement::one(desc.base());
            return RingElement::jet(desc, std::move(coeffs));
        }
        case RingKind::Product: {
            ElemVec comps;
            for (size_t i = 0; i < desc.components().size(); ++i)
                comps.push_back(random_principal_unit(desc.components()[i], rng));
            return RingElement::product(desc, std::move(comps));
        }
        default: return c;
    }
}

inline RingMatrix random_unitriangular(size_t n, const RingDescriptor& desc, Rng& rng,
                                       bool upper) {
    RingMatrix m = RingMatrix::identity(n, desc);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (upper ? i < j : i > j) m.set(i, j, random_element(desc, rng));
        }
    return m;
}

/// Product of k alternating unipotent triangular matrices: SL_n by
/// construction, determinant exactly 1.
inline RingMatrix random_sl(size_t n, const RingDescriptor& desc, Rng& rng, int k) {
    RingMatrix m = RingMatrix::identity(n, desc);
    bool upper = true;
    for (int step = 0; step < k; ++step) {
        m = m * random_unitriangular(n, desc, rng, upper);
        upper = !upper;
    }
    return m;
}

/// 2x2 shear with one random parameter.
inline RingMatrix random_shear2(const RingDescriptor& desc, Rng& rng) {
    RingMatrix m = RingMatrix::identity(2, desc);
    if (rng.pick(0, 1) == 0)
        m.set(0, 1, random_element(desc, rng));
    else
        m.set(1, 0, random_element(desc, rng));
    return m;
}

} // namespace ringfactor::testing

#endif
