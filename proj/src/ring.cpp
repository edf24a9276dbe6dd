#include "qcmp/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qcmp {

namespace {

void check_compatible(const RingElement& a, const RingElement& b) {
    if (a.m() != b.m() || !(a.field() == b.field())) {
        throw DimensionMismatch("ring elements live in different rings (m=" + std::to_string(a.m()) +
                                ",q=" + std::to_string(a.field().q()) + " vs m=" + std::to_string(b.m()) +
                                ",q=" + std::to_string(b.field().q()) + ")");
    }
}

}  // namespace

RingElement::RingElement(Poly p, int m, const FieldSpec& F)
    : poly_(poly_mod_xm1(p, m, F)), m_(m), field_(F) {
    if (m < 1) throw DimensionMismatch("ring length must be positive, got " + std::to_string(m));
}

RingElement ring_zero(int m, const FieldSpec& F) { return RingElement(Poly::zero(), m, F); }
RingElement ring_one(int m, const FieldSpec& F) { return RingElement(Poly::one(), m, F); }

RingElement ring_add(const RingElement& a, const RingElement& b) {
    check_compatible(a, b);
    return RingElement(poly_add(a.poly(), b.poly(), a.field()), a.m(), a.field());
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    check_compatible(a, b);
    return RingElement(poly_sub(a.poly(), b.poly(), a.field()), a.m(), a.field());
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    check_compatible(a, b);
    return RingElement(poly_mul(a.poly(), b.poly(), a.field()), a.m(), a.field());
}

RingElement ring_shift(const RingElement& a, int t) {
    int m = a.m();
    t %= m;
    if (t < 0) t += m;
    if (t == 0) return a;
    std::vector<uint32_t> c(static_cast<size_t>(m), 0);
    for (int i = 0; i <= a.poly().degree(); ++i) {
        c[static_cast<size_t>((i + t) % m)] = a.poly().coeff(i);
    }
    return RingElement(Poly(std::move(c)), m, a.field());
}

bool is_unit(const RingElement& a) {
    if (a.is_zero()) return false;
    return poly_gcd(a.poly(), xm_minus_1(a.m(), a.field()), a.field()) == Poly::one();
}

RingElement ring_inverse(const RingElement& a) {
    if (a.is_zero()) throw NotAUnit("0 is not a unit");
    PolyExtGcd e = poly_ext_gcd(a.poly(), xm_minus_1(a.m(), a.field()), a.field());
    if (!(e.g == Poly::one())) {
        throw NotAUnit("gcd(" + poly_to_text(a.poly(), a.field()) + ", x^" + std::to_string(a.m()) +
                       "-1) = " + poly_to_text(e.g, a.field()));
    }
    return RingElement(e.u, a.m(), a.field());
}

// ---------------------------------------------------------------------------
// Factorization of x^m - 1.
//
// With gcd(m, q) = 1 the modulus is squarefree and its irreducible factors
// correspond one-to-one to the q-cyclotomic cosets mod m: the factor for
// coset {c, cq, cq^2, ...} is prod_{i in coset} (X - beta^i) where beta is a
// primitive m-th root of unity in the splitting field F_{q^e}, e = ord_m(q).
// ---------------------------------------------------------------------------

namespace {

using FPoly = Poly;  // element of F_{q^e}, represented as a poly of degree < e

// Arithmetic in F_{q^e} = F_q[y]/(modulus), modulus irreducible of degree e.
struct ExtField {
    FieldSpec base;
    int e;
    Poly modulus;

    FPoly reduce(const Poly& p) const { return poly_divmod(p, modulus, base).remainder; }
    FPoly mul(const FPoly& a, const FPoly& b) const { return reduce(poly_mul(a, b, base)); }
    FPoly add(const FPoly& a, const FPoly& b) const { return poly_add(a, b, base); }
    FPoly sub(const FPoly& a, const FPoly& b) const { return poly_sub(a, b, base); }

    FPoly pow(FPoly a, unsigned __int128 n) const {
        FPoly r = Poly::one();
        while (n != 0) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }
};

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

int multiplicative_order(uint32_t q, int m) {
    int64_t v = q % m;
    int e = 1;
    while (v != 1) {
        v = v * (q % m) % m;
        ++e;
        if (e > m) throw GcdNotOne("q has no multiplicative order mod m");
    }
    return e;
}

// Monic polynomial of degree e over F_q encoded by a counter: low-order
// coefficients are the base-q digits of the counter.
Poly monic_from_counter(uint64_t counter, int e, const FieldSpec& F) {
    std::vector<uint32_t> c(static_cast<size_t>(e) + 1, 0);
    for (int i = 0; i < e && counter != 0; ++i) {
        c[static_cast<size_t>(i)] = static_cast<uint32_t>(counter % F.q());
        counter /= F.q();
    }
    c[static_cast<size_t>(e)] = 1;
    return Poly(std::move(c));
}

// Rabin irreducibility test: f (monic, degree e) is irreducible over F_q iff
// x^(q^e) == x (mod f) and gcd(x^(q^(e/p)) - x, f) = 1 for every prime p | e.
bool is_irreducible(const Poly& f, int e, const FieldSpec& F) {
    Poly x = Poly::monomial(1);
    auto frobenius_iterate = [&](int times) {
        // x^(q^times) mod f by repeatedly raising to the q-th power
        ExtField K{F, e, f};
        FPoly y = x;
        for (int i = 0; i < times; ++i) y = K.pow(y, F.q());
        return y;
    };
    if (!(frobenius_iterate(e) == poly_divmod(x, f, F).remainder)) return false;
    for (int p : prime_divisors(e)) {
        Poly z = poly_sub(frobenius_iterate(e / p), x, F);
        Poly z_mod = poly_divmod(z, f, F).remainder;
        if (z_mod.is_zero()) return false;
        if (!(poly_gcd(z_mod, f, F) == Poly::one())) return false;
    }
    return true;
}

Poly find_irreducible(int e, const FieldSpec& F) {
    if (e == 1) return Poly::monomial(1);  // F_q itself; elements are constants
    for (uint64_t counter = 0;; ++counter) {
        Poly f = monic_from_counter(counter, e, F);
        if (f.coeff(0) == 0) continue;  // reducible: divisible by x
        if (is_irreducible(f, e, F)) return f;
    }
}

// Deterministic search for an element of multiplicative order exactly m.
FPoly find_order_m_element(const ExtField& K, int m) {
    unsigned __int128 qe = 1;
    for (int i = 0; i < K.e; ++i) {
        if (qe > (static_cast<unsigned __int128>(1) << 120) / K.base.q()) {
            throw Unsupported("splitting field F_q^e too large (q=" + std::to_string(K.base.q()) +
                              ", e=" + std::to_string(K.e) + ")");
        }
        qe *= K.base.q();
    }
    unsigned __int128 cofactor = (qe - 1) / static_cast<unsigned __int128>(m);
    std::vector<int> m_primes = prime_divisors(m);
    for (uint64_t counter = 1;; ++counter) {
        // counter encodes a nonzero field element, base-q digits
        std::vector<uint32_t> c;
        uint64_t v = counter;
        while (v != 0) {
            c.push_back(static_cast<uint32_t>(v % K.base.q()));
            v /= K.base.q();
        }
        if (static_cast<int>(c.size()) > K.e) {
            throw Unsupported("exhausted splitting field without finding an order-m element");
        }
        FPoly gamma = Poly(std::move(c));
        FPoly beta = K.pow(gamma, cofactor);
        if (beta.is_zero() || beta == Poly::one()) continue;
        bool full_order = true;
        for (int p : m_primes) {
            if (K.pow(beta, static_cast<unsigned __int128>(m / p)) == Poly::one()) {
                full_order = false;
                break;
            }
        }
        if (full_order) return beta;
    }
}

std::vector<std::vector<int>> cyclotomic_cosets(uint32_t q, int m) {
    std::vector<std::vector<int>> cosets;
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (int start = 0; start < m; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> coset;
        int64_t v = start;
        do {
            coset.push_back(static_cast<int>(v));
            seen[static_cast<size_t>(v)] = true;
            v = v * (q % m) % m;
        } while (v != start);
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

}  // namespace

std::vector<Poly> factor_xm_minus_1(int m, const FieldSpec& F) {
    if (m < 1) throw DimensionMismatch("length must be positive");
    if (m % static_cast<int>(F.q()) == 0) {
        throw GcdNotOne("gcd(m, q) != 1 for m=" + std::to_string(m) + ", q=" + std::to_string(F.q()));
    }
    if (m == 1) {
        return {xm_minus_1(1, F)};  // x - 1
    }

    int e = multiplicative_order(F.q(), m);
    ExtField K{F, e, find_irreducible(e, F)};
    FPoly beta = find_order_m_element(K, m);

    // powers beta^0 .. beta^(m-1)
    std::vector<FPoly> beta_pow(static_cast<size_t>(m));
    beta_pow[0] = Poly::one();
    for (int i = 1; i < m; ++i) beta_pow[static_cast<size_t>(i)] = K.mul(beta_pow[static_cast<size_t>(i - 1)], beta);

    std::vector<Poly> factors;
    for (const std::vector<int>& coset : cyclotomic_cosets(F.q(), m)) {
        // prod_{i in coset} (X - beta^i), coefficients in F_{q^e}
        std::vector<FPoly> prod = {Poly::one()};
        for (int i : coset) {
            std::vector<FPoly> next(prod.size() + 1, Poly::zero());
            for (size_t j = 0; j < prod.size(); ++j) {
                next[j + 1] = K.add(next[j + 1], prod[j]);
                next[j] = K.sub(next[j], K.mul(beta_pow[static_cast<size_t>(i)], prod[j]));
            }
            prod = std::move(next);
        }
        // descend to the base field; Galois invariance guarantees constants
        std::vector<uint32_t> coeffs(prod.size(), 0);
        for (size_t j = 0; j < prod.size(); ++j) {
            if (prod[j].degree() > 0) {
                throw Unsupported("internal error: minimal polynomial coefficient outside the base field");
            }
            coeffs[j] = prod[j].coeff(0);
        }
        factors.emplace_back(std::move(coeffs));
    }

    std::sort(factors.begin(), factors.end(), [&](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return poly_to_text(a, F) < poly_to_text(b, F);
    });

    // exactness check: the factors must multiply back to the modulus
    Poly prod = Poly::one();
    for (const Poly& f : factors) prod = poly_mul(prod, f, F);
    if (!(prod == xm_minus_1(m, F))) {
        throw Unsupported("internal error: factor product does not equal x^m - 1");
    }
    return factors;
}

}  // namespace qcmp
