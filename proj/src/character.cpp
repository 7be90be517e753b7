#include "eulerchi/character.hpp"

#include <numeric>
#include <stdexcept>

namespace eulerchi {

namespace {

unsigned long mul_mod(unsigned long a, unsigned long b, unsigned long m) {
    return static_cast<unsigned long>(
        (static_cast<unsigned long long>(a) * b) % m);
}

unsigned long pow_mod(unsigned long base, unsigned long e, unsigned long m) {
    unsigned long r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Smallest primitive root mod an odd prime p.
unsigned long primitive_root_mod_prime(unsigned long p) {
    const auto qs = prime_factors(p - 1);
    for (unsigned long g = 2; g < p; ++g) {
        bool ok = true;
        for (unsigned long q : qs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive root search failed");
}

// Brute-force discrete log of u to base g in (Z/m)^*, order small.
unsigned long discrete_log(unsigned long u, unsigned long g, unsigned long m,
                           unsigned long order) {
    unsigned long acc = 1 % m;
    for (unsigned long t = 0; t < order; ++t) {
        if (acc == u % m) return t;
        acc = mul_mod(acc, g, m);
    }
    throw std::logic_error("discrete log failed: element not in the cyclic group");
}

}  // namespace

// ---------------------------------------------------------------------------
// UnitGroupStructure
// ---------------------------------------------------------------------------

std::shared_ptr<const UnitGroupStructure> UnitGroupStructure::analyze(unsigned long modulus) {
    if (modulus == 0 || modulus % 2 == 0) {
        throw std::invalid_argument("modulus must be a positive odd integer");
    }
    auto s = std::shared_ptr<UnitGroupStructure>(new UnitGroupStructure());
    s->modulus_ = modulus;

    unsigned long n = modulus;
    for (unsigned long p = 3; p * p <= n; p += 2) {
        if (n % p) continue;
        unsigned exponent = 0;
        unsigned long pk = 1;
        while (n % p == 0) {
            n /= p;
            ++exponent;
            pk *= p;
        }
        s->components_.push_back({p, exponent, pk, 0, 0});
    }
    if (n > 1) s->components_.push_back({n, 1, n, 0, 0});

    for (auto& c : s->components_) {
        unsigned long g = primitive_root_mod_prime(c.prime);
        if (c.exponent > 1) {
            // g lifts to a generator of (Z/p^k)^* unless g^(p-1) == 1 mod p^2.
            if (pow_mod(g, c.prime - 1, c.prime * c.prime) == 1) {
                g += c.prime;
            }
        }
        c.generator = g;
        c.order = euler_phi(c.prime_power);
        s->group_order_ *= c.order;
        s->group_exponent_ = std::lcm(s->group_exponent_, c.order);
    }
    return s;
}

// ---------------------------------------------------------------------------
// DirichletCharacter
// ---------------------------------------------------------------------------

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> structure,
                                       std::vector<unsigned long> exponents)
    : structure_(std::move(structure)), exponents_(std::move(exponents)) {
    const auto& comps = structure_->components();
    if (exponents_.size() != comps.size()) {
        throw std::invalid_argument("character exponent tuple has wrong arity");
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (exponents_[i] >= comps[i].order) {
            throw std::invalid_argument("character exponent out of range");
        }
    }

    const unsigned long e = structure_->group_exponent();
    field_ = CycloField::get(e);

    flat_index_ = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        flat_index_ = flat_index_ * comps[i].order + exponents_[i];
    }

    // Value table on 0..d-1. Components are tiny, brute-force logs suffice.
    const unsigned long d = structure_->modulus();
    values_.reserve(d);
    for (unsigned long l = 0; l < d; ++l) {
        if (d == 1) {
            values_.push_back(CycloElement::one(field_));
            continue;
        }
        if (std::gcd(l, d) != 1) {
            values_.push_back(CycloElement::zero(field_));
            continue;
        }
        unsigned long long s = 0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const auto& c = comps[i];
            const unsigned long t = discrete_log(l % c.prime_power, c.generator,
                                                 c.prime_power, c.order);
            s += static_cast<unsigned long long>(exponents_[i]) * t * (e / c.order);
        }
        values_.push_back(zeta_power(field_, static_cast<long long>(s % e)));
    }
}

unsigned long DirichletCharacter::order() const {
    unsigned long ord = 1;
    const auto& comps = structure_->components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        ord = std::lcm(ord, comps[i].order / std::gcd(exponents_[i], comps[i].order));
    }
    return ord;
}

bool DirichletCharacter::is_principal() const {
    for (unsigned long a : exponents_) {
        if (a != 0) return false;
    }
    return true;
}

std::vector<DirichletCharacter> enumerate_characters(unsigned long modulus) {
    const auto structure = UnitGroupStructure::analyze(modulus);
    const auto& comps = structure->components();
    const unsigned long count = structure->group_order();

    std::vector<DirichletCharacter> chars;
    chars.reserve(count);
    for (unsigned long idx = 0; idx < count; ++idx) {
        // Decode mixed radix, last component fastest.
        std::vector<unsigned long> exps(comps.size());
        unsigned long rest = idx;
        for (std::size_t i = comps.size(); i-- > 0;) {
            exps[i] = rest % comps[i].order;
            rest /= comps[i].order;
        }
        chars.emplace_back(structure, std::move(exps));
    }
    return chars;
}

DirichletCharacter character_at(unsigned long modulus, unsigned long index) {
    const auto structure = UnitGroupStructure::analyze(modulus);
    if (index >= structure->group_order()) {
        throw std::out_of_range("character index out of range (must be < phi(d))");
    }
    std::vector<unsigned long> exps(structure->components().size());
    unsigned long rest = index;
    for (std::size_t i = exps.size(); i-- > 0;) {
        exps[i] = rest % structure->components()[i].order;
        rest /= structure->components()[i].order;
    }
    return DirichletCharacter(structure, std::move(exps));
}

}  // namespace eulerchi
