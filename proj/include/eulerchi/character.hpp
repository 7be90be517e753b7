// Dirichlet characters of odd modulus d with exact root-of-unity values.
//
// The unit group (Z/d)^* decomposes as a product of cyclic groups, one per
// odd prime power in d; a character is a tuple of exponents, one per
// component, describing the image of that component's generator. All
// characters mod d take values in the single field Q(zeta_e), where e is the
// exponent of the unit group (lcm of component orders), so values of
// different characters are directly comparable.
//
// Indexing is fixed so results are reproducible: components in ascending
// prime order, generators the smallest primitive roots, exponent tuples
// flattened mixed-radix with the last component fastest. Index 0 is always
// the principal character.

#pragma once

#include <memory>
#include <vector>

#include "eulerchi/cyclotomic.hpp"

namespace eulerchi {

struct UnitGroupComponent {
    unsigned long prime;
    unsigned exponent;
    unsigned long prime_power;  // prime^exponent
    unsigned long generator;    // generates (Z/prime_power)^*
    unsigned long order;        // phi(prime_power)
};

class UnitGroupStructure {
public:
    // Factors d and finds component generators. Rejects even or zero d.
    static std::shared_ptr<const UnitGroupStructure> analyze(unsigned long modulus);

    unsigned long modulus() const { return modulus_; }
    const std::vector<UnitGroupComponent>& components() const { return components_; }
    unsigned long group_order() const { return group_order_; }        // phi(d)
    unsigned long group_exponent() const { return group_exponent_; }  // lcm of orders, 1 for d=1

private:
    UnitGroupStructure() = default;

    unsigned long modulus_ = 1;
    std::vector<UnitGroupComponent> components_;
    unsigned long group_order_ = 1;
    unsigned long group_exponent_ = 1;
};

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupStructure> structure,
                       std::vector<unsigned long> exponents);

    unsigned long modulus() const { return structure_->modulus(); }
    unsigned long index() const { return flat_index_; }
    const std::vector<unsigned long>& exponents() const { return exponents_; }
    const std::shared_ptr<const UnitGroupStructure>& structure() const { return structure_; }
    const FieldPtr& value_field() const { return field_; }

    // chi(l mod d); zero when gcd(l, d) > 1, identically 1 when d = 1.
    const CycloElement& operator()(unsigned long long l) const {
        return values_[static_cast<std::size_t>(l % modulus())];
    }

    unsigned long order() const;  // multiplicative order in the character group
    bool is_principal() const;

private:
    std::shared_ptr<const UnitGroupStructure> structure_;
    std::vector<unsigned long> exponents_;
    FieldPtr field_;
    unsigned long flat_index_;
    std::vector<CycloElement> values_;  // chi(0..d-1), fixed at construction
};

// All phi(d) characters mod d, ordered by flat index ascending.
std::vector<DirichletCharacter> enumerate_characters(unsigned long modulus);

// Single character by flat index; throws std::out_of_range past phi(d)-1.
DirichletCharacter character_at(unsigned long modulus, unsigned long index);

}  // namespace eulerchi
