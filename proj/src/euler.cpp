#include "eulerchi/euler.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace eulerchi {

namespace {

// sum_{a=0}^{count-1} chi(a) (-1)^a e^{(a*step)t} truncated at max_n,
// optionally with the character factor suppressed (for the plain
// alternating sum of exponentials in the product form of the character
// sum series).
TruncatedSeries<CycloElement> alternating_exponential_sum(const DirichletCharacter& chi,
                                                          unsigned long long count,
                                                          unsigned long long step,
                                                          unsigned max_n, bool with_chi) {
    const FieldPtr& field = chi.value_field();
    std::vector<CycloElement> coeffs(max_n + 1, CycloElement::zero(field));
    // powers[a] tracks (a*step)^k across k.
    std::vector<Rational> powers(static_cast<std::size_t>(count), Rational(1));
    Rational inv_fact(1);
    for (unsigned k = 0; k <= max_n; ++k) {
        if (k > 0) {
            inv_fact *= Rational(1, static_cast<long>(k));
            for (unsigned long long a = 0; a < count; ++a) {
                powers[a] *= Rational(static_cast<long>(a * step));
            }
        }
        CycloElement acc = CycloElement::zero(field);
        for (unsigned long long a = 0; a < count; ++a) {
            const Rational signed_power = (a % 2 == 0) ? powers[a] : -powers[a];
            if (signed_power.is_zero()) continue;
            if (with_chi) {
                const CycloElement& value = chi(a);
                if (value.is_zero()) continue;
                acc += value * signed_power;
            } else {
                acc += CycloElement::from_rational(field, signed_power);
            }
        }
        coeffs[k] = acc * inv_fact;
    }
    return TruncatedSeries<CycloElement>(std::move(coeffs));
}

// (numerator / (e^{dt}+1))^m as ordinary coefficients, truncated at max_n.
TruncatedSeries<CycloElement> order_m_series(const DirichletCharacter& chi, unsigned long order,
                                             unsigned max_n) {
    const FieldPtr& field = chi.value_field();
    if (order == 0) {
        return TruncatedSeries<CycloElement>::constant(CycloElement::one(field), max_n);
    }
    const auto numerator = base_numerator_series(chi, max_n);

    // e^{dt} + 1
    const unsigned long d = chi.modulus();
    std::vector<CycloElement> den(max_n + 1, CycloElement::zero(field));
    den[0] = CycloElement::from_rational(field, Rational(2));
    Rational term(1);
    for (unsigned k = 1; k <= max_n; ++k) {
        term *= Rational(static_cast<long>(d), static_cast<long>(k));
        den[k] = CycloElement::from_rational(field, term);
    }

    const auto base = numerator * series_inverse(TruncatedSeries<CycloElement>(std::move(den)));
    return series_pow(base, order);
}

struct TableKey {
    unsigned long modulus;
    unsigned long index;
    unsigned long order;
    auto operator<=>(const TableKey&) const = default;
};

std::mutex table_mutex;
std::map<TableKey, std::vector<CycloElement>> table_cache;

}  // namespace

TruncatedSeries<CycloElement> base_numerator_series(const DirichletCharacter& chi,
                                                    unsigned max_n) {
    auto s = alternating_exponential_sum(chi, chi.modulus(), 1, max_n, true);
    std::vector<CycloElement> doubled;
    doubled.reserve(max_n + 1);
    for (unsigned k = 0; k <= max_n; ++k) {
        doubled.push_back(s.coeff(k) * Rational(2));
    }
    return TruncatedSeries<CycloElement>(std::move(doubled));
}

EulerTable euler_numbers(const DirichletCharacter& chi, unsigned long order, unsigned max_n) {
    const TableKey key{chi.modulus(), chi.index(), order};
    {
        std::lock_guard<std::mutex> lock(table_mutex);
        auto it = table_cache.find(key);
        if (it != table_cache.end() && it->second.size() > max_n) {
            return EulerTable{chi, order,
                              std::vector<CycloElement>(it->second.begin(),
                                                        it->second.begin() + max_n + 1)};
        }
    }

    const auto series = order_m_series(chi, order, max_n);
    std::vector<CycloElement> numbers;
    numbers.reserve(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        numbers.push_back(egf_coefficient(series, n));
    }

    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = table_cache.find(key);
    if (it == table_cache.end() || it->second.size() < numbers.size()) {
        table_cache[key] = numbers;
    }
    return EulerTable{chi, order, std::move(numbers)};
}

void seed_euler_table(const DirichletCharacter& chi, unsigned long order,
                      std::vector<CycloElement> numbers) {
    if (numbers.empty()) return;
    for (const auto& z : numbers) {
        if (z.field() != chi.value_field()) {
            throw std::invalid_argument("seed_euler_table: value field mismatch");
        }
    }
    const TableKey key{chi.modulus(), chi.index(), order};
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = table_cache.find(key);
    if (it == table_cache.end() || it->second.size() < numbers.size()) {
        table_cache[key] = std::move(numbers);
    }
}

UnivariatePolynomial euler_polynomial(const DirichletCharacter& chi, unsigned long order,
                                      unsigned n) {
    const auto table = euler_numbers(chi, order, n);
    const FieldPtr& field = chi.value_field();
    std::vector<CycloElement> coeffs(n + 1, CycloElement::zero(field));
    for (unsigned l = 0; l <= n; ++l) {
        coeffs[n - l] = table.numbers[l] * binomial(n, l);
    }
    return UnivariatePolynomial(field, std::move(coeffs));
}

UnivariatePolynomial euler_polynomial_via_series(const DirichletCharacter& chi,
                                                 unsigned long order, unsigned n) {
    const FieldPtr& field = chi.value_field();
    const auto scalar_series = order_m_series(chi, order, n);

    // Lift to polynomial coefficients and multiply by the symbolic e^{xt}.
    std::vector<UnivariatePolynomial> lifted;
    lifted.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        lifted.push_back(UnivariatePolynomial::constant(scalar_series.coeff(k)));
    }
    const TruncatedSeries<UnivariatePolynomial> gf(std::move(lifted));
    const auto exp_xt = exp_series(UnivariatePolynomial::variable(field), n);
    return egf_coefficient(gf * exp_xt, n);
}

CycloElement power_sum(const DirichletCharacter& chi, unsigned long k, unsigned long long n) {
    const FieldPtr& field = chi.value_field();
    CycloElement acc = CycloElement::zero(field);
    for (unsigned long long l = 0; l <= n; ++l) {
        const CycloElement& value = chi(l);
        if (value.is_zero()) continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(l), k);  // 0^0 == 1
        const Rational weight = (l % 2 == 0) ? Rational(p) : -Rational(p);
        acc += value * weight;
    }
    return acc;
}

Eq4Report eq4_sides(const DirichletCharacter& chi, unsigned long k, unsigned long long n) {
    if (n == 0) {
        throw std::invalid_argument("eq4: n must be positive");
    }
    const auto table = euler_numbers(chi, 1, static_cast<unsigned>(k));
    const auto poly = euler_polynomial(chi, 1, static_cast<unsigned>(k));
    mpz_class nd_int = mpz_class(static_cast<unsigned long>(n)) * chi.modulus();
    const Rational nd(nd_int);
    const CycloElement lhs = poly.evaluate(nd) + table.numbers[k];
    const CycloElement rhs =
        power_sum(chi, k, n * chi.modulus() - 1) * Rational(2);
    return Eq4Report{k, n, lhs, rhs, lhs == rhs};
}

Eq4Report check_eq4(const DirichletCharacter& chi, unsigned long k, unsigned long long n) {
    if (n % 2 == 0) {
        throw std::invalid_argument("check_eq4: n must be odd");
    }
    return eq4_sides(chi, k, n);
}

TruncatedSeries<CycloElement> alternating_character_sum_series(const DirichletCharacter& chi,
                                                               unsigned long w, unsigned max_n) {
    if (w % 2 == 0 || w == 0) {
        throw std::invalid_argument("alternating_character_sum_series: w must be odd");
    }
    return alternating_exponential_sum(chi, static_cast<unsigned long long>(w) * chi.modulus(),
                                       1, max_n, true);
}

TruncatedSeries<CycloElement> alternating_character_sum_series_product(
    const DirichletCharacter& chi, unsigned long w, unsigned max_n) {
    if (w % 2 == 0 || w == 0) {
        throw std::invalid_argument("alternating_character_sum_series: w must be odd");
    }
    const auto outer = alternating_exponential_sum(chi, w, chi.modulus(), max_n, false);
    const auto inner = alternating_exponential_sum(chi, chi.modulus(), 1, max_n, true);
    return outer * inner;
}

}  // namespace eulerchi
