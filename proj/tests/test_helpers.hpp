#pragma once

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "eulerchi/cyclotomic.hpp"
#include "eulerchi/rational.hpp"
#include "eulerchi/series.hpp"

namespace testutil {

using eulerchi::CycloElement;
using eulerchi::FieldPtr;
using eulerchi::Rational;

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline std::vector<Rational> qvec(std::initializer_list<std::pair<long, long>> items) {
    std::vector<Rational> out;
    for (const auto& [n, d] : items) out.emplace_back(n, d);
    return out;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 6);
    return Rational(num(rng), den(rng));
}

inline CycloElement random_cyclo(const FieldPtr& field, std::mt19937& rng) {
    std::vector<Rational> coeffs;
    coeffs.reserve(field->degree());
    for (unsigned long i = 0; i < field->degree(); ++i) coeffs.push_back(random_rational(rng));
    return CycloElement(field, std::move(coeffs));
}

struct CommandResult {
    int exit_code;
    std::string output;
};

// Runs a shell command, capturing stdout; command is responsible for any
// stderr redirection it wants.
inline CommandResult run_command(const std::string& command) {
    CommandResult result{-1, {}};
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace testutil
