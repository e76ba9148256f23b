#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace logarr {

// mpq_class keeps values canonical: lowest terms, positive denominator, 0 == 0/1.
using Rat = mpq_class;
using BigInt = mpz_class;

std::string to_string(const Rat& q);
std::string to_string(const BigInt& z);

/// Parses "a", "-a" or "a/b".  Throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& q);

/// Narrowing conversion; throws std::overflow_error if q is not an integer fitting in int64.
std::int64_t to_int64(const Rat& q);
std::int64_t to_int64(const BigInt& z);

BigInt binomial(long n, long k);

}  // namespace logarr
