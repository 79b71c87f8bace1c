#pragma once

#include <random>
#include <vector>

#include "doctest.h"
#include "hecke/numfield.hpp"

namespace hecke::testing {

inline field_element fe(const field& f, std::vector<mpq_class> c) { return field_element(f, std::move(c)); }
inline field_element fe(const field& f, long v) { return field_element(f, v); }

/// (a + b√D) / den with a, b, den in K.
inline quad_element quad(const field_element& a, const field_element& b, const field_element& d,
                         long den = 1)
{
    mpq_class inv(1, den);
    return quad_element(a * inv, b * inv, d);
}

inline field_element random_element(const field& f, std::mt19937& rng, int bound = 5, int den = 3)
{
    std::uniform_int_distribution<int> num(-bound, bound), dd(1, den);
    std::vector<mpq_class> c(f->degree());
    for (auto& x : c) {
        x = mpq_class(num(rng), dd(rng));
        x.canonicalize();
    }
    return field_element(f, c);
}

inline field_element random_integral(const field& f, std::mt19937& rng, int bound = 4)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::vector<mpq_class> c(f->degree());
    for (auto& x : c)
        x = num(rng);
    return field_element(f, c);
}

} // namespace hecke::testing

namespace doctest {
template <>
struct StringMaker<hecke::quad_element> {
    static String convert(const hecke::quad_element& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<hecke::field_element> {
    static String convert(const hecke::field_element& x) { return x.to_string().c_str(); }
};
} // namespace doctest
