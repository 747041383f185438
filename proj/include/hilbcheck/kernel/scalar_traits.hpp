#pragma once

// Eigen glue for the exact scalar types.

#include <Eigen/Core>

#include <type_traits>

#include "hilbcheck/kernel/prime_field.hpp"
#include "hilbcheck/kernel/rational.hpp"
#include "hilbcheck/kernel/rational_function.hpp"
#include "hilbcheck/kernel/univariate.hpp"

namespace hilbcheck {

template <class K>
struct is_field : std::false_type {};
template <>
struct is_field<Rational> : std::true_type {};
template <>
struct is_field<Fp> : std::true_type {};
template <>
struct is_field<RatFunc> : std::true_type {};

template <class K>
inline constexpr bool is_field_v = is_field<K>::value;

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
inline RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }

}  // namespace hilbcheck

namespace Eigen {

namespace internal {
template <class T>
struct exact_num_traits {
    using Real = T;
    using NonInteger = T;
    using Literal = T;
    using Nested = T;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
    static inline T epsilon() { return T(0); }
    static inline T dummy_precision() { return T(0); }
    static inline int digits10() { return 0; }
    static inline T highest() { return T(0); }
    static inline T lowest() { return T(0); }
};
}  // namespace internal

template <>
struct NumTraits<hilbcheck::Rational> : internal::exact_num_traits<hilbcheck::Rational> {};
template <>
struct NumTraits<hilbcheck::Fp> : internal::exact_num_traits<hilbcheck::Fp> {};
template <>
struct NumTraits<hilbcheck::UPoly> : internal::exact_num_traits<hilbcheck::UPoly> {};
template <>
struct NumTraits<hilbcheck::RatFunc> : internal::exact_num_traits<hilbcheck::RatFunc> {};

}  // namespace Eigen
