#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dld {

/* exact arithmetic for resolution certificates: arbitrary-precision integers
   and rationals kept in lowest terms with positive denominator */
using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint rat_num(const rational& r) { return boost::multiprecision::numerator(r); }
inline bigint rat_den(const rational& r) { return boost::multiprecision::denominator(r); }

/* "num/den" in lowest terms, e.g. "1/2", "1024/1" */
inline std::string rat_str(const rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

} // namespace dld
