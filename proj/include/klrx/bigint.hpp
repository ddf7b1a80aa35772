#ifndef KLRX_BIGINT_HPP
#define KLRX_BIGINT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace klrx {

using Int = mpz_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int binom2(long n) { return n < 2 ? Int(0) : Int(n) * (n - 1) / 2; }

inline std::string int_str(const Int& v) { return v.get_str(); }

}  // namespace klrx

#endif
