#ifndef KLRX_LAURENT_HPP
#define KLRX_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "klrx/bigint.hpp"

namespace klrx {

// Integer Laurent polynomial in q, optionally truncated: a value with
// bound B has correct coefficients for exponents <= B and unknown ones
// above. Exact values carry no bound. No zero coefficient is stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    static LaurentPoly monomial(Int coeff, int exp);
    static LaurentPoly q();
    static LaurentPoly one() { return LaurentPoly(Int(1)); }
    static LaurentPoly zero() { return LaurentPoly(); }

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    std::optional<int> bound() const { return bound_; }
    bool truncated() const { return bound_.has_value(); }
    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(int exp) const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero

    LaurentPoly truncate(int bound) const;
    LaurentPoly shift(int k) const;  // multiply by q^k
    LaurentPoly bar() const;         // q <-> q^-1 (exact values only)
    bool nonneg() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Int& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Equality of all coefficients up to the common bound.
    bool eq_to_bound(const LaurentPoly& o) const;

    // Exact division by a Laurent polynomial; throws Error on nonzero
    // remainder. Divisor must be exact and nonzero.
    LaurentPoly exact_div(const LaurentPoly& d) const;

    // Series division: divisor must have unit lowest coefficient (+-1).
    // Result truncated at `bound` (or tighter if *this is truncated).
    LaurentPoly series_div(const LaurentPoly& d, int bound) const;

    std::string str() const;

  private:
    void strip();
    std::map<int, Int> coeffs_;
    std::optional<int> bound_;
};

enum class QVariant { Plain, Plus, Minus };

LaurentPoly qint(int n, QVariant v = QVariant::Plain);
LaurentPoly qfact(int n, QVariant v = QVariant::Plain);
LaurentPoly qbinom(int n, int m, QVariant v = QVariant::Plain);

// Graded rank of a free polynomial ring on `nvars` degree-2 generators,
// truncated at `bound`.
LaurentPoly qdim_poly(int nvars, int bound);
// Graded rank of symmetric polynomials in k degree-2 variables.
LaurentPoly qdim_sym(int k, int bound);

// Graded rank: a Laurent value with nonnegative coefficients.
struct GradedRank {
    LaurentPoly value;
    explicit GradedRank(LaurentPoly v);
};

}  // namespace klrx

#endif
