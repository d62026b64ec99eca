#ifndef CHERED_FPPOLY_HPP
#define CHERED_FPPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chered/modarith.hpp"

namespace chered {

// Dense univariate polynomial over F_p. The zero polynomial has an empty
// coefficient vector; otherwise the top coefficient is nonzero.
class FpPoly {
public:
    FpPoly() = default;  // zero with unset modulus; usable only as a placeholder
    FpPoly(uint32_t p, std::vector<uint32_t> coeffs);

    static FpPoly zero(uint32_t p) { return FpPoly(p, {}); }
    static FpPoly constant(uint32_t p, int64_t v);
    static FpPoly one(uint32_t p) { return constant(p, 1); }
    static FpPoly gen(uint32_t p) { return FpPoly(p, {0, 1}); }  // the variable

    uint32_t modulus() const { return p_; }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    uint32_t lead() const { return c_.back(); }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly scaled(uint32_t s) const;
    bool operator==(const FpPoly& o) const;
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

    // quotient and remainder; divisor must be nonzero
    std::pair<FpPoly, FpPoly> divrem(const FpPoly& divisor) const;
    FpPoly monic() const;

    uint32_t eval(uint32_t a) const;  // Horner over F_p

    // Horner over any field element with of_int embedding x.of_int(v)
    template <class K>
    K eval_at(const K& x) const {
        K acc = x.of_int(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + x.of_int(int64_t(c_[i]));
        return acc;
    }

    std::string str(char var = 'c') const;

private:
    void trim();
    uint32_t p_ = 0;
    std::vector<uint32_t> c_;
};

// monic gcd; gcd(0, 0) = 0
FpPoly poly_gcd(FpPoly a, FpPoly b);

}  // namespace chered

#endif
