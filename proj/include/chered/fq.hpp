#ifndef CHERED_FQ_HPP
#define CHERED_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chered/fppoly.hpp"

namespace chered {

// Parameters of an extension field F_{p^k} = F_p[t]/(modulus). Immutable and
// shared between all elements of one session.
struct FqCtx {
    uint32_t p;
    uint32_t k;
    FpPoly modulus;  // monic irreducible of degree k

    FqCtx(uint32_t p, FpPoly modulus);
    bool same(const FqCtx& o) const { return p == o.p && modulus == o.modulus; }
};

using FqCtxPtr = std::shared_ptr<const FqCtx>;

// validated monic irreducibility check (brute-force trial division)
bool is_irreducible(const FpPoly& f);

// deterministic modulus lookup: fixed table for the desk-scale (p, k) pairs,
// first-in-lexicographic-order search otherwise
FpPoly irreducible_modulus(uint32_t p, uint32_t k);
FpPoly first_irreducible_search(uint32_t p, uint32_t k);

FqCtxPtr make_fq_ctx(uint32_t p, uint32_t k);
FqCtxPtr make_fq_ctx(uint32_t p, FpPoly modulus);

// smallest k with p^k >= bound (used to pick extension degrees for random
// specializations of c)
uint32_t ext_degree_for(uint32_t p, uint64_t bound = 64);

// Element of F_{p^k}, stored as a residue of degree < k. Default-constructed
// elements are the zero of an unspecified domain.
class Fq {
public:
    Fq() = default;
    Fq(FqCtxPtr ctx, FpPoly rep);

    static Fq zero(const FqCtxPtr& ctx) { return Fq(ctx, FpPoly::zero(ctx->p)); }
    static Fq one(const FqCtxPtr& ctx) { return Fq(ctx, FpPoly::one(ctx->p)); }
    static Fq gen(const FqCtxPtr& ctx) { return Fq(ctx, FpPoly::gen(ctx->p)); }

    const FqCtxPtr& ctx() const { return ctx_; }
    const FpPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }

    Fq of_int(int64_t v) const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator-() const;
    Fq operator*(const Fq& o) const;
    Fq inv() const;
    Fq operator/(const Fq& o) const;
    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    std::string str() const { return rep_.str('t'); }

private:
    FqCtxPtr join(const Fq& o) const;
    FqCtxPtr ctx_;  // null for the weak zero
    FpPoly rep_;
};

}  // namespace chered

#endif
