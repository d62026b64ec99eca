#include "chered/fq.hpp"

#include <array>

namespace chered {

FqCtx::FqCtx(uint32_t p_in, FpPoly modulus_in) : p(p_in), k(0), modulus(std::move(modulus_in)) {
    if (!is_prime_u32(p)) throw InvalidArgument("FqCtx: p must be prime");
    if (modulus.modulus() != p) throw DomainMismatch("FqCtx: modulus polynomial over wrong prime");
    if (modulus.degree() < 1) throw InvalidArgument("FqCtx: modulus must have degree >= 1");
    if (modulus.lead() != 1) throw InvalidArgument("FqCtx: modulus must be monic");
    if (!is_irreducible(modulus)) throw InvalidArgument("FqCtx: modulus " + modulus.str('t') + " is reducible");
    k = uint32_t(modulus.degree());
}

bool is_irreducible(const FpPoly& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    uint32_t p = f.modulus();
    // no roots
    for (uint32_t a = 0; a < p; ++a)
        if (f.eval(a) == 0) return false;
    // no monic divisor of degree 2..d/2 (enumerate all monic candidates)
    for (int dd = 2; dd <= d / 2; ++dd) {
        uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<uint32_t> c(size_t(dd) + 1, 0);
            uint64_t t = code;
            for (int i = 0; i < dd; ++i) {
                c[size_t(i)] = uint32_t(t % p);
                t /= p;
            }
            c[size_t(dd)] = 1;
            if (f.divrem(FpPoly(p, c)).second.is_zero()) return false;
        }
    }
    return true;
}

FpPoly first_irreducible_search(uint32_t p, uint32_t k) {
    if (k == 0) throw InvalidArgument("extension degree must be >= 1");
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        std::vector<uint32_t> c(size_t(k) + 1, 0);
        uint64_t t = code;
        for (uint32_t i = 0; i < k; ++i) {
            c[i] = uint32_t(t % p);
            t /= p;
        }
        c[k] = 1;
        FpPoly f(p, c);
        if (is_irreducible(f)) return f;
    }
    throw InternalError("no irreducible polynomial found");  // unreachable
}

namespace {
struct TableEntry {
    uint32_t p, k;
    std::array<uint32_t, 8> low;  // coefficients of t^0..t^{k-1}; top coefficient is 1
};
// first-in-lexicographic-order irreducibles for the desk-scale pairs; pinned
// for reproducibility and re-validated at context construction
constexpr TableEntry kModulusTable[] = {
    {2, 2, {1, 1}},           // t^2+t+1
    {2, 3, {1, 1}},           // t^3+t+1
    {2, 6, {1, 1}},           // t^6+t+1
    {3, 2, {1, 0}},           // t^2+1
    {3, 4, {2, 1}},           // t^4+t+2
    {5, 2, {2, 0}},           // t^2+2
    {5, 3, {1, 1}},           // t^3+t+1
    {7, 2, {1, 0}},           // t^2+1
    {7, 3, {2, 0}},           // t^3+2
    {11, 2, {1, 0}},          // t^2+1
    {13, 2, {2, 0}},          // t^2+2
};
}  // namespace

FpPoly irreducible_modulus(uint32_t p, uint32_t k) {
    for (const auto& e : kModulusTable) {
        if (e.p == p && e.k == k) {
            std::vector<uint32_t> c(size_t(k) + 1, 0);
            for (uint32_t i = 0; i < k; ++i) c[i] = e.low[i];
            c[k] = 1;
            return FpPoly(p, c);
        }
    }
    return first_irreducible_search(p, k);
}

FqCtxPtr make_fq_ctx(uint32_t p, uint32_t k) {
    return std::make_shared<const FqCtx>(p, irreducible_modulus(p, k));
}

FqCtxPtr make_fq_ctx(uint32_t p, FpPoly modulus) {
    return std::make_shared<const FqCtx>(p, std::move(modulus));
}

uint32_t ext_degree_for(uint32_t p, uint64_t bound) {
    uint32_t k = 1;
    uint64_t q = p;
    while (q < bound) {
        q *= p;
        ++k;
    }
    return k;
}

Fq::Fq(FqCtxPtr ctx, FpPoly rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {
    if (!ctx_) throw InvalidArgument("Fq: null context");
    if (rep_.degree() >= int(ctx_->k)) rep_ = rep_.divrem(ctx_->modulus).second;
}

Fq Fq::of_int(int64_t v) const {
    if (!ctx_) throw InvalidArgument("Fq::of_int on element without context");
    return Fq(ctx_, FpPoly::constant(ctx_->p, v));
}

FqCtxPtr Fq::join(const Fq& o) const {
    if (!ctx_) return o.ctx_;
    if (!o.ctx_) return ctx_;
    if (ctx_ != o.ctx_ && !ctx_->same(*o.ctx_))
        throw DomainMismatch("Fq: mixing different extension fields");
    return ctx_;
}

Fq Fq::operator+(const Fq& o) const {
    FqCtxPtr c = join(o);
    if (!c) return Fq();
    return Fq(c, rep_.is_zero() ? o.rep_ : (o.rep_.is_zero() ? rep_ : rep_ + o.rep_));
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator-() const {
    if (!ctx_) return Fq();
    return Fq(ctx_, -rep_);
}

Fq Fq::operator*(const Fq& o) const {
    FqCtxPtr c = join(o);
    if (!c) return Fq();
    if (rep_.is_zero() || o.rep_.is_zero()) return zero(c);
    return Fq(c, rep_ * o.rep_);
}

Fq Fq::inv() const {
    if (is_zero()) throw DivisionByZero("Fq: inverse of zero");
    // extended Euclid in F_p[t]: s*rep + t*modulus = gcd = const
    FpPoly r0 = ctx_->modulus, r1 = rep_;
    FpPoly s0 = FpPoly::zero(ctx_->p), s1 = FpPoly::one(ctx_->p);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        FpPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw InternalError("Fq: modulus not irreducible");
    return Fq(ctx_, s0.scaled(inv_mod(r0.lead(), ctx_->p)));
}

Fq Fq::operator/(const Fq& o) const {
    if (o.is_zero()) throw DivisionByZero("Fq: division by zero");
    return *this * o.inv();
}

bool Fq::operator==(const Fq& o) const {
    if (is_zero() && o.is_zero()) return true;
    join(o);  // domain check
    return rep_ == o.rep_;
}

}  // namespace chered
