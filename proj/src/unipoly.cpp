#include "dynprop/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "dynprop/errors.hpp"

namespace dynprop {

namespace {

// ---- Kronecker substitution over Z ----------------------------------------
//
// A polynomial with signed integer coefficients is evaluated at 2^w (w a
// multiple of 64, wide enough for any product coefficient plus two guard
// bits), the images are multiplied once in GMP, and the product coefficients
// are read back from balanced w-bit windows. The guard bits keep the packed
// image of a positive-leading polynomial nonnegative, so borrows never run
// off the top.

constexpr int kLimbBits = GMP_NUMB_BITS;
static_assert(GMP_NUMB_BITS == 64, "packing assumes 64-bit limbs");

size_t max_coeff_bits(const std::vector<Integer>& c) {
    size_t b = 1;
    for (const auto& v : c)
        if (v != 0) b = std::max(b, mpz_sizeinbase(v.get_mpz_t(), 2));
    return b;
}

void pack_into(const std::vector<Integer>& c, size_t window_limbs, std::vector<mp_limb_t>& buf) {
    const size_t wbits = window_limbs * kLimbBits;
    Integer chunk, two_w = Integer(1) << wbits;
    int borrow = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        chunk = c[i] + borrow;
        if (chunk < 0) {
            chunk += two_w;
            borrow = -1;
        } else {
            borrow = 0;
        }
        if (chunk != 0) {
            size_t count = 0;
            mpz_export(buf.data() + i * window_limbs, &count, -1, sizeof(mp_limb_t), 0, 0,
                       chunk.get_mpz_t());
        }
    }
    if (borrow != 0) throw InternalError("kronecker pack: negative image");
}

std::vector<Integer> mul_int_kronecker(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    const size_t na = a.size(), nb = b.size();
    const size_t min_n = std::min(na, nb);
    // product coefficient bound: |a|max * |b|max * min_n
    size_t result_bits = max_coeff_bits(a) + max_coeff_bits(b);
    size_t t = 1;
    while ((size_t(1) << t) < min_n) ++t;
    result_bits += t;
    const size_t wbits = ((result_bits + 2 + kLimbBits - 1) / kLimbBits + 1) * kLimbBits;
    const size_t window_limbs = wbits / kLimbBits;

    // make leading coefficients positive so the packed images are nonnegative
    int sign = 1;
    std::vector<Integer> aa = a, bb = b;
    if (aa.back() < 0) {
        sign = -sign;
        for (auto& v : aa) v = -v;
    }
    if (bb.back() < 0) {
        sign = -sign;
        for (auto& v : bb) v = -v;
    }

    std::vector<mp_limb_t> abuf(na * window_limbs, 0), bbuf(nb * window_limbs, 0);
    pack_into(aa, window_limbs, abuf);
    pack_into(bb, window_limbs, bbuf);
    Integer A, B, P;
    mpz_import(A.get_mpz_t(), abuf.size(), -1, sizeof(mp_limb_t), 0, 0, abuf.data());
    mpz_import(B.get_mpz_t(), bbuf.size(), -1, sizeof(mp_limb_t), 0, 0, bbuf.data());
    P = A * B;

    const size_t nc = na + nb - 1;
    std::vector<mp_limb_t> pbuf(nc * window_limbs + window_limbs, 0);
    size_t count = 0;
    mpz_export(pbuf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, P.get_mpz_t());

    std::vector<Integer> out(nc);
    Integer chunk, two_w = Integer(1) << wbits, half_w = Integer(1) << (wbits - 1);
    int carry = 0;
    for (size_t i = 0; i < nc; ++i) {
        mpz_import(chunk.get_mpz_t(), window_limbs, -1, sizeof(mp_limb_t), 0, 0,
                   pbuf.data() + i * window_limbs);
        chunk += carry;
        if (chunk >= half_w) {
            chunk -= two_w;
            carry = 1;
        } else {
            carry = 0;
        }
        out[i] = (sign < 0) ? Integer(-chunk) : chunk;
    }
    if (carry != 0) throw InternalError("kronecker unpack: dangling carry");
    return out;
}

std::vector<Rational> mul_schoolbook(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Integer denominator_lcm(const std::vector<Rational>& c) {
    Integer l = 1;
    for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    return l;
}

}  // namespace

UniPoly UniPoly::constant(const Rational& a) {
    if (a == 0) return UniPoly();
    return UniPoly(std::vector<Rational>{a});
}

UniPoly UniPoly::x() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

UniPoly UniPoly::from_coeffs(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

const Rational& UniPoly::coeff(long i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[i];
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw ContractError("leading coefficient of the zero polynomial");
    return c_.back();
}

const Rational& UniPoly::constant_term() const {
    static const Rational zero(0);
    return is_zero() ? zero : c_.front();
}

bool UniPoly::is_integer() const {
    for (const auto& v : c_)
        if (v.get_den() != 1) return false;
    return true;
}

bool UniPoly::is_monic() const { return !is_zero() && c_.back() == 1; }

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<Rational> c(std::max(c_.size(), rhs.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) c[i] += rhs.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly mul(const UniPoly& a, const UniPoly& b, long schoolbook_threshold) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    if (std::min(ca.size(), cb.size()) <= static_cast<size_t>(schoolbook_threshold))
        return UniPoly(mul_schoolbook(ca, cb));

    Integer da = denominator_lcm(ca), db = denominator_lcm(cb);
    std::vector<Integer> ia(ca.size()), ib(cb.size());
    for (size_t i = 0; i < ca.size(); ++i) ia[i] = Integer(ca[i] * da);
    for (size_t i = 0; i < cb.size(); ++i) ib[i] = Integer(cb[i] * db);
    std::vector<Integer> ic = mul_int_kronecker(ia, ib);
    Integer den = da * db;
    std::vector<Rational> out(ic.size());
    for (size_t i = 0; i < ic.size(); ++i) {
        if (den == 1) {
            out[i] = Rational(std::move(ic[i]));
        } else {
            out[i] = Rational(ic[i], den);
            out[i].canonicalize();
        }
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const { return mul(*this, rhs, Config{}.mul_schoolbook_threshold); }

UniPoly UniPoly::scaled(const Rational& a) const {
    if (a == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& v : r.c_) v *= a;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (degree() <= 0) return UniPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(c));
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
    if (is_zero()) return UniPoly();
    UniPoly r = UniPoly::constant(c_.back());
    for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) r = r * g + UniPoly::constant(*it);
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw ContractError("polynomial division by zero");
    if (num.degree() < den.degree()) return {UniPoly(), num};

    // integer monic fast path: no rational canonicalization in the loop
    if (den.is_monic() && den.is_integer() && num.is_integer()) {
        std::vector<Integer> r(num.c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = Integer(num.c_[i]);
        const long dd = den.degree();
        std::vector<Integer> d(dd + 1);
        for (long i = 0; i <= dd; ++i) d[i] = Integer(den.c_[i]);
        const long dq = num.degree() - dd;
        std::vector<Rational> q(dq + 1);
        for (long k = dq; k >= 0; --k) {
            Integer qk = r[k + dd];
            if (qk != 0)
                for (long i = 0; i < dd; ++i) r[k + i] -= qk * d[i];
            r[k + dd] = 0;
            q[k] = Rational(std::move(qk));
        }
        std::vector<Rational> rem(dd > 0 ? dd : 0);
        for (long i = 0; i < dd; ++i) rem[i] = Rational(r[i]);
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    std::vector<Rational> r = num.c_;
    const long dd = den.degree();
    const long dq = num.degree() - dd;
    std::vector<Rational> q(dq + 1, Rational(0));
    for (long k = dq; k >= 0; --k) {
        Rational qk = r[k + dd] / den.c_[dd];
        if (qk != 0)
            for (long i = 0; i <= dd; ++i) r[k + i] -= qk * den.c_[i];
        q[k] = qk;
    }
    r.resize(dd > 0 ? dd : 0);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::exact_div(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw InternalError("exact_div: division left a nonzero remainder");
    return q;
}

UniPoly::IntegerModel UniPoly::integer_model() const {
    IntegerModel m;
    if (is_zero()) {
        m.num_scale = 0;
        m.den_scale = 1;
        return m;
    }
    Integer L = denominator_lcm(c_);
    m.coeffs.resize(c_.size());
    Integer content = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        m.coeffs[i] = Integer(c_[i] * L);
        content = gcd(content, m.coeffs[i]);
    }
    for (auto& v : m.coeffs) v /= content;
    if (m.coeffs.back() < 0) {
        for (auto& v : m.coeffs) v = -v;
        content = -content;
    }
    Integer g = gcd(content, L);
    m.num_scale = content / g;
    m.den_scale = L / g;
    return m;
}

std::string UniPoly::to_expression() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) os << to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<std::string> UniPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(to_string(v));
    return out;
}

bool is_eisenstein(const UniPoly& f, const Integer& p) {
    if (!is_prime(p)) throw ContractError("is_eisenstein: p must be prime");
    if (f.degree() < 1) throw ContractError("is_eisenstein: degree must be >= 1");
    if (!f.is_integer()) throw ContractError("is_eisenstein: coefficients must be integers");
    if (!f.is_monic()) throw ContractError("is_eisenstein: polynomial must be monic");
    for (long i = 0; i < f.degree(); ++i) {
        const Rational& a = f.coeff(i);
        if (a == 0) continue;
        if (!mpz_divisible_p(a.get_num().get_mpz_t(), p.get_mpz_t())) return false;
    }
    const Rational& c0 = f.coeff(0);
    if (c0 == 0) return false;  // p^2 | 0, so a zero constant term fails
    Integer psq = p * p;
    return !mpz_divisible_p(c0.get_num().get_mpz_t(), psq.get_mpz_t());
}

}  // namespace dynprop
