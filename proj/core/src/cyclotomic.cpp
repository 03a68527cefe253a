#include "nichols/cyclotomic.hpp"

#include <algorithm>

namespace nichols {

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<BigInt> poly_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw cyclotomic_error("non-exact polynomial division");
    return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(std::int64_t L) {
    // x^L - 1 divided by all Phi_d, d | L, d < L.
    std::vector<BigInt> num(L + 1, BigInt(0));
    num[0] = -1;
    num[L] = 1;
    for (std::int64_t d = 1; d < L; ++d) {
        if (L % d != 0) continue;
        num = poly_div(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CycField::CycField(std::int64_t L) : L_(L), phi_(euler_phi(L)), cyclo_(cyclotomic_polynomial(L)) {
    // reduction rows for x^(phi+j), j = 0..phi-2 (enough for products of reduced elements)
    power_reduction_.reserve(std::max<std::int64_t>(phi_ - 1, 0));
    Elem prev(phi_, Rational(0));
    // x^phi = -sum cyclo_[i] x^i
    for (std::int64_t i = 0; i < phi_; ++i) prev[i] = Rational(-cyclo_[i]);
    power_reduction_.push_back(prev);
    for (std::int64_t j = 1; j + 1 < phi_; ++j) {
        Elem next(phi_, Rational(0));
        // next = x * prev reduced
        for (std::int64_t i = 0; i + 1 < phi_; ++i) next[i + 1] = prev[i];
        if (!(prev[phi_ - 1] == 0)) {
            const Elem& top = power_reduction_[0];
            for (std::int64_t i = 0; i < phi_; ++i) next[i] += prev[phi_ - 1] * top[i];
        }
        power_reduction_.push_back(next);
        prev = std::move(next);
    }
}

CycField::Elem CycField::from_rational(const Rational& r) const {
    Elem e = zero();
    e[0] = r;
    return e;
}

CycField::Elem CycField::root_power(std::int64_t k) const {
    k = mod64(k, L_);
    if (k < phi_) {
        Elem e = zero();
        e[k] = 1;
        return e;
    }
    // reduce x^k step by step from x^(phi-1)
    Elem e = zero();
    e[phi_ - 1] = 1;
    for (std::int64_t step = phi_ - 1; step < k; ++step) {
        Elem next = zero();
        for (std::int64_t i = 0; i + 1 < phi_; ++i) next[i + 1] = e[i];
        if (!(e[phi_ - 1] == 0)) {
            const Elem& top = power_reduction_[0];
            for (std::int64_t i = 0; i < phi_; ++i) next[i] += e[phi_ - 1] * top[i];
        }
        e = std::move(next);
    }
    return e;
}

CycField::Elem CycField::from_scalar(const ScalarContext& ctx, const Scalar& a) const {
    if (a.pow != 0) throw cyclotomic_error("scalar with free exponent cannot embed into a cyclotomic field");
    if (ctx.modulus != L_ && L_ % ctx.modulus != 0)
        throw cyclotomic_error("scalar context modulus does not divide field order");
    return root_power(a.tor * (L_ / ctx.modulus));
}

bool CycField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
}

CycField::Elem CycField::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (std::int64_t i = 0; i < phi_; ++i) r[i] += b[i];
    return r;
}

CycField::Elem CycField::sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (std::int64_t i = 0; i < phi_; ++i) r[i] -= b[i];
    return r;
}

CycField::Elem CycField::neg(const Elem& a) const {
    Elem r = a;
    for (auto& c : r) c = -c;
    return r;
}

CycField::Elem CycField::mul(const Elem& a, const Elem& b) const {
    std::vector<Rational> prod(2 * phi_ - 1, Rational(0));
    for (std::int64_t i = 0; i < phi_; ++i) {
        if (a[i] == 0) continue;
        for (std::int64_t j = 0; j < phi_; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    Elem r(prod.begin(), prod.begin() + phi_);
    for (std::int64_t j = 0; j + 1 < phi_; ++j) {
        const Rational& c = prod[phi_ + j];
        if (c == 0) continue;
        const Elem& row = power_reduction_[j];
        for (std::int64_t i = 0; i < phi_; ++i) r[i] += c * row[i];
    }
    return r;
}

CycField::Elem CycField::inv(const Elem& a) const {
    if (is_zero(a)) throw cyclotomic_error("division by zero in Q(zeta)");
    // extended Euclid in Q[x] against the cyclotomic polynomial
    std::vector<Rational> r0(cyclo_.size());
    for (std::size_t i = 0; i < cyclo_.size(); ++i) r0[i] = Rational(cyclo_[i]);
    std::vector<Rational> r1(a);
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of a

    auto deg = [](const std::vector<Rational>& p) { return static_cast<std::int64_t>(p.size()) - 1; };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rational> rem = r0;
        std::vector<Rational> quot(std::max<std::int64_t>(deg(r0) - deg(r1) + 1, 0), Rational(0));
        for (std::int64_t i = deg(rem); i >= deg(r1); --i) {
            Rational c = rem[i] / r1.back();
            if (c == 0) continue;
            quot[i - deg(r1)] = c;
            for (std::int64_t j = 0; j <= deg(r1); ++j) rem[i - deg(r1) + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s_next = s0 - quot * s1
        std::vector<Rational> snext(std::max(s0.size(), quot.size() + s1.size() - 1), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) snext[i + j] -= quot[i] * s1[j];
        }
        while (!snext.empty() && snext.back() == 0) snext.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    if (r1.empty()) throw cyclotomic_error("element not invertible");  // cannot happen for field
    Rational lead = r1[0];
    Elem out = zero();
    for (std::size_t i = 0; i < s1.size() && i < static_cast<std::size_t>(phi_); ++i)
        out[i] = s1[i] / lead;
    return out;
}

CycField::Elem CycField::div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

int CycField::matrix_rank(std::vector<std::vector<Elem>> m) const {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    Elem prev_pivot = from_rational(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!is_zero(m[i][c])) {
                pr = i;
                break;
            }
        }
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        // Bareiss step: a_ij <- (p * a_ij - a_ic * a_rj) / prev_pivot
        const Elem pivot = m[r][c];
        const Elem prev_inv = inv(prev_pivot);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Elem factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                Elem t = sub(mul(pivot, m[i][j]), mul(factor, m[r][j]));
                m[i][j] = mul(t, prev_inv);
            }
        }
        prev_pivot = pivot;
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace nichols
