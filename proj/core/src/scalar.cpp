#include "nichols/scalar.hpp"

#include <cctype>
#include <numeric>

namespace nichols {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod64(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

ScalarContext ScalarContext::make(std::int64_t torsion_modulus,
                                  std::optional<std::int64_t> param_order,
                                  bool param_infinite) {
    if (torsion_modulus < 1) throw scalar_error("torsion modulus must be >= 1");
    ScalarContext ctx;
    ctx.declared_torsion = torsion_modulus;
    ctx.modulus = torsion_modulus;
    if (param_infinite) {
        ctx.has_parameter = true;
        ctx.parameter_infinite = true;
    } else if (param_order) {
        if (*param_order < 2) throw scalar_error("parameter order must be >= 2");
        ctx.has_parameter = true;
        ctx.parameter_order = *param_order;
        ctx.modulus = lcm64(torsion_modulus, *param_order);
        ctx.parameter_embed = ctx.modulus / *param_order;
    }
    ctx.zeta_embed = ctx.modulus / torsion_modulus;
    return ctx;
}

Scalar scalar_make(const ScalarContext& ctx, std::int64_t tor, std::int64_t pow) {
    if (pow != 0 && !ctx.parameter_infinite)
        throw scalar_error("free exponent in a context without infinite parameter");
    return Scalar{mod64(tor, ctx.modulus), pow};
}

Scalar scalar_mul(const ScalarContext& ctx, const Scalar& a, const Scalar& b) {
    return Scalar{mod64(a.tor + b.tor, ctx.modulus), a.pow + b.pow};
}

Scalar scalar_inv(const ScalarContext& ctx, const Scalar& a) {
    return Scalar{mod64(-a.tor, ctx.modulus), -a.pow};
}

Scalar scalar_pow(const ScalarContext& ctx, const Scalar& a, std::int64_t k) {
    return Scalar{mod64(a.tor * k, ctx.modulus), a.pow * k};
}

std::optional<std::int64_t> scalar_order(const ScalarContext& ctx, const Scalar& a) {
    if (a.pow != 0) return std::nullopt;  // only possible when parameter is infinite
    return ctx.modulus / gcd64(ctx.modulus, mod64(a.tor, ctx.modulus));
}

Scalar scalar_param(const ScalarContext& ctx) {
    if (!ctx.has_parameter) throw scalar_error("context has no parameter q");
    if (ctx.parameter_infinite) return Scalar{0, 1};
    return Scalar{ctx.parameter_embed, 0};
}

Scalar scalar_zeta(const ScalarContext& ctx, std::int64_t k) {
    return Scalar{mod64(k * ctx.zeta_embed, ctx.modulus), 0};
}

Scalar scalar_torsion(const ScalarContext& ctx, std::int64_t k) {
    return Scalar{mod64(k, ctx.modulus), 0};
}

namespace {

std::int64_t parse_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw scalar_error("malformed scalar literal: integer expected in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
}

}  // namespace

Scalar parse_scalar(const std::string& text, const ScalarContext& ctx) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw scalar_error("empty scalar literal");

    Scalar out = scalar_one();
    std::size_t pos = 0;
    bool negate = false;
    if (s[pos] == '-') {
        negate = true;
        ++pos;
        if (pos == s.size()) throw scalar_error("malformed scalar literal '" + text + "'");
    }
    if (s[pos] == '1' && pos + 1 == s.size()) {
        ++pos;
    } else {
        bool any = false;
        if (pos < s.size() && s[pos] == 'z') {
            any = true;
            ++pos;
            std::int64_t e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_int(s, pos);
            }
            out = scalar_mul(ctx, out, scalar_zeta(ctx, e));
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (pos < s.size() && s[pos] == 'q') {
            any = true;
            if (!ctx.has_parameter) throw scalar_error("'q' used in a context without parameter");
            ++pos;
            std::int64_t e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_int(s, pos);
            }
            out = scalar_mul(ctx, out, scalar_pow(ctx, scalar_param(ctx), e));
        }
        if (!any) throw scalar_error("malformed scalar literal '" + text + "'");
    }
    if (pos != s.size()) throw scalar_error("malformed scalar literal '" + text + "'");
    if (negate) {
        if (ctx.modulus % 2 != 0) throw scalar_error("'-' requires even torsion modulus");
        out = scalar_mul(ctx, out, scalar_torsion(ctx, ctx.modulus / 2));
    }
    return out;
}

namespace {

// g = ax + by with g = gcd(a, b)
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

std::string print_scalar(const ScalarContext& ctx, const Scalar& a) {
    if (is_one(a)) return "1";
    if (ctx.modulus % 2 == 0 && a.tor == ctx.modulus / 2 && a.pow == 0) return "-1";

    std::int64_t zexp = 0, qexp = 0;
    if (ctx.has_parameter && !ctx.parameter_infinite) {
        // tor = zexp * zeta_embed + qexp * parameter_embed (mod modulus);
        // the two embeddings are coprime since modulus = lcm(M, N)
        std::int64_t x, y;
        ext_gcd(ctx.zeta_embed, ctx.parameter_embed, x, y);
        zexp = mod64(a.tor * x, ctx.declared_torsion);
        qexp = mod64(a.tor * y, ctx.parameter_order);
    } else {
        zexp = a.tor;
        qexp = a.pow;
    }
    std::string s;
    if (zexp != 0) s += "z^" + std::to_string(zexp);
    if (qexp != 0) {
        if (!s.empty()) s += "*";
        s += "q^" + std::to_string(qexp);
    }
    if (s.empty()) s = "1";  // tor decomposed to trivial parts cannot happen, but stay safe
    return s;
}

}  // namespace nichols
