#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace nichols {

struct scalar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Multiplicative group for braiding entries: a torsion part z^k (z a fixed
/// primitive root of unity) times an optional formal parameter q^e.
///
/// A finite parameter order N is folded into an enlarged torsion group of
/// order lcm(M, N) at construction, so scalars in such a context always have
/// free exponent 0.
struct ScalarContext {
    std::int64_t declared_torsion = 1;  // M as given
    std::int64_t modulus = 1;           // effective torsion modulus M' = lcm(M, N)
    bool has_parameter = false;
    bool parameter_infinite = false;
    std::int64_t parameter_order = 0;   // N when finite
    std::int64_t parameter_embed = 0;   // effective exponent of q after folding
    std::int64_t zeta_embed = 1;        // effective exponent of the declared zeta

    // parameter_order: nullopt and infinite=false -> no parameter;
    // infinite=true -> formal parameter of infinite order.
    static ScalarContext make(std::int64_t torsion_modulus,
                              std::optional<std::int64_t> param_order,
                              bool param_infinite = false);

    bool operator==(const ScalarContext&) const = default;
};

struct Scalar {
    std::int64_t tor = 0;   // torsion exponent, canonical in [0, modulus)
    std::int64_t pow = 0;   // free exponent (0 unless parameter_infinite)

    bool operator==(const Scalar&) const = default;
    auto operator<=>(const Scalar&) const = default;
};

inline Scalar scalar_one() { return Scalar{0, 0}; }
inline bool is_one(const Scalar& a) { return a.tor == 0 && a.pow == 0; }

Scalar scalar_make(const ScalarContext& ctx, std::int64_t tor, std::int64_t pow = 0);
Scalar scalar_mul(const ScalarContext& ctx, const Scalar& a, const Scalar& b);
Scalar scalar_inv(const ScalarContext& ctx, const Scalar& a);
Scalar scalar_pow(const ScalarContext& ctx, const Scalar& a, std::int64_t k);

/// Multiplicative order; nullopt means infinite.
std::optional<std::int64_t> scalar_order(const ScalarContext& ctx, const Scalar& a);

/// The parameter q as a scalar of this context (folded if N finite).
Scalar scalar_param(const ScalarContext& ctx);
/// zeta^k for the declared primitive M-th root zeta.
Scalar scalar_zeta(const ScalarContext& ctx, std::int64_t k = 1);
/// Raw effective torsion exponent (w.r.t. the enlarged modulus).
Scalar scalar_torsion(const ScalarContext& ctx, std::int64_t k);

/// Grammar: ["-"] ["z^"INT] ["*"] ["q^"INT] with sugar 1, -1, z, q, -q^E.
/// "-" needs even effective modulus.
Scalar parse_scalar(const std::string& text, const ScalarContext& ctx);
std::string print_scalar(const ScalarContext& ctx, const Scalar& a);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t mod64(std::int64_t a, std::int64_t m);

}  // namespace nichols
