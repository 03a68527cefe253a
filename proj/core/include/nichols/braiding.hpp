#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

/// Z^theta lattice vector; roots and multidegrees live here.
using Root = std::vector<int>;

Root unit_root(int theta, int i);
Root add_roots(const Root& a, const Root& b);
Root negate_root(const Root& a);
int total_degree(const Root& a);
bool is_positive_root_vector(const Root& a);  // in N_0^theta, nonzero
std::string format_root(const Root& a);       // compressed "1^a 2^b" style

struct braiding_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Braiding matrix of diagonal type; q_ii != 1 enforced.
class BraidingMatrix {
  public:
    BraidingMatrix(ScalarContext ctx, int theta, std::vector<Scalar> entries);

    int theta() const { return theta_; }
    const ScalarContext& ctx() const { return ctx_; }
    const Scalar& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * theta_ + j]; }
    Scalar qtilde(int i, int j) const;  // q_ij q_ji

    /// Representative of the twist class: diagonal kept, qtilde on the upper
    /// triangle, lower triangle set to 1.
    BraidingMatrix twist_class() const;
    bool is_twist_canonical() const;

    bool operator==(const BraidingMatrix&) const = default;

  private:
    ScalarContext ctx_;
    int theta_;
    std::vector<Scalar> entries_;
};

struct DynkinDiagram {
    int theta = 0;
    std::vector<Scalar> vertex;                  // q_ii
    std::map<std::pair<int, int>, Scalar> edge;  // i<j with qtilde != 1
};

DynkinDiagram dynkin_diagram(const BraidingMatrix& q);

/// q_ii = p_ii and qtilde_ij = ptilde_ij under the identity labeling.
bool twist_equivalent(const BraidingMatrix& q, const BraidingMatrix& p);
/// Same, up to a relabeling of the vertices (canonical-form comparison).
bool twist_equivalent_upto_permutation(const BraidingMatrix& q, const BraidingMatrix& p);

/// The Z-bilinear form with bq(alpha_j, alpha_k) = q_jk.
Scalar bilinear_form(const BraidingMatrix& q, const Root& a, const Root& b);

bool is_connected(const BraidingMatrix& q);

/// Context-free value of a scalar: free exponent plus the torsion part in
/// lowest terms (order d, numerator a with gcd(a,d)=1). Equal scalars from
/// different contexts get equal keys.
struct ScalarKey {
    std::int64_t pow = 0;
    std::int64_t ord = 1;
    std::int64_t num = 0;
    auto operator<=>(const ScalarKey&) const = default;
};
ScalarKey scalar_key(const ScalarContext& ctx, const Scalar& a);

/// Lexicographically minimal encoding of the diagram over vertex relabelings.
/// Context-free, so diagrams from different contexts compare meaningfully.
std::string diagram_canonical_form(const BraidingMatrix& q);

}  // namespace nichols
