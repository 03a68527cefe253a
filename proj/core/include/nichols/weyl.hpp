#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"

namespace nichols {

struct not_admissible_error : std::runtime_error {
    int i, j;
    not_admissible_error(int i_, int j_)
        : std::runtime_error("pair (" + std::to_string(i_ + 1) + "," + std::to_string(j_ + 1) +
                             ") admits no Cartan entry within the search cap"),
          i(i_), j(j_) {}
};

struct cap_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct infinite_height_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generalized Cartan matrix: c_ii = 2, c_ij <= 0, c_ij = 0 iff c_ji = 0.
struct CartanMatrix {
    int theta = 0;
    std::vector<int> c;  // row-major
    int at(int i, int j) const { return c[static_cast<std::size_t>(i) * theta + j]; }
};

/// Integer theta x theta matrix acting on root vectors (column convention:
/// column j = image of alpha_j).
struct LatticeMap {
    int theta = 0;
    std::vector<int> m;  // row-major
    static LatticeMap identity(int theta);
    int at(int i, int j) const { return m[static_cast<std::size_t>(i) * theta + j]; }
    Root apply(const Root& r) const;
    LatticeMap compose(const LatticeMap& rhs) const;  // this after rhs
    bool operator==(const LatticeMap&) const = default;
};

/// c_ij = -min{ n : (n+1)_{q_ii} = 0 or q_ii^n qtilde_ij = 1 }, searched up to `cap`.
CartanMatrix cartan_matrix(const BraidingMatrix& q, int cap = 20);

/// Reflection matrix s_i from a Cartan matrix.
LatticeMap reflection_matrix(const CartanMatrix& c, int i);

/// rho_i(q) as a canonical twist class, together with s_i.
std::pair<BraidingMatrix, LatticeMap> reflect(const BraidingMatrix& q, int i, int cap = 20);

bool is_cartan_vertex(const BraidingMatrix& q, const CartanMatrix& c, int i);

struct EnumerationCaps {
    std::size_t max_points = 10000;
    std::size_t max_roots = 100000;
};

/// The Weyl groupoid bundle over the twist classes reachable from q.
struct GroupoidBundle {
    ScalarContext ctx;
    int theta = 0;

    struct Point {
        BraidingMatrix rep;             // canonical twist class
        CartanMatrix cartan;
        std::vector<int> rho;           // rho[i] = target point index
        std::vector<LatticeMap> s;      // s[i] = reflection matrix at this point
        std::vector<Root> roots;        // Delta^x, sorted (positive and negative)
        std::vector<Root> positive;     // sorted by total degree then lex
        std::vector<std::optional<std::int64_t>> heights;  // aligned with positive
        std::vector<bool> cartan_flag;                     // aligned with positive
    };
    std::vector<Point> points;

    int point_index(const BraidingMatrix& twist_class) const;  // -1 if absent
};

GroupoidBundle enumerate_groupoid(const BraidingMatrix& q, const EnumerationCaps& caps = {},
                                  int cartan_cap = 20);

const std::vector<Root>& positive_roots(const GroupoidBundle& b, int x);
std::vector<std::pair<Root, std::optional<std::int64_t>>> root_heights(const GroupoidBundle& b, int x);

struct DimensionReport {
    std::optional<BigInt> dim;  // nullopt = infinite
    int gk = 0;                 // number of infinite-height positive roots
};
DimensionReport dimension_report(const GroupoidBundle& b, int x);

std::vector<Root> cartan_roots(const GroupoidBundle& b, int x);

/// y = sum (N_beta - 1) beta over positive roots; throws on infinite height.
Root integral_degree(const GroupoidBundle& b, int x);

BigInt isotropy_order(const GroupoidBundle& b, int x);

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> violations;
};
/// Checks the four root-system axioms plus Cartan-matrix compatibility.
AxiomReport check_axioms(const GroupoidBundle& b);

/// Transport identity for the integral degree along edge (x, i).
bool integral_transport_check(const GroupoidBundle& b, int x, int i);

}  // namespace nichols
