#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/lyndon.hpp"

namespace nichols {

struct generic_parameter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degree_too_large_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute-force Nichols-algebra computations over Q(zeta): quantum symmetrizer
/// blocks per multidegree, Hilbert series by rank, ideal membership, skew
/// derivations. Independent of the Weyl-groupoid machinery.
class NicholsOracle {
  public:
    explicit NicholsOracle(const BraidingMatrix& q, std::size_t max_block_words = 10000);

    const BraidingMatrix& braiding() const { return q_; }
    const CycField& field() const { return field_; }

    /// All words of the given multidegree in lexicographic order.
    static std::vector<Word> words_of_multidegree(const Root& d);

    /// Matrix of Omega_n on the multidegree-d block, rows/cols indexed by
    /// words_of_multidegree(d). Built by the coset recursion
    /// Omega_n = (Omega_{n-1} ⊗ id) ∘ sum_k rho(s_{n-1} ... s_k), which walks
    /// the weak order one simple transposition at a time; the reduced words
    /// realized this way are the standard inversion-table representatives.
    const std::vector<std::vector<CycField::Elem>>& quantum_symmetrizer(const Root& d);

    int block_rank(const Root& d);

    /// dim B^d for all |d| <= D.
    std::map<Root, int> hilbert_series(int max_total_degree);

    bool in_ideal(const FreeAlgebraElement& v);

    FreeAlgebraElement skew_derivation(int i, const FreeAlgebraElement& v) const;

    /// Coefficients of prod_beta (1 + t^beta + ... + t^((N_beta - 1) beta)),
    /// factors with infinite height truncated at the degree bound.
    static std::map<Root, BigInt> pbw_prediction(
        const std::vector<std::pair<Root, std::optional<std::int64_t>>>& roots_with_heights,
        int max_total_degree);

  private:
    BraidingMatrix q_;
    CycField field_;
    std::size_t max_block_words_;
    std::map<Root, std::vector<std::vector<CycField::Elem>>> blocks_;
    std::map<Root, int> ranks_;

    CycField::Elem entry_(int i, int j) const;  // q_ij in the field
};

}  // namespace nichols
