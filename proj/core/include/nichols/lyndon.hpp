#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"

namespace nichols {

struct lyndon_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Word over the alphabet I_theta, letters 0-based.
using Word = std::vector<std::uint8_t>;

Word word_from_digits(const std::string& digits);  // "112" -> {0,0,1}
std::string word_digits(const Word& w);
Root word_multidegree(const Word& w, int theta);

/// u < all of its proper ends (lexicographic order, prefixes smaller).
bool is_lyndon(const Word& u);

/// Unique non-increasing factorization into Lyndon words.
std::vector<Word> lyndon_decomposition(const Word& u);

/// u = u1 u2 with u2 the lowest proper end that is Lyndon (then u1 is Lyndon).
std::pair<Word, Word> shirshov_decomposition(const Word& u);

/// Z-linear combination of scalar monomials, used as hyperletter coefficients.
struct ZScalarSum {
    std::map<Scalar, std::int64_t> terms;

    static ZScalarSum of(const Scalar& s, std::int64_t mult = 1);
    bool is_zero() const { return terms.empty(); }
    void add(const Scalar& s, std::int64_t mult);
    ZScalarSum scaled(const ScalarContext& ctx, const Scalar& s, std::int64_t sign) const;
    bool operator==(const ZScalarSum&) const = default;
};

/// Z^theta-homogeneous element of the free algebra.
struct FreeAlgebraElement {
    int theta = 0;
    std::map<Word, ZScalarSum> terms;

    bool is_zero() const { return terms.empty(); }
    Root multidegree() const;  // of the support; throws if empty or mixed
    void add_term(const Word& w, const ZScalarSum& c);
};

FreeAlgebraElement free_generator(int theta, int letter);
FreeAlgebraElement free_word(int theta, const Word& w);
/// Concatenation product in the free algebra.
FreeAlgebraElement free_mul(const ScalarContext& ctx, const FreeAlgebraElement& a,
                            const FreeAlgebraElement& b);
/// [a, b]_c = ab - q(deg a, deg b) ba.
FreeAlgebraElement braided_commutator(const BraidingMatrix& q, const FreeAlgebraElement& a,
                                      const FreeAlgebraElement& b);

/// Iterated braided commutator of a Lyndon word via its Shirshov decomposition.
FreeAlgebraElement hyperletter(const BraidingMatrix& q, const Word& u);

/// Commutator-tree rendering, e.g. "x_{112}" and "[x_{112}, x_{12}]_c".
std::string hyperletter_tree(const Word& u);

struct no_splitting_error : lyndon_error {
    using lyndon_error::lyndon_error;
};

/// l_beta per positive root: letters for simples, otherwise the lexicographic
/// maximum of l_d1 l_d2 over splittings beta = d1 + d2 with l_d1 < l_d2.
std::map<Root, Word> root_lyndon_words(int theta, const std::vector<Root>& positive);

std::map<Root, FreeAlgebraElement> root_vectors(const BraidingMatrix& q,
                                                const std::vector<Root>& positive);

/// True iff for all a < b in the order with a+b present: a < a+b < b.
bool convexity_check(const std::vector<Root>& ordered);

}  // namespace nichols
