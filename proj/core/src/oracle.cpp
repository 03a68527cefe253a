#include "nichols/oracle.hpp"

#include <algorithm>
#include <functional>

namespace nichols {

NicholsOracle::NicholsOracle(const BraidingMatrix& q, std::size_t max_block_words)
    : q_(q), field_(q.ctx().modulus), max_block_words_(max_block_words) {
    if (q.ctx().parameter_infinite)
        throw generic_parameter_error("oracle requires finite orders (all braiding entries torsion)");
}

CycField::Elem NicholsOracle::entry_(int i, int j) const {
    return field_.from_scalar(q_.ctx(), q_.at(i, j));
}

std::vector<Word> NicholsOracle::words_of_multidegree(const Root& d) {
    std::vector<Word> out;
    Word cur;
    int total = total_degree(d);
    Root left = d;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == total) {
            out.push_back(cur);
            return;
        }
        for (std::size_t l = 0; l < left.size(); ++l) {
            if (left[l] == 0) continue;
            --left[l];
            cur.push_back(static_cast<std::uint8_t>(l));
            rec();
            cur.pop_back();
            ++left[l];
        }
    };
    rec();
    return out;  // generated in lexicographic order
}

const std::vector<std::vector<CycField::Elem>>& NicholsOracle::quantum_symmetrizer(const Root& d) {
    auto it = blocks_.find(d);
    if (it != blocks_.end()) return it->second;

    const int n = total_degree(d);
    std::vector<Word> basis = words_of_multidegree(d);
    if (basis.size() > max_block_words_)
        throw degree_too_large_error("multidegree block has " + std::to_string(basis.size()) +
                                     " words, above the configured bound");
    std::map<Word, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);

    const std::size_t dim = basis.size();
    std::vector<std::vector<CycField::Elem>> omega(dim, std::vector<CycField::Elem>(dim, field_.zero()));

    if (n <= 1) {
        for (std::size_t k = 0; k < dim; ++k) omega[k][k] = field_.from_rational(1);
        blocks_.emplace(d, std::move(omega));
        return blocks_.at(d);
    }

    // column w of sum_k rho(s_{n-1}...s_k): move the letter at position k-1
    // (0-based) to the end, picking up braiding scalars on the way
    for (std::size_t col = 0; col < dim; ++col) {
        const Word& w = basis[col];
        std::vector<std::pair<Word, CycField::Elem>> moved;
        for (int k = n; k >= 1; --k) {
            // gamma_k = s_{n-1} s_{n-2} ... s_k acts first as sigma_k on (k,k+1)
            Word v = w;
            CycField::Elem coeff = field_.from_rational(1);
            for (int pos = k - 1; pos + 1 < n; ++pos) {
                coeff = field_.mul(coeff, entry_(v[pos], v[pos + 1]));
                std::swap(v[pos], v[pos + 1]);
            }
            moved.emplace_back(std::move(v), std::move(coeff));
        }
        // apply Omega_{n-1} ⊗ id: recurse per last letter
        for (auto& [v, coeff] : moved) {
            std::uint8_t last = v.back();
            Root sub = d;
            --sub[last];
            const auto& subblock = quantum_symmetrizer(sub);
            std::vector<Word> subbasis = words_of_multidegree(sub);
            std::map<Word, int> subindex;
            for (std::size_t k = 0; k < subbasis.size(); ++k) subindex[subbasis[k]] = static_cast<int>(k);
            Word prefix(v.begin(), v.end() - 1);
            int pcol = subindex.at(prefix);
            for (std::size_t prow = 0; prow < subbasis.size(); ++prow) {
                const CycField::Elem& c = subblock[prow][pcol];
                if (field_.is_zero(c)) continue;
                Word full = subbasis[prow];
                full.push_back(last);
                int row = index.at(full);
                omega[row][col] = field_.add(omega[row][col], field_.mul(c, coeff));
            }
        }
    }
    blocks_.emplace(d, std::move(omega));
    return blocks_.at(d);
}

int NicholsOracle::block_rank(const Root& d) {
    auto it = ranks_.find(d);
    if (it != ranks_.end()) return it->second;
    int r = field_.matrix_rank(quantum_symmetrizer(d));
    ranks_.emplace(d, r);
    return r;
}

std::map<Root, int> NicholsOracle::hilbert_series(int max_total_degree) {
    std::map<Root, int> dims;
    const int theta = q_.theta();
    // enumerate multidegrees by total degree
    std::function<void(Root&, int, int)> rec = [&](Root& d, int pos, int remaining) {
        if (pos == theta) {
            if (remaining == 0) dims[d] = block_rank(d);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            d[pos] = v;
            rec(d, pos + 1, remaining - v);
            d[pos] = 0;
        }
    };
    for (int total = 0; total <= max_total_degree; ++total) {
        Root d(theta, 0);
        rec(d, 0, total);
    }
    return dims;
}

bool NicholsOracle::in_ideal(const FreeAlgebraElement& v) {
    if (v.is_zero()) return true;
    Root d = v.multidegree();
    const auto& omega = quantum_symmetrizer(d);
    std::vector<Word> basis = words_of_multidegree(d);
    std::map<Word, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
    // coordinates of v
    std::vector<CycField::Elem> coord(basis.size(), field_.zero());
    for (const auto& [w, c] : v.terms) {
        CycField::Elem val = field_.zero();
        for (const auto& [mono, mult] : c.terms) {
            CycField::Elem m = field_.from_scalar(q_.ctx(), mono);
            val = field_.add(val, field_.mul(m, field_.from_rational(Rational(mult))));
        }
        coord[index.at(w)] = val;
    }
    for (std::size_t row = 0; row < basis.size(); ++row) {
        CycField::Elem acc = field_.zero();
        for (std::size_t col = 0; col < basis.size(); ++col) {
            if (field_.is_zero(coord[col]) || field_.is_zero(omega[row][col])) continue;
            acc = field_.add(acc, field_.mul(omega[row][col], coord[col]));
        }
        if (!field_.is_zero(acc)) return false;
    }
    return true;
}

FreeAlgebraElement NicholsOracle::skew_derivation(int i, const FreeAlgebraElement& v) const {
    const auto& ctx = q_.ctx();
    FreeAlgebraElement out;
    out.theta = v.theta;
    for (const auto& [w, c] : v.terms) {
        // partial_i(w x_j) = delta_ij w + q_ij partial_i(w) x_j, peeled from the right
        Scalar tail = scalar_one();  // product q_{i, w[k]} over letters right of the cut
        for (std::size_t pos = w.size(); pos-- > 0;) {
            if (w[pos] == static_cast<std::uint8_t>(i)) {
                Word rest(w.begin(), w.begin() + pos);
                rest.insert(rest.end(), w.begin() + pos + 1, w.end());
                out.add_term(rest, c.scaled(ctx, tail, 1));
            }
            tail = scalar_mul(ctx, tail, q_.at(i, w[pos]));
        }
    }
    return out;
}

std::map<Root, BigInt> NicholsOracle::pbw_prediction(
    const std::vector<std::pair<Root, std::optional<std::int64_t>>>& roots_with_heights,
    int max_total_degree) {
    std::map<Root, BigInt> series;
    if (roots_with_heights.empty()) return series;
    const int theta = static_cast<int>(roots_with_heights.front().first.size());
    series[Root(theta, 0)] = 1;
    for (const auto& [beta, height] : roots_with_heights) {
        int deg = total_degree(beta);
        if (deg <= 0) continue;
        std::int64_t max_exp = height ? *height - 1 : max_total_degree / deg;
        std::map<Root, BigInt> next;
        for (const auto& [d, coeff] : series) {
            Root cur = d;
            for (std::int64_t e = 0; e <= max_exp; ++e) {
                if (total_degree(cur) > max_total_degree) break;
                next[cur] += coeff;
                cur = add_roots(cur, beta);
            }
        }
        series = std::move(next);
    }
    return series;
}

}  // namespace nichols
