#include "nichols/lyndon.hpp"

#include <algorithm>

namespace nichols {

Word word_from_digits(const std::string& digits) {
    Word w;
    for (char c : digits) {
        if (c < '1' || c > '9') throw lyndon_error("bad word digit '" + std::string(1, c) + "'");
        w.push_back(static_cast<std::uint8_t>(c - '1'));
    }
    return w;
}

std::string word_digits(const Word& w) {
    std::string s;
    for (auto l : w) s.push_back(static_cast<char>('1' + l));
    return s;
}

Root word_multidegree(const Word& w, int theta) {
    Root d(theta, 0);
    for (auto l : w) {
        if (l >= theta) throw lyndon_error("letter out of range");
        ++d[l];
    }
    return d;
}

bool is_lyndon(const Word& u) {
    if (u.empty()) throw lyndon_error("empty word");
    for (std::size_t k = 1; k < u.size(); ++k) {
        // compare u with its end u[k..]
        if (!std::lexicographical_compare(u.begin(), u.end(), u.begin() + k, u.end())) return false;
    }
    return true;
}

std::vector<Word> lyndon_decomposition(const Word& u) {
    // Duval's algorithm
    if (u.empty()) throw lyndon_error("empty word");
    std::vector<Word> out;
    std::size_t i = 0;
    const std::size_t n = u.size();
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && u[k] <= u[j]) {
            if (u[k] < u[j])
                k = i;
            else
                ++k;
            ++j;
        }
        while (i <= k) {
            out.emplace_back(u.begin() + i, u.begin() + i + (j - k));
            i += j - k;
        }
    }
    return out;
}

std::pair<Word, Word> shirshov_decomposition(const Word& u) {
    if (u.size() < 2) throw lyndon_error("Shirshov decomposition needs length >= 2");
    if (!is_lyndon(u)) throw lyndon_error("Shirshov decomposition of a non-Lyndon word");
    // the lowest proper end; it is automatically Lyndon, and so is the prefix
    std::size_t best = 1;
    for (std::size_t k = 2; k < u.size(); ++k)
        if (std::lexicographical_compare(u.begin() + k, u.end(), u.begin() + best, u.end())) best = k;
    Word u1(u.begin(), u.begin() + best), u2(u.begin() + best, u.end());
    return {u1, u2};
}

ZScalarSum ZScalarSum::of(const Scalar& s, std::int64_t mult) {
    ZScalarSum z;
    if (mult != 0) z.terms[s] = mult;
    return z;
}

void ZScalarSum::add(const Scalar& s, std::int64_t mult) {
    if (mult == 0) return;
    auto it = terms.find(s);
    if (it == terms.end()) {
        terms.emplace(s, mult);
    } else {
        it->second += mult;
        if (it->second == 0) terms.erase(it);
    }
}

ZScalarSum ZScalarSum::scaled(const ScalarContext& ctx, const Scalar& s, std::int64_t sign) const {
    ZScalarSum out;
    for (const auto& [mono, mult] : terms) out.add(scalar_mul(ctx, mono, s), sign * mult);
    return out;
}

Root FreeAlgebraElement::multidegree() const {
    if (terms.empty()) throw lyndon_error("multidegree of zero element");
    Root d = word_multidegree(terms.begin()->first, theta);
    for (const auto& [w, c] : terms)
        if (word_multidegree(w, theta) != d) throw lyndon_error("inhomogeneous element");
    return d;
}

void FreeAlgebraElement::add_term(const Word& w, const ZScalarSum& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        for (const auto& [mono, mult] : c.terms) it->second.add(mono, mult);
        if (it->second.is_zero()) terms.erase(it);
    }
}

FreeAlgebraElement free_generator(int theta, int letter) {
    return free_word(theta, Word{static_cast<std::uint8_t>(letter)});
}

FreeAlgebraElement free_word(int theta, const Word& w) {
    FreeAlgebraElement e;
    e.theta = theta;
    e.terms.emplace(w, ZScalarSum::of(scalar_one()));
    return e;
}

FreeAlgebraElement free_mul(const ScalarContext& ctx, const FreeAlgebraElement& a,
                            const FreeAlgebraElement& b) {
    FreeAlgebraElement out;
    out.theta = a.theta;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            ZScalarSum prod;
            for (const auto& [ma, mua] : ca.terms)
                for (const auto& [mb, mub] : cb.terms) prod.add(scalar_mul(ctx, ma, mb), mua * mub);
            out.add_term(w, prod);
        }
    return out;
}

FreeAlgebraElement braided_commutator(const BraidingMatrix& q, const FreeAlgebraElement& a,
                                      const FreeAlgebraElement& b) {
    Root da = a.multidegree(), db = b.multidegree();
    Scalar factor = bilinear_form(q, da, db);
    FreeAlgebraElement ab = free_mul(q.ctx(), a, b);
    FreeAlgebraElement ba = free_mul(q.ctx(), b, a);
    FreeAlgebraElement out;
    out.theta = a.theta;
    for (const auto& [w, c] : ab.terms) out.add_term(w, c);
    for (const auto& [w, c] : ba.terms) out.add_term(w, c.scaled(q.ctx(), factor, -1));
    return out;
}

FreeAlgebraElement hyperletter(const BraidingMatrix& q, const Word& u) {
    if (!is_lyndon(u)) throw lyndon_error("hyperletter of a non-Lyndon word");
    if (u.size() == 1) return free_word(q.theta(), u);
    auto [u1, u2] = shirshov_decomposition(u);
    return braided_commutator(q, hyperletter(q, u1), hyperletter(q, u2));
}

std::string hyperletter_tree(const Word& u) {
    if (u.size() == 1) return "x_{" + word_digits(u) + "}";
    auto [u1, u2] = shirshov_decomposition(u);
    return "[" + hyperletter_tree(u1) + ", " + hyperletter_tree(u2) + "]_c";
}

std::map<Root, Word> root_lyndon_words(int theta, const std::vector<Root>& positive) {
    std::vector<Root> order = positive;
    std::sort(order.begin(), order.end(), [](const Root& a, const Root& b) {
        return std::make_pair(total_degree(a), a) < std::make_pair(total_degree(b), b);
    });
    std::map<Root, Word> out;
    for (const Root& beta : order) {
        int deg = total_degree(beta);
        if (deg == 1) {
            for (int i = 0; i < theta; ++i)
                if (beta[i] == 1) out[beta] = Word{static_cast<std::uint8_t>(i)};
            continue;
        }
        Word best;
        for (const Root& d1 : order) {
            if (total_degree(d1) >= deg) break;
            auto it1 = out.find(d1);
            if (it1 == out.end()) continue;
            Root d2 = beta;
            bool ok = true;
            for (std::size_t k = 0; k < d2.size(); ++k) {
                d2[k] -= d1[k];
                if (d2[k] < 0) ok = false;
            }
            if (!ok) continue;
            auto it2 = out.find(d2);
            if (it2 == out.end()) continue;
            const Word &w1 = it1->second, &w2 = it2->second;
            if (!std::lexicographical_compare(w1.begin(), w1.end(), w2.begin(), w2.end())) continue;
            Word cand = w1;
            cand.insert(cand.end(), w2.begin(), w2.end());
            if (best.empty() || std::lexicographical_compare(best.begin(), best.end(), cand.begin(), cand.end()))
                best = std::move(cand);
        }
        if (best.empty()) throw no_splitting_error("root " + format_root(beta) + " has no splitting");
        out[beta] = best;
    }
    return out;
}

std::map<Root, FreeAlgebraElement> root_vectors(const BraidingMatrix& q,
                                                const std::vector<Root>& positive) {
    auto words = root_lyndon_words(q.theta(), positive);
    std::map<Root, FreeAlgebraElement> out;
    for (const auto& [beta, w] : words) {
        FreeAlgebraElement x = hyperletter(q, w);
        if (x.multidegree() != beta) throw lyndon_error("root vector degree mismatch");
        out.emplace(beta, std::move(x));
    }
    return out;
}

bool convexity_check(const std::vector<Root>& ordered) {
    std::map<Root, std::size_t> pos;
    for (std::size_t i = 0; i < ordered.size(); ++i) pos[ordered[i]] = i;
    for (std::size_t i = 0; i < ordered.size(); ++i)
        for (std::size_t j = i + 1; j < ordered.size(); ++j) {
            auto it = pos.find(add_roots(ordered[i], ordered[j]));
            if (it == pos.end()) continue;
            if (!(i < it->second && it->second < j)) return false;
        }
    return true;
}

}  // namespace nichols
