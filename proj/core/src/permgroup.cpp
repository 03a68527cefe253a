#include "nichols/permgroup.hpp"

#include <optional>
#include <set>
#include <stdexcept>

namespace nichols {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
    return r;
}

bool is_identity(const Perm& a) {
    for (std::size_t x = 0; x < a.size(); ++x)
        if (a[x] != static_cast<int>(x)) return false;
    return true;
}

// Deterministic Schreier-Sims: level k holds the generators of the stabilizer
// of bases 0..k-1 known so far, plus base orbit and transversal.
struct Chain {
    int n;
    struct Level {
        int base = -1;
        std::vector<Perm> gens;
        std::vector<std::optional<Perm>> transversal;
        std::vector<int> orbit;
    };
    std::vector<Level> levels;

    explicit Chain(int n_) : n(n_) {}

    void recompute_orbit(std::size_t k) {
        Level& lv = levels[k];
        lv.transversal.assign(n, std::nullopt);
        lv.orbit.clear();
        Perm id(n);
        for (int x = 0; x < n; ++x) id[x] = x;
        lv.transversal[lv.base] = id;
        lv.orbit.push_back(lv.base);
        for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
            int pt = lv.orbit[i];
            for (const Perm& g : lv.gens) {
                int img = g[pt];
                if (!lv.transversal[img]) {
                    lv.transversal[img] = compose(g, *lv.transversal[pt]);
                    lv.orbit.push_back(img);
                }
            }
        }
    }

    // Strip g through levels starting at `from`; residue and stopping level.
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
        for (std::size_t k = from; k < levels.size(); ++k) {
            const Level& lv = levels[k];
            int img = g[lv.base];
            if (!lv.transversal[img]) return {std::move(g), k};
            g = compose(inverse(*lv.transversal[img]), g);
        }
        return {std::move(g), levels.size()};
    }

    void ensure_level(std::size_t k, const Perm& mover) {
        if (k < levels.size()) return;
        Level lv;
        for (int x = 0; x < n; ++x)
            if (mover[x] != x) {
                lv.base = x;
                break;
            }
        levels.push_back(std::move(lv));
        recompute_orbit(levels.size() - 1);
    }

    // Close level k under Schreier generators; deeper levels must be closed.
    // levels[] may grow during recursion, so access by index throughout.
    void schreier_sims(std::size_t k) {
        recompute_orbit(k);
        for (std::size_t oi = 0; oi < levels[k].orbit.size(); ++oi) {
            int pt = levels[k].orbit[oi];
            for (std::size_t gi = 0; gi < levels[k].gens.size(); ++gi) {
                Perm s = levels[k].gens[gi];
                Perm schreier = compose(inverse(*levels[k].transversal[s[pt]]),
                                        compose(s, *levels[k].transversal[pt]));
                if (is_identity(schreier)) continue;
                auto [res, j] = strip(std::move(schreier), k + 1);
                if (is_identity(res)) continue;
                ensure_level(j, res);
                std::size_t deepest = std::min(j, levels.size() - 1);
                for (std::size_t l = k + 1; l <= deepest; ++l) levels[l].gens.push_back(res);
                for (std::size_t l = deepest + 1; l-- > k + 1;) schreier_sims(l);
            }
        }
    }
};

}  // namespace

BigInt permutation_group_order(const std::vector<std::vector<int>>& gens, int n) {
    Chain chain(n);
    std::set<Perm> unique;
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != n) throw std::runtime_error("generator degree mismatch");
        if (is_identity(g)) continue;
        unique.insert(g);
    }
    if (unique.empty()) return 1;
    for (const auto& g : unique) {
        chain.ensure_level(0, g);
        chain.levels[0].gens.push_back(g);
    }
    chain.schreier_sims(0);
    BigInt order = 1;
    for (const auto& lv : chain.levels) order *= static_cast<int>(lv.orbit.size());
    return order;
}

}  // namespace nichols
