#include "nichols/braiding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nichols {

Root unit_root(int theta, int i) {
    Root r(theta, 0);
    r[i] = 1;
    return r;
}

Root add_roots(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Root negate_root(const Root& a) {
    Root r = a;
    for (auto& x : r) x = -x;
    return r;
}

int total_degree(const Root& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool is_positive_root_vector(const Root& a) {
    bool nonzero = false;
    for (int x : a) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

std::string format_root(const Root& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << " ";
        first = false;
        os << (i + 1);
        if (a[i] != 1) os << "^" << a[i];
    }
    if (first) os << "0";
    return os.str();
}

BraidingMatrix::BraidingMatrix(ScalarContext ctx, int theta, std::vector<Scalar> entries)
    : ctx_(ctx), theta_(theta), entries_(std::move(entries)) {
    if (theta_ < 1) throw braiding_error("theta must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(theta_) * theta_)
        throw braiding_error("entry count does not match theta");
    for (int i = 0; i < theta_; ++i)
        if (is_one(at(i, i)))
            throw braiding_error("diagonal entry q_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                 " must differ from 1");
}

Scalar BraidingMatrix::qtilde(int i, int j) const { return scalar_mul(ctx_, at(i, j), at(j, i)); }

BraidingMatrix BraidingMatrix::twist_class() const {
    std::vector<Scalar> e(entries_.size(), scalar_one());
    for (int i = 0; i < theta_; ++i) {
        e[static_cast<std::size_t>(i) * theta_ + i] = at(i, i);
        for (int j = i + 1; j < theta_; ++j) e[static_cast<std::size_t>(i) * theta_ + j] = qtilde(i, j);
    }
    return BraidingMatrix(ctx_, theta_, std::move(e));
}

bool BraidingMatrix::is_twist_canonical() const {
    for (int i = 0; i < theta_; ++i)
        for (int j = 0; j < i; ++j)
            if (!is_one(at(i, j))) return false;
    return true;
}

DynkinDiagram dynkin_diagram(const BraidingMatrix& q) {
    DynkinDiagram d;
    d.theta = q.theta();
    d.vertex.reserve(q.theta());
    for (int i = 0; i < q.theta(); ++i) d.vertex.push_back(q.at(i, i));
    for (int i = 0; i < q.theta(); ++i)
        for (int j = i + 1; j < q.theta(); ++j) {
            Scalar t = q.qtilde(i, j);
            if (!is_one(t)) d.edge[{i, j}] = t;
        }
    return d;
}

bool twist_equivalent(const BraidingMatrix& q, const BraidingMatrix& p) {
    if (q.theta() != p.theta()) return false;
    if (!(q.ctx() == p.ctx())) throw braiding_error("twist_equivalent: contexts differ");
    for (int i = 0; i < q.theta(); ++i) {
        if (!(q.at(i, i) == p.at(i, i))) return false;
        for (int j = i + 1; j < q.theta(); ++j)
            if (!(q.qtilde(i, j) == p.qtilde(i, j))) return false;
    }
    return true;
}

bool twist_equivalent_upto_permutation(const BraidingMatrix& q, const BraidingMatrix& p) {
    if (q.theta() != p.theta()) return false;
    return diagram_canonical_form(q) == diagram_canonical_form(p);
}

Scalar bilinear_form(const BraidingMatrix& q, const Root& a, const Root& b) {
    if (static_cast<int>(a.size()) != q.theta() || static_cast<int>(b.size()) != q.theta())
        throw braiding_error("bilinear_form: vector length mismatch");
    Scalar out = scalar_one();
    for (int j = 0; j < q.theta(); ++j) {
        if (a[j] == 0) continue;
        for (int k = 0; k < q.theta(); ++k) {
            if (b[k] == 0) continue;
            out = scalar_mul(q.ctx(), out,
                             scalar_pow(q.ctx(), q.at(j, k), static_cast<std::int64_t>(a[j]) * b[k]));
        }
    }
    return out;
}

bool is_connected(const BraidingMatrix& q) {
    const int n = q.theta();
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (w == v || seen[w]) continue;
            if (!is_one(q.qtilde(std::min(v, w), std::max(v, w)))) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

ScalarKey scalar_key(const ScalarContext& ctx, const Scalar& a) {
    std::int64_t g = gcd64(ctx.modulus, mod64(a.tor, ctx.modulus));
    ScalarKey k;
    k.pow = a.pow;
    k.ord = ctx.modulus / g;
    k.num = mod64(a.tor, ctx.modulus) / g;
    return k;
}

namespace {

std::string encode_permuted(const BraidingMatrix& q, const std::vector<int>& perm) {
    // perm[new index] = old index
    std::ostringstream os;
    const auto& ctx = q.ctx();
    for (int i = 0; i < q.theta(); ++i) {
        ScalarKey k = scalar_key(ctx, q.at(perm[i], perm[i]));
        os << "v" << k.pow << "," << k.ord << "," << k.num << ";";
    }
    for (int i = 0; i < q.theta(); ++i)
        for (int j = i + 1; j < q.theta(); ++j) {
            Scalar t = q.qtilde(std::min(perm[i], perm[j]), std::max(perm[i], perm[j]));
            if (is_one(t)) continue;
            ScalarKey k = scalar_key(ctx, t);
            os << "e" << i << "," << j << ":" << k.pow << "," << k.ord << "," << k.num << ";";
        }
    return os.str();
}

}  // namespace

std::string diagram_canonical_form(const BraidingMatrix& q) {
    const int n = q.theta();
    // invariant classes cut the permutation search
    std::vector<std::string> inv(n);
    for (int i = 0; i < n; ++i) {
        std::ostringstream os;
        ScalarKey k = scalar_key(q.ctx(), q.at(i, i));
        os << k.pow << "," << k.ord << "," << k.num << "|";
        std::vector<ScalarKey> nb;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Scalar t = q.qtilde(std::min(i, j), std::max(i, j));
            if (!is_one(t)) nb.push_back(scalar_key(q.ctx(), t));
        }
        std::sort(nb.begin(), nb.end());
        for (auto& e : nb) os << e.pow << "," << e.ord << "," << e.num << ";";
        inv[i] = os.str();
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });

    std::string best;
    std::vector<int> perm;
    std::vector<char> used(n, 0);
    // backtrack over permutations compatible with the invariant ordering
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            std::string enc = encode_permuted(q, perm);
            if (best.empty() || enc < best) best = enc;
            return;
        }
        for (int t = 0; t < n; ++t) {
            int cand = order[t];
            if (used[cand]) continue;
            // keep the invariant-class sequence fixed: candidates for this slot
            // must share the class of the slot's sorted representative
            if (inv[cand] != inv[order[depth]]) continue;
            used[cand] = 1;
            perm.push_back(cand);
            self(self, depth + 1);
            perm.pop_back();
            used[cand] = 0;
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace nichols
