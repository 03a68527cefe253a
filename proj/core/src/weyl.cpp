#include "nichols/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "nichols/permgroup.hpp"

namespace nichols {

LatticeMap LatticeMap::identity(int theta) {
    LatticeMap l;
    l.theta = theta;
    l.m.assign(static_cast<std::size_t>(theta) * theta, 0);
    for (int i = 0; i < theta; ++i) l.m[static_cast<std::size_t>(i) * theta + i] = 1;
    return l;
}

Root LatticeMap::apply(const Root& r) const {
    Root out(theta, 0);
    for (int i = 0; i < theta; ++i) {
        int acc = 0;
        for (int j = 0; j < theta; ++j) acc += at(i, j) * r[j];
        out[i] = acc;
    }
    return out;
}

LatticeMap LatticeMap::compose(const LatticeMap& rhs) const {
    LatticeMap out;
    out.theta = theta;
    out.m.assign(m.size(), 0);
    for (int i = 0; i < theta; ++i)
        for (int k = 0; k < theta; ++k) {
            int a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < theta; ++j)
                out.m[static_cast<std::size_t>(i) * theta + j] += a * rhs.at(k, j);
        }
    return out;
}

CartanMatrix cartan_matrix(const BraidingMatrix& q, int cap) {
    const auto& ctx = q.ctx();
    CartanMatrix c;
    c.theta = q.theta();
    c.c.assign(static_cast<std::size_t>(c.theta) * c.theta, 0);
    for (int i = 0; i < c.theta; ++i) {
        c.c[static_cast<std::size_t>(i) * c.theta + i] = 2;
        auto ord_qii = scalar_order(ctx, q.at(i, i));
        for (int j = 0; j < c.theta; ++j) {
            if (j == i) continue;
            Scalar qt = q.qtilde(std::min(i, j), std::max(i, j));
            int found = -1;
            Scalar qii_pow = scalar_one();
            for (int n = 0; n <= cap; ++n) {
                // (n+1)_{q_ii} = 0 iff ord(q_ii) divides n+1 (q_ii != 1)
                bool qseries = ord_qii && (n + 1) % *ord_qii == 0;
                bool qcartan = is_one(scalar_mul(ctx, qii_pow, qt));
                if (qseries || qcartan) {
                    found = n;
                    break;
                }
                qii_pow = scalar_mul(ctx, qii_pow, q.at(i, i));
            }
            if (found < 0) throw not_admissible_error(i, j);
            c.c[static_cast<std::size_t>(i) * c.theta + j] = -found;
        }
    }
    // GCM sanity: c_ij = 0 iff c_ji = 0 holds automatically here since
    // qtilde_ij = 1 forces n = 0 on both sides and conversely.
    return c;
}

LatticeMap reflection_matrix(const CartanMatrix& c, int i) {
    LatticeMap s = LatticeMap::identity(c.theta);
    for (int j = 0; j < c.theta; ++j)
        s.m[static_cast<std::size_t>(i) * c.theta + j] = (j == i) ? -1 : -c.at(i, j);
    return s;
}

std::pair<BraidingMatrix, LatticeMap> reflect(const BraidingMatrix& q, int i, int cap) {
    CartanMatrix c = cartan_matrix(q, cap);
    LatticeMap s = reflection_matrix(c, i);
    const int n = q.theta();
    std::vector<Scalar> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    std::vector<Root> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) images.push_back(s.apply(unit_root(n, j)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) entries.push_back(bilinear_form(q, images[j], images[k]));
    BraidingMatrix out(q.ctx(), n, std::move(entries));
    return {out.twist_class(), s};
}

bool is_cartan_vertex(const BraidingMatrix& q, const CartanMatrix& c, int i) {
    const auto& ctx = q.ctx();
    for (int j = 0; j < q.theta(); ++j) {
        if (j == i) continue;
        Scalar lhs = q.qtilde(std::min(i, j), std::max(i, j));
        Scalar rhs = scalar_pow(ctx, q.at(i, i), c.at(i, j));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

int GroupoidBundle::point_index(const BraidingMatrix& tc) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (twist_equivalent(points[i].rep, tc)) return static_cast<int>(i);
    return -1;
}

namespace {

std::string encode_twist_class(const BraidingMatrix& q) {
    std::string s;
    for (int i = 0; i < q.theta(); ++i)
        for (int j = i; j < q.theta(); ++j) {
            const Scalar& e = (i == j) ? q.at(i, i) : q.at(i, j);
            s += std::to_string(e.tor) + "," + std::to_string(e.pow) + ";";
        }
    return s;
}

}  // namespace

GroupoidBundle enumerate_groupoid(const BraidingMatrix& q0, const EnumerationCaps& caps,
                                  int cartan_cap) {
    GroupoidBundle b;
    b.ctx = q0.ctx();
    b.theta = q0.theta();
    const int n = b.theta;

    // phase 1: points under rho_i
    std::map<std::string, int> index_of;
    std::deque<int> todo;
    auto add_point = [&](const BraidingMatrix& tc) -> int {
        std::string key = encode_twist_class(tc);
        auto it = index_of.find(key);
        if (it != index_of.end()) return it->second;
        if (b.points.size() >= caps.max_points)
            throw cap_exceeded_error("not arithmetic within cap " + std::to_string(caps.max_points) +
                                     " (point cap)");
        GroupoidBundle::Point p{tc, cartan_matrix(tc, cartan_cap), {}, {}, {}, {}, {}, {}};
        int idx = static_cast<int>(b.points.size());
        index_of.emplace(std::move(key), idx);
        b.points.push_back(std::move(p));
        todo.push_back(idx);
        return idx;
    };
    add_point(q0.twist_class());
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        b.points[x].rho.assign(n, -1);
        b.points[x].s.clear();
        for (int i = 0; i < n; ++i) {
            auto [target, s] = reflect(b.points[x].rep, i, cartan_cap);
            int y = add_point(target);
            b.points[x].rho[i] = y;
            b.points[x].s.push_back(std::move(s));
        }
    }

    // phase 2: orbit of (point, root) pairs, seeded by the simple roots
    struct State {
        int point;
        Root root;
        bool operator<(const State& o) const {
            return point != o.point ? point < o.point : root < o.root;
        }
    };
    std::map<State, int> state_index;
    std::vector<State> states;
    std::vector<int> component;
    std::vector<char> comp_cartan;  // per component: contains a Cartan-vertex seed

    auto add_state = [&](State st) -> int {
        auto it = state_index.find(st);
        if (it != state_index.end()) return it->second;
        if (states.size() >= 2 * caps.max_roots)
            throw cap_exceeded_error("not arithmetic within cap " + std::to_string(caps.max_roots) +
                                     " (root cap)");
        int idx = static_cast<int>(states.size());
        state_index.emplace(st, idx);
        states.push_back(std::move(st));
        component.push_back(-1);
        return idx;
    };

    struct Seed {
        int state;
        bool cartan;
    };
    std::vector<Seed> seeds;
    for (std::size_t x = 0; x < b.points.size(); ++x)
        for (int i = 0; i < n; ++i) {
            int s = add_state({static_cast<int>(x), unit_root(n, i)});
            bool cv = is_cartan_vertex(b.points[x].rep, b.points[x].cartan, i);
            seeds.push_back({s, cv});
        }

    // closure + component labels in one sweep
    std::deque<int> queue;
    int next_comp = 0;
    for (std::size_t s0 = 0; s0 < states.size(); ++s0) {
        if (component[s0] >= 0) continue;
        int comp = next_comp++;
        comp_cartan.push_back(0);
        component[s0] = comp;
        queue.push_back(static_cast<int>(s0));
        while (!queue.empty()) {
            int si = queue.front();
            queue.pop_front();
            State st = states[si];
            for (int j = 0; j < n; ++j) {
                State nx{b.points[st.point].rho[j], b.points[st.point].s[j].apply(st.root)};
                int ni = add_state(std::move(nx));
                if (component[ni] < 0) {
                    component[ni] = comp;
                    queue.push_back(ni);
                }
            }
        }
    }
    for (const Seed& sd : seeds)
        if (sd.cartan) comp_cartan[component[sd.state]] = 1;

    // per-point root data
    auto sort_key = [](const Root& r) { return std::make_pair(total_degree(r), r); };
    for (std::size_t idx = 0; idx < states.size(); ++idx) {
        const State& st = states[idx];
        b.points[st.point].roots.push_back(st.root);
    }
    for (auto& p : b.points) std::sort(p.roots.begin(), p.roots.end());
    for (std::size_t x = 0; x < b.points.size(); ++x) {
        auto& p = b.points[x];
        for (const Root& r : p.roots)
            if (is_positive_root_vector(r)) p.positive.push_back(r);
        std::sort(p.positive.begin(), p.positive.end(),
                  [&](const Root& a, const Root& c) { return sort_key(a) < sort_key(c); });
        for (const Root& r : p.positive) {
            p.heights.push_back(scalar_order(b.ctx, bilinear_form(p.rep, r, r)));
            int si = state_index.at(State{static_cast<int>(x), r});
            p.cartan_flag.push_back(comp_cartan[component[si]] != 0);
        }
    }
    return b;
}

const std::vector<Root>& positive_roots(const GroupoidBundle& b, int x) { return b.points[x].positive; }

std::vector<std::pair<Root, std::optional<std::int64_t>>> root_heights(const GroupoidBundle& b, int x) {
    std::vector<std::pair<Root, std::optional<std::int64_t>>> out;
    const auto& p = b.points[x];
    for (std::size_t i = 0; i < p.positive.size(); ++i) out.emplace_back(p.positive[i], p.heights[i]);
    return out;
}

DimensionReport dimension_report(const GroupoidBundle& b, int x) {
    DimensionReport r;
    BigInt dim = 1;
    bool finite = true;
    for (const auto& h : b.points[x].heights) {
        if (!h) {
            finite = false;
            ++r.gk;
        } else if (finite) {
            dim *= *h;
        }
    }
    if (finite) r.dim = dim;
    return r;
}

std::vector<Root> cartan_roots(const GroupoidBundle& b, int x) {
    std::vector<Root> out;
    const auto& p = b.points[x];
    for (std::size_t i = 0; i < p.positive.size(); ++i)
        if (p.cartan_flag[i]) out.push_back(p.positive[i]);
    return out;
}

Root integral_degree(const GroupoidBundle& b, int x) {
    const auto& p = b.points[x];
    Root y(b.theta, 0);
    for (std::size_t i = 0; i < p.positive.size(); ++i) {
        if (!p.heights[i]) throw infinite_height_error("integral degree undefined: infinite height");
        for (int k = 0; k < b.theta; ++k)
            y[k] += static_cast<int>(*p.heights[i] - 1) * p.positive[i][k];
    }
    return y;
}

BigInt isotropy_order(const GroupoidBundle& b, int x) {
    const int n = b.theta;
    const std::size_t npts = b.points.size();
    // spanning tree from x; T[p] maps Delta^x -> Delta^p, Tinv[p] the inverse
    std::vector<char> seen(npts, 0);
    std::vector<LatticeMap> T(npts), Tinv(npts);
    std::deque<int> queue;
    seen[x] = 1;
    T[x] = Tinv[x] = LatticeMap::identity(n);
    queue.push_back(x);
    std::vector<std::pair<int, int>> edges;  // all (point, i)
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            int c = b.points[p].rho[i];
            edges.emplace_back(p, i);
            if (!seen[c]) {
                seen[c] = 1;
                T[c] = b.points[p].s[i].compose(T[p]);
                Tinv[c] = Tinv[p].compose(b.points[p].s[i]);  // s_i is an involution
                queue.push_back(c);
            }
        }
    }

    const auto& roots = b.points[x].roots;
    auto root_idx = [&](const Root& r) {
        auto it = std::lower_bound(roots.begin(), roots.end(), r);
        if (it == roots.end() || *it != r) throw std::runtime_error("isotropy: image root missing");
        return static_cast<int>(it - roots.begin());
    };

    std::vector<std::vector<int>> perms;
    std::set<std::vector<int>> unique;
    for (auto [p, i] : edges) {
        int c = b.points[p].rho[i];
        LatticeMap g = Tinv[c].compose(b.points[p].s[i]).compose(T[p]);
        std::vector<int> perm(roots.size());
        for (std::size_t r = 0; r < roots.size(); ++r) perm[r] = root_idx(g.apply(roots[r]));
        if (unique.insert(perm).second) perms.push_back(std::move(perm));
    }
    return permutation_group_order(perms, static_cast<int>(roots.size()));
}

AxiomReport check_axioms(const GroupoidBundle& b) {
    AxiomReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const int n = b.theta;
    for (std::size_t x = 0; x < b.points.size(); ++x) {
        const auto& p = b.points[x];
        // axiom 1: Delta = Delta+ u -Delta+
        for (const Root& r : p.roots) {
            bool pos = is_positive_root_vector(r);
            bool neg = is_positive_root_vector(negate_root(r));
            if (!pos && !neg) fail("axiom1: mixed-sign root " + format_root(r) + " at point " + std::to_string(x));
            if (pos && !std::binary_search(p.roots.begin(), p.roots.end(), negate_root(r)))
                fail("axiom1: missing negative of " + format_root(r) + " at point " + std::to_string(x));
        }
        // axiom 2: Delta cap Z alpha_i = {±alpha_i}
        for (const Root& r : p.roots) {
            int support = 0, index = -1;
            for (int k = 0; k < n; ++k)
                if (r[k] != 0) {
                    ++support;
                    index = k;
                }
            if (support == 1 && std::abs(r[index]) != 1)
                fail("axiom2: multiple of a simple root " + format_root(r) + " at point " + std::to_string(x));
        }
        for (int i = 0; i < n; ++i) {
            // rho involution and Cartan compatibility
            int y = p.rho[i];
            if (b.points[y].rho[i] != static_cast<int>(x))
                fail("rho_i not involutive at point " + std::to_string(x));
            for (int j = 0; j < n; ++j)
                if (p.cartan.at(i, j) != b.points[y].cartan.at(i, j))
                    fail("c_ij compatibility fails at point " + std::to_string(x) + " i=" + std::to_string(i + 1));
            // axiom 3: s_i(Delta^x) = Delta^{rho_i x}
            std::vector<Root> image;
            image.reserve(p.roots.size());
            for (const Root& r : p.roots) image.push_back(p.s[i].apply(r));
            std::sort(image.begin(), image.end());
            if (image != b.points[y].roots)
                fail("axiom3: s_" + std::to_string(i + 1) + "(Delta) mismatch at point " + std::to_string(x));
        }
        // axiom 4
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int m = 0;
                for (const Root& r : p.roots) {
                    bool in_cone = true;
                    for (int k = 0; k < n; ++k) {
                        if (k == i || k == j) {
                            if (r[k] < 0) in_cone = false;
                        } else if (r[k] != 0) {
                            in_cone = false;
                        }
                    }
                    if (in_cone && !std::all_of(r.begin(), r.end(), [](int v) { return v == 0; }))
                        ++m;
                }
                int z = static_cast<int>(x);
                for (int rep_count = 0; rep_count < m; ++rep_count) {
                    z = b.points[z].rho[i];
                    z = b.points[z].rho[j];
                }
                if (z != static_cast<int>(x))
                    fail("axiom4: (rho_i rho_j)^m != id at point " + std::to_string(x) + " (i,j)=(" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
    }
    return rep;
}

bool integral_transport_check(const GroupoidBundle& b, int x, int i) {
    const auto& p = b.points[x];
    Root ya = integral_degree(b, x);
    Root ya_target = integral_degree(b, p.rho[i]);
    auto ni = scalar_order(b.ctx, p.rep.at(i, i));
    if (!ni) throw infinite_height_error("transport check needs finite N_i");
    Root expect = p.s[i].apply(ya);
    expect[i] += static_cast<int>(2 * (*ni - 1));
    return expect == ya_target;
}

}  // namespace nichols
