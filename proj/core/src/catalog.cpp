#include "nichols/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>

namespace nichols {

namespace {
using nlohmann::json;
}

// ---------------------------------------------------------------------------
// params and small parsers

CatalogParams CatalogParams::parse(const std::string& spec) {
    CatalogParams p;
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw catalog_error("bad parameter item '" + item + "'");
        p.kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return p;
}

std::string CatalogParams::str() const {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ",";
        out += k + "=" + v;
    }
    return out;
}

std::optional<std::string> CatalogParams::get(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return it->second;
}

std::optional<std::int64_t> CatalogParams::get_int(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return std::stoll(*v);
}

std::vector<int> CatalogParams::get_set(const std::string& key) const {
    std::vector<int> out;
    auto v = get(key);
    if (!v) return out;
    std::string item;
    std::stringstream ss(*v);
    while (std::getline(ss, item, '+'))
        if (!item.empty()) out.push_back(std::stoi(item));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Root parse_compressed_root(const std::string& text, int theta) {
    Root r(theta, 0);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_ws();
    if (text.empty() || text == "0") return r;
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw catalog_error("bad compressed root '" + text + "'");
        int vertex = text[i] - '0';
        ++i;
        int exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw catalog_error("bad exponent in '" + text + "'");
            exp = std::stoi(text.substr(start, i - start));
        }
        if (vertex < 1 || vertex > theta) throw catalog_error("vertex out of range in '" + text + "'");
        r[vertex - 1] += exp;
        skip_ws();
    }
    return r;
}

// ---------------------------------------------------------------------------
// arithmetic expressions over big integers, with order variables N, M, L, P

namespace {

struct ExprEnv {
    std::map<std::string, BigInt> vars;
};

class ExprParser {
  public:
    ExprParser(const std::string& s, const ExprEnv& env) : s_(s), env_(env) {}
    BigInt parse() {
        BigInt v = expr();
        skip();
        if (pos_ != s_.size()) throw catalog_error("trailing input in expression '" + s_ + "'");
        return v;
    }

  private:
    const std::string& s_;
    const ExprEnv& env_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    BigInt expr() {
        BigInt v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    BigInt term() {
        BigInt v = factor();
        while (eat('*')) v *= factor();
        return v;
    }
    BigInt factor() {
        BigInt base = atom();
        if (eat('^')) {
            BigInt e = atom();
            BigInt out = 1;
            for (BigInt i = 0; i < e; ++i) out *= base;
            return out;
        }
        return base;
    }
    BigInt atom() {
        skip();
        if (eat('(')) {
            BigInt v = expr();
            if (!eat(')')) throw catalog_error("missing ')' in '" + s_ + "'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return BigInt(s_.substr(start, pos_ - start));
        }
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = env_.vars.find(name);
            if (it == env_.vars.end()) throw catalog_error("unknown variable '" + name + "'");
            return it->second;
        }
        throw catalog_error("cannot parse expression '" + s_ + "'");
    }
};

BigInt eval_expr(const std::string& s, const ExprEnv& env) { return ExprParser(s, env).parse(); }

}  // namespace

// ---------------------------------------------------------------------------
// finite-type Cartan matrix classification

namespace {

std::vector<int> finite_type_cartan(char letter, int n) {
    std::vector<int> c(static_cast<std::size_t>(n) * n, 0);
    auto set = [&](int i, int j, int v) { c[static_cast<std::size_t>(i) * n + j] = v; };
    for (int i = 0; i < n; ++i) set(i, i, 2);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            set(i, i + 1, -1);
            set(i + 1, i, -1);
        }
    };
    switch (letter) {
        case 'A':
            chain(n);
            break;
        case 'B':
            chain(n);
            if (n >= 2) set(n - 1, n - 2, -2);
            break;
        case 'C':
            chain(n);
            if (n >= 2) set(n - 2, n - 1, -2);
            break;
        case 'D':
            chain(n - 1);
            set(n - 3, n - 1, -1);
            set(n - 1, n - 3, -1);
            break;
        case 'E':
            chain(n - 1);
            set(n - 4, n - 1, -1);
            set(n - 1, n - 4, -1);
            break;
        case 'F':
            chain(4);
            set(1, 2, -2);
            break;
        case 'G':
            set(0, 1, -3);
            set(1, 0, -1);
            break;
    }
    return c;
}

bool cartan_matches_upto_perm(const std::vector<int>& a, const std::vector<int>& b, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (a[static_cast<std::size_t>(i) * n + j] !=
                    b[static_cast<std::size_t>(perm[i]) * n + perm[j]])
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

BigInt positive_root_count(char letter, int n) {
    switch (letter) {
        case 'A': return BigInt(n) * (n + 1) / 2;
        case 'B':
        case 'C': return BigInt(n) * n;
        case 'D': return BigInt(n) * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

}  // namespace

std::string classify_finite_cartan(const std::vector<int>& c, int rank) {
    if (rank == 0) return "0";
    std::vector<int> comp(rank, -1);
    int ncomp = 0;
    for (int s = 0; s < rank; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < rank; ++w)
                if (comp[w] < 0 && c[static_cast<std::size_t>(v) * rank + w] != 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::string> factors;
    for (int k = 0; k < ncomp; ++k) {
        std::vector<int> idx;
        for (int i = 0; i < rank; ++i)
            if (comp[i] == k) idx.push_back(i);
        int n = static_cast<int>(idx.size());
        std::vector<int> sub(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sub[static_cast<std::size_t>(i) * n + j] =
                    c[static_cast<std::size_t>(idx[i]) * rank + idx[j]];
        std::string name;
        std::vector<std::pair<char, int>> candidates;
        candidates.emplace_back('A', n);
        if (n >= 2) candidates.emplace_back('B', n);
        if (n >= 3) candidates.emplace_back('C', n);
        if (n >= 4) candidates.emplace_back('D', n);
        if (n >= 6 && n <= 8) candidates.emplace_back('E', n);
        if (n == 4) candidates.emplace_back('F', n);
        if (n == 2) candidates.emplace_back('G', n);
        for (auto [letter, r] : candidates) {
            if (cartan_matches_upto_perm(sub, finite_type_cartan(letter, r), n)) {
                name = std::string(1, letter) + std::to_string(r);
                break;
            }
        }
        if (name.empty())
            throw not_finite_type_error("component of rank " + std::to_string(n) +
                                        " is not of finite type");
        factors.push_back(name);
    }
    std::sort(factors.begin(), factors.end());
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += "x";
        out += f;
    }
    return out;
}

std::string cartan_subsystem_type(const GroupoidBundle& b, int x) {
    auto croots = cartan_roots(b, x);
    if (croots.empty()) return "0";
    std::set<Root> cset(croots.begin(), croots.end());
    std::vector<Root> simple;
    for (const Root& beta : croots) {
        bool decomposable = false;
        for (const Root& gamma : croots) {
            Root delta = beta;
            bool nonneg = true;
            for (std::size_t i = 0; i < delta.size(); ++i) {
                delta[i] -= gamma[i];
                if (delta[i] < 0) nonneg = false;
            }
            if (!nonneg || !is_positive_root_vector(delta)) continue;
            if (cset.count(delta)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(beta);
    }
    const int rank = static_cast<int>(simple.size());
    const auto& rep = b.points[x].rep;
    const auto& ctx = b.ctx;
    std::vector<int> c(static_cast<std::size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i) {
        c[static_cast<std::size_t>(i) * rank + i] = 2;
        Scalar qii = bilinear_form(rep, simple[i], simple[i]);
        auto ord = scalar_order(ctx, qii);
        for (int j = 0; j < rank; ++j) {
            if (j == i) continue;
            Scalar qt = scalar_mul(ctx, bilinear_form(rep, simple[i], simple[j]),
                                   bilinear_form(rep, simple[j], simple[i]));
            int found = -1;
            Scalar p = scalar_one();
            for (int n = 0; n <= 20; ++n) {
                bool qseries = ord && (n + 1) % *ord == 0;
                if (qseries || is_one(scalar_mul(ctx, p, qt))) {
                    found = n;
                    break;
                }
                p = scalar_mul(ctx, p, qii);
            }
            if (found < 0) throw not_finite_type_error("Cartan-root pairing is not admissible");
            c[static_cast<std::size_t>(i) * rank + j] = -found;
        }
    }
    return classify_finite_cartan(c, rank);
}

// ---------------------------------------------------------------------------
// scalar literals with instantiation twists (z -> z^t, q -> q^u)

namespace {

Scalar realize_literal(const std::string& text, const ScalarContext& ctx, std::int64_t t,
                       std::int64_t u) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw catalog_error("empty scalar literal");
    Scalar out = scalar_one();
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '-') {
        neg = true;
        ++pos;
        if (pos == s.size()) throw catalog_error("bad scalar literal '" + text + "'");
    }
    auto read_int = [&]() -> std::int64_t {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::stoll(s.substr(start, pos - start));
    };
    if (s[pos] == '1' && pos + 1 == s.size()) {
        ++pos;
    } else {
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            std::int64_t e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = read_int();
            }
            out = scalar_mul(ctx, out, scalar_zeta(ctx, e * t));
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            std::int64_t e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = read_int();
            }
            out = scalar_mul(ctx, out, scalar_pow(ctx, scalar_param(ctx), e * u));
        }
    }
    if (pos != s.size()) throw catalog_error("bad scalar literal '" + text + "'");
    if (neg) {
        if (ctx.modulus % 2 != 0) throw catalog_error("'-' needs even modulus in '" + text + "'");
        out = scalar_mul(ctx, out, scalar_torsion(ctx, ctx.modulus / 2));
    }
    return out;
}

BraidingMatrix matrix_from_parts(const ScalarContext& ctx, int theta, std::vector<Scalar> diag,
                                 const std::map<std::pair<int, int>, Scalar>& edges) {
    std::vector<Scalar> entries(static_cast<std::size_t>(theta) * theta, scalar_one());
    for (int i = 0; i < theta; ++i) entries[static_cast<std::size_t>(i) * theta + i] = diag[i];
    for (const auto& [e, s] : edges) {
        int a = e.first - 1, b = e.second - 1;
        entries[static_cast<std::size_t>(std::min(a, b)) * theta + std::max(a, b)] = s;
    }
    return BraidingMatrix(ctx, theta, std::move(entries));
}

BraidingMatrix build_from_json_point(const json& point, int theta, const ScalarContext& ctx,
                                     std::int64_t t, std::int64_t u) {
    std::vector<Scalar> diag;
    for (const auto& d : point.at("diagonal"))
        diag.push_back(realize_literal(d.get<std::string>(), ctx, t, u));
    std::map<std::pair<int, int>, Scalar> edges;
    if (point.contains("edges"))
        for (const auto& e : point.at("edges"))
            edges[{e[0].get<int>(), e[1].get<int>()}] =
                realize_literal(e[2].get<std::string>(), ctx, t, u);
    return matrix_from_parts(ctx, theta, std::move(diag), edges);
}

// S_J = |sum (-1)^l i_l| over J = {i_1 < ... < i_k}
int subset_charge(const std::vector<int>& J) {
    int s = 0, sign = -1;
    for (int i : J) {
        s += sign * i;
        sign = -sign;
    }
    return std::abs(s);
}

int count_subsets_with_charge(int theta, int charge, bool nonempty) {
    int count = 0;
    for (int mask = 0; mask < (1 << theta); ++mask) {
        if (nonempty && mask == 0) continue;
        std::vector<int> J;
        for (int i = 0; i < theta; ++i)
            if (mask & (1 << i)) J.push_back(i + 1);
        if (subset_charge(J) == charge) ++count;
    }
    return count;
}

struct AChain {
    std::vector<Scalar> diag;
    std::vector<Scalar> edge;  // qtilde between vertices i and i+1 at index i-1
};

// A_theta(qt; J), determined from the right by the three defining rules
AChain a_theta_builder(const ScalarContext& ctx, int theta, const Scalar& qt,
                       const std::vector<int>& J) {
    auto inJ = [&](int i) { return std::binary_search(J.begin(), J.end(), i); };
    AChain c;
    c.diag.assign(theta, scalar_one());
    c.edge.assign(std::max(theta - 1, 0), scalar_one());
    Scalar minus1 = scalar_torsion(ctx, ctx.modulus / 2);
    for (int i = theta; i >= 1; --i) {
        if (i == theta) {
            if (inJ(theta)) {
                c.diag[theta - 1] = minus1;
                if (theta >= 2) c.edge[theta - 2] = qt;
            } else {
                c.diag[theta - 1] = qt;
                if (theta >= 2) c.edge[theta - 2] = scalar_inv(ctx, qt);
            }
            continue;
        }
        const Scalar right = c.edge[i - 1];
        if (inJ(i)) {
            c.diag[i - 1] = minus1;
            if (i >= 2) c.edge[i - 2] = scalar_inv(ctx, right);
        } else {
            c.diag[i - 1] = scalar_inv(ctx, right);
            if (i >= 2) c.edge[i - 2] = right;
        }
    }
    return c;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt pow2(int n) {
    BigInt f = 1;
    for (int i = 0; i < n; ++i) f *= 2;
    return f;
}

std::string lie_label(std::vector<std::pair<char, int>> factors) {
    std::vector<std::string> names;
    for (auto [letter, r] : factors) {
        if (r <= 0) continue;
        if (letter == 'D' && r == 1)
            names.push_back("A1");
        else if (letter == 'D' && r == 2) {
            names.push_back("A1");
            names.push_back("A1");
        } else if (letter == 'D' && r == 3)
            names.push_back("A3");
        else if ((letter == 'B' || letter == 'C') && r == 1)
            names.push_back("A1");
        else if (letter == 'C' && r == 2)
            names.push_back("B2");
        else
            names.push_back(std::string(1, letter) + std::to_string(r));
    }
    if (names.empty()) return "0";
    std::sort(names.begin(), names.end());
    std::string out;
    for (auto& n : names) {
        if (!out.empty()) out += "x";
        out += n;
    }
    return out;
}

std::string normalize_lie(const std::string& label) {
    if (label.empty() || label == "0") return label;
    std::vector<std::string> factors;
    std::stringstream ss(label);
    std::string f;
    while (std::getline(ss, f, 'x'))
        if (!f.empty()) factors.push_back(f);
    std::sort(factors.begin(), factors.end());
    std::string out;
    for (auto& x : factors) {
        if (!out.empty()) out += "x";
        out += x;
    }
    return out;
}

int parity(const std::vector<int>& J, const Root& beta) {  // +1 even, -1 odd
    int s = 0;
    for (int i : J)
        if (i - 1 < static_cast<int>(beta.size())) s += beta[i - 1];
    return s % 2 == 0 ? 1 : -1;
}

Root alpha_range(int theta, int i, int k) {  // alpha_i + ... + alpha_k, 1-based
    Root r(theta, 0);
    for (int l = i; l <= k; ++l) r[l - 1] = 1;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// catalog implementation

struct Catalog::Impl {
    std::string data_dir;
    std::map<std::string, json> data_families;
    std::vector<std::string> label_order;

    mutable std::map<std::string, std::vector<std::pair<std::string, std::string>>> recog_cache;

    void load(const std::string& dir) {
        data_dir = dir;
        namespace fs = std::filesystem;
        if (!fs::exists(dir)) throw catalog_error("catalog data directory '" + dir + "' not found");
        std::vector<std::string> paths;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) {
            std::ifstream in(p);
            json j = json::parse(in);
            data_families[j.at("label").get<std::string>()] = j;
        }
        for (const char* l : {"Cartan:A", "Cartan:B", "Cartan:C", "Cartan:D", "Cartan:E",
                              "Cartan:F4", "Cartan:G2", "super:A", "super:B", "super:D",
                              "super:D(2,1;a)", "standard:B", "modular:br(2,a)"})
            label_order.push_back(l);
        for (const auto& [label, j] : data_families) label_order.push_back(label);
    }

    bool is_data_family(const std::string& label) const { return data_families.count(label) > 0; }

    struct Instantiation {
        ScalarContext ctx;
        std::int64_t t = 1;
        std::int64_t u = 1;
        std::optional<std::int64_t> N;
        bool n_infinite = false;
        Scalar q = scalar_one();
        bool has_q = false;
    };

    static Instantiation make_inst(std::int64_t zeta_order, const CatalogParams& params,
                                   std::optional<std::int64_t> min_order, bool infinite_ok,
                                   const std::vector<std::int64_t>& allowed_orders,
                                   const std::vector<std::int64_t>& excluded_orders, bool has_q) {
        Instantiation inst;
        inst.t = params.get_int("t").value_or(1);
        if (zeta_order > 1 && gcd64(mod64(inst.t, zeta_order), zeta_order) != 1)
            throw catalog_error("t must be coprime to " + std::to_string(zeta_order));
        if (!has_q) {
            inst.ctx = ScalarContext::make(zeta_order, std::nullopt);
            return inst;
        }
        auto nstr = params.get("N");
        if (!nstr) throw catalog_error("family needs parameter N (order of q, or 'inf')");
        if (*nstr == "inf") {
            if (!infinite_ok) throw catalog_error("N=inf not allowed for this family");
            inst.n_infinite = true;
            inst.ctx = ScalarContext::make(zeta_order, std::nullopt, true);
            inst.u = params.get_int("u").value_or(1);
            if (inst.u != 1 && inst.u != -1) throw catalog_error("u must be +-1 when N is infinite");
        } else {
            std::int64_t N = std::stoll(*nstr);
            if (!allowed_orders.empty()) {
                if (std::find(allowed_orders.begin(), allowed_orders.end(), N) == allowed_orders.end())
                    throw catalog_error("N=" + *nstr + " not allowed for this family");
            } else {
                if (min_order && N < *min_order)
                    throw catalog_error("N=" + *nstr + " below the family constraint");
                if (std::find(excluded_orders.begin(), excluded_orders.end(), N) !=
                    excluded_orders.end())
                    throw catalog_error("N=" + *nstr + " excluded for this family");
            }
            inst.N = N;
            inst.ctx = ScalarContext::make(zeta_order, N);
            inst.u = params.get_int("u").value_or(1);
            if (gcd64(mod64(inst.u, N), N) != 1) throw catalog_error("u must be coprime to N");
        }
        inst.has_q = true;
        inst.q = scalar_pow(inst.ctx, scalar_param(inst.ctx), inst.u);
        return inst;
    }

    static Instantiation instantiate_data(const json& fam, const CatalogParams& params) {
        std::int64_t zorder = fam.at("context").at("zeta_order").get<std::int64_t>();
        bool has_q = fam.at("context").contains("q");
        std::optional<std::int64_t> min_order;
        bool infinite_ok = false;
        std::vector<std::int64_t> allowed, excluded;
        if (has_q) {
            const auto& qc = fam.at("context").at("q");
            if (qc.contains("min_order")) min_order = qc.at("min_order").get<std::int64_t>();
            infinite_ok = qc.value("infinite_ok", false);
            if (qc.contains("orders"))
                for (const auto& o : qc.at("orders")) allowed.push_back(o.get<std::int64_t>());
            if (qc.contains("excluded_orders"))
                for (const auto& o : qc.at("excluded_orders"))
                    excluded.push_back(o.get<std::int64_t>());
        }
        return make_inst(zorder, params, min_order, infinite_ok, allowed, excluded, has_q);
    }

    static ExprEnv env_for(const Instantiation& inst) {
        ExprEnv env;
        if (inst.has_q && !inst.n_infinite) {
            const auto& ctx = inst.ctx;
            auto ordv = [&](const Scalar& s) { return BigInt(*scalar_order(ctx, s)); };
            env.vars["N"] = ordv(inst.q);
            env.vars["M"] = ordv(scalar_pow(ctx, inst.q, 2));
            env.vars["L"] = ordv(scalar_pow(ctx, inst.q, 3));
            if (ctx.modulus % 2 == 0)
                env.vars["P"] = ordv(scalar_mul(ctx, inst.q, scalar_torsion(ctx, ctx.modulus / 2)));
        }
        return env;
    }

    std::vector<BuiltPoint> data_points(const std::string& label, const CatalogParams& params) const {
        const json& fam = data_families.at(label);
        Instantiation inst = instantiate_data(fam, params);
        int theta = fam.at("theta").get<int>();
        std::vector<BuiltPoint> out;
        for (const auto& p : fam.at("points"))
            out.push_back({p.at("name").get<std::string>(),
                           build_from_json_point(p, theta, inst.ctx, inst.t, inst.u)});
        return out;
    }

    Expected data_expected(const std::string& label, const CatalogParams& params) const {
        const json& fam = data_families.at(label);
        Instantiation inst = instantiate_data(fam, params);
        ExprEnv env = env_for(inst);
        const json& ex = fam.at("expected");
        Expected e;
        int theta = fam.at("theta").get<int>();
        if (ex.contains("n_points")) e.n_points = ex.at("n_points").get<int>();
        if (ex.contains("n_positive_roots")) e.n_positive_roots = ex.at("n_positive_roots").get<int>();
        if (ex.contains("isotropy_order")) e.isotropy_order = ex.at("isotropy_order").get<std::string>();
        if (ex.contains("lie_type") && !inst.n_infinite)
            e.lie_type = normalize_lie(ex.at("lie_type").get<std::string>());

        auto eval_dim = [&](const json& block) {
            if (!block.contains("dim") || inst.n_infinite) return;
            e.dim_all_points = eval_expr(block.at("dim").get<std::string>(), env).str();
        };
        auto merge_point_block = [&](const json& per_point) {
            for (const auto& [name, pdata] : per_point.items()) {
                ExpectedPoint& ep = e.per_point[name];
                if (pdata.contains("ya") && !inst.n_infinite) {
                    Root ya;
                    for (const auto& coeff : pdata.at("ya")) {
                        if (coeff.is_number())
                            ya.push_back(coeff.get<int>());
                        else
                            ya.push_back(static_cast<int>(eval_expr(coeff.get<std::string>(), env)));
                    }
                    ep.ya = ya;
                }
                if (pdata.contains("cartan_roots")) {
                    std::vector<Root> cr;
                    for (const auto& r : pdata.at("cartan_roots"))
                        cr.push_back(parse_compressed_root(r.get<std::string>(), theta));
                    std::sort(cr.begin(), cr.end());
                    ep.cartan_roots = cr;
                }
                if (pdata.contains("roots")) {
                    std::vector<Root> rr;
                    for (const auto& r : pdata.at("roots"))
                        rr.push_back(parse_compressed_root(r.get<std::string>(), theta));
                    std::sort(rr.begin(), rr.end());
                    ep.roots = rr;
                }
            }
        };
        eval_dim(ex);
        if (ex.contains("per_point")) merge_point_block(ex.at("per_point"));
        if (ex.contains("cases"))
            for (const auto& block : ex.at("cases")) {
                if (block.contains("when")) {
                    bool match = true;
                    for (const auto& [k, v] : block.at("when").items())
                        if (k == "N" && (!inst.N || *inst.N != v.get<std::int64_t>())) match = false;
                    if (!match) continue;
                }
                eval_dim(block);
                if (block.contains("per_point")) merge_point_block(block.at("per_point"));
            }
        if (ex.contains("gk_if_infinite") && inst.n_infinite)
            e.gk = ex.at("gk_if_infinite").get<int>();
        return e;
    }

    // ---- code families -------------------------------------------------------

    struct HeightRule {
        Root root;
        std::optional<std::int64_t> height;
        bool cartan = false;
    };

    struct SeriesInfo {
        std::vector<BuiltPoint> points;
        Expected expected;
    };

    static void finish_expected_from_rules(Expected& e, const std::string& base,
                                           const std::vector<HeightRule>& rules, bool want_ya) {
        BigInt dim = 1;
        bool finite = true;
        int gk = 0;
        Root ya(rules.empty() ? 0 : rules.front().root.size(), 0);
        std::vector<Root> croots, roots;
        for (const auto& r : rules) {
            roots.push_back(r.root);
            if (r.cartan) croots.push_back(r.root);
            if (!r.height) {
                finite = false;
                ++gk;
            } else {
                dim *= *r.height;
                for (std::size_t k = 0; k < ya.size(); ++k)
                    ya[k] += static_cast<int>(*r.height - 1) * r.root[k];
            }
        }
        e.n_positive_roots = static_cast<int>(rules.size());
        if (finite)
            e.dim_all_points = dim.str();
        else
            e.gk = gk;
        std::sort(croots.begin(), croots.end());
        std::sort(roots.begin(), roots.end());
        ExpectedPoint& ep = e.per_point[base];
        ep.cartan_roots = croots;
        ep.roots = roots;
        if (finite && want_ya) ep.ya = ya;
    }

    SeriesInfo cartan_family(char type, const CatalogParams& params) const {
        std::int64_t theta = params.get_int("theta").value_or(type == 'G' ? 2 : type == 'F' ? 4 : 0);
        if (type == 'G') theta = 2;
        if (type == 'F') theta = 4;
        if (theta < 1) throw catalog_error("theta required");
        if (type == 'B' && theta < 2) throw catalog_error("Cartan B needs theta >= 2");
        if (type == 'C' && theta < 3) throw catalog_error("Cartan C needs theta >= 3");
        if (type == 'D' && theta < 4) throw catalog_error("Cartan D needs theta >= 4");
        if (type == 'E' && (theta < 6 || theta > 8)) throw catalog_error("Cartan E needs theta in 6..8");
        std::int64_t min_order = (type == 'G') ? 4 : (type == 'B' || type == 'C' || type == 'F') ? 3 : 2;
        Instantiation inst = make_inst(1, params, min_order, true, {}, {}, true);
        const auto& ctx = inst.ctx;
        const Scalar q = inst.q;
        const int n = static_cast<int>(theta);

        std::vector<Scalar> diag(n, q);
        std::map<std::pair<int, int>, Scalar> edges;
        auto qpow = [&](int k) { return scalar_pow(ctx, q, k); };
        switch (type) {
            case 'A':
                for (int i = 1; i < n; ++i) edges[{i, i + 1}] = qpow(-1);
                break;
            case 'B':
                for (int i = 0; i < n - 1; ++i) diag[i] = qpow(2);
                for (int i = 1; i < n; ++i) edges[{i, i + 1}] = qpow(-2);
                break;
            case 'C':
                diag[n - 1] = qpow(2);
                for (int i = 1; i + 1 < n; ++i) edges[{i, i + 1}] = qpow(-1);
                edges[{n - 1, n}] = qpow(-2);
                break;
            case 'D':
                for (int i = 1; i + 1 < n; ++i) edges[{i, i + 1}] = qpow(-1);
                edges[{n - 2, n}] = qpow(-1);
                break;
            case 'E':
                for (int i = 1; i < n; ++i) edges[{i, i + 1}] = qpow(-1);
                edges.erase({n - 1, n});
                edges[{n - 3, n}] = qpow(-1);
                break;
            case 'F':
                edges[{1, 2}] = qpow(-1);
                edges[{2, 3}] = qpow(-2);
                edges[{3, 4}] = qpow(-2);
                diag[2] = diag[3] = qpow(2);
                break;
            case 'G':
                diag[1] = qpow(3);
                edges[{1, 2}] = qpow(-3);
                break;
        }
        SeriesInfo out;
        out.points.push_back({"a1", matrix_from_parts(ctx, n, diag, edges)});

        std::vector<Root> roots;
        if (type == 'A') {
            for (int i = 1; i <= n; ++i)
                for (int k = i; k <= n; ++k) roots.push_back(alpha_range(n, i, k));
        } else if (type == 'B') {
            for (int i = 1; i <= n; ++i)
                for (int k = i; k <= n; ++k) roots.push_back(alpha_range(n, i, k));
            for (int i = 1; i <= n; ++i)
                for (int k = i + 1; k <= n; ++k)
                    roots.push_back(add_roots(alpha_range(n, i, n), alpha_range(n, k, n)));
        } else if (type == 'C') {
            for (int i = 1; i <= n; ++i)
                for (int k = i; k <= n; ++k) roots.push_back(alpha_range(n, i, k));
            for (int i = 1; i <= n - 1; ++i)
                for (int k = i; k <= n - 1; ++k)
                    roots.push_back(add_roots(alpha_range(n, i, n), alpha_range(n, k, n - 1)));
        } else if (type == 'D') {
            for (int i = 1; i <= n; ++i)
                for (int k = i; k <= n; ++k)
                    if (!(i == n - 1 && k == n)) roots.push_back(alpha_range(n, i, k));
            for (int i = 1; i <= n - 2; ++i) {
                Root r = alpha_range(n, i, n - 2);
                r[n - 1] += 1;
                roots.push_back(r);
            }
            for (int i = 1; i <= n - 2; ++i)
                for (int k = i + 1; k <= n - 2; ++k)
                    roots.push_back(add_roots(alpha_range(n, i, n), alpha_range(n, k, n - 2)));
        }
        const BraidingMatrix& base = out.points[0].matrix;
        Expected& e = out.expected;
        e.n_points = 1;
        switch (type) {
            case 'A':
                e.isotropy_order = factorial(n + 1).str();
                e.lie_type = lie_label({{'A', n}});
                break;
            case 'B':
            case 'C':
                e.isotropy_order = (pow2(n) * factorial(n)).str();
                break;
            case 'D':
                e.isotropy_order = (pow2(n - 1) * factorial(n)).str();
                e.lie_type = lie_label({{'D', n}});
                break;
            case 'E':
                e.isotropy_order =
                    (n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600)).str();
                e.lie_type = lie_label({{'E', n}});
                break;
            case 'F':
                e.isotropy_order = "1152";
                e.lie_type = "F4";
                break;
            case 'G':
                e.isotropy_order = "12";
                e.lie_type = "G2";
                break;
        }
        if (!inst.n_infinite) {
            bool n_even = *inst.N % 2 == 0;
            if (type == 'B') e.lie_type = lie_label({{n_even ? 'C' : 'B', n}});
            if (type == 'C') e.lie_type = lie_label({{n_even ? 'B' : 'C', n}});
        } else if (type == 'B' || type == 'C') {
            e.lie_type.reset();
        }

        if (!roots.empty()) {
            std::vector<HeightRule> rules;
            for (const Root& r : roots)
                rules.push_back({r, scalar_order(ctx, bilinear_form(base, r, r)), true});
            finish_expected_from_rules(e, "a1", rules, true);
        } else {
            ExprEnv env = env_for(inst);
            if (type == 'E') {
                int d = n == 6 ? 36 : n == 7 ? 63 : 120;
                e.n_positive_roots = d;
                if (!inst.n_infinite)
                    e.dim_all_points = eval_expr("N^" + std::to_string(d), env).str();
                else
                    e.gk = d;
            } else if (type == 'F') {
                e.n_positive_roots = 24;
                if (!inst.n_infinite) {
                    e.dim_all_points = eval_expr("M^12*N^12", env).str();
                    std::int64_t N = static_cast<std::int64_t>(env.vars["N"]);
                    std::int64_t M = static_cast<std::int64_t>(env.vars["M"]);
                    e.per_point["a1"].ya = Root{static_cast<int>(12 * M + 10 * N - 22),
                                                static_cast<int>(24 * M + 18 * N - 42),
                                                static_cast<int>(18 * M + 12 * N - 30),
                                                static_cast<int>(10 * M + 6 * N - 16)};
                } else {
                    e.gk = 24;
                }
            } else {  // G
                e.n_positive_roots = 6;
                if (!inst.n_infinite) {
                    e.dim_all_points = eval_expr("L^3*N^3", env).str();
                    std::int64_t N = static_cast<std::int64_t>(env.vars["N"]);
                    std::int64_t L = static_cast<std::int64_t>(env.vars["L"]);
                    ExpectedPoint& ep = e.per_point["a1"];
                    ep.ya = Root{static_cast<int>(6 * L + 4 * N - 10),
                                 static_cast<int>(4 * L + 2 * N - 6)};
                    ep.roots = std::vector<Root>{{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
                    ep.cartan_roots = ep.roots;
                } else {
                    e.gk = 6;
                }
            }
        }
        return out;
    }

    SeriesInfo super_a_family(const CatalogParams& params) const {
        std::int64_t theta = params.get_int("theta").value_or(0);
        if (theta < 2) throw catalog_error("super:A needs theta >= 2");
        std::vector<int> J = params.get_set("J");
        if (J.empty() || J.back() > theta) throw catalog_error("super:A needs a J subset of I_theta");
        Instantiation inst = make_inst(2, params, 3, true, {}, {}, true);
        const auto& ctx = inst.ctx;
        const int n = static_cast<int>(theta);
        int s = subset_charge(J);
        if (s < 1 || s > n) throw catalog_error("J has invalid charge");
        int jj = std::min(s, n + 1 - s);
        bool bar = params.get_int("bar").value_or(0) != 0;
        bool inverse = (s != jj) != bar;
        Scalar qt = inverse ? scalar_inv(ctx, inst.q) : inst.q;
        AChain chain = a_theta_builder(ctx, n, qt, J);
        std::map<std::pair<int, int>, Scalar> edges;
        for (int i = 1; i < n; ++i)
            if (!is_one(chain.edge[i - 1])) edges[{i, i + 1}] = chain.edge[i - 1];
        SeriesInfo out;
        out.points.push_back({"J", matrix_from_parts(ctx, n, chain.diag, edges)});

        std::vector<HeightRule> rules;
        for (int i = 1; i <= n; ++i)
            for (int k = i; k <= n; ++k) {
                HeightRule hr;
                hr.root = alpha_range(n, i, k);
                bool even = parity(J, hr.root) == 1;
                hr.cartan = even;
                hr.height = even ? scalar_order(ctx, inst.q) : std::optional<std::int64_t>(2);
                rules.push_back(hr);
            }
        Expected& e = out.expected;
        int cnt = count_subsets_with_charge(n, jj, true);
        int cnt2 = (jj == n + 1 - jj) ? cnt : count_subsets_with_charge(n, n + 1 - jj, true);
        e.n_points = cnt + cnt2;
        e.isotropy_order = (factorial(jj) * factorial(n + 1 - jj)).str();
        e.lie_type = lie_label({{'A', jj - 1}, {'A', n - jj}});
        finish_expected_from_rules(e, "J", rules, true);
        return out;
    }

    SeriesInfo super_b_family(const CatalogParams& params) const {
        std::int64_t theta = params.get_int("theta").value_or(0);
        if (theta < 2) throw catalog_error("super:B needs theta >= 2");
        std::vector<int> J = params.get_set("J");
        if (J.empty() || J.back() > theta) throw catalog_error("super:B needs a J subset of I_theta");
        Instantiation inst = make_inst(2, params, 3, true, {}, {4}, true);
        const auto& ctx = inst.ctx;
        const int n = static_cast<int>(theta);
        int j = subset_charge(J);
        if (j < 1 || j > n - 1) throw catalog_error("J must have charge in 1..theta-1");
        bool top = std::binary_search(J.begin(), J.end(), n);
        Scalar q = inst.q;
        Scalar qt = top ? scalar_pow(ctx, q, -2) : scalar_pow(ctx, q, 2);
        AChain chain = a_theta_builder(ctx, n - 1, qt, J);
        std::map<std::pair<int, int>, Scalar> edges;
        for (int i = 1; i + 1 < n; ++i)
            if (!is_one(chain.edge[i - 1])) edges[{i, i + 1}] = chain.edge[i - 1];
        std::vector<Scalar> diag = chain.diag;
        Scalar minus1 = scalar_torsion(ctx, ctx.modulus / 2);
        if (top) {
            diag.push_back(scalar_mul(ctx, minus1, scalar_inv(ctx, q)));
            edges[{n - 1, n}] = scalar_pow(ctx, q, 2);
        } else {
            diag.push_back(q);
            edges[{n - 1, n}] = scalar_pow(ctx, q, -2);
        }
        SeriesInfo out;
        out.points.push_back({"J", matrix_from_parts(ctx, n, diag, edges)});

        auto N = scalar_order(ctx, q);
        auto M = scalar_order(ctx, scalar_pow(ctx, q, 2));
        auto P = scalar_order(ctx, scalar_mul(ctx, minus1, q));
        std::vector<HeightRule> rules;
        for (int i = 1; i <= n; ++i)
            for (int k = i; k <= n; ++k) {
                HeightRule hr;
                hr.root = alpha_range(n, i, k);
                bool even = parity(J, hr.root) == 1;
                if (k < n) {
                    hr.height = even ? M : std::optional<std::int64_t>(2);
                    hr.cartan = even;
                } else {
                    hr.height = even ? N : P;
                    hr.cartan = true;
                }
                rules.push_back(hr);
            }
        for (int i = 1; i <= n; ++i)
            for (int k = i + 1; k <= n; ++k) {
                HeightRule hr;
                hr.root = add_roots(alpha_range(n, i, n), alpha_range(n, k, n));
                bool even = parity(J, alpha_range(n, i, k - 1)) == 1;
                hr.height = even ? M : std::optional<std::int64_t>(2);
                hr.cartan = even;
                rules.push_back(hr);
            }
        Expected& e = out.expected;
        e.n_points = count_subsets_with_charge(n, j, true);
        e.isotropy_order = (pow2(n) * factorial(j) * factorial(n - j)).str();
        if (!inst.n_infinite)
            e.lie_type = lie_label({{'C', j}, {(*inst.N % 2 == 1) ? 'B' : 'C', n - j}});
        finish_expected_from_rules(e, "J", rules, true);
        return out;
    }

    SeriesInfo super_d_family(const CatalogParams& params) const {
        std::int64_t theta = params.get_int("theta").value_or(0);
        if (theta < 2) throw catalog_error("super:D needs theta >= 2");
        std::vector<int> J = params.get_set("J");
        std::string sector = params.get("sector").value_or("c");
        Instantiation inst = make_inst(2, params, 3, true, {}, {}, true);
        const auto& ctx = inst.ctx;
        const int n = static_cast<int>(theta);
        if (!J.empty() && J.back() > n - 1) throw catalog_error("super:D J must lie in I_{theta-1}");
        int s = subset_charge(J);
        int j = (sector == "d") ? n - s : s;
        if (j < 1 || j > n - 1) throw catalog_error("super:D charge out of range");
        Scalar q = inst.q;
        Scalar minus1 = scalar_torsion(ctx, ctx.modulus / 2);
        SeriesInfo out;
        std::map<std::pair<int, int>, Scalar> edges;
        if (sector == "c" || sector == "ct") {
            AChain chain = a_theta_builder(ctx, n - 1, q, J);
            for (int i = 1; i + 1 < n; ++i)
                if (!is_one(chain.edge[i - 1])) edges[{i, i + 1}] = chain.edge[i - 1];
            std::vector<Scalar> diag = chain.diag;
            diag.push_back(scalar_pow(ctx, q, 2));
            edges[{n - 1, n}] = scalar_pow(ctx, q, -2);
            if (sector == "ct") {
                std::swap(diag[n - 2], diag[n - 1]);
                std::map<std::pair<int, int>, Scalar> swapped;
                auto relabel = [&](int v) { return v == n - 1 ? n : v == n ? n - 1 : v; };
                for (auto& [e2, sc] : edges) {
                    int a = relabel(e2.first), b = relabel(e2.second);
                    swapped[{std::min(a, b), std::max(a, b)}] = sc;
                }
                edges = std::move(swapped);
            }
            out.points.push_back({"J", matrix_from_parts(ctx, n, diag, edges)});
        } else if (sector == "d") {
            bool has = std::binary_search(J.begin(), J.end(), n - 1);
            std::vector<int> Jcut;
            for (int i : J)
                if (i <= n - 2) Jcut.push_back(i);
            AChain chain = a_theta_builder(ctx, n - 2, has ? q : scalar_inv(ctx, q), Jcut);
            for (int i = 1; i + 2 < n; ++i)
                if (!is_one(chain.edge[i - 1])) edges[{i, i + 1}] = chain.edge[i - 1];
            std::vector<Scalar> diag = chain.diag;
            if (has) {
                diag.push_back(minus1);
                diag.push_back(minus1);
                edges[{n - 2, n - 1}] = scalar_inv(ctx, q);
                edges[{n - 2, n}] = scalar_inv(ctx, q);
                edges[{n - 1, n}] = scalar_pow(ctx, q, 2);
            } else {
                diag.push_back(scalar_inv(ctx, q));
                diag.push_back(scalar_inv(ctx, q));
                edges[{n - 2, n - 1}] = q;
                edges[{n - 2, n}] = q;
            }
            out.points.push_back({"J", matrix_from_parts(ctx, n, diag, edges)});
        } else {
            throw catalog_error("super:D sector must be c, ct or d");
        }

        Expected& e = out.expected;
        int cnt_c = count_subsets_with_charge(n - 1, j, false);
        int cnt_d = count_subsets_with_charge(n - 1, n - j, false);
        e.n_points = 2 * cnt_c + cnt_d;
        e.isotropy_order = (pow2(j - 1) * factorial(j) * pow2(n - j) * factorial(n - j)).str();
        if (sector == "c") {
            std::vector<Root> roots, croots;
            for (int i = 1; i <= n; ++i)
                for (int k = i; k <= n; ++k) {
                    roots.push_back(alpha_range(n, i, k));
                    if (parity(J, roots.back()) == 1) croots.push_back(roots.back());
                }
            for (int i = 1; i <= n - 1; ++i)
                for (int k = i; k <= n - 1; ++k) {
                    Root r = add_roots(alpha_range(n, i, n), alpha_range(n, k, n - 1));
                    if (i == k) {
                        if (parity(J, alpha_range(n, i, n - 1)) == 1) {
                            roots.push_back(r);
                            croots.push_back(r);
                        }
                    } else {
                        roots.push_back(r);
                        if (parity(J, r) == 1) croots.push_back(r);
                    }
                }
            std::sort(roots.begin(), roots.end());
            std::sort(croots.begin(), croots.end());
            e.n_positive_roots = static_cast<int>(roots.size());
            ExpectedPoint& ep = e.per_point["J"];
            ep.roots = roots;
            ep.cartan_roots = croots;
        }
        return out;
    }

    SeriesInfo standard_b_family(const CatalogParams& params) const {
        std::int64_t theta = params.get_int("theta").value_or(0);
        if (theta < 2) throw catalog_error("standard:B needs theta >= 2");
        std::vector<int> J = params.get_set("J");
        if (J.empty() || J.back() > theta)
            throw catalog_error("standard:B needs a J subset of I_theta");
        Instantiation inst = make_inst(6, params, std::nullopt, false, {}, {}, false);
        const auto& ctx = inst.ctx;
        const int n = static_cast<int>(theta);
        int j = subset_charge(J);
        if (j < 1 || j > n - 1) throw catalog_error("J must have charge in 1..theta-1");
        Scalar zeta = scalar_torsion(ctx, mod64(2 * inst.t, 6));  // order 3
        Scalar minus1 = scalar_torsion(ctx, 3);
        Scalar mzi = scalar_mul(ctx, minus1, scalar_inv(ctx, zeta));
        Scalar mz = scalar_mul(ctx, minus1, zeta);
        bool top = std::binary_search(J.begin(), J.end(), n);
        AChain chain = a_theta_builder(ctx, n - 1, top ? mz : mzi, J);
        std::map<std::pair<int, int>, Scalar> edges;
        for (int i = 1; i + 1 < n; ++i)
            if (!is_one(chain.edge[i - 1])) edges[{i, i + 1}] = chain.edge[i - 1];
        std::vector<Scalar> diag = chain.diag;
        if (top) {
            diag.push_back(scalar_inv(ctx, zeta));
            edges[{n - 1, n}] = mzi;
        } else {
            diag.push_back(zeta);
            edges[{n - 1, n}] = mz;
        }
        SeriesInfo out;
        out.points.push_back({"J", matrix_from_parts(ctx, n, diag, edges)});

        std::vector<HeightRule> rules;
        for (int i = 1; i <= n; ++i)
            for (int k = i; k <= n; ++k) {
                HeightRule hr;
                hr.root = alpha_range(n, i, k);
                bool even = parity(J, hr.root) == 1;
                if (k < n) {
                    hr.height = even ? 6 : 2;
                    hr.cartan = even;
                } else {
                    hr.height = 3;
                    hr.cartan = false;
                }
                rules.push_back(hr);
            }
        for (int i = 1; i <= n; ++i)
            for (int k = i + 1; k <= n; ++k) {
                HeightRule hr;
                hr.root = add_roots(alpha_range(n, i, n), alpha_range(n, k, n));
                bool even = parity(J, alpha_range(n, i, k - 1)) == 1;
                hr.height = even ? 6 : 2;
                hr.cartan = even;
                rules.push_back(hr);
            }
        Expected& e = out.expected;
        e.n_points = count_subsets_with_charge(n, j, true);
        e.isotropy_order = (pow2(n) * factorial(j) * factorial(n - j)).str();
        finish_expected_from_rules(e, "J", rules, true);
        return out;
    }

    SeriesInfo d21a_family(const CatalogParams& params) const {
        std::int64_t M = params.get_int("M").value_or(0);
        std::int64_t kq = params.get_int("kq").value_or(0);
        std::int64_t kr = params.get_int("kr").value_or(0);
        if (M < 2) throw catalog_error("super:D(2,1;a) needs M (torsion order)");
        auto ctx = ScalarContext::make(lcm64(2, M), std::nullopt);
        std::int64_t scale = ctx.modulus / M;
        Scalar q = scalar_torsion(ctx, scale * kq);
        Scalar r = scalar_torsion(ctx, scale * kr);
        Scalar s = scalar_inv(ctx, scalar_mul(ctx, q, r));
        if (is_one(q) || is_one(r) || is_one(s))
            throw catalog_error("q, r, s must all differ from 1");
        Scalar minus1 = scalar_torsion(ctx, ctx.modulus / 2);
        SeriesInfo out;
        auto qi = [&](const Scalar& a) { return scalar_inv(ctx, a); };
        out.points.push_back({"a1", matrix_from_parts(ctx, 3, {q, minus1, r},
                                                      {{{1, 2}, qi(q)}, {{2, 3}, qi(r)}})});
        out.points.push_back({"a2", matrix_from_parts(ctx, 3, {minus1, q, s},
                                                      {{{1, 2}, qi(q)}, {{1, 3}, qi(s)}})});
        out.points.push_back({"a3", matrix_from_parts(ctx, 3, {minus1, minus1, minus1},
                                                      {{{1, 2}, q}, {{1, 3}, s}, {{2, 3}, r}})});
        out.points.push_back({"a4", matrix_from_parts(ctx, 3, {s, r, minus1},
                                                      {{{2, 3}, qi(r)}, {{1, 3}, qi(s)}})});
        std::int64_t N = *scalar_order(ctx, q), Mo = *scalar_order(ctx, r),
                     L = *scalar_order(ctx, s);
        Expected& e = out.expected;
        e.n_points = 4;
        e.n_positive_roots = 7;
        e.isotropy_order = "8";
        e.lie_type = "A1xA1xA1";
        e.dim_all_points = (BigInt(16) * N * Mo * L).str();
        auto mkroots = [&](std::initializer_list<const char*> rs) {
            std::vector<Root> v;
            for (const char* txt : rs) v.push_back(parse_compressed_root(txt, 3));
            std::sort(v.begin(), v.end());
            return v;
        };
        ExpectedPoint& a1 = e.per_point["a1"];
        a1.roots = mkroots({"1", "1 2", "1 2 3", "1 2^2 3", "2", "2 3", "3"});
        a1.cartan_roots = mkroots({"1", "1 2^2 3", "3"});
        a1.ya = Root{static_cast<int>(L + N), static_cast<int>(2 * L + 2), static_cast<int>(L + Mo)};
        ExpectedPoint& a3 = e.per_point["a3"];
        a3.roots = mkroots({"1", "1 2", "1 3", "1 2 3", "2", "2 3", "3"});
        a3.cartan_roots = mkroots({"1 2", "1 3", "2 3"});
        a3.ya = Root{static_cast<int>(L + N), static_cast<int>(Mo + N), static_cast<int>(L + Mo)};
        return out;
    }

    SeriesInfo br2a_family(const CatalogParams& params) const {
        Instantiation inst = make_inst(3, params, 2, true, {}, {3}, true);
        const auto& ctx = inst.ctx;
        Scalar zeta = scalar_zeta(ctx, inst.t);
        Scalar q = inst.q;
        SeriesInfo out;
        out.points.push_back(
            {"a1", matrix_from_parts(ctx, 2, {zeta, q}, {{{1, 2}, scalar_inv(ctx, q)}})});
        out.points.push_back(
            {"a2", matrix_from_parts(ctx, 2, {zeta, scalar_mul(ctx, zeta, scalar_inv(ctx, q))},
                                     {{{1, 2}, scalar_mul(ctx, scalar_pow(ctx, zeta, 2), q)}})});
        std::vector<HeightRule> rules;
        auto Mo = scalar_order(ctx, scalar_mul(ctx, zeta, scalar_inv(ctx, q)));
        rules.push_back({Root{1, 0}, 3, false});
        rules.push_back({Root{1, 1}, 3, false});
        rules.push_back({Root{2, 1}, Mo, true});
        rules.push_back({Root{0, 1}, scalar_order(ctx, q), true});
        Expected& e = out.expected;
        e.n_points = 2;
        e.isotropy_order = "4";
        e.lie_type = "A1xA1";
        finish_expected_from_rules(e, "a1", rules, true);
        return out;
    }

    SeriesInfo code_family(const std::string& label, const CatalogParams& params) const {
        if (label == "Cartan:A") return cartan_family('A', params);
        if (label == "Cartan:B") return cartan_family('B', params);
        if (label == "Cartan:C") return cartan_family('C', params);
        if (label == "Cartan:D") return cartan_family('D', params);
        if (label == "Cartan:E") return cartan_family('E', params);
        if (label == "Cartan:F4") return cartan_family('F', params);
        if (label == "Cartan:G2") return cartan_family('G', params);
        if (label == "super:A") return super_a_family(params);
        if (label == "super:B") return super_b_family(params);
        if (label == "super:D") return super_d_family(params);
        if (label == "super:D(2,1;a)") return d21a_family(params);
        if (label == "standard:B") return standard_b_family(params);
        if (label == "modular:br(2,a)") return br2a_family(params);
        throw unknown_label_error("unknown catalog label '" + label + "'");
    }
};

// ---------------------------------------------------------------------------
// public surface

namespace {

std::string locate_data_dir() {
    if (const char* env = std::getenv("NICHOLS_DATA_DIR")) return env;
#ifdef NICHOLS_SOURCE_DATA_DIR
    {
        std::filesystem::path p = std::filesystem::path(NICHOLS_SOURCE_DATA_DIR) / "catalog";
        if (std::filesystem::exists(p)) return p.string();
    }
#endif
    return "data/catalog";
}

}  // namespace

Catalog::Catalog(const std::string& data_dir) : impl_(std::make_unique<Impl>()) {
    impl_->load(data_dir);
}

Catalog::~Catalog() = default;

Catalog& Catalog::instance() {
    static Catalog cat(locate_data_dir());
    return cat;
}

std::vector<std::string> Catalog::labels() const { return impl_->label_order; }

bool Catalog::has(const std::string& label) const {
    return std::find(impl_->label_order.begin(), impl_->label_order.end(), label) !=
           impl_->label_order.end();
}

std::vector<BuiltPoint> Catalog::build_all_points(const std::string& label,
                                                  const CatalogParams& params) const {
    if (impl_->is_data_family(label)) return impl_->data_points(label, params);
    return impl_->code_family(label, params).points;
}

BuiltPoint Catalog::build_diagram(const std::string& label, const CatalogParams& params) const {
    auto points = build_all_points(label, params);
    if (points.empty()) throw catalog_error("family has no points");
    auto want = params.get("point");
    if (!want) {
        if (impl_->is_data_family(label)) {
            std::string base =
                impl_->data_families.at(label).value("base_point", points.front().name);
            for (auto& p : points)
                if (p.name == base) return p;
        }
        return points.front();
    }
    for (auto& p : points)
        if (p.name == *want) return p;
    throw catalog_error("point '" + *want + "' is not directly buildable for " + label);
}

Expected Catalog::expected(const std::string& label, const CatalogParams& params) const {
    if (impl_->is_data_family(label)) return impl_->data_expected(label, params);
    return impl_->code_family(label, params).expected;
}

VerifyReport Catalog::verify(const std::string& label, const CatalogParams& params) const {
    VerifyReport rep;
    rep.label = label;
    rep.params = params.str();
    auto note = [&](bool ok, const std::string& what, const std::string& got,
                    const std::string& want) {
        if (ok) {
            rep.checks.push_back("ok: " + what + " = " + got);
        } else {
            rep.match = false;
            rep.mismatches.push_back("FAIL: " + what + ": got " + got + ", expected " + want);
        }
    };

    std::vector<BuiltPoint> points = build_all_points(label, params);
    Expected exp = expected(label, params);
    const BuiltPoint base = build_diagram(label, params);
    GroupoidBundle bundle = enumerate_groupoid(base.matrix.twist_class());

    if (exp.n_points)
        note(static_cast<int>(bundle.points.size()) == *exp.n_points, "n_points",
             std::to_string(bundle.points.size()), std::to_string(*exp.n_points));
    if (exp.n_positive_roots) {
        bool all = true;
        for (std::size_t x = 0; x < bundle.points.size(); ++x)
            if (static_cast<int>(bundle.points[x].positive.size()) != *exp.n_positive_roots)
                all = false;
        note(all, "positive roots per point", std::to_string(bundle.points[0].positive.size()),
             std::to_string(*exp.n_positive_roots));
    }
    if (exp.isotropy_order) {
        BigInt got = isotropy_order(bundle, 0);
        note(got.str() == *exp.isotropy_order, "isotropy order", got.str(), *exp.isotropy_order);
    }
    if (exp.dim_all_points) {
        bool all = true;
        std::string got;
        for (std::size_t x = 0; x < bundle.points.size(); ++x) {
            auto d = dimension_report(bundle, static_cast<int>(x));
            got = d.dim ? d.dim->str() : "inf";
            if (!d.dim || d.dim->str() != *exp.dim_all_points) all = false;
        }
        note(all, "dimension at every point", got, *exp.dim_all_points);
    }
    if (exp.gk) {
        auto d = dimension_report(bundle, bundle.point_index(base.matrix.twist_class()));
        note(!d.dim && d.gk == *exp.gk, "GK-dimension", d.dim ? "finite" : std::to_string(d.gk),
             std::to_string(*exp.gk));
    }
    if (exp.lie_type) {
        int x = bundle.point_index(base.matrix.twist_class());
        std::string got;
        try {
            got = cartan_subsystem_type(bundle, x);
        } catch (const not_finite_type_error& err) {
            got = std::string("not-finite-type(") + err.what() + ")";
        }
        note(got == *exp.lie_type, "associated Lie type", got, *exp.lie_type);
        if (got == *exp.lie_type && got != "0") {
            BigInt want = 0;
            std::stringstream ss(got);
            std::string factor;
            while (std::getline(ss, factor, 'x'))
                want += positive_root_count(factor[0], std::stoi(factor.substr(1)));
            BigInt have = static_cast<int>(cartan_roots(bundle, x).size());
            note(have == want, "Cartan roots count vs Lie type", have.str(), want.str());
        }
    }
    for (const auto& bp : points) {
        auto it = exp.per_point.find(bp.name);
        int x = bundle.point_index(bp.matrix.twist_class());
        note(x >= 0, "point " + bp.name + " occurs in the bundle", x >= 0 ? "yes" : "no", "yes");
        if (x < 0 || it == exp.per_point.end()) continue;
        const ExpectedPoint& ep = it->second;
        if (ep.roots) {
            auto got = positive_roots(bundle, x);
            std::sort(got.begin(), got.end());
            note(got == *ep.roots, "root set at " + bp.name, std::to_string(got.size()) + " roots",
                 std::to_string(ep.roots->size()) + " printed roots");
        }
        if (ep.cartan_roots) {
            auto got = cartan_roots(bundle, x);
            std::sort(got.begin(), got.end());
            std::string gs, ws;
            for (auto& r : got) gs += format_root(r) + "; ";
            for (auto& r : *ep.cartan_roots) ws += format_root(r) + "; ";
            note(got == *ep.cartan_roots, "Cartan roots at " + bp.name, gs, ws);
        }
        if (ep.ya) {
            Root got = integral_degree(bundle, x);
            note(got == *ep.ya, "integral degree at " + bp.name, format_root(got),
                 format_root(*ep.ya));
        }
        if (ep.dim) {
            auto d = dimension_report(bundle, x);
            std::string got = d.dim ? d.dim->str() : "inf";
            note(got == *ep.dim, "dimension at " + bp.name, got, *ep.dim);
        }
    }
    return rep;
}

std::vector<Catalog::Instance> Catalog::default_instances() const {
    std::vector<Instance> out;
    auto add = [&](const std::string& label, const std::string& params) {
        out.push_back({label, params});
    };
    for (int theta = 1; theta <= 4; ++theta)
        for (int N : {2, 3, 5})
            add("Cartan:A", "theta=" + std::to_string(theta) + ",N=" + std::to_string(N));
    for (int theta = 2; theta <= 3; ++theta)
        for (int N : {3, 5})
            add("Cartan:B", "theta=" + std::to_string(theta) + ",N=" + std::to_string(N));
    for (int N : {3, 5}) add("Cartan:C", "theta=3,N=" + std::to_string(N));
    add("Cartan:D", "theta=4,N=3");
    add("Cartan:E", "theta=6,N=2");
    add("Cartan:F4", "N=5");
    add("Cartan:G2", "N=5");
    for (int N : {3, 4, 5}) {
        add("super:A", "theta=2,J=1,N=" + std::to_string(N));
        add("super:A", "theta=2,J=1+2,N=" + std::to_string(N));
        add("super:A", "theta=2,J=2,N=" + std::to_string(N));
    }
    add("super:A", "theta=3,J=2,N=3");
    add("super:A", "theta=4,J=1,N=3");
    add("super:B", "theta=2,J=1,N=3");
    add("super:B", "theta=3,J=1,N=3");
    add("super:B", "theta=3,J=2,N=5");
    add("super:D", "theta=3,J=1,N=3,sector=c");
    add("super:D", "theta=3,J=1,N=3,sector=ct");
    add("super:D", "theta=3,J=2,N=5,sector=d");
    add("super:D(2,1;a)", "M=12,kq=4,kr=3");
    add("super:F(4)", "N=5");
    add("super:G(3)", "N=4");
    add("super:G(3)", "N=5");
    add("standard:B", "theta=2,J=1");
    add("standard:B", "theta=3,J=1");
    add("standard:G2", "");
    add("modular:bgl(4)", "N=5");
    add("modular:br(2,a)", "N=2");
    add("modular:br(2,a)", "N=5");
    add("modular:br(3)", "");
    add("supermodular3:brj(2;3)", "");
    add("supermodular3:g(1,6)", "N=3");
    add("supermodular3:g(1,6)", "N=6");
    add("supermodular3:g(2,3)", "");
    add("supermodular3:g(3,3)", "");
    add("supermodular3:g(4,3)", "");
    add("supermodular3:g(3,6)", "");
    add("supermodular3:g(2,6)", "");
    add("supermodular3:el(5;3)", "");
    add("supermodular3:g(8,3)", "");
    add("supermodular3:g(4,6)", "");
    add("supermodular3:g(6,6)", "");
    add("supermodular3:g(8,6)", "");
    add("supermodular5:brj(2;5)", "");
    add("supermodular5:el(5;5)", "");
    for (int k = 1; k <= 12; ++k) add("ufo:" + std::to_string(k), "");
    return out;
}

std::vector<RecognitionHit> Catalog::recognize(const BraidingMatrix& q,
                                               const EnumerationCaps& caps) const {
    std::vector<RecognitionHit> hits;
    const std::string target = diagram_canonical_form(q);
    const int theta = q.theta();
    const std::int64_t modin = q.ctx().modulus;
    const bool has_free = q.ctx().parameter_infinite;

    auto coprimes = [](std::int64_t m) {
        std::vector<std::int64_t> out;
        for (std::int64_t t = 1; t <= m; ++t)
            if (gcd64(t, m) == 1) out.push_back(t);
        if (out.empty()) out.push_back(1);
        return out;
    };
    std::vector<std::int64_t> orders;
    for (std::int64_t d = 2; d <= modin; ++d)
        if (modin % d == 0) orders.push_back(d);

    auto try_instance = [&](const std::string& label, const CatalogParams& params) {
        std::string key = label + "|" + params.str();
        auto it = impl_->recog_cache.find(key);
        if (it == impl_->recog_cache.end()) {
            std::vector<std::pair<std::string, std::string>> forms;
            try {
                auto points = build_all_points(label, params);
                auto base = build_diagram(label, params);
                GroupoidBundle b = enumerate_groupoid(base.matrix.twist_class(), caps);
                for (std::size_t x = 0; x < b.points.size(); ++x) {
                    std::string name = "#" + std::to_string(x);
                    for (const auto& p : points)
                        if (twist_equivalent_upto_permutation(p.matrix, b.points[x].rep))
                            name = p.name;
                    forms.emplace_back(diagram_canonical_form(b.points[x].rep), name);
                }
            } catch (const std::exception&) {
                // incompatible parameters or capped enumeration: no points
            }
            it = impl_->recog_cache.emplace(key, std::move(forms)).first;
        }
        for (const auto& [form, name] : it->second)
            if (form == target) {
                RecognitionHit hit{label, params.str(), name};
                if (std::find(hits.begin(), hits.end(), hit) == hits.end()) hits.push_back(hit);
            }
    };

    for (const std::string& label : impl_->label_order) {
        if (impl_->is_data_family(label)) {
            const json& fam = impl_->data_families.at(label);
            if (fam.at("theta").get<int>() != theta) continue;
            std::int64_t zorder = fam.at("context").at("zeta_order").get<std::int64_t>();
            bool hasq = fam.at("context").contains("q");
            for (std::int64_t t : coprimes(zorder)) {
                if (!hasq) {
                    CatalogParams p;
                    p.set_int("t", t);
                    try_instance(label, p);
                    continue;
                }
                for (std::int64_t N : orders)
                    for (std::int64_t u : coprimes(N)) {
                        CatalogParams p;
                        p.set_int("t", t);
                        p.set_int("N", N);
                        p.set_int("u", u);
                        try_instance(label, p);
                    }
                if (has_free)
                    for (std::int64_t u : {1, -1}) {
                        CatalogParams p;
                        p.set_int("t", t);
                        p.set("N", "inf");
                        p.set_int("u", u);
                        try_instance(label, p);
                    }
            }
            continue;
        }
        auto orders_and_inf = [&](const std::function<void(const std::string&, std::int64_t)>& f) {
            for (std::int64_t N : orders)
                for (std::int64_t u : coprimes(N)) f(std::to_string(N), u);
            if (has_free)
                for (std::int64_t u : {1, -1}) f("inf", u);
        };
        if (label.rfind("Cartan:", 0) == 0) {
            bool fits = (label == "Cartan:F4" && theta == 4) || (label == "Cartan:G2" && theta == 2) ||
                        (label != "Cartan:F4" && label != "Cartan:G2");
            if (!fits) continue;
            orders_and_inf([&](const std::string& N, std::int64_t u) {
                CatalogParams p;
                p.set_int("theta", theta);
                p.set("N", N);
                p.set_int("u", u);
                try_instance(label, p);
            });
        } else if (label == "super:A" || label == "super:B") {
            int maxj = label == "super:A" ? (theta + 1) / 2 : theta - 1;
            for (int j = 1; j <= maxj; ++j)
                orders_and_inf([&](const std::string& N, std::int64_t u) {
                    CatalogParams p;
                    p.set_int("theta", theta);
                    p.set("J", std::to_string(j));
                    p.set("N", N);
                    p.set_int("u", u);
                    try_instance(label, p);
                });
        } else if (label == "super:D") {
            for (int j = 1; j <= theta - 1; ++j)
                orders_and_inf([&](const std::string& N, std::int64_t u) {
                    CatalogParams p;
                    p.set_int("theta", theta);
                    p.set("J", std::to_string(j));
                    p.set("N", N);
                    p.set_int("u", u);
                    p.set("sector", "c");
                    try_instance(label, p);
                });
        } else if (label == "standard:B") {
            for (int j = 1; j <= theta - 1; ++j)
                for (std::int64_t t : {1, 2}) {
                    CatalogParams p;
                    p.set_int("theta", theta);
                    p.set("J", std::to_string(j));
                    p.set_int("t", t);
                    try_instance(label, p);
                }
        } else if (label == "super:D(2,1;a)") {
            if (theta == 3 && !has_free && modin <= 36)
                for (std::int64_t kq = 1; kq < modin; ++kq)
                    for (std::int64_t kr = 1; kr < modin; ++kr) {
                        if (mod64(kq + kr, modin) == 0) continue;
                        CatalogParams p;
                        p.set_int("M", modin);
                        p.set_int("kq", kq);
                        p.set_int("kr", kr);
                        try_instance(label, p);
                    }
        } else if (label == "modular:br(2,a)") {
            if (theta == 2)
                for (std::int64_t t : {1, 2})
                    orders_and_inf([&](const std::string& N, std::int64_t u) {
                        if (N == "3") return;
                        CatalogParams p;
                        p.set_int("t", t);
                        p.set("N", N);
                        p.set_int("u", u);
                        try_instance(label, p);
                    });
        }
    }
    std::sort(hits.begin(), hits.end(), [](const RecognitionHit& a, const RecognitionHit& b) {
        return std::tie(a.label, a.params, a.point) < std::tie(b.label, b.params, b.point);
    });
    return hits;
}

}  // namespace nichols
