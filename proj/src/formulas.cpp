#include "csf/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace csf {

namespace {

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

Rational integral_coeff(const Rational& r, const std::string& context) {
    if (!r.is_integer())
        throw std::logic_error(context + ": non-integral coefficient " + r.to_string());
    return r;
}

}  // namespace

TailProvider TailProvider::for_node(const RootedGraph& g, OracleCache& cache) {
    TailProvider p;
    p.first = [g, &cache](int t) { return cache.csf(tailed(g, t).graph); };
    return p;
}

TailProvider TailProvider::for_pair(const RootedGraph& g, const RootedGraph& h,
                                    OracleCache& cache) {
    TailProvider p;
    p.first = [g, &cache](int t) { return cache.csf(tailed(g, t).graph); };
    p.second = [h, &cache](int t) { return cache.csf(tailed(h, t).graph); };
    p.bridge = [g, h, &cache](int k) { return cache.csf(path_conjoin(g, h, k)); };
    // Roots identified: the merged vertex keeps g's root label.
    RootedGraph merged(path_conjoin(g, h, 0), g.root);
    p.merged = [merged, &cache](int t) { return cache.csf(tailed(merged, t).graph); };
    return p;
}

TailProvider TailProvider::for_paths() {
    TailProvider p;
    p.first = [](int t) { return path_csf(t + 1); };
    p.second = [](int t) { return path_csf(t + 1); };
    p.bridge = [](int k) { return path_csf(k + 1); };
    p.merged = [](int t) { return path_csf(t + 1); };
    return p;
}

CompositionExpansion path_expansion(int n) {
    require(n >= 1, "path_expansion: need n >= 1");
    CompositionExpansion out(n);
    for_each_composition(n, [&](const Composition& I) {
        long long w = w_weight(I);
        if (w != 0) out.add_term(I, Rational(w));
    });
    return out;
}

CompositionExpansion lollipop_expansion(int a, int n) {
    require(1 <= a && a <= n, "lollipop_expansion: need 1 <= a <= n");
    Rational pref{factorial(a - 1)};
    CompositionExpansion out(n);
    for_each_composition(n, [&](const Composition& I) {
        if (I.last() < a) return;
        long long w = w_weight(I);
        if (w != 0) out.add_term(I, pref * Rational(w));
    });
    return out;
}

CompositionExpansion tadpole_expansion(int n, int l) {
    require(0 <= l && l <= n - 2, "tadpole_expansion: need 0 <= l <= n - 2");
    CompositionExpansion out(n);
    for_each_composition(n, [&](const Composition& I) {
        long long w = w_weight(I);
        if (w == 0) return;
        long long theta = surplus(I, l + 1);
        if (theta != 0) out.add_term(I, Rational(theta * w));
    });
    return out;
}

CompositionExpansion kchain_expansion(const std::vector<int>& gamma) {
    require(!gamma.empty(), "kchain_expansion: empty clique list");
    for (int part : gamma) require(part >= 2, "kchain_expansion: clique sizes must be >= 2");
    int l = static_cast<int>(gamma.size());
    int total = 0;
    for (int part : gamma) total += part;
    int degree = total - l + 1;

    Rational pref(1);
    for (int i = 0; i + 1 < l; ++i) pref *= Rational(factorial(gamma[i] - 2));
    pref *= Rational(factorial(gamma.back() - 1));

    // Suffix sums of gamma for the two-branch membership condition.
    std::vector<long long> gamma_suffix(l + 1, 0);
    for (int i = l - 1; i >= 0; --i) gamma_suffix[i] = gamma_suffix[i + 1] + gamma[i];

    CompositionExpansion out(degree);
    for (const auto& alpha : weak_compositions(degree, l)) {
        std::vector<long long> alpha_suffix(l + 1, 0);
        for (int i = l - 1; i >= 0; --i) alpha_suffix[i] = alpha_suffix[i + 1] + alpha[i];
        bool admissible = true;
        for (int i = 2; i <= l && admissible; ++i) {
            long long bound = gamma_suffix[i - 1] - (l - i);
            bool low = alpha[i - 1] < gamma[i - 2] && alpha_suffix[i - 1] < bound;
            bool high = alpha[i - 1] >= gamma[i - 2] && alpha_suffix[i - 1] >= bound;
            admissible = low || high;
        }
        if (!admissible) continue;
        long long coeff = alpha[0];
        for (int i = 2; i <= l; ++i) coeff *= std::llabs(alpha[i - 1] - gamma[i - 2] + 1);
        if (coeff == 0) continue;
        std::vector<int> nonzero;
        for (int part : alpha)
            if (part > 0) nonzero.push_back(part);
        out.add_term(Composition(nonzero), pref * Rational(coeff));
    }
    return out;
}

CompositionExpansion kpc_expansion(int a, int b, int c) {
    require(a >= 1 && b >= 0 && c >= 2, "kpc_expansion: need a >= 1, b >= 0, c >= 2");
    int n = a + b + c - 1;
    Rational pref{factorial(a - 1)};
    CompositionExpansion out(n);
    for_each_composition(n, [&](const Composition& K) {
        long long w = w_weight(K);
        if (w == 0) return;
        Rational ck;
        if (K.length() >= 2 && K.part(2) < a) {
            return;  // c_K = 0
        } else if (K.length() >= 2 && K.part(1) <= a - 1 && K.part(2) >= a + b) {
            long long k1 = K.part(1), k2 = K.part(2);
            ck = Rational(k2 - a - b) + Rational(BigInt(k2 - k1), BigInt(k2 - 1));
        } else {
            ck = Rational(surplus(K, a + b));
        }
        if (ck.is_zero()) return;
        out.add_term(K, integral_coeff(pref * ck * Rational(w), "kpc_expansion"));
    });
    return out;
}

CompositionExpansion pkp_expansion(int g, int h, int m) {
    require(g >= 0 && h >= 0 && m >= 2, "pkp_expansion: need g, h >= 0 and m >= 2");
    int n = g + h + m;
    Rational pref{factorial(m - 2)};
    CompositionExpansion out(n);
    out.add_term(Composition{n}, pref * Rational(m - 1));
    for_each_composition(n, [&](const Composition& I) {
        FWeights f = f_weights(I, m);
        long long coeff = 0;
        if (surplus(I, h + 1) >= m - 1) coeff += f.f2;
        if (I.last() >= m - 1) coeff += f.f3;
        if (coeff != 0) out.add_term(I, pref * Rational(coeff));
    });
    return out;
}

CompositionExpansion kkp_expansion(int a, int b, int c) {
    require(a >= 0 && b >= 1 && c >= 1, "kkp_expansion: need a >= 0, b >= 1, c >= 1");
    int n = a + b + c;
    Rational pref = Rational(factorial(b - 1)) * Rational(factorial(c - 1));
    CompositionExpansion out(n);
    for_each_composition(n, [&](const Composition& K) {
        long long coeff = 0;
        if (K.last() >= b + c) coeff += b * w_weight(K);
        // Second sum: the high branch carries the upper bound k_(-1) <= b+c-1
        // of the underlying rearrangement (without it the one-part-tail terms
        // would be double counted against the first sum).
        bool low_branch = K.last() <= std::min(b - 1, c - 1);
        bool high_branch = K.last() >= std::max(b + 1, c) && K.last() <= b + c - 1;
        if (K.length() >= 2 && K.part(-1) + K.part(-2) >= b + c && (low_branch || high_branch))
            coeff += std::llabs(static_cast<long long>(b) - K.last()) * w_weight(K.without_last());
        if (coeff != 0) out.add_term(K, pref * Rational(coeff));
    });
    return out;
}

SymFunc path_csf(int n) {
    require(n >= 0, "path_csf: negative order");
    if (n == 0) return SymFunc::one(Basis::elementary);
    return path_expansion(n).flatten();
}

SymFunc cycle_csf(int m) {
    require(m >= 2, "cycle_csf: need m >= 2");
    return tadpole_expansion(m, 0).flatten();
}

SymFunc lollipop_csf(int m, int l) {
    require(m >= 1 && l >= 0, "lollipop_csf: need m >= 1 and l >= 0");
    return lollipop_expansion(m, m + l).flatten();
}

SymFunc spider3_csf(int a, int b, int c) {
    require(a >= 0 && b >= 0 && c >= 0, "spider3_csf: legs must be >= 0");
    int n = a + b + c + 1;
    SymFunc out(Basis::elementary, n);
    for (int i = 0; i <= c; ++i) out += path_csf(i) * path_csf(n - i);
    for (int i = b + 1; i <= b + c; ++i) out -= path_csf(i) * path_csf(n - i);
    return out;
}

SymFunc clique_conjoin_csf(int g, int k, const TailProvider& h_tails) {
    require(g >= 1 && k >= 0, "clique_conjoin_csf: need g >= 1 and k >= 0");
    SymFunc base = h_tails.first(k + g - 1);
    SymFunc out(Basis::elementary, base.degree());
    out += base;  // l = 0 term
    for (int l = 1; l <= g - 1; ++l)
        out += (SymFunc::e(l) * h_tails.first(k + g - 1 - l)).scale(Rational(1 - l));
    return out.scale(Rational(factorial(g - 1)));
}

SymFunc cycle_conjoin_csf(int g, int k, const TailProvider& h_tails) {
    require(g >= 2 && k >= 0, "cycle_conjoin_csf: need g >= 2 and k >= 0");
    SymFunc out = h_tails.first(k + g - 1).scale(Rational(g - 1));
    for (int l = 1; l <= g - 2; ++l) out -= cycle_csf(g - l) * h_tails.first(k + l - 1);
    return out;
}

SymFunc spider3_reduce(int g, int h, int j, const RootedGraph& G, const RootedGraph& H,
                       const RootedGraph& J, OracleCache& cache) {
    require(g >= 0 && j >= 0 && h >= 1, "spider3_reduce: need g, j >= 0 and h >= 1");
    SymFunc out = cache.csf(spider_conjoin({g + j, h, 0}, {G, H, J}));
    for (int i = 1; i <= j; ++i) {
        out += cache.csf(path_conjoin(G, H, g + h + i - 1)) * cache.csf(tailed(J, j - i).graph);
        out -= cache.csf(tailed(G, g + i - 1).graph) * cache.csf(path_conjoin(H, J, h + j - i));
    }
    return out;
}

SymFunc spider_l_reduce(const std::vector<int>& tau, const std::vector<RootedGraph>& nodes,
                        OracleCache& cache) {
    require(tau.size() == nodes.size(), "spider_l_reduce: leg and node counts differ");
    require(!tau.empty(), "spider_l_reduce: needs at least one node");
    if (tau.size() <= 3) return cache.csf(spider_conjoin(tau, nodes));
    require(tau[0] >= 1 && tau[1] >= 1,
            "spider_l_reduce: the first two legs must have length >= 1");

    std::vector<int> tau_rest(tau.begin() + 1, tau.end());
    std::vector<RootedGraph> nodes_rest(nodes.begin() + 1, nodes.end());
    std::vector<int> tau_tail(tau.begin() + 2, tau.end());
    std::vector<RootedGraph> nodes_tail(nodes.begin() + 2, nodes.end());
    RootedGraph inner = spider_conjoin_rooted(tau_tail, nodes_tail);

    SymFunc out = cache.csf(spider_conjoin({tau[0] - 1, tau[1], 1}, {nodes[0], nodes[1], inner}));
    out += cache.csf(tailed(nodes[0], tau[0] - 1).graph) *
           spider_l_reduce(tau_rest, nodes_rest, cache);
    out -= cache.csf(path_conjoin(nodes[0], nodes[1], tau[0] + tau[1] - 1)) *
           cache.csf(inner.graph);
    return out;
}

SymFunc spider_two_node_csf(int g, int h, int j, const TailProvider& gh) {
    require(g >= 0 && j >= 0 && h >= 1, "spider_two_node_csf: need g, j >= 0 and h >= 1");
    SymFunc out = gh.bridge(g + h + j);  // i = 0 term
    for (int i = 1; i <= j; ++i) {
        out += path_csf(i) * gh.bridge(g + h + j - i);
        out -= gh.first(g + i - 1) * gh.second(h + j - i);
    }
    return out;
}

SymFunc spider_one_node_csf(int g, int h, int j, const TailProvider& g_tails) {
    require(g >= 0 && j >= 0 && h >= 1, "spider_one_node_csf: need g, j >= 0 and h >= 1");
    SymFunc out = g_tails.first(g + j + h);  // i = 0 term
    for (int i = 1; i <= j; ++i) {
        out += path_csf(i) * g_tails.first(g + j - i + h);
        out -= path_csf(i + h) * g_tails.first(g + j - i);
    }
    return out;
}

SymFunc clique_path_convolution(int a, int n) {
    require(0 <= a && a <= n, "clique_path_convolution: need 0 <= a <= n");
    SymFunc sum(Basis::elementary, n);
    for (int l = 0; l <= a; ++l)
        sum += (SymFunc::e(l) * path_csf(n - l)).scale(Rational(1 - l));
    SymFunc expected = (a == n)
                           ? SymFunc::e(n)
                           : lollipop_expansion(a + 1, n).flatten().scale(
                                 Rational(BigInt(1), factorial(a)));
    if (sum != expected)
        throw std::logic_error("clique_path_convolution: identity failed for a = " +
                               std::to_string(a) + ", n = " + std::to_string(n));
    return sum;
}

SymFunc spider_clique_csf(int g, int h, int k, int m, const TailProvider& gh) {
    require(m >= 1 && h >= 1 && g >= 0 && k >= 0,
            "spider_clique_csf: need m, h >= 1 and g, k >= 0");
    SymFunc bracket = gh.bridge(g + h + k + m - 1);  // z = m-1 term has e_0
    for (int z = 0; z <= m - 2; ++z)
        bracket += SymFunc::e(m - 1 - z) * gh.bridge(g + h + k + z);
    for (int aa = 0; aa <= std::min(m - 1, k + m - 2); ++aa)
        for (int bb = 0; aa + bb <= k + m - 2; ++bb) {
            int cc = k + m - 2 - aa - bb;
            bracket -= (SymFunc::e(aa) * gh.first(bb + g) * gh.second(cc + h))
                           .scale(Rational(1 - aa));
        }
    SymFunc out = bracket.scale(Rational(factorial(m - 1)));
    for (int z = 0; z <= k - 1; ++z)
        out += lollipop_csf(m, z) * gh.bridge(g + h + k - z - 1);
    return out;
}

SymFunc spider_clique_one_node_csf(int g, int k, int h, int m, const TailProvider& g_tails) {
    require(m >= 1 && h >= 1 && g >= 0 && k >= 0,
            "spider_clique_one_node_csf: need m, h >= 1 and g, k >= 0");
    SymFunc bracket = g_tails.first(g + h + k + m - 1);  // z = 0 term
    for (int z = 1; z <= m - 1; ++z) {
        bracket += SymFunc::e(z) * g_tails.first(g + h + k + m - z - 1);
        bracket -= (lollipop_csf(z, h) * g_tails.first(g + k + m - z - 1))
                       .scale(Rational(BigInt(1), factorial(z - 1)));
    }
    SymFunc out = bracket.scale(Rational(factorial(m - 1)));
    for (int z = 0; z <= k - 1; ++z) {
        out += lollipop_csf(m, z) * g_tails.first(g + h + k - z - 1);
        out -= lollipop_csf(m, h + z) * g_tails.first(g + k - z - 1);
    }
    return out;
}

SymFunc pineapple_csf(int g, int h, int m) {
    require(g >= 0 && h >= 1 && m >= 1, "pineapple_csf: need g >= 0 and h, m >= 1");
    SymFunc bracket = path_csf(g + h + m);  // z = 0 term
    for (int z = 1; z <= m - 1; ++z) {
        bracket += SymFunc::e(z) * path_csf(g + h + m - z);
        bracket -= (lollipop_csf(z, h) * path_csf(g + m - z))
                       .scale(Rational(BigInt(1), factorial(z - 1)));
    }
    return bracket.scale(Rational(factorial(m - 1)));
}

SymFunc spider_cycle_csf(int g, int h, int k, int m, const TailProvider& gh) {
    require(m >= 2 && g >= 0 && h >= 0 && k >= 0,
            "spider_cycle_csf: need m >= 2 and g, h, k >= 0");
    auto inner = [&](int j) {
        if (h >= 1) return spider_two_node_csf(g, h, j, gh);
        if (g >= 1) return spider_two_node_csf(h, g, j, gh.swapped());
        return gh.merged(j);  // both legs degenerate: nodes share their root
    };
    SymFunc out = inner(k + m - 1).scale(Rational(m - 1));
    for (int l = 1; l <= m - 2; ++l) out -= inner(k + l - 1) * cycle_csf(m - l);
    return out;
}

SymFunc clique_chain_csf(int g, int h, int m, const TailProvider& gh) {
    require(m >= 2 && g >= 0 && h >= 0, "clique_chain_csf: need m >= 2 and g, h >= 0");
    SymFunc out = gh.bridge(g + h + m - 1).scale(Rational(m - 1));  // z = m-1 term
    for (int z = 1; z <= m - 2; ++z)
        out += (SymFunc::e(m - 1 - z) * gh.bridge(g + h + z)).scale(Rational(z));
    for (int aa = 0; aa <= m - 2; ++aa)
        for (int bb = 0; aa + bb <= m - 2; ++bb) {
            int cc = m - 2 - aa - bb;
            out += (SymFunc::e(aa) * gh.first(bb + g) * gh.second(cc + h))
                       .scale(Rational((aa - 1) * (m - 2)));
        }
    return out.scale(Rational(factorial(m - 2)));
}

SymFunc clique_chain_tail_csf(int g, int h, int m, const TailProvider& g_tails) {
    require(m >= 2 && g >= 0 && h >= 0, "clique_chain_tail_csf: need m >= 2 and g, h >= 0");
    SymFunc out = g_tails.first(g + h + m - 1).scale(Rational(m - 1));  // z = m-1 term
    for (int z = 1; z <= m - 2; ++z)
        out += (SymFunc::e(m - 1 - z) * g_tails.first(g + h + z)).scale(Rational(z));
    for (int z = 1; z <= m - 1; ++z)
        out -= (lollipop_csf(z, h) * g_tails.first(m - 1 - z + g))
                   .scale(Rational(BigInt(m - 2), factorial(z - 1)));
    return out.scale(Rational(factorial(m - 2)));
}

SymFunc cycle_chain_csf(int g, int h, int m, const TailProvider& gh) {
    require(m >= 2 && g >= 0 && h >= 0, "cycle_chain_csf: need m >= 2 and g, h >= 0");
    SymFunc out(Basis::elementary, 0);
    bool first_term = true;
    auto accumulate = [&](const SymFunc& term) {
        if (first_term) {
            out = term;
            first_term = false;
        } else {
            out += term;
        }
    };
    // Peeling the cycle gives the bridge term with multiplicity m-1-a (the
    // number of spider stages whose pendant path can absorb P_a).
    for (int a = 0; a <= m - 2; ++a)
        accumulate((path_csf(a) * gh.bridge(g + h + m - 1 - a)).scale(Rational(m - 1 - a)));
    for (int c = 2; c <= m - 2; ++c)
        for (int i = 0; i + c <= m - 2; ++i) {
            int j = m - 2 - c - i;
            accumulate(gh.first(g + i) * gh.second(h + j) * cycle_csf(c));
        }
    for (int i = 0; i <= m - 2; ++i)
        accumulate((gh.first(g + i) * gh.second(h + m - 2 - i)).scale(Rational(2 - m)));
    return out;
}

FWeights f_weights(const Composition& I, long long a) {
    require(I.length() >= 1, "f_weights: empty composition");
    FWeights f;
    f.f1 = (a - 1) * w_weight(I);
    long long last = I.last();
    long long w_rest = w_weight(I.without_last());
    f.f2 = (a - 2) * last * w_rest;
    f.f3 = (last - a + 1) * w_rest;
    return f;
}

}  // namespace csf
