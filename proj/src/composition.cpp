#include "csf/composition.hpp"

#include <algorithm>

namespace csf {

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

}  // namespace

std::string Composition::to_string() const { return join_parts(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::to_string() const { return join_parts(parts_); }

Partition rho(const Composition& I) { return Partition(I.parts()); }

long long w_weight(const Composition& I) {
    long long w = 1;
    const auto& parts = I.parts();
    for (size_t k = 0; k < parts.size(); ++k) {
        w *= (k == 0) ? parts[k] : parts[k] - 1;
        if (w == 0) return 0;
    }
    return w;
}

long long sigma(const Composition& I, long long a) {
    if (a <= 0) return 0;
    long long sum = 0;
    for (int p : I.parts()) {
        sum += p;
        if (sum >= a) return sum;
    }
    throw std::invalid_argument("sigma: no prefix of " + I.to_string() + " reaches " +
                                std::to_string(a));
}

long long surplus(const Composition& I, long long a) { return sigma(I, a) - a; }

void for_each_composition(int n, const std::function<void(const Composition&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_composition: negative size");
    std::vector<int> acc;
    // Recursive descent emits parts smallest-first, which yields lexicographic order.
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            fn(Composition(acc));
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            acc.push_back(p);
            rec(rest - p);
            acc.pop_back();
        }
    };
    rec(n);
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    for_each_composition(n, [&](const Composition& c) { out.push_back(c); });
    return out;
}

std::vector<std::vector<int>> weak_compositions(int total, int length) {
    if (total < 0 || length < 0)
        throw std::invalid_argument("weak_compositions: negative arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> acc(length, 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == length) {
            if (rest == 0) out.push_back(acc);
            return;
        }
        if (pos == length - 1) {
            acc[pos] = rest;
            out.push_back(acc);
            acc[pos] = 0;
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            acc[pos] = v;
            rec(pos + 1, rest - v);
        }
        acc[pos] = 0;
    };
    if (length == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(0, total);
    return out;
}

}  // namespace csf
