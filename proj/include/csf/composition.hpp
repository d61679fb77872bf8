#pragma once

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace csf {

/// An ordered sequence of positive integer parts. The empty composition
/// (size 0, length 0) is allowed.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; part(-k) is the k-th last part.
    int part(int k) const {
        int l = length();
        if (k >= 1 && k <= l) return parts_[k - 1];
        if (k <= -1 && k >= -l) return parts_[l + k];
        throw std::out_of_range("Composition: part index " + std::to_string(k));
    }
    int first() const { return part(1); }
    int last() const { return part(-1); }

    /// Copy with the last part removed.
    Composition without_last() const {
        if (empty()) throw std::out_of_range("Composition: without_last on empty composition");
        return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
    }

    Composition reversed() const {
        return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
    }

    std::string to_string() const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    /// Lexicographic order on the part vectors; this is also the enumeration
    /// order of compositions_of.
    friend bool operator<(const Composition& a, const Composition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// A weakly decreasing sequence of positive integer parts (a multiset).
class Partition {
public:
    Partition() = default;
    /// Sorts the given parts weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    /// Multiset union with another partition.
    Partition merged(const Partition& other) const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Lexicographic order; maps iterate smallest-first, display order is the reverse.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// The partition obtained by sorting the parts of I.
Partition rho(const Composition& I);

/// i_1 * (i_2 - 1) * ... * (i_-1 - 1); 1 for the empty composition.
long long w_weight(const Composition& I);

/// Smallest prefix sum of I that is >= a (0 when a <= 0). Throws when a > |I|.
long long sigma(const Composition& I, long long a);

/// sigma(I, a) - a.
long long surplus(const Composition& I, long long a);

/// All 2^(n-1) compositions of n in lexicographic order (the empty
/// composition alone for n = 0).
std::vector<Composition> compositions_of(int n);

/// Streaming variant of compositions_of, same order.
void for_each_composition(int n, const std::function<void(const Composition&)>& fn);

/// All length-l sequences of nonnegative integers with the given total, in
/// lexicographic order.
std::vector<std::vector<int>> weak_compositions(int total, int length);

}  // namespace csf
