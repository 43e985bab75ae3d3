#pragma once

#include <map>
#include <string>
#include <vector>

namespace packpaint {

// Non-decreasing multiset of distance parameters, kept as s -> multiplicity.
// Canonical text form: comma-separated "s^m" terms inside parentheses with
// "^1" omitted, parameters ascending, e.g. "(1^2,2)".
class PackingSequence {
public:
    PackingSequence() = default;
    explicit PackingSequence(std::map<int, int> counts);

    // Convenience: a 1s, b 2s, c 3s.
    static PackingSequence ones_twos_threes(int a, int b, int c = 0);
    // Accepts "(1^2,2)" or "1^2,2"; rejects parameters or counts < 1.
    static PackingSequence parse(const std::string& text);

    std::string to_string() const;

    int count(int s) const;
    int total_classes() const;
    const std::map<int, int>& counts() const { return counts_; }

    // Expanded parameter list, ascending: (1^2,2) -> [1,1,2].
    std::vector<int> expanded() const;

    bool operator==(const PackingSequence& o) const { return counts_ == o.counts_; }

private:
    std::map<int, int> counts_;
};

// One color class: all members must be pairwise at distance >= s+1.
struct ColorClass {
    int s = 0;
    std::vector<int> vertices;
};

// Total or partial S-packing coloring. Classes carry their own parameter;
// a coloring may use fewer classes than its sequence budgets.
struct PackingColoring {
    std::vector<ColorClass> classes;
    std::vector<int> uncolored;

    // Sorts classes by (s, first vertex) and vertex lists ascending.
    void normalize();
};

}  // namespace packpaint
