#include "packpaint/packing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace packpaint {

PackingSequence::PackingSequence(std::map<int, int> counts) : counts_(std::move(counts)) {
    for (auto [s, m] : counts_) {
        if (s < 1) throw std::invalid_argument("packing sequence parameter must be >= 1");
        if (m < 1) throw std::invalid_argument("packing sequence multiplicity must be >= 1");
    }
}

PackingSequence PackingSequence::ones_twos_threes(int a, int b, int c) {
    std::map<int, int> counts;
    if (a > 0) counts[1] = a;
    if (b > 0) counts[2] = b;
    if (c > 0) counts[3] = c;
    return PackingSequence(std::move(counts));
}

PackingSequence PackingSequence::parse(const std::string& text) {
    std::string body;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) body.push_back(c);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in sequence");
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) throw std::invalid_argument("empty packing sequence");
    std::map<int, int> counts;
    std::stringstream ss(body);
    std::string term;
    while (std::getline(ss, term, ',')) {
        if (term.empty()) throw std::invalid_argument("empty term in sequence");
        auto caret = term.find('^');
        int s, m = 1;
        try {
            s = std::stoi(term.substr(0, caret));
            if (caret != std::string::npos) m = std::stoi(term.substr(caret + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad sequence term '" + term + "'");
        }
        if (s < 1 || m < 1) throw std::invalid_argument("bad sequence term '" + term + "'");
        counts[s] += m;
    }
    return PackingSequence(std::move(counts));
}

std::string PackingSequence::to_string() const {
    std::string out = "(";
    bool first = true;
    for (auto [s, m] : counts_) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(s);
        if (m > 1) out += "^" + std::to_string(m);
    }
    out += ")";
    return out;
}

int PackingSequence::count(int s) const {
    auto it = counts_.find(s);
    return it == counts_.end() ? 0 : it->second;
}

int PackingSequence::total_classes() const {
    int total = 0;
    for (auto [s, m] : counts_) total += m;
    return total;
}

std::vector<int> PackingSequence::expanded() const {
    std::vector<int> out;
    for (auto [s, m] : counts_)
        for (int i = 0; i < m; ++i) out.push_back(s);
    return out;
}

void PackingColoring::normalize() {
    for (auto& c : classes) std::sort(c.vertices.begin(), c.vertices.end());
    std::stable_sort(classes.begin(), classes.end(), [](const ColorClass& a, const ColorClass& b) {
        if (a.s != b.s) return a.s < b.s;
        int fa = a.vertices.empty() ? -1 : a.vertices.front();
        int fb = b.vertices.empty() ? -1 : b.vertices.front();
        return fa < fb;
    });
    std::sort(uncolored.begin(), uncolored.end());
}

}  // namespace packpaint
