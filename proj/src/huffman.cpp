#include "codetuple/huffman.hpp"
#include "codetuple/error.hpp"

#include <queue>
#include <tuple>

namespace codetuple {

HuffmanResult huffman_code(const Distribution& mu) {
    const std::size_t sigma = mu.size();
    if (sigma < 2)
        throw Error(Errc::AlphabetTooSmall, "Huffman coding needs at least 2 symbols");

    struct Node {
        Rational weight;
        SymbolIndex least;
        std::size_t seq;
        std::size_t id;
    };
    struct Later {
        bool operator()(const Node& a, const Node& b) const {
            return std::tie(a.weight, a.least, a.seq) > std::tie(b.weight, b.least, b.seq);
        }
    };

    // Node ids below sigma are leaves; children[id - sigma] holds (bit 0, bit 1).
    std::vector<std::pair<std::size_t, std::size_t>> children;
    std::priority_queue<Node, std::vector<Node>, Later> queue;
    std::size_t seq = 0;
    for (SymbolIndex s = 0; s < sigma; ++s)
        queue.push(Node{mu[s], s, seq++, s});
    while (queue.size() > 1) {
        Node zero = queue.top();
        queue.pop();
        Node one = queue.top();
        queue.pop();
        children.emplace_back(zero.id, one.id);
        queue.push(Node{zero.weight + one.weight, std::min(zero.least, one.least), seq++, sigma + children.size() - 1});
    }

    HuffmanResult out;
    out.table.codewords.resize(sigma);
    std::vector<std::pair<std::size_t, BitString>> stack{{queue.top().id, BitString{}}};
    while (!stack.empty()) {
        auto [id, prefix] = std::move(stack.back());
        stack.pop_back();
        if (id < sigma) {
            out.table.codewords[id] = prefix;
            continue;
        }
        const auto [zero, one] = children[id - sigma];
        BitString p0 = prefix;
        p0.push_back(false);
        prefix.push_back(true);
        stack.emplace_back(zero, std::move(p0));
        stack.emplace_back(one, std::move(prefix));
    }

    out.length = 0;
    for (SymbolIndex s = 0; s < sigma; ++s)
        out.length += mu[s] * static_cast<long long>(out.table.codewords[s].size());
    return out;
}

Rational huffman_length(const Distribution& mu) {
    return huffman_code(mu).length;
}

Rational kraft_sum(const CodeTable& table) {
    Rational sum = 0;
    for (const auto& w : table.codewords)
        sum += Rational(1, boost::multiprecision::cpp_int(1) << w.size());
    return sum;
}

} // namespace codetuple
