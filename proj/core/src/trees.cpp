#include "exalg/trees.hpp"

#include "exalg/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace exalg {

int RootedTree::leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
}

int RootedTree::vertex_count() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children) n += c.vertex_count();
    return n;
}

std::string RootedTree::key() const {
    if (is_leaf()) return "L";
    std::vector<std::string> ks;
    ks.reserve(children.size());
    for (const auto& c : children) ks.push_back(c.key());
    std::sort(ks.begin(), ks.end());
    std::string out = "(m" + std::to_string(op_arity);
    for (const auto& k : ks) out += " " + k;
    return out + ")";
}

RootedTree RootedTree::canonical() const {
    if (is_leaf()) return *this;
    RootedTree t;
    t.op_arity = op_arity;
    t.children.reserve(children.size());
    for (const auto& c : children) t.children.push_back(c.canonical());
    std::sort(t.children.begin(), t.children.end(),
              [](const RootedTree& a, const RootedTree& b) { return a.key() < b.key(); });
    return t;
}

static void serialize_rec(const RootedTree& t, std::ostringstream& os, int& next_leaf) {
    if (t.is_leaf()) {
        os << "L" << ++next_leaf;
        return;
    }
    os << "(m" << t.op_arity;
    for (const auto& c : t.children) {
        os << " ";
        serialize_rec(c, os, next_leaf);
    }
    os << ")";
}

std::string RootedTree::serialize() const {
    std::ostringstream os;
    int next_leaf = 0;
    serialize_rec(*this, os, next_leaf);
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw StructuralError("RootedTree::parse: " + what + " at position " +
                              std::to_string(pos));
    }
    RootedTree parse_node() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        if (s[pos] == 'L') {
            ++pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RootedTree{};
        }
        if (s[pos] != '(') fail("expected '(' or leaf");
        ++pos;
        skip_ws();
        if (pos >= s.size() || s[pos] != 'm') fail("expected operation tag m<k>");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected arity digits");
        RootedTree t;
        t.op_arity = std::stoi(s.substr(start, pos - start));
        if (t.op_arity < 1) fail("arity must be >= 1");
        for (int k = 0; k < t.op_arity; ++k) t.children.push_back(parse_node());
        skip_ws();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        return t;
    }
};

} // namespace

RootedTree RootedTree::parse(const std::string& text) {
    Parser p(text);
    RootedTree t = p.parse_node();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

RootedTree leaf_tree() { return RootedTree{}; }

RootedTree corolla(int arity, std::vector<RootedTree> children) {
    if (static_cast<int>(children.size()) != arity)
        throw StructuralError("corolla: child count != arity");
    RootedTree t;
    t.op_arity = arity;
    t.children = std::move(children);
    return t;
}

namespace {

// Enumerate multisets of subtrees: pick a non-decreasing (by key) sequence of
// k subtrees with given total leaves and total vertex budget.
void choose_children(const std::vector<RootedTree>& pool, std::size_t from, int slots,
                     int leaves_left, int vertices_left, std::vector<RootedTree>& acc,
                     std::vector<RootedTree>& out, int root_arity);

std::vector<RootedTree> shapes(int n_leaves, const std::set<int>& arities, int max_vertices);

// Subtree candidates with exactly n leaves within the vertex budget; a bare
// leaf is allowed when n == 1.
std::vector<RootedTree> subtree_pool(int n_leaves, const std::set<int>& arities,
                                     int max_vertices) {
    std::vector<RootedTree> pool;
    if (n_leaves == 1) pool.push_back(leaf_tree());
    auto sub = shapes(n_leaves, arities, max_vertices);
    pool.insert(pool.end(), sub.begin(), sub.end());
    return pool;
}

void choose_children(const std::vector<RootedTree>& pool, std::size_t from, int slots,
                     int leaves_left, int vertices_left, std::vector<RootedTree>& acc,
                     std::vector<RootedTree>& out, int root_arity) {
    if (slots == 0) {
        if (leaves_left == 0) out.push_back(corolla(root_arity, acc));
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        const RootedTree& cand = pool[i];
        int l = cand.leaf_count();
        int v = cand.vertex_count();
        if (l > leaves_left || v > vertices_left) continue;
        if (leaves_left - l < slots - 1) continue; // each slot needs >= 1 leaf
        acc.push_back(cand);
        choose_children(pool, i, slots - 1, leaves_left - l, vertices_left - v, acc, out,
                        root_arity);
        acc.pop_back();
    }
}

std::vector<RootedTree> shapes(int n_leaves, const std::set<int>& arities, int max_vertices) {
    std::vector<RootedTree> out;
    if (n_leaves < 1 || max_vertices < 1) return out;
    for (int k : arities) {
        if (k < 1 || k > n_leaves) continue;
        // Children drawn from all subtree pools; pool sorted by key for the
        // non-decreasing multiset enumeration.
        std::vector<RootedTree> pool;
        for (int l = 1; l <= n_leaves - k + 1; ++l) {
            auto p = subtree_pool(l, arities, max_vertices - 1);
            pool.insert(pool.end(), p.begin(), p.end());
        }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end(),
                               [](const RootedTree& a, const RootedTree& b) {
                                   return a.key() == b.key();
                               }),
                   pool.end());
        std::vector<RootedTree> acc;
        choose_children(pool, 0, k, n_leaves, max_vertices - 1, acc, out, k);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const RootedTree& a, const RootedTree& b) {
                              return a.key() == b.key();
                          }),
              out.end());
    return out;
}

} // namespace

std::vector<RootedTree> enumerate_trees(int n_leaves, const std::set<int>& arities,
                                        int max_vertices) {
    if (n_leaves < 1) throw StructuralError("enumerate_trees: need at least one leaf");
    return shapes(n_leaves, arities, max_vertices);
}

BigInt automorphism_order(const RootedTree& t) {
    if (t.is_leaf()) return 1;
    std::map<std::string, std::pair<BigInt, int>> groups; // key -> (|Aut(child)|, mult)
    for (const auto& c : t.children) {
        auto [it, inserted] = groups.try_emplace(c.key(), automorphism_order(c), 0);
        it->second.second += 1;
    }
    BigInt total = 1;
    for (const auto& [key, g] : groups) {
        const auto& [aut, mult] = g;
        for (int j = 0; j < mult; ++j) total *= aut;
        for (int j = 2; j <= mult; ++j) total *= j;
    }
    return total;
}

BigInt distinct_leaf_labelings(const RootedTree& t) {
    BigInt fact = 1;
    for (int j = 2; j <= t.leaf_count(); ++j) fact *= j;
    return fact / automorphism_order(t);
}

TreeWeight tree_weight(const RootedTree& t) {
    return TreeWeight{t.canonical(), automorphism_order(t), t.edge_sign()};
}

} // namespace exalg
