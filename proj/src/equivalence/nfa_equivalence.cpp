#include "psym/equivalence/nfa_equivalence.hpp"

#include <boost/dynamic_bitset.hpp>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace psym {

namespace {

using Set = boost::dynamic_bitset<>;

struct Union {
    std::size_t size;
    std::vector<std::map<Letter, Set>> post;  // per state, per letter
    Set accepting;

    Union(const NFA& a, const NFA& b) : size(a.num_states() + b.num_states()), post(size), accepting(size) {
        add(a, 0);
        add(b, a.num_states());
    }

    void add(const NFA& a, std::size_t offset) {
        for (std::size_t q = 0; q < a.num_states(); ++q) {
            if (a.accepting[q]) accepting.set(offset + q);
            for (const auto& [l, targets] : a.rows[q]) {
                Set s(size);
                for (StateId p : targets) s.set(offset + p);
                post[offset + q].emplace(l, std::move(s));
            }
        }
    }

    Set step(const Set& x, Letter l) const {
        Set out(size);
        for (auto q = x.find_first(); q != Set::npos; q = x.find_next(q)) {
            auto it = post[q].find(l);
            if (it != post[q].end()) out |= it->second;
        }
        return out;
    }

    bool accepts(const Set& x) const { return x.intersects(accepting); }
};

struct Pending {
    Set x, y;
    Word word;
};

// Closure of z under the rewriting rules induced by the relation: whenever
// one side of a pair is contained in z, so is the other.
Set saturate(Set z, const std::vector<std::pair<Set, Set>>& done, const std::deque<Pending>& todo) {
    bool changed = true;
    auto apply = [&](const Set& a, const Set& b) {
        if (a.is_subset_of(z) && !b.is_subset_of(z)) {
            z |= b;
            changed = true;
        }
        if (b.is_subset_of(z) && !a.is_subset_of(z)) {
            z |= a;
            changed = true;
        }
    };
    while (changed) {
        changed = false;
        for (const auto& [a, b] : done) apply(a, b);
        for (const auto& p : todo) apply(p.x, p.y);
    }
    return z;
}

}  // namespace

NfaEquivalenceResult nfa_equivalent(const NFA& n1, const NFA& n2) {
    check_nfa(n1);
    check_nfa(n2);
    if (n1.alphabet_bits != n2.alphabet_bits)
        throw std::invalid_argument("nfa_equivalent: alphabets differ (" + std::to_string(n1.alphabet_bits) + " vs " +
                                    std::to_string(n2.alphabet_bits) + " bits)");
    Union u(n1, n2);
    std::set<Letter> all;
    for (Letter l : n1.letters()) all.insert(l);
    for (Letter l : n2.letters()) all.insert(l);
    const std::vector<Letter> letters(all.begin(), all.end());

    Set x0(u.size), y0(u.size);
    for (StateId s : n1.initial) x0.set(s);
    for (StateId s : n2.initial) y0.set(n1.num_states() + s);

    NfaEquivalenceResult result;
    std::vector<std::pair<Set, Set>> done;
    std::deque<Pending> todo;
    // The empty word is not compared: start from the one-letter successors.
    for (Letter l : letters) todo.push_back({u.step(x0, l), u.step(y0, l), Word{l}});

    while (!todo.empty()) {
        Pending p = std::move(todo.front());
        todo.pop_front();
        ++result.pairs_explored;
        bool ax = u.accepts(p.x);
        bool ay = u.accepts(p.y);
        if (ax != ay) {
            result.equivalent = false;
            result.witness = std::move(p.word);
            result.left_accepts = ax;
            result.right_accepts = ay;
            return result;
        }
        if (p.x == p.y || saturate(p.x, done, todo) == saturate(p.y, done, todo)) continue;
        for (Letter l : letters) {
            Word w = p.word;
            w.push_back(l);
            todo.push_back({u.step(p.x, l), u.step(p.y, l), std::move(w)});
        }
        done.emplace_back(std::move(p.x), std::move(p.y));
    }
    return result;
}

}  // namespace psym
