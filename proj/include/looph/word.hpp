#ifndef LOOPH_WORD_HPP
#define LOOPH_WORD_HPP

/// Words in the letters {U_i, D_i} modulo the interchange law: letters whose
/// strand indices differ by at least two commute.  A Monomial is the
/// lexicographically least word of its interchange class, which makes
/// equality and hashing structural.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace looph {

enum class LetterKind : std::uint8_t { D = 0, U = 1 };

struct Letter {
    LetterKind kind;
    int index;  // strand position, 1-based

    auto operator<=>(const Letter&) const = default;

    std::string str() const {
        return (kind == LetterKind::D ? "D" : "U") + std::to_string(index);
    }
};

/// Letters commute iff their indices are at least 2 apart (interchange law).
inline bool letters_dependent(const Letter& a, const Letter& b) {
    return std::abs(a.index - b.index) <= 1;
}

using Word = std::vector<Letter>;

inline std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].str();
    }
    return out;
}

/// Parse whitespace-separated tokens "D1", "U2", ...  "1" or "" denotes the
/// empty word.
inline Word parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2 || (tok[0] != 'D' && tok[0] != 'U'))
            throw std::invalid_argument("bad letter token: " + tok);
        int idx = std::stoi(tok.substr(1));
        w.push_back({tok[0] == 'D' ? LetterKind::D : LetterKind::U, idx});
    }
    return w;
}

inline nlohmann::json word_to_json(const Word& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : w)
        arr.push_back({l.kind == LetterKind::D ? "D" : "U", l.index});
    return arr;
}

inline Word word_from_json(const nlohmann::json& j) {
    Word w;
    for (const auto& e : j) {
        std::string k = e.at(0).get<std::string>();
        if (k != "D" && k != "U") throw std::invalid_argument("bad letter kind in JSON");
        w.push_back({k == "D" ? LetterKind::D : LetterKind::U, e.at(1).get<int>()});
    }
    return w;
}

namespace detail {
/// Lexicographically least linearization of the trace: greedily emit the
/// smallest letter among positions with no pending dependent predecessor.
inline Word trace_least(const Word& raw) {
    size_t k = raw.size();
    std::vector<bool> used(k, false);
    Word out;
    out.reserve(k);
    for (size_t step = 0; step < k; ++step) {
        int best = -1;
        for (size_t p = 0; p < k; ++p) {
            if (used[p]) continue;
            bool minimal = true;
            for (size_t q = 0; q < p && minimal; ++q)
                if (!used[q] && letters_dependent(raw[q], raw[p])) minimal = false;
            if (!minimal) continue;
            if (best < 0 || raw[p] < raw[best]) best = static_cast<int>(p);
        }
        used[best] = true;
        out.push_back(raw[best]);
    }
    return out;
}
}  // namespace detail

/// A word in trace-canonical form.  Does not remember the ambient strand
/// count; index bounds are checked where an ambient n is available.
class Monomial {
  public:
    Monomial() = default;

    static Monomial from_canonical_unchecked(Word w) {
        Monomial m;
        m.letters_ = std::move(w);
        return m;
    }

    static Monomial canonical(const Word& raw) {
        return from_canonical_unchecked(detail::trace_least(raw));
    }

    const Word& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int max_index() const {
        int m = 0;
        for (const auto& l : letters_) m = std::max(m, l.index);
        return m;
    }

    auto operator<=>(const Monomial&) const = default;

    std::string str() const { return word_str(letters_); }

  private:
    Word letters_;
};

/// Canonical form with index-range validation against the ambient strand
/// count n (letters use indices 1..n-1).
inline Monomial canonicalize(int n, const Word& raw) {
    for (const auto& l : raw)
        if (l.index < 1 || l.index > n - 1)
            throw std::out_of_range("letter index " + std::to_string(l.index) +
                                    " out of range for n=" + std::to_string(n));
    return Monomial::canonical(raw);
}

/// Dependence order of the positions of a word: the transitive closure of
/// "p < q and the letters at p, q do not commute".  This poset is an
/// invariant of the interchange class.
struct DepOrder {
    explicit DepOrder(const Word& w) : k(w.size()), above(k, 0), below(k, 0) {
        if (k > 64) throw std::length_error("DepOrder: word too long");
        for (size_t p = k; p-- > 0;) {
            std::uint64_t mask = 0;
            for (size_t q = p + 1; q < k; ++q)
                if (letters_dependent(w[p], w[q])) mask |= (std::uint64_t(1) << q) | above[q];
            above[p] = mask;
        }
        for (size_t p = 0; p < k; ++p)
            for (size_t q = p + 1; q < k; ++q)
                if (above[p] >> q & 1) below[q] |= std::uint64_t(1) << p;
    }

    bool less(size_t p, size_t q) const { return (above[p] >> q) & 1; }

    size_t k;
    std::vector<std::uint64_t> above;  // strictly greater positions
    std::vector<std::uint64_t> below;  // strictly smaller positions
};

/// An occurrence of a letter pattern inside a monomial: slot_pos[s] is the
/// position of m carrying pattern letter s.  The selection satisfies the
/// factorization contract: dependent pattern pairs appear in pattern order,
/// and the selected set is convex in the dependence order of m.
struct WordOccurrence {
    std::vector<int> slot_pos;
};

namespace detail {
inline void occurrences_rec(const Word& w, const Word& pat, const DepOrder& dep, size_t slot,
                            std::vector<int>& chosen, std::uint64_t used,
                            std::vector<WordOccurrence>& out) {
    if (slot == pat.size()) {
        // convexity: no unselected position strictly between two selected
        // ones in the dependence order
        for (size_t z = 0; z < w.size(); ++z) {
            if (used >> z & 1) continue;
            if ((dep.below[z] & used) && (dep.above[z] & used)) return;
        }
        out.push_back({chosen});
        return;
    }
    for (size_t p = 0; p < w.size(); ++p) {
        if (used >> p & 1) continue;
        if (w[p] != pat[slot]) continue;
        bool ok = true;
        for (size_t s = 0; s < slot && ok; ++s)
            if (letters_dependent(pat[s], pat[slot]) &&
                !(static_cast<size_t>(chosen[s]) < p))
                ok = false;
        if (!ok) continue;
        chosen.push_back(static_cast<int>(p));
        occurrences_rec(w, pat, dep, slot + 1, chosen, used | (std::uint64_t(1) << p), out);
        chosen.pop_back();
    }
}
}  // namespace detail

/// All occurrences of `pattern` in m, i.e. all factorizations
/// m = a * pattern * b up to interchange.
inline std::vector<WordOccurrence> occurrences(const Monomial& m, const Word& pattern) {
    if (pattern.empty()) throw std::invalid_argument("occurrences: empty pattern");
    std::vector<WordOccurrence> out;
    if (pattern.size() > m.size()) return out;
    DepOrder dep(m.letters());
    std::vector<int> chosen;
    detail::occurrences_rec(m.letters(), pattern, dep, 0, chosen, 0, out);
    return out;
}

/// Brute-force oracle: every word reachable from m by swapping adjacent
/// commuting letters.  Throws std::length_error when the class exceeds cap;
/// callers fall back to the poset methods.
inline std::set<Word> interchange_class(const Monomial& m, size_t cap = 10000) {
    std::set<Word> seen;
    std::vector<Word> stack{m.letters()};
    seen.insert(m.letters());
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (letters_dependent(w[i], w[i + 1])) continue;
            std::swap(w[i], w[i + 1]);
            if (seen.insert(w).second) {
                if (seen.size() > cap) throw std::length_error("interchange_class: cap exceeded");
                stack.push_back(w);
            }
            std::swap(w[i], w[i + 1]);
        }
    }
    return seen;
}

}  // namespace looph

#endif
