#ifndef LOOPH_REWRITE_HPP
#define LOOPH_REWRITE_HPP

/// The 14-rule linear rewriting system on words in {U_i, D_i}:
///
///   R1  D D     -> D                R8  D D+ D    -> D+ D
///   R2  D U     -> 0                R9  D+ D D+   -> D+ D
///   R3  U U     -> U                R10 U U+ U    -> U+ U
///   R4  U D     -> U + D - 1        R11 U+ U U+   -> U+ U
///   R5  U+ D    -> D U+             R12 D+ D U+   -> 0
///   R6  U D+    -> 0                R13 D U+ U    -> 0
///   R7  D+ U    -> D+ + U - 1       R14 D+ D U++ U+ -> 0
///
/// with X = X_i, X+ = X_{i+1}, X++ = X_{i+2}, words read left to right as
/// algebra products.  The system terminates and is critically confluent, so
/// normal forms are unique; both facts are certified executably here
/// (measure assertion per step, bounded exhaustive local confluence).

#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"

namespace looph {

struct RuleTerm {
    long coeff;
    std::vector<Letter> pat;  // letters with 0-based relative offsets
};

struct Rule {
    int id;                   // 1..14
    std::vector<Letter> lhs;  // relative offsets
    std::vector<RuleTerm> rhs;
    int span;                 // max relative offset used (0, 1 or 2)
};

namespace detail {
inline Letter D(int off) { return {LetterKind::D, off}; }
inline Letter U(int off) { return {LetterKind::U, off}; }
}  // namespace detail

inline const std::array<Rule, 14>& rules() {
    using detail::D;
    using detail::U;
    static const std::array<Rule, 14> table = {{
        {1, {D(0), D(0)}, {{1, {D(0)}}}, 0},
        {2, {D(0), U(0)}, {}, 0},
        {3, {U(0), U(0)}, {{1, {U(0)}}}, 0},
        {4, {U(0), D(0)}, {{1, {U(0)}}, {1, {D(0)}}, {-1, {}}}, 0},
        {5, {U(1), D(0)}, {{1, {D(0), U(1)}}}, 1},
        {6, {U(0), D(1)}, {}, 1},
        {7, {D(1), U(0)}, {{1, {D(1)}}, {1, {U(0)}}, {-1, {}}}, 1},
        {8, {D(0), D(1), D(0)}, {{1, {D(1), D(0)}}}, 1},
        {9, {D(1), D(0), D(1)}, {{1, {D(1), D(0)}}}, 1},
        {10, {U(0), U(1), U(0)}, {{1, {U(1), U(0)}}}, 1},
        {11, {U(1), U(0), U(1)}, {{1, {U(1), U(0)}}}, 1},
        {12, {D(1), D(0), U(1)}, {}, 1},
        {13, {D(0), U(1), U(0)}, {}, 1},
        {14, {D(1), D(0), U(2), U(1)}, {}, 2},
    }};
    return table;
}

inline Word instantiate(const std::vector<Letter>& pat, int base) {
    Word w;
    w.reserve(pat.size());
    for (const auto& l : pat) w.push_back({l.kind, l.index + base});
    return w;
}

struct RuleInstance {
    int rule_id;
    int base;
    Word lhs;
};

/// All rules over all valid base indices for strand count n, in (rule id,
/// base) order: R1-R4 need one strand pair, R5-R13 two, R14 three.
inline const std::vector<RuleInstance>& rule_instances(int n) {
    if (n < 1) throw std::invalid_argument("rule_instances: n must be >= 1");
    static std::map<int, std::vector<RuleInstance>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<RuleInstance> out;
    for (const auto& r : rules())
        for (int base = 1; base + r.span <= n - 1; ++base)
            out.push_back({r.id, base, instantiate(r.lhs, base)});
    return cache.emplace(n, std::move(out)).first->second;
}

/// A redex: a rule instance together with a pattern occurrence in a monomial.
struct Occurrence {
    int rule_id;
    int base;
    std::vector<int> slot_pos;
};

inline std::vector<Occurrence> find_occurrences(const Monomial& m, const RuleInstance& ri) {
    std::vector<Occurrence> out;
    for (auto& occ : occurrences(m, ri.lhs)) out.push_back({ri.rule_id, ri.base, occ.slot_pos});
    return out;
}

/// All redexes of m, in (rule id, base, positions) order.  The ambient n
/// bounds the instantiated indices.
inline std::vector<Occurrence> all_occurrences(const Monomial& m, int n) {
    std::vector<Occurrence> out;
    for (const auto& ri : rule_instances(n)) {
        auto found = find_occurrences(m, ri);
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

/// Termination measure: word length, then the number of dependent position
/// pairs p < q with kind(p) = U and kind(q) = D.  Both components are
/// interchange invariants, and every rule application decreases the pair
/// lexicographically (R5 keeps the length and drops an inversion; all other
/// rules shorten the word).
inline std::pair<size_t, size_t> measure(const Monomial& m) {
    const Word& w = m.letters();
    size_t inv = 0;
    for (size_t p = 0; p < w.size(); ++p)
        for (size_t q = p + 1; q < w.size(); ++q)
            if (w[p].kind == LetterKind::U && w[q].kind == LetterKind::D &&
                letters_dependent(w[p], w[q]))
                ++inv;
    return {w.size(), inv};
}

using IntTerms = std::vector<std::pair<Monomial, BigInt>>;

namespace detail {
inline const Rule& rule_by_id(int id) { return rules()[id - 1]; }

struct MeasureStats {
    size_t checks = 0;
    size_t violations = 0;
};
inline MeasureStats& measure_stats() {
    static MeasureStats s;
    return s;
}
}  // namespace detail

/// Replace the matched factor by the rule's right-hand side within the
/// factorization m = a * lhs * b.  Each resulting term is re-canonicalized.
/// Asserts that the measure strictly decreases (termination certificate);
/// a violation aborts with a diagnostic since the engine would otherwise
/// risk looping silently.
inline IntTerms apply_step(const Monomial& m, const Occurrence& occ) {
    const Rule& rule = detail::rule_by_id(occ.rule_id);
    if (occ.slot_pos.size() != rule.lhs.size())
        throw std::invalid_argument("apply_step: occurrence does not fit rule");
    const Word& w = m.letters();
    std::uint64_t sel = 0;
    for (size_t s = 0; s < occ.slot_pos.size(); ++s) {
        int p = occ.slot_pos[s];
        if (p < 0 || static_cast<size_t>(p) >= w.size() || (sel >> p & 1))
            throw std::invalid_argument("apply_step: bad occurrence positions");
        Letter expect{rule.lhs[s].kind, rule.lhs[s].index + occ.base};
        if (w[p] != expect) throw std::invalid_argument("apply_step: occurrence letters mismatch");
        sel |= std::uint64_t(1) << p;
    }
    for (size_t s = 0; s < occ.slot_pos.size(); ++s)
        for (size_t t = s + 1; t < occ.slot_pos.size(); ++t)
            if (letters_dependent(rule.lhs[s], rule.lhs[t]) && occ.slot_pos[s] > occ.slot_pos[t])
                throw std::invalid_argument("apply_step: dependent pair out of pattern order");

    DepOrder dep(w);
    for (size_t z = 0; z < w.size(); ++z)
        if (!(sel >> z & 1) && (dep.below[z] & sel) && (dep.above[z] & sel))
            throw std::invalid_argument("apply_step: selection is not convex");
    Word prefix, suffix;
    for (size_t z = 0; z < w.size(); ++z) {
        if (sel >> z & 1) continue;
        if (dep.below[z] & sel)
            suffix.push_back(w[z]);  // forced after the factor
        else
            prefix.push_back(w[z]);  // before the factor, or independent of it
    }

    auto parent_measure = measure(m);
    IntTerms out;
    for (const auto& term : rule.rhs) {
        Word nw = prefix;
        Word mid = instantiate(term.pat, occ.base);
        nw.insert(nw.end(), mid.begin(), mid.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        Monomial child = Monomial::canonical(nw);
        auto child_measure = measure(child);
        ++detail::measure_stats().checks;
        if (!(child_measure < parent_measure)) {
            ++detail::measure_stats().violations;
            throw std::logic_error("rewrite: termination measure did not decrease on " + m.str() +
                                   " -> " + child.str());
        }
        out.emplace_back(std::move(child), BigInt(term.coeff));
    }
    return out;
}

enum class Strategy { Canonical, Leftmost, Rightmost, Random };

/// Normal-form engine with a per-word memo cache.  Monomial normal forms do
/// not depend on the ambient strand count (rules never raise indices), so
/// the cache is shared across n.  Access is serialized by a mutex; results
/// are deterministic regardless of interleaving.
class Rewriter {
  public:
    /// Normal form of a single monomial as integer terms.
    IntTerms normal_form_terms(const Monomial& m) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(m.letters());
            if (it != memo_.end()) return it->second;
        }
        IntTerms nf = compute(m);
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(m.letters(), nf);
        return nf;
    }

    Element normal_form(const Element& x) {
        Element out(x.n());
        for (const auto& [m, c] : x.terms())
            for (const auto& [nm, nc] : normal_form_terms(m)) out.add_term(nm, c * Scalar(nc));
        return out;
    }

    bool is_normal_form(const Monomial& m) { return !first_occurrence(m).has_value(); }

    size_t cache_size() const { return memo_.size(); }

    size_t measure_checks() const { return detail::measure_stats().checks; }
    size_t measure_violations() const { return detail::measure_stats().violations; }

    /// JSON-lines cache: one {"word": [...], "nf": {"terms": [...]}} per line.
    void load_cache(const std::string& path) {
        std::ifstream in(path);
        if (!in) return;  // absent cache files are not an error
        std::string line;
        std::lock_guard<std::mutex> lock(mu_);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            Word w = word_from_json(j.at("word"));
            IntTerms terms;
            for (const auto& t : j.at("nf").at("terms"))
                terms.emplace_back(Monomial::from_canonical_unchecked(word_from_json(t.at("word"))),
                                   detail::bigint_from_json(t.at("coeff")));
            memo_.emplace(std::move(w), std::move(terms));
        }
    }

    void save_cache(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write cache file " + path);
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [w, nf] : memo_) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [m, c] : nf)
                terms.push_back(
                    {{"word", word_to_json(m.letters())}, {"coeff", detail::bigint_to_json(c)}});
            out << nlohmann::json{{"word", word_to_json(w)}, {"nf", {{"terms", terms}}}} << "\n";
        }
    }

    /// Shared engine used by the algebra layer.
    static Rewriter& global() {
        static Rewriter r;
        return r;
    }

  private:
    /// Canonical strategy: lowest rule id, then lowest base index, then
    /// leftmost positions.  Confluence makes the choice immaterial;
    /// determinism keeps tests and output stable.
    std::optional<Occurrence> first_occurrence(const Monomial& m) {
        int n = m.max_index() + 2;  // wide enough for every applicable instance
        for (const auto& ri : rule_instances(n)) {
            auto found = find_occurrences(m, ri);
            if (!found.empty()) return found.front();
        }
        return std::nullopt;
    }

    IntTerms compute(const Monomial& m) {
        auto occ = first_occurrence(m);
        if (!occ) return {{m, BigInt(1)}};
        std::map<Monomial, BigInt> acc;
        for (const auto& [child, coeff] : apply_step(m, *occ))
            for (const auto& [nm, nc] : normal_form_terms(child)) {
                auto [it, inserted] = acc.emplace(nm, coeff * nc);
                if (!inserted) {
                    it->second += coeff * nc;
                    if (it->second == 0) acc.erase(it);
                }
            }
        return IntTerms(acc.begin(), acc.end());
    }

    mutable std::mutex mu_;
    std::map<Word, IntTerms> memo_;
};

inline Element normal_form(const Element& x) { return Rewriter::global().normal_form(x); }

inline Element normal_form_of_word(int n, const Word& raw) {
    Element e = Element::single(n, canonicalize(n, raw), Scalar(1));
    return normal_form(e);
}

// ----- reduction under explicit strategies (no memo sharing) -----

namespace detail {
inline Occurrence pick_occurrence(const std::vector<Occurrence>& occs, Strategy st,
                                  std::mt19937_64& rng) {
    switch (st) {
        case Strategy::Canonical:
            return occs.front();
        case Strategy::Leftmost: {
            auto best = occs.front();
            for (const auto& o : occs) {
                auto key = [](const Occurrence& x) {
                    auto mm = std::minmax_element(x.slot_pos.begin(), x.slot_pos.end());
                    return std::tuple(*mm.first, *mm.second, x.rule_id, x.base);
                };
                if (key(o) < key(best)) best = o;
            }
            return best;
        }
        case Strategy::Rightmost: {
            auto best = occs.front();
            for (const auto& o : occs) {
                auto key = [](const Occurrence& x) {
                    auto mm = std::minmax_element(x.slot_pos.begin(), x.slot_pos.end());
                    return std::tuple(-*mm.second, -*mm.first, x.rule_id, x.base);
                };
                if (key(o) < key(best)) best = o;
            }
            return best;
        }
        case Strategy::Random:
        default: {
            std::uniform_int_distribution<size_t> d(0, occs.size() - 1);
            return occs[d(rng)];
        }
    }
}

inline void reduce_monomial(const Monomial& m, const BigInt& coeff, int n, Strategy st,
                            std::mt19937_64& rng, std::map<Monomial, BigInt>& acc) {
    auto occs = all_occurrences(m, n);
    if (occs.empty()) {
        auto [it, inserted] = acc.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) acc.erase(it);
        }
        return;
    }
    Occurrence occ = pick_occurrence(occs, st, rng);
    for (const auto& [child, c] : apply_step(m, occ))
        reduce_monomial(child, coeff * c, n, st, rng, acc);
}
}  // namespace detail

/// Fully reduce an element with the given strategy, bypassing the memo.
inline Element reduce_with_strategy(const Element& x, Strategy st, std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    std::map<Monomial, BigInt> acc;
    for (const auto& [m, c] : x.terms()) {
        if (!c.is_integer()) throw std::invalid_argument("reduce_with_strategy: integer input only");
        detail::reduce_monomial(m, c.num().coeff(0), x.n(), st, rng, acc);
    }
    Element out(x.n());
    for (const auto& [m, c] : acc) out.add_term(m, Scalar(c));
    return out;
}

// ----- bounded exhaustive local confluence -----

struct ConfluenceFailure {
    Word word;
    Occurrence left, right;
};

struct ConfluenceReport {
    size_t monomials = 0;
    size_t branchings = 0;           // unordered pairs of distinct one-step reducts
    size_t overlapping = 0;          // pairs whose occurrences share a position
    size_t nonreduced_nf_terms = 0;  // normal-form support monomials that still carry a redex
    size_t nonbasis_nf_terms = 0;    // support monomials rejected by the caller's basis check
    std::vector<ConfluenceFailure> failures;
    bool all_confluent() const {
        return failures.empty() && nonreduced_nf_terms == 0 && nonbasis_nf_terms == 0;
    }
};

namespace detail {
// A prefix of a canonical word is canonical (a smaller equivalent prefix
// would give a smaller equivalent word), so pruning is sound.
template <class F>
inline void enumerate_canonical(int window, int max_len, Word& cur, F&& visit) {
    if (Monomial::canonical(cur).letters() != cur) return;
    visit(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int idx = 1; idx <= window; ++idx)
        for (auto kind : {LetterKind::D, LetterKind::U}) {
            cur.push_back({kind, idx});
            enumerate_canonical(window, max_len, cur, visit);
            cur.pop_back();
        }
}
}  // namespace detail

/// Exhaustively check local confluence on every canonical monomial of
/// length <= max_len with letter indices in 1..index_window: every pair of
/// distinct one-step reducts must reach the same normal form.  At
/// max_len >= 6, index_window >= 4 this covers every critical branching
/// shape of the rule system, including the indexed ones with the trapped
/// diagram instantiated by an identity strand, a D or a U.
///
/// Every normal-form support monomial met along the way is re-checked to be
/// redex-free, and fed to `support_check` when one is supplied (the algebra
/// layer passes its reduced-word basis membership test).
inline ConfluenceReport local_confluence_report(
    int max_len, int index_window, Rewriter& rw = Rewriter::global(),
    const std::function<bool(const Monomial&)>& support_check = {}) {
    if (max_len < 2) throw std::invalid_argument("local_confluence_report: max_len must be >= 2");
    ConfluenceReport rep;
    int n = index_window + 1;
    std::set<Word> support_seen;
    auto check_support = [&](const Element& nf) {
        for (const auto& [sm, sc] : nf.terms()) {
            if (!support_seen.insert(sm.letters()).second) continue;
            if (!all_occurrences(sm, n).empty()) ++rep.nonreduced_nf_terms;
            if (support_check && !support_check(sm)) ++rep.nonbasis_nf_terms;
        }
    };
    Word cur;
    detail::enumerate_canonical(index_window, max_len, cur, [&](const Word& w) {
        ++rep.monomials;
        Monomial m = Monomial::from_canonical_unchecked(w);
        auto occs = all_occurrences(m, n);
        Element nf_m = rw.normal_form(Element::single(n, m, Scalar(1)));
        check_support(nf_m);
        if (occs.empty()) return;
        std::vector<Element> reducts;
        reducts.reserve(occs.size());
        for (const auto& occ : occs) {
            Element e(n);
            for (const auto& [cm, cc] : apply_step(m, occ)) e.add_term(cm, Scalar(cc));
            reducts.push_back(std::move(e));
        }
        std::vector<Element> nfs;
        nfs.reserve(reducts.size());
        for (const auto& e : reducts) nfs.push_back(rw.normal_form(e));
        for (size_t a = 0; a < occs.size(); ++a)
            for (size_t b = a + 1; b < occs.size(); ++b) {
                if (reducts[a] == reducts[b]) continue;
                ++rep.branchings;
                std::uint64_t sa = 0, sb = 0;
                for (int p : occs[a].slot_pos) sa |= std::uint64_t(1) << p;
                for (int p : occs[b].slot_pos) sb |= std::uint64_t(1) << p;
                if (sa & sb) ++rep.overlapping;
                if (nfs[a] != nfs[b] || nfs[a] != nf_m) rep.failures.push_back({w, occs[a], occs[b]});
            }
    });
    return rep;
}

/// Pseudo-random words reduced under leftmost, rightmost and random
/// strategies must give the same normal form as the canonical engine.
inline bool strategy_consistency(int n, size_t trials, std::uint64_t seed,
                                 Rewriter& rw = Rewriter::global(), size_t max_len = 12) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> idx_dist(1, std::max(1, n - 1));
    std::uniform_int_distribution<int> kind_dist(0, 1);
    for (size_t t = 0; t < trials; ++t) {
        Word w;
        size_t len = len_dist(rng);
        for (size_t i = 0; i < len; ++i)
            w.push_back({kind_dist(rng) ? LetterKind::U : LetterKind::D, idx_dist(rng)});
        Element e = Element::single(n, canonicalize(n, w), Scalar(1));
        Element nf = rw.normal_form(e);
        for (auto st : {Strategy::Leftmost, Strategy::Rightmost, Strategy::Random})
            if (reduce_with_strategy(e, st, rng()) != nf) return false;
    }
    return true;
}

}  // namespace looph

#endif
