#ifndef LOOPH_COMBIN_HPP
#define LOOPH_COMBIN_HPP

/// Dyck-path combinatorics: enumeration, the Mansour-Deng-Du bijection onto
/// 321-avoiding permutations via zigzag strips, the tilde-Dyck pair set, and
/// the bijection onto lattice paths from (0,1) to (n,n) that counts the
/// reduced-word basis.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace looph {

/// A Dyck path of semilength n: 2n steps from (0,0) to (n,n), u = (0,1)
/// stored as bit 1 and r = (1,0) as bit 0, weakly above the diagonal.
struct DyckPath {
    int n = 0;
    std::uint32_t bits = 0;  // step i in bit i, reading left to right

    bool step_up(int i) const { return (bits >> i) & 1; }

    bool valid() const {
        if (n < 0 || 2 * n > 28) return false;
        int up = 0, right = 0;
        for (int i = 0; i < 2 * n; ++i) {
            if (step_up(i)) ++up;
            else ++right;
            if (right > up) return false;
        }
        return up == n && right == n;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 2 * n; ++i) s += step_up(i) ? 'u' : 'r';
        return s;
    }

    static DyckPath parse(const std::string& s) {
        if (s.size() % 2) throw std::invalid_argument("Dyck path has odd length");
        DyckPath p;
        p.n = static_cast<int>(s.size() / 2);
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'u') p.bits |= std::uint32_t(1) << i;
            else if (s[i] != 'r') throw std::invalid_argument("Dyck path steps must be u or r");
        }
        if (!p.valid()) throw std::invalid_argument("not a Dyck path: " + s);
        return p;
    }

    /// Height of the path over column x (the y value for x < t < x+1).
    std::vector<int> heights() const {
        std::vector<int> h(n, 0);
        int x = 0, y = 0;
        for (int i = 0; i < 2 * n; ++i) {
            if (step_up(i)) ++y;
            else h[x++] = y;
        }
        return h;
    }

    /// Bitmask of 0..n marking the diagonal points (i,i) the path visits.
    std::uint32_t touch_mask() const {
        std::uint32_t mask = 1 | (std::uint32_t(1) << n);  // (0,0) and (n,n)
        auto h = heights();
        for (int i = 1; i < n; ++i)
            if (h[i - 1] == i) mask |= std::uint32_t(1) << i;
        return mask;
    }

    bool touches(int i) const { return (touch_mask() >> i) & 1; }

    auto operator<=>(const DyckPath&) const = default;
};

inline mpz_class catalan(int n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    return c / (n + 1);
}

inline mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

/// All Dyck paths of semilength n, in lexicographic order of the step
/// string (r < u).
inline std::vector<DyckPath> dyck_paths(int n) {
    if (n < 0 || n > 14) throw std::out_of_range("dyck_paths: n must be in 0..14");
    std::vector<DyckPath> out;
    struct Rec {
        int n;
        std::vector<DyckPath>& out;
        void go(std::uint32_t bits, int i, int up, int right) {
            if (i == 2 * n) {
                out.push_back({n, bits});
                return;
            }
            if (right < up) go(bits, i + 1, up, right + 1);                      // r first
            if (up < n) go(bits | (std::uint32_t(1) << i), i + 1, up + 1, right);  // then u
        }
    } rec{n, out};
    rec.go(0, 0, 0, 0);
    return out;
}

// ----- Mansour-Deng-Du bijection -----

/// One zigzag strip = one factor s_{i+k} ... s_{i+1} s_i of the image
/// permutation, recorded as its descending index list.
using MddFactor = std::vector<int>;

namespace detail {
struct Cell {
    int x, y;  // bottom-left corner; the label is y
    auto operator<=>(const Cell&) const = default;
};

/// Cells adjacent to the path described by `h`, in path order, which for
/// this staircase shape is (x, y) lexicographic.  A cell is adjacent when
/// its top edge lies on the path or its left edge lies on a u-run.
inline std::vector<Cell> adjacent_cells(const std::vector<int>& h) {
    std::vector<Cell> out;
    int n = static_cast<int>(h.size());
    for (int x = 0; x < n; ++x) {
        int lo = x == 0 ? 0 : h[x - 1];
        int top = h[x] - 1;
        if (top < x + 1) continue;  // no cells in this column
        int from = std::max(lo, x + 1);
        if (from > top) from = top;  // run empty: only the top cell is adjacent
        for (int y = from; y <= top; ++y) out.push_back({x, y});
    }
    return out;
}
}  // namespace detail

/// The MDD image of P as a list of zigzag-strip factors; concatenated they
/// form a reduced word for a 321-avoiding permutation.  Satisfies
/// (i,i) not in P  iff  index i appears in the word.
inline std::vector<MddFactor> mdd(const DyckPath& P) {
    std::vector<int> h = P.heights();
    std::vector<MddFactor> factors;
    for (;;) {
        // essential cells: (x, j) with the vertical run at x passing strictly
        // through y = j, i.e. two consecutive u-steps around (x, j)
        detail::Cell rightmost{-1, -1};
        for (int x = 0; x < P.n; ++x) {
            int lo = x == 0 ? 0 : h[x - 1];
            for (int j = lo + 1; j <= h[x] - 1; ++j)
                if (detail::Cell{x, j} > rightmost) rightmost = {x, j};
        }
        if (rightmost.x < 0) break;
        auto adj = detail::adjacent_cells(h);
        MddFactor labels;
        for (const auto& c : adj) {
            if (c < rightmost) continue;
            if (labels.empty() || labels.back() != c.y) labels.push_back(c.y);
            --h[c.x];  // peel the strip
        }
        // labels of a strip form a contiguous interval {i, ..., i+k}
        for (size_t i = 0; i + 1 < labels.size(); ++i)
            if (labels[i + 1] != labels[i] + 1)
                throw std::logic_error("mdd: zigzag strip labels not contiguous");
        std::reverse(labels.begin(), labels.end());  // emit s_{i+k} ... s_i
        factors.push_back(std::move(labels));
    }
    std::reverse(factors.begin(), factors.end());  // rightmost strip peeled first sits last
    return factors;
}

inline std::vector<int> mdd_word(const DyckPath& P) {
    std::vector<int> w;
    for (const auto& f : mdd(P)) w.insert(w.end(), f.begin(), f.end());
    return w;
}

/// Inverse of the MDD map by table lookup (the forward map is the one the
/// construction defines; n stays small here).  Throws when the word is not
/// the MDD image of any path, i.e. not 321-avoiding reduced in this form.
inline DyckPath mdd_inverse(const std::vector<int>& word, int n) {
    static std::map<int, std::map<std::vector<int>, DyckPath>> tables;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& table = tables[n];
    if (table.empty())
        for (const auto& p : dyck_paths(n)) table.emplace(mdd_word(p), p);
    auto it = table.find(word);
    if (it == table.end()) throw std::invalid_argument("mdd_inverse: word has no preimage");
    return it->second;
}

// ----- tilde-Dyck pairs and the lattice-path bijection -----

/// Pairs (P,Q) with (i,i) not in P implying (i,i) and (i-1,i-1) in Q.
inline std::vector<std::pair<DyckPath, DyckPath>> tilde_dyck(int n) {
    if (n < 1 || n > 10) throw std::out_of_range("tilde_dyck: n must be in 1..10");
    auto paths = dyck_paths(n);
    std::vector<std::uint32_t> touch(paths.size());
    for (size_t i = 0; i < paths.size(); ++i) touch[i] = paths[i].touch_mask();
    std::uint32_t all = (std::uint32_t(1) << (n + 1)) - 1;
    std::vector<std::pair<DyckPath, DyckPath>> out;
    for (size_t a = 0; a < paths.size(); ++a) {
        std::uint32_t miss = all & ~touch[a];
        for (size_t b = 0; b < paths.size(); ++b)
            if ((miss & ~touch[b]) == 0 && (miss & ~(touch[b] << 1)) == 0)
                out.emplace_back(paths[a], paths[b]);
    }
    return out;
}

/// A lattice path from (0,1) to (n,n): n r-steps and n-1 u-steps.
struct LatticePath {
    int n = 0;
    std::uint32_t bits = 0;

    bool step_up(int i) const { return (bits >> i) & 1; }
    int length() const { return 2 * n - 1; }

    bool valid() const {
        int up = 0, right = 0;
        for (int i = 0; i < length(); ++i) (step_up(i) ? up : right)++;
        return up == n - 1 && right == n;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < length(); ++i) s += step_up(i) ? 'u' : 'r';
        return s;
    }

    static LatticePath parse(const std::string& s) {
        LatticePath p;
        p.n = static_cast<int>((s.size() + 1) / 2);
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] == 'u') p.bits |= std::uint32_t(1) << i;
        if (static_cast<int>(s.size()) != p.length() || !p.valid())
            throw std::invalid_argument("not a path of Path(n,n-1): " + s);
        return p;
    }

    auto operator<=>(const LatticePath&) const = default;
};

inline std::vector<LatticePath> lattice_paths(int n) {
    std::vector<LatticePath> out;
    int len = 2 * n - 1;
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << len); ++bits) {
        LatticePath p{n, bits};
        if (p.valid()) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const LatticePath& a, const LatticePath& b) {
        return a.str() < b.str();
    });
    return out;
}

namespace detail {
/// Arches of a Dyck path: consecutive diagonal touch points (a, b) with the
/// step word between them.
struct Arch {
    int a, b;
    std::string word;
};

inline std::vector<Arch> arches(const DyckPath& P) {
    std::vector<Arch> out;
    std::string s = P.str();
    int x = 0, y = 0;
    size_t start = 0;
    int a = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'u') ++y;
        else ++x;
        if (x == y) {
            out.push_back({a, x, s.substr(start, i + 1 - start)});
            a = x;
            start = i + 1;
        }
    }
    return out;
}

inline std::string transpose_steps(const std::string& s) {
    std::string t = s;
    for (auto& c : t) c = (c == 'u') ? 'r' : 'u';
    return t;
}
}  // namespace detail

/// The bijection tilde-Dyck_n -> Path(n,n-1): drop P's first u-step and
/// replace each maximal squiggly P-line P_{i,j} (a run of unit arches with
/// i >= 1) by the truncated, upward-shifted copy of Q_{i-1,j}.  On step
/// words the replacement is the transpose of Q's sub-word between touches
/// (i-1,i-1) and (j,j) with its outer u and r removed.
inline LatticePath phi(const DyckPath& P, const DyckPath& Q) {
    if (P.n != Q.n) throw std::invalid_argument("phi: semilengths differ");
    std::uint32_t qt = Q.touch_mask();
    std::uint32_t all = (std::uint32_t(1) << (P.n + 1)) - 1;
    std::uint32_t miss = all & ~P.touch_mask();
    if ((miss & ~qt) != 0 || (miss & ~(qt << 1)) != 0)
        throw std::invalid_argument("phi: pair not in tilde-Dyck");
    auto par = detail::arches(P);
    // group consecutive unit arches with a >= 1 into maximal squiggly lines
    std::string out;
    std::string qs = Q.str();
    // prefix sums of Q's steps to cut sub-words between diagonal touches
    std::vector<size_t> qpos(Q.n + 1, 0);  // index in qs where touch (i,i) happens
    {
        int x = 0, y = 0;
        for (size_t i = 0; i < qs.size(); ++i) {
            if (qs[i] == 'u') ++y;
            else ++x;
            if (x == y) qpos[x] = i + 1;
        }
    }
    size_t k = 0;
    bool first_arch = true;
    while (k < par.size()) {
        const auto& arch = par[k];
        bool unit = arch.word == "ur";
        if (unit && arch.a >= 1) {
            int i = arch.a;
            size_t k2 = k;
            while (k2 + 1 < par.size() && par[k2 + 1].word == "ur") ++k2;
            int j = par[k2].b;
            if (!((qt >> (i - 1)) & 1) || !((qt >> j) & 1))
                throw std::invalid_argument("phi: pair not in tilde-Dyck");
            std::string sub = qs.substr(qpos[i - 1], qpos[j] - qpos[i - 1]);
            out += detail::transpose_steps(sub.substr(1, sub.size() - 2));
            k = k2 + 1;
        } else {
            out += first_arch ? arch.word.substr(1) : arch.word;  // drop P's first u
            k = k + 1;
        }
        first_arch = false;
    }
    return LatticePath::parse(out);
}

/// Inverse of phi.  Steps of L are attributed to P or Q by their position
/// relative to the diagonal d and its upward shift l = {y = x+1}: the
/// segment anchored at the start (0,1) belongs to P, excursions strictly
/// above d of length at least 4 are P-arches u T r with T weakly above l,
/// while length-2 excursions and everything touching the region below d
/// come from Q.
inline std::pair<DyckPath, DyckPath> phi_inverse(const LatticePath& L) {
    int n = L.n;
    std::string s = L.str();
    // cut L at diagonal points (x == y)
    struct Seg {
        int from, to;  // diagonal coordinates
        std::string word;
        bool is_p;
    };
    std::vector<Seg> segs;
    {
        int x = 0, y = 1;
        std::string cur;
        int from = 0;
        for (size_t i = 0; i < s.size(); ++i) {
            cur += s[i];
            if (s[i] == 'u') ++y;
            else ++x;
            if (x == y) {
                segs.push_back({from, x, cur, false});
                from = x;
                cur.clear();
            }
        }
        if (!cur.empty()) throw std::invalid_argument("phi_inverse: path does not end on d");
    }
    for (size_t i = 0; i < segs.size(); ++i) {
        if (i == 0)
            segs[i].is_p = true;  // anchored at (0,1): remnant of P's first arch
        else
            segs[i].is_p = segs[i].word.size() >= 4 && segs[i].word.front() == 'u' &&
                           segs[i].word.back() == 'r';
    }
    // sanity: a P-segment may never dip below d
    for (const auto& seg : segs)
        if (seg.is_p) {
            int x = seg.from, y = seg.from + (&seg == &segs.front() ? 1 : 0);
            for (char c : seg.word) {
                (c == 'u') ? ++y : ++x;
                if (y < x) throw std::invalid_argument("phi_inverse: malformed P-segment");
            }
        }

    std::string pw = "u";
    std::string qw;
    int q_upto = 0;  // diagonal coordinate Q has been built up to
    size_t i = 0;
    while (i < segs.size()) {
        if (segs[i].is_p) {
            pw += segs[i].word;
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < segs.size() && !segs[j + 1].is_p) ++j;
        int from = segs[i].from, to = segs[j].to;
        if (from < 1) throw std::invalid_argument("phi_inverse: Q-run at the origin");
        std::string run;
        for (size_t t = i; t <= j; ++t) run += segs[t].word;
        // the squiggly line of P this run replaced
        for (int t = from; t < to; ++t) pw += "ur";
        // Q between forced unit arches: fill, then insert u run^T r
        for (int t = q_upto; t < from - 1; ++t) qw += "ur";
        qw += "u" + detail::transpose_steps(run) + "r";
        q_upto = to;
        i = j + 1;
    }
    for (int t = q_upto; t < n; ++t) qw += "ur";
    DyckPath P = DyckPath::parse(pw);
    DyckPath Q = DyckPath::parse(qw);
    return {P, Q};
}

}  // namespace looph

#endif
