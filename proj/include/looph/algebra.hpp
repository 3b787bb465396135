#ifndef LOOPH_ALGEBRA_HPP
#define LOOPH_ALGEBRA_HPP

/// The integral form of the loop Hecke algebra on n strands: the product,
/// the reduced-word basis and coordinates, the map from the sigma/rho
/// presentation, the counit and its quotient, and the executable
/// verifications that tie the two presentations together.

#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "combin.hpp"
#include "element.hpp"
#include "linalg.hpp"
#include "rewrite.hpp"

namespace looph {

inline Element generator(LetterKind kind, int i, int n) {
    if (i < 1 || i > n - 1)
        throw std::out_of_range("generator index " + std::to_string(i) + " out of range for n=" +
                                std::to_string(n));
    return Element::single(n, Monomial::canonical({{kind, i}}), Scalar(1));
}

inline Element gen_u(int i, int n) { return generator(LetterKind::U, i, n); }
inline Element gen_d(int i, int n) { return generator(LetterKind::D, i, n); }

/// Algebra product: bilinear concatenation followed by normal form.
inline Element multiply(const Element& a, const Element& b) { return normal_form(a.concat(b)); }

// ----- reduced words -----

/// A word avoids all fourteen rule patterns (up to interchange) iff it is a
/// reduced word; this is the monomial-normal-form test expressed through
/// the occurrence search.
inline bool is_reduced(const Monomial& m) {
    int n = m.max_index() + 2;
    for (const auto& ri : rule_instances(n))
        if (!find_occurrences(m, ri).empty()) return false;
    return true;
}

namespace detail {
struct BasisData {
    std::vector<Monomial> words;        // tilde-Dyck enumeration order
    std::map<Monomial, size_t> index;
};

inline const BasisData& basis_data(int n) {
    static std::map<int, BasisData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    BasisData data;
    for (const auto& [p, q] : tilde_dyck(n)) {
        Word w;
        for (int j : mdd_word(p)) w.push_back({LetterKind::D, j});
        for (int j : mdd_word(q)) w.push_back({LetterKind::U, j});
        Monomial m = canonicalize(n, w);
        if (!data.index.emplace(m, data.words.size()).second)
            throw std::logic_error("reduced_words: duplicate basis word " + m.str());
        data.words.push_back(std::move(m));
    }
    return cache.emplace(n, std::move(data)).first->second;
}
}  // namespace detail

/// The monomial basis: one reduced word per pair of 321-avoiding
/// permutations (D part, U part) subject to the support condition, realized
/// through their Dyck paths and the MDD zigzag-strip word.  The cardinality
/// is binomial(2n-1, n).
inline const std::vector<Monomial>& reduced_words(int n) { return detail::basis_data(n).words; }

inline bool in_basis(int n, const Monomial& m) {
    return detail::basis_data(n).index.count(m) > 0;
}

/// Coefficient vector over reduced_words(n).  A normal-form monomial
/// outside the basis is an internal invariant violation.
inline ScalarVec coords(const Element& x) {
    const auto& data = detail::basis_data(x.n());
    ScalarVec v(data.words.size(), Scalar(0));
    for (const auto& [m, c] : x.terms()) {
        auto it = data.index.find(m);
        if (it == data.index.end())
            throw std::logic_error("coords: monomial " + m.str() + " is not a reduced word");
        v[it->second] = c;
    }
    return v;
}

// ----- the sigma/rho presentation -----

struct SigmaRhoToken {
    char kind;  // 's' or 'r'
    int index;
};

struct SigmaRhoWord {
    int n;
    std::vector<SigmaRhoToken> tokens;

    static SigmaRhoWord parse(int n, const std::string& text) {
        SigmaRhoWord w{n, {}};
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'r'))
                throw std::invalid_argument("bad sigma/rho token: " + tok);
            int idx = std::stoi(tok.substr(1));
            if (idx < 1 || idx > n - 1) throw std::out_of_range("token index out of range: " + tok);
            w.tokens.push_back({tok[0], idx});
        }
        return w;
    }
};

/// Images of the generators under the presentation map:
/// sigma_i -> U_i - t D_i and rho_i -> U_i - D_i.
inline Element sigma_image(int i, int n) {
    Scalar t = Scalar::variable();
    return gen_u(i, n) - t * gen_d(i, n);
}
inline Element rho_image(int i, int n) { return gen_u(i, n) - gen_d(i, n); }

/// Image of a sigma/rho word, normalized, with coefficients in Q(t).
inline Element sigma_rho_image(const SigmaRhoWord& w) {
    Element acc = Element::unit(w.n);
    for (const auto& tok : w.tokens)
        acc = acc.concat(tok.kind == 's' ? sigma_image(tok.index, w.n) : rho_image(tok.index, w.n));
    return normal_form(acc);
}

// ----- counit and ideals -----

/// The augmentation U_i -> 1, D_i -> 0.
inline Scalar counit(const Element& x) {
    Scalar acc(0);
    for (const auto& [m, c] : x.terms()) {
        bool killed = false;
        for (const auto& l : m.letters())
            if (l.kind == LetterKind::D) {
                killed = true;
                break;
            }
        if (!killed) acc += c;
    }
    return acc;
}

/// Dimension of the two-sided ideal generated by `gens`: saturate the span
/// under multiplication by the algebra generators until the rank stops
/// growing.
inline size_t ideal_dimension(const std::vector<Element>& gens, int n) {
    if (n > 5) throw std::out_of_range("ideal_dimension: n capped at 5");
    const auto& basis = reduced_words(n);
    RowEchelon span(basis.size());
    std::vector<Element> queue;
    for (const auto& g : gens) {
        Element nf = normal_form(g);
        if (span.insert(coords(nf))) queue.push_back(std::move(nf));
    }
    while (!queue.empty()) {
        Element x = std::move(queue.back());
        queue.pop_back();
        for (int i = 1; i <= n - 1; ++i)
            for (auto kind : {LetterKind::D, LetterKind::U}) {
                Element g = generator(kind, i, n);
                for (Element p : {multiply(g, x), multiply(x, g)})
                    if (span.insert(coords(p))) queue.push_back(std::move(p));
            }
    }
    return span.rank();
}

inline Element d_chain(int j, int n) {
    Word w;
    for (int i = 1; i <= j; ++i) w.push_back({LetterKind::D, i});
    return Element::single(n, canonicalize(n, w), Scalar(1));
}

// ----- verification reports -----

struct CheckLine {
    std::string name;
    bool ok;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckLine> lines;

    bool passed() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        lines.push_back({name, ok, detail});
    }
    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : lines)
            arr.push_back({{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
        return {{"title", title}, {"passed", passed()}, {"checks", arr}};
    }
};

namespace detail {
/// The family of relations obtained by expanding the braid relations of
/// the sigma/rho presentation through the map phi and simplifying with the
/// same-label relations; (a,b) ranges over {1,t}^2.  Built raw, without
/// normalization, at base index i.
inline Element r_ab(const Scalar& a, const Scalar& b, int i, int n) {
    auto w = [&](std::initializer_list<Letter> ls) {
        return Element::single(n, canonicalize(n, Word(ls)), Scalar(1));
    };
    Letter Dl{LetterKind::D, i}, Dp{LetterKind::D, i + 1};
    Letter Ul{LetterKind::U, i}, Up{LetterKind::U, i + 1};
    Element r = w({Ul, Up, Ul}) - w({Up, Ul, Up});
    r -= a * (w({Dl, Up, Ul}) - w({Up, Ul, Dp}));
    r -= b * (w({Ul, Dp, Ul}) + w({Ul, Up, Dl}) - w({Up, Dl, Up}) - w({Dp, Ul, Up}));
    r += (a * b) * (w({Dl, Dp, Ul}) + w({Dl, Up, Dl}) - w({Up, Dl, Dp}) - w({Dp, Ul, Dp}));
    r += (b * b) * (w({Ul, Dp, Dl}) - w({Dp, Dl, Up}));
    r -= (a * b * b) * (w({Dl, Dp, Dl}) - w({Dp, Dl, Dp}));
    return r;
}
}  // namespace detail

/// Check that the image under phi of every defining relation of the
/// sigma/rho presentation vanishes in the integral form over Q(t),
/// including the expanded family r_{(a,b)}.
inline Report verify_presentation_map(int n) {
    if (n < 2) throw std::invalid_argument("verify_presentation_map: n must be >= 2");
    Report rep;
    rep.title = "presentation map, n=" + std::to_string(n);
    Scalar t = Scalar::variable();
    auto sig = [&](int i) { return sigma_image(i, n); };
    auto rho = [&](int i) { return rho_image(i, n); };
    auto zero = [&](const std::string& name, const Element& e) {
        Element nf = normal_form(e);
        rep.add(name, nf.is_zero(), nf.is_zero() ? "" : "residue " + nf.str());
    };
    auto prod3 = [&](const Element& a, const Element& b, const Element& c) {
        return a.concat(b).concat(c);
    };

    for (int i = 1; i + 1 <= n - 1; ++i) {
        std::string si = std::to_string(i);
        zero("sigma braid i=" + si,
             prod3(sig(i), sig(i + 1), sig(i)) - prod3(sig(i + 1), sig(i), sig(i + 1)));
        zero("rho braid i=" + si,
             prod3(rho(i), rho(i + 1), rho(i)) - prod3(rho(i + 1), rho(i), rho(i + 1)));
        zero("mixed rho.sigma.sigma i=" + si,
             prod3(rho(i), sig(i + 1), sig(i)) - prod3(sig(i + 1), sig(i), rho(i + 1)));
        zero("mixed sigma.rho.rho i=" + si,
             prod3(sig(i), rho(i + 1), rho(i)) - prod3(rho(i + 1), rho(i), sig(i + 1)));
        for (const auto& [an, a] : {std::pair<std::string, Scalar>{"1", Scalar(1)},
                                    std::pair<std::string, Scalar>{"t", t}})
            for (const auto& [bn, b] : {std::pair<std::string, Scalar>{"1", Scalar(1)},
                                        std::pair<std::string, Scalar>{"t", t}})
                zero("r_(" + an + "," + bn + ") i=" + si, detail::r_ab(a, b, i, n));
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            std::string ij = std::to_string(i) + "," + std::to_string(j);
            zero("distant sigma " + ij, sig(i).concat(sig(j)) - sig(j).concat(sig(i)));
            zero("distant rho " + ij, rho(i).concat(rho(j)) - rho(j).concat(rho(i)));
            zero("distant sigma.rho " + ij, sig(i).concat(rho(j)) - rho(j).concat(sig(i)));
        }
    Element one = Element::unit(n);
    for (int i = 1; i <= n - 1; ++i) {
        std::string si = std::to_string(i);
        zero("rho^2=1 i=" + si, rho(i).concat(rho(i)) - one);
        zero("(sigma-1)(sigma+t) i=" + si, (sig(i) - one).concat(sig(i) + t * one));
        zero("(rho-1)(sigma+t) i=" + si, (rho(i) - one).concat(sig(i) + t * one));
        zero("(sigma-1)(rho+1) i=" + si, (sig(i) - one).concat(rho(i) + one));
    }
    // phi composed with its inverse fixes the generators
    Scalar inv1t = (Scalar(1) - t).inverse();
    for (int i = 1; i <= n - 1; ++i) {
        std::string si = std::to_string(i);
        Element d_back = (sig(i) - rho(i)) * inv1t;
        Element u_back = (sig(i) - t * rho(i)) * inv1t;
        rep.add("phi inverse D i=" + si, normal_form(d_back) == gen_d(i, n));
        rep.add("phi inverse U i=" + si, normal_form(u_back) == gen_u(i, n));
    }
    return rep;
}

/// Replay the derivation chain that recovers the idempotent-generator
/// relations from the r_{(a,b)} family, inside the integral form on three
/// strands where every relation holds: each combination of the r_{(a,b)}
/// normalizes to its simplified form, and both normalize to zero.
inline Report verify_derivation_steps(int n = 3) {
    if (n < 3) throw std::invalid_argument("verify_derivation_steps: n must be >= 3");
    Report rep;
    rep.title = "derivation steps in n=3";
    Scalar t = Scalar::variable();
    Scalar one(1);
    auto w = [&](std::initializer_list<Letter> ls) {
        return Element::single(n, canonicalize(n, Word(ls)), Scalar(1));
    };
    Letter D{LetterKind::D, 1}, Dp{LetterKind::D, 2};
    Letter U{LetterKind::U, 1}, Up{LetterKind::U, 2};
    Element eD = w({D}), eDp = w({Dp}), eU = w({U}), eUp = w({Up}), unit = Element::unit(n);

    auto check = [&](const std::string& name, const Element& comb, const Element& simplified) {
        Element nfc = normal_form(comb), nfd = normal_form(simplified);
        bool ok = nfc == nfd && nfd.is_zero();
        rep.add(name, ok, ok ? "" : "comb nf " + nfc.str() + " vs simplified nf " + nfd.str());
    };
    auto r = [&](const Scalar& a, const Scalar& b) { return detail::r_ab(a, b, 1, n); };

    // Case t generic
    {
        Element r11 = r(one, one), r1t = r(one, t), rt1 = r(t, one), rtt = r(t, t);
        Scalar c2 = ((t - 1) * (t - 1)).inverse();
        Element s1c = ((t.pow(3) * r11 - t * t * r1t - t * rt1 + rtt).concat(eU) -
                       (t.pow(3) * r11 - t * t * r1t - t * t * rt1 + t * rtt).concat(eD) +
                       eUp.concat(t.pow(3) * r11 - t * r1t - t * t * rt1 + rtt) -
                       eDp.concat(t.pow(3) * r11 - t * r1t - t.pow(3) * rt1 + t * rtt) -
                       (t - 1) * (t * r1t - rtt)) *
                      c2;
        Element s1 = t * w({U, Dp, U}) - t * w({D, Up, U}) - t * t * w({Dp, U, Dp}) +
                     t * t * w({Dp, D, Up});
        check("case1 s1", s1c, s1);
        Element s2c = (eDp.concat(s1) + s1.concat(eU) - s1) * (-(t * t * (t - 1)).inverse());
        Element s2 = w({Dp, U, Dp}) - w({Dp, D, Up});
        check("case1 s2", s2c, s2);
        Scalar c3 = ((t + 1) * (t - 1) * (t - 1)).inverse();
        Element s3c = eU.concat(t * r11 - t * r1t - rt1 + rtt) * c3;
        Element s3 = w({Up, D}) - w({D, Up});
        check("case1 s3", s3c, s3);
        Element s4c = (t * t * r11 - r1t - t * t * rt1 + rtt).concat(eDp) * c3;
        check("case1 s4", s4c, -w({U, Dp}));
        Element s5c = (t * t * r11 - t * r1t - t * rt1 + rtt).concat(eDp) * c2;
        check("case1 s5", s5c, w({Up, U}) - w({Up, U, Up}));
        Element s6c = (t * r11 - r1t - t * rt1 + rtt).concat(eDp) * c2;
        check("case1 s6", s6c, -t * (w({D, Dp, D}) - w({Dp, D})));
        Element rt1_reduced = t * w({D, Dp, U}) + w({Dp, U, Up}) - t * w({D, Dp}) - w({U, Up}) +
                              t * eD + eUp;
        check("case1 r_(t,1) reduced", rt1, rt1_reduced);
        Element s7c = (rt1.concat(eUp) - t * eD.concat(rt1) - eUp.concat(rt1) +
                       (t + 1) * eU.concat(rt1)) *
                      (-(t * (t + 1)).inverse());
        check("case1 s7", s7c, w({Dp, U}) - eDp - eU + unit);
    }

    // Case t = 0
    {
        Scalar z(0);
        Element r00 = r(z, z), r10 = r(one, z), r01 = r(z, one), r11 = r(one, one);
        Element v1 = w({U, Up, U}) - w({Up, U, Up});
        Element v2 = w({D, Up, U}) - w({Up, U, Dp});
        Element v3 = w({U, Dp, U}) + w({U, Up, D}) - w({Up, D, Up}) - w({Dp, U, Up}) +
                     w({U, Dp, D}) - w({Dp, D, Up});
        Element v4 = w({D, Dp, U}) + w({D, Up, D}) - w({Up, D, Dp}) - w({Dp, U, Dp}) +
                     w({U, Dp, D}) - w({Dp, D, Up}) - w({D, Dp, D}) + w({Dp, D, Dp});
        check("case2 v1", r00, v1);
        check("case2 v2", r00 - r10, v2);
        check("case2 v3", r00 - r01, v3);
        check("case2 v4", r11 + r10 + r01 - r00, v4);
        Element s1c = eUp.concat(v3) + v1.concat(eD) + v2.concat(eU) + eUp.concat(v2).concat(eD) +
                      v3.concat(eU) + v3.concat(eD) + eDp.concat(v1).concat(eD) +
                      eDp.concat(v2).concat(eD) - v1 - Scalar(2) * v3;
        Element s1 = w({D, Up, U}) - w({Up, D, Up}) + w({D, Up}) - w({U, Dp});
        check("case2 s1", s1c, s1);
        Element s2c = eD.concat(s1).concat(eUp) - s1.concat(eUp) - eD.concat(s1) + s1;
        check("case2 s2", s2c, -w({U, Dp}));
        check("case2 v3 step4",
              -w({Up, D, Up}) - w({Dp, U, Up}) - w({Dp, D, Up}) + w({Up, D}) + w({U, Up}) - eUp,
              Element::zero(n));
        check("case2 v3 step5", -w({Dp, U, Up}) + w({U, Up}) - eUp, Element::zero(n));
        check("case2 v4 step6", -w({D, Dp, D}) + w({Dp, D}), Element::zero(n));
    }
    return rep;
}

/// The Hecke-Hopf algebra surjection s_i -> U_i - D_i, D_i -> D_i: every
/// defining relation maps to zero, the counit is compatible, and the
/// antipode witness survives as a nonzero element.
inline Report verify_hecke_hopf(int n) {
    if (n < 3) throw std::invalid_argument("verify_hecke_hopf: n must be >= 3");
    Report rep;
    rep.title = "Hecke-Hopf surjection, n=" + std::to_string(n);
    Element one = Element::unit(n);
    auto s = [&](int i) { return gen_u(i, n) - gen_d(i, n); };
    auto d = [&](int i) { return gen_d(i, n); };
    auto zero = [&](const std::string& name, const Element& e) {
        Element nf = normal_form(e);
        rep.add(name, nf.is_zero(), nf.is_zero() ? "" : "residue " + nf.str());
    };
    for (int i = 1; i <= n - 1; ++i) {
        std::string si = std::to_string(i);
        zero("s^2=1 i=" + si, s(i).concat(s(i)) - one);
        zero("sD+Ds=s-1 i=" + si, s(i).concat(d(i)) + d(i).concat(s(i)) - s(i) + one);
        zero("D^2=D i=" + si, d(i).concat(d(i)) - d(i));
        rep.add("counit(s_i)=1 i=" + si, counit(normal_form(s(i))) == Scalar(1));
        rep.add("counit(D_i)=0 i=" + si, counit(normal_form(d(i))).is_zero());
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            std::string ij = std::to_string(i) + "," + std::to_string(j);
            zero("distant ss " + ij, s(i).concat(s(j)) - s(j).concat(s(i)));
            zero("distant Ds " + ij, d(j).concat(s(i)) - s(i).concat(d(j)));
            zero("distant DD " + ij, d(j).concat(d(i)) - d(i).concat(d(j)));
        }
    auto adjacent_pairs = [&]() {
        std::vector<std::pair<int, int>> ps;
        for (int i = 1; i + 1 <= n - 1; ++i) {
            ps.emplace_back(i, i + 1);
            ps.emplace_back(i + 1, i);
        }
        return ps;
    };
    for (auto [i, j] : adjacent_pairs()) {
        std::string ij = std::to_string(i) + "," + std::to_string(j);
        if (i < j)
            zero("braid sss " + ij,
                 s(j).concat(s(i)).concat(s(j)) - s(i).concat(s(j)).concat(s(i)));
        zero("D s s " + ij, d(i).concat(s(j)).concat(s(i)) - s(j).concat(s(i)).concat(d(j)));
        zero("DsD " + ij, d(j).concat(s(i)).concat(d(j)) - s(i).concat(d(j)).concat(d(i)) -
                              d(i).concat(d(j)).concat(s(i)) - s(i).concat(d(j)).concat(s(i)));
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
        // antipode witness S((s_i + D_i) D_{i+1}) maps to D_{i+1} - D_i D_{i+1}
        Element img = normal_form(s(i).concat(one - d(i)).concat(d(i + 1)));
        Element expect = normal_form(d(i + 1) - d(i).concat(d(i + 1)));
        bool ok = img == expect && !img.is_zero();
        rep.add("antipode witness i=" + std::to_string(i), ok, img.str());
    }
    return rep;
}

// ----- counting -----

struct CountsRecord {
    mpz_class catalan, tilde, reduced, binom;
    bool consistent() const { return tilde == reduced && reduced == binom; }
};

inline CountsRecord counts(int n) {
    if (n < 1 || n > 8) throw std::out_of_range("counts: n must be in 1..8");
    CountsRecord rec;
    rec.catalan = catalan(n);
    rec.tilde = mpz_class(tilde_dyck(n).size());
    rec.reduced = mpz_class(reduced_words(n).size());
    rec.binom = binomial(2 * n - 1, n);
    return rec;
}

/// Multiplication table over the reduced-word basis, as CSV with one row
/// and column per basis word in enumeration order.
inline std::string multiplication_table_csv(int n) {
    const auto& basis = reduced_words(n);
    std::ostringstream out;
    out << "*";
    for (const auto& b : basis) out << "," << b.str();
    out << "\n";
    for (const auto& a : basis) {
        out << a.str();
        for (const auto& b : basis) {
            Element p = multiply(Element::single(n, a, Scalar(1)), Element::single(n, b, Scalar(1)));
            out << "," << p.str();
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace looph

#endif
