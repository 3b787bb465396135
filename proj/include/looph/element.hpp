#ifndef LOOPH_ELEMENT_HPP
#define LOOPH_ELEMENT_HPP

/// Finite linear combinations of Monomials with Scalar coefficients, for a
/// fixed strand count n.  This layer is plain linear algebra of term maps;
/// putting products into normal form is the rewrite module's job.

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "scalar.hpp"
#include "word.hpp"

namespace looph {

class Element {
  public:
    using Terms = std::map<Monomial, Scalar>;

    explicit Element(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Element: n must be >= 1");
    }

    static Element zero(int n) { return Element(n); }

    static Element unit(int n) { return single(n, Monomial{}, Scalar(1)); }

    static Element single(int n, const Monomial& m, const Scalar& c) {
        Element e(n);
        e.add_term(m, c);
        return e;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const Element& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element operator-() const {
        Element r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Element operator+(const Element& o) const {
        check_same_n(o);
        Element r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Element operator-(const Element& o) const { return *this + (-o); }

    Element operator*(const Scalar& c) const {
        Element r(n_);
        if (c.is_zero()) return r;
        for (const auto& [m, cf] : terms_) r.terms_.emplace(m, cf * c);
        return r;
    }

    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    /// Bilinear concatenation product, canonicalized but not rewritten.
    Element concat(const Element& o) const {
        check_same_n(o);
        Element r(n_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Word w = ma.letters();
                w.insert(w.end(), mb.letters().begin(), mb.letters().end());
                r.add_term(Monomial::canonical(w), ca * cb);
            }
        return r;
    }

    /// Apply Scalar::substitute to every coefficient.
    Element substitute(const Scalar& image) const {
        Element r(n_);
        for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(image));
        return r;
    }

    std::string str(const std::string& var = "t") const;
    nlohmann::json to_json() const;
    static Element from_json(const nlohmann::json& j);

  private:
    void check_same_n(const Element& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Element: mismatched strand counts");
    }

    int n_;
    Terms terms_;
};

inline Element operator*(const Scalar& c, const Element& e) { return e * c; }

/// Display order: longer words first, then descending letter order; so the
/// relation UD reads "U1 + D1 - 1" as in the defining presentation.
inline std::string Element::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Scalar>*> ord;
    for (const auto& t : terms_) ord.push_back(&t);
    std::sort(ord.begin(), ord.end(), [](auto* a, auto* b) {
        if (a->first.size() != b->first.size()) return a->first.size() > b->first.size();
        return a->first > b->first;
    });
    std::string out;
    for (auto* t : ord) {
        const auto& [m, c] = *t;
        Scalar a = c;
        bool neg = false;
        // pull out a leading sign for constant coefficients
        if (a.num().degree() <= 0 && !a.is_zero() && a.num().coeff(0) < 0) {
            neg = true;
            a = -a;
        }
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string cs = a.str(var);
        if (m.empty()) {
            out += cs;
        } else if (a.is_one()) {
            out += m.str();
        } else {
            if (!a.is_integer() && !a.is_constant()) cs = "(" + cs + ")";
            out += cs + "*" + m.str();
        }
    }
    return out;
}

inline nlohmann::json Element::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_)
        terms.push_back({{"word", word_to_json(m.letters())}, {"coeff", c.to_json()}});
    return {{"n", n_}, {"terms", terms}};
}

inline Element Element::from_json(const nlohmann::json& j) {
    Element e(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        e.add_term(canonicalize(e.n(), word_from_json(t.at("word"))),
                   Scalar::from_json(t.at("coeff")));
    return e;
}

}  // namespace looph

#endif
