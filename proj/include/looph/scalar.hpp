#ifndef LOOPH_SCALAR_HPP
#define LOOPH_SCALAR_HPP

/// Exact arithmetic in Q(x) for a single indeterminate: the coefficient
/// field for everything else in this library.  The indeterminate is written
/// t or q depending on context, but there is only ever one of them at a
/// time; changing variables goes through Scalar::substitute.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace looph {

using BigInt = mpz_class;

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// Normalized: no trailing zero coefficients, so zero is the empty vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly zero() { return Poly{}; }
    static Poly one() { return constant(1); }
    static Poly variable() { return Poly{{BigInt(0), BigInt(1)}}; }
    static Poly constant(BigInt v) {
        Poly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const { return c_.back(); }
    BigInt coeff(size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    /// Integer content, with the sign of the leading coefficient.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (!is_zero() && leading() < 0) g = -g;
        return g;
    }

    /// Exact scalar division; every coefficient must be divisible.
    Poly divided_by(const BigInt& d) const {
        if (d == 0) throw std::domain_error("Poly: division by zero content");
        std::vector<BigInt> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            BigInt q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c_[i].get_mpz_t(), d.get_mpz_t());
            if (rem != 0) throw std::logic_error("Poly: inexact content division");
            r[i] = q;
        }
        return Poly(std::move(r));
    }

    /// Exact polynomial division; throws if the remainder is nonzero.
    Poly divided_by(const Poly& d) const {
        auto [q, r] = divmod_exactish(*this, d);
        if (!r.is_zero()) throw std::logic_error("Poly: inexact polynomial division");
        return q;
    }

    /// Pseudo-remainder of *this by d: lc(d)^(deg diff + 1) * this mod d.
    static Poly pseudo_rem(Poly a, const Poly& d) {
        if (d.is_zero()) throw std::domain_error("Poly: pseudo_rem by zero");
        const BigInt& lc = d.leading();
        int dd = d.degree();
        while (!a.is_zero() && a.degree() >= dd) {
            int shift = a.degree() - dd;
            BigInt la = a.leading();
            std::vector<BigInt> r(a.c_.size());
            for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * lc;
            for (int i = 0; i <= dd; ++i) r[i + shift] -= la * d.c_[i];
            a = Poly(std::move(r));  // top coefficient cancels, degree drops
        }
        return a;
    }

    /// Evaluate at a value of any ring type supporting * and + with BigInt.
    template <class T>
    T eval(const T& x) const {
        T acc{};  // zero
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    std::string str(const std::string& var) const;

  private:
    static std::pair<Poly, Poly> divmod_exactish(Poly a, const Poly& d) {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly q;
        q.c_.assign(a.c_.size(), BigInt(0));
        while (!a.is_zero() && a.degree() >= d.degree()) {
            BigInt qc, rem;
            mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), a.leading().get_mpz_t(),
                        d.leading().get_mpz_t());
            if (rem != 0) return {Poly{}, a};  // not exactly divisible
            int shift = a.degree() - d.degree();
            q.c_[shift] = qc;
            std::vector<BigInt> r = a.c_;
            for (int i = 0; i <= d.degree(); ++i) r[i + shift] -= qc * d.c_[i];
            r.pop_back();
            a = Poly(std::move(r));
        }
        q.trim();
        return {q, a};
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// GCD in Z[x] via the primitive PRS, including the integer content.
/// The result has positive leading coefficient.
inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly::zero();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    BigInt ca = a.content(), cb = b.content();
    BigInt cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Poly r0 = a.divided_by(ca), r1 = b.divided_by(cb);
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Poly r2 = Poly::pseudo_rem(r0, r1);
        if (!r2.is_zero()) r2 = r2.divided_by(r2.content());
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.leading() < 0) r0 = -r0;
    return Poly::constant(cg) * r0;
}

/// An element of Q(x), stored as num/den with integer-coefficient
/// polynomials in canonical form: gcd(num, den) = 1 and den has positive
/// leading coefficient, so equality is structural.  Zero is 0/1.
class Scalar {
  public:
    Scalar() : num_(Poly::zero()), den_(Poly::one()) {}
    Scalar(long v) : num_(Poly::constant(BigInt(v))), den_(Poly::one()) {}
    Scalar(int v) : Scalar(static_cast<long>(v)) {}
    Scalar(BigInt v) : num_(Poly::constant(std::move(v))), den_(Poly::one()) {}
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static Scalar variable() { return Scalar(Poly::variable(), Poly::one()); }
    static Scalar fraction(long num, long den) {
        return Scalar(Poly::constant(BigInt(num)), Poly::constant(BigInt(den)));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly::one() && den_ == Poly::one(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    /// True when the value lies in Z (denominator 1).
    bool is_integer() const { return den_ == Poly::one() && num_.degree() <= 0; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const {
        Scalar r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Scalar operator+(const Scalar& o) const {
        return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }
    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        return Scalar(num_ * o.den_, den_ * o.num_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const { return Scalar(1) / *this; }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc(1), base(*this);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Replace the indeterminate by `image` (also covers numeric
    /// evaluation, with a constant image).  Throws if the denominator
    /// vanishes under the substitution.
    Scalar substitute(const Scalar& image) const {
        Scalar n = num_.eval(image);
        Scalar d = den_.eval(image);
        if (d.is_zero()) throw std::domain_error("Scalar: substitution makes denominator vanish");
        return n / d;
    }

    std::string str(const std::string& var = "t") const;

    nlohmann::json to_json() const;
    static Scalar from_json(const nlohmann::json& j);

  private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = gcd(num_, den_);
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Poly num_, den_;
};

inline Scalar operator*(long v, const Scalar& s) { return Scalar(v) * s; }
inline Scalar operator-(long v, const Scalar& s) { return Scalar(v) - s; }
inline Scalar operator+(long v, const Scalar& s) { return Scalar(v) + s; }

// ----- printing -----

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& cf = c_[i];
        if (cf == 0) continue;
        BigInt a = cf < 0 ? BigInt(-cf) : cf;
        if (out.empty()) {
            if (cf < 0) out += "-";
        } else {
            out += cf < 0 ? " - " : " + ";
        }
        bool show_coeff = (a != 1) || i == 0;
        if (show_coeff) out += a.get_str();
        if (i > 0) {
            if (show_coeff) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string Scalar::str(const std::string& var) const {
    if (den_ == Poly::one()) {
        if (num_.degree() <= 0) return num_.str(var);
        return num_.str(var);
    }
    std::string n = num_.str(var), d = den_.str(var);
    if (num_.degree() > 0 || num_.coeff(0) < 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

// ----- JSON: {"num": [c0, c1, ...], "den": [d0, ...]}, ascending degree -----

namespace detail {
inline nlohmann::json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return nlohmann::json(v.get_si());
    return nlohmann::json(v.get_str());
}
inline BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long>());
}
inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(bigint_to_json(c));
    return arr;
}
inline Poly poly_from_json(const nlohmann::json& j) {
    std::vector<BigInt> c;
    for (const auto& e : j) c.push_back(bigint_from_json(e));
    return Poly(std::move(c));
}
}  // namespace detail

inline nlohmann::json Scalar::to_json() const {
    return {{"num", detail::poly_to_json(num_)}, {"den", detail::poly_to_json(den_)}};
}

inline Scalar Scalar::from_json(const nlohmann::json& j) {
    return Scalar(detail::poly_from_json(j.at("num")), detail::poly_from_json(j.at("den")));
}

}  // namespace looph

#endif
