#ifndef LOOPH_REP_HPP
#define LOOPH_REP_HPP

/// The tensor-space representation over Q(q): the action of the negative
/// half of quantum gl(1|1) on V^{tensor n}, the deformed and symmetric
/// braiding matrices, the representation of the loop Hecke algebra they
/// generate, commutants, and the Wedderburn / Peirce / Cartan structure
/// data of the image algebra.
///
/// Basis bookkeeping: V has basis v0 (even) and v1 (odd); a basis vector of
/// V^{tensor n} is a bitstring b with strand 1 in the highest bit, 1 = v1.
/// Its weight is (mu1, mu2) = (n - |b|, |b|).  The torus acts by
/// K1 = q^{mu1}, K2 = q^{mu2}, K = K1 K2 = q^n; E and F act through the
/// iterated coproducts Delta(E) = E ox K + 1 ox E and
/// Delta(F) = F ox 1 + K^{-1} ox F with the super sign over odd factors.

#include <vector>

#include "algebra.hpp"
#include "qmatrix.hpp"

namespace looph {

enum class UqGen { K1, K2, K, E, F };

inline QMatrix uq_action(UqGen gen, int n) {
    if (n < 1) throw std::invalid_argument("uq_action: n must be >= 1");
    size_t N = size_t(1) << n;
    QMatrix m(N);
    Scalar q = Scalar::variable();
    auto ones = [&](size_t b) { return __builtin_popcountll(b); };
    switch (gen) {
        case UqGen::K1:
            for (size_t b = 0; b < N; ++b) m.at(b, b) = q.pow(n - ones(b));
            break;
        case UqGen::K2:
            for (size_t b = 0; b < N; ++b) m.at(b, b) = q.pow(ones(b));
            break;
        case UqGen::K:
            for (size_t b = 0; b < N; ++b) m.at(b, b) = q.pow(n);
            break;
        case UqGen::F:
            for (size_t b = 0; b < N; ++b)
                for (int i = 1; i <= n; ++i) {
                    size_t bit = size_t(1) << (n - i);
                    if (b & bit) continue;
                    int sign_ones = ones(b >> (n - i + 1));  // odd strands before i
                    Scalar c = q.pow(-(i - 1));
                    m.at(b | bit, b) += (sign_ones % 2) ? -c : c;
                }
            break;
        case UqGen::E:
            for (size_t b = 0; b < N; ++b)
                for (int i = 1; i <= n; ++i) {
                    size_t bit = size_t(1) << (n - i);
                    if (!(b & bit)) continue;
                    int sign_ones = ones(b >> (n - i + 1));
                    Scalar c = q.pow(n - i);
                    m.at(b & ~bit, b) += (sign_ones % 2) ? -c : c;
                }
            break;
    }
    return m;
}

// ----- the two-strand braiding blocks, both construction routes -----

namespace detail {
/// Explicit 4x4 block of q^{-1} R-check on the plain bitstring basis
/// (00, 01, 10, 11).  In the scaled basis {v0v0, v1v0, q^{-1}v0v1,
/// q^{-1}v1v1} this is the Burau-form matrix; the diagonal scaling is
/// folded in here.
inline QMatrix rcheck_block_explicit() {
    Scalar q = Scalar::variable();
    QMatrix b(4);
    b.at(0, 0) = Scalar(1);
    b.at(1, 2) = q.pow(-1);
    b.at(2, 1) = q.pow(-1);
    b.at(2, 2) = Scalar(1) - q.pow(-2);
    b.at(3, 3) = -q.pow(-2);
    return b;
}

inline QMatrix scheck_block_explicit() {
    Scalar q = Scalar::variable();
    QMatrix b(4);
    b.at(0, 0) = Scalar(1);
    b.at(1, 2) = q.pow(-1);
    b.at(2, 1) = q;
    b.at(3, 3) = Scalar(-1);
    return b;
}

/// The same blocks built from the definitions: the quasi-R-matrix
/// Theta = 1 ox 1 - (q - q^{-1}) E ox F, the weight pairing factor f, the
/// S twist q^{mu1 nu2 - mu2 nu1}, and the super flip tau.
inline QMatrix super_flip() {
    QMatrix t(4);
    t.at(0, 0) = Scalar(1);
    t.at(2, 1) = Scalar(1);
    t.at(1, 2) = Scalar(1);
    t.at(3, 3) = Scalar(-1);
    return t;
}

inline QMatrix rcheck_block_theta() {
    Scalar q = Scalar::variable();
    QMatrix theta = QMatrix::identity(4);
    // E ox F hits only v1 ox v0; the sign (-1)^{|m|} of the odd first factor
    // turns -(q - q^{-1}) into +(q - q^{-1}) on e01
    theta.at(1, 2) = q - q.pow(-1);
    QMatrix f(4);
    auto pairing = [](int m1, int m2, int n1, int n2) { return m1 * n1 - m2 * n2; };
    int w[2][2] = {{1, 0}, {0, 1}};  // weight of v0, v1
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            f.at(2 * a + b, 2 * a + b) =
                q.pow(pairing(w[a][0], w[a][1], w[b][0], w[b][1]));
    return q.pow(-1) * (super_flip() * (f * theta));
}

inline QMatrix scheck_block_twist() {
    Scalar q = Scalar::variable();
    QMatrix s(4);
    int w[2][2] = {{1, 0}, {0, 1}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            s.at(2 * a + b, 2 * a + b) =
                q.pow(w[a][0] * w[b][1] - w[a][1] * w[b][0]);  // q^{mu1 nu2 - mu2 nu1}
    return super_flip() * s;
}

inline QMatrix embed_pair_block(const QMatrix& block, int i, int n) {
    if (i < 1 || i > n - 1) throw std::out_of_range("strand index out of range");
    size_t suffix = size_t(1) << (n - i - 1);
    size_t prefix = size_t(1) << (i - 1);
    size_t N = size_t(1) << n;
    QMatrix m(N);
    for (size_t p = 0; p < prefix; ++p)
        for (size_t r = 0; r < 4; ++r)
            for (size_t c = 0; c < 4; ++c) {
                if (block.at(r, c).is_zero()) continue;
                for (size_t s = 0; s < suffix; ++s)
                    m.at(p * 4 * suffix + r * suffix + s, p * 4 * suffix + c * suffix + s) =
                        block.at(r, c);
            }
    return m;
}
}  // namespace detail

/// Matrix of q^{-1} R-check on strands (i, i+1): the image of sigma_i.
inline QMatrix rcheck(int i, int n) {
    return detail::embed_pair_block(detail::rcheck_block_explicit(), i, n);
}

/// Matrix of S-check on strands (i, i+1): the image of rho_i, an involution.
inline QMatrix scheck(int i, int n) {
    return detail::embed_pair_block(detail::scheck_block_explicit(), i, n);
}

inline QMatrix psi_sigma(int i, int n) { return rcheck(i, n); }
inline QMatrix psi_rho(int i, int n) { return scheck(i, n); }

/// Images of the idempotent generators, via the presentation equivalence
/// at t = q^{-2}: U = (sigma - t rho)/(1 - t), D = (sigma - rho)/(1 - t).
inline QMatrix psi_u(int i, int n) {
    Scalar t = Scalar::variable().pow(-2);
    return (psi_sigma(i, n) - t * psi_rho(i, n)) * (Scalar(1) - t).inverse();
}
inline QMatrix psi_d(int i, int n) {
    Scalar t = Scalar::variable().pow(-2);
    return (psi_sigma(i, n) - psi_rho(i, n)) * (Scalar(1) - t).inverse();
}

inline QMatrix psi(const SigmaRhoWord& w) {
    QMatrix acc = QMatrix::identity(size_t(1) << w.n);
    for (const auto& tok : w.tokens)
        acc = acc * (tok.kind == 's' ? psi_sigma(tok.index, w.n) : psi_rho(tok.index, w.n));
    return acc;
}

inline QMatrix psi(const Monomial& m, int n) {
    QMatrix acc = QMatrix::identity(size_t(1) << n);
    for (const auto& l : m.letters())
        acc = acc * (l.kind == LetterKind::U ? psi_u(l.index, n) : psi_d(l.index, n));
    return acc;
}

/// Multiplicative-linear extension; symbolic coefficients are read in the
/// t variable and land in Q(q) through t -> q^{-2}.
inline QMatrix psi(const Element& x) {
    Scalar t_image = Scalar::variable().pow(-2);
    QMatrix acc(size_t(1) << x.n());
    for (const auto& [m, c] : x.terms()) acc = acc + c.substitute(t_image) * psi(m, x.n());
    return acc;
}

// ----- commutants -----

struct Commutant {
    size_t dim;
    std::vector<QMatrix> basis;
};

/// Dimension and basis of {X : XA = AX for all A in gens}, by exact kernel
/// computation.  Diagonal generators cut the unknowns down to the pairs
/// with equal diagonal entries first (for the torus generators this forces
/// weight-block-diagonal X), the rest contribute linear conditions.
inline Commutant commutant(const std::vector<QMatrix>& gens) {
    if (gens.empty()) throw std::invalid_argument("commutant: need at least one generator");
    size_t N = gens.front().dim();
    std::vector<bool> is_diag(gens.size(), true);
    for (size_t g = 0; g < gens.size(); ++g)
        for (size_t r = 0; r < N && is_diag[g]; ++r)
            for (size_t c = 0; c < N && is_diag[g]; ++c)
                if (r != c && !gens[g].at(r, c).is_zero()) is_diag[g] = false;
    std::vector<std::pair<size_t, size_t>> unknowns;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            bool keep = true;
            for (size_t g = 0; g < gens.size(); ++g)
                if (is_diag[g] && gens[g].at(i, i) != gens[g].at(j, j)) {
                    keep = false;
                    break;
                }
            if (keep) unknowns.emplace_back(i, j);
        }
    std::map<std::pair<size_t, size_t>, size_t> uidx;
    for (size_t u = 0; u < unknowns.size(); ++u) uidx[unknowns[u]] = u;

    std::vector<ScalarVec> rows;
    for (const auto& g : gens) {
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j) {
                ScalarVec row(unknowns.size(), Scalar(0));
                bool nonzero = false;
                // (XG - GX)_{ij} = sum_k X_{ik} G_{kj} - G_{ik} X_{kj}
                for (size_t k = 0; k < N; ++k) {
                    if (!g.at(k, j).is_zero())
                        if (auto it = uidx.find({i, k}); it != uidx.end()) {
                            row[it->second] += g.at(k, j);
                            nonzero = true;
                        }
                    if (!g.at(i, k).is_zero())
                        if (auto it = uidx.find({k, j}); it != uidx.end()) {
                            row[it->second] -= g.at(i, k);
                            nonzero = true;
                        }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    auto kernel = kernel_basis(rows, unknowns.size());
    Commutant out{kernel.size(), {}};
    for (const auto& v : kernel) {
        QMatrix m(N);
        for (size_t u = 0; u < unknowns.size(); ++u) m.at(unknowns[u].first, unknowns[u].second) = v[u];
        out.basis.push_back(std::move(m));
    }
    return out;
}

inline std::vector<QMatrix> torus_f_generators(int n) {
    return {uq_action(UqGen::K1, n), uq_action(UqGen::K2, n), uq_action(UqGen::F, n)};
}

inline size_t commutant_dim(const std::vector<QMatrix>& gens) { return commutant(gens).dim; }

// ----- Schur-Weyl and structure reports -----

inline std::vector<QMatrix> psi_basis_matrices(int n) {
    std::vector<QMatrix> mats;
    for (const auto& w : reduced_words(n)) mats.push_back(psi(w, n));
    return mats;
}

inline Report schur_weyl_report(int n) {
    if (n < 2) throw std::invalid_argument("schur_weyl_report: n must be >= 2");
    Report rep;
    rep.title = "Schur-Weyl duality, n=" + std::to_string(n);
    size_t N = size_t(1) << n;
    QMatrix id = QMatrix::identity(N);
    Scalar t = Scalar::variable().pow(-2);

    auto zero = [&](const std::string& name, const QMatrix& m) { rep.add(name, m.is_zero()); };
    for (int i = 1; i <= n - 1; ++i) {
        std::string si = std::to_string(i);
        QMatrix s = psi_sigma(i, n), r = psi_rho(i, n);
        zero("(sigma-1)(sigma+t) i=" + si, (s - id) * (s + t * id));
        zero("rho^2-1 i=" + si, r * r - id);
        zero("(rho-1)(sigma+t) i=" + si, (r - id) * (s + t * id));
        zero("(sigma-1)(rho+1) i=" + si, (s - id) * (r + id));
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
        std::string si = std::to_string(i);
        QMatrix s1 = psi_sigma(i, n), s2 = psi_sigma(i + 1, n);
        QMatrix r1 = psi_rho(i, n), r2 = psi_rho(i + 1, n);
        zero("sigma braid i=" + si, s1 * s2 * s1 - s2 * s1 * s2);
        zero("rho braid i=" + si, r1 * r2 * r1 - r2 * r1 * r2);
        zero("mixed rho.sigma.sigma i=" + si, r1 * s2 * s1 - s2 * s1 * r2);
        zero("mixed sigma.rho.rho i=" + si, s1 * r2 * r1 - r2 * r1 * s2);
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            std::string ij = std::to_string(i) + "," + std::to_string(j);
            zero("distant sigma " + ij,
                 psi_sigma(i, n) * psi_sigma(j, n) - psi_sigma(j, n) * psi_sigma(i, n));
            zero("distant rho " + ij,
                 psi_rho(i, n) * psi_rho(j, n) - psi_rho(j, n) * psi_rho(i, n));
            zero("distant sigma.rho " + ij,
                 psi_sigma(i, n) * psi_rho(j, n) - psi_rho(j, n) * psi_sigma(i, n));
        }

    auto gens = torus_f_generators(n);
    for (int i = 1; i <= n - 1; ++i)
        for (size_t g = 0; g < gens.size(); ++g) {
            std::string name = "equivariance gen " + std::to_string(g) + " strand " +
                               std::to_string(i);
            rep.add(name, gens[g].commutes_with(psi_sigma(i, n)) &&
                              gens[g].commutes_with(psi_rho(i, n)));
        }

    mpz_class expected = binomial(2 * n - 1, n);
    auto com = commutant(gens);
    rep.add("commutant dim = C(2n-1,n)", mpz_class(com.dim) == expected,
            std::to_string(com.dim));

    auto mats = psi_basis_matrices(n);
    for (const auto& m : mats)
        if (!(gens[0].commutes_with(m) && gens[1].commutes_with(m) && gens[2].commutes_with(m))) {
            rep.add("psi image inside commutant", false);
            break;
        }
    size_t rank = rank_of_matrices(mats);
    rep.add("rank psi(reduced words) = C(2n-1,n)", mpz_class(rank) == expected,
            std::to_string(rank));
    rep.add("span equality with commutant", rank == com.dim);

    if (n == 2) {
        // a commutant element need not commute with E
        QMatrix e = uq_action(UqGen::E, n);
        bool witness = false;
        for (const auto& x : com.basis)
            if (!(x * e == e * x)) witness = true;
        rep.add("E-asymmetry witness", witness);
    }
    return rep;
}

struct StructureRecord {
    size_t dim = 0, rad_dim = 0, ss_dim = 0;
    bool rad_square_zero = false;
    std::vector<std::vector<size_t>> peirce;
    std::vector<std::vector<long>> cartan;  // -1 marks a non-integral entry
    std::vector<size_t> hwv_counts;
    Report report;

    nlohmann::json to_json() const {
        return {{"dim", dim},
                {"rad_dim", rad_dim},
                {"ss_dim", ss_dim},
                {"rad_square_zero", rad_square_zero},
                {"peirce", peirce},
                {"cartan", cartan},
                {"hwv_counts", hwv_counts},
                {"checks", report.to_json()}};
    }

    template <class T>
    static std::string matrix_csv(const std::vector<std::vector<T>>& m) {
        std::string out;
        for (const auto& row : m) {
            for (size_t j = 0; j < row.size(); ++j)
                out += (j ? "," : "") + std::to_string(row[j]);
            out += "\n";
        }
        return out;
    }
};

/// Wedderburn-Mal'cev data of the image algebra A = psi(loop Hecke):
/// radical from the trace form of the faithful representation, idempotents
/// e_l from the highest-weight decomposition of V^{tensor n}, Peirce block
/// dimensions and the Cartan matrix.
inline StructureRecord structure_report(int n, bool allow_n5 = false) {
    if (n < 2 || n > (allow_n5 ? 5 : 4))
        throw std::out_of_range("structure_report: n out of range");
    StructureRecord rec;
    rec.report.title = "structure, n=" + std::to_string(n);
    size_t N = size_t(1) << n;
    auto mats = psi_basis_matrices(n);
    size_t d = mats.size();
    rec.dim = d;

    // radical of the trace form tr(XY) on A
    std::vector<ScalarVec> gram(d, ScalarVec(d, Scalar(0)));
    for (size_t a = 0; a < d; ++a)
        for (size_t b = a; b < d; ++b) {
            Scalar t = mats[a].trace_with(mats[b]);
            gram[a][b] = t;
            gram[b][a] = t;
        }
    auto rad_coeffs = kernel_basis(gram, d);
    rec.rad_dim = rad_coeffs.size();
    rec.ss_dim = d - rec.rad_dim;

    mpz_class rad_expect = 0, ss_expect = 0;
    for (int l = 0; l <= n - 1; ++l) {
        rad_expect += binomial(n - 1, l) * binomial(n - 1, l - 1);
        ss_expect += binomial(n - 1, l) * binomial(n - 1, l);
    }
    rec.report.add("dim A = C(2n-1,n)", mpz_class(d) == binomial(2 * n - 1, n));
    rec.report.add("dim rad", mpz_class(rec.rad_dim) == rad_expect, std::to_string(rec.rad_dim));
    rec.report.add("dim ss", mpz_class(rec.ss_dim) == ss_expect, std::to_string(rec.ss_dim));

    std::vector<QMatrix> rad;
    for (const auto& v : rad_coeffs) {
        QMatrix m(N);
        for (size_t a = 0; a < d; ++a)
            if (!v[a].is_zero()) m = m + v[a] * mats[a];
        rad.push_back(std::move(m));
    }
    bool sq = true;
    for (const auto& x : rad)
        for (const auto& y : rad)
            if (!(x * y).is_zero()) sq = false;
    rec.rad_square_zero = sq;
    rec.report.add("rad^2 = 0", sq);

    // highest-weight vectors: ker E within each weight space
    QMatrix E = uq_action(UqGen::E, n), F = uq_action(UqGen::F, n);
    std::vector<std::vector<size_t>> wspace(n + 1);
    for (size_t b = 0; b < N; ++b) wspace[__builtin_popcountll(b)].push_back(b);
    std::vector<std::vector<ScalarVec>> hwv(n + 1);
    for (int l = 0; l <= n; ++l) {
        const auto& cols = wspace[l];
        const auto& rows_idx = l > 0 ? wspace[l - 1] : std::vector<size_t>{};
        std::vector<ScalarVec> sys;
        for (size_t r : rows_idx) {
            ScalarVec row(cols.size(), Scalar(0));
            for (size_t c = 0; c < cols.size(); ++c) row[c] = E.at(r, cols[c]);
            sys.push_back(std::move(row));
        }
        for (const auto& k : kernel_basis(sys, cols.size())) {
            ScalarVec full(N, Scalar(0));
            for (size_t c = 0; c < cols.size(); ++c) full[cols[c]] = k[c];
            hwv[l].push_back(std::move(full));
        }
        if (l <= n - 1) rec.hwv_counts.push_back(hwv[l].size());
        bool count_ok = (l <= n - 1) ? mpz_class(hwv[l].size()) == binomial(n - 1, l)
                                     : hwv[l].empty();
        rec.report.add("hwv count l=" + std::to_string(l), count_ok,
                       std::to_string(hwv[l].size()));
    }

    // assemble the (w, Fw) basis and the block projectors e_l
    QMatrix T(N);
    std::vector<int> block_of_col(N, -1);
    size_t col = 0;
    for (int l = 0; l <= n - 1; ++l)
        for (const auto& w : hwv[l]) {
            ScalarVec fw(N, Scalar(0));
            bool fw_zero = true;
            for (size_t r = 0; r < N; ++r) {
                Scalar acc(0);
                for (size_t c = 0; c < N; ++c)
                    if (!F.at(r, c).is_zero() && !w[c].is_zero()) acc += F.at(r, c) * w[c];
                fw[r] = acc;
                if (!acc.is_zero()) fw_zero = false;
            }
            if (fw_zero) throw std::logic_error("structure_report: F kills a highest-weight vector");
            for (size_t r = 0; r < N; ++r) T.at(r, col) = w[r];
            block_of_col[col++] = l;
            for (size_t r = 0; r < N; ++r) T.at(r, col) = fw[r];
            block_of_col[col++] = l;
        }
    if (col != N) throw std::logic_error("structure_report: basis from hwvs is incomplete");
    QMatrix Tinv = T.inverse();
    std::vector<QMatrix> e;
    for (int l = 0; l <= n - 1; ++l) {
        QMatrix p(N);
        for (size_t c = 0; c < N; ++c)
            if (block_of_col[c] == l) p.at(c, c) = Scalar(1);
        e.push_back(T * p * Tinv);
    }
    bool idem_ok = true;
    QMatrix esum(N);
    for (size_t a = 0; a < e.size(); ++a) {
        esum = esum + e[a];
        for (size_t b = 0; b < e.size(); ++b) {
            QMatrix prod = e[a] * e[b];
            if (a == b ? prod != e[a] : !prod.is_zero()) idem_ok = false;
        }
    }
    rec.report.add("orthogonal idempotents summing to 1",
                   idem_ok && esum == QMatrix::identity(N));

    // Peirce block dimensions M_{ij} = dim e_j A e_i and the Cartan matrix
    rec.peirce.assign(n, std::vector<size_t>(n, 0));
    size_t total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<QMatrix> corner;
            for (const auto& m : mats) corner.push_back(e[j] * m * e[i]);
            rec.peirce[i][j] = rank_of_matrices(corner);
            total += rec.peirce[i][j];
        }
    rec.report.add("Peirce blocks fill the algebra", total == d, std::to_string(total));

    bool peirce_ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_class expect = 0;
            if (i == j) expect = binomial(n - 1, i) * binomial(n - 1, i);
            else if (j == i - 1) expect = binomial(n - 1, i) * binomial(n - 1, i - 1);
            if (mpz_class(rec.peirce[i][j]) != expect) peirce_ok = false;
        }
    rec.report.add("Peirce matrix = D*(bidiagonal ones)*D", peirce_ok);

    rec.cartan.assign(n, std::vector<long>(n, 0));
    bool cartan_ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_class den = binomial(n - 1, i) * binomial(n - 1, j);
            mpz_class num = rec.peirce[i][j];
            if (num % den != 0) {
                rec.cartan[i][j] = -1;
                cartan_ok = false;
                continue;
            }
            rec.cartan[i][j] = mpz_class(num / den).get_si();
            bool expected_entry = (i == j) ? rec.cartan[i][j] == 1
                                           : (j == i - 1 ? rec.cartan[i][j] == 1
                                                         : rec.cartan[i][j] == 0);
            if (!expected_entry) cartan_ok = false;
        }
    rec.report.add("Cartan matrix = identity + subdiagonal ones", cartan_ok);
    return rec;
}

}  // namespace looph

#endif
