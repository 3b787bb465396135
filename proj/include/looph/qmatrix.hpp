#ifndef LOOPH_QMATRIX_HPP
#define LOOPH_QMATRIX_HPP

/// Dense square matrices over the Scalar field, sized 2^n for the tensor
/// powers handled here.

#include <vector>

#include <json.hpp>

#include "linalg.hpp"
#include "scalar.hpp"

namespace looph {

class QMatrix {
  public:
    QMatrix() : dim_(0) {}
    explicit QMatrix(size_t dim) : dim_(dim), a_(dim * dim, Scalar(0)) {}

    static QMatrix identity(size_t dim) {
        QMatrix m(dim);
        for (size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    size_t dim() const { return dim_; }
    Scalar& at(size_t i, size_t j) { return a_[i * dim_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * dim_ + j]; }

    bool operator==(const QMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    QMatrix operator+(const QMatrix& o) const {
        check(o);
        QMatrix r(dim_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    QMatrix operator-(const QMatrix& o) const {
        check(o);
        QMatrix r(dim_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    QMatrix operator*(const Scalar& c) const {
        QMatrix r(dim_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }
    QMatrix operator*(const QMatrix& o) const {
        check(o);
        QMatrix r(dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t k = 0; k < dim_; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                for (size_t j = 0; j < dim_; ++j) {
                    const Scalar& y = o.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
            }
        return r;
    }

    bool commutes_with(const QMatrix& o) const { return *this * o == o * *this; }

    Scalar trace() const {
        Scalar t(0);
        for (size_t i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

    /// tr(this * o) without forming the product.
    Scalar trace_with(const QMatrix& o) const {
        check(o);
        Scalar t(0);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t k = 0; k < dim_; ++k)
                if (!at(i, k).is_zero() && !o.at(k, i).is_zero()) t += at(i, k) * o.at(k, i);
        return t;
    }

    ScalarVec flatten() const { return a_; }

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    QMatrix inverse() const {
        QMatrix m(*this), inv = identity(dim_);
        for (size_t c = 0; c < dim_; ++c) {
            size_t p = c;
            while (p < dim_ && m.at(p, c).is_zero()) ++p;
            if (p == dim_) throw std::domain_error("QMatrix: singular matrix");
            if (p != c)
                for (size_t j = 0; j < dim_; ++j) {
                    std::swap(m.at(p, j), m.at(c, j));
                    std::swap(inv.at(p, j), inv.at(c, j));
                }
            Scalar f = m.at(c, c).inverse();
            for (size_t j = 0; j < dim_; ++j) {
                m.at(c, j) *= f;
                inv.at(c, j) *= f;
            }
            for (size_t r = 0; r < dim_; ++r) {
                if (r == c || m.at(r, c).is_zero()) continue;
                Scalar g = m.at(r, c);
                for (size_t j = 0; j < dim_; ++j) {
                    m.at(r, j) -= g * m.at(c, j);
                    inv.at(r, j) -= g * inv.at(c, j);
                }
            }
        }
        return inv;
    }

    nlohmann::json to_json() const {
        nlohmann::json rows = nlohmann::json::array();
        for (size_t i = 0; i < dim_; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t j = 0; j < dim_; ++j) row.push_back(at(i, j).to_json());
            rows.push_back(row);
        }
        return rows;
    }

  private:
    void check(const QMatrix& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("QMatrix: dimension mismatch");
    }

    size_t dim_;
    std::vector<Scalar> a_;
};

inline QMatrix operator*(const Scalar& c, const QMatrix& m) { return m * c; }

inline size_t rank_of_matrices(const std::vector<QMatrix>& mats) {
    if (mats.empty()) return 0;
    RowEchelon re(mats.front().dim() * mats.front().dim());
    for (const auto& m : mats) re.insert(m.flatten());
    return re.rank();
}

}  // namespace looph

#endif
