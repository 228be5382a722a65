#include "lpa/linalg.hpp"

#include <sstream>

namespace lpa {

CoeffMatrix CoeffMatrix::identity(const RingSpec& ring, std::size_t n) {
    CoeffMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Coefficient::one(ring);
    return m;
}

CoeffMatrix CoeffMatrix::operator+(const CoeffMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
    CoeffMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CoeffMatrix CoeffMatrix::operator*(const CoeffMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in *");
    CoeffMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

CoeffMatrix CoeffMatrix::transpose() const {
    CoeffMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool CoeffMatrix::operator==(const CoeffMatrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool CoeffMatrix::is_zero() const {
    for (const auto& c : a_)
        if (!c.is_zero()) return false;
    return true;
}

nlohmann::json CoeffMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < cols_; ++j) row.push_back(at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

CoeffMatrix CoeffMatrix::from_json(const RingSpec& ring, const nlohmann::json& j) {
    if (!j.is_array()) throw Error("matrix JSON must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j[0].size();
    CoeffMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw Error("ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = Coefficient::parse(ring, j[i][c].get<std::string>());
    }
    return m;
}

std::string CoeffMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

namespace {

// Forward elimination of the augmented integer matrix by the Bareiss
// fraction-free rule; all intermediate entries stay integral.
struct BareissResult {
    std::vector<std::vector<mpz_class>> m;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
};

BareissResult bareiss_forward(std::vector<std::vector<mpz_class>> m, std::size_t unknown_cols) {
    const std::size_t rows = m.size();
    BareissResult res;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknown_cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < m[i].size(); ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        res.pivots.emplace_back(r, c);
        ++r;
    }
    res.m = std::move(m);
    return res;
}

std::optional<std::vector<Coefficient>> solve_rational(const CoeffMatrix& A,
                                                       const std::vector<Coefficient>& b) {
    const RingSpec& ring = A.ring();
    const std::size_t rows = A.rows(), n = A.cols();
    // Clear denominators row by row: each row is one equation.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        auto fold = [&lcm](const mpq_class& q) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
            lcm = l;
        };
        for (std::size_t j = 0; j < n; ++j) fold(A.at(i, j).value());
        fold(b[i].value());
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class scaled = A.at(i, j).value() * lcm;
            m[i][j] = scaled.get_num();
        }
        mpq_class rhs = b[i].value() * lcm;
        m[i][n] = rhs.get_num();
    }

    auto fw = bareiss_forward(std::move(m), n);
    // Inconsistent iff a zero coefficient row has nonzero right-hand side.
    for (std::size_t i = fw.pivots.size(); i < rows; ++i)
        if (fw.m[i][n] != 0) return std::nullopt;

    std::vector<mpq_class> x(n, 0); // free unknowns stay zero
    for (std::size_t k = fw.pivots.size(); k-- > 0;) {
        auto [r, c] = fw.pivots[k];
        mpq_class acc(fw.m[r][n]);
        for (std::size_t j = c + 1; j < n; ++j)
            if (fw.m[r][j] != 0) acc -= mpq_class(fw.m[r][j]) * x[j];
        x[c] = acc / mpq_class(fw.m[r][c]);
    }
    std::vector<Coefficient> out;
    out.reserve(n);
    for (auto& q : x) out.emplace_back(ring, q);
    return out;
}

std::optional<std::vector<Coefficient>> solve_prime_field(const CoeffMatrix& A,
                                                          const std::vector<Coefficient>& b) {
    const RingSpec& ring = A.ring();
    const std::size_t rows = A.rows(), n = A.cols();
    std::vector<std::vector<Coefficient>> m(rows, std::vector<Coefficient>(n + 1, Coefficient::zero(ring)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = A.at(i, j);
        m[i][n] = b[i];
    }
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Coefficient inv = *m[r][c].inverse();
        for (std::size_t j = c; j <= n; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Coefficient f = m[i][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (!m[i][n].is_zero()) return std::nullopt;
    std::vector<Coefficient> x(n, Coefficient::zero(ring));
    for (std::size_t k = pivots.size(); k-- > 0;) {
        auto [rr, c] = pivots[k];
        Coefficient acc = m[rr][n];
        for (std::size_t j = c + 1; j < n; ++j)
            if (!m[rr][j].is_zero()) acc = acc - m[rr][j] * x[j];
        x[c] = acc; // pivot normalized to 1
    }
    return x;
}

} // namespace

std::optional<std::vector<Coefficient>> solve_linear(const CoeffMatrix& A,
                                                     const std::vector<Coefficient>& b) {
    if (b.size() != A.rows()) throw Error("solve_linear: rhs length mismatch");
    switch (A.ring().kind) {
        case RingKind::Rationals: return solve_rational(A, b);
        case RingKind::PrimeField: return solve_prime_field(A, b);
        default: throw Error("solve_linear: need a field, got " + A.ring().to_string());
    }
}

std::size_t rank(const CoeffMatrix& A) {
    if (A.ring().kind == RingKind::Rationals) {
        std::vector<std::vector<mpz_class>> m(A.rows(), std::vector<mpz_class>(A.cols()));
        for (std::size_t i = 0; i < A.rows(); ++i) {
            mpz_class lcm = 1;
            for (std::size_t j = 0; j < A.cols(); ++j) {
                mpz_class l;
                mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(),
                        A.at(i, j).value().get_den().get_mpz_t());
                lcm = l;
            }
            for (std::size_t j = 0; j < A.cols(); ++j) {
                mpq_class scaled = A.at(i, j).value() * lcm;
                m[i][j] = scaled.get_num();
            }
        }
        return bareiss_forward(std::move(m), A.cols()).pivots.size();
    }
    if (A.ring().kind == RingKind::PrimeField) {
        return rref(A).pivot_cols.size();
    }
    throw Error("rank: need a field, got " + A.ring().to_string());
}

RrefResult rref(const CoeffMatrix& A) {
    if (!A.ring().is_field()) throw Error("rref: need a field, got " + A.ring().to_string());
    RrefResult res{A, {}};
    CoeffMatrix& m = res.R;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
        Coefficient inv = *m.at(r, c).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Coefficient f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

} // namespace lpa
