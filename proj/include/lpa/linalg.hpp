#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "lpa/coeff.hpp"

namespace lpa {

// Dense matrix over an exact coefficient ring. Row-major.
class CoeffMatrix {
public:
    CoeffMatrix() = default;
    CoeffMatrix(const RingSpec& ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Coefficient::zero(ring)) {}

    static CoeffMatrix identity(const RingSpec& ring, std::size_t n);

    const RingSpec& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Coefficient& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Coefficient& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    CoeffMatrix operator+(const CoeffMatrix& o) const;
    CoeffMatrix operator*(const CoeffMatrix& o) const;
    CoeffMatrix transpose() const;
    bool operator==(const CoeffMatrix& o) const;
    bool is_zero() const;

    std::string to_string() const;
    // Row-major arrays of coefficient strings.
    nlohmann::json to_json() const;
    static CoeffMatrix from_json(const RingSpec& ring, const nlohmann::json& j);

private:
    RingSpec ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Coefficient> a_;
};

// Any solution of A x = b, or nullopt when inconsistent. Rationals go
// through fraction-free Bareiss elimination on the denominator-cleared
// system; prime fields use modular elimination. Other rings are rejected.
std::optional<std::vector<Coefficient>> solve_linear(const CoeffMatrix& A,
                                                     const std::vector<Coefficient>& b);

// Rank over a field (Q or GF(p)).
std::size_t rank(const CoeffMatrix& A);

// Reduced row echelon form with the pivot column list (field only).
struct RrefResult {
    CoeffMatrix R;
    std::vector<std::size_t> pivot_cols;
};
RrefResult rref(const CoeffMatrix& A);

} // namespace lpa
