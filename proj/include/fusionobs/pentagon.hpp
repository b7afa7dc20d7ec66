#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionobs::pentagon {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Dense square matrix over the rationals.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
    static ExactMatrix identity(std::size_t dim);
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t dim() const { return dim_; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

    ExactMatrix operator*(const ExactMatrix& other) const;
    bool operator==(const ExactMatrix& other) const = default;

    std::size_t rank() const;
    bool invertible() const { return rank() == dim_; }

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

/// Kronecker product a (x) b; the first factor indexes the slow coordinate.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// The flip v (x) w -> w (x) v on H (x) H with dim H = n.
ExactMatrix swap_operator(std::size_t n);

class PentagonShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Whether Phi, an invertible operator on H (x) H with dim H = n, satisfies
/// Phi12 Phi13 Phi23 = Phi23 Phi12 on H (x) H (x) H.
/// Throws PentagonShapeError if the dimension is not n^2 or Phi is singular.
bool check_pentagon(const ExactMatrix& phi, std::size_t n);
/// Same, with n inferred from dim = n^2.
bool check_pentagon(const ExactMatrix& phi);

/// Finite group by multiplication table with a validated identity and inverses.
class GroupTable {
public:
    explicit GroupTable(std::vector<std::vector<std::size_t>> table);

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t operator()(std::size_t a, std::size_t b) const { return table_[a][b]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    static GroupTable cyclic(std::size_t order);
    static GroupTable product(const GroupTable& a, const GroupTable& b);

private:
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
};

/// The operator (s, t) -> (s, s t) on the group algebra squared.
ExactMatrix group_unitary(const GroupTable& group);

/// Rank of the operator regrouped by tensor slot: R[(i,k),(j,l)] = A[(i,j),(k,l)].
std::size_t operator_schmidt_rank(const ExactMatrix& op, std::size_t n);

/// Whether some invertible Phi on an n-dimensional space has Phi^2 (x) I equal to
/// the flip on H (x) H; decided by operator-Schmidt rank 1 of the flip.
bool ne_case_solvable(std::size_t n);

} // namespace fusionobs::pentagon
