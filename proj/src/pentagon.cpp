#include "fusionobs/pentagon.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace fusionobs::pentagon {

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
        const boost::multiprecision::cpp_int num(text.substr(0, slash));
        const boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: \"" + text + "\"");
    }
}

std::string format_rational(const Rational& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    return num.str() + "/" + den.str();
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) throw PentagonShapeError("matrix is not square");
        for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (other.dim_ != dim_) throw PentagonShapeError("matrix product: dimension mismatch");
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const auto& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (other(k, j) != 0) out(i, j) += a * other(k, j);
        }
    return out;
}

namespace {

std::size_t rank_of(std::vector<std::vector<Rational>> rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                if (rows[rank][k] != 0) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Sparse rows for the n^3-dimensional operators of the pentagon equation.
class SparseOperator {
public:
    explicit SparseOperator(std::size_t dim) : rows_(dim) {}

    static SparseOperator from_dense(const ExactMatrix& m) {
        SparseOperator s(m.dim());
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c)
                if (m(r, c) != 0) s.rows_[r].emplace(c, m(r, c));
        return s;
    }

    static SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
        const std::size_t db = b.rows_.size();
        SparseOperator out(a.rows_.size() * db);
        for (std::size_t ra = 0; ra < a.rows_.size(); ++ra)
            for (const auto& [ca, va] : a.rows_[ra])
                for (std::size_t rb = 0; rb < db; ++rb)
                    for (const auto& [cb, vb] : b.rows_[rb]) out.rows_[ra * db + rb].emplace(ca * db + cb, va * vb);
        return out;
    }

    SparseOperator operator*(const SparseOperator& other) const {
        SparseOperator out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto& acc = out.rows_[r];
            for (const auto& [k, a] : rows_[r])
                for (const auto& [c, b] : other.rows_[k]) acc[c] += a * b;
            std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        }
        return out;
    }

    bool operator==(const SparseOperator& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::map<std::size_t, Rational>> rows_;
};

} // namespace

std::size_t ExactMatrix::rank() const {
    std::vector<std::vector<Rational>> rows(dim_);
    for (std::size_t r = 0; r < dim_; ++r) rows[r].assign(entries_.begin() + r * dim_, entries_.begin() + (r + 1) * dim_);
    return rank_of(std::move(rows), dim_);
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    const std::size_t db = b.dim();
    ExactMatrix out(a.dim() * db);
    for (std::size_t ra = 0; ra < a.dim(); ++ra)
        for (std::size_t ca = 0; ca < a.dim(); ++ca) {
            if (a(ra, ca) == 0) continue;
            for (std::size_t rb = 0; rb < db; ++rb)
                for (std::size_t cb = 0; cb < db; ++cb)
                    if (b(rb, cb) != 0) out(ra * db + rb, ca * db + cb) = a(ra, ca) * b(rb, cb);
        }
    return out;
}

ExactMatrix swap_operator(std::size_t n) {
    ExactMatrix t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(j * n + i, i * n + j) = 1;
    return t;
}

bool check_pentagon(const ExactMatrix& phi, std::size_t n) {
    if (n == 0 || phi.dim() != n * n)
        throw PentagonShapeError("check_pentagon: operator dimension " + std::to_string(phi.dim()) +
                                 " is not n^2 for n = " + std::to_string(n));
    if (!phi.invertible()) throw PentagonShapeError("check_pentagon: operator is singular");
    const auto p = SparseOperator::from_dense(phi);
    const auto id = SparseOperator::from_dense(ExactMatrix::identity(n));
    const auto swap23 = SparseOperator::kron(id, SparseOperator::from_dense(swap_operator(n)));
    const auto phi12 = SparseOperator::kron(p, id);
    const auto phi23 = SparseOperator::kron(id, p);
    const auto phi13 = swap23 * phi12 * swap23;
    return phi12 * phi13 * phi23 == phi23 * phi12;
}

bool check_pentagon(const ExactMatrix& phi) {
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(phi.dim()))));
    if (n * n != phi.dim())
        throw PentagonShapeError("check_pentagon: dimension " + std::to_string(phi.dim()) + " is not a perfect square");
    return check_pentagon(phi, n);
}

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    const std::size_t g = table_.size();
    if (g == 0) throw std::invalid_argument("group table is empty");
    for (const auto& row : table_) {
        if (row.size() != g) throw std::invalid_argument("group table is not square");
        for (auto v : row)
            if (v >= g) throw std::invalid_argument("group table entry out of range");
    }
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            for (std::size_t c = 0; c < g; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("group table is not associative");
    bool found = false;
    for (std::size_t e = 0; e < g && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < g && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("group table has no identity");
    for (std::size_t a = 0; a < g; ++a) {
        bool has_inverse = false;
        for (std::size_t b = 0; b < g && !has_inverse; ++b)
            has_inverse = table_[a][b] == identity_ && table_[b][a] == identity_;
        if (!has_inverse) throw std::invalid_argument("group element " + std::to_string(a) + " has no inverse");
    }
}

GroupTable GroupTable::cyclic(std::size_t order) {
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) t[a][b] = (a + b) % order;
    return GroupTable(std::move(t));
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
    const std::size_t ga = a.order(), gb = b.order();
    std::vector<std::vector<std::size_t>> t(ga * gb, std::vector<std::size_t>(ga * gb));
    for (std::size_t a1 = 0; a1 < ga; ++a1)
        for (std::size_t b1 = 0; b1 < gb; ++b1)
            for (std::size_t a2 = 0; a2 < ga; ++a2)
                for (std::size_t b2 = 0; b2 < gb; ++b2) t[a1 * gb + b1][a2 * gb + b2] = a(a1, a2) * gb + b(b1, b2);
    return GroupTable(std::move(t));
}

ExactMatrix group_unitary(const GroupTable& group) {
    const std::size_t g = group.order();
    ExactMatrix u(g * g);
    for (std::size_t s = 0; s < g; ++s)
        for (std::size_t t = 0; t < g; ++t) u(s * g + group(s, t), s * g + t) = 1;
    return u;
}

std::size_t operator_schmidt_rank(const ExactMatrix& op, std::size_t n) {
    if (op.dim() != n * n) throw PentagonShapeError("operator_schmidt_rank: dimension is not n^2");
    std::vector<std::vector<Rational>> rows(n * n, std::vector<Rational>(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) rows[i * n + k][j * n + l] = op(i * n + j, k * n + l);
    return rank_of(std::move(rows), n * n);
}

bool ne_case_solvable(std::size_t n) {
    if (n < 1) throw std::invalid_argument("ne_case_solvable: n must be at least 1");
    return operator_schmidt_rank(swap_operator(n), n) == 1;
}

} // namespace fusionobs::pentagon
