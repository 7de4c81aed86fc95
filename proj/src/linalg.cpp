#include "fexp/linalg.hpp"

namespace fexp {

namespace {

// Generic reduced row echelon form; returns the pivot column of each row.
template <class T, class Ops>
std::vector<std::size_t> rref(std::vector<std::vector<T>>& A, std::size_t ncols, const Ops& ops)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < A.size(); ++col) {
        std::size_t sel = row;
        while (sel < A.size() && ops.is_zero(A[sel][col])) ++sel;
        if (sel == A.size()) continue;
        std::swap(A[row], A[sel]);
        const T inv = ops.inv(A[row][col]);
        for (std::size_t j = col; j < ncols; ++j) A[row][j] = ops.mul(A[row][j], inv);
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == row || ops.is_zero(A[r][col])) continue;
            const T c = A[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (!ops.is_zero(A[row][j])) A[r][j] = ops.sub(A[r][j], ops.mul(c, A[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T, class Ops>
std::vector<std::vector<T>> nullspace_impl(std::vector<std::vector<T>> A, std::size_t ncols, const Ops& ops)
{
    for (auto& r : A)
        if (r.size() != ncols) throw DomainError("matrix row has the wrong length");
    const std::vector<std::size_t> pivots = rref(A, ncols, ops);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(ncols, ops.zero());
        v[free] = ops.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = ops.neg(A[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct ElemOps {
    const Field* F;
    bool is_zero(Elem a) const { return a == 0; }
    Elem inv(Elem a) const { return F->inv(a); }
    Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
    Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
    Elem neg(Elem a) const { return F->neg(a); }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
};

struct RatOps {
    FieldPtr F;
    bool is_zero(const RatFunc& a) const { return a.is_zero(); }
    RatFunc inv(const RatFunc& a) const { return a.inverse(); }
    RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
    RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
    RatFunc neg(const RatFunc& a) const { return -a; }
    RatFunc zero() const { return RatFunc(F); }
    RatFunc one() const { return RatFunc::constant(F, 1); }
};

} // namespace

std::vector<std::vector<Elem>> nullspace(const FieldPtr& F, Matrix A, std::size_t ncols)
{
    return nullspace_impl(std::move(A), ncols, ElemOps{F.get()});
}

std::optional<std::vector<Elem>> solve_square(const FieldPtr& F, Matrix A, std::vector<Elem> b)
{
    const std::size_t n = b.size();
    if (A.size() != n) throw DomainError("system is not square");
    if (n == 0) return std::vector<Elem>{};
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw DomainError("system is not square");
        A[i].push_back(b[i]);
    }
    const std::vector<std::size_t> pivots = rref(A, n + 1, ElemOps{F.get()});
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    std::vector<Elem> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

std::vector<std::vector<RatFunc>> nullspace(const FieldPtr& F, std::vector<std::vector<RatFunc>> rows, std::size_t ncols)
{
    return nullspace_impl(std::move(rows), ncols, RatOps{F});
}

} // namespace fexp
