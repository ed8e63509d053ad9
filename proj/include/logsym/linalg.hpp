#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace logsym {

/// Exact sparse matrix over Q, stored by columns.
class SparseMatrix {
public:
    using Column = std::map<int, mpq_class>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), columns_(cols) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return static_cast<int>(columns_.size()); }
    const Column& column(int j) const { return columns_.at(j); }
    void add(int row, int col, const mpq_class& value);
    /// Grows the row count; existing entries are kept.
    void set_rows(int rows);
    bool is_zero() const noexcept;
    long nonzeros() const noexcept;

private:
    int rows_ = 0;
    std::vector<Column> columns_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Connected components of the bipartite row/column incidence graph; each entry lists
/// the columns of one block. Columns without entries are omitted.
std::vector<std::vector<int>> column_blocks(const SparseMatrix& a);

/// Exact rank, computed blockwise by fraction-free sparse elimination.
long rank(const SparseMatrix& a);

/// Some x with a·x = b, or nothing if b is outside the column space.
std::optional<std::vector<mpq_class>> solve(const SparseMatrix& a, const SparseMatrix::Column& b);

} // namespace logsym
