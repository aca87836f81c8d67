#pragma once

#include "prestable/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace prestable {

// One sparse row: sorted (column, value) pairs, no zeros, values in lowest terms.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_normalize(std::map<int, Rat> entries);

struct SparseRationalMatrix {
    int cols = 0;
    std::vector<SparseVec> rows;

    void add_row(SparseVec v);
    int row_count() const { return (int)rows.size(); }
};

// Exact rank over Q.
int rank(const SparseRationalMatrix& m);

bool in_row_span(const SparseRationalMatrix& m, const SparseVec& v);

// Exact right-kernel basis; m * k = 0 for each returned k, count = cols - rank.
std::vector<SparseVec> kernel_basis(const SparseRationalMatrix& m);

// Incremental echelon form: feed rows one at a time, query rank, reduce vectors.
// Pivot choice is sparsity-driven; all arithmetic exact.
struct Echelon {
    explicit Echelon(int cols) : cols_(cols) {}

    // Returns true if the row increased the rank.
    bool add(SparseVec row);
    // Reduce v against the current echelon rows; empty result <=> in span.
    SparseVec reduce(SparseVec v) const;
    int rank() const { return (int)rows_.size(); }
    int columns() const { return cols_; }

private:
    int cols_;
    std::vector<SparseVec> rows_;       // each with a unique leading column
    std::map<int, int> pivot_of_col_;   // leading column -> index in rows_
};

// Matrix-Market-style sparse text: "rows cols nnz" header line then
// "row col value" triplets, 1-based, values as exact fractions.
std::string to_sparse_text(const SparseRationalMatrix& m);
SparseRationalMatrix from_sparse_text(const std::string& text);

} // namespace prestable
