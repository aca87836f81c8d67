#include "prestable/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace prestable {

SparseVec sparse_normalize(std::map<int, Rat> entries) {
    SparseVec v;
    v.reserve(entries.size());
    for (auto& [c, x] : entries) {
        if (x != 0) v.emplace_back(c, x);
    }
    return v;
}

void SparseRationalMatrix::add_row(SparseVec v) {
    for (auto& [c, x] : v) {
        if (c < 0 || c >= cols) throw std::out_of_range("sparse row column out of range");
        (void)x;
    }
    rows.push_back(std::move(v));
}

namespace {

// v -= f * w, both sorted sparse.
SparseVec axpy(const SparseVec& v, const Rat& f, const SparseVec& w) {
    SparseVec out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j >= w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i >= v.size() || w[j].first < v[i].first) {
            Rat x = -f * w[j].second;
            if (x != 0) out.emplace_back(w[j].first, x);
            ++j;
        } else {
            Rat x = v[i].second - f * w[j].second;
            if (x != 0) out.emplace_back(v[i].first, x);
            ++i;
            ++j;
        }
    }
    return out;
}

// Clear denominators and divide out integer content; sign fixed by leading entry.
void make_primitive(SparseVec& v) {
    if (v.empty()) return;
    Int lcm = 1;
    for (auto& [c, x] : v) {
        (void)c;
        Int d = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    Int content = 0;
    std::vector<Int> nums(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i].second * Rat(lcm);
        scaled.canonicalize();
        nums[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), nums[i].get_mpz_t());
    }
    if (content == 0) return;
    if (nums.front() < 0) content = -content;
    for (size_t i = 0; i < v.size(); ++i) {
        v[i].second = Rat(nums[i] / content);
    }
}

} // namespace

bool Echelon::add(SparseVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    make_primitive(row);
    int lead = row.front().first;
    pivot_of_col_[lead] = (int)rows_.size();
    rows_.push_back(std::move(row));
    return true;
}

SparseVec Echelon::reduce(SparseVec v) const {
    while (!v.empty()) {
        auto it = pivot_of_col_.find(v.front().first);
        if (it == pivot_of_col_.end()) {
            // leading column has no pivot; eliminate deeper entries only
            break;
        }
        const SparseVec& p = rows_[it->second];
        Rat f = v.front().second / p.front().second;
        v = axpy(v, f, p);
    }
    if (v.empty()) return v;
    // eliminate non-leading entries that hit pivots, front to back
    SparseVec cur = std::move(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cur.size(); ++i) {
            auto it = pivot_of_col_.find(cur[i].first);
            if (it != pivot_of_col_.end()) {
                const SparseVec& p = rows_[it->second];
                Rat f = cur[i].second / p.front().second;
                cur = axpy(cur, f, p);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

int rank(const SparseRationalMatrix& m) {
    // Sort rows by sparsity so short rows pivot first; order does not affect the result.
    std::vector<int> order(m.rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return m.rows[a].size() < m.rows[b].size();
    });
    Echelon ech(m.cols);
    for (int i : order) ech.add(m.rows[i]);
    return ech.rank();
}

bool in_row_span(const SparseRationalMatrix& m, const SparseVec& v) {
    for (auto& [c, x] : v) {
        (void)x;
        if (c < 0 || c >= m.cols) throw std::out_of_range("vector column out of range");
    }
    Echelon ech(m.cols);
    for (auto& r : m.rows) ech.add(r);
    return ech.reduce(v).empty();
}

std::vector<SparseVec> kernel_basis(const SparseRationalMatrix& m) {
    // Reduced row echelon over Q, dense per-row bookkeeping on pivot columns.
    std::vector<SparseVec> ech;
    std::map<int, int> pivot_of_col;
    for (const auto& row0 : m.rows) {
        SparseVec row = row0;
        while (!row.empty()) {
            auto it = pivot_of_col.find(row.front().first);
            if (it == pivot_of_col.end()) break;
            const SparseVec& p = ech[it->second];
            Rat f = row.front().second / p.front().second;
            row = axpy(row, f, p);
        }
        if (row.empty()) continue;
        // back-substitute into existing rows to get reduced form
        for (auto& e : ech) {
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i].first == row.front().first) {
                    Rat f = e[i].second / row.front().second;
                    e = axpy(e, f, row);
                    break;
                }
            }
        }
        pivot_of_col[row.front().first] = (int)ech.size();
        ech.push_back(std::move(row));
    }
    // also fully reduce each echelon row against later pivots
    for (auto& e : ech) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 1; i < e.size(); ++i) {
                auto it = pivot_of_col.find(e[i].first);
                if (it != pivot_of_col.end()) {
                    const SparseVec& p = ech[it->second];
                    if (&p == &e) continue;
                    Rat f = e[i].second / p.front().second;
                    e = axpy(e, f, p);
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<SparseVec> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (pivot_of_col.count(c)) continue;
        std::map<int, Rat> k;
        k[c] = 1;
        for (auto& [pc, idx] : pivot_of_col) {
            const SparseVec& e = ech[idx];
            for (auto& [col, val] : e) {
                if (col == c) {
                    k[pc] = -val / e.front().second;
                }
            }
        }
        basis.push_back(sparse_normalize(std::move(k)));
    }
    return basis;
}

std::string to_sparse_text(const SparseRationalMatrix& m) {
    size_t nnz = 0;
    for (auto& r : m.rows) nnz += r.size();
    std::ostringstream os;
    os << m.rows.size() << ' ' << m.cols << ' ' << nnz << '\n';
    for (size_t i = 0; i < m.rows.size(); ++i) {
        for (auto& [c, x] : m.rows[i]) {
            os << (i + 1) << ' ' << (c + 1) << ' ' << rat_to_string(x) << '\n';
        }
    }
    return os.str();
}

SparseRationalMatrix from_sparse_text(const std::string& text) {
    std::istringstream is(text);
    size_t nrows, nnz;
    int ncols;
    if (!(is >> nrows >> ncols >> nnz)) throw std::runtime_error("bad sparse matrix header");
    std::vector<std::map<int, Rat>> rows(nrows);
    for (size_t k = 0; k < nnz; ++k) {
        size_t r;
        int c;
        std::string val;
        if (!(is >> r >> c >> val)) throw std::runtime_error("bad sparse matrix triplet");
        if (r < 1 || r > nrows || c < 1 || c > ncols) throw std::runtime_error("triplet out of range");
        rows[r - 1][c - 1] += rat_from_string(val);
    }
    SparseRationalMatrix m;
    m.cols = ncols;
    for (auto& row : rows) m.add_row(sparse_normalize(std::move(row)));
    return m;
}

} // namespace prestable
