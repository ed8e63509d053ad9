#include "logsym/linalg.hpp"

#include <numeric>

#include "logsym/error.hpp"

namespace logsym {

namespace {

using Column = SparseMatrix::Column;

// v -= c·w
void axpy(Column& v, const mpq_class& c, const Column& w) {
    for (const auto& [r, x] : w) {
        auto [it, inserted] = v.try_emplace(r, 0);
        it->second -= c * x;
        if (it->second == 0) v.erase(it);
    }
}

// Echelon basis keyed by leading row; each vector is normalized to leading entry 1.
struct Echelon {
    std::map<int, Column> pivots;
    // Combination of original columns producing each pivot vector.
    std::map<int, Column> combos;
    bool track = false;

    // Reduces v in place; returns the combination of pivots subtracted.
    Column reduce(Column& v) const {
        Column used;
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots.find(it->first);
            if (p == pivots.end()) {
                ++it;
                continue;
            }
            const mpq_class c = it->second;
            const int lead = it->first;
            axpy(v, c, p->second);
            used[lead] += c;
            it = v.upper_bound(lead);
        }
        return used;
    }

    bool insert(Column v, int original) {
        Column used = reduce(v);
        if (v.empty()) return false;
        const int lead = v.begin()->first;
        const mpq_class inv = 1 / mpq_class(v.begin()->second);
        for (auto& [r, x] : v) x *= inv;
        if (track) {
            Column combo{{original, mpq_class(1)}};
            for (const auto& [l, c] : used) axpy(combo, c, combos.at(l));
            for (auto& [r, x] : combo) x *= inv;
            combos.emplace(lead, std::move(combo));
        }
        pivots.emplace(lead, std::move(v));
        return true;
    }
};

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

void SparseMatrix::add(int row, int col, const mpq_class& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols()) throw Error("matrix index out of range");
    mpq_class v = value;
    v.canonicalize();
    if (v == 0) return;
    auto [it, inserted] = columns_[col].try_emplace(row, 0);
    it->second += v;
    if (it->second == 0) columns_[col].erase(it);
}

void SparseMatrix::set_rows(int rows) {
    if (rows < rows_) throw Error("cannot shrink a matrix");
    rows_ = rows;
}

bool SparseMatrix::is_zero() const noexcept {
    for (const auto& c : columns_)
        if (!c.empty()) return false;
    return true;
}

long SparseMatrix::nonzeros() const noexcept {
    long n = 0;
    for (const auto& c : columns_) n += static_cast<long>(c.size());
    return n;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix dimensions do not match");
    SparseMatrix out(a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j)
        for (const auto& [k, x] : b.column(j))
            for (const auto& [i, y] : a.column(k)) out.add(i, j, x * y);
    return out;
}

std::vector<std::vector<int>> column_blocks(const SparseMatrix& a) {
    // Nodes: columns first, then rows.
    DisjointSets sets(a.cols() + a.rows());
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [r, x] : a.column(j)) sets.unite(j, a.cols() + r);
    std::map<int, std::vector<int>> blocks;
    for (int j = 0; j < a.cols(); ++j)
        if (!a.column(j).empty()) blocks[sets.find(j)].push_back(j);
    std::vector<std::vector<int>> out;
    for (auto& [root, cols] : blocks) out.push_back(std::move(cols));
    return out;
}

long rank(const SparseMatrix& a) {
    long r = 0;
    for (const auto& block : column_blocks(a)) {
        Echelon e;
        for (int j : block) r += e.insert(a.column(j), j);
    }
    return r;
}

std::optional<std::vector<mpq_class>> solve(const SparseMatrix& a, const Column& b) {
    for (const auto& [r, x] : b)
        if (r < 0 || r >= a.rows()) throw Error("right-hand side index out of range");
    std::vector<mpq_class> x(a.cols(), 0);
    if (b.empty()) return x;
    // Only the blocks touching b matter.
    DisjointSets sets(a.cols() + a.rows());
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [r, v] : a.column(j)) sets.unite(j, a.cols() + r);
    std::map<int, Column> rhs;
    for (const auto& [r, v] : b) {
        mpq_class c = v;
        c.canonicalize();
        if (c != 0) rhs[sets.find(a.cols() + r)].emplace(r, c);
    }
    std::map<int, Echelon> systems;
    for (const auto& [root, part] : rhs) systems[root].track = true;
    for (int j = 0; j < a.cols(); ++j) {
        if (a.column(j).empty()) continue;
        auto it = systems.find(sets.find(j));
        if (it != systems.end()) it->second.insert(a.column(j), j);
    }
    for (auto& [root, part] : rhs) {
        Echelon& e = systems[root];
        Column residual = part;
        const Column used = e.reduce(residual);
        if (!residual.empty()) return std::nullopt;
        for (const auto& [lead, c] : used)
            for (const auto& [j, t] : e.combos.at(lead)) x[j] += c * t;
    }
    return x;
}

} // namespace logsym
