#pragma once

#include <colorstat/image.hpp>

#include <cstddef>
#include <vector>

namespace colorstat {

/// Stride between consecutive elements of a co-occurrence chain.
struct Offset {
    int dx = 0;
    int dy = 0;
    bool operator==(const Offset&) const = default;
};

/// Dense order-d joint frequency of code chains, normalized to sum 1.
/// Bin index of the chain (v1, ..., vd) is v1*L^(d-1) + ... + vd
/// (lexicographic over tuples).
struct CooccurrenceMatrix {
    int levels = 0;
    int order = 0;
    std::vector<double> bins;  // length levels^order
};

/// Counts every chain of `order` codes at stride (dx, dy) whose last element
/// is still in bounds, then normalizes by the number of chains N.
/// Throws PlaneTooSmall when no chain fits.
CooccurrenceMatrix cooccurrence(const CodePlane& p, int order, Offset off);

/// Merged vector length: one entry per unordered {tuple, reversed-tuple}
/// pair; for order 3 this is (L^3 + L^2) / 2.
std::size_t merged_length(int levels, int order);

/// Folds each bin with its reversed-tuple partner: distinct pairs emit the
/// sum of the two bins, palindromes pass through unchanged. Entries are
/// ordered by the lexicographically smaller representative tuple. Total mass
/// is preserved.
std::vector<double> symmetric_merge(const CooccurrenceMatrix& m);

}  // namespace colorstat
