// Copyright 2026 The revlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REVLATTICE_GF2_H
#define REVLATTICE_GF2_H

#include <functional>
#include <random>
#include <vector>

#include "revlattice/word.h"

namespace revlattice {

/// Square matrix over GF(2), stored column-major. Column j is a Word whose
/// bit for row i follows the usual wire convention (row i at bit n-1-i), so
/// A * e_j == column(j).
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(int n);
    Gf2Matrix(int n, std::vector<Word> columns);

    static Gf2Matrix identity(int n);
    static Gf2Matrix from_rows(int n, const std::vector<Word> &rows);

    int size() const {
        return n_;
    }
    Word column(int j) const {
        return cols_[j];
    }
    void set_column(int j, Word v) {
        cols_[j] = v;
    }
    const std::vector<Word> &columns() const {
        return cols_;
    }
    int get(int row, int col) const {
        return get_wire(cols_[col], n_, row);
    }
    /// Row i as a word over the column index.
    Word row(int i) const;
    std::vector<Word> rows() const;

    Word apply(Word x) const;
    Gf2Matrix operator*(const Gf2Matrix &other) const;
    bool operator==(const Gf2Matrix &other) const = default;

    Gf2Matrix transpose() const;
    int rank() const;
    bool invertible() const {
        return rank() == n_;
    }
    /// Throws RevError(Singular) when not invertible.
    Gf2Matrix inverse() const;
    bool is_permutation() const;
    /// A^T A == I, i.e. columns are orthonormal under the mod-2 inner product.
    bool is_orthogonal() const;

    std::string str() const;

   private:
    int n_ = 0;
    std::vector<Word> cols_;
};

/// Calls f once for every invertible n x n matrix (n <= 5 is practical).
void for_each_invertible_matrix(int n, const std::function<void(const Gf2Matrix &)> &f);

/// Uniformly random invertible matrix by rejection sampling.
Gf2Matrix random_invertible_matrix(int n, std::mt19937_64 &rng);

}  // namespace revlattice

#endif
