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

#include "revlattice/gf2.h"

#include <sstream>
#include <utility>

#include "revlattice/error.h"

namespace revlattice {

Gf2Matrix::Gf2Matrix(int n) : n_(n), cols_(n, 0) {
}

Gf2Matrix::Gf2Matrix(int n, std::vector<Word> columns) : n_(n), cols_(std::move(columns)) {
    if ((int)cols_.size() != n) {
        throw RevError(ErrorCode::ArityMismatch, "matrix needs exactly n columns");
    }
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n);
    for (int j = 0; j < n; j++) {
        m.cols_[j] = basis_word(n, j);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(int n, const std::vector<Word> &rows) {
    Gf2Matrix t(n, rows);
    return t.transpose();
}

Word Gf2Matrix::row(int i) const {
    Word r = 0;
    for (int j = 0; j < n_; j++) {
        if (get(i, j)) {
            r |= basis_word(n_, j);
        }
    }
    return r;
}

std::vector<Word> Gf2Matrix::rows() const {
    std::vector<Word> out(n_);
    for (int i = 0; i < n_; i++) {
        out[i] = row(i);
    }
    return out;
}

Word Gf2Matrix::apply(Word x) const {
    Word y = 0;
    for (int j = 0; j < n_; j++) {
        if (get_wire(x, n_, j)) {
            y ^= cols_[j];
        }
    }
    return y;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix &other) const {
    if (other.n_ != n_) {
        throw RevError(ErrorCode::ArityMismatch, "matrix sizes differ");
    }
    Gf2Matrix out(n_);
    for (int j = 0; j < n_; j++) {
        out.cols_[j] = apply(other.cols_[j]);
    }
    return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(n_);
    for (int i = 0; i < n_; i++) {
        t.cols_[i] = row(i);
    }
    return t;
}

int Gf2Matrix::rank() const {
    std::vector<Word> v = cols_;
    int r = 0;
    for (int bit = n_ - 1; bit >= 0 && r < n_; bit--) {
        Word m = Word{1} << bit;
        int pivot = -1;
        for (int j = r; j < n_; j++) {
            if (v[j] & m) {
                pivot = j;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(v[r], v[pivot]);
        for (int j = 0; j < n_; j++) {
            if (j != r && (v[j] & m)) {
                v[j] ^= v[r];
            }
        }
        r++;
    }
    return r;
}

Gf2Matrix Gf2Matrix::inverse() const {
    // Gauss-Jordan on rows of [A | I].
    std::vector<Word> a = rows();
    std::vector<Word> inv = Gf2Matrix::identity(n_).rows();
    for (int c = 0; c < n_; c++) {
        Word m = basis_word(n_, c);
        int pivot = -1;
        for (int r = c; r < n_; r++) {
            if (a[r] & m) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            throw RevError(ErrorCode::Singular, "matrix is not invertible");
        }
        std::swap(a[c], a[pivot]);
        std::swap(inv[c], inv[pivot]);
        for (int r = 0; r < n_; r++) {
            if (r != c && (a[r] & m)) {
                a[r] ^= a[c];
                inv[r] ^= inv[c];
            }
        }
    }
    return from_rows(n_, inv);
}

bool Gf2Matrix::is_permutation() const {
    Word seen = 0;
    for (Word c : cols_) {
        if (weight(c) != 1 || (seen & c)) {
            return false;
        }
        seen |= c;
    }
    return true;
}

bool Gf2Matrix::is_orthogonal() const {
    for (int i = 0; i < n_; i++) {
        for (int j = i; j < n_; j++) {
            int d = dot(cols_[i], cols_[j]) & 1;
            if (d != (i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

std::string Gf2Matrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < n_; i++) {
        out << to_bit_string(row(i), n_) << "\n";
    }
    return out.str();
}

void for_each_invertible_matrix(int n, const std::function<void(const Gf2Matrix &)> &f) {
    // Depth-first over columns, keeping the span of chosen columns so that
    // each new column is outside it.
    std::vector<Word> cols(n);
    std::vector<char> in_span(std::size_t{1} << n, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            f(Gf2Matrix(n, cols));
            return;
        }
        std::vector<Word> span;
        for (Word v = 0; v < (Word{1} << n); v++) {
            if (in_span[v]) {
                span.push_back(v);
            }
        }
        for (Word c = 1; c < (Word{1} << n); c++) {
            if (in_span[c]) {
                continue;
            }
            cols[j] = c;
            for (Word s : span) {
                in_span[s ^ c] = 1;
            }
            rec(j + 1);
            for (Word s : span) {
                in_span[s ^ c] = 0;
            }
        }
    };
    in_span[0] = 1;
    rec(0);
}

Gf2Matrix random_invertible_matrix(int n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<Word> dist(0, low_mask(n));
    while (true) {
        std::vector<Word> cols(n);
        for (auto &c : cols) {
            c = dist(rng);
        }
        Gf2Matrix m(n, std::move(cols));
        if (m.invertible()) {
            return m;
        }
    }
}

}  // namespace revlattice
