#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clifftomo/rng.hpp"

namespace clifftomo {

// Bit vector over F2, packed 64 bits per word, little-endian within a word.
// Pad bits in the last word stay zero.
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static F2Vec unit(std::size_t len, std::size_t i);
    static F2Vec from_bits(const std::vector<int>& bits);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = 1ULL << (i % 64);
        if (v)
            words_[i / 64] |= m;
        else
            words_[i / 64] &= ~m;
    }
    void flip(std::size_t i) { words_[i / 64] ^= 1ULL << (i % 64); }

    void xor_with(const F2Vec& o);
    bool dot(const F2Vec& o) const;         // inner product mod 2
    std::size_t dot_count(const F2Vec& o) const;  // integer popcount of AND
    bool any() const;
    std::size_t popcount() const;

    bool operator==(const F2Vec& o) const { return len_ == o.len_ && words_ == o.words_; }
    bool operator!=(const F2Vec& o) const { return !(*this == o); }
    bool operator<(const F2Vec& o) const;  // lexicographic by bit index 0 first

    F2Vec concat(const F2Vec& tail) const;
    F2Vec slice(std::size_t begin, std::size_t count) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::string to_string() const;  // '0'/'1' characters, bit 0 first
    static F2Vec parse(const std::string& s);

    // bits as an integer, bit 0 least significant; requires len <= 64
    std::uint64_t to_uint() const;
    static F2Vec from_uint(std::size_t len, std::uint64_t v);

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense bit matrix over F2, row-major packed rows. Dimensions fixed at
// construction.
class F2Mat {
public:
    F2Mat() = default;
    F2Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, F2Vec(cols)) {}

    static F2Mat identity(std::size_t n);
    static F2Mat from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    const F2Vec& row(std::size_t r) const { return data_[r]; }
    F2Vec& row(std::size_t r) { return data_[r]; }
    F2Vec col(std::size_t c) const;

    F2Mat transpose() const;
    bool operator==(const F2Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const F2Mat& o) const { return !(*this == o); }

    std::string to_string() const;  // one row per line
    static F2Mat parse(const std::string& text);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vec> data_;
};

F2Mat mat_mul(const F2Mat& a, const F2Mat& b);
F2Vec mat_vec(const F2Mat& a, const F2Vec& v);

// Reduced row echelon form with a sign column carried through the same row
// operations. Pivot order is deterministic: leftmost column, lowest row.
std::pair<F2Mat, F2Vec> row_reduce_signed(F2Mat m, F2Vec signs);

// Block-antidiagonal form Lambda(n) = [[0, I], [I, 0]] of size 2n x 2n.
F2Mat lambda_form(std::size_t n);

bool symplectic_check(const F2Mat& m);

// 2n x 2n bit matrix S with S^T Lambda S = Lambda. Columns 0..n-1 are the
// images of the Z generators, columns n..2n-1 the images of the X
// generators; the top half holds Z-exponents, the bottom half X-exponents.
class SymplecticMat {
public:
    explicit SymplecticMat(F2Mat m);  // throws std::invalid_argument if not symplectic
    static SymplecticMat identity(std::size_t n);

    std::size_t n() const { return n_; }
    const F2Mat& mat() const { return mat_; }

    SymplecticMat inverse() const;  // Lambda S^T Lambda
    F2Vec apply(const F2Vec& v) const { return mat_vec(mat_, v); }

    bool operator==(const SymplecticMat& o) const { return mat_ == o.mat_; }
    bool operator!=(const SymplecticMat& o) const { return !(*this == o); }

private:
    std::size_t n_;
    F2Mat mat_;
};

// Uniform over Sp(2n, F2) via the transvection construction; no rejection.
SymplecticMat random_symplectic(std::size_t n, CtrRng& rng);

}  // namespace clifftomo
