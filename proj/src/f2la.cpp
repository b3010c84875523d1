#include "clifftomo/f2la.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace clifftomo {

F2Vec F2Vec::unit(std::size_t len, std::size_t i) {
    F2Vec v(len);
    v.set(i, true);
    return v;
}

F2Vec F2Vec::from_bits(const std::vector<int>& bits) {
    F2Vec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
    return v;
}

void F2Vec::xor_with(const F2Vec& o) {
    if (len_ != o.len_) throw std::invalid_argument("F2Vec::xor_with: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
}

bool F2Vec::dot(const F2Vec& o) const { return dot_count(o) & 1; }

std::size_t F2Vec::dot_count(const F2Vec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("F2Vec::dot: length mismatch");
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        c += std::popcount(words_[w] & o.words_[w]);
    return c;
}

bool F2Vec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t F2Vec::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool F2Vec::operator<(const F2Vec& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    for (std::size_t i = 0; i < len_; ++i) {
        bool a = get(i), b = o.get(i);
        if (a != b) return a < b;
    }
    return false;
}

F2Vec F2Vec::concat(const F2Vec& tail) const {
    F2Vec out(len_ + tail.len_);
    for (std::size_t i = 0; i < len_; ++i) out.set(i, get(i));
    for (std::size_t i = 0; i < tail.len_; ++i) out.set(len_ + i, tail.get(i));
    return out;
}

F2Vec F2Vec::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > len_) throw std::out_of_range("F2Vec::slice");
    F2Vec out(count);
    for (std::size_t i = 0; i < count; ++i) out.set(i, get(begin + i));
    return out;
}

std::string F2Vec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Vec F2Vec::parse(const std::string& s) {
    F2Vec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("F2Vec::parse: bad character");
    }
    return v;
}

std::uint64_t F2Vec::to_uint() const {
    if (len_ > 64) throw std::invalid_argument("F2Vec::to_uint: too long");
    return words_.empty() ? 0 : words_[0];
}

F2Vec F2Vec::from_uint(std::size_t len, std::uint64_t v) {
    if (len > 64) throw std::invalid_argument("F2Vec::from_uint: too long");
    F2Vec out(len);
    for (std::size_t i = 0; i < len; ++i) out.set(i, (v >> i) & 1);
    return out;
}

F2Mat F2Mat::identity(std::size_t n) {
    F2Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Mat F2Mat::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return {};
    F2Mat m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw std::invalid_argument("F2Mat::from_rows: ragged input");
        m.data_[r] = F2Vec::from_bits(rows[r]);
    }
    return m;
}

F2Vec F2Mat::col(std::size_t c) const {
    F2Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
    return v;
}

F2Mat F2Mat::transpose() const {
    F2Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::string F2Mat::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += data_[r].to_string();
        s += '\n';
    }
    return s;
}

F2Mat F2Mat::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<F2Vec> rows;
    std::vector<int> sign_bits;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto bar = line.find('|');
        std::string body = (bar == std::string::npos) ? line : line.substr(0, bar);
        rows.push_back(F2Vec::parse(body));
    }
    if (rows.empty()) return {};
    F2Mat m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("F2Mat::parse: ragged rows");
        m.data_[r] = rows[r];
    }
    return m;
}

F2Mat mat_mul(const F2Mat& a, const F2Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    F2Mat out(a.rows(), b.cols());
    // accumulate rows of b selected by bits of each row of a
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(r, k)) out.row(r).xor_with(b.row(k));
    return out;
}

F2Vec mat_vec(const F2Mat& a, const F2Vec& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    F2Vec out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, a.row(r).dot(v));
    return out;
}

std::pair<F2Mat, F2Vec> row_reduce_signed(F2Mat m, F2Vec signs) {
    if (signs.size() != m.rows())
        throw std::invalid_argument("row_reduce_signed: sign column length mismatch");
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && !m.get(r, c)) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row) {
            std::swap(m.row(r), m.row(pivot_row));
            bool s = signs.get(r);
            signs.set(r, signs.get(pivot_row));
            signs.set(pivot_row, s);
        }
        for (std::size_t k = 0; k < m.rows(); ++k) {
            if (k != pivot_row && m.get(k, c)) {
                m.row(k).xor_with(m.row(pivot_row));
                if (signs.get(pivot_row)) signs.flip(k);
            }
        }
        ++pivot_row;
    }
    return {std::move(m), std::move(signs)};
}

F2Mat lambda_form(std::size_t n) {
    F2Mat l(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        l.set(i, n + i, true);
        l.set(n + i, i, true);
    }
    return l;
}

bool symplectic_check(const F2Mat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("symplectic_check: needs square matrix of even dimension");
    std::size_t n = m.rows() / 2;
    return mat_mul(mat_mul(m.transpose(), lambda_form(n)), m) == lambda_form(n);
}

SymplecticMat::SymplecticMat(F2Mat m) : n_(m.rows() / 2), mat_(std::move(m)) {
    if (!symplectic_check(mat_))
        throw std::invalid_argument("SymplecticMat: matrix is not symplectic");
}

SymplecticMat SymplecticMat::identity(std::size_t n) {
    return SymplecticMat(F2Mat::identity(2 * n));
}

SymplecticMat SymplecticMat::inverse() const {
    F2Mat l = lambda_form(n_);
    return SymplecticMat(mat_mul(mat_mul(l, mat_.transpose()), l));
}

namespace {

// The transvection construction below works in the alternating coordinate
// convention where the symplectic pairs are (2q, 2q+1).
bool inner_alt(const F2Vec& v, const F2Vec& w) {
    constexpr std::uint64_t even = 0x5555555555555555ULL;
    std::size_t c = 0;
    for (std::size_t i = 0; i < v.words().size(); ++i) {
        std::uint64_t a = v.words()[i], b = w.words()[i];
        c += std::popcount(((a & (b >> 1)) ^ (b & (a >> 1))) & even);
    }
    return c & 1;
}

// Z_k(v) = v + <k,v> k
void transvect(const F2Vec& k, F2Vec& v) {
    if (k.any() && inner_alt(k, v)) v.xor_with(k);
}

// Find h0, h1 with y = Z_h0 Z_h1 x for nonzero x, y.
std::pair<F2Vec, F2Vec> find_transvection(const F2Vec& x, const F2Vec& y) {
    std::size_t nn = x.size();
    F2Vec zero(nn);
    if (x == y) return {zero, zero};
    if (inner_alt(x, y)) {
        F2Vec h = x;
        h.xor_with(y);
        return {h, zero};
    }
    F2Vec z(nn);
    for (std::size_t i = 0; i < nn / 2; ++i) {
        std::size_t ii = 2 * i;
        bool xs = x.get(ii) || x.get(ii + 1);
        bool ys = y.get(ii) || y.get(ii + 1);
        if (xs && ys) {
            z.set(ii, x.get(ii) ^ y.get(ii));
            z.set(ii + 1, x.get(ii + 1) ^ y.get(ii + 1));
            if (!z.get(ii) && !z.get(ii + 1)) {
                z.set(ii + 1, true);
                if (x.get(ii) != x.get(ii + 1)) z.set(ii, true);
            }
            F2Vec h0 = x, h1 = y;
            h0.xor_with(z);
            h1.xor_with(z);
            return {h0, h1};
        }
    }
    for (std::size_t i = 0; i < nn / 2; ++i) {
        std::size_t ii = 2 * i;
        if ((x.get(ii) || x.get(ii + 1)) && !y.get(ii) && !y.get(ii + 1)) {
            if (x.get(ii) == x.get(ii + 1)) {
                z.set(ii + 1, true);
            } else {
                z.set(ii + 1, x.get(ii));
                z.set(ii, x.get(ii + 1));
            }
            break;
        }
    }
    for (std::size_t i = 0; i < nn / 2; ++i) {
        std::size_t ii = 2 * i;
        if (!x.get(ii) && !x.get(ii + 1) && (y.get(ii) || y.get(ii + 1))) {
            if (y.get(ii) == y.get(ii + 1)) {
                z.set(ii + 1, true);
            } else {
                z.set(ii + 1, y.get(ii));
                z.set(ii, y.get(ii + 1));
            }
            break;
        }
    }
    F2Vec h0 = x, h1 = y;
    h0.xor_with(z);
    h1.xor_with(z);
    return {h0, h1};
}

F2Vec random_nonzero(std::size_t len, CtrRng& rng) {
    F2Vec v(len);
    do {
        for (std::size_t i = 0; i < len; ++i) v.set(i, rng.next_bit());
    } while (!v.any());
    return v;
}

// Uniform element of Sp(2n, F2) in alternating coordinates, as rows.
F2Mat random_symplectic_alt(std::size_t n, CtrRng& rng) {
    std::size_t nn = 2 * n;
    F2Vec f1 = random_nonzero(nn, rng);
    F2Vec e1 = F2Vec::unit(nn, 0);
    auto [t0, t1] = find_transvection(e1, f1);

    std::vector<bool> bits(nn - 1);
    for (auto&& b : bits) b = rng.next_bit();

    F2Vec eprime = e1;
    for (std::size_t j = 2; j < nn; ++j) eprime.set(j, bits[j - 1]);
    F2Vec h0 = eprime;
    transvect(t0, h0);
    transvect(t1, h0);
    if (bits[0]) f1 = F2Vec(nn);  // skip the final transvection

    F2Mat g(nn, nn);
    if (n == 1) {
        g = F2Mat::identity(2);
    } else {
        F2Mat inner = random_symplectic_alt(n - 1, rng);
        g.set(0, 0, true);
        g.set(1, 1, true);
        for (std::size_t r = 0; r < nn - 2; ++r)
            for (std::size_t c = 0; c < nn - 2; ++c)
                if (inner.get(r, c)) g.set(r + 2, c + 2, true);
    }
    for (std::size_t j = 0; j < nn; ++j) {
        transvect(t0, g.row(j));
        transvect(t1, g.row(j));
        transvect(h0, g.row(j));
        transvect(f1, g.row(j));
    }
    return g;
}

}  // namespace

SymplecticMat random_symplectic(std::size_t n, CtrRng& rng) {
    if (n < 1) throw std::invalid_argument("random_symplectic: n must be >= 1");
    F2Mat alt = random_symplectic_alt(n, rng);
    // permute alternating coordinates (2q, 2q+1) into block form (q, n+q)
    std::size_t nn = 2 * n;
    auto perm = [n](std::size_t i) { return (i % 2 == 0) ? i / 2 : n + i / 2; };
    F2Mat block(nn, nn);
    for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t c = 0; c < nn; ++c)
            if (alt.get(r, c)) block.set(perm(r), perm(c), true);
    return SymplecticMat(std::move(block));
}

}  // namespace clifftomo
