#include "radsub/matrix.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace radsub {

GF::GF(FieldPtr f) : f_(std::move(f))
{
    if (f_->q() > 256) throw std::invalid_argument("GF tables support q <= 256");
    q_ = static_cast<int>(f_->q());
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    conj_.resize(q_);
    for (int x = 0; x < q_; ++x) {
        neg_[x] = static_cast<u8>(f_->neg(x));
        inv_[x] = x == 0 ? 0 : static_cast<u8>(f_->inv(x));
        for (int y = 0; y < q_; ++y) {
            add_[x * q_ + y] = static_cast<u8>(f_->add(x, y));
            mul_[x * q_ + y] = static_cast<u8>(f_->mul(x, y));
        }
    }
    has_conj_ = f_->k() % 2 == 0;
    i64 r = has_conj_ ? ipow(f_->p(), f_->k() / 2) : 1;
    for (int x = 0; x < q_; ++x) conj_[x] = has_conj_ ? static_cast<u8>(f_->pow(x, r)) : static_cast<u8>(x);
}

u8 GF::inv(u8 a) const
{
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

GFPtr gf_make(i64 q)
{
    static std::mutex mu;
    static std::map<i64, GFPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto g = std::make_shared<const GF>(field_of_order(q));
    cache[q] = g;
    return g;
}

Mat identity(int n) { return scalar(n, 1); }

Mat scalar(int n, u8 s)
{
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

Mat mat_mul(const GF& F, const Mat& x, const Mat& y)
{
    if (x.c != y.r) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat z(x.r, y.c);
    for (int i = 0; i < x.r; ++i) {
        u8* zr = &z.a[static_cast<size_t>(i) * z.c];
        for (int k = 0; k < x.c; ++k) {
            u8 xik = x(i, k);
            if (!xik) continue;
            const u8* mr = F.mul_row(xik);
            const u8* yr = &y.a[static_cast<size_t>(k) * y.c];
            for (int j = 0; j < y.c; ++j) zr[j] = F.add(zr[j], mr[yr[j]]);
        }
    }
    return z;
}

Mat mat_add(const GF& F, const Mat& x, const Mat& y)
{
    if (x.r != y.r || x.c != y.c) throw std::invalid_argument("mat_add: shape mismatch");
    Mat z(x.r, x.c);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = F.add(x.a[i], y.a[i]);
    return z;
}

Mat mat_scale(const GF& F, const Mat& x, u8 s)
{
    Mat z = x;
    for (auto& v : z.a) v = F.mul(v, s);
    return z;
}

Mat transpose(const Mat& x)
{
    Mat z(x.c, x.r);
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.c; ++j) z(j, i) = x(i, j);
    return z;
}

Mat conj(const GF& F, const Mat& x)
{
    Mat z = x;
    for (auto& v : z.a) v = F.conj(v);
    return z;
}

Mat adjoint(const GF& F, const Mat& x, bool hermitian)
{
    return hermitian ? conj(F, transpose(x)) : transpose(x);
}

namespace {

// Row reduction in place; returns rank and accumulates the determinant.
int reduce(const GF& F, Mat& m, u8* detp, Mat* companion)
{
    int rows = m.r, cols = m.c, rk = 0;
    u8 d = 1;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int i = rk; i < rows; ++i)
            if (m(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) {
            d = 0;
            continue;
        }
        if (piv != rk) {
            for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(rk, j));
            if (companion)
                for (int j = 0; j < companion->c; ++j) std::swap((*companion)(piv, j), (*companion)(rk, j));
            d = F.neg(d);
        }
        u8 pv = m(rk, col);
        d = F.mul(d, pv);
        u8 pinv = F.inv(pv);
        for (int j = 0; j < cols; ++j) m(rk, j) = F.mul(m(rk, j), pinv);
        if (companion)
            for (int j = 0; j < companion->c; ++j) (*companion)(rk, j) = F.mul((*companion)(rk, j), pinv);
        for (int i = 0; i < rows; ++i) {
            if (i == rk || !m(i, col)) continue;
            u8 f = F.neg(m(i, col));
            for (int j = 0; j < cols; ++j) m(i, j) = F.add(m(i, j), F.mul(f, m(rk, j)));
            if (companion)
                for (int j = 0; j < companion->c; ++j)
                    (*companion)(i, j) = F.add((*companion)(i, j), F.mul(f, (*companion)(rk, j)));
        }
        ++rk;
    }
    if (rk < rows || rk < cols) d = 0;
    if (detp) *detp = d;
    return rk;
}

}  // namespace

u8 det(const GF& F, const Mat& x)
{
    if (x.r != x.c) throw std::invalid_argument("det: not square");
    Mat m = x;
    u8 d;
    reduce(F, m, &d, nullptr);
    return d;
}

int rank(const GF& F, Mat x) { return reduce(F, x, nullptr, nullptr); }

Mat inverse(const GF& F, const Mat& x)
{
    if (x.r != x.c) throw std::invalid_argument("inverse: not square");
    Mat m = x, inv = identity(x.r);
    if (reduce(F, m, nullptr, &inv) < x.r) throw std::domain_error("inverse: singular matrix");
    return inv;
}

Mat mat_pow(const GF& F, const Mat& x, i64 e)
{
    Mat base = e < 0 ? inverse(F, x) : x;
    if (e < 0) e = -e;
    Mat r = identity(x.r);
    while (e > 0) {
        if (e & 1) r = mat_mul(F, r, base);
        e >>= 1;
        if (e) base = mat_mul(F, base, base);
    }
    return r;
}

Mat kron(const GF& F, const Mat& x, const Mat& y)
{
    Mat z(x.r * y.r, x.c * y.c);
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.c; ++j) {
            u8 s = x(i, j);
            if (!s) continue;
            for (int k = 0; k < y.r; ++k)
                for (int l = 0; l < y.c; ++l) z(i * y.r + k, j * y.c + l) = F.mul(s, y(k, l));
        }
    return z;
}

Mat block_diag(const std::vector<Mat>& blocks)
{
    int n = 0;
    for (const auto& b : blocks) n += b.r;
    Mat z(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.r; ++i)
            for (int j = 0; j < b.c; ++j) z(off + i, off + j) = b(i, j);
        off += b.r;
    }
    return z;
}

std::vector<std::vector<u8>> null_space(const GF& F, const Mat& x)
{
    Mat m = x;
    reduce(F, m, nullptr, nullptr);
    std::vector<int> pivcol(m.r, -1);
    std::vector<bool> is_piv(m.c, false);
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j)
            if (m(i, j)) {
                pivcol[i] = j;
                is_piv[j] = true;
                break;
            }
    std::vector<std::vector<u8>> basis;
    for (int fcol = 0; fcol < m.c; ++fcol) {
        if (is_piv[fcol]) continue;
        std::vector<u8> v(m.c, 0);
        v[fcol] = 1;
        for (int i = 0; i < m.r; ++i)
            if (pivcol[i] >= 0) v[pivcol[i]] = F.neg(m(i, fcol));
        basis.push_back(v);
    }
    return basis;
}

i64 mat_order(const GF& F, const Mat& x)
{
    Mat id = identity(x.r), y = x;
    for (i64 k = 1; k < (1LL << 40); ++k) {
        if (y == id) return k;
        y = mat_mul(F, y, x);
    }
    throw std::logic_error("mat_order: no finite order found");
}

std::vector<u8> mat_vec(const GF& F, const Mat& x, const std::vector<u8>& v)
{
    std::vector<u8> w(x.r, 0);
    for (int i = 0; i < x.r; ++i) {
        u8 s = 0;
        for (int j = 0; j < x.c; ++j) s = F.add(s, F.mul(x(i, j), v[j]));
        w[i] = s;
    }
    return w;
}

u8 form_value(const GF& F, const Mat& G, const std::vector<u8>& u, const std::vector<u8>& v, bool hermitian)
{
    u8 s = 0;
    for (int i = 0; i < G.r; ++i) {
        if (!u[i]) continue;
        u8 t = 0;
        for (int j = 0; j < G.c; ++j) t = F.add(t, F.mul(G(i, j), hermitian ? F.conj(v[j]) : v[j]));
        s = F.add(s, F.mul(u[i], t));
    }
    return s;
}

std::string mat_to_string(const Mat& x)
{
    std::ostringstream os;
    for (int i = 0; i < x.r; ++i) {
        if (i) os << ';';
        for (int j = 0; j < x.c; ++j) {
            if (j) os << ',';
            os << static_cast<int>(x(i, j));
        }
    }
    return os.str();
}

}  // namespace radsub
