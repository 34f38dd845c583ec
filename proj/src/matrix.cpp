#include "lieder/matrix.hpp"

#include "lieder/error.hpp"

#include <sstream>

namespace lieder {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix out(x);
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
    return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix out(x);
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
    return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Rat& yv = y.at(k, j);
                if (yv != 0) out.at(i, j) += xv * yv;
            }
        }
    return out;
}

Matrix operator*(const Rat& s, const Matrix& x) {
    Matrix out(x);
    for (Rat& v : out.a) v *= s;
    return out;
}

Vec apply(const Matrix& m, const Vec& v) {
    Vec out(size_t(m.rows), Rat(0));
    for (int j = 0; j < m.cols; ++j) {
        if (v[size_t(j)] == 0) continue;
        for (int i = 0; i < m.rows; ++i) {
            const Rat& mv = m.at(i, j);
            if (mv != 0) out[size_t(i)] += mv * v[size_t(j)];
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

Rat trace(const Matrix& m) {
    Rat t;
    for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
    return t;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Matrix mat_pow(const Matrix& m, int e) {
    Matrix acc = Matrix::identity(m.rows);
    for (int i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

Rat det(const Matrix& m) {
    if (!m.is_square()) fail(ErrorKind::PreconditionViolated, "det of non-square matrix");
    Matrix w(m);
    int n = w.rows;
    Rat d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (w.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(w.at(piv, c), w.at(col, c));
            d = -d;
        }
        const Rat pv = w.at(col, col);
        d *= pv;
        for (int r = col + 1; r < n; ++r) {
            if (w.at(r, col) == 0) continue;
            Rat f = w.at(r, col) / pv;
            for (int c = col; c < n; ++c) w.at(r, c) -= f * w.at(col, c);
        }
    }
    return d;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) fail(ErrorKind::PreconditionViolated, "inverse of non-square matrix");
    int n = m.rows;
    Matrix w(m);
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (w.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) fail(ErrorKind::InternalInconsistency, "inverse of singular matrix");
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(w.at(piv, c), w.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        Rat pv = w.at(col, col);
        for (int c = 0; c < n; ++c) {
            w.at(col, c) /= pv;
            inv.at(col, c) /= pv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || w.at(r, col) == 0) continue;
            Rat f = w.at(r, col);
            for (int c = 0; c < n; ++c) {
                w.at(r, c) -= f * w.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

Vec vectorize(const Matrix& m) { return m.a; }

Matrix unvectorize(const Vec& v, int n) {
    Matrix m(n, n);
    m.a = v;
    return m;
}

std::string matrix_str(const Matrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows; ++i) {
        os << '[';
        for (int j = 0; j < m.cols; ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace lieder
