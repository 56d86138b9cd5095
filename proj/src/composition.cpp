#include "trialis/composition.hpp"

#include <map>

namespace trialis {

// ---- AlgebraElement ----

AlgebraElement::AlgebraElement(AlgPtr alg, Vec coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) {
    if (!alg_ || c_.size() != alg_->dim()) throw AlgebraError("coefficient length does not match algebra");
}

namespace {
void same_alg(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra() != b.algebra()) throw AlgebraError("elements of different algebras");
}
}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    same_alg(*this, o);
    Vec r = c_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return {alg_, r};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator-() const { return scaled(-1); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    same_alg(*this, o);
    return {alg_, alg_->multiply(c_, o.c_)};
}

AlgebraElement AlgebraElement::scaled(const Q& s) const {
    Vec r = c_;
    for (auto& x : r) x *= s;
    return {alg_, r};
}

bool AlgebraElement::operator==(const AlgebraElement& o) const { return alg_ == o.alg_ && c_ == o.c_; }

bool AlgebraElement::is_zero() const {
    for (auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

AlgebraElement conjugate(const AlgebraElement& x) { return {x.algebra(), x.algebra()->conjugate(x.coeffs())}; }
Q norm(const AlgebraElement& x) { return x.algebra()->norm(x.coeffs()); }
AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
    return (x * y) * z - x * (y * z);
}
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) { return x * y - y * x; }

// ---- CompositionAlgebra ----

namespace {

std::string name_for(const std::vector<int>& s) {
    static const std::map<std::vector<int>, std::string> names = {
        {{}, "R"},         {{-1}, "C"},        {{-1, -1}, "H"},   {{-1, -1, -1}, "O"},
        {{1}, "Cs"},       {{1, -1}, "Hs"},    {{-1, -1, 1}, "Os"}};
    auto it = names.find(s);
    if (it != names.end()) return it->second;
    std::string r = "CD(";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::string(s[i] < 0 ? "-" : "+");
    return r + ")";
}

}  // namespace

AlgPtr CompositionAlgebra::reals() {
    auto a = std::shared_ptr<CompositionAlgebra>(new CompositionAlgebra());
    a->n_ = 1;
    a->name_ = "R";
    a->table_ = {{0, 1}};
    a->conj_ = {1};
    return a;
}

AlgPtr CompositionAlgebra::cayley_dickson_double(const AlgPtr& base, bool split_step) {
    if (base->dim() > 4) throw AlgebraError("doubling past dimension 8 is not supported");
    std::size_t n = base->dim();
    int s = split_step ? 1 : -1;
    auto a = std::shared_ptr<CompositionAlgebra>(new CompositionAlgebra());
    a->n_ = 2 * n;
    a->signs_ = base->signs_;
    a->signs_.push_back(s);
    a->table_.resize(4 * n * n);
    // (x,y)(z,t) = (xz + s t conj(y), conj(x) t + z y)
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) {
            Entry r;
            if (i < n && j < n) {
                r = base->mul(i, j);
            } else if (i < n) {
                Entry m = base->mul(i, j - n);
                r = {n + m.k, m.sign * base->conj_sign(i)};
            } else if (j < n) {
                Entry m = base->mul(j, i - n);
                r = {n + m.k, m.sign};
            } else {
                Entry m = base->mul(j - n, i - n);
                r = {m.k, m.sign * s * base->conj_sign(i - n)};
            }
            a->table_[i * 2 * n + j] = r;
        }
    a->conj_ = base->conj_;
    for (std::size_t i = 0; i < n; ++i) a->conj_.push_back(-1);
    if (a->n_ == 4) {
        // basis normalisation e3 = e1 e2
        Entry m = a->mul(1, 2);
        if (m.k == 3 && m.sign < 0) {
            std::vector<int> f = {1, 1, 1, -1};
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    Entry& e = a->table_[i * 4 + j];
                    e.sign *= f[i] * f[j] * f[e.k];
                }
        }
    }
    a->name_ = name_for(a->signs_);
    return a;
}

AlgPtr CompositionAlgebra::from_signs(const std::vector<int>& signs) {
    if (signs.size() > 3) throw AlgebraError("doubling past dimension 8 is not supported");
    AlgPtr a = reals();
    for (int s : signs) {
        if (s != 1 && s != -1) throw AlgebraError("doubling sign must be +1 or -1");
        a = cayley_dickson_double(a, s == 1);
    }
    return a;
}

AlgPtr CompositionAlgebra::named(const std::string& name) {
    static const std::map<std::string, std::vector<int>> sig = {
        {"R", {}},        {"C", {-1}},      {"H", {-1, -1}},   {"O", {-1, -1, -1}},
        {"Cs", {1}},      {"Hs", {1, -1}},  {"Os", {-1, -1, 1}}};
    static std::map<std::string, AlgPtr> cache;
    auto it = sig.find(name);
    if (it == sig.end()) throw AlgebraError("unknown algebra name: " + name);
    auto c = cache.find(name);
    if (c != cache.end()) return c->second;
    auto a = from_signs(it->second);
    cache[name] = a;
    return a;
}

std::vector<std::string> algebra_names() { return {"R", "C", "H", "O", "Cs", "Hs", "Os"}; }

bool CompositionAlgebra::is_split() const {
    for (int s : signs_)
        if (s > 0) return true;
    return false;
}

Vec CompositionAlgebra::e(std::size_t i) const {
    Vec v(n_);
    v.at(i) = 1;
    return v;
}

AlgebraElement CompositionAlgebra::basis(std::size_t i) const { return {shared_from_this(), e(i)}; }
AlgebraElement CompositionAlgebra::element(const Vec& c) const { return {shared_from_this(), c}; }

Vec CompositionAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw AlgebraError("multiply: length mismatch");
    Vec r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (sgn(y[j]) == 0) continue;
            Entry m = mul(i, j);
            if (m.sign > 0) r[m.k] += x[i] * y[j];
            else r[m.k] -= x[i] * y[j];
        }
    }
    return r;
}

Vec CompositionAlgebra::conjugate(const Vec& x) const {
    Vec r = x;
    for (std::size_t i = 0; i < n_; ++i)
        if (conj_[i] < 0) r[i] = -r[i];
    return r;
}

Q CompositionAlgebra::norm(const Vec& x) const { return multiply(x, conjugate(x))[0]; }

Q CompositionAlgebra::polar(const Vec& x, const Vec& y) const {
    return multiply(x, conjugate(y))[0] + multiply(y, conjugate(x))[0];
}

Matrix CompositionAlgebra::norm_form() const {
    Matrix g(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) g(i, j) = polar(e(i), e(j)) / 2;
    return g;
}

Subspace CompositionAlgebra::imaginary_part_basis() const {
    std::vector<Vec> vs;
    Matrix c = conj_matrix();
    for (std::size_t i = 0; i < n_; ++i) c(i, i) += 1;
    return Subspace::span(n_, solve_kernel(c));
}

Matrix CompositionAlgebra::left_mult(const Vec& z) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vec c = multiply(z, e(j));
        for (std::size_t i = 0; i < n_; ++i) m(i, j) = c[i];
    }
    return m;
}

Matrix CompositionAlgebra::right_mult(const Vec& z) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vec c = multiply(e(j), z);
        for (std::size_t i = 0; i < n_; ++i) m(i, j) = c[i];
    }
    return m;
}

Matrix CompositionAlgebra::conj_matrix() const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) m(i, i) = conj_[i];
    return m;
}

Vec CompositionAlgebra::associator(const Vec& x, const Vec& y, const Vec& z) const {
    Vec a = multiply(multiply(x, y), z), b = multiply(x, multiply(y, z));
    for (std::size_t i = 0; i < n_; ++i) a[i] -= b[i];
    return a;
}

Vec CompositionAlgebra::commutator(const Vec& x, const Vec& y) const {
    Vec a = multiply(x, y), b = multiply(y, x);
    for (std::size_t i = 0; i < n_; ++i) a[i] -= b[i];
    return a;
}

}  // namespace trialis
