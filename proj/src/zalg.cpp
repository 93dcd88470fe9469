#include "tambara/zalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tambara {

// ---------------------------------------------------------------- matrices

namespace {

void axpy_row(Vec& dst, const Int& q, const Vec& src) {
    if (q.is_zero()) return;
    for (size_t j = 0; j < dst.size(); ++j)
        if (!src[j].is_zero()) dst[j] -= q * src[j];
}

size_t pivot_col(const Vec& row) {
    for (size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) return j;
    return row.size();
}

} // namespace

Mat hnf(Mat m, size_t cols) {
    std::erase_if(m, [](const Vec& r) { return is_zero(r); });
    for (auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("hnf: ragged matrix");
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        bool found = false;
        while (true) {
            size_t best = m.size();
            for (size_t i = r; i < m.size(); ++i)
                if (!m[i][c].is_zero() && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
            if (best == m.size()) break;
            found = true;
            std::swap(m[r], m[best]);
            bool clean = true;
            for (size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c].is_zero()) continue;
                axpy_row(m[i], floor_div(m[i][c], m[r][c]), m[r]);
                if (!m[i][c].is_zero()) clean = false;
            }
            if (clean) break;
        }
        if (!found) continue;
        if (m[r][c].sign() < 0)
            for (auto& x : m[r]) x = -x;
        for (size_t i = 0; i < r; ++i) axpy_row(m[i], floor_div(m[i][c], m[r][c]), m[r]);
        ++r;
    }
    m.resize(r);
    return m;
}

SmithForm smith(const Mat& input, size_t cols) {
    Mat a = hnf(input, cols);
    size_t rows = a.size();
    Mat Q = identity_mat(cols), Qi = identity_mat(cols);
    auto col_op = [&](size_t j, size_t t, const Int& q) { // col_j -= q col_t
        if (q.is_zero()) return;
        for (auto& row : a) row[j] -= q * row[t];
        for (auto& row : Q) row[j] -= q * row[t];
        for (size_t k = 0; k < cols; ++k) Qi[t][k] += q * Qi[j][k];
    };
    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : Q) std::swap(row[i], row[j]);
        std::swap(Qi[i], Qi[j]);
    };
    for (size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            size_t bi = rows, bj = cols;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (!a[i][j].is_zero() && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
            if (bi == rows) break;
            std::swap(a[t], a[bi]);
            col_swap(t, bj);
            bool done = true;
            for (size_t i = t + 1; i < rows; ++i) {
                axpy_row(a[i], floor_div(a[i][t], a[t][t]), a[t]);
                if (!a[i][t].is_zero()) done = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                col_op(j, t, floor_div(a[t][j], a[t][t]));
                if (!a[t][j].is_zero()) done = false;
            }
            if (!done) continue;
            size_t bad = rows;
            for (size_t i = t + 1; i < rows && bad == rows; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (!divides(a[t][t], a[i][j])) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            for (size_t j = 0; j < cols; ++j) a[t][j] += a[bad][j];
        }
        if (a[t][t].sign() < 0)
            for (auto& x : a[t]) x = -x;
    }
    SmithForm out;
    for (size_t t = 0; t < std::min(rows, cols); ++t)
        if (!a[t][t].is_zero()) out.diagonal.push_back(a[t][t]);
    out.col_transform = std::move(Q);
    out.col_transform_inv = std::move(Qi);
    return out;
}

Mat left_kernel(const Mat& m, size_t rows, size_t cols) {
    Mat aug;
    for (size_t i = 0; i < rows; ++i) {
        Vec row = m[i];
        row.resize(cols);
        for (size_t k = 0; k < rows; ++k) row.push_back(Int(i == k ? 1 : 0));
        aug.push_back(std::move(row));
    }
    Mat h = hnf(aug, cols + rows);
    Mat out;
    for (const auto& row : h)
        if (pivot_col(row) >= cols) out.emplace_back(row.begin() + static_cast<long>(cols), row.end());
    return hnf(out, rows);
}

// ---------------------------------------------------------------- algebras

bool Algebra::has_torsion() const {
    return std::any_of(moduli.begin(), moduli.end(), [](const Int& m) { return !m.is_zero(); });
}

Vec Algebra::reduce(Vec v) const {
    for (size_t i = 0; i < moduli.size(); ++i)
        if (!moduli[i].is_zero()) v[i] = floor_mod(v[i], moduli[i]);
    return v;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    size_t r = rank();
    Vec out = zero_vec(r);
    for (size_t i = 0; i < r; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < r; ++j) {
            if (b[j].is_zero()) continue;
            Int c = a[i] * b[j];
            const Vec& m = mult[i][j];
            for (size_t k = 0; k < r; ++k)
                if (!m[k].is_zero()) out[k] += c * m[k];
        }
    }
    return reduce(std::move(out));
}

Vec Algebra::pow(const Vec& a, unsigned e) const {
    Vec result = unit, b = a;
    while (e > 0) {
        if (e & 1u) result = mul(result, b);
        e >>= 1u;
        if (e > 0) b = mul(b, b);
    }
    return result;
}

Int Algebra::evaluate(const Character& c, const Vec& x) const {
    Int s(0);
    for (size_t i = 0; i < rank(); ++i) s += x[i] * c.values[i];
    return c.modulus.is_zero() ? s : floor_mod(s, c.modulus);
}

std::string Algebra::format(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < rank(); ++i) {
        if (v[i].is_zero()) continue;
        Int c = v[i];
        bool neg = c.sign() < 0;
        Int a = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        const std::string& nm = basis_names[i];
        if (nm == "1")
            os << a;
        else if (a.is_one())
            os << nm;
        else
            os << a << nm;
        first = false;
    }
    return first ? "0" : os.str();
}

Mat Algebra::relations() const {
    Mat out;
    for (size_t i = 0; i < moduli.size(); ++i)
        if (!moduli[i].is_zero()) out.push_back(moduli[i] * unit_vec(rank(), i));
    return out;
}

AlgebraPtr make_algebra(std::string name, std::vector<std::string> basis_names, std::vector<std::vector<Vec>> mult, Vec unit,
                        std::vector<Character> characters, Vec moduli) {
    auto a = std::make_shared<Algebra>();
    size_t r = basis_names.size();
    if (mult.size() != r || unit.size() != r) throw std::invalid_argument("make_algebra: size mismatch");
    if (moduli.empty()) moduli = zero_vec(r);
    a->name = std::move(name);
    a->basis_names = std::move(basis_names);
    a->mult = std::move(mult);
    a->moduli = std::move(moduli);
    a->unit = a->reduce(std::move(unit));
    a->characters = std::move(characters);
    return a;
}

AlgebraPtr integers() {
    static AlgebraPtr z = make_algebra("Z", {"1"}, {{to_vec({1})}}, to_vec({1}), {Character{"id", to_vec({1}), Int(0)}});
    return z;
}

std::optional<std::string> check_algebra(const Algebra& a) {
    size_t r = a.rank();
    for (size_t i = 0; i < r; ++i) {
        if (!a.equal(a.mul(a.unit, a.basis(i)), a.basis(i))) return "unit law fails at " + a.basis_names[i];
        for (size_t j = 0; j < r; ++j) {
            if (!a.equal(a.mul(a.basis(i), a.basis(j)), a.mul(a.basis(j), a.basis(i))))
                return "not commutative at " + a.basis_names[i] + "," + a.basis_names[j];
            for (size_t k = 0; k < r; ++k) {
                Vec lhs = a.mul(a.mul(a.basis(i), a.basis(j)), a.basis(k));
                Vec rhs = a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k)));
                if (!a.equal(lhs, rhs))
                    return "not associative at " + a.basis_names[i] + "," + a.basis_names[j] + "," + a.basis_names[k];
            }
        }
    }
    for (const auto& c : a.characters)
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                Int lhs = a.evaluate(c, a.mul(a.basis(i), a.basis(j)));
                Int rhs = a.evaluate(c, a.basis(i)) * a.evaluate(c, a.basis(j));
                if (!c.modulus.is_zero()) rhs = floor_mod(rhs, c.modulus);
                if (lhs != rhs) return "character " + c.name + " is not multiplicative";
            }
    return std::nullopt;
}

// ---------------------------------------------------------------- submodules

Submodule::Submodule(AlgebraPtr alg, const Mat& generators) : alg_(std::move(alg)) {
    Mat rows = alg_->relations();
    for (const auto& g : generators) {
        if (g.size() != alg_->rank()) throw std::invalid_argument("generator has wrong length");
        rows.push_back(g);
    }
    basis_ = hnf(std::move(rows), alg_->rank());
}

Submodule Submodule::whole(AlgebraPtr alg) {
    size_t r = alg->rank();
    return Submodule(std::move(alg), identity_mat(r));
}

std::optional<Vec> Submodule::coordinates(const Vec& v) const {
    Vec w = v;
    Vec coeff = zero_vec(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) {
        size_t c = pivot_col(basis_[i]);
        const Int& piv = basis_[i][c];
        if (w[c].is_zero()) continue;
        if (!divides(piv, w[c])) return std::nullopt;
        Int q = w[c] / piv;
        coeff[i] = q;
        axpy_row(w, q, basis_[i]);
    }
    if (!is_zero(w)) return std::nullopt;
    return coeff;
}

bool Submodule::member(const Vec& v) const { return coordinates(v).has_value(); }

bool Submodule::contains(const Submodule& o) const {
    for (const auto& row : o.basis_)
        if (!member(row)) return false;
    return true;
}

bool Submodule::is_unit_ideal() const { return member(alg_->unit); }

bool Submodule::is_absorbing() const {
    for (const auto& row : basis_)
        for (size_t j = 0; j < alg_->rank(); ++j)
            if (!member(alg_->mul(row, alg_->basis(j)))) return false;
    return true;
}

Mat Submodule::generators() const {
    Submodule rel(alg_, {});
    Mat out;
    for (const auto& row : basis_)
        if (!rel.member(row)) out.push_back(row);
    return out;
}

std::string Submodule::describe() const {
    if (is_unit_ideal()) return "(1)";
    Mat g = generators();
    if (g.empty()) return "(0)";
    std::string s = "<";
    for (size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + alg_->format(g[i]);
    return s + ">";
}

Submodule ideal_from_generators(AlgebraPtr alg, const Mat& gens) {
    Mat rows;
    for (const auto& g : gens)
        for (size_t j = 0; j < alg->rank(); ++j) rows.push_back(alg->mul(g, alg->basis(j)));
    return Submodule(std::move(alg), rows);
}

Submodule ideal_closure(const Submodule& s) { return ideal_from_generators(s.algebra(), s.basis()); }

namespace {

void require_same(const Submodule& a, const Submodule& b) {
    if (a.algebra() != b.algebra() && a.algebra()->rank() != b.algebra()->rank())
        throw std::invalid_argument("submodules live in different algebras");
}

} // namespace

Submodule sum(const Submodule& a, const Submodule& b) {
    require_same(a, b);
    Mat rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Submodule(a.algebra(), rows);
}

Submodule intersect(const Submodule& a, const Submodule& b) {
    require_same(a, b);
    size_t r = a.algebra()->rank();
    Mat stacked;
    for (const auto& row : a.basis()) {
        Vec v = row;
        v.insert(v.end(), row.begin(), row.end());
        stacked.push_back(std::move(v));
    }
    for (const auto& row : b.basis()) {
        Vec v = row;
        v.resize(2 * r, Int(0));
        stacked.push_back(std::move(v));
    }
    Mat h = hnf(stacked, 2 * r);
    Mat out;
    for (const auto& row : h)
        if (pivot_col(row) >= r) out.emplace_back(row.begin() + static_cast<long>(r), row.end());
    return Submodule(a.algebra(), out);
}

bool equal(const Submodule& a, const Submodule& b) {
    require_same(a, b);
    return a == b;
}

bool member(const Submodule& s, const Vec& v) { return s.member(v); }
bool is_unit_ideal(const Submodule& s) { return s.is_unit_ideal(); }

Vec LinearMap::operator()(const Vec& v) const { return codomain->reduce(apply(matrix, v, codomain->rank())); }

Submodule preimage(const LinearMap& f, const Submodule& s) {
    if (!f.additive) throw std::invalid_argument("preimage requires an additive map");
    size_t m = f.domain->rank(), n = f.codomain->rank();
    Mat stacked;
    for (size_t i = 0; i < m; ++i) {
        Vec v = f.matrix[i];
        for (size_t k = 0; k < m; ++k) v.push_back(Int(i == k ? 1 : 0));
        stacked.push_back(std::move(v));
    }
    for (const auto& row : s.basis()) {
        Vec v = row;
        v.resize(n + m, Int(0));
        stacked.push_back(std::move(v));
    }
    Mat h = hnf(stacked, n + m);
    Mat out;
    for (const auto& row : h)
        if (pivot_col(row) >= n) out.emplace_back(row.begin() + static_cast<long>(n), row.end());
    return Submodule(f.domain, out);
}

Submodule image(const LinearMap& f, const Submodule& s) {
    Mat rows;
    for (const auto& row : s.basis()) rows.push_back(f(row));
    return Submodule(f.codomain, rows);
}

Submodule kernel(const LinearMap& f) { return preimage(f, Submodule::zero(f.codomain)); }

// ---------------------------------------------------------------- derived algebras

Quotient quotient_algebra(const Submodule& s, std::string name) {
    const Algebra& R = *s.algebra();
    size_t r = R.rank();
    SmithForm sf = smith(s.basis(), r);
    std::vector<size_t> kept;
    Vec mods;
    for (size_t i = 0; i < r; ++i) {
        Int d = i < sf.diagonal.size() ? sf.diagonal[i] : Int(0);
        if (d.is_one()) continue;
        kept.push_back(i);
        mods.push_back(d);
    }
    size_t k = kept.size();
    auto to_quot = [&](const Vec& v) {
        Vec y = apply(sf.col_transform, v, r);
        Vec out(k);
        for (size_t j = 0; j < k; ++j) out[j] = mods[j].is_zero() ? y[kept[j]] : floor_mod(y[kept[j]], mods[j]);
        return out;
    };
    Mat lift;
    for (size_t j = 0; j < k; ++j) lift.push_back(sf.col_transform_inv[kept[j]]);
    std::vector<std::string> names;
    for (size_t j = 0; j < k; ++j) {
        std::string nm = "e" + std::to_string(j);
        for (size_t i = 0; i < r; ++i)
            if (lift[j] == R.basis(i)) nm = R.basis_names[i];
        if (lift[j] == R.unit) nm = "1";
        names.push_back(nm);
    }
    std::vector<std::vector<Vec>> mult(k, std::vector<Vec>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) mult[i][j] = to_quot(R.mul(lift[i], lift[j]));
    std::vector<Character> chars;
    for (const auto& c : R.characters) {
        Int g = c.modulus;
        for (const auto& row : s.basis()) g = gcd(g, R.evaluate(c, row));
        if (g.is_one()) continue;
        Character q{c.name, {}, g};
        for (size_t j = 0; j < k; ++j) q.values.push_back(g.is_zero() ? R.evaluate(c, lift[j]) : floor_mod(R.evaluate(c, lift[j]), g));
        chars.push_back(std::move(q));
    }
    Mat map;
    for (size_t i = 0; i < r; ++i) map.push_back(to_quot(R.basis(i)));
    auto Q = make_algebra(name.empty() ? R.name + "/I" : std::move(name), names, mult, to_quot(R.unit), chars, mods);
    return {Q, LinearMap{s.algebra(), Q, map}, lift};
}

FixedSubring fixed_subring(AlgebraPtr alg, const Mat& action, std::string name) {
    size_t r = alg->rank();
    if (action == identity_mat(r)) return {alg, LinearMap{alg, alg, identity_mat(r)}};
    if (alg->has_torsion()) throw std::invalid_argument("fixed subring of a torsion algebra is not supported");
    Mat diff = action;
    for (size_t i = 0; i < r; ++i) diff[i][i] -= Int(1);
    Mat B = left_kernel(diff, r, r);
    Submodule V(alg, B);
    size_t s = B.size();
    auto coords = [&](const Vec& v) {
        auto c = V.coordinates(v);
        if (!c) throw std::logic_error("fixed subring is not closed under multiplication");
        return *c;
    };
    std::vector<std::vector<Vec>> mult(s, std::vector<Vec>(s));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) mult[i][j] = coords(alg->mul(B[i], B[j]));
    std::vector<std::string> names;
    for (size_t i = 0; i < s; ++i) names.push_back(B[i] == alg->unit ? "1" : "f" + std::to_string(i));
    std::vector<Character> chars;
    for (const auto& c : alg->characters) {
        Character f{c.name, {}, c.modulus};
        for (const auto& b : B) f.values.push_back(alg->evaluate(c, b));
        chars.push_back(std::move(f));
    }
    auto F = make_algebra(name.empty() ? alg->name + "^W" : std::move(name), names, mult, coords(alg->unit), chars);
    return {F, LinearMap{F, alg, B}};
}

AlgebraPtr product_algebra(AlgebraPtr a, AlgebraPtr b, std::string name) {
    size_t ra = a->rank(), rb = b->rank(), r = ra + rb;
    std::vector<std::string> names;
    for (const auto& n : a->basis_names) names.push_back(n == "1" ? "(1,0)" : "(" + n + ",0)");
    for (const auto& n : b->basis_names) names.push_back(n == "1" ? "(0,1)" : "(0," + n + ")");
    std::vector<std::vector<Vec>> mult(r, std::vector<Vec>(r, zero_vec(r)));
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < ra; ++j)
            for (size_t k = 0; k < ra; ++k) mult[i][j][k] = a->mult[i][j][k];
    for (size_t i = 0; i < rb; ++i)
        for (size_t j = 0; j < rb; ++j)
            for (size_t k = 0; k < rb; ++k) mult[ra + i][ra + j][ra + k] = b->mult[i][j][k];
    Vec unit = a->unit;
    unit.insert(unit.end(), b->unit.begin(), b->unit.end());
    Vec mods = a->moduli;
    mods.insert(mods.end(), b->moduli.begin(), b->moduli.end());
    std::vector<Character> chars;
    for (const auto& c : a->characters) {
        Character x{"pr1." + c.name, c.values, c.modulus};
        x.values.resize(r, Int(0));
        chars.push_back(std::move(x));
    }
    for (const auto& c : b->characters) {
        Character x{"pr2." + c.name, zero_vec(ra), c.modulus};
        x.values.insert(x.values.end(), c.values.begin(), c.values.end());
        chars.push_back(std::move(x));
    }
    return make_algebra(name.empty() ? a->name + " x " + b->name : std::move(name), names, mult, unit, chars, mods);
}

// ---------------------------------------------------------------- symbolic elements

Int eval(const QPoly& f, const Int& q) {
    Int s(0);
    for (size_t i = f.size(); i-- > 0;) s = s * q + f[i];
    return s;
}

Vec SymElement::eval(const Int& q) const {
    Vec v;
    for (const auto& c : coeffs) v.push_back(tambara::eval(c, q));
    return v;
}

namespace {

QPoly poly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

class Parser {
public:
    Parser(const Algebra& alg, const std::string& text, const Int& p) : alg_(alg), s_(text), p_(p) {}

    SymElement parse() {
        auto v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected input");
        return v;
    }

private:
    using Value = SymElement;

    Value scalar(const QPoly& c) const {
        Value v{std::vector<QPoly>(alg_.rank())};
        for (size_t i = 0; i < alg_.rank(); ++i)
            if (!alg_.unit[i].is_zero()) v.coeffs[i] = poly_mul(c, QPoly{alg_.unit[i]});
        return v;
    }

    Value add(const Value& a, const Value& b, bool negate) const {
        Value r = a;
        for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = poly_add(r.coeffs[i], negate ? poly_mul(b.coeffs[i], QPoly{Int(-1)}) : b.coeffs[i]);
        return r;
    }

    Value mul(const Value& a, const Value& b) const {
        size_t r = alg_.rank();
        Value out{std::vector<QPoly>(r)};
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                QPoly c = poly_mul(a.coeffs[i], b.coeffs[j]);
                if (c.empty()) continue;
                for (size_t k = 0; k < r; ++k)
                    if (!alg_.mult[i][j][k].is_zero()) out.coeffs[k] = poly_add(out.coeffs[k], poly_mul(c, QPoly{alg_.mult[i][j][k]}));
            }
        return out;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
    }

    Value expr() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        Value v = term();
        if (neg) v = add(scalar({}), v, true);
        while (true) {
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) return v;
            bool minus = s_[pos_++] == '-';
            v = add(v, term(), minus);
        }
    }

    Value term() {
        Value v = power();
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                v = mul(v, power());
                continue;
            }
            // implicit product such as "2t" or "pt"
            if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                v = mul(v, power());
                continue;
            }
            return v;
        }
    }

    Value power() {
        Value base = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent expected");
            int e = std::stoi(s_.substr(start, pos_ - start));
            Value r = scalar({Int(1)});
            for (int i = 0; i < e; ++i) r = mul(r, base);
            return r;
        }
        return base;
    }

    Value atom() {
        skip();
        if (pos_ >= s_.size()) fail("operand expected");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("')' expected");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return scalar({Int::parse(s_.substr(start, pos_ - start))});
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            // longest basis name match first, then p and q
            size_t best = 0, best_len = 0;
            for (size_t i = 0; i < alg_.rank(); ++i) {
                const auto& nm = alg_.basis_names[i];
                if (nm.size() > best_len && s_.compare(pos_, nm.size(), nm) == 0 && std::isalpha(static_cast<unsigned char>(nm[0])))
                    best = i, best_len = nm.size();
            }
            if (best_len > 0) {
                pos_ += best_len;
                Value v{std::vector<QPoly>(alg_.rank())};
                v.coeffs[best] = {Int(1)};
                return v;
            }
            if (c == 'p') {
                ++pos_;
                return scalar({p_});
            }
            if (c == 'q') {
                ++pos_;
                return scalar({Int(0), Int(1)});
            }
            fail("unknown symbol");
        }
        fail("unexpected character");
    }

    const Algebra& alg_;
    std::string s_;
    Int p_;
    size_t pos_ = 0;
};

} // namespace

SymElement parse_element(const Algebra& alg, const std::string& text, const Int& p) { return Parser(alg, text, p).parse(); }

std::vector<SymElement> parse_generators(const Algebra& alg, const std::string& text, const Int& p) {
    std::vector<SymElement> out;
    int depth = 0;
    std::string cur;
    for (char c : text + ",") {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_element(alg, cur, p));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

} // namespace tambara
