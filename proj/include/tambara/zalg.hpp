#pragma once

#include "tambara/integer.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tambara {

// ---- integer matrices ----

// Canonical row Hermite normal form: pivots move strictly right, are
// positive, and entries above a pivot lie in [0, pivot). Zero rows dropped.
Mat hnf(Mat m, size_t cols);

struct SmithForm {
    Vec diagonal;   // nonzero invariant factors d_1 | d_2 | ...
    Mat col_transform;     // Q, unimodular: rowspan(M) * Q = rowspan(diag)
    Mat col_transform_inv; // Q^{-1}
};
SmithForm smith(const Mat& m, size_t cols);

// integer left kernel {v : v * m = 0}, as an HNF basis
Mat left_kernel(const Mat& m, size_t rows, size_t cols);

// ---- algebras ----

// A ring homomorphism to Z/modulus (modulus 0 means Z).
struct Character {
    std::string name;
    Vec values; // image of each basis element
    Int modulus{0};
};

struct Algebra {
    std::string name;
    std::vector<std::string> basis_names;
    std::vector<std::vector<Vec>> mult; // mult[i][j] = b_i * b_j
    Vec unit;
    Vec moduli; // 0 for a free coordinate
    std::vector<Character> characters;

    size_t rank() const { return basis_names.size(); }
    bool has_torsion() const;
    Vec reduce(Vec v) const;
    Vec one() const { return unit; }
    Vec zero() const { return zero_vec(rank()); }
    Vec basis(size_t i) const { return unit_vec(rank(), i); }
    Vec mul(const Vec& a, const Vec& b) const;
    Vec add(const Vec& a, const Vec& b) const { return reduce(a + b); }
    Vec sub(const Vec& a, const Vec& b) const { return reduce(a - b); }
    Vec scale(const Int& s, const Vec& a) const { return reduce(s * a); }
    Vec pow(const Vec& a, unsigned e) const;
    Vec scalar(const Int& s) const { return reduce(s * unit); }
    bool equal(const Vec& a, const Vec& b) const { return reduce(a) == reduce(b); }
    Int evaluate(const Character& c, const Vec& x) const;
    std::string format(const Vec& v) const;
    // relation rows m_i e_i for torsion coordinates
    Mat relations() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(std::string name, std::vector<std::string> basis_names, std::vector<std::vector<Vec>> mult, Vec unit,
                        std::vector<Character> characters = {}, Vec moduli = {});
AlgebraPtr integers();

// associativity, commutativity, unit law on all basis triples
std::optional<std::string> check_algebra(const Algebra& a);

// ---- submodules ----

class Submodule {
public:
    Submodule() = default;
    // additive span of the rows (plus the torsion relations of alg)
    Submodule(AlgebraPtr alg, const Mat& generators);

    static Submodule zero(AlgebraPtr alg) { return Submodule(std::move(alg), {}); }
    static Submodule whole(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const Mat& basis() const { return basis_; }
    size_t rank() const { return basis_.size(); }

    bool member(const Vec& v) const;
    // coefficients c with c * basis == v, if v is a member
    std::optional<Vec> coordinates(const Vec& v) const;
    bool contains(const Submodule& o) const;
    bool is_unit_ideal() const;
    bool is_absorbing() const;
    // the generators without the torsion relation rows
    Mat generators() const;

    bool operator==(const Submodule& o) const { return basis_ == o.basis_; }
    bool operator!=(const Submodule& o) const { return !(*this == o); }
    std::string str() const { return to_string(basis_); }
    std::string describe() const;

private:
    AlgebraPtr alg_;
    Mat basis_;
};

Submodule ideal_from_generators(AlgebraPtr alg, const Mat& gens);
Submodule ideal_closure(const Submodule& s);
Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);
bool equal(const Submodule& a, const Submodule& b);
bool member(const Submodule& s, const Vec& v);
bool is_unit_ideal(const Submodule& s);

// Additive map given by a matrix whose row i is the image of basis element i.
struct LinearMap {
    AlgebraPtr domain;
    AlgebraPtr codomain;
    Mat matrix;
    bool additive = true;

    Vec operator()(const Vec& v) const;
};

Submodule preimage(const LinearMap& f, const Submodule& s);
Submodule image(const LinearMap& f, const Submodule& s);
Submodule kernel(const LinearMap& f);

// ---- derived algebras ----

struct Quotient {
    AlgebraPtr algebra;
    LinearMap map;           // R -> R / S
    Mat lift;                // quotient basis element j lifts to row j
};
Quotient quotient_algebra(const Submodule& s, std::string name = {});

struct FixedSubring {
    AlgebraPtr algebra;
    LinearMap inclusion;
};
// fixed points of the automorphism x -> x * action
FixedSubring fixed_subring(AlgebraPtr alg, const Mat& action, std::string name = {});

AlgebraPtr product_algebra(AlgebraPtr a, AlgebraPtr b, std::string name = {});

// ---- symbolic elements ----

// Integer polynomial in the formal symbol q, ascending coefficients.
using QPoly = std::vector<Int>;
Int eval(const QPoly& f, const Int& q);

struct SymElement {
    std::vector<QPoly> coeffs;
    Vec eval(const Int& q) const;
};

// Parses expressions such as "u - p*t", "q", "t-p^2" over the basis names of
// alg; p is substituted, q stays symbolic. Integer literals are scalars.
SymElement parse_element(const Algebra& alg, const std::string& text, const Int& p);
// comma separated generators; "1" is the unit ideal, "0" the zero ideal
std::vector<SymElement> parse_generators(const Algebra& alg, const std::string& text, const Int& p);

} // namespace tambara
