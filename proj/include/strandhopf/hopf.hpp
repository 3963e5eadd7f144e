#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "strandhopf/graph.hpp"
#include "strandhopf/iso.hpp"
#include "strandhopf/models.hpp"
#include "strandhopf/rational.hpp"

namespace strandhopf {

// Product of connected generators and formal residue inverses.
struct Monomial {
    std::vector<CanonicalCode> graphs;    // sorted
    std::vector<CanonicalCode> inverses;  // sorted, disjoint from graphs after cancellation

    auto operator<=>(const Monomial&) const = default;
    bool is_unit() const { return graphs.empty() && inverses.empty(); }
    std::string str() const;  // "1", or factors joined by " * ", inverses as "(code)^-1"
};

Monomial make_monomial(std::vector<CanonicalCode> graphs, std::vector<CanonicalCode> inverses = {});
Monomial monomial_of(const TwoGraph& g);  // one factor per connected component
Monomial operator*(const Monomial& a, const Monomial& b);
bool code_has_edges(const CanonicalCode& code);

struct AlgebraElement {
    std::map<Monomial, Rational> terms;

    static AlgebraElement of(const Monomial& m, const Rational& q = 1);
    static AlgebraElement of(const TwoGraph& g) { return of(monomial_of(g)); }
    bool is_zero() const { return terms.empty(); }
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& add(const Monomial& m, const Rational& q);
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
    std::string str() const;
};

AlgebraElement unit(const Rational& q = 1);
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rational& q);

struct TensorElement {
    std::map<std::pair<Monomial, Monomial>, Rational> terms;
    void add(const Monomial& l, const Monomial& r, const Rational& q);
    bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

using TripleTensor = std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>;

TensorElement coproduct(const AlgebraElement& x);
TensorElement coproduct_generator(const CanonicalCode& code);  // memoized
TensorElement tensor_product(const TensorElement& a, const TensorElement& b);
Rational counit(const Monomial& m);
Rational counit(const AlgebraElement& x);
AlgebraElement antipode(const AlgebraElement& x);
AlgebraElement antipode_generator(const CanonicalCode& code);  // memoized
AlgebraElement antipode(const TwoGraph& g);

TripleTensor coproduct_then_left(const TensorElement& t);   // (Delta x id)
TripleTensor coproduct_then_right(const TensorElement& t);  // (id x Delta)
AlgebraElement counit_left(const TensorElement& t);         // (eps x id)
AlgebraElement counit_right(const TensorElement& t);        // (id x eps)
AlgebraElement antipode_left_identity(const AlgebraElement& x);   // m (S x id) Delta
AlgebraElement antipode_right_identity(const AlgebraElement& x);  // m (id x S) Delta

void clear_hopf_caches();

// ---- Laurent polynomials in one regulator -------------------------------

struct Laurent {
    std::map<int, Rational> coeff;  // exponent -> coefficient, zeros pruned

    static Laurent constant(const Rational& q);
    static Laurent monomial(int exponent, const Rational& q = 1);
    Laurent& operator+=(const Laurent& o);
    bool operator==(const Laurent& o) const { return coeff == o.coeff; }
    bool has_pole() const { return !coeff.empty() && coeff.begin()->first < 0; }
    std::string str() const;
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent pole_part(const Laurent& x);

// Algebra homomorphism into Laurent polynomials; residues and inverses go to 1.
struct Character {
    std::function<Laurent(const CanonicalCode&)> on_generator;  // connected graphs with edges
    Laurent eval(const Monomial& m) const;
    Laurent eval(const AlgebraElement& x) const;
};

struct RotaBaxterOp {
    std::function<Laurent(const Laurent&)> apply;
};

RotaBaxterOp pole_part_operator();
RotaBaxterOp zero_operator();

using LinearMap = std::function<Laurent(const Monomial&)>;
LinearMap as_map(const Character& phi);
LinearMap unit_counit_map();  // u o eps
Laurent convolve(const LinearMap& f, const LinearMap& g, const AlgebraElement& x);
LinearMap character_inverse(const Character& phi);  // phi o S

// Counterterm recursion for one (phi, R) pair, memoized by canonical code.
class Renormalizer {
public:
    Renormalizer(Character phi, RotaBaxterOp R) : phi_(std::move(phi)), R_(std::move(R)) {}
    Laurent counterterm(const Monomial& m);
    Laurent counterterm(const TwoGraph& g) { return counterterm(monomial_of(g)); }
    Laurent renormalized(const Monomial& m);
    Laurent renormalized(const TwoGraph& g) { return renormalized(monomial_of(g)); }
    const Character& character() const { return phi_; }

private:
    Laurent counterterm_generator(const CanonicalCode& code);
    Character phi_;
    RotaBaxterOp R_;
    std::map<CanonicalCode, Laurent> cache_;
};

// phi(G) = z^-(w+1) for superficial degree w >= 0 on graphs with edges, else 1.
std::pair<Character, RotaBaxterOp> toy_ms_character(const Theory& t);

}  // namespace strandhopf
