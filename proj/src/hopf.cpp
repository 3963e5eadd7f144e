#include "strandhopf/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "strandhopf/rewrite.hpp"

namespace strandhopf {

// ----------------------------------------------------------------- monomials

Monomial make_monomial(std::vector<CanonicalCode> graphs, std::vector<CanonicalCode> inverses) {
    std::sort(graphs.begin(), graphs.end());
    std::sort(inverses.begin(), inverses.end());
    Monomial m;
    // cancel r * r^-1 pairwise
    std::size_t i = 0, j = 0;
    while (i < graphs.size() || j < inverses.size()) {
        if (j == inverses.size() || (i < graphs.size() && graphs[i] < inverses[j])) {
            m.graphs.push_back(graphs[i++]);
        } else if (i == graphs.size() || inverses[j] < graphs[i]) {
            m.inverses.push_back(inverses[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    return m;
}

Monomial monomial_of(const TwoGraph& g) {
    std::vector<CanonicalCode> codes;
    for (const auto& c : connected_components(g)) codes.push_back(canonical_form(c));
    return make_monomial(std::move(codes));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    auto gs = a.graphs;
    gs.insert(gs.end(), b.graphs.begin(), b.graphs.end());
    auto is = a.inverses;
    is.insert(is.end(), b.inverses.begin(), b.inverses.end());
    return make_monomial(std::move(gs), std::move(is));
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::string s;
    for (auto& g : graphs) s += (s.empty() ? "" : " * ") + g;
    for (auto& r : inverses) s += (s.empty() ? "" : " * ") + ("(" + r + ")^-1");
    return s;
}

namespace {
std::mutex edge_mutex;
std::map<CanonicalCode, bool> edge_cache;
}  // namespace

bool code_has_edges(const CanonicalCode& code) {
    {
        std::lock_guard<std::mutex> lock(edge_mutex);
        auto it = edge_cache.find(code);
        if (it != edge_cache.end()) return it->second;
    }
    const bool e = num_edges(decode_two(code)) > 0;
    std::lock_guard<std::mutex> lock(edge_mutex);
    edge_cache[code] = e;
    return e;
}

// ------------------------------------------------------------------ elements

AlgebraElement AlgebraElement::of(const Monomial& m, const Rational& q) {
    AlgebraElement a;
    a.add(m, q);
    return a;
}

AlgebraElement& AlgebraElement::add(const Monomial& m, const Rational& q) {
    if (q == 0) return *this;
    auto [it, fresh] = terms.emplace(m, q);
    if (!fresh) {
        it->second += q;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (auto& [m, q] : o.terms) add(m, q);
    return *this;
}

std::string AlgebraElement::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& [m, q] : terms) s += (s.empty() ? "" : " + ") + q.str() + " [" + m.str() + "]";
    return s;
}

AlgebraElement unit(const Rational& q) { return AlgebraElement::of(Monomial{}, q); }

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (auto& [ma, qa] : a.terms)
        for (auto& [mb, qb] : b.terms) out.add(ma * mb, qa * qb);
    return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return product(a, b); }

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    out += b;
    return out;
}

AlgebraElement scale(const AlgebraElement& a, const Rational& q) {
    AlgebraElement out;
    for (auto& [m, c] : a.terms) out.add(m, c * q);
    return out;
}

void TensorElement::add(const Monomial& l, const Monomial& r, const Rational& q) {
    if (q == 0) return;
    auto [it, fresh] = terms.emplace(std::make_pair(l, r), q);
    if (!fresh) {
        it->second += q;
        if (it->second == 0) terms.erase(it);
    }
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (auto& [ka, qa] : a.terms)
        for (auto& [kb, qb] : b.terms) out.add(ka.first * kb.first, ka.second * kb.second, qa * qb);
    return out;
}

// ----------------------------------------------------------------- coproduct

namespace {
std::mutex coproduct_mutex;
std::map<CanonicalCode, TensorElement> coproduct_cache;
std::mutex antipode_mutex;
std::map<CanonicalCode, AlgebraElement> antipode_cache;
}  // namespace

void clear_hopf_caches() {
    std::lock_guard<std::mutex> a(coproduct_mutex);
    std::lock_guard<std::mutex> b(antipode_mutex);
    std::lock_guard<std::mutex> c(edge_mutex);
    coproduct_cache.clear();
    antipode_cache.clear();
    edge_cache.clear();
}

TensorElement coproduct_generator(const CanonicalCode& code) {
    {
        std::lock_guard<std::mutex> lock(coproduct_mutex);
        auto it = coproduct_cache.find(code);
        if (it != coproduct_cache.end()) return it->second;
    }
    const TwoGraph g = decode_two(code);
    TensorElement t;
    for (const auto& sub : subgraphs(g)) t.add(monomial_of(materialize(g, sub)), monomial_of(contract(g, sub)), 1);
    std::lock_guard<std::mutex> lock(coproduct_mutex);
    coproduct_cache.emplace(code, t);
    return t;
}

namespace {

TensorElement coproduct_monomial(const Monomial& m) {
    TensorElement acc;
    acc.add(Monomial{}, Monomial{}, 1);
    for (auto& g : m.graphs) acc = tensor_product(acc, coproduct_generator(g));
    for (auto& r : m.inverses) {
        TensorElement gl;  // group-like
        const Monomial inv = make_monomial({}, {r});
        gl.add(inv, inv, 1);
        acc = tensor_product(acc, gl);
    }
    return acc;
}

}  // namespace

TensorElement coproduct(const AlgebraElement& x) {
    TensorElement out;
    for (auto& [m, q] : x.terms)
        for (auto& [k, c] : coproduct_monomial(m).terms) out.add(k.first, k.second, q * c);
    return out;
}

Rational counit(const Monomial& m) {
    for (auto& g : m.graphs)
        if (code_has_edges(g)) return 0;
    return 1;
}

Rational counit(const AlgebraElement& x) {
    Rational s = 0;
    for (auto& [m, q] : x.terms) s += q * counit(m);
    return s;
}

// ------------------------------------------------------------------ antipode

AlgebraElement antipode_generator(const CanonicalCode& code) {
    {
        std::lock_guard<std::mutex> lock(antipode_mutex);
        auto it = antipode_cache.find(code);
        if (it != antipode_cache.end()) return it->second;
    }
    AlgebraElement result;
    const TwoGraph g = decode_two(code);
    if (num_edges(g) == 0) {
        result = AlgebraElement::of(make_monomial({}, {code}));
    } else {
        const auto subs = subgraphs(g);
        const std::uint64_t full = subs.back().mask;
        AlgebraElement sum;
        for (const auto& sub : subs) {
            if (sub.mask == full) continue;
            const AlgebraElement left = antipode(AlgebraElement::of(materialize(g, sub)));
            sum += left * AlgebraElement::of(contract(g, sub));
        }
        const auto res = canonical_form(residue(g));
        result = scale(sum * AlgebraElement::of(make_monomial({}, {res})), -1);
    }
    std::lock_guard<std::mutex> lock(antipode_mutex);
    antipode_cache.emplace(code, result);
    return result;
}

AlgebraElement antipode(const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [m, q] : x.terms) {
        AlgebraElement acc = unit(q);
        for (auto& g : m.graphs) acc = acc * antipode_generator(g);
        for (auto& r : m.inverses) acc = acc * AlgebraElement::of(make_monomial({r}));
        out += acc;
    }
    return out;
}

AlgebraElement antipode(const TwoGraph& g) { return antipode(AlgebraElement::of(g)); }

TripleTensor coproduct_then_left(const TensorElement& t) {
    TripleTensor out;
    for (auto& [k, q] : t.terms)
        for (auto& [k2, c] : coproduct_monomial(k.first).terms) {
            auto& slot = out[{k2.first, k2.second, k.second}];
            slot += q * c;
        }
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

TripleTensor coproduct_then_right(const TensorElement& t) {
    TripleTensor out;
    for (auto& [k, q] : t.terms)
        for (auto& [k2, c] : coproduct_monomial(k.second).terms) {
            auto& slot = out[{k.first, k2.first, k2.second}];
            slot += q * c;
        }
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

AlgebraElement counit_left(const TensorElement& t) {
    AlgebraElement out;
    for (auto& [k, q] : t.terms) out.add(k.second, q * counit(k.first));
    return out;
}

AlgebraElement counit_right(const TensorElement& t) {
    AlgebraElement out;
    for (auto& [k, q] : t.terms) out.add(k.first, q * counit(k.second));
    return out;
}

AlgebraElement antipode_left_identity(const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [k, q] : coproduct(x).terms)
        out += scale(antipode(AlgebraElement::of(k.first)) * AlgebraElement::of(k.second), q);
    return out;
}

AlgebraElement antipode_right_identity(const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [k, q] : coproduct(x).terms)
        out += scale(AlgebraElement::of(k.first) * antipode(AlgebraElement::of(k.second)), q);
    return out;
}

// ------------------------------------------------------------------- Laurent

Laurent Laurent::constant(const Rational& q) { return monomial(0, q); }

Laurent Laurent::monomial(int exponent, const Rational& q) {
    Laurent l;
    if (q != 0) l.coeff[exponent] = q;
    return l;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, q] : o.coeff) {
        auto& slot = coeff[e];
        slot += q;
        if (slot == 0) coeff.erase(e);
    }
    return *this;
}

std::string Laurent::str() const {
    if (coeff.empty()) return "0";
    std::string s;
    for (auto& [e, q] : coeff) {
        if (!s.empty()) s += " + ";
        s += q.str();
        if (e != 0) s += " z^" + std::to_string(e);
    }
    return s;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent out = a;
    out += b;
    return out;
}

Laurent operator-(const Laurent& a) {
    Laurent out;
    for (auto& [e, q] : a.coeff) out.coeff[e] = -q;
    return out;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (auto& [ea, qa] : a.coeff)
        for (auto& [eb, qb] : b.coeff) out += Laurent::monomial(ea + eb, qa * qb);
    return out;
}

Laurent pole_part(const Laurent& x) {
    Laurent out;
    for (auto& [e, q] : x.coeff)
        if (e < 0) out.coeff[e] = q;
    return out;
}

Laurent Character::eval(const Monomial& m) const {
    Laurent acc = Laurent::constant(1);
    for (auto& g : m.graphs)
        if (code_has_edges(g)) acc = acc * on_generator(g);
    return acc;
}

Laurent Character::eval(const AlgebraElement& x) const {
    Laurent out;
    for (auto& [m, q] : x.terms) out += Laurent::constant(q) * eval(m);
    return out;
}

RotaBaxterOp pole_part_operator() { return {[](const Laurent& x) { return pole_part(x); }}; }
RotaBaxterOp zero_operator() { return {[](const Laurent&) { return Laurent{}; }}; }

LinearMap as_map(const Character& phi) {
    return [phi](const Monomial& m) { return phi.eval(m); };
}

LinearMap unit_counit_map() {
    return [](const Monomial& m) { return Laurent::constant(counit(m)); };
}

Laurent convolve(const LinearMap& f, const LinearMap& g, const AlgebraElement& x) {
    Laurent out;
    for (auto& [k, q] : coproduct(x).terms) out += Laurent::constant(q) * f(k.first) * g(k.second);
    return out;
}

LinearMap character_inverse(const Character& phi) {
    return [phi](const Monomial& m) { return phi.eval(antipode(AlgebraElement::of(m))); };
}

// --------------------------------------------------------------- counterterm

Laurent Renormalizer::counterterm_generator(const CanonicalCode& code) {
    auto it = cache_.find(code);
    if (it != cache_.end()) return it->second;
    const TwoGraph g = decode_two(code);
    Laurent result = Laurent::constant(1);
    if (num_edges(g) > 0) {
        const auto subs = subgraphs(g);
        const std::uint64_t full = subs.back().mask;
        Laurent bar = phi_.eval(monomial_of(g));
        for (const auto& sub : subs) {
            if (sub.mask == 0 || sub.mask == full) continue;
            bar += counterterm(monomial_of(materialize(g, sub))) * phi_.eval(monomial_of(contract(g, sub)));
        }
        result = -R_.apply(bar);
    }
    cache_.emplace(code, result);
    return result;
}

Laurent Renormalizer::counterterm(const Monomial& m) {
    Laurent acc = Laurent::constant(1);
    for (auto& g : m.graphs) acc = acc * counterterm_generator(g);
    return acc;
}

Laurent Renormalizer::renormalized(const Monomial& m) {
    Laurent out;
    for (auto& [k, q] : coproduct(AlgebraElement::of(m)).terms)
        out += Laurent::constant(q) * counterterm(k.first) * phi_.eval(k.second);
    return out;
}

std::pair<Character, RotaBaxterOp> toy_ms_character(const Theory& t) {
    Character phi;
    phi.on_generator = [t](const CanonicalCode& code) {
        const TwoGraph g = decode_two(code);
        if (num_edges(g) == 0) return Laurent::constant(1);
        const Rational w = superficial_degree(t, g);
        if (w < 0) return Laurent::constant(1);
        const Rational f = floor_to_rational(w);
        const int e = static_cast<int>(boost::multiprecision::numerator(f));
        return Laurent::monomial(-(e + 1));
    };
    return {phi, pole_part_operator()};
}

}  // namespace strandhopf
