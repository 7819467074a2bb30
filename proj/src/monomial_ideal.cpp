#include "ixmult/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "ixmult/errors.hpp"
#include "ixmult/polynomial.hpp"
#include "ixmult/ring_map.hpp"
#include "ixmult/std_basis.hpp"

namespace ixm {

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (const auto& g : gens)
        if (g.nvars() != ring_->nvars())
            throw StructuralError("monomial with wrong variable count");
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    });
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (const auto& kept : gens_)
            if (kept.divides(gens[i])) {
                redundant = true;
                break;
            }
        if (!redundant) gens_.push_back(gens[i]);
    }
}

bool MonomialIdeal::contains_unit() const {
    return !gens_.empty() && gens_.front().is_unit();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::string MonomialIdeal::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << monomial_str(*ring_, gens_[i]);
    }
    if (gens_.empty()) os << "0";
    os << ")";
    return os.str();
}

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::one() { return IntegerPolynomial({mpz_class(1)}); }

const mpz_class& IntegerPolynomial::coeff(int i) const {
    static const mpz_class kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::times_t_power(int d) const {
    if (c_.empty()) return {};
    std::vector<mpz_class> r(static_cast<std::size_t>(d), mpz_class(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return IntegerPolynomial(std::move(r));
}

mpz_class IntegerPolynomial::evaluate_one() const {
    mpz_class s(0);
    for (const auto& c : c_) s += c;
    return s;
}

bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) { return a.c_ == b.c_; }

std::string IntegerPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        mpz_class m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

MonomialIdeal lead_ideal(const Ideal& I) {
    StdBasis B = std_basis(I);
    std::vector<Monomial> ms;
    ms.reserve(B.gens.size());
    for (const auto& g : B.gens) ms.push_back(g.lead_monomial());
    return MonomialIdeal(I.ring(), std::move(ms));
}

int krull_dimension(const MonomialIdeal& M) {
    const int n = M.ring()->nvars();
    if (n > 30) throw InternalError("krull_dimension: too many variables for subset scan");
    std::vector<std::uint32_t> supports;
    supports.reserve(M.gens().size());
    for (const auto& g : M.gens()) {
        std::uint32_t s = 0;
        for (int i = 0; i < n; ++i)
            if (g[i] != 0) s |= 1u << i;
        supports.push_back(s);
    }
    int best = -1;
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
        bool ok = true;
        for (std::uint32_t s : supports)
            if ((s & ~sub) == 0) {  // support inside the subset
                ok = false;
                break;
            }
        if (ok) best = std::max(best, static_cast<int>(std::popcount(sub)));
    }
    return best;
}

namespace {

std::vector<Monomial> minimalize(const RingPtr& ring, std::vector<Monomial> gens) {
    return MonomialIdeal(ring, std::move(gens)).gens();
}

IntegerPolynomial hilbert_rec(const RingPtr& ring, const std::vector<Monomial>& gens) {
    if (gens.empty()) return IntegerPolynomial::one();
    if (gens.front().is_unit()) return {};

    const int n = ring->nvars();
    bool simple = true;
    for (const auto& g : gens) {
        int support = 0;
        for (int i = 0; i < n; ++i)
            if (g[i] != 0) ++support;
        if (support > 1) {
            simple = false;
            break;
        }
    }
    if (simple) {  // pairwise-coprime pure powers: product formula
        auto N = IntegerPolynomial::one();
        for (const auto& g : gens)
            N = N * (IntegerPolynomial::one() -
                     IntegerPolynomial::one().times_t_power(static_cast<int>(g.degree())));
        return N;
    }

    // pivot: most frequent variable among mixed supports, ties by lowest index
    std::vector<int> freq(static_cast<std::size_t>(n), 0);
    for (const auto& g : gens) {
        int support = 0;
        for (int i = 0; i < n; ++i)
            if (g[i] != 0) ++support;
        if (support > 1)
            for (int i = 0; i < n; ++i)
                if (g[i] != 0) ++freq[static_cast<std::size_t>(i)];
    }
    const int pivot = static_cast<int>(
        std::max_element(freq.begin(), freq.end()) - freq.begin());

    // N(M) = N(M + (x)) + t * N(M : x) for the pivot variable x
    std::vector<Monomial> plus = gens;
    {
        std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(pivot)] = 1;
        plus.emplace_back(std::move(e));
    }
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Exponent> e = g.exponents();
        if (e[static_cast<std::size_t>(pivot)] > 0) --e[static_cast<std::size_t>(pivot)];
        colon.emplace_back(std::move(e));
    }
    return hilbert_rec(ring, minimalize(ring, std::move(plus))) +
           hilbert_rec(ring, minimalize(ring, std::move(colon))).times_t_power(1);
}

}  // namespace

IntegerPolynomial hilbert_numerator(const MonomialIdeal& M) {
    return hilbert_rec(M.ring(), M.gens());
}

std::int64_t projective_degree(const Ideal& I) {
    for (const auto& g : I.gens())
        if (!g.is_homogeneous())
            throw HomogeneityError("projective degree needs homogeneous generators; '" +
                                   g.str() + "' is not homogeneous");
    Ideal J = I;
    if (!(I.ring()->order() == MonomialOrder::degrevlex())) {
        RingPtr R = PolyRing::make(I.ring()->var_names(), MonomialOrder::degrevlex());
        std::vector<Polynomial> images;
        for (int i = 0; i < R->nvars(); ++i) images.push_back(Polynomial::variable(R, i));
        J = RingMap(I.ring(), R, images).apply(I);
    }
    MonomialIdeal L = lead_ideal(J);
    if (L.contains_unit()) throw StructuralError("projective degree of the empty scheme");
    const int dim = krull_dimension(L);
    const int codim = J.ring()->nvars() - dim;
    IntegerPolynomial N = hilbert_numerator(L);
    for (int k = 0; k < codim; ++k) {
        // divide by (1 - t): q_i = n_i + q_{i-1}, exactness means the carry ends at 0
        std::vector<mpz_class> q;
        mpz_class carry(0);
        for (int i = 0; i <= N.degree(); ++i) {
            carry += N.coeff(i);
            q.push_back(carry);
        }
        if (carry != 0) throw InternalError("hilbert numerator not divisible by (1-t)^codim");
        if (!q.empty()) q.pop_back();  // top entry is the vanished remainder
        N = IntegerPolynomial(std::move(q));
    }
    mpz_class d = N.evaluate_one();
    if (!d.fits_slong_p()) throw InternalError("projective degree out of range");
    return static_cast<std::int64_t>(d.get_si());
}

}  // namespace ixm
