#include "ixmult/std_basis.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>

#include "ixmult/errors.hpp"
#include "ixmult/ring_map.hpp"

namespace ixm {
namespace {

struct MTerm {
    Rational c;
    Monomial m;
    int pos;
};

// Terms kept strictly descending under the module order.
using MVec = std::vector<MTerm>;

std::int64_t vec_degree(const MVec& v) {
    std::int64_t d = -1;
    for (const auto& t : v) d = std::max(d, t.m.degree());
    return d;
}

std::int64_t ecart(const MVec& v) { return vec_degree(v) - v.front().m.degree(); }

// A vector paired with its expression in the input generators. The expression
// lives in its own coordinates, is kept merge-sorted under a fixed structural
// order, and never influences reducer selection or termination.
struct Tracked {
    MVec v;
    MVec expr;
};

bool expr_before(const MTerm& a, const MTerm& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.m.exponents() < b.m.exponents();
}

// a + c * x^m * b for expression vectors, both inputs sorted by expr_before.
MVec expr_add_scaled(const MVec& a, const Rational& c, const Monomial& m, const MVec& b) {
    MVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        MTerm bt{c * b[j].c, m * b[j].m, b[j].pos};
        if (expr_before(a[i], bt)) {
            out.push_back(a[i++]);
        } else if (expr_before(bt, a[i])) {
            out.push_back(std::move(bt));
            ++j;
        } else {
            Rational s = a[i].c + bt.c;
            if (!s.is_zero()) out.push_back(MTerm{std::move(s), a[i].m, a[i].pos});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(MTerm{c * b[j].c, m * b[j].m, b[j].pos});
    return out;
}

class Engine {
public:
    Engine(RingPtr ring, int rank, int dominant)
        : ring_(std::move(ring)),
          order_(ring_->order()),
          rank_(rank),
          dominant_(dominant),
          use_mora_(!ring_->order().is_global()) {}

    Cmp cmp(const MTerm& a, const MTerm& b) const {
        if (dominant_ > 0) {
            const int ba = a.pos < dominant_ ? 0 : 1;
            const int bb = b.pos < dominant_ ? 0 : 1;
            if (ba != bb) return ba < bb ? Cmp::Greater : Cmp::Less;
        }
        const Cmp c = cmp_monomials(order_, a.m, b.m);
        if (c != Cmp::Equal) return c;
        if (a.pos != b.pos) return a.pos < b.pos ? Cmp::Greater : Cmp::Less;
        return Cmp::Equal;
    }

    MVec normalize(MVec v) const {
        std::sort(v.begin(), v.end(),
                  [this](const MTerm& a, const MTerm& b) { return cmp(a, b) == Cmp::Greater; });
        MVec out;
        for (auto& t : v) {
            if (t.c.is_zero()) continue;
            if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m) {
                out.back().c = out.back().c + t.c;
                if (out.back().c.is_zero()) out.pop_back();
            } else {
                out.push_back(std::move(t));
            }
        }
        return out;
    }

    // a + c * x^m * b, both inputs normalized.
    MVec add_scaled(const MVec& a, const Rational& c, const Monomial& m, const MVec& b) const {
        MVec out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            MTerm bt{c * b[j].c, m * b[j].m, b[j].pos};
            const Cmp r = cmp(a[i], bt);
            if (r == Cmp::Greater) {
                out.push_back(a[i++]);
            } else if (r == Cmp::Less) {
                out.push_back(std::move(bt));
                ++j;
            } else {
                Rational s = a[i].c + bt.c;
                if (!s.is_zero()) out.push_back(MTerm{std::move(s), a[i].m, a[i].pos});
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back(MTerm{c * b[j].c, m * b[j].m, b[j].pos});
        return out;
    }

    static bool lead_divides(const MVec& g, const MVec& f) {
        return g.front().pos == f.front().pos && g.front().m.divides(f.front().m);
    }

    // Cancels the lead term of f against the lead term of g.
    MVec reduce_step(const MVec& f, const MVec& g) const {
        const Rational c = -(f.front().c / g.front().c);
        const Monomial m = f.front().m / g.front().m;
        return add_scaled(f, c, m, g);
    }

    MVec nf_division(MVec f, const std::vector<MVec>& G) const {
        MVec out;
        while (!f.empty()) {
            const MVec* red = nullptr;
            for (const auto& g : G) {
                if (lead_divides(g, f)) {
                    red = &g;
                    break;
                }
            }
            if (red) {
                f = reduce_step(f, *red);
            } else {
                out.push_back(f.front());
                f.erase(f.begin());
            }
        }
        return out;
    }

    MVec nf_mora(MVec f, const std::vector<MVec>& G) const {
        struct Reducer {
            const MVec* v;
            std::int64_t ecart;
        };
        std::vector<Reducer> T;
        T.reserve(G.size());
        for (const auto& g : G) T.push_back(Reducer{&g, ecart(g)});
        std::deque<MVec> extra;
        while (!f.empty()) {
            const Reducer* best = nullptr;
            for (const auto& r : T)
                if (lead_divides(*r.v, f) && (!best || r.ecart < best->ecart)) best = &r;
            if (!best) return f;
            const MVec* red = best->v;
            const std::int64_t ef = ecart(f);
            if (best->ecart > ef) {
                // Mora's trick: the current partial result becomes a reducer
                extra.push_back(f);
                T.push_back(Reducer{&extra.back(), ef});
            }
            f = reduce_step(f, *red);
        }
        return f;
    }

    MVec nf(MVec f, const std::vector<MVec>& G) const {
        if (G.empty()) return f;
        return use_mora_ ? nf_mora(std::move(f), G) : nf_division(std::move(f), G);
    }

    MVec spair(const MVec& f, const MVec& g) const {
        const Monomial l = Monomial::lcm(f.front().m, g.front().m);
        MVec a;
        a.reserve(f.size());
        const Rational fc = Rational(1) / f.front().c;
        const Monomial fm = l / f.front().m;
        for (const auto& t : f) a.push_back(MTerm{fc * t.c, fm * t.m, t.pos});
        return add_scaled(a, -(Rational(1) / g.front().c), l / g.front().m, g);
    }

    static MVec monic(MVec v) {
        const Rational c = Rational(1) / v.front().c;
        for (auto& t : v) t.c = t.c * c;
        return v;
    }

    Tracked t_reduce_step(const Tracked& f, const Tracked& g) const {
        const Rational c = -(f.v.front().c / g.v.front().c);
        const Monomial m = f.v.front().m / g.v.front().m;
        return Tracked{add_scaled(f.v, c, m, g.v), expr_add_scaled(f.expr, c, m, g.expr)};
    }

    Tracked t_spair(const Tracked& f, const Tracked& g) const {
        const Monomial l = Monomial::lcm(f.v.front().m, g.v.front().m);
        const Rational fc = Rational(1) / f.v.front().c;
        const Monomial fm = l / f.v.front().m;
        MVec a;
        a.reserve(f.v.size());
        for (const auto& t : f.v) a.push_back(MTerm{fc * t.c, fm * t.m, t.pos});
        MVec ae;
        ae.reserve(f.expr.size());
        for (const auto& t : f.expr) ae.push_back(MTerm{fc * t.c, fm * t.m, t.pos});
        const Rational gc = -(Rational(1) / g.v.front().c);
        const Monomial gm = l / g.v.front().m;
        return Tracked{add_scaled(a, gc, gm, g.v), expr_add_scaled(ae, gc, gm, g.expr)};
    }

    Tracked t_nf_division(Tracked f, const std::vector<Tracked>& G) const {
        // global order: cancel the first reducible term; earlier terms are
        // strictly larger than anything a reduction introduces, so they stay put
        std::size_t k = 0;
        while (k < f.v.size()) {
            const Tracked* red = nullptr;
            for (const auto& g : G) {
                if (g.v.front().pos == f.v[k].pos && g.v.front().m.divides(f.v[k].m)) {
                    red = &g;
                    break;
                }
            }
            if (!red) {
                ++k;
                continue;
            }
            const Rational c = -(f.v[k].c / red->v.front().c);
            const Monomial m = f.v[k].m / red->v.front().m;
            f.v = add_scaled(f.v, c, m, red->v);
            f.expr = expr_add_scaled(f.expr, c, m, red->expr);
        }
        return f;
    }

    Tracked t_nf_mora(Tracked f, const std::vector<Tracked>& G) const {
        struct Reducer {
            const Tracked* t;
            std::int64_t ecart;
        };
        std::vector<Reducer> T;
        T.reserve(G.size());
        for (const auto& g : G) T.push_back(Reducer{&g, ecart(g.v)});
        std::deque<Tracked> extra;
        while (!f.v.empty()) {
            const Reducer* best = nullptr;
            for (const auto& r : T)
                if (lead_divides(r.t->v, f.v) && (!best || r.ecart < best->ecart)) best = &r;
            if (!best) return f;
            const Tracked* red = best->t;
            const std::int64_t ef = ecart(f.v);
            if (best->ecart > ef) {
                extra.push_back(f);
                T.push_back(Reducer{&extra.back(), ef});
            }
            f = t_reduce_step(f, *red);
        }
        return f;
    }

    Tracked t_nf(Tracked f, const std::vector<Tracked>& G) const {
        if (G.empty()) return f;
        return use_mora_ ? t_nf_mora(std::move(f), G) : t_nf_division(std::move(f), G);
    }

    // Runs the standard-basis loop on tracked seeds, processing every s-pair
    // with no discard criteria, and collects the expression of each pair that
    // reduces to zero. With the inputs seeded into the basis, those
    // expressions generate the full syzygy module of the inputs.
    std::vector<MVec> syzygy_loop(std::vector<Tracked> G) const {
        std::vector<MVec> zs;
        std::vector<Pair> pending;
        auto add_pairs = [&](int j) {
            for (int i = 0; i < j; ++i) {
                const MTerm& a = G[static_cast<std::size_t>(i)].v.front();
                const MTerm& b = G[static_cast<std::size_t>(j)].v.front();
                if (a.pos != b.pos) continue;
                Monomial l = Monomial::lcm(a.m, b.m);
                const std::int64_t d = l.degree();
                pending.push_back(Pair{i, j, std::move(l), d});
            }
        };
        for (int j = 0; j < static_cast<int>(G.size()); ++j) add_pairs(j);

        while (!pending.empty()) {
            std::size_t sel = 0;
            for (std::size_t k = 1; k < pending.size(); ++k) {
                const auto& a = pending[k];
                const auto& b = pending[sel];
                if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                    sel = k;
            }
            Pair p = pending[sel];
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(sel));

            Tracked h = t_nf(t_spair(G[static_cast<std::size_t>(p.i)],
                                     G[static_cast<std::size_t>(p.j)]),
                             G);
            if (h.v.empty()) {
                if (!h.expr.empty()) zs.push_back(std::move(h.expr));
                continue;
            }
            const Rational c = Rational(1) / h.v.front().c;
            for (auto& t : h.v) t.c = t.c * c;
            for (auto& t : h.expr) t.c = t.c * c;
            G.push_back(std::move(h));
            add_pairs(static_cast<int>(G.size()) - 1);
        }
        return zs;
    }

    struct Pair {
        int i, j;
        Monomial lcm;
        std::int64_t deg;
    };

    std::vector<MVec> std_loop(const std::vector<MVec>& input) const {
        std::vector<MVec> G;
        for (const auto& v : input)
            if (!v.empty()) G.push_back(monic(v));

        std::vector<Pair> pending;
        auto add_pairs = [&](int j) {
            for (int i = 0; i < j; ++i) {
                if (G[static_cast<std::size_t>(i)].front().pos !=
                    G[static_cast<std::size_t>(j)].front().pos)
                    continue;
                Monomial l = Monomial::lcm(G[static_cast<std::size_t>(i)].front().m,
                                           G[static_cast<std::size_t>(j)].front().m);
                const std::int64_t d = l.degree();
                pending.push_back(Pair{i, j, std::move(l), d});
            }
        };
        for (int j = 0; j < static_cast<int>(G.size()); ++j) add_pairs(j);

        auto in_pending = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            for (const auto& p : pending)
                if (p.i == a && p.j == b) return true;
            return false;
        };

        while (!pending.empty()) {
            // normal strategy: minimal lcm degree, ties by (i, j)
            std::size_t sel = 0;
            for (std::size_t k = 1; k < pending.size(); ++k) {
                const auto& a = pending[k];
                const auto& b = pending[sel];
                if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                    sel = k;
            }
            Pair p = pending[sel];
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(sel));

            const MVec& gi = G[static_cast<std::size_t>(p.i)];
            const MVec& gj = G[static_cast<std::size_t>(p.j)];

            // product criterion is only sound for ideals under a global order
            if (!use_mora_ && rank_ == 1 && p.lcm == gi.front().m * gj.front().m) continue;

            bool chained = false;
            for (int k = 0; k < static_cast<int>(G.size()); ++k) {
                if (k == p.i || k == p.j) continue;
                const MVec& gk = G[static_cast<std::size_t>(k)];
                if (gk.front().pos != gi.front().pos || !gk.front().m.divides(p.lcm)) continue;
                if (!in_pending(p.i, k) && !in_pending(p.j, k)) {
                    chained = true;
                    break;
                }
            }
            if (chained) continue;

            MVec h = nf(spair(gi, gj), G);
            if (h.empty()) continue;
            G.push_back(monic(std::move(h)));
            add_pairs(static_cast<int>(G.size()) - 1);
        }
        return G;
    }

    std::vector<MVec> interreduce(std::vector<MVec> G) const {
        for (auto& g : G) g = monic(std::move(g));
        std::vector<bool> drop(G.size(), false);
        for (std::size_t i = 0; i < G.size(); ++i) {
            for (std::size_t j = 0; j < G.size(); ++j) {
                if (j == i) continue;
                const MTerm& a = G[j].front();
                const MTerm& b = G[i].front();
                if (a.pos != b.pos || !a.m.divides(b.m)) continue;
                if (!(a.m == b.m) || j < i) {
                    drop[i] = true;
                    break;
                }
            }
        }
        std::vector<MVec> kept;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (!drop[i]) kept.push_back(std::move(G[i]));
        if (!use_mora_) {
            // tail reduction; lead terms are pairwise non-divisible so they survive
            for (std::size_t i = 0; i < kept.size(); ++i) {
                std::vector<MVec> others;
                for (std::size_t j = 0; j < kept.size(); ++j)
                    if (j != i) others.push_back(kept[j]);
                kept[i] = nf_division(kept[i], others);
            }
        }
        std::sort(kept.begin(), kept.end(), [this](const MVec& a, const MVec& b) {
            return cmp(a.front(), b.front()) == Cmp::Greater;
        });
        return kept;
    }

    std::vector<MVec> std_interreduced(const std::vector<MVec>& input) const {
        return interreduce(std_loop(input));
    }

    // conversions
    MVec from_poly(const Polynomial& f, int pos) const {
        MVec v;
        v.reserve(f.terms().size());
        for (const auto& t : f.terms()) v.push_back(MTerm{t.coeff, t.mono, pos});
        return normalize(std::move(v));
    }

    MVec from_vector(const ModuleVector& w) const {
        MVec v;
        for (int p = 0; p < w.rank(); ++p)
            for (const auto& t : w.comp(p).terms()) v.push_back(MTerm{t.coeff, t.mono, p});
        return normalize(std::move(v));
    }

    Polynomial to_poly(const MVec& v) const {
        std::vector<Term> ts;
        ts.reserve(v.size());
        for (const auto& t : v) {
            if (t.pos != 0) throw InternalError("module term in polynomial context");
            ts.push_back(Term{t.c, t.m});
        }
        return Polynomial::from_terms(ring_, std::move(ts));
    }

    ModuleVector to_vector(const MVec& v, int rank, int shift = 0) const {
        std::vector<std::vector<Term>> comps(static_cast<std::size_t>(rank));
        for (const auto& t : v) {
            const int p = t.pos - shift;
            if (p < 0 || p >= rank) throw InternalError("module term position out of range");
            comps[static_cast<std::size_t>(p)].push_back(Term{t.c, t.m});
        }
        std::vector<Polynomial> out;
        out.reserve(comps.size());
        for (auto& c : comps) out.push_back(Polynomial::from_terms(ring_, std::move(c)));
        return ModuleVector(ring_, std::move(out));
    }

    const RingPtr& ring() const { return ring_; }

private:
    RingPtr ring_;
    MonomialOrder order_;
    int rank_;
    int dominant_;
    bool use_mora_;
};

void check_gens_ring(const RingPtr& ring, const std::vector<Polynomial>& G) {
    for (const auto& g : G)
        if (!same_ring(g.ring(), ring)) throw StructuralError("generators from different rings");
}

std::vector<ModuleVector> syzygies_impl(const RingPtr& ring, int rank, std::vector<MVec> vs) {
    // Each basis element carries its expression in the inputs, so reductions
    // stay in the original rank and ecarts are never distorted by bookkeeping
    // components. Zero reductions of s-pairs are exactly the syzygies.
    const int n = static_cast<int>(vs.size());
    Engine eng(ring, rank, 0);
    std::vector<Tracked> seeds;
    std::vector<MVec> zs;
    for (int i = 0; i < n; ++i) {
        MVec v = std::move(vs[static_cast<std::size_t>(i)]);
        if (v.empty()) {
            // a zero generator is annihilated by its own unit vector
            zs.push_back(MVec{MTerm{Rational(1), Monomial(ring->nvars()), i}});
            continue;
        }
        const Rational lc = v.front().c;
        MVec e{MTerm{Rational(1) / lc, Monomial(ring->nvars()), i}};
        seeds.push_back(Tracked{Engine::monic(std::move(v)), std::move(e)});
    }
    for (auto& z : eng.syzygy_loop(std::move(seeds))) zs.push_back(std::move(z));

    // canonicalize the harvested generators in the syzygy coordinates
    Engine out_eng(ring, n, 0);
    std::vector<MVec> cand;
    cand.reserve(zs.size());
    for (auto& z : zs) cand.push_back(out_eng.normalize(std::move(z)));
    std::vector<ModuleVector> out;
    for (const auto& v : out_eng.std_interreduced(cand)) out.push_back(out_eng.to_vector(v, n));
    return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    check_gens_ring(f.ring(), G);
    Engine eng(f.ring(), 1, 0);
    std::vector<MVec> gs;
    for (const auto& g : G)
        if (!g.is_zero()) gs.push_back(eng.from_poly(g, 0));
    return eng.to_poly(eng.nf(eng.from_poly(f, 0), gs));
}

ModuleVector normal_form(const ModuleVector& v, const std::vector<ModuleVector>& G,
                         int dominant_components) {
    Engine eng(v.ring(), v.rank(), dominant_components);
    std::vector<MVec> gs;
    for (const auto& g : G) {
        if (g.rank() != v.rank()) throw StructuralError("module rank mismatch");
        if (!g.is_zero()) gs.push_back(eng.from_vector(g));
    }
    return eng.to_vector(eng.nf(eng.from_vector(v), gs), v.rank());
}

StdBasis std_basis(const Ideal& I) {
    Engine eng(I.ring(), 1, 0);
    std::vector<MVec> input;
    for (const auto& g : I.gens()) input.push_back(eng.from_poly(g, 0));
    std::vector<Polynomial> out;
    for (const auto& v : eng.std_interreduced(input)) out.push_back(eng.to_poly(v));
    return StdBasis{std::move(out), I.ring()->order()};
}

ModuleStdBasis std_basis(const RingPtr& ring, int rank, const std::vector<ModuleVector>& gens,
                         int dominant_components) {
    if (rank < 1) throw StructuralError("module rank must be positive");
    Engine eng(ring, rank, dominant_components);
    std::vector<MVec> input;
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), ring) || g.rank() != rank)
            throw StructuralError("module generator shape mismatch");
        input.push_back(eng.from_vector(g));
    }
    std::vector<ModuleVector> out;
    for (const auto& v : eng.std_interreduced(input)) out.push_back(eng.to_vector(v, rank));
    return ModuleStdBasis{std::move(out), ModuleOrder{ring->order(), dominant_components}};
}

bool is_member(const Polynomial& f, const StdBasis& B) {
    return normal_form(f, B.gens).is_zero();
}

bool is_member(const Polynomial& f, const Ideal& I) { return is_member(f, std_basis(I)); }

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars) {
    const RingPtr& R = I.ring();
    std::vector<bool> drop(static_cast<std::size_t>(R->nvars()), false);
    for (const auto& name : vars) {
        auto idx = R->var_index(name);
        if (!idx) throw StructuralError("no variable named '" + name + "' in " + R->str());
        if (drop[static_cast<std::size_t>(*idx)])
            throw StructuralError("variable '" + name + "' listed twice");
        drop[static_cast<std::size_t>(*idx)] = true;
    }
    const int k = static_cast<int>(std::count(drop.begin(), drop.end(), true));
    if (k == 0) return I;
    if (k == R->nvars()) throw StructuralError("cannot eliminate every variable");

    // eliminated variables first, each block DegRevLex
    std::vector<std::string> perm_names;
    std::vector<int> new_pos(static_cast<std::size_t>(R->nvars()));
    for (int i = 0; i < R->nvars(); ++i)
        if (drop[static_cast<std::size_t>(i)]) {
            new_pos[static_cast<std::size_t>(i)] = static_cast<int>(perm_names.size());
            perm_names.push_back(R->var_name(i));
        }
    std::vector<std::string> rest_names;
    for (int i = 0; i < R->nvars(); ++i)
        if (!drop[static_cast<std::size_t>(i)]) {
            new_pos[static_cast<std::size_t>(i)] = static_cast<int>(perm_names.size());
            perm_names.push_back(R->var_name(i));
            rest_names.push_back(R->var_name(i));
        }
    auto block = MonomialOrder::block(
        {{OrderKind::DegRevLex, k}, {OrderKind::DegRevLex, R->nvars() - k}});
    RingPtr P = PolyRing::make(perm_names, block);
    RingPtr S = PolyRing::make(rest_names, MonomialOrder::degrevlex());

    std::vector<Polynomial> images;
    for (int i = 0; i < R->nvars(); ++i)
        images.push_back(Polynomial::variable(P, new_pos[static_cast<std::size_t>(i)]));
    RingMap into(R, P, images);

    StdBasis B = std_basis(into.apply(I));
    std::vector<Polynomial> kept;
    for (const auto& g : B.gens) {
        bool clean = true;
        for (int i = 0; i < k && clean; ++i) clean = g.lead_monomial()[i] == 0;
        if (!clean) continue;
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            std::vector<Exponent> e;
            for (int i = 0; i < k; ++i)
                if (t.mono[i] != 0)
                    throw InternalError("eliminated variable below the lead term");
            for (int i = k; i < P->nvars(); ++i) e.push_back(t.mono[i]);
            ts.push_back(Term{t.coeff, Monomial(std::move(e))});
        }
        kept.push_back(Polynomial::from_terms(S, std::move(ts)));
    }
    return Ideal(S, std::move(kept));
}

std::vector<ModuleVector> syzygies(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    if (gens.empty()) return {};
    check_gens_ring(ring, gens);
    Engine eng(ring, 1, 0);
    std::vector<MVec> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) vs.push_back(eng.from_poly(g, 0));
    return syzygies_impl(ring, 1, std::move(vs));
}

std::vector<ModuleVector> syzygies(const RingPtr& ring, int rank,
                                   const std::vector<ModuleVector>& gens) {
    if (gens.empty()) return {};
    if (rank < 1) throw StructuralError("module rank must be positive");
    Engine eng(ring, rank, 0);
    std::vector<MVec> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), ring) || g.rank() != rank)
            throw StructuralError("module generator shape mismatch");
        vs.push_back(eng.from_vector(g));
    }
    return syzygies_impl(ring, rank, std::move(vs));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring(), g.ring())) throw StructuralError("ring mismatch");
    if (f.is_zero() || g.is_zero()) throw StructuralError("s-polynomial of zero");
    Engine eng(f.ring(), 1, 0);
    return eng.to_poly(eng.spair(eng.from_poly(f, 0), eng.from_poly(g, 0)));
}

}  // namespace ixm
