#include "seshadri/roots.hpp"

#include "seshadri/errors.hpp"

#include <algorithm>
#include <cassert>

namespace seshadri {

namespace {

/// Sturm chain of a squarefree polynomial, each member scaled by the
/// inverse of the absolute value of its leading coefficient (a positive
/// factor, so sign variations are unchanged) to keep numbers small.
std::vector<UniPoly> sturm_chain(const UniPoly& q) {
    std::vector<UniPoly> chain;
    chain.push_back((Rational(1) / q.leading().abs()) * q);
    UniPoly d = q.derivative();
    if (!d.is_zero()) chain.push_back((Rational(1) / d.leading().abs()) * d);
    while (chain.size() >= 2 && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break; // cannot happen for squarefree input
        chain.push_back((Rational(1) / r.leading().abs()) * (-r));
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const UniPoly& p : chain) {
        const int s = p.evaluate(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

/// Roots of a squarefree q in the open interval (a, b); requires
/// q(a) != 0 and q(b) != 0.
int count_open(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

UniPoly deflate_root(const UniPoly& p, const Rational& r) {
    const UniPoly linear({-r, Rational(1)});
    auto [quotient, remainder] = p.divmod(linear);
    assert(remainder.is_zero());
    return quotient;
}

/// Squarefree part of p with any roots at the interval endpoints divided out,
/// so Sturm counts on (lo, hi) are strictly interior.
UniPoly interior_squarefree(const UniPoly& p, const OpenInterval& I) {
    UniPoly q = p.squarefree_part();
    for (const Rational& endpoint : {I.lo, I.hi})
        while (!q.is_zero() && q.degree() >= 1 && q.evaluate(endpoint).is_zero()) q = deflate_root(q, endpoint);
    return q;
}

struct IsolationState {
    UniPoly w;                    // squarefree, exact roots divided out
    std::vector<UniPoly> chain;   // Sturm chain of w
    std::vector<IsolatedRoot> items;
};

/// One bisection step on an interval item known to bracket a sign change
/// of w. May pin the root exactly, in which case the item becomes exact.
void refine(IsolationState& st, IsolatedRoot& item) {
    assert(!item.exact);
    const Rational m = (item.lo + item.hi) / Rational(2);
    const int sm = st.w.evaluate(m).sign();
    if (sm == 0) {
        item.lo = item.hi = m;
        item.exact = true;
        return;
    }
    if (st.w.evaluate(item.lo).sign() * sm < 0)
        item.hi = m;
    else
        item.lo = m;
}

/// Bisects until every pending interval brackets exactly one root of w.
/// Rational bisection points that happen to be roots are recorded as exact
/// and divided out of w, restarting the scan on the reduced polynomial.
void isolate(IsolationState& st, const OpenInterval& I) {
    std::vector<Rational> exact;
    for (bool restart = true; restart;) {
        restart = false;
        st.items.clear();
        UniPoly w = interior_squarefree(st.w, I);
        for (const Rational& r : exact) w = deflate_root(w, r);
        if (w.degree() >= 1) {
            st.chain = sturm_chain(w);
            struct Pending {
                Rational a, b;
                int count;
            };
            std::vector<Pending> stack{{I.lo, I.hi, count_open(st.chain, I.lo, I.hi)}};
            while (!stack.empty() && !restart) {
                Pending cur = stack.back();
                stack.pop_back();
                if (cur.count == 0) continue;
                if (cur.count == 1) {
                    st.items.push_back({cur.a, cur.b, false});
                    continue;
                }
                const Rational m = (cur.a + cur.b) / Rational(2);
                if (w.evaluate(m).is_zero()) {
                    exact.push_back(m);
                    restart = true;
                    break;
                }
                const int left = count_open(st.chain, cur.a, m);
                stack.push_back({cur.a, m, left});
                stack.push_back({m, cur.b, cur.count - left});
            }
        }
        if (!restart) st.w = std::move(w);
    }
    for (const Rational& r : exact) st.items.push_back({r, r, true});
    std::sort(st.items.begin(), st.items.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
}

/// Shrinks bracketed roots until all closures are pairwise disjoint and
/// strictly inside I, so that every maximal root-free region contains a
/// nonempty gap between consecutive closures.
void separate(IsolationState& st, const OpenInterval& I) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (IsolatedRoot& item : st.items) {
            if (item.exact) continue;
            if (item.lo == I.lo || item.hi == I.hi) {
                refine(st, item);
                changed = true;
            }
        }
        for (std::size_t i = 0; i + 1 < st.items.size(); ++i) {
            IsolatedRoot& u = st.items[i];
            IsolatedRoot& v = st.items[i + 1];
            if (u.hi < v.lo) continue;
            if (!u.exact && !v.exact) {
                refine(st, u.hi - u.lo >= v.hi - v.lo ? u : v);
            } else if (!u.exact) {
                refine(st, u);
            } else if (!v.exact) {
                refine(st, v);
            } else {
                assert(false && "two exact roots cannot coincide");
            }
            changed = true;
        }
        std::sort(st.items.begin(), st.items.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
            return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
        });
    }
}

IsolationState isolate_and_separate(const UniPoly& p, const OpenInterval& I) {
    IsolationState st;
    st.w = p;
    isolate(st, I);
    separate(st, I);
    return st;
}

} // namespace

int sturm_count(const UniPoly& p, const OpenInterval& I) {
    if (p.is_zero()) throw ZeroPolynomial();
    const UniPoly q = interior_squarefree(p, I);
    if (q.degree() <= 0) return 0;
    return count_open(sturm_chain(q), I.lo, I.hi);
}

std::vector<IsolatedRoot> isolate_roots(const UniPoly& p, const OpenInterval& I) {
    if (p.is_zero()) throw ZeroPolynomial();
    return isolate_and_separate(p, I).items;
}

PositivityAnalysis analyze_positivity(const UniPoly& p, const OpenInterval& I) {
    PositivityAnalysis out;
    if (p.is_zero()) return out;

    IsolationState st = isolate_and_separate(p, I);
    out.roots = st.items;
    out.distinct_roots = static_cast<int>(st.items.size());

    std::vector<std::pair<Rational, Rational>> gaps;
    Rational left = I.lo;
    for (const IsolatedRoot& item : st.items) {
        gaps.emplace_back(left, item.lo);
        left = item.hi;
    }
    gaps.emplace_back(left, I.hi);

    std::optional<std::size_t> best;
    for (const auto& [lo, hi] : gaps) {
        assert(lo < hi);
        const Rational mid = (lo + hi) / Rational(2);
        const Rational value = p.evaluate(mid);
        out.samples.push_back({lo, hi, mid, value.sign()});
        if (value.sign() > 0) {
            if (!best || hi - lo > out.samples[*best].hi - out.samples[*best].lo) best = out.samples.size() - 1;
        }
    }
    if (best) out.witness = out.samples[*best].sample;
    return out;
}

std::optional<Rational> exists_positive(const UniPoly& p, const OpenInterval& I) {
    return analyze_positivity(p, I).witness;
}

} // namespace seshadri
