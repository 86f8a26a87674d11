#include "realrank/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace realrank {

SturmChain::SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
    seq_.push_back(p.primitive());
    if (p.degree() == 0) return;
    seq_.push_back(p.derivative().primitive());
    while (seq_.back().degree() > 0) {
        UniPoly r = UniPoly::divrem(seq_[seq_.size() - 2], seq_.back()).second;
        if (r.is_zero()) break;
        seq_.push_back((-r).primitive());
    }
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& q : seq_) signs.push_back(q.eval(x).sign());
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& q : seq_) signs.push_back(q.lc().sign());
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& q : seq_)
        signs.push_back(q.degree() % 2 == 0 ? q.lc().sign() : -q.lc().sign());
    return count_variations(signs);
}

int SturmChain::count_open(const Rational& a, const Rational& b) const {
    if (a >= b) throw std::invalid_argument("SturmChain::count_open: empty interval");
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_full_line() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

int sturm_count(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if (a > b) throw std::invalid_argument("sturm_count: a > b");
    UniPoly q = p;
    int endpoint_roots = 0;
    while (q.eval(a).is_zero()) {
        q = UniPoly::divrem(q, UniPoly::linear_root(a)).first;
        endpoint_roots = endpoint_roots | 1;
    }
    while (q.eval(b).is_zero()) {
        q = UniPoly::divrem(q, UniPoly::linear_root(b)).first;
        endpoint_roots = endpoint_roots | 2;
    }
    int inside = (a == b || q.degree() < 1) ? 0 : SturmChain(q).count_open(a, b);
    return inside + ((endpoint_roots & 1) ? 1 : 0) + ((endpoint_roots & 2) ? 1 : 0);
}

int sturm_count(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if (p.degree() < 1) return 0;
    return SturmChain(p).count_full_line();
}

void IsolatedRoot::refine_to(const Rational& w) {
    if (exact) return;
    while (hi - lo > w) {
        Rational mid = (lo + hi) / Rational(2);
        Rational v = factor.eval(mid);
        if (v.is_zero()) {
            exact = true;
            value = mid;
            return;
        }
        if (v.sign() == factor.eval(lo).sign()) lo = mid;
        else hi = mid;
    }
}

bool IsolatedRoot::try_snap_rational(int max_refinements) {
    if (exact) return true;
    Rational w = hi - lo;
    for (int i = 0; i < max_refinements; ++i) {
        Rational cand = simplest_rational_in(lo, hi);
        if (factor.eval(cand).is_zero()) {
            exact = true;
            value = cand;
            return true;
        }
        w = w * Rational(1, 65536);
        refine_to(w);
        if (exact) return true;
    }
    return false;
}

namespace {

/// Strict upper bound on |roots|: Cauchy bound 1 + max |c_i / lc|.
Rational cauchy_bound(const UniPoly& q) {
    Rational m(0);
    for (int i = 0; i < q.degree(); ++i) m = max(m, (q.coeff(i) / q.lc()).abs());
    return Rational(1) + m;
}

void bisect_isolate(const UniPoly& q, const SturmChain& chain, const Rational& lo,
                    const Rational& hi, int count, std::vector<IsolatedRoot>& out) {
    if (count == 0) return;
    if (count == 1) {
        IsolatedRoot r;
        r.exact = false;
        r.lo = lo;
        r.hi = hi;
        r.factor = q;
        out.push_back(std::move(r));
        return;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (q.eval(mid).is_zero()) {
        IsolatedRoot r;
        r.exact = true;
        r.value = mid;
        r.factor = q;
        out.push_back(std::move(r));
        // Carve out a root-free punctured neighbourhood of mid before recursing.
        Rational delta = (hi - lo) / Rational(4);
        while (q.eval(mid - delta).is_zero() || q.eval(mid + delta).is_zero() ||
               chain.count_open(mid - delta, mid + delta) != 1)
            delta = delta / Rational(2);
        bisect_isolate(q, chain, lo, mid - delta, chain.count_open(lo, mid - delta), out);
        bisect_isolate(q, chain, mid + delta, hi, chain.count_open(mid + delta, hi), out);
        return;
    }
    int left = chain.count_open(lo, mid);
    bisect_isolate(q, chain, lo, mid, left, out);
    bisect_isolate(q, chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_squarefree(const UniPoly& q) {
    std::vector<IsolatedRoot> out;
    if (q.degree() < 1) return out;
    SturmChain chain(q);
    Rational bound = cauchy_bound(q);
    // q(±bound) != 0 because bound strictly dominates all root magnitudes.
    bisect_isolate(q, chain, -bound, bound, chain.count_open(-bound, bound), out);
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.approx() < b.approx();
    });
    return out;
}

void RootIsolation::refine_all(const Rational& w) {
    for (auto& r : roots) r.refine_to(w);
    // Shrink until pairwise disjoint; distinct reals separate eventually.
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i + 1 < roots.size(); ++i) {
            if (roots[i].enclosure().disjoint_from(roots[i + 1].enclosure())) continue;
            Rational half = max(roots[i].width(), roots[i + 1].width()) / Rational(2);
            if (half.is_zero()) throw std::logic_error("RootIsolation: duplicate root");
            roots[i].refine_to(half);
            roots[i + 1].refine_to(half);
            again = true;
        }
    }
    std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.approx() < b.approx();
    });
}

RootIsolation isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    RootIsolation iso;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (IsolatedRoot r : isolate_squarefree(factor)) {
            r.multiplicity = mult;
            iso.roots.push_back(std::move(r));
        }
    }
    iso.refine_all(Rational(1, 2));
    return iso;
}

}  // namespace realrank
