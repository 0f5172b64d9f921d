#include "heightlab/galois.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace heightlab {

namespace {
constexpr int kMaxGroupOrder = 5040;
}

GroupTable::GroupTable(int n, std::vector<Perm> elements, std::vector<Perm> generators)
    : n_(n), elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
}

bool GroupTable::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

int GroupTable::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return -1;
    return static_cast<int>(it - elements_.begin());
}

bool GroupTable::is_subgroup_of(const GroupTable& g) const {
    if (n_ != g.n_) return false;
    for (const Perm& p : elements_)
        if (!g.contains(p)) return false;
    return true;
}

GroupTable generate(const std::vector<Perm>& gens) {
    if (gens.empty()) throw std::invalid_argument("generate: need at least one generator");
    const int n = gens.front().size();
    if (n > 7) throw std::invalid_argument("generate: at most 7 points supported");
    for (const Perm& g : gens)
        if (g.size() != n) throw std::invalid_argument("generate: generators on different point sets");

    std::set<Perm> closed;
    std::vector<Perm> frontier{Perm::identity(n)};
    closed.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier) {
            for (const Perm& g : gens) {
                Perm q = g.compose(p);
                if (closed.insert(q).second) next.push_back(q);
            }
        }
        if (static_cast<int>(closed.size()) > kMaxGroupOrder)
            throw std::invalid_argument("generate: group order exceeds 5040");
        frontier = std::move(next);
    }
    return GroupTable(n, std::vector<Perm>(closed.begin(), closed.end()), gens);
}

GroupTable centralizer(const GroupTable& g, const Perm& x) {
    if (!g.contains(x)) throw std::invalid_argument("centralizer: element not in group");
    std::vector<Perm> elems;
    for (const Perm& s : g.elements())
        if (s.compose(x) == x.compose(s)) elems.push_back(s);
    return GroupTable(g.points(), std::move(elems), {x});
}

int fixed_cosets(const GroupTable& g, const GroupTable& h, const Perm& c) {
    if (!h.is_subgroup_of(g)) throw std::invalid_argument("fixed_cosets: H is not a subgroup of G");
    if (!g.contains(c)) throw std::invalid_argument("fixed_cosets: c not in G");
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    int fixed = 0;
    for (int i = 0; i < g.order(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        const Perm& s = g.elements()[static_cast<size_t>(i)];
        for (const Perm& t : h.elements()) {
            int idx = g.index_of(s.compose(t));
            seen[static_cast<size_t>(idx)] = true;
        }
        // c * sH = sH  iff  s^-1 c s in H
        if (h.contains(s.inverse().compose(c).compose(s))) ++fixed;
    }
    return fixed;
}

GroupTable normal_closure(const GroupTable& g, const Perm& x) {
    if (!g.contains(x)) throw std::invalid_argument("normal_closure: element not in group");
    // Subgroup generated by all conjugates of x; grow until conjugation-stable.
    std::set<Perm> gens;
    for (const Perm& s : g.elements()) gens.insert(s.compose(x).compose(s.inverse()));

    std::set<Perm> closed{Perm::identity(g.points())};
    std::vector<Perm> frontier{Perm::identity(g.points())};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& c : gens) {
                Perm q = c.compose(p);
                if (closed.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return GroupTable(g.points(), std::vector<Perm>(closed.begin(), closed.end()),
                      std::vector<Perm>(gens.begin(), gens.end()));
}

bool is_simple(const GroupTable& g) {
    if (g.order() > kMaxGroupOrder) throw std::invalid_argument("is_simple: group too large");
    if (g.order() == 1) return false;
    for (const Perm& x : g.elements()) {
        if (x.is_identity()) continue;
        GroupTable ncl = normal_closure(g, x);
        if (ncl.order() != g.order()) return false;
    }
    return true;
}

std::vector<std::vector<Perm>> conjugacy_classes(const GroupTable& g) {
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    std::vector<std::vector<Perm>> classes;
    for (int i = 0; i < g.order(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        const Perm& x = g.elements()[static_cast<size_t>(i)];
        std::set<Perm> cls;
        for (const Perm& s : g.elements()) cls.insert(s.compose(x).compose(s.inverse()));
        for (const Perm& y : cls) seen[static_cast<size_t>(g.index_of(y))] = true;
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

std::vector<GroupTable> normal_subgroups(const GroupTable& g) {
    auto classes = conjugacy_classes(g);
    // The identity class is always included; enumerate unions of the rest.
    size_t id_class = 0;
    for (size_t k = 0; k < classes.size(); ++k)
        if (classes[k].size() == 1 && classes[k][0].is_identity()) id_class = k;
    std::vector<size_t> others;
    for (size_t k = 0; k < classes.size(); ++k)
        if (k != id_class) others.push_back(k);
    if (others.size() > 20) throw std::invalid_argument("normal_subgroups: too many classes");

    std::vector<GroupTable> result;
    for (std::uint64_t mask = 0; mask < (1ull << others.size()); ++mask) {
        std::size_t total = 1;
        for (size_t b = 0; b < others.size(); ++b)
            if (mask & (1ull << b)) total += classes[others[b]].size();
        if (g.order() % total != 0) continue;  // Lagrange filter
        std::set<Perm> u{Perm::identity(g.points())};
        for (size_t b = 0; b < others.size(); ++b)
            if (mask & (1ull << b)) u.insert(classes[others[b]].begin(), classes[others[b]].end());
        // Closure check: class unions are inverse-closed, so products suffice.
        bool closed = true;
        for (const Perm& a : u) {
            for (const Perm& b : u) {
                if (!u.count(a.compose(b))) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed)
            result.emplace_back(g.points(), std::vector<Perm>(u.begin(), u.end()),
                                std::vector<Perm>(u.begin(), u.end()));
    }
    std::sort(result.begin(), result.end(),
              [](const GroupTable& a, const GroupTable& b) { return a.order() < b.order(); });
    return result;
}

QuinticVerdict classify_quintic_galois(const QuinticEvidence& evidence) {
    if (!evidence.irreducible_prime)
        throw std::invalid_argument("classify_quintic_galois: irreducibility witness required");
    QuinticVerdict v;
    v.irreducible_prime = evidence.irreducible_prime;
    for (const auto& [p, pat] : evidence.patterns) {
        const bool direct = pat == DegreePattern{1, 1, 1, 2};
        const bool via_cube = pat == DegreePattern{2, 3};
        if (direct || via_cube) {
            v.provably_s5 = true;
            v.transposition_prime = p;
            v.detail = direct ? "transposition from pattern {1,1,1,2} at p=" + std::to_string(p)
                              : "transposition from cube of a {2,3}-element at p=" + std::to_string(p);
            return v;
        }
    }
    v.detail = "no transposition pattern among scanned primes; inconclusive";
    return v;
}

QuinticEvidence gather_quintic_evidence(const IntPoly& f, std::uint64_t prime_budget) {
    IntPoly g = normalize(f);
    if (g.degree() != 5) throw std::invalid_argument("gather_quintic_evidence: degree must be 5");
    QuinticEvidence ev;
    ev.irreducible_prime = irreducible_witness(g, prime_budget);
    Int bad = g.leading() * discriminant(g);
    for (std::uint64_t p = 2; p <= prime_budget; ++p) {
        if (!is_prime_u64(p)) continue;
        if (bad % Int(static_cast<unsigned long>(p)) == 0) continue;
        ev.patterns.emplace_back(p, degree_pattern_mod_p(g, p));
    }
    return ev;
}

}  // namespace heightlab
