#include "latsym/expansions.hpp"

#include <algorithm>

namespace latsym {

RingElem coeff(const CoeffGridSpec& spec) {
    const int n = spec.n;
    const int need = std::max({spec.lambda.length(), spec.lambda.first(), spec.mu.length(),
                               spec.mu.first()});
    if (n < need)
        throw GridTooSmall("coeff: grid size " + std::to_string(n) + " < " +
                           std::to_string(need));
    // rules[r][i]: row r (bottom first), site i+1 (site 1 at the right)
    std::vector<std::vector<std::unique_ptr<VertexRule>>> rules(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int i = 1; i <= n; ++i) {
            switch (spec.kind) {
                case CoeffKind::A:
                    rules[r].push_back(std::make_unique<ExpansionARule>());
                    break;
                case CoeffKind::B:
                    rules[r].push_back(std::make_unique<ExpansionBRule>());
                    break;
                case CoeffKind::C:
                    rules[r].push_back(std::make_unique<ExpansionCRule>());
                    break;
                case CoeffKind::D:
                    rules[r].push_back(std::make_unique<ExpansionDRule>(spec.ys[r], spec.us[i - 1],
                                                                        spec.vs[i - 1]));
                    break;
            }
        }
    }
    const Occupation bottom = occupation_of_conjugate(spec.lambda, n);
    const Occupation right = occupation_of_conjugate(spec.mu, n);

    RingElem total;
    Occupation vert = bottom;
    // rows bottom to top; within a row, columns left (site n) to right (site 1)
    std::function<void(int, int, int, const RingElem&)> visit = [&](int r, int idx, int left,
                                                                    const RingElem& coef) {
        if (r == n) {
            bool all_zero = std::all_of(vert.begin(), vert.end(), [](int x) { return x == 0; });
            if (all_zero) total += coef;
            return;
        }
        if (idx < 0) {
            if (left == right[r]) visit(r + 1, n - 1, 0, coef);
            return;
        }
        const int a = vert[idx];
        for (int c = 0; c <= a + left; ++c) {
            int d = a + left - c;
            RingElem w = rules[r][idx]->weight(a, left, c, d);
            if (w.is_zero()) continue;
            int saved = vert[idx];
            vert[idx] = c;
            visit(r, idx - 1, d, coef * w);
            vert[idx] = saved;
        }
    };
    visit(0, n - 1, 0, RingElem::one());
    return total;
}

namespace {

// monomial x_1^{mu_1} ... x_n^{mu_n}
Monomial pivot_monomial(const Partition& mu) {
    Monomial m;
    for (int i = 1; i <= mu.length(); ++i) m = m * Monomial::var(VarId::x(i), mu.part(i));
    return m;
}

bool is_x(VarId v) { return v.kind == VarId::Kind::X; }

// splits a polynomial-with-coefficient-denominator into x-monomial buckets
std::map<Monomial, RingElem, MonomialLess> bucket_by_x(const RingElem& f) {
    std::map<Monomial, RingElem, MonomialLess> buckets;
    RingElem den_inv;
    bool have_den = !f.is_polynomial();
    if (have_den) den_inv = RingElem::one() / RingElem(f.denominator());
    for (const auto& [m, c] : f.numerator().terms()) {
        Monomial xpart, rest;
        for (const auto& [v, e] : m.factors())
            (is_x(v) ? xpart : rest) = (is_x(v) ? xpart : rest) * Monomial::var(v, e);
        RingElem piece{Poly::term(rest, c)};
        if (have_den) piece *= den_inv;
        auto [it, fresh] = buckets.try_emplace(xpart, piece);
        if (!fresh) it->second += piece;
    }
    return buckets;
}

} // namespace

ExpansionTable expand(const PolyProvider& source, const PolyProvider& target,
                      const Partition& lambda, int n, const Partition& box,
                      const std::string& source_name, const std::string& target_name) {
    ExpansionTable table;
    table.source_basis = source_name;
    table.target_basis = target_name;
    table.lambda = lambda;
    table.n = n;

    std::vector<Partition> candidates = enumerate_sub_partitions(box);
    // peel degree by degree, dominance-largest first within a degree
    std::stable_sort(candidates.begin(), candidates.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b.compare(a) < 0; // descending part-lex = dominance compatible
    });

    RingElem residual = source(lambda);
    std::map<Partition, RingElem> targets;
    for (const auto& mu : candidates) {
        if (residual.is_zero()) break;
        auto buckets = bucket_by_x(residual);
        auto it = buckets.find(pivot_monomial(mu));
        if (it == buckets.end() || it->second.is_zero()) continue;
        RingElem c = it->second;
        RingElem t = target(mu);
        // unit diagonal: the pivot coefficient of target_mu must be 1
        auto tb = bucket_by_x(t);
        auto tp = tb.find(pivot_monomial(mu));
        if (tp == tb.end() || !tp->second.is_one())
            throw NotTriangular("expand: target at " + mu.to_string() +
                                " lacks a unit pivot coefficient");
        residual -= c * t;
        table.entries.emplace(mu, c);
    }
    if (!residual.is_zero())
        throw NotTriangular("expand: residual nonzero after the box; source " +
                            lambda.to_string() + " not spanned");
    return table;
}

VerificationReport certify(const ExpansionTable& table, CertifyLaw law) {
    VerificationReport report;
    report.identity_id = law == CertifyLaw::Positive ? "certify-positive" : "certify-alternating";
    for (const auto& [mu, entry] : table.entries) {
        RingElem value = entry;
        if (law == CertifyLaw::SignAlternating) {
            int dist = table.lambda.size() - mu.size();
            if (dist % 2 != 0) value = -value;
        }
        bool ok = value.is_polynomial();
        if (ok) {
            for (const auto& [m, c] : value.numerator().terms()) {
                for (const auto& [v, e] : m.factors())
                    if (v != VarId::q()) ok = false;
                if (!(rat_is_integer(c) && c >= 0)) ok = false;
            }
        }
        report.record(ok, table.lambda.to_string() + " -> " + mu.to_string(), value, value);
    }
    return report;
}

PolyProvider basis_provider(const std::string& name, int n) {
    std::vector<RingElem> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(RingElem::var(VarId::x(i)));
    if (name == "schur") {
        return [xs](const Partition& mu) {
            FamilyParams p;
            return degeneration_of_lattice(FamilyTag::Schur, mu, Partition::empty(), xs, p);
        };
    }
    if (name == "q-whittaker" || name == "qwhittaker") {
        return [xs](const Partition& mu) {
            FamilyParams p;
            return degeneration_of_lattice(FamilyTag::QWhittaker, mu, Partition::empty(), xs, p);
        };
    }
    if (name == "inhom-f") {
        return [xs](const Partition& mu) {
            FamilyParams p; // u_i = 1 by default
            return degeneration_of_lattice(FamilyTag::InhomQWhittakerF, mu, Partition::empty(),
                                           xs, p);
        };
    }
    if (name == "dual-inhom-g") {
        return [xs](const Partition& mu) {
            FamilyParams p; // v_i = 1 by default
            return degeneration_of_lattice(FamilyTag::DualInhomG, mu, Partition::empty(), xs, p);
        };
    }
    throw ParseError("unknown basis: " + name);
}

} // namespace latsym
