#include "latsym/poly.hpp"

#include <sstream>

namespace latsym {

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    Poly q;
    Poly r = *this;
    const Monomial& dm = d.leading_monomial();
    const Rat& dc = d.leading_coefficient();
    while (!r.is_zero()) {
        auto qm = r.leading_monomial().divide(dm);
        if (!qm) return std::nullopt;
        Rat qc = r.leading_coefficient() / dc;
        Poly t = Poly::term(*qm, qc);
        q += t;
        r -= t * d;
    }
    return q;
}

int Poly::compare(const Poly& o) const {
    if (terms_.size() != o.terms_.size())
        return terms_.size() < o.terms_.size() ? -1 : 1;
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        int c = a->first.compare(b->first);
        if (c != 0) return c;
        int cc = cmp(a->second, b->second);
        if (cc != 0) return cc;
    }
    return 0;
}

Poly Poly::substituted(const std::function<const Poly*(VarId)>& sub) const {
    Poly result;
    for (const auto& [m, c] : terms_) {
        Poly t{c};
        Monomial untouched;
        for (const auto& [v, e] : m.factors()) {
            const Poly* rep = sub(v);
            if (rep == nullptr) {
                untouched = untouched * Monomial::var(v, e);
                continue;
            }
            for (int i = 0; i < e; ++i) t *= *rep;
        }
        if (!untouched.is_one()) t *= Poly::term(untouched, Rat(1));
        result += t;
    }
    return result;
}

Poly Poly::renamed(const std::map<VarId, VarId>& names) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial image;
        for (const auto& [v, e] : m.factors()) {
            auto it = names.find(v);
            image = image * Monomial::var(it == names.end() ? v : it->second, e);
        }
        r.add_term(image, c);
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (it->first.is_one()) {
            out << rat_to_string(abs);
        } else {
            if (abs != 1) out << rat_to_string(abs) << "*";
            out << it->first.to_string();
        }
    }
    return out.str();
}

} // namespace latsym
