#include "latsym/qfun.hpp"

#include <map>
#include <mutex>

namespace latsym {

RingElem q_power(int e) {
    if (e >= 0) return RingElem(Poly::var(VarId::q(), e));
    return RingElem::one() / RingElem(Poly::var(VarId::q(), -e));
}

RingElem q_pochhammer(const RingElem& a, int k) {
    RingElem r = RingElem::one();
    if (a.is_zero()) return r;
    RingElem aq = a;
    const RingElem q = RingElem::q();
    for (int j = 0; j < k; ++j) {
        r *= RingElem::one() - aq;
        if (j + 1 < k) aq *= q;
    }
    return r;
}

RingElem q_factorial(int k) { return q_pochhammer(RingElem::q(), k); }

RingElem q_binomial(int a, int b) {
    if (b < 0 || b > a) return RingElem::zero();
    if (b == 0 || b == a) return RingElem::one();
    if (b > a - b) b = a - b;
    static std::map<std::pair<int, int>, RingElem> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    RingElem r = q_factorial(a) / (q_factorial(a - b) * q_factorial(b));
    cache.emplace(std::pair<int, int>{a, b}, r);
    return r;
}

RingElem q_exp_inverse_series(const RingElem& z, int degree) {
    RingElem sum = RingElem::one();
    RingElem zk = RingElem::one();
    for (int k = 1; k <= degree; ++k) {
        zk *= z;
        sum += zk / q_factorial(k);
    }
    return sum;
}

} // namespace latsym
