#include "towercut/shanks.hpp"

#include <stdexcept>

#include "towercut/parallel.hpp"
#include "towercut/primes.hpp"

namespace towercut {

ShanksRecord ShanksRecord::make(const Int& a) {
    if (a < 0) throw std::domain_error("Shanks parameter a must be non-negative");
    ShanksRecord r;
    r.a = a;
    r.p = a * a + 3 * a + 9;
    r.b = -a;
    r.c = -(a + 3);
    r.d = -1;
    r.discriminant = cubic_discriminant(r);
    r.prime = is_prime(r.p);
    return r;
}

Int cubic_discriminant(const ShanksRecord& r) {
    const Int &b = r.b, &c = r.c, &d = r.d;
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

std::vector<ShanksRecord> shanks_scan(const Int& a_min, const Int& a_max, unsigned threads) {
    if (a_min < 1 || a_min > a_max)
        throw std::domain_error("shanks_scan requires 1 <= a_min <= a_max");
    const Int span = a_max - a_min + 1;
    if (!span.fits_ulong_p()) throw std::domain_error("scan range too large");
    const std::size_t count = span.get_ui();

    std::vector<std::optional<ShanksRecord>> slots(count);
    parallel_for(count, threads, [&](std::size_t i) {
        ShanksRecord r = ShanksRecord::make(a_min + static_cast<unsigned long>(i));
        if (r.prime) slots[i] = std::move(r);
    });

    std::vector<ShanksRecord> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

}  // namespace towercut
