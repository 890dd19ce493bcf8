#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "towercut/cyclotomic.hpp"

namespace towercut {

namespace detail {

// Unit group structure of (Z/p^s)^* with discrete-log tables: a fixed
// primitive root for odd p (smallest one mod p^2, which stays primitive for
// every s), the <-1, 5> decomposition for p = 2.
struct UnitGroup {
    unsigned long p = 0;
    unsigned long s = 0;
    unsigned long modulus = 0;
    unsigned long phi = 0;
    unsigned long primitive_root = 0;          // odd p only
    unsigned long five_order = 0;              // p = 2: |<5>| = 2^(s-2)
    std::vector<unsigned long> dlog;           // odd p: index on g0; p=2: index on 5
    std::vector<unsigned char> sign_exponent;  // p = 2: epsilon with x = (-1)^eps 5^i

    static std::shared_ptr<const UnitGroup> make(unsigned long modulus);
};

}  // namespace detail

// Dirichlet character of prime-power modulus, stored by its images on the
// group generators. Values are roots of unity of exact order order().
class DirichletCharacter {
  public:
    unsigned long modulus() const { return group_->modulus; }
    unsigned long p() const { return group_->p; }
    unsigned long order() const { return order_; }
    // least p^t the character factors through
    unsigned long conductor() const { return conductor_; }
    bool is_odd() const;
    // exponent vector: {a} on the primitive root for odd p, {eps, j} on
    // (-1, 5) for p = 2
    const std::vector<unsigned long>& generator_images() const { return images_; }
    // chi(x) = zeta_order^e for the returned e; nullopt when gcd(x, p) > 1
    std::optional<unsigned long> value_exponent(unsigned long x) const;

    static DirichletCharacter on_primitive_root(std::shared_ptr<const detail::UnitGroup> group,
                                                unsigned long a);
    static DirichletCharacter on_two_power(std::shared_ptr<const detail::UnitGroup> group,
                                           unsigned long eps, unsigned long j);

  private:
    DirichletCharacter() = default;
    std::shared_ptr<const detail::UnitGroup> group_;
    std::vector<unsigned long> images_;
    unsigned long order_ = 1;
    unsigned long conductor_ = 1;
};

struct CharacterOrbit {
    DirichletCharacter representative;
    unsigned long orbit_size = 1;  // phi(order): size of the conjugacy class
};

// One representative per Galois orbit of the odd characters mod p^s; orbit
// sizes sum to phi(p^s)/2. Empty for modulus <= 2.
std::vector<CharacterOrbit> enumerate_odd_characters(unsigned long modulus);

unsigned long conductor(const DirichletCharacter& chi);

// Generalized Bernoulli number B_{1,chi} = (1/f) sum_{a<f} chit(a) a, with
// chit the primitive character inducing chi and f its conductor, as an
// element of Q(zeta_order). Requires chi odd; the value is never zero.
CycloElement b1_chi(const DirichletCharacter& chi);

}  // namespace towercut
