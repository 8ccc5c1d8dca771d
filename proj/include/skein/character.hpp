#ifndef SKEIN_CHARACTER_HPP
#define SKEIN_CHARACTER_HPP

#include <map>
#include <stdexcept>

#include "skein/partition.hpp"

namespace skein {

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

// symmetric group character chi_lambda(mu); requires |lambda| == |mu|
Int sym_character(const Partition& lambda, const Partition& mu);

// same value by a different route (alternating sum over S_n monomials of
// the power-sum product); capped at |lambda| <= 7, throws TooLarge above
Int sym_character_oracle(const Partition& lambda, const Partition& mu);

// Littlewood-Richardson coefficient c^{nu}_{lambda,mu}
Int lr_coeff(const Partition& nu, const Partition& lambda,
             const Partition& mu);

// full expansion s_lambda * s_mu = sum_nu c^{nu} s_nu, by repeatedly
// stripping the lex-leading monomial of the polynomial product; used as an
// independent check on lr_coeff (capped at |lambda|+|mu| <= 8)
std::map<Partition, Int> schur_product_oracle(const Partition& lambda,
                                              const Partition& mu);

}  // namespace skein

#endif
