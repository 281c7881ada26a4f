#include "szeta/mp/precision.hpp"

#include <algorithm>

namespace szeta::mp {

PrecisionContext PrecisionContext::for_digits(int digits, Escalation e) {
  PrecisionContext c;
  c.bits = std::max<Bits>(64, static_cast<Bits>(std::ceil(digits * 3.3219281)) + 32);
  c.escalation = e;
  c.target_digits = digits;
  c.max_bits = std::max<Bits>(c.max_bits, 4 * c.bits);
  return c;
}

void PrecisionContext::validate() const {
  if (bits < 64) throw DomainError("precision below 64 bits");
  if (max_bits < bits) throw DomainError("max_bits below bits");
  if (target_digits < 0) throw DomainError("negative target digits");
}

}  // namespace szeta::mp
