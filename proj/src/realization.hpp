#ifndef COXLEHMER_SRC_REALIZATION_HPP
#define COXLEHMER_SRC_REALIZATION_HPP

#include <memory>

#include "coxlehmer/coxeter.hpp"

namespace coxlehmer::detail {

/// Faithful concrete model of a Coxeter group: every element has a unique
/// canonical form, and generators act on it from either side.
class Realization {
 public:
  virtual ~Realization() = default;
  virtual CanonicalForm identity() const = 0;
  virtual CanonicalForm right(const CanonicalForm& w, int s) const = 0;
  virtual CanonicalForm left(const CanonicalForm& w, int s) const = 0;
  std::size_t form_size() const { return identity().size(); }
};

std::unique_ptr<Realization> make_realization(const CoxeterSystem& system);

}  // namespace coxlehmer::detail

#endif  // COXLEHMER_SRC_REALIZATION_HPP
