#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strat/coefficient.hpp"
#include "strat/monomial.hpp"

namespace strat {

/// Ring descriptor: coefficient domain, variable names and monomial order.
/// Cheap to copy; the payload is shared and immutable.
class Ring {
 public:
  Ring(CoefficientDomain domain, std::vector<std::string> vars,
       MonomialOrder order = MonomialOrder::grevlex())
      : data_(std::make_shared<const Data>(Data{domain, std::move(vars), order})) {
    for (std::size_t i = 0; i < data_->vars.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (data_->vars[i] == data_->vars[j]) throw Error("duplicate variable " + data_->vars[i]);
  }

  static Ring integers() { return Ring(CoefficientDomain::integers(), {}); }
  static Ring rationals(std::vector<std::string> vars) {
    return Ring(CoefficientDomain::rationals(), std::move(vars));
  }

  const CoefficientDomain& domain() const noexcept { return data_->domain; }
  const MonomialOrder& order() const noexcept { return data_->order; }
  const std::vector<std::string>& vars() const noexcept { return data_->vars; }
  std::size_t nvars() const noexcept { return data_->vars.size(); }

  std::optional<std::size_t> var_index(const std::string& name) const {
    for (std::size_t i = 0; i < data_->vars.size(); ++i)
      if (data_->vars[i] == name) return i;
    return std::nullopt;
  }

  /// Z, or a univariate polynomial ring over a field.
  bool is_euclidean() const {
    return (domain().is_integer() && nvars() == 0) || (domain().is_field() && nvars() == 1);
  }
  bool is_integer_ring() const { return domain().is_integer() && nvars() == 0; }

  Ring with_order(MonomialOrder order) const { return Ring(domain(), vars(), order); }

  /// Adjoins fresh variables in front; names are made unique against existing ones.
  Ring prepend_variables(std::size_t count, MonomialOrder order) const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
      std::string base = "_t" + std::to_string(i);
      while (var_index(base)) base += "_";
      names.push_back(base);
    }
    names.insert(names.end(), vars().begin(), vars().end());
    return Ring(domain(), std::move(names), order);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->domain == b.data_->domain && a.data_->vars == b.data_->vars &&
           a.data_->order == b.data_->order;
  }

  std::string describe() const {
    std::string s = domain().name() + "[";
    for (std::size_t i = 0; i < nvars(); ++i) s += (i ? "," : "") + vars()[i];
    return s + "] (" + order().name() + ")";
  }

 private:
  struct Data {
    CoefficientDomain domain;
    std::vector<std::string> vars;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch("ring mismatch: " + a.describe() + " vs " + b.describe());
}

}  // namespace strat
