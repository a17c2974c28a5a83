#pragma once

#include <vector>

#include "mps/job.hpp"
#include "mps/polynomial.hpp"

namespace mps {

/// Polynomial map germ (C^n,0) -> (C^p,0). Variables flagged as parameters
/// turn it into the unfolding (s,x) -> (s, f_s(x)); the identity components
/// for the parameters are implicit and come first, in table order.
class MapGerm {
 public:
  /// NotAGermAtOrigin when a component has a nonzero constant term.
  MapGerm(RingPtr ring, std::vector<Polynomial> components);

  /// Builds the germ from a job: parameters first, then source variables.
  static MapGerm from_job(const JobSpec& job);

  const RingPtr& ring() const noexcept { return ring_; }
  const VariableTable& table() const noexcept { return ring_->table; }
  /// The listed components f_1..f_p (without the parameter identities).
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  /// Parameter identities followed by the listed components.
  std::vector<Polynomial> full_components() const;

  std::size_t num_params() const noexcept { return params_; }
  bool has_parameters() const noexcept { return params_ > 0; }
  /// Source dimension counting parameters (n + r).
  std::size_t source_dim() const noexcept { return ring_->nvars(); }
  /// Target dimension counting parameter identities (p + r).
  std::size_t target_dim() const noexcept { return components_.size() + params_; }

  /// The germ f_0: parameters set to zero and dropped from the table.
  MapGerm at_zero_parameters() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> components_;
  std::size_t params_ = 0;
};

}  // namespace mps
