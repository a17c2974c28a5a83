#include "mps/map_germ.hpp"

#include "mps/error.hpp"
#include "mps/parser.hpp"

namespace mps {

MapGerm::MapGerm(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorKind::InvalidArgument, "a map germ needs at least one component");
  for (auto& f : components_) {
    if (!same_table(f.ring(), ring_)) {
      throw Error(ErrorKind::IncompatibleTables, "component over a different variable table");
    }
    if (constant_term(f) != 0) {
      throw Error(ErrorKind::NotAGermAtOrigin, "component '" + render_poly(f) + "' does not vanish at the origin");
    }
    f = f.in_ring(ring_);
  }
  for (const auto& v : ring_->table.variables()) {
    if (v.parameter) ++params_;
  }
}

MapGerm MapGerm::from_job(const JobSpec& job) {
  std::vector<Variable> vars;
  for (const auto& p : job.params) vars.push_back({p, 0, true});
  for (const auto& x : job.source_vars) vars.push_back({x, 0, false});
  RingPtr ring = make_ring(VariableTable(std::move(vars)), MonomialOrder::from_name(job.options.order));
  std::vector<Polynomial> comps;
  for (const auto& text : job.components) comps.push_back(parse_poly(text, ring));
  return MapGerm(std::move(ring), std::move(comps));
}

std::vector<Polynomial> MapGerm::full_components() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (ring_->table[i].parameter) out.push_back(Polynomial::variable(ring_, i));
  }
  out.insert(out.end(), components_.begin(), components_.end());
  return out;
}

MapGerm MapGerm::at_zero_parameters() const {
  if (!has_parameters()) throw Error(ErrorKind::NoParameters, "germ has no parameters");
  std::vector<Variable> vars;
  std::map<std::size_t, Polynomial> images;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (!ring_->table[i].parameter) vars.push_back(ring_->table[i]);
  }
  RingPtr target = make_ring(VariableTable(std::move(vars)), ring_->order);
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (ring_->table[i].parameter) images.emplace(i, Polynomial(target));
  }
  std::vector<Polynomial> comps;
  for (const auto& f : components_) comps.push_back(substitute(f, images, target));
  return MapGerm(std::move(target), std::move(comps));
}

}  // namespace mps
