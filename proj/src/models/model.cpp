#include "fgr/models/model.hpp"

#include "fgr/errors.hpp"

namespace fgr {

std::string to_string(Equation e) {
  switch (e) {
    case Equation::bbm: return "bbm";
    case Equation::kdv: return "kdv";
    case Equation::nls: return "nls";
    case Equation::hypnls: return "hypnls";
  }
  return "?";
}

Equation equation_from_string(const std::string& name) {
  if (name == "bbm") return Equation::bbm;
  if (name == "kdv") return Equation::kdv;
  if (name == "nls") return Equation::nls;
  if (name == "hypnls") return Equation::hypnls;
  throw ContractViolation("unknown equation '" + name + "'");
}

State EquationModel::rhs(const State& s) const {
  State a = zero_state();
  State b = zero_state();
  explicit_rhs(s, a);
  implicit_rhs(s, b);
  a += b;
  return a;
}

void EquationModel::check_state(const State& s, const char* where) const {
  if (s.size() != components()) {
    throw ContractViolation(std::string(where) + ": expected " +
                            std::to_string(components()) + " components, got " +
                            std::to_string(s.size()));
  }
  if (!(s.grid() == *grid_)) {
    throw ContractViolation(std::string(where) + ": state lives on another grid");
  }
}

std::unique_ptr<EquationModel> make_model(Equation eq, GridPtr grid,
                                          const ModelParams& params) {
  switch (eq) {
    case Equation::bbm: return std::make_unique<BbmModel>(std::move(grid));
    case Equation::kdv: return std::make_unique<KdvModel>(std::move(grid));
    case Equation::nls:
      return std::make_unique<NlsModel>(std::move(grid), params.beta, params.collocation);
    case Equation::hypnls:
      return std::make_unique<HypNlsModel>(std::move(grid), params.beta, params.tau);
  }
  throw ContractViolation("make_model: bad equation");
}

}  // namespace fgr
