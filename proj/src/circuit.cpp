#include "circuit.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

namespace fermiq {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Hadamard: return "hadamard";
    case GateKind::Ybasis: return "ybasis";
    case GateKind::YbasisDagger: return "ybasis_dagger";
    case GateKind::Rx: return "rx";
    case GateKind::Rz: return "rz";
    case GateKind::Tphase: return "tphase";
    case GateKind::GlobalPhase: return "global_phase";
    case GateKind::Cnot: return "cnot";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "hadamard") return GateKind::Hadamard;
  if (name == "ybasis") return GateKind::Ybasis;
  if (name == "ybasis_dagger") return GateKind::YbasisDagger;
  if (name == "rx") return GateKind::Rx;
  if (name == "rz") return GateKind::Rz;
  if (name == "tphase") return GateKind::Tphase;
  if (name == "global_phase") return GateKind::GlobalPhase;
  if (name == "cnot") return GateKind::Cnot;
  throw ContractError("unknown gate kind '" + name + "'");
}

bool gate_kind_has_param(GateKind k) {
  switch (k) {
    case GateKind::Rx:
    case GateKind::Rz:
    case GateKind::Tphase:
    case GateKind::GlobalPhase:
      return true;
    default:
      return false;
  }
}

Gate hadamard(int target) { return {GateKind::Hadamard, target, {}, 0}; }
Gate ybasis(int target) { return {GateKind::Ybasis, target, {}, 0}; }
Gate ybasis_dagger(int target) { return {GateKind::YbasisDagger, target, {}, 0}; }
Gate rx(int target, double theta) { return {GateKind::Rx, target, {}, theta}; }
Gate rz(int target, double theta) { return {GateKind::Rz, target, {}, theta}; }
Gate tphase(int target, double theta) {
  return {GateKind::Tphase, target, {}, theta};
}
Gate global_phase(double phi) { return {GateKind::GlobalPhase, 0, {}, phi}; }
Gate cnot(int control, int target) {
  return {GateKind::Cnot, target, control, 0};
}

namespace {

Matrix local_matrix(GateKind k, double p) {
  Matrix m(2, 2);
  switch (k) {
    case GateKind::Hadamard:
      m << 1, 1, 1, -1;
      m /= std::sqrt(2.0);
      return m;
    case GateKind::Ybasis:
      return local_matrix(GateKind::Rx, -kHalfPi);
    case GateKind::YbasisDagger:
      return local_matrix(GateKind::Rx, kHalfPi);
    case GateKind::Rx: {
      Complex c = std::cos(p / 2), s = Complex(0, -1) * std::sin(p / 2);
      m << c, s, s, c;
      return m;
    }
    case GateKind::Rz:
      m << std::exp(Complex(0, -p / 2)), 0, 0, std::exp(Complex(0, p / 2));
      return m;
    case GateKind::Tphase:
      m << 1, 0, 0, std::exp(Complex(0, -p));
      return m;
    case GateKind::GlobalPhase:
      return std::exp(Complex(0, -p)) * Matrix::Identity(2, 2);
    case GateKind::Cnot: {
      Matrix x(2, 2);
      x << 0, 1, 1, 0;
      return x;
    }
  }
  throw ContractError("unreachable gate kind");
}

}  // namespace

Matrix gate_matrix(const Gate& g) {
  // GlobalPhase is dimensionless; its uncontrolled "local" form is scalar*I.
  bool controlled = g.control.has_value() || g.kind == GateKind::Cnot;
  Matrix u = local_matrix(g.kind, g.param);
  if (!controlled) return u;
  Matrix m = Matrix::Identity(4, 4);
  m.block(2, 2, 2, 2) = u;
  return m;
}

Matrix embed_gate(int n, const Gate& g) {
  if (n > qubit_cap())
    throw ResourceError("embed_gate: qubit count exceeds dense cap");
  auto check = [&](int q) {
    if (q < 1 || q > n)
      throw DimensionError("gate qubit " + std::to_string(q) +
                           " out of range 1.." + std::to_string(n));
  };
  std::optional<int> control = g.control;
  Eigen::Index dim = Eigen::Index{1} << n;
  Matrix u = local_matrix(g.kind, g.param);

  if (g.kind == GateKind::GlobalPhase) {
    Complex phase = std::exp(Complex(0, -g.param));
    if (!control) return phase * Matrix::Identity(dim, dim);
    check(*control);
    // phase applied on the control=|1> subspace
    Matrix m = Matrix::Identity(dim, dim);
    std::uint64_t pos = std::uint64_t{1} << (n - *control);
    for (Eigen::Index i = 0; i < dim; ++i)
      if (static_cast<std::uint64_t>(i) & pos) m(i, i) = phase;
    return m;
  }

  check(g.target);
  if (control) {
    check(*control);
    if (*control == g.target)
      throw ContractError("gate control equals target");
  }
  std::uint64_t tpos = std::uint64_t{1} << (n - g.target);
  std::uint64_t cpos = control ? std::uint64_t{1} << (n - *control) : 0;

  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    std::uint64_t c = static_cast<std::uint64_t>(col);
    if (control && !(c & cpos)) {
      m(col, col) += 1.0;
      continue;
    }
    int b = (c & tpos) ? 1 : 0;
    for (int bp = 0; bp < 2; ++bp) {
      Complex v = u(bp, b);
      if (v == Complex(0, 0)) continue;
      std::uint64_t row = (c & ~tpos) | (bp ? tpos : 0);
      m(static_cast<Eigen::Index>(row), col) += v;
    }
  }
  return m;
}

Circuit::Circuit(int n_qubits) : n_(n_qubits) {
  if (n_ < 1) throw DimensionError("circuit needs at least one qubit");
}

void Circuit::check_gate(const Gate& g) const {
  if (g.kind != GateKind::GlobalPhase) {
    if (g.target < 1 || g.target > n_)
      throw DimensionError("gate target " + std::to_string(g.target) +
                           " out of range 1.." + std::to_string(n_));
  }
  if (g.control) {
    if (*g.control < 1 || *g.control > n_)
      throw DimensionError("gate control out of range");
    if (g.kind != GateKind::GlobalPhase && *g.control == g.target)
      throw ContractError("gate control equals target");
  }
  if (g.kind == GateKind::Cnot && !g.control)
    throw ContractError("cnot requires a control qubit");
  if (!std::isfinite(g.param)) throw ContractError("gate parameter not finite");
}

void Circuit::append(const Gate& g) {
  check_gate(g);
  gates_.push_back(g);
  if (!param_exprs_.empty()) param_exprs_.emplace_back();
}

void Circuit::append(const Gate& g, const std::string& param_expr) {
  check_gate(g);
  if (param_exprs_.empty()) param_exprs_.resize(gates_.size());
  gates_.push_back(g);
  param_exprs_.push_back(param_expr);
}

void Circuit::extend(const Circuit& other) {
  if (other.n_ > n_) throw DimensionError("extend: circuit too wide");
  for (std::size_t i = 0; i < other.gates_.size(); ++i) {
    if (i < other.param_exprs_.size() && !other.param_exprs_[i].empty())
      append(other.gates_[i], other.param_exprs_[i]);
    else
      append(other.gates_[i]);
  }
}

Matrix Circuit::to_matrix() const {
  if (n_ > qubit_cap())
    throw ResourceError("circuit matrix: qubit count exceeds dense cap");
  Eigen::Index dim = Eigen::Index{1} << n_;
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : gates_) u = embed_gate(n_, g) * u;
  return u;
}

double unitarity_defect(const Matrix& u) {
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["n_qubits"] = c.n_qubits();
  auto& gates = j["gates"] = nlohmann::json::array();
  for (const auto& g : c.gates()) {
    nlohmann::json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["target"] = g.target;
    jg["control"] = g.control ? nlohmann::json(*g.control) : nlohmann::json();
    jg["param"] = gate_kind_has_param(g.kind) ? nlohmann::json(g.param)
                                              : nlohmann::json();
    gates.push_back(std::move(jg));
  }
  auto& meta = j["metadata"] = nlohmann::json::object();
  for (const auto& [k, v] : c.metadata()) meta[k] = v;
  if (!c.param_exprs().empty()) {
    auto arr = nlohmann::json::array();
    for (const auto& e : c.param_exprs()) arr.push_back(e);
    meta["param_exprs"] = std::move(arr);
  }
  return j.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractError(std::string("circuit JSON parse error: ") + e.what());
  }
  try {
    Circuit c(j.at("n_qubits").get<int>());
    std::vector<std::string> exprs;
    if (j.contains("metadata") && j["metadata"].contains("param_exprs"))
      exprs = j["metadata"]["param_exprs"].get<std::vector<std::string>>();
    std::size_t i = 0;
    for (const auto& jg : j.at("gates")) {
      Gate g;
      g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
      g.target = jg.value("target", 0);
      if (jg.contains("control") && !jg["control"].is_null())
        g.control = jg["control"].get<int>();
      if (jg.contains("param") && !jg["param"].is_null())
        g.param = jg["param"].get<double>();
      if (i < exprs.size() && !exprs[i].empty())
        c.append(g, exprs[i]);
      else
        c.append(g);
      ++i;
    }
    if (j.contains("metadata"))
      for (const auto& [k, v] : j["metadata"].items())
        if (k != "param_exprs" && v.is_string())
          c.metadata()[k] = v.get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed circuit JSON: ") + e.what());
  }
}

void save_circuit(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write circuit file: " + path);
  out << circuit_to_json(c) << "\n";
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open circuit file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return circuit_from_json(text);
}

}  // namespace fermiq
