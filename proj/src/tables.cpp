#include "spinflux/tables.hpp"

namespace spinflux {

namespace {

CoefficientTable::Row row(const std::string& constant,
                          std::initializer_list<std::pair<const char*, const char*>> coeffs) {
  CoefficientTable::Row r;
  r.constant = Scalar::of(constant);
  for (const auto& [label, value] : coeffs) r.coeffs.emplace(label, Scalar::of(value));
  return r;
}

CoefficientTable build_sasakian() {
  CoefficientTable t;
  t.free_labels = {"f127", "f172", "f177", "f271", "f272", "f277", "f"};
  t.rows["t12"] = row("0", {{"f272", "-4*p - 4*q"}});
  t.rows["t21"] = row("0", {{"f272", "4*p + 4*q"}});
  t.rows["t17"] = row("0", {{"f277", "-4*p - 4*q"}});
  t.rows["t71"] = row("0", {{"f277", "4*p + 4*q"}});
  t.rows["t27"] = row("0", {{"f177", "4*p + 4*q"}});
  t.rows["t72"] = row("0", {{"f177", "4*p + 4*q"}});
  t.rows["t11"] = row("-2/3", {{"f", "4/3*p"},
                               {"f127", "-8/3*p"},
                               {"f172", "8/3*p"},
                               {"f271", "-4/3*p - 4*q"}});
  t.rows["t22"] = row("2/3", {{"f", "-4/3*p"},
                              {"f127", "8/3*p"},
                              {"f271", "-8/3*p"},
                              {"f172", "4/3*p + 4*q"}});
  t.rows["t77"] = row("2/3", {{"f", "-4/3*p"},
                              {"f172", "-8/3*p"},
                              {"f271", "-8/3*p"},
                              {"f127", "-4/3*p - 4*q"}});
  t.rows["t"] = row("2/3", {{"f127", "8/3*p"},
                            {"f172", "-8/3*p"},
                            {"f271", "-8/3*p"},
                            {"f", "8/3*p + 4*q"}});
  t.rows["f121"] = row("0", {{"f277", "-1"}});
  t.rows["f122"] = row("0", {{"f177", "-1"}});
  t.rows["f171"] = row("0", {{"f272", "1"}});
  return t;
}

CoefficientTable build_sasakian_coupled() {
  CoefficientTable t;
  t.free_labels = {"f127", "f172", "f177", "f271", "f272", "f277", "f"};
  t.rows["t12"] = row("0", {{"f272", "-7"}});
  t.rows["t21"] = row("0", {{"f272", "7"}});
  t.rows["t17"] = row("0", {{"f277", "-7"}});
  t.rows["t71"] = row("0", {{"f277", "7"}});
  t.rows["t27"] = row("0", {{"f177", "7"}});
  t.rows["t72"] = row("0", {{"f177", "7"}});
  t.rows["t11"] = row("-2/3", {{"f", "1"}, {"f127", "-2"}, {"f172", "2"}, {"f271", "-5"}});
  t.rows["t22"] = row("2/3", {{"f", "-1"}, {"f127", "2"}, {"f271", "-2"}, {"f172", "5"}});
  t.rows["t77"] = row("2/3", {{"f", "-1"}, {"f172", "-2"}, {"f271", "-2"}, {"f127", "-5"}});
  t.rows["t"] = row("2/3", {{"f127", "2"}, {"f172", "-2"}, {"f271", "-2"}, {"f", "6"}});
  t.rows["f121"] = row("0", {{"f277", "-1"}});
  t.rows["f122"] = row("0", {{"f177", "-1"}});
  t.rows["f171"] = row("0", {{"f272", "1"}});
  return t;
}

CoefficientTable build_aw() {
  CoefficientTable t;
  t.free_labels = {"alpha4", "beta4", "gamma4", "eps4", "xi4",
                   "nu4",    "eta4",  "omega4", "pi4",  "rho4"};
  t.rows["delta4"] = row("0", {{"eps4", "1"}, {"eta4", "-2"}});
  t.rows["mu4"] = row("0", {{"xi4", "1"}, {"nu4", "2"}});
  t.rows["lambda4"] = row("0", {{"pi4", "1"}});
  t.rows["beta3"] = row("0", {{"pi4", "4*p + 4*q"}});
  t.rows["gamma3"] = row("0", {{"nu4", "-4*p - 4*q"}});
  t.rows["delta3"] = row("0", {{"pi4", "-4*p - 4*q"}});
  t.rows["xi3"] = row("0", {{"eta4", "-4*p - 4*q"}});
  t.rows["eta3"] = row("0", {{"xi4", "4*p + 4*q"}, {"nu4", "8*p + 8*q"}});
  t.rows["omega3"] = row("0", {{"eps4", "-4*p - 4*q"}});
  t.rows["pi3"] = row("0", {{"xi4", "4*p + 4*q"}});
  t.rows["rho3"] = row("0", {{"eps4", "-4*p - 4*q"}, {"eta4", "8*p + 8*q"}});
  t.rows["alpha3"] = row("(2 + 6*s - 3*s*y - 4*s^2 + 2*y)/(3*s)",
                         {{"alpha4", "-4/3*p"},
                          {"beta4", "4/3*p"},
                          {"gamma4", "4/3*p"},
                          {"omega4", "8/3*p"},
                          {"rho4", "-4/3*p - 4*q"}});
  t.rows["eps3"] = row("(-2 + 6*s - 3*s*y + 4*s^2 - 2*y)/(3*s)",
                       {{"alpha4", "4/3*p"},
                        {"beta4", "-4/3*p"},
                        {"gamma4", "-4/3*p"},
                        {"omega4", "4/3*p + 4*q"},
                        {"rho4", "-8/3*p"}});
  t.rows["mu3"] = row("(-2 - 8*s^2 + 4*y)/(3*s)", {{"alpha4", "4/3*p"},
                                                   {"beta4", "-4/3*p"},
                                                   {"gamma4", "8/3*p + 4*q"},
                                                   {"omega4", "-8/3*p"},
                                                   {"rho4", "-8/3*p"}});
  t.rows["nu3"] = row("(4 - 8*s^2 + y)/(3*s)", {{"alpha4", "4/3*p"},
                                                {"beta4", "8/3*p + 4*q"},
                                                {"gamma4", "-4/3*p"},
                                                {"omega4", "-8/3*p"},
                                                {"rho4", "-8/3*p"}});
  t.rows["lambda3"] = row("(-4 + 8*s^2 - y)/(3*s)", {{"alpha4", "8/3*p + 4*q"},
                                                     {"beta4", "4/3*p"},
                                                     {"gamma4", "4/3*p"},
                                                     {"omega4", "8/3*p"},
                                                     {"rho4", "8/3*p"}});
  return t;
}

}  // namespace

const CoefficientTable& sasakian_table() {
  static const CoefficientTable t = build_sasakian();
  return t;
}

const CoefficientTable& sasakian_coupled_table() {
  static const CoefficientTable t = build_sasakian_coupled();
  return t;
}

const CoefficientTable& aw_table() {
  static const CoefficientTable t = build_aw();
  return t;
}

std::optional<std::string> table_mismatch(const AffineSolutionSpace& space,
                                          const CoefficientTable& table) {
  if (space.dimension() != int(table.free_labels.size()))
    return "dimension " + std::to_string(space.dimension()) + " != " +
           std::to_string(table.free_labels.size());
  for (const auto& [label, r] : table.rows) {
    int i = space.label_index(label);
    if (!(space.particular[i] == r.constant))
      return label + ": constant " + space.particular[i].to_string() + " != " +
             r.constant.to_string();
    for (std::size_t j = 0; j < table.free_labels.size(); ++j) {
      auto it = r.coeffs.find(table.free_labels[j]);
      Scalar expect = it == r.coeffs.end() ? Scalar(0) : it->second;
      if (!(space.kernel[j][i] == expect))
        return label + "/" + table.free_labels[j] + ": " + space.kernel[j][i].to_string() +
               " != " + expect.to_string();
    }
  }
  return std::nullopt;
}

CoefficientTable specialize_table(const CoefficientTable& table,
                                  const std::map<Var, Rational>& assignment) {
  CoefficientTable out;
  out.free_labels = table.free_labels;
  for (const auto& [label, r] : table.rows) {
    CoefficientTable::Row nr;
    nr.constant = r.constant.substitute(assignment);
    for (const auto& [l, v] : r.coeffs) {
      Scalar s = v.substitute(assignment);
      if (!s.is_zero()) nr.coeffs.emplace(l, std::move(s));
    }
    out.rows.emplace(label, std::move(nr));
  }
  return out;
}

bool tables_equal(const CoefficientTable& a, const CoefficientTable& b) {
  if (a.free_labels != b.free_labels) return false;
  if (a.rows.size() != b.rows.size()) return false;
  for (const auto& [label, ra] : a.rows) {
    auto it = b.rows.find(label);
    if (it == b.rows.end()) return false;
    if (!(ra.constant == it->second.constant)) return false;
    // compare coefficient maps treating absent entries as zero
    for (const auto& l : a.free_labels) {
      auto ca = ra.coeffs.find(l);
      auto cb = it->second.coeffs.find(l);
      Scalar va = ca == ra.coeffs.end() ? Scalar(0) : ca->second;
      Scalar vb = cb == it->second.coeffs.end() ? Scalar(0) : cb->second;
      if (!(va == vb)) return false;
    }
  }
  return true;
}

}  // namespace spinflux
