#include "spinflux/json_io.hpp"

namespace spinflux {

Json scalar_to_json(const Scalar& s) {
  Json j;
  j["num"] = s.numerator_copy().to_string();
  j["den"] = s.denominator_copy().to_string();
  return j;
}

Scalar scalar_from_json(const Json& j) {
  Polynomial num = Polynomial::parse(j.at("num").get<std::string>());
  Polynomial den = Polynomial::parse(j.at("den").get<std::string>());
  return Scalar(num, den);
}

Json matrix_to_json(const Matrix& m, const std::vector<std::string>& variables) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  if (!variables.empty()) j["variables"] = variables;
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(i, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  Matrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const Json& entries = j.at("entries");
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = scalar_from_json(entries.at(i).at(c));
  return m;
}

Json space_to_json(const AffineSolutionSpace& space) {
  Json j;
  j["variables"] = space.labels;
  j["dimension"] = space.dimension();
  Json part = Json::array();
  for (const auto& x : space.particular) part.push_back(scalar_to_json(x));
  j["particular"] = std::move(part);
  Json kernel = Json::array();
  for (const auto& v : space.kernel) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(scalar_to_json(x));
    kernel.push_back(std::move(row));
  }
  j["kernel"] = std::move(kernel);
  Json conds = Json::array();
  for (const auto& c : space.conditions) {
    Json jc;
    jc["value"] = scalar_to_json(c.value);
    jc["source"] = c.source;
    jc["special_locus"] = c.special_locus;
    conds.push_back(std::move(jc));
  }
  j["conditions"] = std::move(conds);
  return j;
}

AffineSolutionSpace space_from_json(const Json& j) {
  AffineSolutionSpace space;
  space.labels = j.at("variables").get<std::vector<std::string>>();
  for (const auto& x : j.at("particular")) space.particular.push_back(scalar_from_json(x));
  for (const auto& row : j.at("kernel")) {
    std::vector<Scalar> v;
    for (const auto& x : row) v.push_back(scalar_from_json(x));
    space.kernel.push_back(std::move(v));
  }
  for (const auto& c : j.at("conditions"))
    space.conditions.push_back(GenericityCondition{scalar_from_json(c.at("value")),
                                                   c.at("source").get<std::string>(),
                                                   c.at("special_locus").get<bool>()});
  return space;
}

Json form_to_json(const ExteriorForm& w) {
  Json j;
  j["n"] = w.ambient();
  j["k"] = w.degree();
  Json terms = Json::array();
  for (const auto& [idx, c] : w.terms()) {
    Json t;
    t["idx"] = idx;
    t["coef"] = scalar_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

ExteriorForm form_from_json(const Json& j) {
  ExteriorForm w(j.at("n").get<int>(), j.at("k").get<int>());
  for (const auto& t : j.at("terms"))
    w.add_term(t.at("idx").get<IndexTuple>(), scalar_from_json(t.at("coef")));
  return w;
}

Json killing_system_to_json(const KillingSystem& sys) {
  Json j = matrix_to_json(sys.m, sys.labels);
  Json rhs = Json::array();
  for (const auto& x : sys.rhs) rhs.push_back(scalar_to_json(x));
  j["rhs"] = std::move(rhs);
  j["torsion_count"] = sys.torsion_count;
  j["p"] = scalar_to_json(sys.p);
  j["q"] = scalar_to_json(sys.q);
  Json prov = Json::array();
  for (const auto& [frame, slot] : sys.provenance)
    prov.push_back(Json{{"frame", frame}, {"slot", slot}});
  j["provenance"] = std::move(prov);
  return j;
}

Json generators_to_json(const CliffordRep& rep) {
  Json j;
  j["n"] = rep.n;
  j["dim"] = rep.dim;
  Json gens = Json::array();
  for (const auto& g : rep.gen) {
    Json rows = Json::array();
    for (int i = 0; i < g.rows(); ++i) {
      Json row = Json::array();
      for (int c = 0; c < g.cols(); ++c) {
        const Rational& v = g.at(i, c).rational_value();
        if (v.get_den() != 1) throw std::logic_error("generator entry is not an integer");
        row.push_back(std::stol(v.get_num().get_str()));
      }
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace spinflux
