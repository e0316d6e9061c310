#include "plethys/io.hpp"

#include <fstream>
#include <map>

#include "plethys/errors.hpp"

namespace plethys {

namespace {

Json rat_fields(Json term, const Rat& c) {
  term["num"] = c.get_num().get_str();
  term["den"] = c.get_den().get_str();
  return term;
}

Rat rat_from(const Json& term) {
  const BigInt num(term.at("num").get<std::string>());
  const BigInt den(term.at("den").get<std::string>());
  if (den <= 0) throw InvalidInput("coefficient denominator must be positive");
  return make_rat(num, den);
}

Partition partition_from(const Json& j) {
  if (!j.is_array()) throw InvalidInput("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& p : j) {
    if (!p.is_number_integer()) throw InvalidInput("partition parts must be integers");
    parts.push_back(p.get<int>());
  }
  return Partition(std::move(parts));
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const InvalidInput&) {
    throw;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const SymFunc& f) {
  Json j;
  j["truncation"] = f.truncation();
  j["terms"] = Json::array();
  for (const auto& [key, c] : f.terms()) {
    Json term;
    term["partition"] = std::vector<int>(key.parts().begin(), key.parts().end());
    j["terms"].push_back(rat_fields(std::move(term), c));
  }
  return j;
}

SymFunc symfunc_from_json(const Json& j) {
  return guarded([&] {
    SymFunc f(j.at("truncation").get<int>());
    for (const auto& term : j.at("terms")) f.add_term(partition_from(term.at("partition")), rat_from(term));
    return f;
  });
}

Json to_json(const WreathSymFunc& w) {
  Json j;
  j["truncation"] = w.truncation();
  j["terms"] = Json::array();
  for (const auto& [key, c] : w.terms()) {
    Json monomial = Json::array();
    for (S2Class cls : {S2Class::e, S2Class::t}) {
      const auto& part = key.part(cls);
      auto parts = part.parts();
      // ascending k within each class
      for (std::size_t i = parts.size(); i-- > 0;) {
        if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
        Json factor;
        factor["k"] = parts[i];
        factor["class"] = cls == S2Class::e ? "e" : "t";
        factor["exp"] = part.multiplicity(parts[i]);
        monomial.push_back(std::move(factor));
      }
    }
    Json term;
    term["monomial"] = std::move(monomial);
    j["terms"].push_back(rat_fields(std::move(term), c));
  }
  return j;
}

WreathSymFunc wreath_from_json(const Json& j) {
  return guarded([&] {
    WreathSymFunc w(j.at("truncation").get<int>());
    for (const auto& term : j.at("terms")) {
      std::vector<int> e, t;
      for (const auto& factor : term.at("monomial")) {
        const auto cls = factor.at("class").get<std::string>();
        const int k = factor.at("k").get<int>();
        const int exp = factor.at("exp").get<int>();
        if (cls != "e" && cls != "t") throw InvalidInput("class must be \"e\" or \"t\"");
        if (exp < 1) throw InvalidInput("exponent must be positive");
        (cls == "e" ? e : t).insert((cls == "e" ? e : t).end(), static_cast<std::size_t>(exp), k);
      }
      w.add_term(WreathMonomial{Partition(std::move(e)), Partition(std::move(t))}, rat_from(term));
    }
    return w;
  });
}

ModuleSpec module_spec_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) throw InvalidInput("module spec must be a JSON object");
    ModuleSpec spec;
    for (const auto& [name, value] : j.items()) {
      if (name != "genus0" && name != "genus1") throw InvalidInput("unknown module spec key \"" + name + "\"");
      auto& table = name == "genus0" ? spec.genus0 : spec.genus1;
      if (!value.is_object()) throw InvalidInput(name + " must be an object");
      for (const auto& [arity, lambdas] : value.items()) {
        std::size_t used = 0;
        const int n = std::stoi(arity, &used);
        if (used != arity.size()) throw InvalidInput("arity key \"" + arity + "\" is not a decimal integer");
        if (!lambdas.is_array()) throw InvalidInput("summand list must be an array");
        auto& list = table[n];
        for (const auto& lambda : lambdas) list.push_back(partition_from(lambda));
      }
    }
    spec.validate();
    return spec;
  });
}

ModuleSpec load_module_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open module spec file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("module spec " + path + " is not valid JSON: " + e.what());
  }
  return module_spec_from_json(j);
}

Json to_json(const ModuleSpec& spec) {
  Json j;
  for (auto [name, table] : {std::pair{"genus0", &spec.genus0}, std::pair{"genus1", &spec.genus1}}) {
    Json obj = Json::object();
    for (const auto& [n, lambdas] : *table) {
      Json list = Json::array();
      for (const auto& lambda : lambdas) list.push_back(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
      obj[std::to_string(n)] = std::move(list);
    }
    j[name] = std::move(obj);
  }
  return j;
}

}  // namespace plethys
