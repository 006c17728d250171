#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "starlift/errors.hpp"
#include "starlift/gauge_twist.hpp"
#include "starlift/json_io.hpp"
#include "starlift/matrix.hpp"
#include "starlift/moyal.hpp"
#include "starlift/polynomial.hpp"
#include "starlift/star.hpp"
#include "starlift/text.hpp"

namespace starlift {

template <class T>
struct is_polynomial_algebra : std::false_type {};
template <CoefficientField K>
struct is_polynomial_algebra<PolynomialAlgebra<K>> : std::true_type {};

template <class T>
struct is_matrix_algebra : std::false_type {};
template <Algebra A>
struct is_matrix_algebra<MatrixAlgebra<A>> : std::true_type {};

enum class FieldKind { rational, prime };
enum class BaseKind { matrix, polynomial, matrix_polynomial };

struct RunConfig {
  FieldKind field_kind = FieldKind::rational;
  std::uint64_t modulus = 0;
  BaseKind base_kind = BaseKind::polynomial;
  int n = 2;    // matrix dimension
  int dof = 1;  // symplectic degrees of freedom
  StarKind star_kind = StarKind::trivial;
  Json star_maps;       // explicit gauge-twist data, null for seeded random
  int twist_order = 2;  // random twist depth when maps are absent
  int precision = 4;
  std::uint64_t seed = 0;
  Json inputs;  // full config object; commands read their own sections
};

inline RunConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  if (j.contains("field")) {
    const auto& f = j.at("field");
    std::string kind = f.value("kind", "rational");
    if (kind == "rational") {
      cfg.field_kind = FieldKind::rational;
    } else if (kind == "prime") {
      cfg.field_kind = FieldKind::prime;
      if (!f.contains("p")) throw ConfigError("prime field needs \"p\"");
      cfg.modulus = f.at("p").get<std::uint64_t>();
      if (!PrimeField::is_prime(cfg.modulus)) throw ConfigError("\"p\" must be prime");
    } else {
      throw ConfigError("unknown field kind '" + kind + "'");
    }
  }
  if (!j.contains("base")) throw ConfigError("config needs a \"base\" section");
  {
    const auto& b = j.at("base");
    std::string kind = b.value("kind", "");
    if (kind == "matrix") {
      cfg.base_kind = BaseKind::matrix;
    } else if (kind == "polynomial") {
      cfg.base_kind = BaseKind::polynomial;
    } else if (kind == "matrix-polynomial") {
      cfg.base_kind = BaseKind::matrix_polynomial;
    } else {
      throw ConfigError("base kind must be matrix | polynomial | matrix-polynomial");
    }
    if (cfg.base_kind != BaseKind::polynomial) {
      cfg.n = b.value("n", 0);
      if (cfg.n < 1 || cfg.n > 8) throw ConfigError("matrix dimension n must be in 1..8");
    }
    if (cfg.base_kind != BaseKind::matrix) {
      cfg.dof = b.value("dof", 0);
      if (cfg.dof < 1 || cfg.dof > 4)
        throw ConfigError("polynomial degrees of freedom must be in 1..4");
    }
  }
  if (!j.contains("star")) throw ConfigError("config needs a \"star\" section");
  {
    const auto& s = j.at("star");
    std::string kind = s.value("kind", "");
    if (kind == "trivial") {
      cfg.star_kind = StarKind::trivial;
    } else if (kind == "moyal") {
      cfg.star_kind = StarKind::moyal;
    } else if (kind == "gauge-twist") {
      cfg.star_kind = StarKind::gauge_twist;
    } else if (kind == "user") {
      cfg.star_kind = StarKind::user;
    } else {
      throw ConfigError("star kind must be trivial | moyal | gauge-twist | user");
    }
    if (s.contains("maps")) cfg.star_maps = s.at("maps");
    cfg.twist_order = s.value("order", 2);
    if (cfg.twist_order < 1 || cfg.twist_order > 8)
      throw ConfigError("gauge twist order must be in 1..8");
  }
  cfg.precision = j.value("precision", 4);
  if (cfg.precision < 1 || cfg.precision > 32)
    throw ConfigError("precision must be in 1..32");
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.inputs = j;
  return cfg;
}

template <CoefficientField K>
typename K::Element parse_element(const ScalarAlgebra<K>& alg, const Json& j) {
  if (!j.is_string()) throw ConfigError("scalar literal must be a JSON string");
  return alg.field().parse(j.get<std::string>());
}

template <CoefficientField K>
typename PolynomialAlgebra<K>::Element parse_element(const PolynomialAlgebra<K>& alg,
                                                     const Json& j) {
  if (!j.is_string()) throw ConfigError("polynomial literal must be a JSON string");
  return parse_polynomial(alg, j.get<std::string>());
}

template <Algebra A>
typename MatrixAlgebra<A>::Element parse_element(const MatrixAlgebra<A>& alg, const Json& j) {
  int n = alg.dim();
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ConfigError("matrix literal must be an array of " + std::to_string(n) + " rows");
  auto m = alg.zero();
  for (int i = 0; i < n; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ConfigError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) +
                        " entries");
    for (int k = 0; k < n; ++k)
      m.at(i, k) = parse_element(alg.entry_algebra(), row.at(static_cast<std::size_t>(k)));
  }
  return m;
}

// Series literal: {"coeffs": [...]} or a bare array, padded with zeros up to
// the configured precision.
template <Algebra A>
TruncatedSeries<typename A::Element> parse_series(const A& alg, const Json& j, int precision) {
  const Json* coeffs = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw ConfigError("series literal needs \"coeffs\"");
    coeffs = &j.at("coeffs");
  }
  if (!coeffs->is_array()) throw ConfigError("series coefficients must be an array");
  if (static_cast<int>(coeffs->size()) > precision)
    throw ConfigError("series literal longer than the configured precision");
  std::vector<typename A::Element> c;
  for (const auto& e : *coeffs) c.push_back(parse_element(alg, e));
  while (static_cast<int>(c.size()) < precision) c.push_back(alg.zero());
  return TruncatedSeries<typename A::Element>(std::move(c));
}

// Gauge twist data. Polynomial bases take differential operators
// [{"coeff": poly, "alpha": [exponents]}, ...] per order; matrix bases take
// commutator generators [matrix, ...] per order, meaning a -> sum [C_i, a].
template <CoefficientField K>
GaugeTwist<PolynomialAlgebra<K>> twist_from_json(const PolynomialAlgebra<K>& alg,
                                                 const Json& maps) {
  using Element = typename PolynomialAlgebra<K>::Element;
  if (!maps.is_array()) throw ConfigError("gauge twist \"maps\" must be an array");
  std::vector<typename GaugeTwist<PolynomialAlgebra<K>>::LinearMap> ms;
  for (const auto& map_k : maps) {
    if (!map_k.is_array()) throw ConfigError("each twist map must be an array of operators");
    std::vector<std::pair<Element, Exponents>> pieces;
    for (const auto& op : map_k) {
      if (!op.is_object() || !op.contains("coeff") || !op.contains("alpha"))
        throw ConfigError("polynomial twist operator needs \"coeff\" and \"alpha\"");
      Element coeff = parse_element(alg, op.at("coeff"));
      Exponents alpha;
      std::uint64_t total = 0;
      for (const auto& a : op.at("alpha")) {
        alpha.push_back(a.get<std::uint32_t>());
        total += alpha.back();
      }
      if (static_cast<int>(alpha.size()) != 2 * alg.dof())
        throw ConfigError("twist \"alpha\" must list all " + std::to_string(2 * alg.dof()) +
                          " variables");
      if (total == 0) throw ConfigError("twist operators must differentiate at least once");
      pieces.emplace_back(std::move(coeff), std::move(alpha));
    }
    ms.push_back([alg, pieces](const Element& f) {
      Element acc = alg.zero();
      for (const auto& [c, alpha] : pieces) acc = acc + c * derivative_multi(f, alpha);
      return acc;
    });
  }
  return GaugeTwist<PolynomialAlgebra<K>>(alg, std::move(ms));
}

template <Algebra A>
GaugeTwist<MatrixAlgebra<A>> twist_from_json(const MatrixAlgebra<A>& alg, const Json& maps) {
  using Element = typename MatrixAlgebra<A>::Element;
  if (!maps.is_array()) throw ConfigError("gauge twist \"maps\" must be an array");
  std::vector<typename GaugeTwist<MatrixAlgebra<A>>::LinearMap> ms;
  for (const auto& map_k : maps) {
    if (!map_k.is_array()) throw ConfigError("each twist map must be an array of matrices");
    std::vector<Element> gens;
    for (const auto& g : map_k) gens.push_back(parse_element(alg, g));
    ms.push_back([gens](const Element& a) {
      Element acc = a - a;  // zero of the right dimension
      for (const auto& c : gens) acc = acc + (c * a - a * c);
      return acc;
    });
  }
  return GaugeTwist<MatrixAlgebra<A>>(alg, std::move(ms));
}

namespace detail {

// Twist sampling is decoupled from the command's sample stream so reports
// stay reproducible regardless of how many samples a command draws.
inline Rng twist_rng(std::uint64_t seed) { return Rng(seed ^ 0x9e3779b97f4a7c15ull); }

}  // namespace detail

template <CoefficientField K>
StarProduct<PolynomialAlgebra<K>> build_star(const PolynomialAlgebra<K>& alg,
                                             const RunConfig& cfg) {
  switch (cfg.star_kind) {
    case StarKind::trivial:
      return make_trivial(alg);
    case StarKind::moyal:
      if (alg.field().characteristic() != 0)
        throw ConfigError("the Moyal product needs rational coefficients");
      return make_moyal(alg);
    case StarKind::gauge_twist: {
      if (!cfg.star_maps.is_null()) return make_gauge_twist(twist_from_json(alg, cfg.star_maps));
      Rng rng = detail::twist_rng(cfg.seed);
      return make_gauge_twist(sample_differential_twist(alg, rng, cfg.twist_order));
    }
    case StarKind::user:
      return make_projection_star(alg);
  }
  throw ConfigError("unhandled star kind");
}

template <Algebra A>
StarProduct<MatrixAlgebra<A>> build_star(const MatrixAlgebra<A>& alg, const RunConfig& cfg) {
  switch (cfg.star_kind) {
    case StarKind::trivial:
      return make_trivial(alg);
    case StarKind::moyal:
      if constexpr (is_polynomial_algebra<A>::value) {
        if (alg.field().characteristic() != 0)
          throw ConfigError("the Moyal product needs rational coefficients");
        return matrix_star(make_moyal(alg.entry_algebra()), alg.dim());
      } else {
        throw ConfigError("the Moyal product needs a polynomial base");
      }
    case StarKind::gauge_twist: {
      if (!cfg.star_maps.is_null()) return make_gauge_twist(twist_from_json(alg, cfg.star_maps));
      Rng rng = detail::twist_rng(cfg.seed);
      return make_gauge_twist(sample_gauge_twist(alg, rng, cfg.twist_order));
    }
    case StarKind::user:
      throw ConfigError("the user demo star is defined on polynomial bases");
  }
  throw ConfigError("unhandled star kind");
}

// Instantiates the configured coefficient field and base algebra, builds the
// star product, and hands it to the callable. Every CLI command funnels
// through here.
template <class Fn>
int with_tower(const RunConfig& cfg, Fn&& fn) {
  auto dispatch_base = [&](auto field) -> int {
    using K = decltype(field);
    switch (cfg.base_kind) {
      case BaseKind::matrix: {
        MatrixAlgebra<ScalarAlgebra<K>> alg(ScalarAlgebra<K>(field), cfg.n);
        return fn(build_star(alg, cfg));
      }
      case BaseKind::polynomial: {
        PolynomialAlgebra<K> alg(field, cfg.dof);
        return fn(build_star(alg, cfg));
      }
      case BaseKind::matrix_polynomial: {
        MatrixAlgebra<PolynomialAlgebra<K>> alg(PolynomialAlgebra<K>(field, cfg.dof), cfg.n);
        return fn(build_star(alg, cfg));
      }
    }
    throw ConfigError("unhandled base kind");
  };
  if (cfg.field_kind == FieldKind::rational) return dispatch_base(RationalField{});
  return dispatch_base(PrimeField(cfg.modulus));
}

}  // namespace starlift
