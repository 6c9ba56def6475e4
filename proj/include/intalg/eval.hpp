#pragma once

#include "intalg/base_algebra.hpp"
#include "intalg/counterexample.hpp"
#include "intalg/expr.hpp"
#include "intalg/hurwitz.hpp"
#include "intalg/intdiff.hpp"
#include "intalg/shuffle.hpp"

#include <json.hpp>

#include <string>

namespace intalg {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation of the expression language, one entry point per structure.
// Unsupported operators for the chosen structure raise EvalError.

// D, Q, E available; scalars are rationals
DiffPoly eval_diffpoly(const ExprPtr& e, const Rational& lambda);

// D, Q, E available; scalars are Gaussian rationals; division requires a
// factored denominator (product of linear factors and constants)
RatFunc eval_ratfunc(const ExprPtr& e, const Rational& lambda);

// D, P available; (*) builds words over Q{u}
TensorElement<DiffPolyAlgebra> eval_shuffle(const ExprPtr& e, const DiffPolyAlgebra& alg);

// D, P, E, eps available; (*) appends transcendental tail slots
IDElement<DiffPolyAlgebra> eval_idalg(const ExprPtr& e, const IdAlgebra<DiffPolyAlgebra>& ida);

// D, P, E available; variables x and y, weight 0
XYPoly eval_counterexample(const ExprPtr& e);

nlohmann::json json_of(const Rational& r);
nlohmann::json json_of(const GaussianRational& z);
nlohmann::json json_of(const DiffMonomial& m);
nlohmann::json json_of(const DiffPoly& p);
nlohmann::json json_of(const RatFunc& f);
nlohmann::json json_of(const TensorElement<DiffPolyAlgebra>& t);
nlohmann::json json_of(const IDElement<DiffPolyAlgebra>& x);
nlohmann::json json_of(const HurwitzSeries& h);
nlohmann::json json_of(const XYPoly& p);

}  // namespace intalg
