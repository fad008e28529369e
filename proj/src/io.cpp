#include "monpg/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <stdexcept>

namespace monpg {

namespace {

Vector vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument("problem config: " + field + " must be an array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw std::invalid_argument("problem config: " + field + " must contain numbers");
    v[static_cast<Index>(i)] = j[i].get<double>();
  }
  return v;
}

Matrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("problem config: " + field + " must be a nonempty 2-D array");
  const Index rows = static_cast<Index>(j.size());
  Matrix m;
  for (Index r = 0; r < rows; ++r) {
    Vector row = vector_from_json(j[static_cast<std::size_t>(r)], field);
    if (r == 0) m.resize(rows, row.size());
    if (row.size() != m.cols())
      throw std::invalid_argument("problem config: " + field + " rows differ in length");
    m.row(r) = row;
  }
  return m;
}

SmoothFunction smooth_from_json(const Json& j, Index n) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("problem config: smooth part needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  SmoothFunction f;
  if (kind == "zero") {
    f = SmoothFunction::zero(n);
  } else if (kind == "quadratic") {
    Matrix a_mat = matrix_from_json(j.at("A"), "smooth.A");
    Vector center = j.contains("center") ? vector_from_json(j.at("center"), "smooth.center")
                                         : Vector::Zero(n).eval();
    f = SmoothFunction::quadratic(a_mat, center, j.value("c", 0.0));
  } else if (kind == "quartic_shift") {
    f = SmoothFunction::quartic_shift(vector_from_json(j.at("scale"), "smooth.scale"),
                                      vector_from_json(j.at("center"), "smooth.center"));
  } else {
    throw std::invalid_argument("problem config: unknown smooth kind '" + kind + "'");
  }
  if (j.contains("sigma")) f.strong_convexity = j.at("sigma").get<double>();
  if (j.contains("lipschitz")) f.grad_lipschitz = j.at("lipschitz").get<double>();
  if (f.n != n) throw std::invalid_argument("problem config: smooth part dimension mismatch");
  return f;
}

ConvexPiece piece_from_json(const Json& j, Index n) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("problem config: piece needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  ConvexPiece p;
  if (kind == "affine") {
    p = ConvexPiece::affine(vector_from_json(j.at("u"), "piece.u"), j.value("c", 0.0));
  } else if (kind == "quadratic") {
    p = ConvexPiece::quadratic(matrix_from_json(j.at("A"), "piece.A"),
                               vector_from_json(j.at("b"), "piece.b"), j.value("c", 0.0));
  } else if (kind == "exp_affine") {
    p = ConvexPiece::exp_affine(j.at("scale").get<double>(),
                                vector_from_json(j.at("u"), "piece.u"), j.value("c", 0.0));
  } else {
    throw std::invalid_argument("problem config: unknown piece kind '" + kind + "'");
  }
  if (p.n != n) throw std::invalid_argument("problem config: piece dimension mismatch");
  return p;
}

}  // namespace

MultiObjectiveProblem problem_from_json(const Json& spec) {
  if (!spec.is_object()) throw std::invalid_argument("problem config: expected an object");
  for (const char* field : {"name", "n", "lb", "ub", "objectives"})
    if (!spec.contains(field))
      throw std::invalid_argument(std::string("problem config: missing field '") + field + "'");

  const Index n = spec.at("n").get<Index>();
  const auto& objectives = spec.at("objectives");
  if (!objectives.is_array() || objectives.empty())
    throw std::invalid_argument("problem config: objectives must be a nonempty array");
  if (spec.contains("m") && spec.at("m").get<std::size_t>() != objectives.size())
    throw std::invalid_argument("problem config: m disagrees with objectives length");

  std::vector<SmoothFunction> smooth;
  std::vector<PiecewiseMaxFunction> nonsmooth;
  for (const auto& obj : objectives) {
    smooth.push_back(obj.contains("smooth") ? smooth_from_json(obj.at("smooth"), n)
                                            : SmoothFunction::zero(n));
    if (obj.contains("pieces")) {
      std::vector<ConvexPiece> pieces;
      for (const auto& pj : obj.at("pieces")) pieces.push_back(piece_from_json(pj, n));
      nonsmooth.emplace_back(std::move(pieces));
    } else {
      nonsmooth.push_back(PiecewiseMaxFunction::zero(n));
    }
  }
  return MultiObjectiveProblem(spec.at("name").get<std::string>(), n, std::move(smooth),
                               std::move(nonsmooth), vector_from_json(spec.at("lb"), "lb"),
                               vector_from_json(spec.at("ub"), "ub"));
}

MultiObjectiveProblem problem_from_json_text(const std::string& text) {
  return problem_from_json(Json::parse(text));
}

namespace {

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

}  // namespace

Json run_result_to_json(const RunResult& result, bool include_trajectory) {
  Json j{
      {"problem", result.problem},
      {"solver", result.solver},
      {"termination", to_string(result.termination)},
      {"final_x", vector_to_json(result.final_x)},
      {"final_f", vector_to_json(result.final_f)},
      {"final_d_norm", result.final_d_norm},
      {"iterations", result.counter.n_it},
      {"counters",
       {{"n_f", result.counter.n_f},
        {"n_grad", result.counter.n_grad},
        {"n_hess", result.counter.n_hess},
        {"n_it", result.counter.n_it}}},
      {"max_regularization", result.max_regularization},
      {"wall_time_seconds", result.wall_time_seconds},
  };
  if (!result.failure_message.empty()) j["failure_message"] = result.failure_message;
  if (include_trajectory) {
    Json steps = Json::array();
    for (const auto& rec : result.trajectory) {
      steps.push_back({{"x", vector_to_json(rec.x)},
                       {"f", vector_to_json(rec.f)},
                       {"d", vector_to_json(rec.d)},
                       {"t", rec.t},
                       {"alpha", rec.alpha},
                       {"mu", rec.mu}});
    }
    j["trajectory"] = std::move(steps);
  }
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace monpg
