#include "surfrep/evaluation.hpp"

#include <stdexcept>

#include "surfrep/fox.hpp"

namespace surfrep {

void check_configuration(int genus, const Configuration& c) {
  check_genus(genus);
  if (c.size() != static_cast<std::size_t>(2 * genus))
    throw std::invalid_argument("configuration needs 2*genus matrices");
  for (const Mat& m : c)
    if (m.rows() != c[0].rows() || m.rows() != m.cols())
      throw std::invalid_argument("configuration matrices must share a size");
}

Mat evaluate_word(const Word& w, const Configuration& c) {
  check_configuration(w.genus(), c);
  const int n = static_cast<int>(c[0].rows());
  Mat out = Mat::Identity(n, n);
  for (Letter l : w.letters()) {
    const Mat& x = c[l.index - 1];
    if (l.sign > 0)
      out *= x;
    else
      out *= x.adjoint();
  }
  return out;
}

Mat moment_map(int genus, const Configuration& c) {
  return evaluate_word(relator(genus), c);
}

Mat word_differential(const Word& w, const Configuration& c,
                      const Tangent& v) {
  check_configuration(w.genus(), c);
  if (v.size() != c.size())
    throw std::invalid_argument("tangent needs one matrix per slot");
  const int n = static_cast<int>(c[0].rows());
  Mat xi = Mat::Zero(n, n);
  for (Letter l : w.letters()) {
    const Mat& x = c[l.index - 1];
    const Mat& vx = v[l.index - 1];
    if (l.sign > 0) {
      // letter x: factor value x, letter differential v
      xi = x.adjoint() * xi * x + vx;
    } else {
      // letter x^-1: differential -Ad(x) v
      xi = x * (xi - vx) * x.adjoint();
    }
  }
  return xi;
}

Configuration haar_configuration(int genus, int n, std::mt19937_64& rng) {
  check_genus(genus);
  Configuration c;
  c.reserve(2 * genus);
  for (int k = 0; k < 2 * genus; ++k) c.push_back(haar_sample(n, rng));
  return c;
}

Tangent random_tangent(int genus, int n, std::mt19937_64& rng,
                       bool normalize) {
  check_genus(genus);
  Tangent v;
  v.reserve(2 * genus);
  for (int k = 0; k < 2 * genus; ++k)
    v.push_back(random_algebra_element(n, rng, normalize));
  return v;
}

nlohmann::ordered_json matrix_to_json(const Mat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const nlohmann::json& j) {
  const int rows = static_cast<int>(j.size());
  if (rows == 0) throw std::invalid_argument("empty matrix");
  const int cols = static_cast<int>(j.at(0).size());
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const auto& entry = j.at(r).at(c);
      m(r, c) = std::complex<double>(entry.at(0).get<double>(),
                                     entry.at(1).get<double>());
    }
  return m;
}

nlohmann::ordered_json configuration_to_json(const Configuration& c) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Mat& m : c) out.push_back(matrix_to_json(m));
  return out;
}

Configuration configuration_from_json(const nlohmann::json& j) {
  Configuration c;
  for (const auto& m : j) c.push_back(matrix_from_json(m));
  return c;
}

}  // namespace surfrep
