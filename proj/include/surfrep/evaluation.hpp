#pragma once

#include <random>
#include <vector>

#include <json.hpp>

#include "surfrep/sun.hpp"
#include "surfrep/words.hpp"

namespace surfrep {

// Point of K^{2g}: one group matrix per generator x_1..x_{2g}.
using Configuration = std::vector<Mat>;

// Left-trivialized tangent at a configuration: one algebra matrix per slot.
using Tangent = std::vector<Mat>;

void check_configuration(int genus, const Configuration& c);

// Substitute c[i-1] for x_i and multiply. Inverse letters use the adjoint,
// which is the exact inverse on unitary input.
Mat evaluate_word(const Word& w, const Configuration& c);

// Product of commutators [c_0, c_1][c_2, c_3]...: the evaluation of the
// surface relator.
Mat moment_map(int genus, const Configuration& c);

// Left-trivialized differential of evaluate_word: the algebra element xi
// with d/dt ev_w(c . exp(t v)) |_0 = ev_w(c) xi. Folds the cocycle rule
// xi(uv) = Ad(ev_v^-1) xi(u) + xi(v) over the letters; exact (products
// only, no differencing).
Mat word_differential(const Word& w, const Configuration& c,
                      const Tangent& v);

Configuration haar_configuration(int genus, int n, std::mt19937_64& rng);

// One independent algebra element per slot; each slot has unit Frobenius
// norm when normalize is set.
Tangent random_tangent(int genus, int n, std::mt19937_64& rng,
                       bool normalize = true);

// Matrices serialize as row-major [[re, im], ...] entry pairs.
nlohmann::ordered_json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

}  // namespace surfrep
