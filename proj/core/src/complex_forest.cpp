// Copyright 2026 The plft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plft/complex_forest.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace plft {

namespace {

void require_d0(const GaussianRational& z) {
  if (!in_d0(z)) {
    throw std::domain_error("complex forest is defined on Re(z) > 0, Im(z) > 0; got " +
                            to_string(z));
  }
}

Rational as_rational(std::uint64_t n) { return Rational(Integer(static_cast<unsigned long>(n))); }

// |2uz - 1|^2
Rational circle_norm(const GaussianRational& z, const Rational& u) {
  const Rational x = 2 * u * z.re - 1;
  const Rational y = 2 * u * z.im;
  return x * x + y * y;
}

}  // namespace

std::string to_string(const GaussianRational& z) {
  std::string out = to_string(z.re);
  if (z.im >= 0) out += '+';
  return out + to_string(z.im) + "*i";
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact.push_back(ch);
  }
  if (compact.empty() || compact.back() != 'i') {
    throw std::invalid_argument("complex number must look like p/q+r/s*i, got '" +
                                std::string(text) + "'");
  }
  compact.pop_back();
  if (!compact.empty() && compact.back() == '*') compact.pop_back();

  // The imaginary part starts at the last sign that is not a leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = compact.size(); i-- > 1;) {
    if ((compact[i] == '+' || compact[i] == '-') && compact[i - 1] != '/') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    throw std::invalid_argument("complex number needs both a real and an imaginary part, got '" +
                                std::string(text) + "'");
  }
  const std::string real_part = compact.substr(0, split);
  std::string imag_part = compact.substr(split);
  if (imag_part == "+" || imag_part == "-") imag_part += '1';
  if (imag_part.front() == '+') imag_part.erase(0, 1);
  return GaussianRational{parse_rational(real_part), parse_rational(imag_part)};
}

OrphanParams::OrphanParams(std::uint64_t u_, std::uint64_t v_) : u(u_), v(v_) {
  if (u == 0 || v == 0) throw std::invalid_argument("u and v must be positive integers");
}

bool in_d0(const GaussianRational& z) { return z.re > 0 && z.im > 0; }

bool is_complex_orphan(const GaussianRational& z, const OrphanParams& params) {
  require_d0(z);
  return z.re <= as_rational(params.v) && circle_norm(z, as_rational(params.u)) >= 1;
}

std::optional<ComplexParent> complex_parent(const GaussianRational& z,
                                            const OrphanParams& params) {
  require_d0(z);
  const Rational v = as_rational(params.v);
  if (z.re > v) return ComplexParent{GaussianRational{z.re - v, z.im}, Move::R};

  const Rational u = as_rational(params.u);
  if (circle_norm(z, u) >= 1) return std::nullopt;

  // (L_u)^{-1}(z) = z/(1 - uz)
  const Rational one_minus_ux = 1 - u * z.re;
  const Rational uy = u * z.im;
  const Rational den = one_minus_ux * one_minus_ux + uy * uy;
  GaussianRational w{(z.re * one_minus_ux - u * z.im * z.im) / den, z.im / den};
  if (!in_d0(w)) {
    throw std::logic_error("complex_parent: left parent " + to_string(w) + " left the quadrant");
  }
  return ComplexParent{std::move(w), Move::L};
}

GaussianRational apply_complex_move(const GaussianRational& z, Move move,
                                    const OrphanParams& params) {
  if (move == Move::R) return GaussianRational{z.re + as_rational(params.v), z.im};
  // z/(uz + 1)
  const Rational u = as_rational(params.u);
  const Rational one_plus_ux = 1 + u * z.re;
  const Rational uy = u * z.im;
  const Rational den = one_plus_ux * one_plus_ux + uy * uy;
  return GaussianRational{(z.re * one_plus_ux + u * z.im * z.im) / den, z.im / den};
}

ChainResult ancestor_chain(const GaussianRational& z, const OrphanParams& params,
                           std::size_t max_steps) {
  require_d0(z);
  ChainResult result{z, {}};
  while (auto up = complex_parent(result.root, params)) {
    if (result.steps.size() >= max_steps) {
      throw std::logic_error("ancestor_chain: no orphan within " + std::to_string(max_steps) +
                             " steps");
    }
    Rational gain = up->value.im - result.root.im;
    result.steps.push_back(ChainStep{std::move(result.root), up->move, std::move(gain)});
    result.root = std::move(up->value);
  }
  return result;
}

double epsilon_u(std::uint64_t u, double y) {
  if (u == 0) throw std::invalid_argument("u must be a positive integer");
  const double ud = static_cast<double>(u);
  if (!(y > 0.0) || y > 1.0 / (2.0 * ud)) {
    throw std::domain_error("epsilon_u needs 0 < y <= 1/(2u)");
  }
  const double s = std::max(0.0, 1.0 - 4.0 * ud * ud * y * y);
  return 2.0 * y / (1.0 + std::sqrt(s)) - y;
}

void write_chain_csv(std::ostream& out, const ChainResult& chain) {
  out << "step,move,re,im\n";
  std::size_t index = 0;
  for (const auto& step : chain.steps) {
    out << index++ << ',' << to_char(step.move) << ',' << to_fraction_string(step.value.re) << ','
        << to_fraction_string(step.value.im) << '\n';
  }
  out << index << ",root," << to_fraction_string(chain.root.re) << ','
      << to_fraction_string(chain.root.im) << '\n';
}

}  // namespace plft
