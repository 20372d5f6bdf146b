// Copyright 2026 The Ofansiv Authors
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

#include "ofansiv/svm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>

#include "ofansiv/error.hpp"
#include "ofansiv/rng.hpp"
#include "ofansiv/unicode.hpp"

namespace ofansiv {
namespace {

// Row-compressed copy of the training data with +1/-1 targets.
struct Problem {
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::uint32_t> col;
  std::vector<double> val;
  std::vector<double> y;
  std::vector<double> sq_norm;
  std::size_t dim = 0;

  std::size_t rows() const { return y.size(); }

  double dot(const std::vector<double>& w, std::size_t i) const {
    double s = 0.0;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += w[col[k]] * val[k];
    return s;
  }

  void axpy(double a, std::size_t i, std::vector<double>& w) const {
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) w[col[k]] += a * val[k];
  }
};

double squared_norm(const std::vector<double>& w) {
  double s = 0.0;
  for (double v : w) s += v * v;
  return s;
}

// A dual solution at a fixed intercept. For every b',
//   F(b') >= alpha_sum - b' * s - 1/2 |w|^2,
// where F is the primal objective minimized over w at intercept b'.
struct DualPoint {
  double b = 0.0;
  std::vector<double> w;
  double alpha_sum = 0.0;
  double w_sq = 0.0;
  double s = 0.0;  // sum_i alpha_i y_i

  double offset() const { return alpha_sum - 0.5 * w_sq; }
};

// Dual coordinate descent for
//   min_alpha 1/2 alpha'Q alpha - sum_i alpha_i (1 - y_i b),  0 <= alpha_i <= C.
class FixedInterceptSolver {
 public:
  FixedInterceptSolver(const Problem& p, double C, std::uint64_t seed)
      : p_(p), C_(C), alpha_(p.rows(), 0.0), w_(p.dim, 0.0), order_(p.rows()), rng_(seed) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
  }

  struct Result {
    int epochs = 0;
    bool reached = false;
  };

  // Runs epochs until the projected-gradient spread is <= eps or the budget
  // is spent.
  Result solve(double b, double eps, int max_epochs) {
    for (int epoch = 0; epoch < max_epochs; ++epoch) {
      rng_.shuffle(std::span<std::size_t>(order_));
      double pg_max = -std::numeric_limits<double>::infinity();
      double pg_min = std::numeric_limits<double>::infinity();
      for (std::size_t i : order_) {
        const double yi = p_.y[i];
        const double g = yi * p_.dot(w_, i) - 1.0 + yi * b;
        const double a = alpha_[i];
        double pg = g;
        if (a <= 0.0) {
          pg = std::min(g, 0.0);
        } else if (a >= C_) {
          pg = std::max(g, 0.0);
        }
        pg_max = std::max(pg_max, pg);
        pg_min = std::min(pg_min, pg);
        if (pg == 0.0) continue;

        double next;
        if (p_.sq_norm[i] > 0.0) {
          next = std::clamp(a - g / p_.sq_norm[i], 0.0, C_);
        } else {
          // Empty row: the dual is linear in alpha_i.
          next = g < 0.0 ? C_ : 0.0;
        }
        if (next != a) {
          p_.axpy((next - a) * yi, i, w_);
          alpha_[i] = next;
        }
      }
      if (pg_max - pg_min <= eps) return {epoch + 1, true};
    }
    return {max_epochs, false};
  }

  DualPoint snapshot(double b) const {
    DualPoint d;
    d.b = b;
    d.w = w_;
    d.w_sq = squared_norm(w_);
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      d.alpha_sum += alpha_[i];
      d.s += alpha_[i] * p_.y[i];
    }
    return d;
  }

 private:
  const Problem& p_;
  double C_;
  std::vector<double> alpha_;
  std::vector<double> w_;
  std::vector<std::size_t> order_;
  Rng rng_;
};

struct Primal {
  double b = 0.0;
  double objective = 0.0;
};

// Exact minimizer over b of C * sum_i max(0, 1 - y_i (m_i + b)) for fixed
// margins m. The loss is piecewise linear with kinks at t_i = y_i - m_i and
// its slope rises by one at every kink, so the minimum lies between the
// n_pos-th and (n_pos+1)-th smallest kinks; the midpoint is taken.
Primal best_intercept(const std::vector<double>& margins, const std::vector<double>& y,
                      double w_sq, double C) {
  const std::size_t n = y.size();
  std::vector<double> kinks(n);
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    kinks[i] = y[i] - margins[i];
    if (y[i] > 0) ++n_pos;
  }
  std::sort(kinks.begin(), kinks.end());
  const double b = 0.5 * (kinks[n_pos - 1] + kinks[n_pos]);

  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) loss += std::max(0.0, 1.0 - y[i] * (margins[i] + b));
  return {b, 0.5 * w_sq + C * loss};
}

std::vector<double> margins_of(const Problem& p, const std::vector<double>& w) {
  std::vector<double> m(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) m[i] = p.dot(w, i);
  return m;
}

Problem build_problem(const TrainingSet& data) {
  if (data.X.empty()) throw Error(ErrorKind::kEmptyCorpus, "training set is empty");
  if (data.X.size() != data.y.size()) {
    throw Error(ErrorKind::kLengthMismatch, std::to_string(data.X.size()) + " vectors but " +
                                                std::to_string(data.y.size()) + " labels");
  }
  if (data.positive_label == data.negative_label) {
    throw Error(ErrorKind::kInvalidArgument, "positive and negative labels must differ");
  }
  for (const std::string* label : {&data.positive_label, &data.negative_label}) {
    if (label->empty() || label->find_first_of(" \t\r\n=") != std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument, "label '" + *label + "' must be a non-empty word");
    }
  }

  Problem p;
  p.dim = data.X.front().dim;
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < data.X.size(); ++i) {
    const SparseVector& x = data.X[i];
    if (x.dim != p.dim) {
      throw Error(ErrorKind::kDimensionMismatch, "row " + std::to_string(i) + " has dim " +
                                                     std::to_string(x.dim) + ", expected " +
                                                     std::to_string(p.dim));
    }
    double sq = 0.0;
    for (const SparseEntry& e : x.entries) {
      if (e.index >= p.dim) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "row " + std::to_string(i) + " has index " + std::to_string(e.index));
      }
      p.col.push_back(e.index);
      p.val.push_back(static_cast<double>(e.count));
      sq += static_cast<double>(e.count) * e.count;
    }
    p.row_ptr.push_back(p.col.size());
    p.sq_norm.push_back(sq);

    if (data.y[i] == data.positive_label) {
      p.y.push_back(1.0);
      ++n_pos;
    } else if (data.y[i] == data.negative_label) {
      p.y.push_back(-1.0);
    } else {
      throw Error(ErrorKind::kUnknownLabel, "label '" + data.y[i] + "' at row " + std::to_string(i));
    }
  }
  if (n_pos == 0 || n_pos == p.rows()) {
    throw Error(ErrorKind::kSingleClassData,
                "training data holds only '" +
                    (n_pos == 0 ? data.negative_label : data.positive_label) + "'");
  }
  return p;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool parse_real(std::string_view s, double& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

template <class T>
bool parse_int(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

constexpr int kInnerEpochCap = 200;

}  // namespace

SvmModel train(const TrainingSet& data, const SvmHyperparams& hyper) {
  if (!(hyper.C > 0.0) || !(hyper.tol > 0.0) || hyper.max_iter <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "C and tol must be positive, max_iter >= 1");
  }
  const Problem p = build_problem(data);
  const double C = hyper.C;

  // Start from the best intercept-only model, which never exceeds J(0, 0).
  std::vector<double> best_w(p.dim, 0.0);
  Primal best = best_intercept(std::vector<double>(p.rows(), 0.0), p.y, 0.0, C);
  double best_dual = 0.0;  // alpha = 0 is dual feasible

  FixedInterceptSolver solver(p, C, hyper.seed);
  // Points with s > 0 (optimum has a larger intercept) and s < 0, most
  // recent last. A tighter solve can flip the side of an old point; those
  // are dropped, and the next most recent one becomes the endpoint again.
  std::vector<DualPoint> pos_hist;
  std::vector<DualPoint> neg_hist;
  constexpr std::size_t kHistory = 4;
  auto push = [&](std::vector<DualPoint>& h, const DualPoint& d) {
    h.push_back(d);
    if (h.size() > kHistory) h.erase(h.begin());
  };
  double b = 0.0;
  double step = 1.0;
  double eps = 0.1;
  int epochs_left = hyper.max_iter;
  bool converged = false;
  int last_side = 0;
  int streak = 0;

  auto consider = [&](std::vector<double> w, double w_sq) {
    Primal primal = best_intercept(margins_of(p, w), p.y, w_sq, C);
    if (primal.objective < best.objective) {
      best = primal;
      best_w = std::move(w);
    }
    return primal.b;
  };

  // Mixes a point with s >= 0 and one with s <= 0 into a feasible point of
  // the full dual (sum alpha_i y_i = 0). Returns true once the gap is small.
  auto certify = [&](const DualPoint& hi_s, const DualPoint& lo_s) {
    double c_pos = 1.0, c_neg = 0.0;
    const double spread = hi_s.s - lo_s.s;
    if (spread > 0.0) {
      c_pos = -lo_s.s / spread;
      c_neg = hi_s.s / spread;
    }
    std::vector<double> w(p.dim);
    for (std::size_t j = 0; j < p.dim; ++j) w[j] = c_pos * hi_s.w[j] + c_neg * lo_s.w[j];
    const double w_sq = squared_norm(w);
    const double dual = c_pos * hi_s.alpha_sum + c_neg * lo_s.alpha_sum - 0.5 * w_sq;
    best_dual = std::max(best_dual, dual);
    consider(std::move(w), w_sq);
    return best.objective - best_dual <= hyper.tol * best.objective;
  };

  for (int outer = 0;; ++outer) {
    // Near the optimal intercept, rank-deficient data leaves an almost flat
    // valley that coordinate descent crawls along. Solves are chunked so the
    // primal and the certificate keep improving meanwhile.
    const auto run = solver.solve(b, eps, std::min(epochs_left, kInnerEpochCap));
    epochs_left -= run.epochs;
    DualPoint d = solver.snapshot(b);
    const double b_guess = consider(d.w, d.w_sq);
    if (!run.reached) {
      // The side of an unfinished solve is not trusted; keep going at b.
      const DualPoint* other = d.s >= 0.0 ? (neg_hist.empty() ? nullptr : &neg_hist.back())
                                          : (pos_hist.empty() ? nullptr : &pos_hist.back());
      if (other && (d.s >= 0.0 ? certify(d, *other) : certify(*other, d))) {
        converged = true;
        break;
      }
      if (epochs_left <= 0) break;
      // Jump to the intercept that suits the current w, if it stays inside
      // the bracket; away from the optimum the valley tilts and CD crawls.
      const double lo = pos_hist.empty() ? -std::numeric_limits<double>::infinity()
                                         : pos_hist.back().b;
      const double hi = neg_hist.empty() ? std::numeric_limits<double>::infinity()
                                         : neg_hist.back().b;
      if (b_guess > lo && b_guess < hi) b = b_guess;
      continue;
    }

    const int side = (d.s > 0.0) - (d.s < 0.0);
    streak = side == last_side ? streak + 1 : 1;
    last_side = side;
    const bool had_both = !pos_hist.empty() && !neg_hist.empty();
    if (d.s >= 0.0) {
      std::erase_if(neg_hist, [&](const DualPoint& q) { return q.b <= d.b; });
      push(pos_hist, d);
    }
    if (d.s <= 0.0) {
      std::erase_if(pos_hist, [&](const DualPoint& q) { return q.b >= d.b; });
      push(neg_hist, d);
    }
    const DualPoint* pos = pos_hist.empty() ? nullptr : &pos_hist.back();
    const DualPoint* neg = neg_hist.empty() ? nullptr : &neg_hist.back();
    if (had_both && !(pos && neg)) step = 1.0;

    if (pos && neg && certify(*pos, *neg)) {
      converged = true;
      break;
    }
    if (epochs_left <= 0) break;

    if (pos && neg && side != 0 && streak >= 2) {
      // The other side was solved with a looser eps; redo it so the mixed
      // certificate is built from two accurate points.
      b = side > 0 ? neg->b : pos->b;
      streak = 0;
    } else if (pos && neg) {
      const double lo = pos->b;
      const double hi = neg->b;
      // Alternate the cutting-plane estimate (intersection of the two
      // lower-bounding lines) with plain bisection. lo == hi only when s == 0.
      double next = 0.5 * (lo + hi);
      const double cut = (pos->offset() - neg->offset()) / (pos->s - neg->s);
      const double guard = 0.1 * (hi - lo);
      if (lo < hi && outer % 2 == 0 && std::isfinite(cut)) {
        next = std::clamp(cut, lo + guard, hi - guard);
      }
      b = next;
      eps = std::max(eps * 0.5, 1e-12);
    } else {
      b = pos ? pos->b + step : neg->b - step;
      step *= 2.0;
    }
  }

  SvmModel model;
  model.weights = std::move(best_w);
  model.bias = best.b;
  model.positive_label = data.positive_label;
  model.negative_label = data.negative_label;
  model.hyperparams = hyper;
  model.converged = converged;
  model.objective = best.objective;
  model.duality_gap = best.objective - best_dual;
  model.epochs = hyper.max_iter - epochs_left;
  return model;
}

double decision_value(const SvmModel& model, const SparseVector& x) {
  if (x.dim != model.weights.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "vector dim " + std::to_string(x.dim) +
                                                   " vs model dim " +
                                                   std::to_string(model.weights.size()));
  }
  double s = model.bias;
  for (const SparseEntry& e : x.entries) {
    if (e.index >= model.weights.size()) {
      throw Error(ErrorKind::kDimensionMismatch, "index " + std::to_string(e.index));
    }
    s += model.weights[e.index] * static_cast<double>(e.count);
  }
  return s;
}

const std::string& predict(const SvmModel& model, const SparseVector& x) {
  return decision_value(model, x) > 0.0 ? model.positive_label : model.negative_label;
}

double primal_objective(const SvmModel& model, const TrainingSet& data, double C) {
  double loss = 0.0;
  for (std::size_t i = 0; i < data.X.size(); ++i) {
    double y = data.y[i] == model.positive_label ? 1.0 : -1.0;
    loss += std::max(0.0, 1.0 - y * decision_value(model, data.X[i]));
  }
  return 0.5 * squared_norm(model.weights) + C * loss;
}

void write_model(const SvmModel& model, std::ostream& out) {
  out << "linear-svm v1 dim=" << model.weights.size() << " pos=" << model.positive_label
      << " neg=" << model.negative_label << " C=" << format_real(model.hyperparams.C)
      << " tol=" << format_real(model.hyperparams.tol) << " seed=" << model.hyperparams.seed
      << " converged=" << (model.converged ? "true" : "false") << '\n';
  out << "bias " << format_real(model.bias) << '\n';
  for (std::size_t j = 0; j < model.weights.size(); ++j) {
    if (model.weights[j] != 0.0) out << j << ' ' << format_real(model.weights[j]) << '\n';
  }
}

void write_model(const SvmModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write model " + path.string());
  write_model(model, out);
}

SvmModel read_model(std::istream& in, const std::string& source_name) {
  auto fail = [&](std::size_t line, const std::string& why) -> SvmModel {
    throw LocatedError(ErrorKind::kParse, source_name, line, why);
  };
  std::string line;
  if (!std::getline(in, line)) return fail(1, "empty model file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  SvmModel model;
  std::vector<std::string_view> fields = unicode::split_tokens(line);
  if (fields.size() != 9 || fields[0] != "linear-svm" || fields[1] != "v1") {
    return fail(1, "bad model header");
  }
  std::size_t dim = 0;
  auto value = [&](std::string_view field, std::string_view key) -> std::string_view {
    if (field.substr(0, key.size()) != key) fail(1, "expected '" + std::string(key) + "'");
    return field.substr(key.size());
  };
  std::string_view converged;
  if (!parse_int(value(fields[2], "dim="), dim)) return fail(1, "bad dim");
  model.positive_label = std::string(value(fields[3], "pos="));
  model.negative_label = std::string(value(fields[4], "neg="));
  if (!parse_real(value(fields[5], "C="), model.hyperparams.C)) return fail(1, "bad C");
  if (!parse_real(value(fields[6], "tol="), model.hyperparams.tol)) return fail(1, "bad tol");
  if (!parse_int(value(fields[7], "seed="), model.hyperparams.seed)) return fail(1, "bad seed");
  converged = value(fields[8], "converged=");
  if (converged != "true" && converged != "false") return fail(1, "bad converged flag");
  model.converged = converged == "true";

  if (!std::getline(in, line)) return fail(2, "missing bias line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  fields = unicode::split_tokens(line);
  if (fields.size() != 2 || fields[0] != "bias" || !parse_real(fields[1], model.bias)) {
    return fail(2, "expected 'bias <value>'");
  }

  model.weights.assign(dim, 0.0);
  std::size_t line_no = 2;
  std::optional<std::size_t> last;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    fields = unicode::split_tokens(line);
    std::size_t j = 0;
    double w = 0.0;
    if (fields.size() != 2 || !parse_int(fields[0], j) || !parse_real(fields[1], w)) {
      return fail(line_no, "expected '<index> <weight>'");
    }
    if (j >= dim) return fail(line_no, "index " + std::to_string(j) + " >= dim");
    if (last && j <= *last) return fail(line_no, "indices must ascend");
    model.weights[j] = w;
    last = j;
  }
  return model;
}

SvmModel read_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open model " + path.string());
  return read_model(in, path.string());
}

}  // namespace ofansiv
