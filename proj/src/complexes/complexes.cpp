/* Copyright (C) 2026 The simpres Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include "simpres/complexes.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace simpres {

namespace {

std::size_t checked_product(std::size_t a, std::size_t b, std::size_t cap, const char* what,
                            std::size_t n) {
  std::size_t p;
  if (__builtin_mul_overflow(a, b, &p) || (cap != 0 && p > cap))
    throw InfeasibleError(std::string(what) + " at degree " + std::to_string(n) +
                          " has ambient dimension " + std::to_string(a) + " x " +
                          std::to_string(b) + " above the cap " + std::to_string(cap));
  return p;
}

/// Lazily evaluated images of basis vectors.
class ImageCache {
 public:
  ImageCache(std::size_t size, const LinearImage& f) : f_(f), images_(size) {}
  const SparseVector& operator()(std::size_t k) {
    if (!images_[k]) images_[k] = f_(k);
    return *images_[k];
  }

 private:
  const LinearImage& f_;
  std::vector<std::optional<SparseVector>> images_;
};

}  // namespace

// ---------------------------------------------------------------------------

TensorLevels::TensorLevels(ModulePtr x, ModulePtr y, Relations relations, std::size_t dim_cap)
    : x_(std::move(x)), y_(std::move(y)), relations_(relations), dim_cap_(dim_cap) {
  if (x_->side() != Side::kRight || y_->side() != Side::kLeft)
    throw ValidationError("tensor product needs a right module on the left and a left module "
                          "on the right");
  if (x_->over().get() != y_->over().get())
    throw ValidationError("modules " + x_->name() + " and " + y_->name() +
                          " are over different simplicial algebras");
}

std::size_t TensorLevels::ambient_dim(std::size_t n) const {
  return checked_product(x_->level_dim(n), y_->level_dim(n), dim_cap_, "tensor level", n);
}

const QuotientSpace& TensorLevels::level(std::size_t n) const {
  return levels_.get(n, [&] { return build_level(n); });
}

QuotientSpace TensorLevels::build_level(std::size_t n) const {
  const std::size_t amb = ambient_dim(n);
  const std::size_t dx = x_->level_dim(n), dy = y_->level_dim(n);
  const SimplicialAlgebra& alg = *x_->over();
  RowReducer red(amb, field());

  std::vector<PureTensor> full;
  if (relations_ == Relations::kFullBasis) {
    const SlotSpace& lv = alg.level(n);
    for (std::size_t e = 0; e < lv.dim(); ++e) full.push_back(lv.pure_basis(e));
  }
  const std::vector<PureTensor>& gens =
      relations_ == Relations::kFullBasis ? full : alg.generators(n);

  std::vector<SparseVector::Entry> entries;
  for (const PureTensor& g : gens) {
    std::vector<SparseVector> xg(dx);
    for (std::size_t xi = 0; xi < dx; ++xi) xg[xi] = x_->act(n, g, xi);
    for (std::size_t yi = 0; yi < dy; ++yi) {
      SparseVector gy = y_->act(n, g, yi);
      for (std::size_t xi = 0; xi < dx; ++xi) {
        entries.clear();
        for (const auto& [i, c] : xg[xi]) entries.emplace_back(i * dy + yi, c);
        for (const auto& [j, c] : gy) entries.emplace_back(xi * dy + j, -c);
        if (entries.empty()) continue;
        red.add(SparseVector::from_unsorted(entries));
      }
    }
  }
  return quotient_from(red);
}

Matrix TensorLevels::induced(std::size_t n, const TensorLevels& target, std::size_t target_n,
                             const LinearImage& fx, const LinearImage& fy,
                             const std::string& what) const {
  const QuotientSpace& src = level(n);
  const QuotientSpace& dst = target.level(target_n);
  const std::size_t dy = y_->level_dim(n);
  const std::size_t tdy = target.y_->level_dim(target_n);
  ImageCache ix(x_->level_dim(n), fx), iy(dy, fy);

  std::vector<SparseVector::Entry> acc;
  auto image = [&](const SparseVector& v) {
    acc.clear();
    for (const auto& [idx, c] : v) {
      const SparseVector& a = ix(idx / dy);
      if (a.empty()) continue;
      const SparseVector& b = iy(idx % dy);
      for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) acc.emplace_back(i * tdy + j, c * x * y);
    }
    return SparseVector::from_unsorted(acc);
  };

  for (std::size_t k = 0; k < src.relations.dim(); ++k) {
    SparseVector img = dst.project(image(src.relations.basis()[k]));
    if (!img.empty())
      throw ConstructionError(what + " is not well defined: relation with pivot " +
                              std::to_string(src.relations.pivots()[k]) + " at degree " +
                              std::to_string(n) + " leaves the relation span");
  }
  std::vector<SparseVector> cols;
  cols.reserve(src.dim());
  for (std::size_t rep : src.representatives)
    cols.push_back(dst.project(image(SparseVector::basis(rep, field()))));
  return Matrix::from_columns(dst.dim(), std::move(cols), field());
}

const Matrix& TensorLevels::face(std::size_t n, std::size_t i) const {
  return faces_.get({n, i}, [&] {
    return induced(
        n, *this, n - 1, [&](std::size_t k) { return x_->face_image(n, i, k); },
        [&](std::size_t k) { return y_->face_image(n, i, k); },
        "D(" + std::to_string(n) + "," + std::to_string(i) + ")");
  });
}

const Matrix& TensorLevels::degeneracy(std::size_t n, std::size_t i) const {
  return degeneracies_.get({n, i}, [&] {
    return induced(
        n, *this, n + 1, [&](std::size_t k) { return x_->degeneracy_image(n, i, k); },
        [&](std::size_t k) { return y_->degeneracy_image(n, i, k); },
        "S(" + std::to_string(n) + "," + std::to_string(i) + ")");
  });
}

SimplicialView TensorLevels::view() const {
  return {field(), [this](std::size_t n) { return dim(n); },
          [this](std::size_t n, std::size_t i, const SparseVector& v) {
            return face(n, i).apply(v);
          },
          [this](std::size_t n, std::size_t i, const SparseVector& v) {
            return degeneracy(n, i).apply(v);
          }};
}

// ---------------------------------------------------------------------------

HomLevels::HomLevels(ModulePtr x, CosimplicialPtr m, std::size_t dim_cap)
    : x_(std::move(x)), m_(std::move(m)), dim_cap_(dim_cap) {
  if (x_->side() != Side::kLeft) throw ValidationError("Hom levels need a left module");
  if (x_->over().get() != m_->over().get())
    throw ValidationError("modules " + x_->name() + " and " + m_->name() +
                          " are over different simplicial algebras");
}

std::size_t HomLevels::ambient_dim(std::size_t n) const {
  return checked_product(x_->level_dim(n), m_->level_dim(n), dim_cap_, "Hom level", n);
}

const Subspace& HomLevels::level(std::size_t n) const {
  return levels_.get(n, [&] { return build_level(n); });
}

Subspace HomLevels::build_level(std::size_t n) const {
  const std::size_t amb = ambient_dim(n);
  const std::size_t dx = x_->level_dim(n), dm = m_->level_dim(n);
  RowReducer red(amb, field());
  std::vector<SparseVector::Entry> entries;
  for (const PureTensor& g : x_->over()->generators(n)) {
    // transposed action of g on M: by_row[m'] lists (m, c) with (g·e_m)[m'] = c
    std::vector<std::vector<SparseVector::Entry>> by_row(dm);
    for (std::size_t mi = 0; mi < dm; ++mi)
      for (const auto& [r, c] : m_->act(n, g, mi)) by_row[r].emplace_back(mi, c);
    for (std::size_t yi = 0; yi < dx; ++yi) {
      SparseVector gy = x_->act(n, g, yi);
      for (std::size_t mr = 0; mr < dm; ++mr) {
        // phi(g·y)[m'] - (g·phi(y))[m'] = 0
        entries.clear();
        for (const auto& [y2, c] : gy) entries.emplace_back(y2 * dm + mr, c);
        for (const auto& [mi, c] : by_row[mr]) entries.emplace_back(yi * dm + mi, -c);
        if (entries.empty()) continue;
        red.add(SparseVector::from_unsorted(entries));
      }
    }
  }
  return null_space(red);
}

Matrix HomLevels::induced(std::size_t n, const HomLevels& target, std::size_t target_n,
                          const LinearImage& pre, const LinearImage& post,
                          const std::string& what) const {
  const Subspace& src = level(n);
  const Subspace& dst = target.level(target_n);
  const std::size_t dm = m_->level_dim(n);
  const std::size_t tdx = target.x_->level_dim(target_n);
  const std::size_t tdm = target.m_->level_dim(target_n);
  std::vector<SparseVector> pre_img(tdx), post_img(dm);
  for (std::size_t k = 0; k < tdx; ++k) pre_img[k] = pre(k);
  for (std::size_t k = 0; k < dm; ++k) post_img[k] = post(k);

  std::vector<SparseVector> cols;
  cols.reserve(src.dim());
  std::vector<SparseVector::Entry> acc;
  for (const SparseVector& phi : src.basis()) {
    const auto& e = phi.entries();
    acc.clear();
    for (std::size_t y2 = 0; y2 < tdx; ++y2)
      for (const auto& [y, c1] : pre_img[y2]) {
        auto lo = std::lower_bound(e.begin(), e.end(), y * dm,
                                   [](const SparseVector::Entry& a, std::size_t v) {
                                     return a.first < v;
                                   });
        for (auto it = lo; it != e.end() && it->first < (y + 1) * dm; ++it)
          for (const auto& [m2, c3] : post_img[it->first - y * dm])
            acc.emplace_back(y2 * tdm + m2, c1 * it->second * c3);
      }
    SparseVector img = SparseVector::from_unsorted(acc);
    if (!dst.contains(img))
      throw ConstructionError(what + " does not preserve equivariant maps at degree " +
                              std::to_string(n));
    cols.push_back(dst.coordinates(img));
  }
  return Matrix::from_columns(dst.dim(), std::move(cols), field());
}

const Matrix& HomLevels::coface(std::size_t n, std::size_t i) const {
  return cofaces_.get({n, i}, [&] {
    return induced(
        n, *this, n + 1, [&](std::size_t k) { return x_->face_image(n + 1, i, k); },
        [&](std::size_t k) { return m_->coface_image(n, i, k); },
        "coface(" + std::to_string(n) + "," + std::to_string(i) + ")");
  });
}

const Matrix& HomLevels::codegeneracy(std::size_t n, std::size_t i) const {
  return codegeneracies_.get({n, i}, [&] {
    return induced(
        n + 1, *this, n, [&](std::size_t k) { return x_->degeneracy_image(n, i, k); },
        [&](std::size_t k) { return m_->codegeneracy_image(n, i, k); },
        "codegeneracy(" + std::to_string(n) + "," + std::to_string(i) + ")");
  });
}

CosimplicialView HomLevels::view() const {
  return {field(), [this](std::size_t n) { return dim(n); },
          [this](std::size_t n, std::size_t i, const SparseVector& v) {
            return coface(n, i).apply(v);
          },
          [this](std::size_t n, std::size_t i, const SparseVector& v) {
            return codegeneracy(n, i).apply(v);
          }};
}

// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(Direction direction, std::vector<std::size_t> dims,
                           std::vector<Matrix> differentials, Field field)
    : direction_(direction), dims_(std::move(dims)), diffs_(std::move(differentials)),
      field_(field) {
  if (dims_.empty()) throw ConstructionError("complex needs at least degree 0");
  if (diffs_.size() != dims_.size() - 1)
    throw ConstructionError("complex needs one differential between consecutive degrees");
  bool chain = direction_ == Direction::kChain;
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    std::size_t rows = chain ? dims_[k] : dims_[k + 1];
    std::size_t cols = chain ? dims_[k + 1] : dims_[k];
    if (diffs_[k].rows() != rows || diffs_[k].cols() != cols)
      throw ConstructionError("differential " + std::to_string(k) + " has the wrong shape");
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
    Matrix dd = chain ? diffs_[k] * diffs_[k + 1] : diffs_[k + 1] * diffs_[k];
    if (!dd.is_zero())
      throw ConstructionError("d∘d is not zero on degree " + std::to_string(chain ? k + 2 : k));
    ++verified_;
  }
  for (const auto& d : diffs_) ranks_.push_back(rank(d));
}

Matrix ChainComplex::differential(std::size_t n) const {
  if (direction_ == Direction::kChain) {
    if (n >= 1 && n <= top()) return diffs_[n - 1];
    std::size_t cols = n <= top() ? dims_[n] : 0;
    return Matrix(0, cols, field_);
  }
  if (n < top()) return diffs_[n];
  return Matrix(0, n <= top() ? dims_[n] : 0, field_);
}

std::size_t ChainComplex::rank_of(std::size_t n) const {
  if (direction_ == Direction::kChain) return n >= 1 && n <= top() ? ranks_[n - 1] : 0;
  return n < top() ? ranks_[n] : 0;
}

std::size_t ChainComplex::betti(std::size_t n) const {
  if (n >= top())
    throw ValidationError("betti number at degree " + std::to_string(n) +
                          " needs the complex built through degree " + std::to_string(n + 1));
  if (direction_ == Direction::kChain) return dims_[n] - rank_of(n) - rank_of(n + 1);
  return dims_[n] - rank_of(n) - (n == 0 ? 0 : rank_of(n - 1));
}

std::vector<std::size_t> ChainComplex::betti_table(std::size_t up_to) const {
  std::vector<std::size_t> t;
  for (std::size_t n = 0; n <= up_to; ++n) t.push_back(betti(n));
  return t;
}

Matrix alternating_sum(const std::vector<Matrix>& maps) {
  if (maps.empty()) throw ValidationError("alternating sum of no maps");
  Matrix acc = maps[0];
  for (std::size_t i = 1; i < maps.size(); ++i) acc = i % 2 ? acc - maps[i] : acc + maps[i];
  return acc;
}

ChainComplex to_chain_complex(const TensorLevels& t, std::size_t top) {
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (std::size_t n = 0; n <= top; ++n) dims.push_back(t.dim(n));
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<Matrix> faces;
    for (std::size_t i = 0; i <= n; ++i) faces.push_back(t.face(n, i));
    diffs.push_back(alternating_sum(faces));
  }
  return ChainComplex(ChainComplex::Direction::kChain, std::move(dims), std::move(diffs),
                      t.field());
}

ChainComplex to_cochain_complex(const HomLevels& h, std::size_t top) {
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (std::size_t n = 0; n <= top; ++n) dims.push_back(h.dim(n));
  for (std::size_t n = 0; n < top; ++n) {
    std::vector<Matrix> cofaces;
    for (std::size_t i = 0; i <= n + 1; ++i) cofaces.push_back(h.coface(n, i));
    diffs.push_back(alternating_sum(cofaces));
  }
  return ChainComplex(ChainComplex::Direction::kCochain, std::move(dims), std::move(diffs),
                      h.field());
}

}  // namespace simpres
