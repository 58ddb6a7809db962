#include "chow/ring_context.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

std::string_view to_string(RingMode mode) {
  switch (mode) {
    case RingMode::augmented: return "augmented";
    case RingMode::reduced: return "reduced";
    case RingMode::semilattice: return "semilattice";
  }
  return "unknown";
}

RingContext RingContext::augmented(std::shared_ptr<const MatroidLattice> m) {
  RingContext c;
  c.mode_ = RingMode::augmented;
  c.matroid_ = std::move(m);
  c.init_generators();
  return c;
}

RingContext RingContext::reduced(std::shared_ptr<const MatroidLattice> m) {
  RingContext c = augmented(std::move(m));
  c.mode_ = RingMode::reduced;
  return c;
}

RingContext RingContext::semilattice(std::shared_ptr<const MeetSemilattice> l) {
  RingContext c;
  c.mode_ = RingMode::semilattice;
  c.lattice_ = std::move(l);
  c.init_generators();
  return c;
}

RingContext RingContext::make(RingMode mode, MatroidLattice m) {
  if (mode == RingMode::semilattice) {
    return semilattice(std::make_shared<const MeetSemilattice>(m.lattice()));
  }
  auto ptr = std::make_shared<const MatroidLattice>(std::move(m));
  return mode == RingMode::augmented ? augmented(ptr) : reduced(ptr);
}

RingContext RingContext::make(MeetSemilattice l) {
  return semilattice(std::make_shared<const MeetSemilattice>(std::move(l)));
}

void RingContext::init_generators() {
  const std::size_t n = element_count();
  position_.assign(n, -1);
  generators_.clear();
  for (GenId g = is_matroid() ? 1 : 0; g < n; ++g) {
    position_[g] = static_cast<int>(generators_.size());
    generators_.push_back(g);
  }
}

const MatroidLattice& RingContext::matroid() const {
  if (!matroid_) throw Error(ErrorKind::ContextMismatch, "semilattice ring has no matroid");
  return *matroid_;
}

const MeetSemilattice& RingContext::semilattice() const {
  return matroid_ ? matroid_->lattice() : *lattice_;
}

RingContext RingContext::with_mode(RingMode mode) const {
  if (!matroid_ || mode == RingMode::semilattice) {
    throw Error(ErrorKind::ContextMismatch, "mode change requires a matroid ring");
  }
  RingContext c = *this;
  c.mode_ = mode;
  return c;
}

bool RingContext::same_lattice(const RingContext& other) const noexcept {
  return matroid_ ? matroid_ == other.matroid_ : lattice_ == other.lattice_;
}

std::size_t RingContext::element_count() const noexcept {
  return matroid_ ? matroid_->size() : lattice_->size();
}

bool RingContext::is_generator(GenId g) const noexcept {
  return g < position_.size() && position_[g] >= 0;
}

GenId RingContext::combine(GenId x, GenId y) const noexcept {
  return matroid_ ? matroid_->join(x, y) : lattice_->meet(x, y);
}

bool RingContext::dominated_by(GenId x, GenId y) const noexcept {
  return matroid_ ? matroid_->leq(x, y) : lattice_->leq(y, x);
}

bool RingContext::comparable(GenId x, GenId y) const noexcept {
  return semilattice().poset().comparable(x, y);
}

std::optional<int> RingContext::top_degree() const noexcept {
  switch (mode_) {
    case RingMode::augmented: return matroid_->rank();
    case RingMode::reduced: return std::max(matroid_->rank() - 1, 0);
    case RingMode::semilattice: return std::nullopt;
  }
  return std::nullopt;
}

int RingContext::rank_of(GenId g) const { return matroid().rank(g); }

ElementId RingContext::unit_component() const noexcept {
  return matroid_ ? matroid_->bottom() : static_cast<ElementId>(lattice_->size());
}

ElementId RingContext::combine_component(ElementId c, GenId g) const noexcept {
  if (!matroid_ && c == unit_component()) return g;
  return combine(c, g);
}

ElementId RingContext::component_of(const Monomial& m) const noexcept {
  ElementId c = unit_component();
  for (const auto& f : m.factors()) c = combine_component(c, f.gen);
  return c;
}

std::vector<Polynomial> RingContext::relations() const {
  std::vector<Polynomial> out;
  auto quadric = [&](GenId x, GenId y) {
    const GenId j = combine(x, y);
    Polynomial a = Polynomial::generator(x) - Polynomial::generator(j);
    Polynomial b = Polynomial::generator(y) - Polynomial::generator(j);
    return a * b;
  };
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t k = i + 1; k < generators_.size(); ++k) {
      const GenId x = generators_[i];
      const GenId y = generators_[k];
      if (!comparable(x, y)) out.push_back(quadric(x, y));
    }
  }
  if (mode_ == RingMode::semilattice) return out;
  const auto& m = *matroid_;
  for (FlatId a : m.atoms()) {
    if (mode_ == RingMode::reduced) {
      out.push_back(Polynomial::generator(a));
      continue;
    }
    out.push_back(Polynomial(Monomial::generator(a, 2)));
    for (GenId f : generators_) {
      if (m.leq(a, f)) continue;
      Polynomial r(Monomial::generator(a) * Monomial::generator(f));
      r.add_term(Monomial::generator(a) * Monomial::generator(m.join(a, f)), -1);
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool RingContext::is_chain(const Monomial& m) const {
  auto f = m.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!comparable(f[i].gen, f[j].gen)) return false;
    }
  }
  return true;
}

bool RingContext::is_standard(const Monomial& m) const {
  for (const auto& f : m.factors()) {
    if (!is_generator(f.gen)) return false;
  }
  if (!is_chain(m)) return false;
  if (mode_ == RingMode::semilattice) return true;
  // Canonical flat order refines rank, so a chain is sorted by rank already.
  int previous = 0;
  bool first = true;
  for (const auto& f : m.factors()) {
    const int gap = matroid_->rank(f.gen) - previous;
    const bool ok = (first && mode_ == RingMode::augmented) ? static_cast<int>(f.exp) <= gap
                                                            : static_cast<int>(f.exp) < gap;
    if (!ok) return false;
    previous = matroid_->rank(f.gen);
    first = false;
  }
  return true;
}

void RingContext::check_polynomial(const Polynomial& p) const {
  for (const auto& [m, c] : p.terms()) {
    for (const auto& f : m.factors()) {
      if (!is_generator(f.gen)) {
        throw Error(ErrorKind::UnknownFlat,
                    "h[" + std::to_string(f.gen) + "] is not a generator of this ring");
      }
    }
  }
}

GeneratorResolver RingContext::resolver() const {
  const auto base = index_resolver(element_count());
  return [self = *this, base](std::string_view name, std::size_t position) -> GenId {
    GenId g;
    if (self.is_matroid() && name == "E") {
      g = self.matroid_->top();
    } else {
      g = base(name, position);
    }
    if (!self.is_generator(g)) {
      throw Error(ErrorKind::UnknownFlat, "position " + std::to_string(position) + ": h[" +
                                              std::string(name) + "] is not a generator");
    }
    return g;
  };
}

}  // namespace chow
