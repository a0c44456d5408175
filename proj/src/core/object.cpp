#include "exact/core/object.hpp"

#include <sstream>

#include "exact/core/errors.hpp"

namespace exact {

Object::Object() : Object(IntMatrix(0, 0)) {}

Object::Object(IntMatrix relations) {
  Lattice lattice(relations);
  data_ = std::make_shared<const Data>(Data{std::move(relations), std::move(lattice), std::nullopt});
}

Object::Object(IntMatrix relations, IntMatrix idempotent) {
  if (idempotent.rows() != relations.rows() || idempotent.cols() != relations.rows())
    throw DimensionError("idempotent must be square on the generators");
  Lattice lattice(relations);
  data_ = std::make_shared<const Data>(
      Data{std::move(relations), std::move(lattice), std::move(idempotent)});
}

Object Object::free(std::size_t rank) { return Object(IntMatrix(rank, 0)); }

const IntMatrix& Object::idempotent() const {
  if (!data_->idempotent) throw InvalidInput("object carries no idempotent");
  return *data_->idempotent;
}

Object Object::underlying() const {
  if (!has_idempotent()) return *this;
  return Object(data_->relations);
}

bool operator==(const Object& a, const Object& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->relations == b.data_->relations && a.data_->idempotent == b.data_->idempotent;
}

std::string Object::to_string() const {
  std::ostringstream os;
  os << "Object(gens=" << generators() << ", relations=" << relations();
  if (has_idempotent()) os << ", idempotent=" << idempotent();
  os << ")";
  return os.str();
}

Morphism::Morphism(Object domain, Object codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.generators() || matrix_.cols() != domain_.generators())
    throw DimensionError("morphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " but objects have " +
                         std::to_string(codomain_.generators()) + " and " +
                         std::to_string(domain_.generators()) + " generators");
}

std::string Morphism::to_string() const {
  std::ostringstream os;
  os << "Morphism(" << matrix_ << ")";
  return os.str();
}

std::string IsoInvariants::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

}  // namespace exact
