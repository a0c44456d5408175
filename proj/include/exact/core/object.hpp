#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exact/linalg/int_matrix.hpp"
#include "exact/linalg/lattice.hpp"

namespace exact {

// A presented object: Z^generators modulo the column span of `relations`.
// Objects of an idempotent completion additionally carry an idempotent
// endomorphism of the underlying presented object. Immutable and cheap to copy.
class Object {
 public:
  Object();
  explicit Object(IntMatrix relations);
  Object(IntMatrix relations, IntMatrix idempotent);

  static Object free(std::size_t rank);

  std::size_t generators() const { return data_->relations.rows(); }
  const IntMatrix& relations() const { return data_->relations; }
  const Lattice& relation_lattice() const { return data_->lattice; }
  bool has_relations() const { return data_->relations.cols() > 0; }

  bool has_idempotent() const { return data_->idempotent.has_value(); }
  const IntMatrix& idempotent() const;
  // The same presentation without the idempotent.
  Object underlying() const;

  friend bool operator==(const Object& a, const Object& b);
  friend bool operator!=(const Object& a, const Object& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Data {
    IntMatrix relations;
    Lattice lattice;
    std::optional<IntMatrix> idempotent;
  };
  std::shared_ptr<const Data> data_;
};

class Morphism {
 public:
  Morphism(Object domain, Object codomain, IntMatrix matrix);

  const Object& domain() const { return domain_; }
  const Object& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  std::string to_string() const;

 private:
  Object domain_;
  Object codomain_;
  IntMatrix matrix_;
};

struct Biproduct {
  Object sum;
  Morphism inject_first;
  Morphism inject_second;
  Morphism project_first;
  Morphism project_second;
};

struct ShortExactSequence {
  Morphism mono;
  Morphism epi;

  const Object& left() const { return mono.domain(); }
  const Object& middle() const { return mono.codomain(); }
  const Object& right() const { return epi.codomain(); }
};

struct IsoInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const IsoInvariants&, const IsoInvariants&) = default;
};

}  // namespace exact
