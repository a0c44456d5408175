#include "exact/lemmas/snake.hpp"

#include "exact/core/errors.hpp"

namespace exact {

std::vector<Morphism> KerCokerResult::composed(const ExactCategory& cat) const {
  std::vector<Morphism> out;
  for (const auto& a : arrows) out.push_back(cat.compose(a.monic, a.epic));
  return out;
}

bool KerCokerResult::exact(const ExactCategory& cat) const {
  return is_admissible_monic(cat, composed(cat).front()) && is_admissible_epic(cat, composed(cat).back()) &&
         is_exact_sequence(cat, arrows);
}

KerCokerResult ker_coker_sequence(const ExactCategory& cat, const Morphism& f, const Morphism& g) {
  if (!cat.flags().weakly_idempotent_complete)
    throw PreconditionError("ker_coker_sequence", "model is not weakly idempotent complete");
  if (f.codomain() != g.domain()) throw InvalidInput("ker_coker_sequence: arrows are not composable");
  const Morphism h = cat.compose(g, f);
  auto af = analyze(cat, f);
  if (!af) throw PreconditionError("ker_coker_sequence", "first arrow is not admissible");
  auto ag = analyze(cat, g);
  if (!ag) throw PreconditionError("ker_coker_sequence", "second arrow is not admissible");
  auto ah = analyze(cat, h);
  if (!ah) throw PreconditionError("ker_coker_sequence", "composite is not admissible");

  // Kernels: Ker f >-> Ker h ->> X >-> Im f.
  const Morphism kf_to_kh = guaranteed(solve_left(cat, ah->kernel, af->kernel), "Ker f -> Ker h");
  const Morphism kh_to_x = guaranteed(cat.cokernel(kf_to_kh), "Ker h ->> X");
  const Morphism x_to_imf =
      guaranteed(solve_right(cat, kh_to_x, cat.compose(af->coimage, ah->kernel)), "X -> Im f");
  const Morphism x_to_kg =
      guaranteed(solve_left(cat, ag->kernel, cat.compose(af->image, x_to_imf)), "X -> Ker g");
  const Morphism kg_to_y = guaranteed(cat.cokernel(x_to_kg), "Ker g ->> Y");

  // Cokernels: Im g ->> Z >-> Coker h ->> Coker g.
  const Morphism ch_to_cg = guaranteed(solve_right(cat, ah->cokernel, ag->cokernel), "Coker h -> Coker g");
  const Morphism z_to_ch = guaranteed(cat.kernel(ch_to_cg), "Z >-> Coker h");
  const Morphism img_to_z =
      guaranteed(solve_left(cat, z_to_ch, cat.compose(ah->cokernel, ag->image)), "Im g -> Z");

  // Third column of the 3x3 diagram: Y >-> Coker f ->> Z.
  const Morphism y_to_cf =
      guaranteed(solve_right(cat, kg_to_y, cat.compose(af->cokernel, ag->kernel)), "Y -> Coker f");
  const Morphism cf_to_z =
      guaranteed(solve_right(cat, af->cokernel, cat.compose(img_to_z, ag->coimage)), "Coker f -> Z");

  KerCokerResult out{*af, *ag, *ah, {}};
  out.arrows = {
      Factorization{cat.identity(kf_to_kh.domain()), kf_to_kh},
      Factorization{kh_to_x, x_to_kg},
      Factorization{kg_to_y, y_to_cf},
      Factorization{cf_to_z, z_to_ch},
      Factorization{ch_to_cg, cat.identity(ch_to_cg.codomain())},
  };
  return out;
}

std::vector<Morphism> SnakeResult::six_term() const {
  return {kernel_first, kernel_second, delta, cokernel_first, cokernel_second};
}

bool SnakeResult::exact(const ExactCategory& cat) const {
  return is_admissible_monic(cat, kernel_first) && is_admissible_epic(cat, cokernel_second) &&
         is_exact_sequence(cat, six_term());
}

SnakeResult snake(const ExactCategory& cat, const SesMorphism& m) {
  if (!cat.flags().weakly_idempotent_complete) throw PreconditionError("snake", "model is not weakly idempotent complete");
  if (!is_valid(cat, m)) throw PreconditionError("snake", "not a morphism of short exact sequences");
  auto left = analyze(cat, m.left);
  auto middle = analyze(cat, m.middle);
  auto right = analyze(cat, m.right);
  if (!left || !middle || !right) throw PreconditionError("snake", "a component is not admissible");

  const SesFactorization split = factor_ses_morphism(cat, m);
  KerCokerResult through = ker_coker_sequence(cat, split.to_middle, split.from_middle);

  // Identify the kernel of D -> B with K'' and the cokernel of A -> D with C'.
  const Morphism kd_to_kr = guaranteed(
      solve_left(cat, right->kernel, cat.compose(split.middle_row.epi, through.second.kernel)), "Ker(D -> B) -> K''");
  const Morphism cl_to_cd = guaranteed(
      solve_right(cat, left->cokernel, cat.compose(through.first.cokernel, split.middle_row.mono)), "C' -> Coker(A -> D)");
  const Morphism kr_to_kd = guaranteed(cat.inverse(kd_to_kr), "K'' iso");
  const Morphism cd_to_cl = guaranteed(cat.inverse(cl_to_cd), "C' iso");
  const Morphism connecting = cat.compose(cd_to_cl, cat.compose(through.composed(cat)[2], kr_to_kd));

  return SnakeResult{
      left->kernel,
      middle->kernel,
      right->kernel,
      left->cokernel,
      middle->cokernel,
      right->cokernel,
      guaranteed(solve_left(cat, middle->kernel, cat.compose(m.source.mono, left->kernel)), "K' -> K"),
      guaranteed(solve_left(cat, right->kernel, cat.compose(m.source.epi, middle->kernel)), "K -> K''"),
      connecting,
      guaranteed(solve_right(cat, left->cokernel, cat.compose(middle->cokernel, m.target.mono)), "C' -> C"),
      guaranteed(solve_right(cat, middle->cokernel, cat.compose(right->cokernel, m.target.epi)), "C -> C''"),
      std::move(through),
  };
}

DeltaSquare delta_naturality(const ExactCategory& cat, const SesMorphism& m, const SesMorphism& n,
                             const SnakeInputMorphism& f) {
  const SesMorphism lhs = compose(cat, n, f.alpha);
  const SesMorphism rhs = compose(cat, f.beta, m);
  if (!cat.equal(lhs.left, rhs.left) || !cat.equal(lhs.middle, rhs.middle) || !cat.equal(lhs.right, rhs.right))
    throw PreconditionError("delta_naturality", "not a morphism of snake inputs");
  const SnakeResult a = snake(cat, m);
  const SnakeResult b = snake(cat, n);
  const Morphism on_kernels = guaranteed(
      solve_left(cat, b.kernel_right, cat.compose(f.alpha.right, a.kernel_right)), "arrow between kernels");
  const Morphism on_cokernels = guaranteed(
      solve_right(cat, a.cokernel_left, cat.compose(b.cokernel_left, f.beta.left)), "arrow between cokernels");
  const bool square = commutes(cat, cat.compose(b.delta, on_kernels), cat.compose(on_cokernels, a.delta));
  return DeltaSquare{on_kernels, on_cokernels, square};
}

}  // namespace exact
