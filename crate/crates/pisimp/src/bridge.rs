/*! Eilenberg-Moore and Kleisli objects certified as weighted (co)limits
at finite scale.

For a monad `T` on a finite category `C` and a finite probe category `X`,
this module computes both sides of the two comparisons and certifies them:

- the functor category `Cat(X, EM(T))` against the category of
  *subequalizing pairs* `(U : X → C, ξ : T∘U ⇒ U)` with
  `ξ∘η_U = 1` and `ξ∘T(ξ) = ξ∘μ_U` — see [`em_comparison`];
- the functor category `Cat(Kl(T), X)` against the dual category of pairs
  `(F : C → X, ζ : F∘T ⇒ F)` — see [`kleisli_comparison`].

Each comparison records explicit object and morphism bijections, checks
functoriality and naturality in the probe, and (on the Eilenberg-Moore
side) re-expands every subequalizing pair into a depth-truncated cone over
the one-sided partial-map category and checks all of its equations; see
[`cone`].
*/

pub mod compare;
pub mod cone;
pub mod em;
pub mod hom;
pub mod kleisli;
pub mod module_cat;
pub mod opposite;

pub use compare::{em_comparison, kleisli_comparison, ComparisonReport, ProbeComparison};
pub use cone::{cone_check, cone_from_pair, cone_from_subeq, ConeCheckReport, TruncatedCone};
pub use em::{em_category, Algebra, EmCategory};
pub use hom::{hom_category, HomCategory};
pub use kleisli::{kleisli_category, KleisliCategory};
pub use module_cat::{
    coeq_category, subeq_category, CoeqCategory, CoeqObject, ModuleMorphism, SubeqCategory,
    SubeqIssue, SubeqObject,
};
