/*! Computational engine for partial monotone maps on finite ordinals and
for the monad constructions they classify.

The crate has two halves.

The *combinatorial* half works with the category of finite ordinals
`{0, .., n-1}` and partial monotone maps between them:

- [`ordinals`] — the [`PMap`] value type, the generator maps `σ`/`δ`/`τ`,
  composition, ordinal sum, membership in the wide subcategories with
  downward/upward-closed domains of definition, and exhaustive hom-set
  enumeration with closed-form counting oracles.
- [`words`] — composable words in the generators, a parser/printer for them,
  evaluation to [`PMap`], extraction of the canonical
  `δ…δ σ…σ τ…τ` factorization, and a terminating rewriting normalizer
  driven by the machine-checked identity tables.
- [`weights`] — the two actions of total maps on the one-sided subcategories
  by ordinal sum, with exhaustively checked action laws.

The *categorical* half realizes the same algebra inside finite categories:

- [`fincat`] — categories as composition tables, functors, natural
  transformations, whiskering and both composition laws, monads with
  machine-checked laws, the dictionary sending total generator words to
  natural transformations (`δ ↦ η`, `σ ↦ μ`), and exhaustive enumeration
  of functors, natural transformations, and monads under a search budget.
- [`bridge`] — Eilenberg-Moore and Kleisli categories, the categories of
  subequalizing pairs `(U, ξ)` and their duals, truncated cone checks, and
  the certified isomorphisms `Cat(X, EM(T)) ≅ Subeq_T(X)` and
  `Cat(Kl(T), X) ≅ Coeq_T(X)` over finite probe categories.
- [`fixtures`] — the bundled example categories and monads, kept in sync
  with the JSON fixture files shipped in `fixtures/`.

Everything is a pure function over immutable values; all types are
`Send + Sync` and may be shared freely across threads.
*/

pub mod bridge;
pub mod fincat;
pub mod fixtures;
pub mod ordinals;
pub mod weights;
pub mod words;

pub use ordinals::{HomFlavor, PMap, PMapError};
pub use words::{CanonicalWord, GenKind, GenWord, Generator, WordError};
