/*! Finite categories, functors, natural transformations, and monads,
all represented by explicit composition tables and validated exhaustively
at construction time.

Identifiers are strings; internally everything is an index into the
id-sorted object and morphism lists, so enumeration orders are reproducible
across runs. The JSON fixture schema lives in [`fixture`]; the search
routines with their budget guard live in [`enumerate`].
*/

pub mod category;
pub mod enumerate;
pub mod fixture;
pub mod functor;
pub mod monad;
pub mod nat;

pub use category::{CatIssue, CategoryData, FinCat, MorId, MorRec, MorphismData, ObjId};
pub use enumerate::{enumerate_functors, enumerate_monads, enumerate_nats, Budget, SearchError};
pub use fixture::{FixtureError, FunctorData, MonadData};
pub use functor::{FinFunctor, FunctorIssue};
pub use monad::{Monad, MonadIssue, WordImageError};
pub use nat::{NatIssue, NatTrans, ShapeError};
