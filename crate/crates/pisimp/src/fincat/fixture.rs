//! JSON fixture schema for categories, functors, and monads.
//!
//! A monad fixture looks like
//!
//! ```json
//! {
//!   "category": {
//!     "objects": ["0", "1"],
//!     "morphisms": [
//!       {"id": "0->0", "src": "0", "tgt": "0"},
//!       {"id": "0->1", "src": "0", "tgt": "1"},
//!       {"id": "1->1", "src": "1", "tgt": "1"}
//!     ],
//!     "identities": {"0": "0->0", "1": "1->1"},
//!     "compose": []
//!   },
//!   "T": {
//!     "ob": {"0": "1", "1": "1"},
//!     "mor": {"0->0": "1->1", "0->1": "1->1", "1->1": "1->1"}
//!   },
//!   "eta": {"0": "0->1", "1": "1->1"},
//!   "mu": {"0": "1->1", "1": "1->1"}
//! }
//! ```
//!
//! `compose` entries involving identities may be omitted. Unknown fields
//! are rejected everywhere.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::category::{CatIssue, CategoryData, FinCat};
use super::functor::{FinFunctor, FunctorIssue};
use super::monad::{Monad, MonadIssue};
use super::nat::{NatIssue, NatTrans};

/// Raw functor data: object and morphism assignments by id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorData {
    pub ob: BTreeMap<String, String>,
    pub mor: BTreeMap<String, String>,
}

/// Raw monad data: the category, the endofunctor, and the component
/// assignments of the unit and multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadData {
    pub category: CategoryData,
    #[serde(rename = "T")]
    pub t: FunctorData,
    pub eta: BTreeMap<String, String>,
    pub mu: BTreeMap<String, String>,
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read fixture: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed fixture JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid category:\n{}", issues_text(.0))]
    InvalidCategory(Vec<CatIssue>),
    #[error("invalid endofunctor:\n{}", issues_text(.0))]
    InvalidFunctor(Vec<FunctorIssue>),
    #[error("invalid {which}:\n{}", issues_text(issues))]
    InvalidNat { which: &'static str, issues: Vec<NatIssue> },
    #[error("monad laws violated:\n{}", issues_text(.0))]
    InvalidMonad(Vec<MonadIssue>),
    #[error("unknown component morphism `{id}` in {which}")]
    UnknownComponent { which: &'static str, id: String },
    #[error("missing component for object `{object}` in {which}")]
    MissingComponent { which: &'static str, object: String },
}

fn issues_text(issues: &[impl std::fmt::Display]) -> String {
    issues.iter().map(|i| format!("  - {i}")).collect::<Vec<_>>().join("\n")
}

/// Builds the validated monad from raw fixture data.
pub fn monad_from_data(data: &MonadData) -> Result<Monad, FixtureError> {
    let cat = FinCat::from_data(&data.category).map_err(FixtureError::InvalidCategory)?;
    let t = FinFunctor::from_data(Arc::clone(&cat), Arc::clone(&cat), &data.t)
        .map_err(FixtureError::InvalidFunctor)?;
    let eta = components_from_map(&cat, &data.eta, "eta").and_then(|components| {
        NatTrans::new(FinFunctor::identity(&cat), t.clone(), components)
            .map_err(|issues| FixtureError::InvalidNat { which: "eta", issues })
    })?;
    let mu = components_from_map(&cat, &data.mu, "mu").and_then(|components| {
        NatTrans::new(t.then(&t), t.clone(), components)
            .map_err(|issues| FixtureError::InvalidNat { which: "mu", issues })
    })?;
    Monad::new(t, eta, mu).map_err(FixtureError::InvalidMonad)
}

fn components_from_map(
    cat: &Arc<FinCat>,
    map: &BTreeMap<String, String>,
    which: &'static str,
) -> Result<Vec<usize>, FixtureError> {
    (0..cat.n_objects())
        .map(|o| {
            let name = cat.object_name(o);
            let id = map.get(name).ok_or_else(|| FixtureError::MissingComponent {
                which,
                object: name.to_string(),
            })?;
            cat.mor_id(id)
                .ok_or_else(|| FixtureError::UnknownComponent { which, id: id.clone() })
        })
        .collect()
}

/// Serializes a monad back to raw fixture data.
pub fn monad_to_data(monad: &Monad) -> MonadData {
    let cat = monad.cat();
    let component_map = |nat: &NatTrans| {
        (0..cat.n_objects())
            .map(|o| (cat.object_name(o).to_string(), cat.morphism(nat.component(o)).id.clone()))
            .collect()
    };
    MonadData {
        category: cat.to_data(),
        t: monad.t().to_data(),
        eta: component_map(monad.eta()),
        mu: component_map(monad.mu()),
    }
}

/// Loads a monad fixture from a JSON file.
pub fn load_monad(path: impl AsRef<Path>) -> Result<Monad, FixtureError> {
    let text = std::fs::read_to_string(path)?;
    let data: MonadData = serde_json::from_str(&text)?;
    monad_from_data(&data)
}

/// Loads a category fixture from a JSON file.
pub fn load_category(path: impl AsRef<Path>) -> Result<Arc<FinCat>, FixtureError> {
    let text = std::fs::read_to_string(path)?;
    let data: CategoryData = serde_json::from_str(&text)?;
    FinCat::from_data(&data).map_err(FixtureError::InvalidCategory)
}
