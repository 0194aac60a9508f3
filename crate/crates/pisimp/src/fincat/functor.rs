//! Functors between finite categories.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use super::category::{FinCat, MorId, ObjId};
use super::fixture::FunctorData;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorIssue {
    #[error("object map misses `{0}`")]
    MissingObject(String),
    #[error("morphism map misses `{0}`")]
    MissingMorphism(String),
    #[error("unknown target object `{0}`")]
    UnknownTargetObject(String),
    #[error("unknown target morphism `{0}`")]
    UnknownTargetMorphism(String),
    #[error("image of `{morphism}` has endpoints {got}, expected {expected}")]
    EndpointMismatch { morphism: String, got: String, expected: String },
    #[error("identity of `{object}` is not sent to an identity")]
    IdentityNotPreserved { object: String },
    #[error("composition not preserved on ({g}, {f}): F(g∘f) = {left} but F(g)∘F(f) = {right}")]
    CompositionNotPreserved { g: String, f: String, left: String, right: String },
}

/// A functor, stored as object and morphism index maps, validated to
/// preserve endpoints, identities, and every composite.
#[derive(Debug, Clone)]
pub struct FinFunctor {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl PartialEq for FinFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
            && same_cat(&self.source, &other.source)
            && same_cat(&self.target, &other.target)
    }
}

impl Eq for FinFunctor {}

pub(crate) fn same_cat(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl FinFunctor {
    /// Validating constructor.
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Result<FinFunctor, Vec<FunctorIssue>> {
        let candidate = FinFunctor { source, target, obj_map, mor_map };
        let issues = candidate.issues();
        if issues.is_empty() {
            Ok(candidate)
        } else {
            Err(issues)
        }
    }

    /// Functor-law violations of the raw maps; empty for a genuine functor.
    pub fn issues(&self) -> Vec<FunctorIssue> {
        let mut issues = Vec::new();
        let src_cat = &self.source;
        let tgt_cat = &self.target;
        for (m, rec) in src_cat.morphisms().iter().enumerate() {
            let image = self.mor_map[m];
            let image_rec = tgt_cat.morphism(image);
            let want = (self.obj_map[rec.src], self.obj_map[rec.tgt]);
            if (image_rec.src, image_rec.tgt) != want {
                issues.push(FunctorIssue::EndpointMismatch {
                    morphism: rec.id.clone(),
                    got: format!(
                        "{} → {}",
                        tgt_cat.object_name(image_rec.src),
                        tgt_cat.object_name(image_rec.tgt)
                    ),
                    expected: format!(
                        "{} → {}",
                        tgt_cat.object_name(want.0),
                        tgt_cat.object_name(want.1)
                    ),
                });
            }
        }
        for o in 0..src_cat.n_objects() {
            if self.mor_map[src_cat.identity_of(o)] != tgt_cat.identity_of(self.obj_map[o]) {
                issues.push(FunctorIssue::IdentityNotPreserved {
                    object: src_cat.object_name(o).to_string(),
                });
            }
        }
        for g in 0..src_cat.n_morphisms() {
            for f in 0..src_cat.n_morphisms() {
                if let Some(gf) = src_cat.compose(g, f) {
                    let left = self.mor_map[gf];
                    let right = tgt_cat.compose(self.mor_map[g], self.mor_map[f]);
                    if right != Some(left) {
                        issues.push(FunctorIssue::CompositionNotPreserved {
                            g: src_cat.morphism(g).id.clone(),
                            f: src_cat.morphism(f).id.clone(),
                            left: tgt_cat.morphism(left).id.clone(),
                            right: right.map_or("undefined".into(), |m| tgt_cat.morphism(m).id.clone()),
                        });
                    }
                }
            }
        }
        issues
    }

    pub fn identity(cat: &Arc<FinCat>) -> FinFunctor {
        FinFunctor {
            source: Arc::clone(cat),
            target: Arc::clone(cat),
            obj_map: (0..cat.n_objects()).collect(),
            mor_map: (0..cat.n_morphisms()).collect(),
        }
    }

    /// `outer ∘ self`: this functor applied first.
    pub fn then(&self, outer: &FinFunctor) -> FinFunctor {
        debug_assert!(same_cat(&self.target, &outer.source));
        FinFunctor {
            source: Arc::clone(&self.source),
            target: Arc::clone(&outer.target),
            obj_map: self.obj_map.iter().map(|&o| outer.obj_map[o]).collect(),
            mor_map: self.mor_map.iter().map(|&m| outer.mor_map[m]).collect(),
        }
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn apply_obj(&self, o: ObjId) -> ObjId {
        self.obj_map[o]
    }

    pub fn apply_mor(&self, m: MorId) -> MorId {
        self.mor_map[m]
    }

    pub fn obj_map(&self) -> &[ObjId] {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    pub fn is_identity_functor(&self) -> bool {
        same_cat(&self.source, &self.target)
            && self.obj_map.iter().enumerate().all(|(i, &o)| i == o)
            && self.mor_map.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// The same maps read as a functor between the opposite categories.
    /// Callers pass the shared opposite category values so pointers stay
    /// shared across a whole construction.
    pub fn opposite(&self, source_op: &Arc<FinCat>, target_op: &Arc<FinCat>) -> FinFunctor {
        debug_assert!(**source_op == *self.source.opposite());
        debug_assert!(**target_op == *self.target.opposite());
        FinFunctor {
            source: Arc::clone(source_op),
            target: Arc::clone(target_op),
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
        }
    }

    pub fn from_data(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        data: &FunctorData,
    ) -> Result<FinFunctor, Vec<FunctorIssue>> {
        let mut issues = Vec::new();
        let mut obj_map = vec![usize::MAX; source.n_objects()];
        for o in 0..source.n_objects() {
            let name = source.object_name(o);
            match data.ob.get(name) {
                None => issues.push(FunctorIssue::MissingObject(name.to_string())),
                Some(image) => match target.obj_id(image) {
                    None => issues.push(FunctorIssue::UnknownTargetObject(image.clone())),
                    Some(t) => obj_map[o] = t,
                },
            }
        }
        let mut mor_map = vec![usize::MAX; source.n_morphisms()];
        for m in 0..source.n_morphisms() {
            let name = &source.morphism(m).id;
            match data.mor.get(name) {
                None => issues.push(FunctorIssue::MissingMorphism(name.clone())),
                Some(image) => match target.mor_id(image) {
                    None => issues.push(FunctorIssue::UnknownTargetMorphism(image.clone())),
                    Some(t) => mor_map[m] = t,
                },
            }
        }
        if !issues.is_empty() {
            return Err(issues);
        }
        FinFunctor::new(source, target, obj_map, mor_map)
    }

    pub fn to_data(&self) -> FunctorData {
        let ob: BTreeMap<String, String> = (0..self.source.n_objects())
            .map(|o| {
                (
                    self.source.object_name(o).to_string(),
                    self.target.object_name(self.obj_map[o]).to_string(),
                )
            })
            .collect();
        let mor: BTreeMap<String, String> = (0..self.source.n_morphisms())
            .map(|m| {
                (
                    self.source.morphism(m).id.clone(),
                    self.target.morphism(self.mor_map[m]).id.clone(),
                )
            })
            .collect();
        FunctorData { ob, mor }
    }
}
