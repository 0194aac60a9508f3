//! Natural transformations: vertical and horizontal composition,
//! whiskering, and the exchange law between the two compositions.

use thiserror::Error;

use super::category::MorId;
use super::functor::{same_cat, FinFunctor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatIssue {
    #[error("source and target functors are not parallel")]
    NotParallel,
    #[error("missing component at `{0}`")]
    MissingComponent(String),
    #[error("unknown component morphism `{0}`")]
    UnknownComponent(String),
    #[error("component at `{object}` has endpoints {got}, expected {expected}")]
    ComponentShape { object: String, got: String, expected: String },
    #[error("naturality fails at `{morphism}`: G(m)∘α = {left} but α∘F(m) = {right}")]
    NotNatural { morphism: String, left: String, right: String },
}

/// Shape mismatch between transformations or functors being pasted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("shape mismatch: {0}")]
pub struct ShapeError(pub String);

/// A natural transformation between parallel functors, stored as one
/// component morphism per source object. Equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<MorId>,
}

impl NatTrans {
    pub fn new(
        source: FinFunctor,
        target: FinFunctor,
        components: Vec<MorId>,
    ) -> Result<NatTrans, Vec<NatIssue>> {
        let candidate = NatTrans { source, target, components };
        let issues = candidate.issues();
        if issues.is_empty() {
            Ok(candidate)
        } else {
            Err(issues)
        }
    }

    /// Naturality and shape violations; empty for a genuine transformation.
    pub fn issues(&self) -> Vec<NatIssue> {
        let mut issues = Vec::new();
        if !same_cat(self.source.source(), self.target.source())
            || !same_cat(self.source.target(), self.target.target())
        {
            issues.push(NatIssue::NotParallel);
            return issues;
        }
        let dom = self.source.source();
        let cod = self.source.target();
        if self.components.len() != dom.n_objects() {
            issues.push(NatIssue::MissingComponent(format!(
                "expected {} components, got {}",
                dom.n_objects(),
                self.components.len()
            )));
            return issues;
        }
        for x in 0..dom.n_objects() {
            let rec = cod.morphism(self.components[x]);
            let want = (self.source.apply_obj(x), self.target.apply_obj(x));
            if (rec.src, rec.tgt) != want {
                issues.push(NatIssue::ComponentShape {
                    object: dom.object_name(x).to_string(),
                    got: format!("{} → {}", cod.object_name(rec.src), cod.object_name(rec.tgt)),
                    expected: format!("{} → {}", cod.object_name(want.0), cod.object_name(want.1)),
                });
            }
        }
        if !issues.is_empty() {
            return issues;
        }
        for (m, rec) in dom.morphisms().iter().enumerate() {
            let left = cod.compose(self.target.apply_mor(m), self.components[rec.src]);
            let right = cod.compose(self.components[rec.tgt], self.source.apply_mor(m));
            if left != right || left.is_none() {
                issues.push(NatIssue::NotNatural {
                    morphism: rec.id.clone(),
                    left: left.map_or("undefined".into(), |x| cod.morphism(x).id.clone()),
                    right: right.map_or("undefined".into(), |x| cod.morphism(x).id.clone()),
                });
            }
        }
        issues
    }

    pub fn identity(f: &FinFunctor) -> NatTrans {
        let components = (0..f.source().n_objects())
            .map(|x| f.target().identity_of(f.apply_obj(x)))
            .collect();
        NatTrans { source: f.clone(), target: f.clone(), components }
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn component(&self, x: usize) -> MorId {
        self.components[x]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn is_identity_nat(&self) -> bool {
        self.source == self.target
            && self
                .components
                .iter()
                .enumerate()
                .all(|(x, &c)| c == self.source.target().identity_of(self.source.apply_obj(x)))
    }

    /// Vertical composite `outer ∘ self` (`self: F ⇒ G` first, then
    /// `outer: G ⇒ H`).
    pub fn vertical(outer: &NatTrans, inner: &NatTrans) -> Result<NatTrans, ShapeError> {
        if inner.target != outer.source {
            return Err(ShapeError("vertical composition needs inner.target = outer.source".into()));
        }
        let cod = inner.source.target();
        let components = (0..inner.components.len())
            .map(|x| {
                cod.compose(outer.components[x], inner.components[x])
                    .expect("components are composable at every object")
            })
            .collect();
        Ok(NatTrans { source: inner.source.clone(), target: outer.target.clone(), components })
    }

    /// Horizontal composite of `self: F ⇒ G` (between functors `X → Y`)
    /// with `outer: H ⇒ K` (between functors `Y → Z`), giving
    /// `H∘F ⇒ K∘G`. Computed as `K(α_x) ∘ β_{F(x)}`; the exchange law makes
    /// this agree with `β_{G(x)} ∘ H(α_x)`, which the tests verify.
    pub fn horizontal(outer: &NatTrans, inner: &NatTrans) -> Result<NatTrans, ShapeError> {
        if !same_cat(inner.source.target(), outer.source.source()) {
            return Err(ShapeError("horizontal composition needs matching middle category".into()));
        }
        let source = inner.source.then(&outer.source);
        let target = inner.target.then(&outer.target);
        let z = outer.source.target();
        let components = (0..inner.components.len())
            .map(|x| {
                let k_of_alpha = outer.target.apply_mor(inner.components[x]);
                let beta_at = outer.components[inner.source.apply_obj(x)];
                z.compose(k_of_alpha, beta_at).expect("exchange components compose")
            })
            .collect();
        Ok(NatTrans { source, target, components })
    }

    /// Whiskers a functor on the outside: `F · self : F∘G ⇒ F∘H` for
    /// `self: G ⇒ H` with codomain `F`'s source.
    pub fn whisker_left(f: &FinFunctor, nat: &NatTrans) -> Result<NatTrans, ShapeError> {
        if !same_cat(nat.source.target(), f.source()) {
            return Err(ShapeError("whisker_left needs the functor to start at the 2-cell's codomain".into()));
        }
        Ok(NatTrans {
            source: nat.source.then(f),
            target: nat.target.then(f),
            components: nat.components.iter().map(|&c| f.apply_mor(c)).collect(),
        })
    }

    /// Whiskers a functor on the inside: `self · F : G∘F ⇒ H∘F` for
    /// `self: G ⇒ H` and `F` landing in the 2-cell's domain category.
    pub fn whisker_right(nat: &NatTrans, f: &FinFunctor) -> Result<NatTrans, ShapeError> {
        if !same_cat(f.target(), nat.source.source()) {
            return Err(ShapeError("whisker_right needs the functor to land in the 2-cell's domain".into()));
        }
        Ok(NatTrans {
            source: f.then(&nat.source),
            target: f.then(&nat.target),
            components: f.obj_map().iter().map(|&o| nat.components[o]).collect(),
        })
    }
}
