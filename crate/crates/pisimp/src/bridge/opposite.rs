//! Duality cross-checks through the opposite transform.
//!
//! Reversing every arrow sends a monad's unit to a *counit*-shaped family
//! and its multiplication to a comultiplication, so there is no opposite
//! *monad* to hand to the primal machinery. What duality really provides
//! is this: subequalizing data for `T` corresponds, arrow-reversal for
//! arrow-reversal, to the co-module data of the reversed family on the
//! opposite categories, with every equation transposed. The checks here
//! re-derive both module searches that way — a genuine end-to-end exercise
//! of the opposite transform and of the orientation of every whisker in
//! the dual code path — and additionally check the functor-category
//! duality `Cat(X, Y)^op ≅ Cat(X^op, Y^op)`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::fincat::category::FinCat;
use crate::fincat::enumerate::{enumerate_functors, enumerate_nats, Budget, SearchError};
use crate::fincat::functor::FinFunctor;
use crate::fincat::monad::Monad;
use crate::fincat::nat::NatTrans;

use super::hom::hom_category;
use super::module_cat::{coeq_category, subeq_category};

type ObjKey = (Vec<usize>, Vec<usize>, Vec<usize>);
type MorKey = (ObjKey, ObjKey, Vec<usize>);

/// Outcome of re-deriving a module category through opposite data.
#[derive(Debug, Clone, Serialize)]
pub struct OpDualityCheck {
    pub objects: usize,
    pub morphisms: usize,
    pub objects_match: bool,
    pub morphisms_match: bool,
}

impl OpDualityCheck {
    pub fn holds(&self) -> bool {
        self.objects_match && self.morphisms_match
    }
}

/// The unit family read backwards on the opposite category:
/// `T^op ⇒ Id` with the same component arrows.
fn op_counit(monad: &Monad, c_op: &Arc<FinCat>, t_op: &FinFunctor) -> NatTrans {
    let comps = (0..c_op.n_objects()).map(|c| monad.eta().component(c)).collect();
    NatTrans::new(t_op.clone(), FinFunctor::identity(c_op), comps)
        .expect("the reversed unit is natural on the opposite category")
}

/// The multiplication family read backwards: `T^op ⇒ T^op∘T^op`.
fn op_comult(monad: &Monad, t_op: &FinFunctor) -> NatTrans {
    let comps = (0..t_op.source().n_objects()).map(|c| monad.mu().component(c)).collect();
    NatTrans::new(t_op.clone(), t_op.then(t_op), comps)
        .expect("the reversed multiplication is natural on the opposite category")
}

/// Re-derives the subequalizing pairs of `(monad, x)` on opposite data:
/// pairs `(V : X^op → C^op, θ : V ⇒ T^op∘V)` with both equations
/// transposed, and squares reversed. The raw data vectors must coincide.
pub fn check_subeq_op_duality(
    monad: &Monad,
    x: &Arc<FinCat>,
    budget: Budget,
) -> Result<OpDualityCheck, SearchError> {
    let sub = subeq_category(monad, x, budget)?;
    let c_op = monad.cat().opposite();
    let x_op = x.opposite();
    let t_op = monad.t().opposite(&c_op, &c_op);
    let counit = op_counit(monad, &c_op, &t_op);
    let comult = op_comult(monad, &t_op);

    let mut co_objects: Vec<(FinFunctor, NatTrans)> = Vec::new();
    for v in enumerate_functors(&x_op, &c_op, budget)? {
        let tv = v.then(&t_op);
        for theta in enumerate_nats(&v, &tv, budget)? {
            // ε_V ∘ θ = 1, the reversed unit equation.
            let counit_v = NatTrans::whisker_right(&counit, &v).expect("whiskers along V");
            let unit_ok = NatTrans::vertical(&counit_v, &theta)
                .expect("shapes line up")
                .is_identity_nat();
            // T^op(θ) ∘ θ = δ_V ∘ θ, the reversed multiplication equation.
            let t_theta = NatTrans::whisker_left(&t_op, &theta).expect("T^op applies");
            let left = NatTrans::vertical(&t_theta, &theta).expect("shapes line up");
            let comult_v = NatTrans::whisker_right(&comult, &v).expect("whiskers along V");
            let right = NatTrans::vertical(&comult_v, &theta).expect("shapes line up");
            if unit_ok && left.components() == right.components() {
                co_objects.push((v.clone(), theta));
            }
        }
    }

    let obj_key = |u: &FinFunctor, comps: &[usize]| -> ObjKey {
        (u.obj_map().to_vec(), u.mor_map().to_vec(), comps.to_vec())
    };
    let primal_objects: BTreeSet<ObjKey> =
        sub.objects.iter().map(|s| obj_key(&s.u, s.xi.components())).collect();
    let dual_objects: BTreeSet<ObjKey> =
        co_objects.iter().map(|(v, theta)| obj_key(v, theta.components())).collect();
    let objects_match = primal_objects == dual_objects;

    // Squares reverse: ν : (U,ξ) → (U',ξ') corresponds to ρ : V' ⇒ V.
    let primal_morphisms: BTreeSet<MorKey> = sub
        .morphisms
        .iter()
        .map(|m| {
            let s = &sub.objects[m.source];
            let t = &sub.objects[m.target];
            (
                obj_key(&t.u, t.xi.components()),
                obj_key(&s.u, s.xi.components()),
                m.nu.components().to_vec(),
            )
        })
        .collect();
    let mut dual_morphisms: BTreeSet<MorKey> = BTreeSet::new();
    for (v, theta) in &co_objects {
        for (v2, theta2) in &co_objects {
            for rho in enumerate_nats(v2, v, budget)? {
                // T^op(ρ) ∘ θ' = θ ∘ ρ, the reversed square.
                let t_rho = NatTrans::whisker_left(&t_op, &rho).expect("T^op applies");
                let left = NatTrans::vertical(&t_rho, theta2).expect("shapes line up");
                let right = NatTrans::vertical(theta, &rho).expect("shapes line up");
                if left.components() == right.components() {
                    dual_morphisms.insert((
                        obj_key(v2, theta2.components()),
                        obj_key(v, theta.components()),
                        rho.components().to_vec(),
                    ));
                }
            }
        }
    }
    let morphisms_match = primal_morphisms == dual_morphisms;

    Ok(OpDualityCheck {
        objects: sub.objects.len(),
        morphisms: sub.morphisms.len(),
        objects_match,
        morphisms_match,
    })
}

/// The dual re-derivation for the coequalizing side: pairs
/// `(V : C^op → X^op, θ : V ⇒ V∘T^op)` with transposed equations.
pub fn check_coeq_op_duality(
    monad: &Monad,
    x: &Arc<FinCat>,
    budget: Budget,
) -> Result<OpDualityCheck, SearchError> {
    let coeq = coeq_category(monad, x, budget)?;
    let c_op = monad.cat().opposite();
    let x_op = x.opposite();
    let t_op = monad.t().opposite(&c_op, &c_op);
    let counit = op_counit(monad, &c_op, &t_op);
    let comult = op_comult(monad, &t_op);

    let mut co_objects: Vec<(FinFunctor, NatTrans)> = Vec::new();
    for v in enumerate_functors(&c_op, &x_op, budget)? {
        let vt = t_op.then(&v);
        for theta in enumerate_nats(&v, &vt, budget)? {
            // V(ε) ∘ θ = 1.
            let v_counit = NatTrans::whisker_left(&v, &counit).expect("V applies");
            let unit_ok = NatTrans::vertical(&v_counit, &theta)
                .expect("shapes line up")
                .is_identity_nat();
            // θ_{T^op} ∘ θ = V(δ) ∘ θ.
            let theta_t = NatTrans::whisker_right(&theta, &t_op).expect("shifts along T^op");
            let left = NatTrans::vertical(&theta_t, &theta).expect("shapes line up");
            let v_comult = NatTrans::whisker_left(&v, &comult).expect("V applies");
            let right = NatTrans::vertical(&v_comult, &theta).expect("shapes line up");
            if unit_ok && left.components() == right.components() {
                co_objects.push((v.clone(), theta));
            }
        }
    }

    let obj_key = |u: &FinFunctor, comps: &[usize]| -> ObjKey {
        (u.obj_map().to_vec(), u.mor_map().to_vec(), comps.to_vec())
    };
    let primal_objects: BTreeSet<ObjKey> =
        coeq.objects.iter().map(|s| obj_key(&s.f, s.zeta.components())).collect();
    let dual_objects: BTreeSet<ObjKey> =
        co_objects.iter().map(|(v, theta)| obj_key(v, theta.components())).collect();
    let objects_match = primal_objects == dual_objects;

    let primal_morphisms: BTreeSet<MorKey> = coeq
        .morphisms
        .iter()
        .map(|m| {
            let s = &coeq.objects[m.source];
            let t = &coeq.objects[m.target];
            (
                obj_key(&t.f, t.zeta.components()),
                obj_key(&s.f, s.zeta.components()),
                m.nu.components().to_vec(),
            )
        })
        .collect();
    let mut dual_morphisms: BTreeSet<MorKey> = BTreeSet::new();
    for (v, theta) in &co_objects {
        for (v2, theta2) in &co_objects {
            for rho in enumerate_nats(v2, v, budget)? {
                // ρ_{T^op} ∘ θ' = θ ∘ ρ.
                let rho_t = NatTrans::whisker_right(&rho, &t_op).expect("shifts along T^op");
                let left = NatTrans::vertical(&rho_t, theta2).expect("shapes line up");
                let right = NatTrans::vertical(theta, &rho).expect("shapes line up");
                if left.components() == right.components() {
                    dual_morphisms.insert((
                        obj_key(v2, theta2.components()),
                        obj_key(v, theta.components()),
                        rho.components().to_vec(),
                    ));
                }
            }
        }
    }
    let morphisms_match = primal_morphisms == dual_morphisms;

    Ok(OpDualityCheck {
        objects: coeq.objects.len(),
        morphisms: coeq.morphisms.len(),
        objects_match,
        morphisms_match,
    })
}

/// `Cat(X, Y)^op ≅ Cat(X^op, Y^op)`: functors correspond with identical
/// assignment vectors, 2-cells correspond with identical components and
/// reversed endpoints.
pub fn check_hom_op_duality(
    x: &Arc<FinCat>,
    y: &Arc<FinCat>,
    budget: Budget,
) -> Result<bool, SearchError> {
    let hom = hom_category(x, y, budget)?;
    let hom_op = hom_category(&x.opposite(), &y.opposite(), budget)?;
    let keys = |f: &FinFunctor| (f.obj_map().to_vec(), f.mor_map().to_vec());
    let primal_objects: BTreeSet<_> = hom.objects.iter().map(keys).collect();
    let dual_objects: BTreeSet<_> = hom_op.objects.iter().map(keys).collect();
    if primal_objects != dual_objects {
        return Ok(false);
    }
    let primal_mors: BTreeSet<_> = hom
        .morphisms
        .iter()
        .map(|n| (keys(n.source()), keys(n.target()), n.components().to_vec()))
        .collect();
    let dual_mors: BTreeSet<_> = hom_op
        .morphisms
        .iter()
        .map(|n| (keys(n.target()), keys(n.source()), n.components().to_vec()))
        .collect();
    Ok(primal_mors == dual_mors)
}
