//! Categories of subequalizing pairs and their duals, found by exhaustive
//! search over functors and candidate structure 2-cells.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::fincat::category::{CategoryData, FinCat, MorphismData};
use crate::fincat::enumerate::{enumerate_functors, enumerate_nats, Budget, SearchError};
use crate::fincat::functor::FinFunctor;
use crate::fincat::monad::Monad;
use crate::fincat::nat::NatTrans;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubeqIssue {
    #[error("structure 2-cell has the wrong shape")]
    BadShape,
    #[error("unit equation fails: ξ∘η_U ≠ 1")]
    UnitEquation,
    #[error("multiplication equation fails: ξ∘T(ξ) ≠ ξ∘μ_U")]
    MultiplicationEquation,
}

/// A pair `(U : X → C, ξ : T∘U ⇒ U)` with `ξ∘η_U = 1_U` and
/// `ξ∘T(ξ) = ξ∘μ_U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubeqObject {
    pub u: FinFunctor,
    pub xi: NatTrans,
}

impl SubeqObject {
    pub fn new(monad: &Monad, u: FinFunctor, xi: NatTrans) -> Result<SubeqObject, SubeqIssue> {
        let tu = u.then(monad.t());
        if xi.source() != &tu || xi.target() != &u {
            return Err(SubeqIssue::BadShape);
        }
        let eta_u = NatTrans::whisker_right(monad.eta(), &u).expect("unit whiskers along U");
        let unit = NatTrans::vertical(&xi, &eta_u).expect("shapes line up");
        if !unit.is_identity_nat() {
            return Err(SubeqIssue::UnitEquation);
        }
        let t_xi = NatTrans::whisker_left(monad.t(), &xi).expect("T applies to ξ");
        let mu_u = NatTrans::whisker_right(monad.mu(), &u).expect("μ whiskers along U");
        let left = NatTrans::vertical(&xi, &t_xi).expect("shapes line up");
        let right = NatTrans::vertical(&xi, &mu_u).expect("shapes line up");
        if left.components() != right.components() {
            return Err(SubeqIssue::MultiplicationEquation);
        }
        Ok(SubeqObject { u, xi })
    }
}

/// A pair `(F : C → X, ζ : F∘T ⇒ F)` with `ζ∘F(η) = 1_F` and
/// `ζ∘F(μ) = ζ∘ζ_T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeqObject {
    pub f: FinFunctor,
    pub zeta: NatTrans,
}

impl CoeqObject {
    pub fn new(monad: &Monad, f: FinFunctor, zeta: NatTrans) -> Result<CoeqObject, SubeqIssue> {
        let ft = monad.t().then(&f);
        if zeta.source() != &ft || zeta.target() != &f {
            return Err(SubeqIssue::BadShape);
        }
        let f_eta = NatTrans::whisker_left(&f, monad.eta()).expect("F applies to η");
        let unit = NatTrans::vertical(&zeta, &f_eta).expect("shapes line up");
        if !unit.is_identity_nat() {
            return Err(SubeqIssue::UnitEquation);
        }
        let f_mu = NatTrans::whisker_left(&f, monad.mu()).expect("F applies to μ");
        let zeta_t = NatTrans::whisker_right(&zeta, monad.t()).expect("ζ shifts along T");
        let left = NatTrans::vertical(&zeta, &f_mu).expect("shapes line up");
        let right = NatTrans::vertical(&zeta, &zeta_t).expect("shapes line up");
        if left.components() != right.components() {
            return Err(SubeqIssue::MultiplicationEquation);
        }
        Ok(CoeqObject { f, zeta })
    }
}

/// A morphism between module objects: the underlying 2-cell between the
/// carrier functors, with the indices of its endpoints.
#[derive(Debug, Clone)]
pub struct ModuleMorphism {
    pub source: usize,
    pub target: usize,
    pub nu: NatTrans,
}

/// The category of subequalizing pairs over a probe `X`, with the pairs
/// and squares behind the ids (index-aligned).
#[derive(Debug, Clone)]
pub struct SubeqCategory {
    pub cat: Arc<FinCat>,
    pub objects: Vec<SubeqObject>,
    pub morphisms: Vec<ModuleMorphism>,
}

impl SubeqCategory {
    pub fn object_index(&self, u: &FinFunctor, xi: &NatTrans) -> Option<usize> {
        self.objects.iter().position(|s| &s.u == u && s.xi.components() == xi.components())
    }

    pub fn morphism_index(&self, source: usize, target: usize, nu: &NatTrans) -> Option<usize> {
        self.morphisms.iter().position(|m| {
            m.source == source && m.target == target && m.nu.components() == nu.components()
        })
    }
}

/// Dual container for the coequalizing side.
#[derive(Debug, Clone)]
pub struct CoeqCategory {
    pub cat: Arc<FinCat>,
    pub objects: Vec<CoeqObject>,
    pub morphisms: Vec<ModuleMorphism>,
}

impl CoeqCategory {
    pub fn object_index(&self, f: &FinFunctor, zeta: &NatTrans) -> Option<usize> {
        self.objects.iter().position(|s| &s.f == f && s.zeta.components() == zeta.components())
    }

    pub fn morphism_index(&self, source: usize, target: usize, nu: &NatTrans) -> Option<usize> {
        self.morphisms.iter().position(|m| {
            m.source == source && m.target == target && m.nu.components() == nu.components()
        })
    }
}

/// Assembles the validated composition table shared by both searches.
fn assemble(
    tag: &str,
    n_objects: usize,
    morphisms: &[ModuleMorphism],
    identity_of: impl Fn(usize) -> usize,
) -> Arc<FinCat> {
    let obj_name = |i: usize| format!("{tag}{i:03}");
    let mor_name = |k: usize| format!("q{k:04}");
    let mut index: BTreeMap<(usize, usize, Vec<usize>), usize> = BTreeMap::new();
    for (k, m) in morphisms.iter().enumerate() {
        index.insert((m.source, m.target, m.nu.components().to_vec()), k);
    }
    let mut compose = Vec::new();
    for (k2, outer) in morphisms.iter().enumerate() {
        for (k1, inner) in morphisms.iter().enumerate() {
            if inner.target != outer.source {
                continue;
            }
            let composite = NatTrans::vertical(&outer.nu, &inner.nu).expect("endpoints line up");
            let target = index
                .get(&(inner.source, outer.target, composite.components().to_vec()))
                .expect("module morphisms are closed under composition");
            compose.push((mor_name(k2), mor_name(k1), mor_name(*target)));
        }
    }
    let data = CategoryData {
        objects: (0..n_objects).map(obj_name).collect(),
        morphisms: morphisms
            .iter()
            .enumerate()
            .map(|(k, m)| MorphismData {
                id: mor_name(k),
                src: obj_name(m.source),
                tgt: obj_name(m.target),
            })
            .collect(),
        identities: (0..n_objects).map(|i| (obj_name(i), mor_name(identity_of(i)))).collect(),
        compose,
    };
    FinCat::from_data(&data).expect("module morphisms form a category")
}

/// All subequalizing pairs `(U, ξ)` over the probe `X` and all squares
/// between them.
pub fn subeq_category(
    monad: &Monad,
    x: &Arc<FinCat>,
    budget: Budget,
) -> Result<SubeqCategory, SearchError> {
    let mut objects = Vec::new();
    for u in enumerate_functors(x, monad.cat(), budget)? {
        let tu = u.then(monad.t());
        for xi in enumerate_nats(&tu, &u, budget)? {
            if let Ok(s) = SubeqObject::new(monad, u.clone(), xi) {
                objects.push(s);
            }
        }
    }

    let mut morphisms = Vec::new();
    for (i, s) in objects.iter().enumerate() {
        for (j, s2) in objects.iter().enumerate() {
            for nu in enumerate_nats(&s.u, &s2.u, budget)? {
                // ξ'∘T(ν) = ν∘ξ
                let t_nu = NatTrans::whisker_left(monad.t(), &nu).expect("T applies to ν");
                let left = NatTrans::vertical(&s2.xi, &t_nu).expect("shapes line up");
                let right = NatTrans::vertical(&nu, &s.xi).expect("shapes line up");
                if left.components() == right.components() {
                    morphisms.push(ModuleMorphism { source: i, target: j, nu });
                }
            }
        }
    }

    let identity_of = |i: usize| {
        let id = NatTrans::identity(&objects[i].u);
        morphisms
            .iter()
            .position(|m| m.source == i && m.target == i && m.nu.components() == id.components())
            .expect("identity squares always qualify")
    };
    let cat = assemble("s", objects.len(), &morphisms, identity_of);
    Ok(SubeqCategory { cat, objects, morphisms })
}

/// All coequalizing pairs `(F, ζ)` under the probe `X` and all squares
/// between them.
pub fn coeq_category(
    monad: &Monad,
    x: &Arc<FinCat>,
    budget: Budget,
) -> Result<CoeqCategory, SearchError> {
    let mut objects = Vec::new();
    for f in enumerate_functors(monad.cat(), x, budget)? {
        let ft = monad.t().then(&f);
        for zeta in enumerate_nats(&ft, &f, budget)? {
            if let Ok(s) = CoeqObject::new(monad, f.clone(), zeta) {
                objects.push(s);
            }
        }
    }

    let mut morphisms = Vec::new();
    for (i, s) in objects.iter().enumerate() {
        for (j, s2) in objects.iter().enumerate() {
            for nu in enumerate_nats(&s.f, &s2.f, budget)? {
                // ζ'∘ν_T = ν∘ζ
                let nu_t = NatTrans::whisker_right(&nu, monad.t()).expect("ν shifts along T");
                let left = NatTrans::vertical(&s2.zeta, &nu_t).expect("shapes line up");
                let right = NatTrans::vertical(&nu, &s.zeta).expect("shapes line up");
                if left.components() == right.components() {
                    morphisms.push(ModuleMorphism { source: i, target: j, nu });
                }
            }
        }
    }

    let identity_of = |i: usize| {
        let id = NatTrans::identity(&objects[i].f);
        morphisms
            .iter()
            .position(|m| m.source == i && m.target == i && m.nu.components() == id.components())
            .expect("identity squares always qualify")
    };
    let cat = assemble("c", objects.len(), &morphisms, identity_of);
    Ok(CoeqCategory { cat, objects, morphisms })
}
