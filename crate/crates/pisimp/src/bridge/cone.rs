//! Depth-truncated cones over the downward-closed partial-map category.
//!
//! A subequalizing pair `(U, ξ)` determines an assignment `λ` on all of
//! the one-sided category: levels go to powers `λ(m) = Tᵐ∘U`, total
//! generators to shifted units and multiplications, and the top partial
//! generator at level `n` to `Tⁿ(ξ)`. [`cone_check`] verifies that this
//! assignment really is functorial on every composable pair below the
//! truncation depth and compatible with the two block-sum whiskerings, and
//! cites the two key instances
//!
//! ```text
//! λ(τ⁰₀) ∘ λ(δ⁰₀) = 1          ⇔  ξ∘η_U = 1_U
//! λ(τ⁰₀) ∘ λ(τ¹₁) = λ(τ⁰₀) ∘ λ(σ¹₀)  ⇔  ξ∘T(ξ) = ξ∘μ_U
//! ```
//!
//! separately, so a failing pair points at the violated equation.

use serde::Serialize;
use std::collections::BTreeMap;

use crate::fincat::functor::FinFunctor;
use crate::fincat::monad::Monad;
use crate::fincat::nat::NatTrans;
use crate::ordinals::{enumerate_hom, HomFlavor, PMap};
use crate::words::{canonical_form, GenWord, Generator};

use super::module_cat::SubeqObject;

/// Materialized cone data: the level functors and the images of every
/// generator up to the truncation depth.
#[derive(Debug, Clone)]
pub struct TruncatedCone {
    pub depth: usize,
    /// `levels[m] = Tᵐ ∘ U` for `m ≤ depth`.
    pub levels: Vec<FinFunctor>,
    /// Image of the injection generator at `(level, index)`.
    pub delta_gens: BTreeMap<(usize, usize), NatTrans>,
    /// Image of the collapse generator at `(level, index)`.
    pub sigma_gens: BTreeMap<(usize, usize), NatTrans>,
    /// `tau_tops[n]` is the image `Tⁿ(ξ)` of the top partial generator at
    /// level `n`.
    pub tau_tops: Vec<NatTrans>,
}

/// Builds the cone data from any candidate pair, validated or not.
/// [`cone_check`] decides whether it is actually a cone.
pub fn cone_from_pair(monad: &Monad, u: &FinFunctor, xi: &NatTrans, depth: usize) -> TruncatedCone {
    let levels: Vec<FinFunctor> = (0..=depth).map(|m| u.then(&monad.power(m))).collect();
    let mut delta_gens = BTreeMap::new();
    let mut sigma_gens = BTreeMap::new();
    for n in 0..depth {
        // δⁿᵢ : n → n+1 for 0 ≤ i ≤ n, landing at level n+1 ≤ depth.
        for i in 0..=n {
            let word = GenWord::new(n, vec![Generator::delta(i)]).expect("generator word types");
            let image = monad.word_image(&word).expect("total word");
            delta_gens.insert((n, i), NatTrans::whisker_right(&image, u).expect("whiskers along U"));
        }
        // σⁿᵢ : n+1 → n for 0 ≤ i < n.
        for i in 0..n {
            let word = GenWord::new(n + 1, vec![Generator::sigma(i)]).expect("generator word types");
            let image = monad.word_image(&word).expect("total word");
            sigma_gens.insert((n, i), NatTrans::whisker_right(&image, u).expect("whiskers along U"));
        }
    }
    let tau_tops: Vec<NatTrans> = (0..depth)
        .map(|n| NatTrans::whisker_left(&monad.power(n), xi).expect("Tⁿ applies to ξ"))
        .collect();
    TruncatedCone { depth, levels, delta_gens, sigma_gens, tau_tops }
}

/// [`cone_from_pair`] for a validated subequalizing pair.
pub fn cone_from_subeq(monad: &Monad, s: &SubeqObject, depth: usize) -> TruncatedCone {
    cone_from_pair(monad, &s.u, &s.xi, depth)
}

impl TruncatedCone {
    /// Evaluates the cone on a downward-closed map with endpoints at most
    /// `depth`, by composing the stored generator images along the map's
    /// canonical factorization. Returns `None` when the map leaves the
    /// truncation or is not downward-closed.
    pub fn apply(&self, map: &PMap) -> Option<NatTrans> {
        if map.dom() > self.depth || map.cod() > self.depth || !map.in_flavor(HomFlavor::PiL) {
            return None;
        }
        let canonical = canonical_form(map);
        let mut acc = NatTrans::identity(&self.levels[map.dom()]);
        let mut size = map.dom();
        for factor in canonical.word().factors().iter().rev() {
            let step = match factor {
                Generator { kind: crate::words::GenKind::Delta, index } => {
                    let nat = self.delta_gens.get(&(size, *index))?.clone();
                    size += 1;
                    nat
                }
                Generator { kind: crate::words::GenKind::Sigma, index } => {
                    let nat = self.sigma_gens.get(&(size - 1, *index))?.clone();
                    size -= 1;
                    nat
                }
                Generator { kind: crate::words::GenKind::Tau, index } => {
                    debug_assert_eq!(*index, size - 1, "downward-closed maps have top τ factors");
                    let nat = self.tau_tops.get(size - 1)?.clone();
                    size -= 1;
                    nat
                }
            };
            acc = NatTrans::vertical(&step, &acc).expect("levels line up along the word");
        }
        Some(acc)
    }
}

/// One failed cone equation, citing the instance.
#[derive(Debug, Clone, Serialize)]
pub struct ConeFailure {
    pub instance: String,
    pub detail: String,
}

/// Outcome of checking a truncated cone.
#[derive(Debug, Clone, Serialize)]
pub struct ConeCheckReport {
    pub depth: usize,
    /// `λ(τ⁰₀)∘λ(δ⁰₀) = 1`, the unit equation of the pair.
    pub key_unit: bool,
    /// `λ(τ⁰₀)∘λ(τ¹₁) = λ(τ⁰₀)∘λ(σ¹₀)`, the multiplication equation.
    pub key_mult: bool,
    pub functoriality_instances: usize,
    pub whisker_instances: usize,
    pub failures: Vec<ConeFailure>,
    pub holds: bool,
}

/// Checks every equation the truncation can see: the two key instances,
/// functoriality on all composable pairs of downward-closed maps, and the
/// compatibility of block sums with whiskering on both sides.
pub fn cone_check(monad: &Monad, cone: &TruncatedCone) -> ConeCheckReport {
    let depth = cone.depth;
    let mut failures = Vec::new();

    // Key instance 1: t0.d0 @0 evaluates to the identity, so its image
    // must be the identity transformation; factorwise it is ξ∘η_U.
    let key_unit = if depth >= 1 {
        let eta_u = &cone.delta_gens[&(0, 0)];
        let xi = &cone.tau_tops[0];
        let composite = NatTrans::vertical(xi, eta_u).expect("shapes line up");
        let ok = composite.is_identity_nat();
        if !ok {
            failures.push(ConeFailure {
                instance: "t0.d0 @0".into(),
                detail: "λ(τ⁰₀)∘λ(δ⁰₀) ≠ 1, i.e. ξ∘η_U ≠ 1_U".into(),
            });
        }
        ok
    } else {
        true
    };

    // Key instance 2: t0.t1 @2 = t0.s0 @2; factorwise ξ∘T(ξ) = ξ∘μ_U.
    let key_mult = if depth >= 2 {
        let xi = &cone.tau_tops[0];
        let t_xi = &cone.tau_tops[1];
        let mu_u = &cone.sigma_gens[&(1, 0)];
        let left = NatTrans::vertical(xi, t_xi).expect("shapes line up");
        let right = NatTrans::vertical(xi, mu_u).expect("shapes line up");
        let ok = left.components() == right.components();
        if !ok {
            failures.push(ConeFailure {
                instance: "t0.t1 @2 = t0.s0 @2".into(),
                detail: "λ(τ⁰₀)∘λ(τ¹₁) ≠ λ(τ⁰₀)∘λ(σ¹₀), i.e. ξ∘T(ξ) ≠ ξ∘μ_U".into(),
            });
        }
        ok
    } else {
        true
    };

    // Functoriality on every composable pair in the truncation. This
    // subsumes every generator identity instance that fits below `depth`.
    // Precompute λ on every hom-set once; hom-sets are enumerated in
    // sorted order, so composites are found by binary search.
    let homs: Vec<Vec<Vec<PMap>>> = (0..=depth)
        .map(|p| (0..=depth).map(|q| enumerate_hom(p, q, HomFlavor::PiL)).collect())
        .collect();
    let lambda: Vec<Vec<Vec<NatTrans>>> = homs
        .iter()
        .map(|row| {
            row.iter()
                .map(|homset| {
                    homset
                        .iter()
                        .map(|map| cone.apply(map).expect("stays in truncation"))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut functoriality_instances = 0;
    for p in 0..=depth {
        for q in 0..=depth {
            for r in 0..=depth {
                for (gi, g) in homs[p][q].iter().enumerate() {
                    for (hi, h) in homs[q][r].iter().enumerate() {
                        let hg = h.compose(g).expect("shapes line up");
                        let hgi = homs[p][r].binary_search(&hg).expect("closed under composition");
                        functoriality_instances += 1;
                        let rhs = NatTrans::vertical(&lambda[q][r][hi], &lambda[p][q][gi])
                            .expect("shapes line up");
                        if lambda[p][r][hgi].components() != rhs.components() {
                            failures.push(ConeFailure {
                                instance: format!("λ({h} ∘ {g})"),
                                detail: format!(
                                    "≠ λ({h})∘λ({g}); canonical forms {} and {}",
                                    canonical_form(&hg),
                                    canonical_form(&g)
                                ),
                            });
                        }
                    }
                }
            }
        }
    }

    // Block-sum compatibility. Left: λ(idₙ + g) = Tⁿ(λ(g)). Right:
    // λ(f + id_p) = image of f whiskered along the level-p functor.
    let mut whisker_instances = 0;
    for n in 0..=depth {
        for p in 0..=depth {
            for q in 0..=depth {
                if n + p.max(q) > depth {
                    continue;
                }
                let idn = PMap::identity(n);
                for g in enumerate_hom(p, q, HomFlavor::PiL) {
                    whisker_instances += 1;
                    let summed = idn.ordinal_sum(&g);
                    let lhs = cone.apply(&summed).expect("stays in truncation");
                    let inner = cone.apply(&g).expect("stays in truncation");
                    let rhs = NatTrans::whisker_left(&monad.power(n), &inner)
                        .expect("power applies to the image");
                    if lhs.components() != rhs.components() {
                        failures.push(ConeFailure {
                            instance: format!("λ(id_{n} + {g})"),
                            detail: "block sum with an identity does not whisker to a power".into(),
                        });
                    }
                }
                for f in enumerate_hom(p, q, HomFlavor::Delta) {
                    whisker_instances += 1;
                    let summed = f.ordinal_sum(&PMap::identity(n));
                    let lhs = cone.apply(&summed).expect("stays in truncation");
                    let image = monad
                        .word_image(canonical_form(&f).word())
                        .expect("total maps have images");
                    let rhs = NatTrans::whisker_right(&image, &cone.levels[n])
                        .expect("image whiskers along the level functor");
                    if lhs.components() != rhs.components() {
                        failures.push(ConeFailure {
                            instance: format!("λ({f} + id_{n})"),
                            detail: "total block does not whisker along the level functor".into(),
                        });
                    }
                }
            }
        }
    }

    let holds = failures.is_empty();
    ConeCheckReport {
        depth,
        key_unit,
        key_mult,
        functoriality_instances,
        whisker_instances,
        failures,
        holds,
    }
}
