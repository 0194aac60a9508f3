//! Monads on finite categories and the dictionary sending total generator
//! words to natural transformations.
//!
//! The dictionary realizes a word over `δ`/`σ` between powers of the
//! endofunctor: a `δ` factor at level `n` with index `i` becomes
//! `Tⁿ⁻ⁱ(η)` at the `Tⁱ`-shifted component, a `σ` factor becomes the
//! matching shift of `μ`, and factors compose vertically. Words containing
//! `τ` are accepted exactly when they still evaluate to a total map; such a
//! word is routed through its canonical `δσ` factorization first.

use std::sync::Arc;

use thiserror::Error;

use super::category::{FinCat, ObjId};
use super::functor::{same_cat, FinFunctor};
use super::nat::NatTrans;
use crate::words::{canonical_form, GenKind, GenWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonadIssue {
    #[error("the underlying functor is not an endofunctor")]
    NotEndofunctor,
    #[error("unit must go from the identity functor to T")]
    BadUnitShape,
    #[error("multiplication must go from T² to T")]
    BadMultShape,
    #[error("left unit law fails at `{object}`: μ ∘ T(η) ≠ id")]
    LeftUnit { object: String },
    #[error("right unit law fails at `{object}`: μ ∘ η_T ≠ id")]
    RightUnit { object: String },
    #[error("associativity fails at `{object}`: μ ∘ T(μ) ≠ μ ∘ μ_T")]
    Associativity { object: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordImageError {
    #[error("word evaluates to a properly partial map and has no image")]
    NotDeltaWord,
    #[error("word domain does not matter here, but its levels must stay within the power cache")]
    LevelOverflow,
}

/// A monad `(C, T, η, μ)` with machine-checked unit and associativity laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monad {
    cat: Arc<FinCat>,
    t: FinFunctor,
    eta: NatTrans,
    mu: NatTrans,
}

impl Monad {
    pub fn new(t: FinFunctor, eta: NatTrans, mu: NatTrans) -> Result<Monad, Vec<MonadIssue>> {
        let mut issues = Vec::new();
        if !same_cat(t.source(), t.target()) {
            return Err(vec![MonadIssue::NotEndofunctor]);
        }
        let cat = Arc::clone(t.source());
        let id = FinFunctor::identity(&cat);
        if eta.source() != &id || eta.target() != &t {
            issues.push(MonadIssue::BadUnitShape);
        }
        let tt = t.then(&t);
        if mu.source() != &tt || mu.target() != &t {
            issues.push(MonadIssue::BadMultShape);
        }
        if !issues.is_empty() {
            return Err(issues);
        }
        for c in 0..cat.n_objects() {
            let tc = t.apply_obj(c);
            let id_tc = cat.identity_of(tc);
            // μ_c ∘ T(η_c) = 1
            let t_eta = t.apply_mor(eta.component(c));
            if cat.compose(mu.component(c), t_eta) != Some(id_tc) {
                issues.push(MonadIssue::LeftUnit { object: cat.object_name(c).to_string() });
            }
            // μ_c ∘ η_{T(c)} = 1
            if cat.compose(mu.component(c), eta.component(tc)) != Some(id_tc) {
                issues.push(MonadIssue::RightUnit { object: cat.object_name(c).to_string() });
            }
            // μ_c ∘ T(μ_c) = μ_c ∘ μ_{T(c)}
            let t_mu = t.apply_mor(mu.component(c));
            let left = cat.compose(mu.component(c), t_mu);
            let right = cat.compose(mu.component(c), mu.component(tc));
            if left != right || left.is_none() {
                issues.push(MonadIssue::Associativity { object: cat.object_name(c).to_string() });
            }
        }
        if issues.is_empty() {
            Ok(Monad { cat, t, eta, mu })
        } else {
            Err(issues)
        }
    }

    /// The identity monad on a category.
    pub fn identity_monad(cat: &Arc<FinCat>) -> Monad {
        let id = FinFunctor::identity(cat);
        let eta = NatTrans::identity(&id);
        let mu = NatTrans::identity(&id);
        Monad { cat: Arc::clone(cat), t: id, eta, mu }
    }

    pub fn cat(&self) -> &Arc<FinCat> {
        &self.cat
    }

    pub fn t(&self) -> &FinFunctor {
        &self.t
    }

    pub fn eta(&self) -> &NatTrans {
        &self.eta
    }

    pub fn mu(&self) -> &NatTrans {
        &self.mu
    }

    /// `Tⁿ`; the zeroth power is the identity functor.
    pub fn power(&self, n: usize) -> FinFunctor {
        let mut acc = FinFunctor::identity(&self.cat);
        for _ in 0..n {
            acc = acc.then(&self.t);
        }
        acc
    }

    /// Applies `T` to a morphism `k` times.
    fn iterate_mor(&self, m: super::category::MorId, k: usize) -> super::category::MorId {
        let mut m = m;
        for _ in 0..k {
            m = self.t.apply_mor(m);
        }
        m
    }

    /// Applies `T` to an object `k` times.
    fn iterate_obj(&self, o: ObjId, k: usize) -> ObjId {
        let mut o = o;
        for _ in 0..k {
            o = self.t.apply_obj(o);
        }
        o
    }

    /// The natural transformation `Tⁿ ⇒ Tⁿ⁺¹` coming from a `δ` factor at
    /// level `n` with index `i`: components `Tⁿ⁻ⁱ(η_{Tⁱc})`.
    fn delta_image(&self, n: usize, i: usize) -> NatTrans {
        let components = (0..self.cat.n_objects())
            .map(|c| self.iterate_mor(self.eta.component(self.iterate_obj(c, i)), n - i))
            .collect();
        NatTrans::new(self.power(n), self.power(n + 1), components)
            .expect("shifted unit is natural")
    }

    /// The natural transformation `Tⁿ⁺¹ ⇒ Tⁿ` coming from a `σ` factor at
    /// level `n` with index `i`: components `Tⁿ⁻ⁱ⁻¹(μ_{Tⁱc})`.
    fn sigma_image(&self, n: usize, i: usize) -> NatTrans {
        let components = (0..self.cat.n_objects())
            .map(|c| self.iterate_mor(self.mu.component(self.iterate_obj(c, i)), n - i - 1))
            .collect();
        NatTrans::new(self.power(n + 1), self.power(n), components)
            .expect("shifted multiplication is natural")
    }

    /// Realizes a total word as a natural transformation
    /// `T^dom ⇒ T^cod`, mapping each factor through the dictionary and
    /// composing vertically.
    ///
    /// Errors with [`WordImageError::NotDeltaWord`] when the word evaluates
    /// to a properly partial map. A word that contains `τ` factors but
    /// still evaluates to a total map is replaced by the canonical `δσ`
    /// word for the same map first.
    pub fn word_image(&self, word: &GenWord) -> Result<NatTrans, WordImageError> {
        if !word.is_delta_word() {
            let value = word.eval();
            if !value.is_total() {
                return Err(WordImageError::NotDeltaWord);
            }
            let canonical = canonical_form(&value).into_word();
            debug_assert!(canonical.is_delta_word());
            return self.word_image(&canonical);
        }
        let mut acc = NatTrans::identity(&self.power(word.domain()));
        let mut size = word.domain();
        for factor in word.factors().iter().rev() {
            let step = match factor.kind {
                // δ at intermediate size `size` has level `size`.
                GenKind::Delta => {
                    let nat = self.delta_image(size, factor.index);
                    size += 1;
                    nat
                }
                // σ at intermediate size `size` has level `size - 1`.
                GenKind::Sigma => {
                    let nat = self.sigma_image(size - 1, factor.index);
                    size -= 1;
                    nat
                }
                GenKind::Tau => unreachable!("τ-free by this point"),
            };
            acc = NatTrans::vertical(&step, &acc).expect("levels line up along the word");
        }
        Ok(acc)
    }
}
